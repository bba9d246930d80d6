//! Batch front end: load JSON documents, run a verification or
//! construction, and emit a machine-readable report on stdout.
//!
//! Exit codes: 0 when every check passed, 1 when a check failed (the report
//! carries the witness), 2 for malformed input or an exceeded enumeration
//! budget. Reports are byte-stable across runs for identical inputs; pass
//! `--timing` to include wall-clock milliseconds (which breaks
//! byte-stability, so it is off by default).

use clap::{Parser, Subcommand};
use crossmod_core::doc::{
    ButterflyBundleDoc, CocycleDoc, ComposeDoc, DocError, GradedObjectDoc, GroupDoc, HomDoc,
    InstanceDoc, MorphismDoc, PntPairDoc,
};
use crossmod_core::graded::{AbelianThreeCocycle, ConditionResult, GradedObject};
use crossmod_core::twocat::check_all;
use crossmod_core::xmod::PointedNaturalTransformation;
use crossmod_core::{Butterfly, DEFAULT_BUDGET};
use serde::Serialize;
use serde_json::{json, Value};
use std::path::{Path, PathBuf};
use std::time::Instant;

#[derive(Parser)]
#[command(
    name = "crossmod",
    about = "Exact verification of crossed modules, butterflies, 2-category laws, and braided graded categories",
    version
)]
struct Cli {
    /// Pretty-print the JSON report.
    #[arg(long, global = true)]
    pretty: bool,

    /// Cap on candidate maps visited by any enumeration.
    #[arg(long, global = true, default_value_t = DEFAULT_BUDGET)]
    budget: u64,

    /// Include wall-clock milliseconds in the report.
    #[arg(long, global = true)]
    timing: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Validate a group table document.
    VerifyGroup { file: PathBuf },
    /// Verify the crossed module axioms.
    VerifyXmod { file: PathBuf },
    /// Compute the kernel and cokernel invariants of a crossed module.
    Pi { file: PathBuf },
    /// Verify a strict morphism bundle and report whether it is an
    /// equivalence.
    VerifyMorphism { file: PathBuf },
    /// Verify a pointed natural transformation bundle.
    VerifyPnt { file: PathBuf },
    /// Compose two pointed natural transformations (vertical documents
    /// carry src/dst, horizontal documents carry c1/c2/c3).
    ComposePnt { file: PathBuf },
    /// Enumerate all transformations between two parallel morphisms.
    EnumeratePnts { file: PathBuf },
    /// Verify the butterfly axioms and report reversibility.
    VerifyButterfly { file: PathBuf },
    /// Turn a strict morphism into its split butterfly.
    Split { file: PathBuf },
    /// Recover the strict morphism of a splittable butterfly.
    Unsplit { file: PathBuf },
    /// Invert a reversible butterfly.
    InvertButterfly { file: PathBuf },
    /// Check the abelian 3-cocycle conditions.
    VerifyCocycle { file: PathBuf },
    /// Check the pentagon for a cocycle document.
    Pentagon {
        file: PathBuf,
        /// Check every quadruple of simple objects (the default).
        #[arg(long)]
        all_simples: bool,
        /// Check one quadruple of graded object documents instead.
        #[arg(long, num_args = 4, value_names = ["X", "Y", "Z", "W"])]
        objects: Option<Vec<PathBuf>>,
    },
    /// Check both hexagons for a cocycle document.
    Hexagon {
        file: PathBuf,
        /// Check every triple of simple objects (the default).
        #[arg(long)]
        all_simples: bool,
        /// Check one triple of graded object documents instead.
        #[arg(long, num_args = 3, value_names = ["X", "Y", "Z"])]
        objects: Option<Vec<PathBuf>>,
    },
    /// Decide whether cocycle data is symmetric.
    Symmetric { file: PathBuf },
    /// Run the 2-category law harness on an instance document.
    #[command(name = "check-2cat")]
    Check2Cat { file: PathBuf },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
enum Status {
    Pass,
    Fail,
    Error,
}

impl Status {
    fn exit_code(self) -> i32 {
        match self {
            Status::Pass => 0,
            Status::Fail => 1,
            Status::Error => 2,
        }
    }
}

#[derive(Serialize)]
struct Report {
    command: String,
    status: Status,
    details: Value,
    #[serde(skip_serializing_if = "Option::is_none")]
    timing_ms: Option<u128>,
}

fn main() {
    let cli = Cli::parse();
    let started = Instant::now();
    let (command, outcome) = dispatch(&cli);
    let (status, details) = outcome.unwrap_or_else(failure_report);
    let report = Report {
        command: command.to_string(),
        status,
        details,
        timing_ms: cli.timing.then(|| started.elapsed().as_millis()),
    };
    let rendered = if cli.pretty {
        serde_json::to_string_pretty(&report).expect("reports serialize")
    } else {
        serde_json::to_string(&report).expect("reports serialize")
    };
    println!("{rendered}");
    std::process::exit(status.exit_code());
}

type Outcome = Result<(Status, Value), DocError>;

fn dispatch(cli: &Cli) -> (&'static str, Outcome) {
    match &cli.command {
        Command::VerifyGroup { file } => ("verify-group", verify_group(file)),
        Command::VerifyXmod { file } => ("verify-xmod", verify_xmod(file)),
        Command::Pi { file } => ("pi", pi(file)),
        Command::VerifyMorphism { file } => ("verify-morphism", verify_morphism(file)),
        Command::VerifyPnt { file } => ("verify-pnt", verify_pnt(file)),
        Command::ComposePnt { file } => ("compose-pnt", compose_pnt(file)),
        Command::EnumeratePnts { file } => ("enumerate-pnts", enumerate_pnts(file, cli.budget)),
        Command::VerifyButterfly { file } => ("verify-butterfly", verify_butterfly(file)),
        Command::Split { file } => ("split", split(file)),
        Command::Unsplit { file } => ("unsplit", unsplit(file, cli.budget)),
        Command::InvertButterfly { file } => ("invert-butterfly", invert_butterfly(file)),
        Command::VerifyCocycle { file } => ("verify-cocycle", verify_cocycle(file)),
        Command::Pentagon { file, objects, .. } => ("pentagon", pentagon(file, objects.as_deref())),
        Command::Hexagon { file, objects, .. } => ("hexagon", hexagon(file, objects.as_deref())),
        Command::Symmetric { file } => ("symmetric", symmetric(file)),
        Command::Check2Cat { file } => ("check-2cat", check_2cat(file, cli.budget)),
    }
}

/// Maps an error to a report: schema-level problems (bad JSON, bad shapes,
/// exceeded budgets) are `error`, verification failures are `fail` with
/// the structured witness.
fn failure_report(err: DocError) -> (Status, Value) {
    let status = if err.is_schema_level() {
        Status::Error
    } else {
        Status::Fail
    };
    let witness = match &err {
        DocError::Parse(_) | DocError::Schema(_) => Value::Null,
        DocError::Group(e) => serde_json::to_value(e).expect("errors serialize"),
        DocError::XMod(e) => serde_json::to_value(e).expect("errors serialize"),
        DocError::Butterfly(e) => serde_json::to_value(e).expect("errors serialize"),
        DocError::Graded(e) => serde_json::to_value(e).expect("errors serialize"),
    };
    (
        status,
        json!({ "error": err.to_string(), "witness": witness }),
    )
}

fn read(path: &Path) -> Result<String, DocError> {
    std::fs::read_to_string(path)
        .map_err(|e| DocError::Schema(format!("cannot read {}: {e}", path.display())))
}

fn parse<T: serde::de::DeserializeOwned>(path: &Path) -> Result<T, DocError> {
    Ok(serde_json::from_str(&read(path)?)?)
}

fn verify_group(file: &Path) -> Outcome {
    let doc: GroupDoc = parse(file)?;
    let group = doc.build()?;
    Ok((Status::Pass, json!({ "order": group.order() })))
}

fn verify_xmod(file: &Path) -> Outcome {
    let doc: crossmod_core::doc::XModDoc = parse(file)?;
    let xmod = doc.build()?;
    Ok((
        Status::Pass,
        json!({
            "n_order": xmod.n().order(),
            "m_order": xmod.m().order(),
        }),
    ))
}

fn pi(file: &Path) -> Outcome {
    let doc: crossmod_core::doc::XModDoc = parse(file)?;
    let xmod = doc.build()?;
    Ok((
        Status::Pass,
        json!({
            "pi1": GroupDoc::of(&xmod.pi1()),
            "pi2": GroupDoc::of(&xmod.pi2()),
        }),
    ))
}

fn verify_morphism(file: &Path) -> Outcome {
    let doc: crossmod_core::doc::MorphismBundleDoc = parse(file)?;
    let morphism = doc.build()?;
    let equivalence = morphism.is_equivalence()?;
    Ok((
        Status::Pass,
        json!({
            "equivalence": {
                "is_equivalence": equivalence.is_equivalence,
                "pi1_bijective": equivalence.pi1_bijective,
                "pi2_bijective": equivalence.pi2_bijective,
            }
        }),
    ))
}

fn verify_pnt(file: &Path) -> Outcome {
    let doc: crossmod_core::doc::PntBundleDoc = parse(file)?;
    let pnt = doc.build()?;
    Ok((
        Status::Pass,
        json!({ "gamma": pnt.gamma(), "trivial": pnt.is_trivial() }),
    ))
}

fn compose_pnt(file: &Path) -> Outcome {
    let doc: ComposeDoc = parse(file)?;
    let (mode, composite) = match &doc {
        ComposeDoc::Vertical(v) => {
            let src = v.src.build()?;
            let dst = v.dst.build()?;
            let p1 = v.p1.build(&src, &dst)?;
            let p2 = v.p2.build(&src, &dst)?;
            ("vertical", PointedNaturalTransformation::vertical(&p1, &p2)?)
        }
        ComposeDoc::Horizontal(h) => {
            let c1 = h.c1.build()?;
            let c2 = h.c2.build()?;
            let c3 = h.c3.build()?;
            let p1 = h.p1.build(&c1, &c2)?;
            let p2 = h.p2.build(&c2, &c3)?;
            (
                "horizontal",
                PointedNaturalTransformation::horizontal(&p1, &p2)?,
            )
        }
    };
    Ok((
        Status::Pass,
        json!({
            "mode": mode,
            "from": MorphismDoc::of(composite.from_morphism()),
            "to": MorphismDoc::of(composite.to_morphism()),
            "gamma": composite.gamma(),
        }),
    ))
}

fn enumerate_pnts(file: &Path, budget: u64) -> Outcome {
    let doc: PntPairDoc = parse(file)?;
    let src = doc.src.build()?;
    let dst = doc.dst.build()?;
    let from = doc.from.build(&src, &dst)?;
    let to = doc.to.build(&src, &dst)?;
    let pnts = PointedNaturalTransformation::enumerate(&from, &to, budget)?;
    let gammas: Vec<&[usize]> = pnts.iter().map(|p| p.gamma()).collect();
    Ok((
        Status::Pass,
        json!({ "count": gammas.len(), "gammas": gammas }),
    ))
}

fn verify_butterfly(file: &Path) -> Outcome {
    let doc: ButterflyBundleDoc = parse(file)?;
    let butterfly = doc.build()?;
    let reversibility = butterfly.is_reversible();
    Ok((
        Status::Pass,
        json!({
            "e_order": butterfly.e().order(),
            "reversible": reversibility.exact,
            "reversibility_witness": reversibility.failure,
        }),
    ))
}

fn split(file: &Path) -> Outcome {
    let doc: crossmod_core::doc::MorphismBundleDoc = parse(file)?;
    let morphism = doc.build()?;
    let butterfly = Butterfly::from_strict(&morphism)?;
    Ok((
        Status::Pass,
        json!({ "butterfly": ButterflyBundleDoc::of(&butterfly) }),
    ))
}

fn unsplit(file: &Path, budget: u64) -> Outcome {
    let doc: ButterflyBundleDoc = parse(file)?;
    let butterfly = doc.build()?;
    let section = match &doc.section {
        Some(hom_doc) => Some(hom_doc.build(butterfly.src().m(), butterfly.e())?),
        None => butterfly.find_sections(budget)?.into_iter().next(),
    };
    let Some(section) = section else {
        return Ok((
            Status::Fail,
            json!({ "error": "butterfly admits no splitting homomorphism" }),
        ));
    };
    let morphism = butterfly.to_strict(&section)?;
    Ok((
        Status::Pass,
        json!({
            "f1": HomDoc::of(morphism.f1()),
            "f2": HomDoc::of(morphism.f2()),
            "section": HomDoc::of(&section),
        }),
    ))
}

fn invert_butterfly(file: &Path) -> Outcome {
    let doc: ButterflyBundleDoc = parse(file)?;
    let butterfly = doc.build()?;
    let inverse = butterfly.invert()?;
    Ok((
        Status::Pass,
        json!({ "butterfly": ButterflyBundleDoc::of(&inverse) }),
    ))
}

fn verify_cocycle(file: &Path) -> Outcome {
    let doc: CocycleDoc = parse(file)?;
    let grading = doc.grading()?;
    let report = crossmod_core::graded::verify_tables(&grading, doc.phase_modulus, &doc.f, &doc.h)?;
    let status = if report.all_pass() {
        Status::Pass
    } else {
        Status::Fail
    };
    Ok((status, serde_json::to_value(&report).expect("reports serialize")))
}

fn load_cocycle(file: &Path) -> Result<AbelianThreeCocycle, DocError> {
    let doc: CocycleDoc = parse(file)?;
    doc.build()
}

fn load_objects(
    cocycle: &AbelianThreeCocycle,
    files: &[PathBuf],
) -> Result<Vec<GradedObject>, DocError> {
    files
        .iter()
        .map(|f| {
            let doc: GradedObjectDoc = parse(f)?;
            doc.build(cocycle.grading())
        })
        .collect()
}

fn condition_value(result: &ConditionResult) -> Value {
    serde_json::to_value(result).expect("conditions serialize")
}

fn pentagon(file: &Path, objects: Option<&[PathBuf]>) -> Outcome {
    let cocycle = load_cocycle(file)?;
    let outcome = match objects {
        Some(files) => {
            let objs = load_objects(&cocycle, files)?;
            let result = cocycle.pentagon_check(&objs[0], &objs[1], &objs[2], &objs[3])?;
            json!({ "mode": "objects", "checked": 1, "result": condition_value(&result) })
        }
        None => {
            let grading = cocycle.grading().clone();
            let mut result = ConditionResult { ok: true, witness: None };
            let mut checked = 0usize;
            'search: for a in grading.elements() {
                for b in grading.elements() {
                    for c in grading.elements() {
                        for d in grading.elements() {
                            checked += 1;
                            let simple = |g| GradedObject::simple(grading.clone(), g).unwrap();
                            let out = cocycle.pentagon_check(
                                &simple(a),
                                &simple(b),
                                &simple(c),
                                &simple(d),
                            )?;
                            if !out.ok {
                                result = out;
                                break 'search;
                            }
                        }
                    }
                }
            }
            json!({ "mode": "all-simples", "checked": checked, "result": condition_value(&result) })
        }
    };
    let ok = outcome["result"]["ok"].as_bool().unwrap_or(false);
    Ok((if ok { Status::Pass } else { Status::Fail }, outcome))
}

fn hexagon(file: &Path, objects: Option<&[PathBuf]>) -> Outcome {
    let cocycle = load_cocycle(file)?;
    let (first, second, checked, mode) = match objects {
        Some(files) => {
            let objs = load_objects(&cocycle, files)?;
            let (h1, h2) = cocycle.hexagon_check(&objs[0], &objs[1], &objs[2])?;
            (h1, h2, 1usize, "objects")
        }
        None => {
            let grading = cocycle.grading().clone();
            let mut first = ConditionResult { ok: true, witness: None };
            let mut second = ConditionResult { ok: true, witness: None };
            let mut checked = 0usize;
            for a in grading.elements() {
                for b in grading.elements() {
                    for c in grading.elements() {
                        checked += 1;
                        let simple = |g| GradedObject::simple(grading.clone(), g).unwrap();
                        let (h1, h2) =
                            cocycle.hexagon_check(&simple(a), &simple(b), &simple(c))?;
                        if first.ok && !h1.ok {
                            first = h1;
                        }
                        if second.ok && !h2.ok {
                            second = h2;
                        }
                    }
                }
            }
            (first, second, checked, "all-simples")
        }
    };
    let ok = first.ok && second.ok;
    Ok((
        if ok { Status::Pass } else { Status::Fail },
        json!({
            "mode": mode,
            "checked": checked,
            "first": condition_value(&first),
            "second": condition_value(&second),
        }),
    ))
}

fn symmetric(file: &Path) -> Outcome {
    let cocycle = load_cocycle(file)?;
    let symmetric = cocycle.is_symmetric();
    let witness = cocycle.symmetry_failure().map(|(x, y)| {
        json!({
            "x": cocycle.grading().element(x),
            "y": cocycle.grading().element(y),
            "double_braiding_phase": (cocycle.h(x, y) + cocycle.h(y, x)) % cocycle.modulus(),
        })
    });
    Ok((
        if symmetric { Status::Pass } else { Status::Fail },
        json!({
            "symmetric": symmetric,
            "witness": witness,
            "quadratic_form": cocycle.quadratic_form(),
        }),
    ))
}

fn check_2cat(file: &Path, budget: u64) -> Outcome {
    let doc: InstanceDoc = parse(file)?;
    let instance = doc.build(budget)?;
    let report = check_all(&instance);
    let status = if report.all_pass() {
        Status::Pass
    } else {
        Status::Fail
    };
    Ok((status, serde_json::to_value(&report).expect("reports serialize")))
}
