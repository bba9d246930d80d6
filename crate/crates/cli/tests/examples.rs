//! The shipped example documents under `examples/` are generated from the
//! catalog. `examples_up_to_date` pins their exact content; run
//! `cargo test -p crossmod-cli -- --ignored regenerate_examples` after
//! changing the catalog or the document schemas.

use crossmod_core::butterfly::Butterfly;
use crossmod_core::catalog;
use crossmod_core::doc::{
    ButterflyBundleDoc, CocycleDoc, ComposeHorizontalDoc, ComposeVerticalDoc, GradedObjectDoc,
    GroupDoc, HomDoc, InstanceDoc, InstanceMorphismDoc, MorphismBundleDoc, MorphismDoc,
    PntBundleDoc, PntLegDoc, PntPairDoc, XModDoc,
};
use crossmod_core::graded::{AbelianThreeCocycle, GradedObject, GradingGroup};
use crossmod_core::xmod::StrictMorphism;
use serde::Serialize;
use std::path::PathBuf;

fn examples_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("examples")
}

fn pretty<T: Serialize>(doc: &T) -> String {
    let mut out = serde_json::to_string_pretty(doc).expect("documents serialize");
    out.push('\n');
    out
}

fn z2_identity_morphism_doc() -> MorphismDoc {
    MorphismDoc::of(&StrictMorphism::identity(&catalog::z2_boundary()))
}

fn generated_examples() -> Vec<(&'static str, String)> {
    let mut files = Vec::new();

    files.push(("s3_group.json", pretty(&GroupDoc::of(&catalog::sym3()))));

    // A single swapped pair in a valid table; rejected with a witness.
    let mut bad_table = catalog::sym3().table_rows();
    bad_table[1].swap(2, 3);
    files.push((
        "bad_group.json",
        pretty(&GroupDoc {
            order: 6,
            table: bad_table,
        }),
    ));

    for (name, xmod) in catalog::xmod_catalog() {
        let filename = match name {
            "trivial" => "trivial_xmod.json",
            "z2_boundary" => "z2_boundary_xmod.json",
            "inclusion_a3_s3" => "inclusion_a3_s3_xmod.json",
            "z4_identity" => "z4_identity_xmod.json",
            "s3_identity" => "s3_identity_xmod.json",
            other => panic!("unnamed catalog instance {other}"),
        };
        files.push((filename, pretty(&XModDoc::of(&xmod))));
    }

    // The Peiffer fault instance, assembled directly since it does not
    // construct.
    let s3 = GroupDoc::of(&catalog::sym3());
    files.push((
        "s3_id_trivial_action_xmod.json",
        pretty(&XModDoc {
            n: s3.clone(),
            m: s3.clone(),
            h: HomDoc {
                map: (0..6).collect(),
            },
            action: crossmod_core::doc::ActionDoc {
                maps: vec![(0..6).collect(); 6],
            },
        }),
    ));

    files.push((
        "inclusion_morphism.json",
        pretty(&MorphismBundleDoc::of(&catalog::inclusion_to_s3_identity())),
    ));
    files.push((
        "collapse_morphism.json",
        pretty(&MorphismBundleDoc::of(&catalog::collapse_to_z2())),
    ));

    let z2 = XModDoc::of(&catalog::z2_boundary());
    files.push((
        "z2_self_pnt.json",
        pretty(&PntBundleDoc {
            src: z2.clone(),
            dst: z2.clone(),
            from: z2_identity_morphism_doc(),
            to: z2_identity_morphism_doc(),
            gamma: vec![0, 1],
        }),
    ));

    let leg = PntLegDoc {
        from: z2_identity_morphism_doc(),
        to: z2_identity_morphism_doc(),
        gamma: vec![0, 1],
    };
    files.push((
        "compose_vertical.json",
        pretty(&ComposeVerticalDoc {
            src: z2.clone(),
            dst: z2.clone(),
            p1: leg.clone(),
            p2: leg.clone(),
        }),
    ));
    files.push((
        "compose_horizontal.json",
        pretty(&ComposeHorizontalDoc {
            c1: z2.clone(),
            c2: z2.clone(),
            c3: z2.clone(),
            p1: leg.clone(),
            p2: leg,
        }),
    ));
    files.push((
        "enumerate_z2_pnts.json",
        pretty(&PntPairDoc {
            src: z2.clone(),
            dst: z2.clone(),
            from: z2_identity_morphism_doc(),
            to: z2_identity_morphism_doc(),
        }),
    ));

    let identity_butterfly =
        Butterfly::from_strict(&StrictMorphism::identity(&catalog::inclusion_a3_s3()))
            .expect("split butterflies verify");
    files.push((
        "a3_s3_identity_butterfly.json",
        pretty(&ButterflyBundleDoc::of(&identity_butterfly)),
    ));
    files.push((
        "nonsplit_z4_butterfly.json",
        pretty(&ButterflyBundleDoc::of(&catalog::nonsplit_butterfly())),
    ));

    files.push((
        "super_cocycle.json",
        pretty(&CocycleDoc::of(&catalog::super_cocycle())),
    ));
    files.push((
        "semion_cocycle.json",
        pretty(&CocycleDoc::of(&catalog::semion_cocycle())),
    ));
    files.push((
        "trivial_cocycle_z3.json",
        pretty(&CocycleDoc::of(&AbelianThreeCocycle::trivial(
            GradingGroup::new(vec![3]).unwrap(),
            3,
        ))),
    ));
    // Semion with h(1,1) = -1: the first hexagon fails at (1,1,1).
    files.push((
        "bad_cocycle_h2.json",
        pretty(&CocycleDoc {
            factors: vec![2],
            phase_modulus: 4,
            f: vec![0, 0, 0, 0, 0, 0, 0, 2],
            h: vec![0, 0, 0, 2],
        }),
    ));

    let grading = GradingGroup::new(vec![2]).unwrap();
    files.push((
        "z2_object.json",
        pretty(&GradedObjectDoc::of(
            &GradedObject::new(grading, vec![2, 1]).unwrap(),
        )),
    ));

    files.push((
        "check2cat_z2.json",
        pretty(&InstanceDoc {
            objects: vec![z2.clone()],
            morphisms: vec![InstanceMorphismDoc {
                src: 0,
                dst: 0,
                f1: HomDoc { map: vec![0, 1] },
                f2: HomDoc { map: vec![0, 0] },
            }],
        }),
    ));

    files.push(("malformed.json", "this is not json\n".to_string()));
    // Declared order disagrees with the table height: a schema error.
    files.push((
        "bad_schema_group.json",
        "{\n  \"order\": 2,\n  \"table\": [[0, 1]]\n}\n".to_string(),
    ));

    files
}

#[test]
fn examples_up_to_date() {
    let dir = examples_dir();
    for (name, expected) in generated_examples() {
        let path = dir.join(name);
        let actual = std::fs::read_to_string(&path)
            .unwrap_or_else(|e| panic!("missing example {}: {e}", path.display()));
        assert_eq!(
            actual, expected,
            "{name} is stale; run cargo test -p crossmod-cli -- --ignored regenerate_examples"
        );
    }
}

#[test]
#[ignore]
fn regenerate_examples() {
    let dir = examples_dir();
    std::fs::create_dir_all(&dir).unwrap();
    for (name, contents) in generated_examples() {
        std::fs::write(dir.join(name), contents).unwrap();
    }
}
