//! Deterministic mutation testing of the document parsers: truncations,
//! byte flips, and digit inflation of valid documents must produce a
//! `Result`, never a panic. The fuzz targets under `fuzz/` run the same
//! entry points coverage-guided; this keeps a fast check in `cargo test`.

use crossmod_core::butterfly::Butterfly;
use crossmod_core::catalog;
use crossmod_core::doc::{self, ButterflyBundleDoc, CocycleDoc, GroupDoc, MorphismBundleDoc, XModDoc};
use crossmod_core::xmod::StrictMorphism;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Parser = fn(&str);

fn samples() -> Vec<(String, Parser)> {
    let group = serde_json::to_string(&GroupDoc::of(&catalog::sym3())).unwrap();
    let xmod = serde_json::to_string(&XModDoc::of(&catalog::inclusion_a3_s3())).unwrap();
    let morphism =
        serde_json::to_string(&MorphismBundleDoc::of(&catalog::inclusion_to_s3_identity()))
            .unwrap();
    let butterfly = serde_json::to_string(&ButterflyBundleDoc::of(
        &Butterfly::from_strict(&StrictMorphism::identity(&catalog::z2_boundary())).unwrap(),
    ))
    .unwrap();
    let cocycle = serde_json::to_string(&CocycleDoc::of(&catalog::semion_cocycle())).unwrap();
    let object = "{\"dims\":{\"0\":2,\"1\":1}}".to_string();

    vec![
        (group, (|s| {
            let _ = doc::group_from_json(s);
        }) as Parser),
        (xmod, |s| {
            let _ = doc::xmod_from_json(s);
        }),
        (morphism, |s| {
            let _ = doc::morphism_from_json(s);
        }),
        (butterfly, |s| {
            let _ = doc::butterfly_from_json(s);
        }),
        (cocycle, |s| {
            let _ = doc::cocycle_from_json(s);
        }),
        (object, |s| {
            if let Ok(d) = serde_json::from_str::<doc::GradedObjectDoc>(s) {
                let grading = crossmod_core::graded::GradingGroup::new(vec![2]).unwrap();
                let _ = d.build(&grading);
            }
        }),
    ]
}

#[test]
fn truncations_never_panic() {
    for (text, parse) in samples() {
        let step = (text.len() / 64).max(1);
        for cut in (0..text.len()).step_by(step) {
            parse(&text[..cut]);
        }
    }
}

#[test]
fn byte_mutations_never_panic() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for (text, parse) in samples() {
        let bytes = text.as_bytes();
        for _ in 0..400 {
            let mut mutated = bytes.to_vec();
            for _ in 0..rng.gen_range(1..4) {
                let at = rng.gen_range(0..mutated.len());
                mutated[at] = rng.gen_range(b' '..b'~');
            }
            if let Ok(s) = std::str::from_utf8(&mutated) {
                parse(s);
            }
        }
    }
}

#[test]
fn inflated_numbers_never_panic() {
    // Replace each digit run with a huge value; shape checks and overflow
    // guards must turn these into errors.
    for (text, parse) in samples() {
        let mut out = String::new();
        let mut digits = false;
        for ch in text.chars() {
            if ch.is_ascii_digit() {
                if !digits {
                    out.push_str("18446744073709551615");
                    digits = true;
                }
            } else {
                digits = false;
                out.push(ch);
            }
        }
        parse(&out);
    }
}

#[test]
fn oversized_object_dimensions_are_rejected() {
    let grading = crossmod_core::graded::GradingGroup::new(vec![2]).unwrap();
    let doc: doc::GradedObjectDoc =
        serde_json::from_str("{\"dims\":{\"0\":99999999999,\"1\":99999999999}}").unwrap();
    assert!(matches!(
        doc.build(&grading),
        Err(doc::DocError::Graded(
            crossmod_core::graded::GradedError::DimensionTooLarge
        ))
    ));
}
