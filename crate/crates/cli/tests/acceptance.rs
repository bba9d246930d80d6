//! Acceptance: repeated runs on every shipped example produce
//! byte-identical reports, with the documented exit codes.

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn examples_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("examples")
}

fn run(args: &[&str], example: &Path) -> Output {
    let mut command = Command::new(env!("CARGO_BIN_EXE_crossmod"));
    command.arg(args[0]).arg(example).args(&args[1..]);
    command.output().expect("the binary runs")
}

/// The full command matrix: subcommand (plus trailing flags), example
/// file, expected exit code.
fn matrix() -> Vec<(Vec<&'static str>, &'static str, i32)> {
    vec![
        (vec!["verify-group"], "s3_group.json", 0),
        (vec!["verify-group"], "bad_group.json", 1),
        (vec!["verify-group"], "bad_schema_group.json", 2),
        (vec!["verify-group"], "malformed.json", 2),
        (vec!["verify-xmod"], "trivial_xmod.json", 0),
        (vec!["verify-xmod"], "z2_boundary_xmod.json", 0),
        (vec!["verify-xmod"], "inclusion_a3_s3_xmod.json", 0),
        (vec!["verify-xmod"], "z4_identity_xmod.json", 0),
        (vec!["verify-xmod"], "s3_identity_xmod.json", 0),
        (vec!["verify-xmod"], "s3_id_trivial_action_xmod.json", 1),
        (vec!["pi"], "inclusion_a3_s3_xmod.json", 0),
        (vec!["pi"], "z2_boundary_xmod.json", 0),
        (vec!["verify-morphism"], "inclusion_morphism.json", 0),
        (vec!["verify-morphism"], "collapse_morphism.json", 0),
        (vec!["verify-pnt"], "z2_self_pnt.json", 0),
        (vec!["compose-pnt"], "compose_vertical.json", 0),
        (vec!["compose-pnt"], "compose_horizontal.json", 0),
        (vec!["enumerate-pnts"], "enumerate_z2_pnts.json", 0),
        (vec!["split"], "inclusion_morphism.json", 0),
        (vec!["split"], "collapse_morphism.json", 0),
        (vec!["verify-butterfly"], "a3_s3_identity_butterfly.json", 0),
        (vec!["verify-butterfly"], "nonsplit_z4_butterfly.json", 0),
        (vec!["unsplit"], "a3_s3_identity_butterfly.json", 0),
        (vec!["unsplit"], "nonsplit_z4_butterfly.json", 1),
        (vec!["invert-butterfly"], "a3_s3_identity_butterfly.json", 0),
        (vec!["invert-butterfly"], "nonsplit_z4_butterfly.json", 1),
        (vec!["verify-cocycle"], "super_cocycle.json", 0),
        (vec!["verify-cocycle"], "semion_cocycle.json", 0),
        (vec!["verify-cocycle"], "trivial_cocycle_z3.json", 0),
        (vec!["verify-cocycle"], "bad_cocycle_h2.json", 1),
        (vec!["pentagon", "--all-simples"], "semion_cocycle.json", 0),
        (vec!["pentagon"], "super_cocycle.json", 0),
        (vec!["pentagon"], "trivial_cocycle_z3.json", 0),
        (vec!["hexagon", "--all-simples"], "semion_cocycle.json", 0),
        (vec!["hexagon"], "bad_cocycle_h2.json", 1),
        (vec!["symmetric"], "super_cocycle.json", 0),
        (vec!["symmetric"], "semion_cocycle.json", 1),
        (vec!["check-2cat"], "check2cat_z2.json", 0),
    ]
}

#[test]
fn criterion_8_reports_are_byte_identical_across_runs() {
    let dir = examples_dir();
    let mut commands = 0usize;
    for (args, example, expected_exit) in matrix() {
        let path = dir.join(example);
        let first = run(&args, &path);
        let second = run(&args, &path);
        assert_eq!(
            first.status.code(),
            Some(expected_exit),
            "{args:?} {example}: stdout {}",
            String::from_utf8_lossy(&first.stdout)
        );
        assert_eq!(
            second.status.code(),
            Some(expected_exit),
            "{args:?} {example} (second run)"
        );
        assert_eq!(
            first.stdout, second.stdout,
            "{args:?} {example}: reports must be byte-identical"
        );
        assert!(
            !first.stdout.is_empty(),
            "{args:?} {example}: a report must be emitted"
        );
        commands += 1;
    }
    println!(
        "[criterion 8] PASS - {commands} command invocations byte-identical across repeated runs"
    );
}

#[test]
fn pentagon_accepts_explicit_objects() {
    let dir = examples_dir();
    let object = dir.join("z2_object.json");
    let object = object.to_str().unwrap();
    let mut command = Command::new(env!("CARGO_BIN_EXE_crossmod"));
    command
        .arg("pentagon")
        .arg(dir.join("semion_cocycle.json"))
        .arg("--objects")
        .args([object, object, object, object]);
    let out = command.output().expect("the binary runs");
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stdout));
    let report: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(report["details"]["mode"], "objects");
}

#[test]
fn pretty_flag_changes_rendering_only() {
    let dir = examples_dir();
    let path = dir.join("super_cocycle.json");
    let compact = run(&["verify-cocycle"], &path);
    let mut command = Command::new(env!("CARGO_BIN_EXE_crossmod"));
    command.arg("verify-cocycle").arg(&path).arg("--pretty");
    let pretty = command.output().expect("the binary runs");
    assert_eq!(compact.status.code(), pretty.status.code());
    let a: serde_json::Value = serde_json::from_slice(&compact.stdout).unwrap();
    let b: serde_json::Value = serde_json::from_slice(&pretty.stdout).unwrap();
    assert_eq!(a, b);
    assert_ne!(compact.stdout, pretty.stdout);
}

#[test]
fn budget_flag_caps_enumeration() {
    let dir = examples_dir();
    let path = dir.join("enumerate_z2_pnts.json");
    let mut command = Command::new(env!("CARGO_BIN_EXE_crossmod"));
    command
        .arg("enumerate-pnts")
        .arg(&path)
        .args(["--budget", "1"]);
    let out = command.output().expect("the binary runs");
    assert_eq!(out.status.code(), Some(2), "{}", String::from_utf8_lossy(&out.stdout));
    let report: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(report["status"], "error");
}
