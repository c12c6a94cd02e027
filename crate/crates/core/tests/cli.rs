//! The `rbsys` binary and the document layer on the bundled models.

use rbsys::cli::{digest, emit_model, exit_code, parse_model, run_text, CliError, Command, Format, Options};
use std::path::{Path, PathBuf};
use std::process::Output;

fn models() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("models")
}

fn model(name: &str) -> String {
    models().join(format!("{name}.toml")).to_string_lossy().into_owned()
}

fn rbsys(args: &[&str]) -> Output {
    std::process::Command::new(env!("CARGO_BIN_EXE_rbsys")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

#[test]
fn every_model_parses_and_emits_a_fixed_point() {
    for entry in std::fs::read_dir(models()).unwrap() {
        let path = entry.unwrap().path();
        let text = std::fs::read_to_string(&path).unwrap();
        let doc = parse_model(&text).unwrap_or_else(|e| panic!("{}: {e}", path.display()));
        let once = emit_model(&doc);
        let again = parse_model(&once).unwrap();
        assert_eq!(again, doc, "{}", path.display());
        assert_eq!(emit_model(&again), once);
    }
}

#[test]
fn bundled_models_pass_their_commands() {
    let cases: &[(&str, &str, &[&str])] = &[
        ("validate", "jackson", &[]),
        ("check-rbs", "jackson", &[]),
        ("characterize", "jackson", &[]),
        ("induce", "jackson", &[]),
        ("cohomology", "zero_line", &[]),
        ("gauge", "idempotent_gauge", &[]),
        ("reduce", "strict_upper_reduce", &[]),
        ("deform", "idempotent_deform", &["--order", "3"]),
        ("deform", "dual_jackson_obstructed", &[]),
        ("aybp", "nilpotent_aybp", &[]),
        ("aybp", "unit_frobenius", &["--mode", "frobenius"]),
        ("covariant", "nilpotent_aybp", &[]),
        ("perturb", "nilpotent_aybp", &[]),
        ("averaging", "dual_averaging", &[]),
        ("quadri", "diagonal_quadri", &[]),
        ("homotopy", "idempotent_ainf", &[]),
        ("homotopy", "two_term", &[]),
    ];
    for (cmd, name, extra) in cases {
        let path = model(name);
        let mut args = vec![*cmd, path.as_str()];
        args.extend_from_slice(extra);
        let out = rbsys(&args);
        assert_eq!(out.status.code(), Some(0), "{cmd} {name}:\n{}", stdout(&out));
        assert!(stdout(&out).ends_with("pass=true\n"));
    }
}

#[test]
fn jackson_check_rbs_reports_the_coefficients() {
    let out = stdout(&rbsys(&["check-rbs", &model("jackson")]));
    assert!(out.contains("R(1)=(0/1, 1/1, 0/1, 0/1)"));
    assert!(out.contains("R(x)=(0/1, 0/1, 1/3, 0/1)"));
    assert!(out.contains("R(x^2)=(0/1, 0/1, 0/1, 1/7)"));
}

#[test]
fn identity_pair_on_an_idempotent_fails_four_ways() {
    let out = rbsys(&["characterize", &model("idempotent_identity")]);
    assert_eq!(out.status.code(), Some(1));
    let text = stdout(&out);
    for name in ["grbs", "graph", "nijenhuis", "maurer_cartan"] {
        assert!(text.contains(&format!("check={name} pass=false")), "{name}");
    }
    assert!(text.contains("check=four_way_agreement pass=true"));
    assert!(text.contains("witness[grbs]=defect_R[e,e] = -1/1"));
}

#[test]
fn zero_system_cohomology() {
    let out = rbsys(&["cohomology", &model("zero_line"), "--max-degree", "2"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("H0=2 H1=2 H2=2\n"));
}

#[test]
fn obstructed_deformation_is_reported() {
    let out = stdout(&rbsys(&["deform", &model("dual_jackson_obstructed")]));
    assert!(out.contains("extension_2=obstructed"));
    assert!(out.contains("dim_H2=3"));
    assert!(out.contains("reached_order=1"));
}

#[test]
fn input_errors_exit_with_two() {
    let unknown = rbsys(&["frobnicate", &model("jackson")]);
    assert_eq!(unknown.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&unknown.stderr).contains("unknown command"));
    assert_eq!(rbsys(&["gauge", &model("jackson")]).status.code(), Some(2));
    assert_eq!(rbsys(&["validate", "/nonexistent/model.toml"]).status.code(), Some(2));
    assert_eq!(rbsys(&["aybp", &model("nilpotent_aybp"), "--mode", "sideways"]).status.code(), Some(2));
    assert_eq!(rbsys(&["validate", &model("jackson"), "--format", "xml"]).status.code(), Some(2));
    assert_eq!(rbsys(&["homotopy", &model("jackson")]).status.code(), Some(2));
}

#[test]
fn semantic_errors_name_their_place() {
    // (aa)a = ba = a but a(aa) = ab = 0
    let bad = "[algebra]\nbasis = [\"a\", \"b\"]\nproducts = [[0, 0, 1, 1], [1, 0, 0, 1]]\n";
    match run_text(Command::Validate, bad, &Options::default()) {
        Err(CliError::Document(e)) => assert!(e.to_string().contains("(a,a,a)"), "{e}"),
        other => panic!("{other:?}"),
    }
    let zero_den = "[algebra]\nbasis = [\"a\"]\nproducts = [[0, 0, 0, \"1/0\"]]\n";
    assert!(matches!(run_text(Command::Validate, zero_den, &Options::default()), Err(CliError::Document(_))));
}

#[test]
fn reports_carry_provenance() {
    let text = std::fs::read_to_string(model("jackson")).unwrap();
    let opts = Options { seed: 9, ..Options::default() };
    let rep = run_text(Command::CheckRbs, &text, &opts).unwrap();
    assert_eq!(exit_code(&rep), 0);
    let machine = rep.emit(Format::Machine);
    assert!(machine.starts_with(&format!("command=check-rbs\ninput_sha256={}\nseed=9\n", digest(&text))));
    assert!(rep.emit(Format::Human).contains("all checks pass"));
}

#[test]
fn seeded_extension_differs_from_the_canonical_one_but_stays_valid() {
    let path = model("idempotent_deform");
    let canonical = rbsys(&["deform", &path, "--order", "3"]);
    let seeded = rbsys(&["deform", &path, "--order", "3", "--seed", "4"]);
    assert_eq!(canonical.status.code(), Some(0));
    assert_eq!(seeded.status.code(), Some(0));
    assert_eq!(stdout(&seeded), stdout(&rbsys(&["deform", &path, "--order", "3", "--seed", "4"])));
    assert!(stdout(&seeded).contains("reached_order=3"));
    let terms = |o: &Output| stdout(o).lines().filter(|l| l.starts_with("R_") || l.starts_with("S_")).map(String::from).collect::<Vec<_>>();
    assert_ne!(terms(&canonical), terms(&seeded));
}

#[test]
fn stdin_is_accepted() {
    use std::io::Write;
    let mut child = std::process::Command::new(env!("CARGO_BIN_EXE_rbsys"))
        .args(["validate", "-"])
        .stdin(std::process::Stdio::piped())
        .stdout(std::process::Stdio::piped())
        .spawn()
        .unwrap();
    let text = std::fs::read_to_string(model("zero_line")).unwrap();
    child.stdin.take().unwrap().write_all(text.as_bytes()).unwrap();
    let out = child.wait_with_output().unwrap();
    assert_eq!(out.status.code(), Some(0));
}
