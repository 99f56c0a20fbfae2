use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::{Command, Stdio};

use prk::kripke::{entails_in_model, KripkeModel};
use prk::syntax::{parse_judgment, parse_mprop};
use prk::typing::type_of;

struct Run {
    code: i32,
    stdout: String,
    stderr: String,
}

fn examples() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("examples")
}

fn example(name: &str) -> String {
    examples().join(name).display().to_string()
}

fn prk_with_input(args: &[&str], input: Option<&str>) -> Run {
    let mut child = Command::new(env!("CARGO_BIN_EXE_prk"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary runs");
    {
        let mut stdin = child.stdin.take().expect("piped");
        if let Some(s) = input {
            stdin.write_all(s.as_bytes()).expect("write stdin");
        }
    }
    let out = child.wait_with_output().expect("binary exits");
    Run {
        code: out.status.code().expect("not killed by a signal"),
        stdout: String::from_utf8(out.stdout).expect("utf-8"),
        stderr: String::from_utf8(out.stderr).expect("utf-8"),
    }
}

fn prk(args: &[&str]) -> Run {
    prk_with_input(args, None)
}

#[test]
fn check_excluded_middle() {
    let r = prk(&["check", &example("lem.prk")]);
    assert_eq!((r.code, r.stdout.as_str()), (0, "(a | ~a)^c+\n"), "{}", r.stderr);
}

#[test]
fn classical_projection_of_pair_eta_normalizes_to_component() {
    let r = prk(&["normalize", "--eta", &example("projc_pairc.prk")]);
    assert_eq!((r.code, r.stdout.as_str()), (0, "t1\n"), "{}", r.stderr);
    // without eta the classical wrapper survives
    let r = prk(&["normalize", &example("projc_pairc.prk")]);
    assert_eq!(r.stdout, "clam+(x : a^c-. capp+(t1, x))\n");
}

#[test]
fn excluded_middle_fails_strongly_in_three_world_model() {
    let r = prk(&["kripke", "eval", &example("lem3.model"), "w0", "(a | ~a)^s+"]);
    assert_eq!((r.code, r.stdout.as_str()), (0, "false\n"));
    let r = prk(&["kripke", "eval", &example("lem3.model"), "w0", "(a | ~a)^c+"]);
    assert_eq!(r.stdout, "true\n");
    let r = prk(&["kripke", "validate", &example("lem3.model")]);
    assert_eq!((r.code, r.stdout.as_str()), (0, "valid\n"));
}

#[test]
fn golden_judgments_round_trip() {
    let mut seen = 0;
    for entry in fs::read_dir(examples()).unwrap() {
        let path = entry.unwrap().path();
        if path.extension().and_then(|e| e.to_str()) != Some("prk") {
            continue;
        }
        let src = fs::read_to_string(&path).unwrap();
        let j = parse_judgment(&src).unwrap();
        let d = type_of(&j.context, &j.term, j.expected.as_ref()).unwrap();
        let printed = j.to_string();
        assert_eq!(parse_judgment(&printed).unwrap(), j, "{}", path.display());
        let r = prk(&["check", &path.display().to_string()]);
        assert_eq!(r.stdout.trim(), d.conclusion.to_string());
        assert_eq!(parse_mprop(r.stdout.trim()).unwrap(), d.conclusion);
        seen += 1;
    }
    assert!(seen >= 3);
}

#[test]
fn embedding_output_is_a_checkable_judgment() {
    let r = prk(&["embed", &example("swap.nk")]);
    assert_eq!(r.code, 0, "{}", r.stderr);
    assert!(r.stdout.ends_with(" : (b | a)^c+\n"));
    let c = prk_with_input(&["check", "-"], Some(&r.stdout));
    assert_eq!((c.code, c.stdout.as_str()), (0, "(b | a)^c+\n"));
    let r = prk(&["--format", "machine", "embed", &example("swap.nk")]);
    assert!(r.stdout.starts_with("hyp=h1 : (a | b)^c+\nterm=clam+("));
    assert!(r.stdout.ends_with("type=(b | a)^c+\n"));
}

#[test]
fn invalid_proof_and_bad_syntax() {
    let r = prk_with_input(&["embed", "-"], Some("a |- ande1(hyp1)"));
    assert_eq!(r.code, 1);
    assert!(r.stdout.starts_with("invalid proof:"));
    let r = prk_with_input(&["embed", "-"], Some("a |- ande1(hyp1"));
    assert_eq!(r.code, 2);
}

#[test]
fn dual_judgment_is_well_typed() {
    let r = prk(&["dual", &example("subformula.prk")]);
    assert_eq!(r.code, 0);
    let c = prk_with_input(&["check", "-"], Some(&r.stdout));
    assert_eq!((c.code, c.stdout.as_str()), (0, "a^s-\n"));
    let d = prk_with_input(&["dual", "-"], Some(&r.stdout));
    let back = parse_judgment(&d.stdout).unwrap();
    let orig = parse_judgment(&fs::read_to_string(example("subformula.prk")).unwrap()).unwrap();
    assert_eq!(back, orig);
}

#[test]
fn exit_codes() {
    let ill = prk_with_input(&["check", "-"], Some("x : a^s+\n|- x : a^s-"));
    assert_eq!(ill.code, 1);
    assert!(ill.stdout.starts_with("ill-typed:"));
    assert_eq!(prk_with_input(&["check", "-"], Some("|- pair+(x")).code, 2);
    assert_eq!(prk(&["check", "/nonexistent/file.prk"]).code, 2);
    assert_eq!(prk(&["frobnicate"]).code, 2);
    assert_eq!(prk(&["kripke", "eval", &example("lem3.model"), "w7", "a^s+"]).code, 2);
    let fuel = prk(&["normalize", "--fuel", "1", &example("projc_pairc.prk")]);
    assert_eq!(fuel.code, 1);
    assert!(fuel.stdout.starts_with("fuel exhausted:"));
}

#[test]
fn decide_sequents() {
    assert_eq!(prk(&["decide", &example("explosion.seq")]).stdout, "valid\n");
    assert_eq!(prk(&["decide", &example("explosion.seq")]).code, 0);
    let r = prk(&["decide", &example("invalid.seq")]);
    assert_eq!((r.code, r.stdout.as_str()), (1, "invalid\n"));
    let r = prk(&["decide", "|- (a | ~a)^c+"]);
    assert_eq!(r.code, 0);
    let r = prk(&["decide", "a^s+ |- a^c+"]);
    assert_eq!(r.code, 2);
    assert!(r.stderr.contains("a^s+"));
}

#[test]
fn countermodel_is_a_genuine_refutation() {
    let r = prk(&["--format", "machine", "kripke", "countermodel", &example("invalid.seq")]);
    assert_eq!(r.code, 1);
    let mut toml = String::new();
    let mut world = None;
    for line in r.stdout.lines() {
        let (k, v) = line.split_once('=').unwrap();
        match k {
            "model" => {
                toml.push_str(v);
                toml.push('\n');
            }
            "world" => world = Some(v.to_string()),
            _ => {}
        }
    }
    let m = KripkeModel::from_toml(&toml).unwrap();
    assert!(m.validate().is_valid());
    let w = m.world_index(&world.unwrap()).unwrap();
    let hyp = parse_mprop("(a | b)^c+").unwrap();
    let goal = parse_mprop("a^c+").unwrap();
    let mut f = prk::kripke::Forcing::new(&m);
    assert!(f.forces(w, &hyp).unwrap() && !f.forces(w, &goal).unwrap());
    assert!(!entails_in_model(&m, &[hyp], &goal).unwrap());

    let r = prk(&["kripke", "countermodel", "--max-worlds", "2", &example("explosion.seq")]);
    assert_eq!(r.code, 0);
    assert!(r.stdout.starts_with("no countermodel with at most 2 worlds"));
}

#[test]
fn machine_output_is_stable_key_value() {
    let args = ["--format", "machine", "normalize", "--eta", "--trace", &example("projc_pairc.prk")];
    let a = prk(&args);
    let b = prk(&args);
    assert_eq!(a.stdout, b.stdout);
    assert!(a
        .stdout
        .lines()
        .all(|l| l.split_once('=').is_some_and(|(k, _)| k.chars().all(|c| c.is_ascii_lowercase() || c == '_'))));
    assert!(a.stdout.ends_with("steps=3\nnormal_form=t1\n"));
}

#[test]
fn classify_and_translate() {
    let r = prk(&["--format", "machine", "classify", &example("subformula.prk")]);
    assert!(r.stdout.contains("normal=true\nneutral=true\ncanonical=false\n"));
    let r = prk(&["--format", "machine", "classify", &example("lem.prk")]);
    assert!(r.stdout.contains("canonical=true\ncanonicity=closed, canonical\ncanonicity_holds=true\n"));
    let r = prk(&["--format", "machine", "translate", &example("projc_pairc.prk")]);
    assert_eq!(r.code, 0);
    assert!(r.stdout.ends_with("equivalent=true\n"));
}
