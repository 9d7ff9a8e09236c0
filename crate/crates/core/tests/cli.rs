use std::process::{Command, Output};

fn cliffq(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cliffq")).args(args).output().expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = cliffq(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

#[test]
fn gate_apply() {
    assert_eq!(stdout(&["gate", "apply", "--name", "x", "--state", "1,0;0,0"]).trim(), "0,0;1,0");
    assert_eq!(stdout(&["gate", "apply", "--name", "cnot", "--state", "0,0;0,0;1,0;0,0"]).trim(), "0,0;0,0;0,0;1,0");
}

#[test]
fn gate_synth_prints_closed_form() {
    let text = stdout(&["gate", "synth", "--name", "cnot"]);
    assert!(text.lines().next().unwrap().ends_with("0.5 1⊗1 + 0.5 1⊗e1 + 0.5 e3⊗1 - 0.5 e3⊗e1"), "{text}");
    assert!(text.contains("residual"));
}

#[test]
fn state_round_trip() {
    assert_eq!(stdout(&["state", "encode", "1,0;0,0"]).trim(), "e3 ε");
    let encoded = stdout(&["state", "encode", "0.6,0;0,-0.8"]);
    assert_eq!(stdout(&["state", "decode", encoded.trim()]).trim(), "0.6,0;0,-0.8");
}

#[test]
fn usage_errors_exit_2() {
    for args in [
        &["state", "decode", "e2⊗e2"][..],
        &["verify", "--suite", "bogus"],
        &["gate", "apply", "--name", "nope", "--state", "1,0;0,0"],
        &["gate", "apply", "--name", "x", "--state", "1;0"],
        &["frobnicate"],
    ] {
        assert_eq!(cliffq(args).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn op_apply_charge_conjugation() {
    let text = stdout(&["op", "apply", "--name", "cconj", "--state", "1,0;0,0;0,0;0,0"]);
    assert_eq!(text.lines().last().unwrap(), "0,0;0,0;0,0;1,0");
}

#[test]
fn verify_writes_json() {
    let path = std::env::temp_dir().join(format!("cliffq-susy-{}.json", std::process::id()));
    let out = cliffq(&["verify", "--suite", "susy", "--seed", "7", "--json", path.to_str().unwrap()]);
    assert!(out.status.success());
    let report = cliffq::report::Report::from_json(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(report.seed, 7);
    assert_eq!(report.summary.fail, 0);
    std::fs::remove_file(path).unwrap();
}
