use std::process::Command;

fn darboux(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_darboux"))
        .args(args)
        .output()
        .expect("run darboux");
    (
        out.status.code().unwrap_or(-1),
        String::from_utf8_lossy(&out.stdout).trim().to_string(),
        String::from_utf8_lossy(&out.stderr).into_owned(),
    )
}

#[test]
fn subcommand_examples() {
    assert_eq!(darboux(&["delta", "--d1", "1,0", "--d2", "0,1"]).1, "1");
    assert_eq!(darboux(&["cofactor", "--d", "x,y", "--f", "x*y"]).1, "2");
    assert_eq!(darboux(&["potential", "--d", "1,0"]).1, "-y");
    assert_eq!(darboux(&["div", "--d", "x^2,y"]).1, "2*x + 1");
    assert_eq!(darboux(&["bracket", "--d1", "1,0", "--d2", "x,0"]).1, "1,0");
    assert_eq!(darboux(&["reduce", "--d", "x^2,x*y"]).1, "d0: x,y\nmu: x");
    assert_eq!(
        darboux(&["solve", "--d", "x,y", "--lambda", "1", "--max-degree", "2"]).1,
        "y\nx"
    );
}

#[test]
fn analyze_text_output() {
    let (code, out, _) = darboux(&["analyze", "--d1", "x,y", "--d2", "x,-y"]);
    assert_eq!(code, 0);
    assert_eq!(
        out,
        "kind: common_darboux\nbranch: delta_nonconstant\nf: -2*x*y\nlambda1: 2\nlambda2: 0\nverified: true"
    );
}

#[test]
fn exit_codes() {
    assert_eq!(darboux(&["delta", "--d1", "x+", "--d2", "0,1"]).0, 1);
    assert_eq!(darboux(&["delta", "--d1", "x", "--d2", "0,1"]).0, 1);
    assert_eq!(darboux(&["analyze", "--d1", "1,0"]).0, 1);
    assert_eq!(darboux(&["analyze", "--d1", "1,0", "--d2", "2,0"]).0, 2);
    assert_eq!(darboux(&["analyze", "--d1", "0,0", "--d2", "0,1"]).0, 2);
    assert_eq!(darboux(&["potential", "--d", "x,0"]).0, 2);
    assert_eq!(darboux(&["cofactor", "--d", "1,0", "--f", "x"]).0, 2);
    assert_eq!(darboux(&["--help"]).0, 0);
}

#[test]
fn verify_rejects_tampered_certificate() {
    let (code, out, _) = darboux(&["analyze", "--d1", "x,y", "--d2", "x,-y", "--json"]);
    assert_eq!(code, 0);
    let mut cert: serde_json::Value = serde_json::from_str(&out).unwrap();
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("cert.json");

    std::fs::write(&path, cert.to_string()).unwrap();
    assert_eq!(darboux(&["verify", path.to_str().unwrap()]).1, "valid");

    cert["common_darboux"]["lambda1"] = "1".into();
    std::fs::write(&path, cert.to_string()).unwrap();
    let (code, _, err) = darboux(&["verify", path.to_str().unwrap()]);
    assert_eq!(code, 2);
    assert!(err.contains("invalid"), "{err}");

    std::fs::write(&path, "{ not json").unwrap();
    assert_eq!(darboux(&["verify", path.to_str().unwrap()]).0, 1);
}
