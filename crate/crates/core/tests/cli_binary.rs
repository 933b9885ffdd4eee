use std::process::Command;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_hecke-green"))
}

#[test]
fn green_json_has_the_documented_keys() {
    let dir = tempfile::tempdir().unwrap();
    let out = bin()
        .args(["green", "--n", "2", "--m", "1", "--format", "json", "--cache-dir"])
        .arg(dir.path())
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    for key in ["basis", "blocks", "P", "Lambda", "tables"] {
        assert!(v.get(key).is_some(), "missing {key}");
    }
    assert_eq!(v["basis"].as_array().unwrap().len(), 5);
}

#[test]
fn bad_flags_exit_with_usage_code() {
    let out = bin().args(["residual", "--n", "3", "--m", "2/3"]).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("--m"));
    let out = bin().args(["frobnicate"]).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
    let out = bin().args(["springer", "--n", "2", "--m", "1", "--label", "2+1"]).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn negative_half_integer_parameter() {
    let out = bin().args(["symbols", "--n", "2", "--m", "-1/2"]).output().unwrap();
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(String::from_utf8_lossy(&out.stdout).lines().count(), 5);
}

#[test]
fn springer_subspace_query() {
    let out = bin()
        .args(["springer", "--n", "35", "--m", "2", "--a-parts", "3+7+9", "--b-part", "6+6+1+1+1+1"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.contains("16 elements"), "{text}");
    assert!(text.contains("ok"));
}

#[test]
fn verify_passes() {
    let dir = tempfile::tempdir().unwrap();
    let out = bin().args(["verify", "--max-n", "3", "--cache-dir"]).arg(dir.path()).output().unwrap();
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stdout));
}
