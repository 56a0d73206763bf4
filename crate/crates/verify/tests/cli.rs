use std::process::Command;

fn verify(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_verify"))
        .args(args)
        .output()
        .expect("binary runs");
    (
        out.status.code().unwrap_or(-1),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

#[test]
fn json_output_matches_golden() {
    let (code, stdout, _) = verify(&["g2", "--format", "json"]);
    assert_eq!(code, 0);
    assert_eq!(stdout, include_str!("golden/g2.json"));
}

#[test]
fn out_file_gets_the_json_report() {
    let dir = std::env::temp_dir().join(format!("verify-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("report.json");
    let (code, stdout, _) = verify(&[
        "setup",
        "--type",
        "B2",
        "--alpha",
        "[0,1]",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!(code, 0);
    assert!(stdout.contains("setup.B2.[0,1]"));
    let written = std::fs::read_to_string(&path).unwrap();
    assert_eq!(written, include_str!("golden/setup_b2_alpha2.json"));
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn text_output_is_a_table() {
    let (code, stdout, _) = verify(&["sl2-table", "--max-rank", "2"]);
    assert_eq!(code, 0);
    let mut lines = stdout.lines();
    assert!(lines.next().unwrap().starts_with("CHECK"));
    assert!(stdout.contains("sl2.G2.[1,0]"));
    assert!(stdout.trim_end().ends_with("7 pass, 0 fail, 0 report-only"));
}

#[test]
fn usage_errors_exit_with_two() {
    for args in [
        &["minimal-orbits", "--max-rank", "9"][..],
        &["sl2-table", "--max-rank", "0"],
        &["props", "--trials", "0"],
        &["setup", "--type", "A2", "--alpha", "[1,1]"],
        &["setup", "--type", "X3", "--alpha", "[1,0,0]"],
        &["bogus"],
    ] {
        let (code, _, stderr) = verify(args);
        assert_eq!(code, 2, "{args:?}");
        assert!(!stderr.is_empty());
    }
}

#[test]
fn repeated_runs_are_byte_identical() {
    let args = ["props", "--seed", "3", "--trials", "10", "--format", "json"];
    let (c1, first, _) = verify(&args);
    let (c2, second, _) = verify(&args);
    assert_eq!((c1, c2), (0, 0));
    assert_eq!(first, second);
}
