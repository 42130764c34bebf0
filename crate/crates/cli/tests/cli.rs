use std::process::{Command, Output};

fn zmlat(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_zmlat"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

#[test]
fn validate() {
    let o = zmlat(&["validate", "7", "3", "2"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(
        out.contains("valid: ZM(7,3,2)") && out.contains("d = 3") && out.contains("order = 21")
    );

    let o = zmlat(&["validate", "4", "2", "3"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("gcd(m,n) != 1"));

    let o = zmlat(&["validate", "5", "2", "1"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("gcd(m,r-1) != 1"));

    let o = zmlat(&["validate", "7", "2", "2"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("r^n != 1 (mod m)"));

    let o = zmlat(&["validate", "1", "6", "0"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("cyclic group Z_6"));

    let o = zmlat(&["validate", "7", "3", "-5"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("r = 2"));
}

#[test]
fn usage_errors_exit_one() {
    assert_eq!(
        zmlat(&["validate", "7", "three", "2"]).status.code(),
        Some(1)
    );
    assert_eq!(zmlat(&["validate", "7"]).status.code(), Some(1));
    assert_eq!(zmlat(&["frobnicate"]).status.code(), Some(1));
    assert_eq!(
        zmlat(&["export", "7", "3", "2", "--format", "png"])
            .status
            .code(),
        Some(1)
    );
    let o = zmlat(&["scan", "--max-order", "600"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("oracle bound"));
    assert_eq!(zmlat(&["--help"]).status.code(), Some(0));
}

#[test]
fn listings() {
    let o = zmlat(&["normal", "7", "3", "2"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert_eq!(out.lines().filter(|l| l.ends_with("yes")).count(), 3);
    assert!(out.contains("eq1=3 eq2=3 eq3=3 chain=true"));

    let out = stdout(&zmlat(&["subgroups", "7", "3", "2"]));
    assert_eq!(
        out.lines()
            .filter(|l| l.ends_with("yes") || l.ends_with(" no"))
            .count(),
        10
    );

    let out = stdout(&zmlat(&["normal", "3", "4", "2"]));
    assert_eq!(out.lines().filter(|l| l.ends_with("yes")).count(), 5);
    assert!(out.contains("chain=false"));

    let o = zmlat(&["subgroups", "4", "2", "3"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn json_listings() {
    let v: serde_json::Value = serde_json::from_str(&stdout(&zmlat(&[
        "subgroups",
        "5",
        "4",
        "2",
        "--format",
        "json",
    ])))
    .unwrap();
    assert_eq!(v["subgroups"].as_array().unwrap().len(), 14);
    assert_eq!(v["normal_count_eq1"], 4);
    assert_eq!(v["normal_count_eq2"], 4);
    assert!(v["normal_count_eq3"].is_null());
    assert_eq!(v["is_chain"], true);

    let v: serde_json::Value = serde_json::from_str(&stdout(&zmlat(&[
        "normal", "15", "4", "2", "--format", "json",
    ])))
    .unwrap();
    assert_eq!(v["subgroups"].as_array().unwrap().len(), 7);
    assert_eq!(v["order"], 60);
}

#[test]
fn export_to_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("f21.dot");
    let o = zmlat(&[
        "export",
        "7",
        "3",
        "2",
        "--lattice",
        "normal",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert!(o.stdout.is_empty());
    let dot = std::fs::read_to_string(&path).unwrap();
    assert_eq!(dot.matches(" -> ").count(), 2);
    assert_eq!(dot.matches("[label=").count(), 3);

    let dot = stdout(&zmlat(&["export", "5", "4", "2", "--lattice", "normal"]));
    assert_eq!(dot.matches(" -> ").count(), 3);

    let json = stdout(&zmlat(&[
        "export",
        "15",
        "4",
        "2",
        "--lattice",
        "normal",
        "--format",
        "json",
    ]));
    let v: serde_json::Value = serde_json::from_str(&json).unwrap();
    assert_eq!(v["hasse"].as_array().unwrap().len(), 8);

    let o = zmlat(&["export", "7", "3", "2", "--out", "/nonexistent-dir/x.dot"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("/nonexistent-dir/x.dot"));

    let o = zmlat(&["export", "7", "3", "2", "--bound", "10"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn scan_outputs() {
    let o = zmlat(&["scan", "--max-order", "1", "--check", "all"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).lines().count(), 2);
    assert!(stderr(&o).contains("scanned 1 triples, 0 failures"));

    let o = zmlat(&["scan", "--max-order", "60", "--check", "all"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let csv = stdout(&o);
    assert!(csv.lines().skip(1).all(|l| l.ends_with(",true")));

    // max-order equal to the bound is allowed; the bound only gates `all`
    let o = zmlat(&[
        "scan",
        "--max-order",
        "20",
        "--check",
        "all",
        "--bound",
        "20",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let o = zmlat(&[
        "scan",
        "--max-order",
        "20",
        "--check",
        "counts",
        "--bound",
        "10",
    ]);
    assert_eq!(o.status.code(), Some(0));
}
