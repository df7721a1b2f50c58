use std::io::Write;
use std::process::{Command, Output};

fn sigpet(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_sigpet"))
        .args(args)
        .output()
        .expect("run sigpet")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn table_formats() {
    let o = sigpet(&["table", "T2"]);
    assert!(o.status.success());
    let text = stdout(&o);
    let row: Vec<&str> = text.lines().nth(1).unwrap().split_whitespace().collect();
    assert_eq!(row, ["l", "0", "1", "2", "2", "3", "3"]);

    let csv = stdout(&sigpet(&["table", "T8", "--format", "csv"]));
    assert!(csv.contains("chi,1,1,1,1,1,1\n"));
    assert!(csv.contains("chi*,2,2,2,2,2,1\n"));

    let json: serde_json::Value =
        serde_json::from_str(&stdout(&sigpet(&["table", "T10", "--format", "json"]))).unwrap();
    assert_eq!(json["table"], "T10");
    let q: Vec<&str> = json["rows"][1]["values"]
        .as_array()
        .unwrap()
        .iter()
        .map(|v| v.as_str().unwrap())
        .collect();
    let minimal: Vec<&str> = q.iter().step_by(2).copied().collect();
    assert_eq!(minimal, ["0", "1", "2", "2", "3", "3"]);
}

#[test]
fn output_is_deterministic() {
    for args in [
        &["table", "T4_orders", "--format", "json"][..],
        &["census", "--format", "csv"][..],
    ] {
        assert_eq!(sigpet(args).stdout, sigpet(args).stdout);
    }
}

#[test]
fn classify_file_with_m35_negative() {
    // Negative edges v12v34, v13v24, v14v23: the edges of P avoiding X_5.
    let mut f = tempfile::NamedTempFile::new().unwrap();
    let s = sigpet::SignedGraph::petersen(sigpet::SixType::P33.standard_mask()).unwrap();
    write!(f, "# P33\n{s}").unwrap();
    let o = sigpet(&["classify", "--file", f.path().to_str().unwrap()]);
    assert!(o.status.success());
    assert!(stdout(&o).starts_with("class   P33\n"));

    let mut g = tempfile::NamedTempFile::new().unwrap();
    write!(g, "n 4\n0 1 -\n1 2\n2 3\n3 0\n").unwrap();
    let out = stdout(&sigpet(&["classify", "--file", g.path().to_str().unwrap()]));
    assert!(out.contains("not a Petersen signature"));
    assert!(out.contains("l       1"));
}

#[test]
fn group_and_coset_table() {
    let out = stdout(&sigpet(&["group", "--mask", "0x2880", "--coset-table"]));
    assert!(out.contains("class  P32"));
    assert!(out.contains("SwAut  order  60  A5"));
    assert!(out.contains("cosets 10 (conjugation-closed: true)"));
}

#[test]
fn color_and_cluster() {
    let out = stdout(&sigpet(&["color", "--mask", "0", "--k", "1"]));
    assert!(out.starts_with("colorations 120 "));
    let out = stdout(&sigpet(&["cluster", "--mask", "0x7fff"]));
    assert!(out.contains("clun        3"));
    let out = stdout(&sigpet(&["cluster", "--mask", "0x1"]));
    assert!(out.contains("clusterable false") && out.contains("Q           1"));
}

#[test]
fn verify_passes() {
    let o = sigpet(&["verify"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(stdout(&o).contains(", 0 differ"));
}

#[test]
fn input_errors_exit_2() {
    assert_eq!(sigpet(&["table", "T6"]).status.code(), Some(2));
    assert_eq!(sigpet(&["classify", "--mask", "0x8000"]).status.code(), Some(2));
    assert_eq!(
        sigpet(&["classify", "--file", "/nonexistent/sigpet.txt"]).status.code(),
        Some(2)
    );
    assert_eq!(sigpet(&["color", "--mask", "0", "--k", "3"]).status.code(), Some(2));
    assert_eq!(sigpet(&["classify"]).status.code(), Some(2));
    let mut f = tempfile::NamedTempFile::new().unwrap();
    write!(f, "n 3\n0 1\n0 1 -\n").unwrap();
    let o = sigpet(&["cluster", "--file", f.path().to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("duplicate edge"));
}

#[test]
fn worker_count_from_environment() {
    let one = Command::new(env!("CARGO_BIN_EXE_sigpet"))
        .args(["census", "--format", "csv"])
        .env("SIGPET_THREADS", "1")
        .output()
        .unwrap();
    assert!(one.status.success());
    assert_eq!(one.stdout, sigpet(&["census", "--format", "csv"]).stdout);
}
