use std::process::{Command, Output};

const REMARK: &str = "x1*x3^2 + x1^2*x3 + x1*x2*x3 + x2^2*x3";

fn polymat(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_polymat"))
        .args(args)
        .env_remove("POLYMAT_MAX_PERMS")
        .output()
        .unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

#[test]
fn check_poly_exit_codes() {
    let o = polymat(&["check", "poly", REMARK]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains(r#"{"u":[1,0,2],"v":[0,2,1],"var":1}"#));
    let o = polymat(&["check", "poly", "x1^2 + x1*x2 + x2^2"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "polymatroidal\n");
}

#[test]
fn check_lq_named_order() {
    let o = polymat(&[
        "check", "lq", REMARK, "--kind", "revlex", "--order", "3,2,1",
    ]);
    assert_eq!(o.status.code(), Some(1));
    let o = polymat(&[
        "check",
        "lq",
        "x1^2 + x1*x2 + x2^2",
        "--kind",
        "lex",
        "--all-orders",
    ]);
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn check_qwlr_all_orders() {
    for kind in ["lex", "revlex"] {
        let o = polymat(&["check", "qwlr", REMARK, "--kind", kind, "--all-orders"]);
        assert_eq!(o.status.code(), Some(0));
        assert_eq!(stdout(&o).lines().count(), 6);
    }
}

#[test]
fn betti_triangle() {
    let o = polymat(&["betti", "x1^2 + x2^2"]);
    assert_eq!(
        stdout(&o),
        "       0 1\ntotal: 2 1\n    2: 2 .\n    3: . 1\n"
    );
    let o = polymat(&["betti", REMARK, "--json"]);
    assert_eq!(stdout(&o).trim(), r#"{"betti":[[0,3,4],[1,4,4],[2,5,1]]}"#);
}

#[test]
fn file_input_and_localize() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("ideal.json");
    std::fs::write(
        &path,
        r#"{"n": 3, "generators": [[1,0,2],[2,0,1],[1,1,1],[0,2,1]]}"#,
    )
    .unwrap();
    let o = polymat(&["localize", "--file", path.to_str().unwrap(), "--at", "3"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "x2^2 + x1\n");
}

#[test]
fn lexsegment_command() {
    let o = polymat(&["lexsegment", "--u", "x1*x2", "--v", "x1*x3"]);
    let out = stdout(&o);
    assert!(out.contains("completely lexsegment"));
    assert!(out.contains("two-condition criterion: true"));
    let o = polymat(&[
        "lexsegment",
        "--u",
        "x1*x2^2",
        "--v",
        "x1*x2*x3",
        "--shadow-depth",
        "3",
    ]);
    assert!(stdout(&o).contains("shadow 1 is not a lexsegment"));
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(polymat(&["check", "poly", "x0*x1"]).status.code(), Some(2));
    assert_eq!(
        polymat(&["suite", "theorem", "--n", "5", "--d", "3"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(polymat(&["suite", "theorem"]).status.code(), Some(2));
    assert_eq!(polymat(&["check", "lq", REMARK]).status.code(), Some(2));
    // not equigenerated
    assert_eq!(
        polymat(&["check", "poly", "x1^2 + x2"]).status.code(),
        Some(2)
    );
}

#[test]
fn permutation_budget_from_environment() {
    let run = |budget: &str| {
        Command::new(env!("CARGO_BIN_EXE_polymat"))
            .args(["check", "lq", REMARK, "--kind", "lex", "--all-orders"])
            .env("POLYMAT_MAX_PERMS", budget)
            .output()
            .unwrap()
            .status
            .code()
    };
    assert_eq!(run("5"), Some(2));
    assert_eq!(run("6"), Some(1));
    assert_eq!(run("many"), Some(2));
}

#[test]
fn suite_report_to_stdout() {
    let o = polymat(&[
        "suite", "theorem", "--n", "3", "--d", "2", "--jobs", "2", "--json", "-",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["schema"], 1);
    assert_eq!(v["totals"]["pass"], 63);
    assert!(v.get("wall_time_ms").is_none());
    let o = polymat(&["suite", "remark", "--timing", "--json", "-"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert!(v["wall_time_ms"].is_u64());
}

#[test]
fn resume_from_mask() {
    let o = polymat(&[
        "suite",
        "theorem",
        "--n",
        "3",
        "--d",
        "2",
        "--start-mask",
        "60",
        "--json",
        "-",
    ]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["totals"]["total"], 4);
    assert_eq!(v["verdicts"][0]["mask"], 60);
}
