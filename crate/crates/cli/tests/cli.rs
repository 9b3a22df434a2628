//! End-to-end tests of the `hookbias` binary: output shapes, exit codes,
//! agreement between methods and formats, and byte-level determinism.

use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hookbias"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = run(args);
    assert!(
        out.status.success(),
        "expected success for {args:?}: status {:?}, stderr: {}",
        out.status.code(),
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).expect("utf-8 output")
}

#[test]
fn enumerate_counts_and_lists() {
    assert_eq!(stdout(&["enumerate", "--class", "sc", "--n", "8"]), "class,n,count\nsc,8,2\n");
    assert_eq!(
        stdout(&["enumerate", "--class", "sc", "--n", "8", "--list"]),
        "class,n,partition\nsc,8,4+2+1+1\nsc,8,3+3+2\n"
    );
    assert_eq!(
        stdout(&["enumerate", "--class", "do", "--n", "8", "--list"]),
        "class,n,partition\ndo,8,7+1\ndo,8,5+3\n"
    );
    assert_eq!(
        stdout(&["enumerate", "--class", "do", "--n", "0", "--list"]),
        "class,n,partition\ndo,0,0\n"
    );
}

#[test]
fn hooks_methods_agree() {
    let brute = stdout(&["hooks", "--class", "sc", "--t", "2", "--n", "20", "--method", "brute"]);
    let series = stdout(&["hooks", "--class", "sc", "--t", "2", "--n", "20", "--method", "series"]);
    let last = |s: &str| s.lines().last().unwrap().split(',').next_back().unwrap().to_string();
    assert_eq!(last(&brute), last(&series));
    assert!(brute.starts_with("class,t,n,method,count\n"));
}

#[test]
fn series_emits_exact_coefficients() {
    let out = stdout(&["series", "--gen", "B", "--t", "2", "--order", "6"]);
    let mut lines = out.lines();
    assert_eq!(lines.next(), Some("exponent,coefficient"));
    assert_eq!(out.lines().count(), 8); // header + orders 0..=6
    // Lowercase family aliases are accepted.
    let alias = stdout(&["series", "--gen", "b", "--t", "2", "--order", "6"]);
    assert_eq!(out, alias);
}

#[test]
fn beta_exact_column_and_json_shape() {
    let out = stdout(&["beta", "--t", "21", "--exact"]);
    assert_eq!(out, "t,method,value,exact\n21,closed,0.3048549107,5463/17920 + 0*log(2)\n");
    let json = stdout(&["beta", "--t", "21", "--exact", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&json).expect("valid json");
    assert_eq!(v[0]["exact"]["r"], "5463/17920");
    assert_eq!(v[0]["exact"]["s"], "0/1");
    assert_eq!(v[0]["value"], "0.3048549107");
}

#[test]
fn beta_methods_agree_numerically() {
    let closed = stdout(&["beta", "--t", "7"]);
    let quad = stdout(&["beta", "--t", "7", "--method", "quadrature"]);
    let value = |s: &str| {
        s.lines().last().unwrap().split(',').nth(2).unwrap().parse::<f64>().unwrap()
    };
    assert!((value(&closed) - value(&quad)).abs() < 1e-9);
}

#[test]
fn gamma_accepts_lists_and_ranges() {
    let table = stdout(&["gamma", "--t", "2,3,4,5,10,100"]);
    assert_eq!(
        table,
        "t,gamma\n2,1.4426950409\n3,2.0000000000\n4,1.4426950409\n5,1.7601073000\n\
         10,1.6259576185\n100,1.6369011056\n"
    );
    let range = stdout(&["gamma", "--t", "2..5"]);
    assert_eq!(range.lines().count(), 5); // header + t = 2, 3, 4, 5
}

#[test]
fn limit_prints_bare_value() {
    assert_eq!(stdout(&["limit"]), "1.6370350019\n");
    assert_eq!(stdout(&["limit", "--format", "json"]), "{\"limit\":\"1.6370350019\"}\n");
}

#[test]
fn asymptotics_reports_ratio_rows() {
    let out = stdout(&["asymptotics", "--family", "a", "--t", "2", "--n", "100,200"]);
    let mut lines = out.lines();
    assert_eq!(lines.next(), Some("family,t,n,exact,main_term,ratio"));
    let first = lines.next().unwrap();
    assert!(first.starts_with("a,2,100,"));
    let ratio: f64 = first.split(',').next_back().unwrap().parse().unwrap();
    assert!(ratio > 0.5 && ratio < 1.5, "ratio {ratio} out of sanity range");
}

#[test]
fn verify_suites_pass_at_reduced_ranges() {
    let out = stdout(&["verify", "--suite", "genfun", "--t-max", "4", "--n-max", "30"]);
    assert_eq!(out, "suite,status,checks,detail\ngenfun,pass,248,\n");
    let out = stdout(&["verify", "--suite", "rationality", "--t-max", "60"]);
    assert_eq!(out, "suite,status,checks,detail\nrationality,pass,60,\n");
    let out = stdout(&["verify", "--suite", "laurent"]);
    assert_eq!(out, "suite,status,checks,detail\nlaurent,pass,70,\n");
    let out = stdout(&["verify", "--suite", "xi", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&out).expect("valid json");
    assert_eq!(v[0]["status"], "pass");
    assert_eq!(v[0]["detail"], serde_json::Value::Null);
}

#[test]
fn identical_invocations_are_byte_identical() {
    for args in [
        &["gamma", "--t", "2..12"][..],
        &["series", "--gen", "A", "--t", "3", "--order", "40"][..],
        &["beta", "--t", "1..30", "--exact"][..],
        &["asymptotics", "--family", "size", "--n", "50,100", "--format", "json"][..],
    ] {
        assert_eq!(run(args).stdout, run(args).stdout, "args: {args:?}");
    }
}

#[test]
fn usage_errors_exit_two() {
    // Unknown flag.
    assert_eq!(run(&["gamma", "--t", "2", "--frobnicate"]).status.code(), Some(2));
    // Unknown subcommand.
    assert_eq!(run(&["eigenvalues"]).status.code(), Some(2));
    // Missing required flag.
    assert_eq!(run(&["hooks", "--class", "sc", "--t", "2"]).status.code(), Some(2));
    // Invalid enum value.
    assert_eq!(run(&["enumerate", "--class", "xyz", "--n", "4"]).status.code(), Some(2));
    // Invalid range.
    assert_eq!(run(&["gamma", "--t", "9..2"]).status.code(), Some(2));
    // t = 0 rejected.
    assert_eq!(run(&["beta", "--t", "0"]).status.code(), Some(2));
    // --exact with quadrature rejected.
    assert_eq!(
        run(&["beta", "--t", "2", "--method", "quadrature", "--exact"]).status.code(),
        Some(2)
    );
    // Budget guards.
    assert_eq!(run(&["enumerate", "--class", "sc", "--n", "301"]).status.code(), Some(2));
    assert_eq!(
        run(&["hooks", "--class", "do", "--t", "2", "--n", "999", "--method", "brute"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(run(&["series", "--gen", "A", "--t", "2", "--order", "20001"]).status.code(), Some(2));
}

#[test]
fn help_documents_csv_columns() {
    let help = stdout(&["asymptotics", "--help"]);
    assert!(help.contains("family,t,n,exact,main_term,ratio"));
    let help = stdout(&["hooks", "--help"]);
    assert!(help.contains("class,t,n,method,count"));
}
