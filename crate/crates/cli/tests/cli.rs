use std::process::{Command, Output};

use rankcrank::{Report, Status};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_rankcrank"))
        .args(args)
        .env_remove("RANKCRANK_THREADS")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn crank_of_one() {
    let o = run(&["poly", "crank", "--n", "1"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o), "1\n");
}

#[test]
fn rank_polynomial_json() {
    let o = run(&["poly", "rank", "--n", "4", "--format", "json"]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["lo"], -3);
    assert_eq!(v["coeffs"], serde_json::json!(["1", "0", "1", "1", "1", "0", "1"]));
}

#[test]
fn modified_polynomials() {
    let o = run(&["poly", "modified-rank", "--ell", "5", "--n", "0"]);
    assert_eq!(stdout(&o), "1*z^-2 + 1*z^-1 + 1 + 1*z^1 + 1*z^2\n");
    let o = run(&["poly", "modified-crank", "--ell", "13", "--n", "0"]);
    assert_eq!(o.status.code(), Some(2));
    let o = run(&["poly", "modified-crank", "--n", "0"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn quotients() {
    let o = run(&["quotient", "--ell", "5", "--squared", "--poly", "z^-4 + z^-2 + 1 + z^2 + z^4"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o), "1*z^-4\n");
    let o = run(&["quotient", "--ell", "5", "--poly", "1 + z"]);
    assert_eq!(o.status.code(), Some(1));
    assert_eq!(stdout(&o), "NotDivisible\n");
    let o = run(&["quotient", "--ell", "4", "--poly", "1"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn verify_proven_claim() {
    let o = run(&["verify", "conj1.1-part2", "--n-max", "30"]);
    assert_eq!(o.status.code(), Some(0));
    let r: Report = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(r.status, Status::Pass);
    assert_eq!(r.claim_id, "conj1.1-part2");
    assert_eq!(r.elapsed_s, 0.0);
}

#[test]
fn verify_csv_and_list() {
    let o = run(&["verify", "thm2.2", "--n-max", "10", "--format", "csv"]);
    assert_eq!(stdout(&o), "claim_id,range,status,counterexamples,elapsed_s\nthm2.2,0 <= n <= 10 (5n + 4 <= 54),pass,0,0.000\n");
    let o = run(&["verify", "--list"]);
    assert!(o.status.success());
    assert!(stdout(&o).lines().any(|l| l.starts_with("table1\t")));
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(run(&["verify", "no-such-claim"]).status.code(), Some(2));
    assert_eq!(run(&["poly", "rank"]).status.code(), Some(2));
    assert_eq!(run(&["search", "--k-lo", "2"]).status.code(), Some(2));
    assert_eq!(run(&["poly", "rank", "--n", "10", "--q-order", "5"]).status.code(), Some(2));
    assert_eq!(run(&["poly", "rank", "--n", "5000"]).status.code(), Some(2));
}

#[test]
fn table1_csv() {
    let o = run(&["search", "table1"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines.len(), 40);
    assert_eq!(lines[0], "k,a_vector,threshold,n_hi");
    assert_eq!(lines[1], "3,2 1,7,75");
    assert!(lines.contains(&"4,4 3,23,75"));
    assert!(lines.contains(&"5,5 3 2,-,75"));
    assert!(lines.contains(&"6,6 5 3,32,75"));
    let o = run(&["search", "--k-lo", "3", "--k-hi", "6", "--n-hi", "75"]);
    assert_eq!(stdout(&o), out);
}

#[test]
fn threads_do_not_change_output() {
    let one = run(&["--threads", "1", "search", "--k-lo", "3", "--k-hi", "5", "--n-hi", "40", "--format", "json"]);
    let two = run(&["--threads", "3", "search", "--k-lo", "3", "--k-hi", "5", "--n-hi", "40", "--format", "json"]);
    assert!(one.status.success());
    assert_eq!(one.stdout, two.stdout);
    let a = run(&["--threads", "1", "verify", "thm1.2", "--k-max", "6", "--n-max", "20"]);
    let b = run(&["--threads", "2", "verify", "thm1.2", "--k-max", "6", "--n-max", "20"]);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn colored_counts() {
    assert_eq!(stdout(&run(&["colored", "pk", "--k", "3", "--n", "10"])), "2640\n");
    assert_eq!(stdout(&run(&["colored", "pk", "--k", "1", "--n", "100"])), "190569292\n");
}

#[test]
fn asymptotic_flags_window() {
    let o = run(&["asymptotic", "--n", "100", "--m", "0,60", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v[0]["in_range"], true);
    assert_eq!(v[1]["in_range"], false);
}
