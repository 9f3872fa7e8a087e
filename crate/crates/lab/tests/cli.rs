use std::path::Path;
use std::process::{Command, Output};

use prodap_lab::edgelist::read_edge_list;

fn prodap(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_prodap"))
        .args(args)
        .env_remove("PRODAP_SIEVE_CACHE")
        .output()
        .unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

/// Rows of the CSV body as header-keyed maps.
fn rows(text: &str) -> Vec<Vec<(String, String)>> {
    let body: String = text
        .lines()
        .filter(|l| !l.starts_with('#'))
        .map(|l| format!("{l}\n"))
        .collect();
    let mut rdr = csv::Reader::from_reader(body.as_bytes());
    let header: Vec<String> = rdr.headers().unwrap().iter().map(String::from).collect();
    rdr.records()
        .map(|r| {
            header
                .iter()
                .cloned()
                .zip(r.unwrap().iter().map(String::from))
                .collect()
        })
        .collect()
}

fn field<'a>(row: &'a [(String, String)], name: &str) -> &'a str {
    &row.iter()
        .find(|(k, _)| k == name)
        .unwrap_or_else(|| panic!("no column {name}"))
        .1
}

#[test]
fn eliminate_small_progression() {
    let o = prodap(&["eliminate", "--r", "1", "--d", "1", "--N", "5"]);
    assert_eq!(o.status.code(), Some(0));
    let rows = rows(&stdout(&o));
    assert_eq!(rows.len(), 1);
    assert_eq!(field(&rows[0], "M"), "3");
    assert_eq!(field(&rows[0], "holds"), "true");
}

#[test]
fn cheb_counts_primes_with_roots() {
    let o = prodap(&["cheb", "--poly", "1,0,1", "--x", "100"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(
        text.lines()
            .any(|l| l.starts_with("#") && l.split_whitespace().any(|w| w == "pi_P=11")),
        "{text}"
    );
    let rows = rows(&text);
    assert_eq!(rows.len(), 25);
    assert_eq!(field(&rows[0], "ramified"), "true");
}

#[test]
fn cheb_accepts_negative_coefficients() {
    let o = prodap(&["cheb", "--poly", "-2,0,0,1", "--x", "50"]);
    assert_eq!(
        o.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&o.stderr)
    );
}

#[test]
fn bounds_length_verdict() {
    let o = prodap(&[
        "bounds", "--lemma1", "--k", "1", "--n", "10", "--N", "100", "--r", "1", "--d", "1",
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(rows(&stdout(&o)).len(), 1);
}

#[test]
fn usage_errors_exit_two() {
    let o = prodap(&["frobnicate"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("Usage"));
    assert_eq!(prodap(&[]).status.code(), Some(2));
    assert_eq!(prodap(&["cheb", "--poly", "1,0,1"]).status.code(), Some(2));
    // reducible input is rejected as bad input
    assert_eq!(
        prodap(&["cheb", "--poly", "-1,0,1", "--x", "10"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        prodap(&["bounds", "--lemma1", "--remark"]).status.code(),
        Some(2)
    );
}

#[test]
fn every_subcommand_has_help() {
    for sub in [
        "ap-search",
        "eliminate",
        "dichotomy",
        "select",
        "prop1",
        "graph",
        "cycles",
        "cheb",
        "cover",
        "bounds",
    ] {
        let o = prodap(&[sub, "--help"]);
        assert_eq!(o.status.code(), Some(0), "{sub}");
        assert!(stdout(&o).len() > 40, "{sub}");
    }
}

#[test]
fn graph_edge_list_round_trips_through_out() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("g.txt");
    let o = prodap(&[
        "graph",
        "--a",
        "6,10,15,30",
        "--b",
        "2,3,5,6",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert!(o.stdout.is_empty());
    let text = std::fs::read_to_string(&path).unwrap();
    let (vertices, edges) = read_edge_list(&text).unwrap();
    assert_eq!(vertices, 8);
    assert_eq!(edges.len(), 4);
    for e in &edges {
        assert!(e.b1 <= e.b2);
        assert_eq!(e.b1 * e.b2, e.label);
    }
}

#[test]
fn seeded_output_is_reproducible() {
    let a = prodap(&["ap-search", "--sets", "5", "--seed", "3"]);
    let b = prodap(&["ap-search", "--sets", "5", "--seed", "3", "--threads", "2"]);
    let c = prodap(&["ap-search", "--sets", "5", "--seed", "4"]);
    assert_eq!(a.stdout, b.stdout);
    assert_ne!(a.stdout, c.stdout);
}

#[test]
fn sieve_cache_directory_is_used() {
    let dir = tempfile::tempdir().unwrap();
    let run = || {
        Command::new(env!("CARGO_BIN_EXE_prodap"))
            .args(["cheb", "--poly", "1,0,1", "--x", "1000"])
            .env("PRODAP_SIEVE_CACHE", dir.path())
            .output()
            .unwrap()
    };
    let first = run();
    let cached = Path::new(dir.path()).join("primes-1000.bin");
    assert!(cached.exists());
    assert_eq!(std::fs::metadata(&cached).unwrap().len(), 168 * 8);
    let second = run();
    assert_eq!(first.stdout, second.stdout);
}

#[test]
fn theorem_mode_reports_the_relation() {
    let o = prodap(&["cycles", "--sqrt", "2", "--N", "46", "--k", "3"]);
    assert_eq!(o.status.code(), Some(0));
    let rows = rows(&stdout(&o));
    assert_eq!(field(&rows[0], "vanishes"), "true");
}
