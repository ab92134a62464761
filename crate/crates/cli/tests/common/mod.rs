//! Golden command-line cases shared by the golden-file and acceptance
//! suites.

use std::path::PathBuf;

pub fn bin() -> &'static str {
    env!("CARGO_BIN_EXE_nearsq")
}

pub fn golden_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/golden")
}

pub fn golden(name: &str) -> Vec<u8> {
    let path = golden_dir().join(name);
    std::fs::read(&path).unwrap_or_else(|e| panic!("missing golden {name}: {e}"))
}

/// Every golden case: (argv, file the stdout bytes are frozen in).
pub fn cases() -> Vec<(Vec<String>, &'static str)> {
    let s = |args: &[&str]| args.iter().map(|a| a.to_string()).collect::<Vec<_>>();
    let fit_input = golden_dir().join("scan_brute.csv");
    vec![
        (
            s(&["find", "--x", "997", "--theta", "0.25", "--c2", "2", "--method", "brute"]),
            "find_brute_997.csv",
        ),
        (
            s(&[
                "find", "--x", "997", "--theta", "0.25", "--c2", "2", "--method", "brute",
                "--format", "json",
            ]),
            "find_brute_997.jsonl",
        ),
        (
            s(&["find", "--x", "997", "--theta", "0.3", "--method", "conditional"]),
            "find_conditional_997.csv",
        ),
        (
            s(&[
                "scan", "--x-from", "10000", "--x-to", "1000000", "--points", "5", "--theta",
                "0.25", "--c2", "2", "--method", "brute",
            ]),
            "scan_brute.csv",
        ),
        (
            s(&[
                "scan", "--x-from", "10000", "--x-to", "1000000", "--points", "5", "--theta",
                "0.25", "--c2", "2", "--method", "dsearch", "--format", "json",
            ]),
            "scan_dsearch.jsonl",
        ),
        (
            s(&["quarter", "--k", "100", "--theta", "0.1", "--c2", "1"]),
            "quarter_100.csv",
        ),
        (
            s(&["product-gap", "--x", "10000", "--theta", "0.25", "--c", "1"]),
            "product_gap_10000.csv",
        ),
        (s(&["multtable", "--n", "10"]), "multtable_10.csv"),
        (
            s(&["two-squares", "near", "--x", "103", "--d-max", "5"]),
            "two_squares_near_103.csv",
        ),
        (
            s(&["two-squares", "gap", "--lo", "1", "--hi", "100"]),
            "two_squares_gap_100.csv",
        ),
        (
            s(&["salie-probe", "--q-max", "15", "--a-max", "2", "--eps", "0.1"]),
            "salie_probe_small.csv",
        ),
        (
            s(&[
                "fractional-count", "--p", "1", "--q", "5", "--lambda", "0", "--delta", "0.1",
                "--n", "10",
            ]),
            "fractional_count.csv",
        ),
        (
            s(&["fit", "--input", fit_input.to_str().unwrap()]),
            "fit_scan.csv",
        ),
    ]
}
