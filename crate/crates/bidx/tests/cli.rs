//! Exit-code contract and output determinism of the command line.

use std::fs;
use std::path::PathBuf;

use bidx_core::{canonical_form, make_family, FamilyId, FamilyTag};

fn run(args: &[&str]) -> i32 {
    let argv: Vec<String> = std::iter::once("bidx")
        .chain(args.iter().copied())
        .map(String::from)
        .collect();
    bidx::run(argv)
}

fn tmp(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("bidx-cli-{}", std::process::id()));
    fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

#[test]
fn compute_chi2_on_k3_prints_48() {
    let out = tmp("k3.txt");
    let code = run(&[
        "compute", "--index", "chi", "--alpha", "2", "--graph6", "Bw",
        "--out", out.to_str().unwrap(),
    ]);
    assert_eq!(code, 0);
    assert_eq!(fs::read_to_string(&out).unwrap(), "48\n");
}

#[test]
fn compute_reads_edge_list_files() {
    let input = tmp("p4.txt");
    fs::write(&input, "n=4\n0 1\n1 2\n2 3\n").unwrap();
    let out = tmp("p4-m1.txt");
    let code = run(&[
        "compute", "--index", "m1", "--in", input.to_str().unwrap(),
        "--out", out.to_str().unwrap(),
    ]);
    assert_eq!(code, 0);
    assert_eq!(fs::read_to_string(&out).unwrap(), "10\n");
}

#[test]
fn search_sei_unicyclic_finds_s_plus() {
    let out = tmp("sei.g6");
    let code = run(&[
        "search", "--n", "6", "--m", "6", "--index", "sei", "--a", "2",
        "--direction", "max", "--format", "graph6", "--out", out.to_str().unwrap(),
    ]);
    assert_eq!(code, 0);
    let splus = make_family(FamilyId::new(FamilyTag::SPlus, 6)).unwrap();
    let expected = format!("{}\n", canonical_form(&splus).unwrap());
    assert_eq!(fs::read_to_string(&out).unwrap(), expected);
}

#[test]
fn usage_and_input_errors_exit_2() {
    // Unknown flag.
    assert_eq!(run(&["search", "--bogus"]), 2);
    // Malformed graph6.
    assert_eq!(run(&["compute", "--index", "m1", "--graph6", "B"]), 2);
    // Missing index parameter.
    assert_eq!(run(&["compute", "--index", "chi", "--graph6", "Bw"]), 2);
    // Infeasible (n, m).
    assert_eq!(run(&["search", "--n", "5", "--m", "3", "--index", "m1"]), 2);
    // Both graph sources at once.
    assert_eq!(run(&[
        "compute", "--index", "m1", "--graph6", "Bw", "--in", "/dev/null",
    ]), 2);
}

#[test]
fn failed_verification_exits_1() {
    let out = tmp("lemma2-half.txt");
    // The chi alpha = 0.5 hypotheses fail on the certificate grid.
    let code = run(&[
        "verify", "--theorem", "lemma2", "--n-min", "4", "--n-max", "5",
        "--alphas", "0.5", "--grid-bound", "6", "--out", out.to_str().unwrap(),
    ]);
    assert_eq!(code, 1);
    let text = fs::read_to_string(&out).unwrap();
    assert!(text.contains("counterexample (x,c,t,y)=(2,2,1,1)"), "{text}");
}

#[test]
fn verify_output_is_identical_across_worker_counts() {
    let mut outputs = Vec::new();
    for workers in ["1", "4"] {
        let out = tmp(&format!("thm6-w{workers}.csv"));
        let code = run(&[
            "verify", "--theorem", "thm6", "--n-min", "5", "--n-max", "7",
            "--workers", workers, "--format", "csv", "--out", out.to_str().unwrap(),
        ]);
        assert_eq!(code, 0);
        outputs.push(fs::read(&out).unwrap());
    }
    assert_eq!(outputs[0], outputs[1]);
}

#[test]
fn enumerate_streams_sorted_graph6() {
    let out = tmp("trees5.g6");
    let code = run(&[
        "enumerate", "--n", "5", "--m", "4", "--out", out.to_str().unwrap(),
    ]);
    assert_eq!(code, 0);
    let text = fs::read_to_string(&out).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 3);
    let mut sorted = lines.clone();
    sorted.sort();
    assert_eq!(lines, sorted);
}

#[test]
fn families_lists_admissible_tags() {
    let out = tmp("families5.txt");
    let code = run(&["families", "--n", "5", "--out", out.to_str().unwrap()]);
    assert_eq!(code, 0);
    let text = fs::read_to_string(&out).unwrap();
    assert!(text.contains("s\t"));
    assert!(text.contains("g5\t"));
    // Tetracyclic K_{1,4} remainder needs n >= 6.
    assert!(!text.contains("h4\t"));
}
