//! End-to-end tests of the command-line interface: exit codes, output
//! shapes, and the generate/construct/check pipeline from the tool's
//! documentation.

use std::path::PathBuf;
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_circtotal"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

fn tmp(name: &str) -> PathBuf {
    let mut p = std::env::temp_dir();
    p.push(format!("circtotal-cli-{}-{name}", std::process::id()));
    p
}

#[test]
fn gen_construct_check_pipeline() {
    let graph = tmp("g32.heg");
    let cert = tmp("g32.pqc");
    let g = run(&[
        "gen", "--family", "gkn", "-k", "3", "-n", "2", "-o",
        graph.to_str().unwrap(),
    ]);
    assert!(g.status.success(), "{}", String::from_utf8_lossy(&g.stderr));

    let c = run(&[
        "construct", "--method", "thm-k3", "-n", "2", "--graph",
        graph.to_str().unwrap(), "-o", cert.to_str().unwrap(),
    ]);
    assert!(c.status.success(), "{}", String::from_utf8_lossy(&c.stderr));

    let chk = run(&["check", graph.to_str().unwrap(), cert.to_str().unwrap()]);
    assert!(chk.status.success());
    assert!(stdout(&chk).contains("valid (13,3)"), "{}", stdout(&chk));
}

#[test]
fn check_rejects_perturbed_certificate() {
    let graph = tmp("c4.heg");
    let cert = tmp("c4.pqc");
    let broken = tmp("c4-broken.pqc");
    assert!(run(&["gen", "--family", "cycle", "-m", "4", "-o", graph.to_str().unwrap()])
        .status
        .success());
    assert!(run(&[
        "construct", "--method", "thm-lim", "-k", "2", "-n", "1", "-o",
        cert.to_str().unwrap(),
    ])
    .status
    .success());

    // gkn(2,1) is C4 but with different labels; against cycle(4) the label
    // sets differ and the check must fail
    let mismatch = run(&["check", graph.to_str().unwrap(), cert.to_str().unwrap()]);
    assert_eq!(mismatch.status.code(), Some(1));
    assert!(stdout(&mismatch).contains("labels"), "{}", stdout(&mismatch));

    // now a colour perturbation on a matching pair of files
    let g2 = tmp("g21.heg");
    assert!(run(&["gen", "--family", "gkn", "-k", "2", "-n", "1", "-o", g2.to_str().unwrap()])
        .status
        .success());
    let ok = run(&["check", g2.to_str().unwrap(), cert.to_str().unwrap()]);
    assert!(ok.status.success(), "{}", stdout(&ok));

    let text = std::fs::read_to_string(&cert).unwrap();
    let mut lines: Vec<String> = text.lines().map(String::from).collect();
    let idx = lines
        .iter()
        .position(|l| l.starts_with("u "))
        .expect("hub line present");
    let old: u32 = lines[idx].split_whitespace().nth(1).unwrap().parse().unwrap();
    lines[idx] = format!("u {}", (old + 1) % 4);
    std::fs::write(&broken, lines.join("\n") + "\n").unwrap();

    let bad = run(&["check", g2.to_str().unwrap(), broken.to_str().unwrap()]);
    assert_eq!(bad.status.code(), Some(1));
    assert!(stdout(&bad).contains("violation"), "{}", stdout(&bad));
}

#[test]
fn chi_reports_exact_value() {
    let graph = tmp("g31.heg");
    assert!(run(&["gen", "--family", "gkn", "-k", "3", "-n", "1", "-o", graph.to_str().unwrap()])
        .status
        .success());
    let out = run(&["chi", graph.to_str().unwrap()]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.starts_with("exact 9/2"), "{text}");
    assert!(text.contains("status exact"), "{text}");
    assert!(text.contains("qmax 14"), "{text}");
}

#[test]
fn feasible_exit_codes() {
    let graph = tmp("c4b.heg");
    assert!(run(&["gen", "--family", "cycle", "-m", "4", "-o", graph.to_str().unwrap()])
        .status
        .success());
    let yes = run(&["feasible", graph.to_str().unwrap(), "-p", "4", "-q", "1"]);
    assert!(yes.status.success());
    assert!(stdout(&yes).contains("feasible (4,1)"));

    let no = run(&["feasible", graph.to_str().unwrap(), "-p", "3", "-q", "1"]);
    assert_eq!(no.status.code(), Some(1));
    assert!(stdout(&no).contains("infeasible (3,1)"));
}

#[test]
fn verify_lemma_all0() {
    let out = run(&["verify-lemma", "all0", "-k", "2"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("holds for k=2"), "{}", stdout(&out));
}

#[test]
fn usage_errors_exit_2() {
    let unknown_family = run(&["gen", "--family", "hypercube", "-o", "x.heg"]);
    assert_eq!(unknown_family.status.code(), Some(2));

    let missing_param = run(&["gen", "--family", "gkn", "-k", "3", "-o", "x.heg"]);
    assert_eq!(missing_param.status.code(), Some(2));

    let missing_file = run(&["chi", "/nonexistent/file.heg"]);
    assert_eq!(missing_file.status.code(), Some(2));
}
