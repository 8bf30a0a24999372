use std::process::{Command, Output};

fn qpair(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qpair")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn eval_prints_normal_form() {
    let o = qpair(&["eval", "--type", "A2", "e1 f1"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o).trim(), "(-q[1])/(q[2] - 1) k[-1,0] + (q[1])/(q[2] - 1) k[1,0] + (1)/(1) f1 e1");
}

#[test]
fn tau_and_braid() {
    let o = qpair(&["tau", "--type", "A1", "e1", "f1"]);
    assert_eq!(stdout(&o).trim(), "(-q[1])/(q[2] - 1)");
    let o = qpair(&["braid", "--type", "A2", "--index", "1", "e2"]);
    assert_eq!(stdout(&o).trim(), "(1)/(1) e1 e2 + (-q[-1])/(1) e2 e1");
    let back = qpair(&["braid", "--type", "A2", "--index", "1", "--inverse", "e1 e2 - q^-1 e2 e1"]);
    assert!(back.status.success());
    assert!(!qpair(&["braid", "--type", "A2", "--index", "3", "e1"]).status.success());
}

#[test]
fn gram_lines_are_golden() {
    let o = qpair(&["gram", "--type", "A2", "--weight", "1,1"]);
    let want = "\
[1,1]; e[1 2]; f[1 2]; (q[2])/(q[4] - 2q[2] + 1)
[1,1]; e[1 2]; f[2 1]; (q[1])/(q[4] - 2q[2] + 1)
[1,1]; e[2 1]; f[1 2]; (q[1])/(q[4] - 2q[2] + 1)
[1,1]; e[2 1]; f[2 1]; (q[2])/(q[4] - 2q[2] + 1)
";
    assert_eq!(stdout(&o), want);
}

#[test]
fn module_dump_lists_basis_and_matrices() {
    let o = qpair(&["module", "dump", "--type", "A1", "--highest", "1"]);
    let text = stdout(&o);
    assert!(text.starts_with("type A1 dim 2\n0: v weight <1>\n1: f1 v weight <-1>\ne1:\n"));
    assert!(!qpair(&["module", "dump", "--type", "A1", "--highest", "-1"]).status.success());
}

#[test]
fn verify_reports_are_deterministic() {
    let args = ["verify", "--type", "B2", "--checks", "theorem,prop_DS,hopf_axioms", "--samples", "20", "--no-timings", "--format", "json"];
    let a = qpair(&args);
    assert!(a.status.success());
    let mut seq = args.to_vec();
    seq.push("--sequential");
    let b = qpair(&seq);
    assert_eq!(a.stdout, b.stdout);
    let v: serde_json::Value = serde_json::from_slice(&a.stdout).unwrap();
    let checks = v["checks"].as_array().unwrap();
    assert_eq!(checks.len(), 3);
    assert!(checks.iter().all(|c| c["status"] == "pass" && c.get("millis").is_none() && c["instances"].as_u64().unwrap() > 0));
    assert_eq!(v["config"]["cartan_type"], "B2");
}

#[test]
fn verify_exit_codes() {
    let o = qpair(&["verify", "--type", "A1", "--checks", "nope"]);
    assert_eq!(o.status.code(), Some(2));
    let o = qpair(&["verify", "--type", "A1", "--checks", "theorem,gauss_binomial"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("PASS theorem"));
    assert_eq!(qpair(&["verify"]).status.code(), Some(2));
}

fn gcm_file(tag: &str, text: &str) -> std::path::PathBuf {
    let path = std::env::temp_dir().join(format!("qpair-cli-{tag}-{}.gcm", std::process::id()));
    std::fs::write(&path, text).unwrap();
    path
}

#[test]
fn verify_reads_matrix_file() {
    let path = gcm_file("b2", "2\n2 -1\n-2 2\n");
    let o = qpair(&["verify", "--gcm", path.to_str().unwrap(), "--checks", "theorem,serre_radical", "--max-height", "4"]);
    std::fs::remove_file(&path).ok();
    assert!(o.status.success(), "{}", stdout(&o));
}

#[test]
fn affine_matrix_runs_algebra_checks_and_rejects_modules() {
    let path = gcm_file("affine", "2\n2 -2\n-2 2\n");
    let p = path.to_str().unwrap();
    let o = qpair(&["verify", "--gcm", p, "--checks", "theorem,serre_radical,lem_ten", "--max-height", "4", "--theorem-height", "4"]);
    assert!(o.status.success(), "{}", stdout(&o));
    let o = qpair(&["verify", "--gcm", p, "--checks", "prop_T"]);
    std::fs::remove_file(&path).ok();
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("module construction"));
}
