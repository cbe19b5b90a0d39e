use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn hl(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hl")).args(args).output().expect("run hl")
}

fn hl_with_fixtures(dir: &Path, args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hl")).env("HL_FIXTURE_DIR", dir).args(args).output().expect("run hl")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn scratch_dir(tag: &str) -> PathBuf {
    let d = std::env::temp_dir().join(format!("hl-cli-{tag}-{}", std::process::id()));
    let _ = std::fs::remove_dir_all(&d);
    std::fs::create_dir_all(&d).unwrap();
    d
}

fn shipped() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("fixtures")
}

#[test]
fn genus1_poincare_row() {
    let o = hl(&["closed-table", "--genus", "1", "--max-arity", "3", "--basis", "schur", "--form", "poincare", "--format", "text"]);
    assert!(o.status.success());
    let out = stdout(&o);
    assert!(out.lines().any(|l| l == "(0,3): (t^4+t^2)s_{2,1} + (t^6+2t^4+2t^2+1)s_3"), "{out}");
}

#[test]
fn genus2_weight0_numeric() {
    let o = hl(&["open-table", "--genus", "2", "--max-arity", "5", "--weight0", "--form", "numeric", "--format", "csv"]);
    assert!(o.status.success());
    assert!(stdout(&o).lines().any(|l| l == "1,4,-3"));
}

#[test]
fn latex_uses_factor_superscripts() {
    let o = hl(&["closed-table", "--genus", "1", "--max-arity", "3", "--form", "poincare", "--format", "latex"]);
    let out = stdout(&o);
    assert!(out.contains("$(1,2)$ & $(t^{4}+t^{2})s_{1}^{(1)}s_{1,1}^{(2)} + (t^{6}+4t^{4}+4t^{2}+1)s_{1}^{(1)}s_{2}^{(2)}$ \\\\"), "{out}");
}

#[test]
fn rendering_is_deterministic() {
    let args = ["closed-table", "--genus", "1", "--max-arity", "6", "--basis", "power", "--format", "csv"];
    assert_eq!(stdout(&hl(&args)), stdout(&hl(&args)));
}

#[test]
fn euler_genfun_values() {
    let out = stdout(&hl(&["euler-genfun", "--genus", "1", "--order", "10"]));
    assert!(out.lines().any(|l| l == "10,232076,16275872"), "{out}");
}

#[test]
fn slice_and_tropical() {
    let o = hl(&["slice-n1", "--genus", "1", "--m", "1", "--variant", "closed"]);
    assert_eq!(stdout(&o).trim(), "(1,1): (u^2v^2+2uv+1)s_1^{(1)}s_1^{(2)}");
    let o = hl(&["tropical", "--genus", "0", "--m", "2", "--n", "2"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(hl(&["tropical", "--genus", "0", "--m", "3", "--n", "2"]).status.success());
}

#[test]
fn oracle_compare_table() {
    let o = hl(&["oracle-compare", "--genus", "2", "--max-arity", "5"]);
    assert!(o.status.success());
    let out = stdout(&o);
    assert!(out.lines().all(|l| l.ends_with("PASS")));
    assert!(out.lines().any(|l| l == "(2,3) PASS"));
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(hl(&["closed-table", "--genus", "1"]).status.code(), Some(2));
    assert_eq!(hl(&["closed-table", "--genus", "1", "--max-arity", "3", "--basis", "monomial"]).status.code(), Some(2));
    assert_eq!(hl(&["closed-table", "--genus", "3", "--max-arity", "3"]).status.code(), Some(2));
    assert_eq!(hl(&["closed-table", "--genus", "1", "--max-arity", "11", "--form", "poincare"]).status.code(), Some(2));
    assert_eq!(hl(&["open-table", "--genus", "1", "--max-arity", "3", "--form", "poincare"]).status.code(), Some(2));
    assert_eq!(hl(&["oracle-compare", "--genus", "1", "--max-arity", "8"]).status.code(), Some(2));
    assert_eq!(hl(&["verify", "--suite", "everything"]).status.code(), Some(2));
}

#[test]
fn verify_fixtures_passes() {
    let o = hl(&["verify", "--suite", "fixtures"]);
    assert!(o.status.success(), "{}", stdout(&o));
}

#[test]
fn missing_fixture_dir_fails() {
    let d = scratch_dir("empty");
    assert_eq!(hl_with_fixtures(&d, &["verify", "--suite", "fixtures"]).status.code(), Some(1));
}

#[test]
fn corrupted_fixture_detected() {
    let d = scratch_dir("corrupt");
    for e in std::fs::read_dir(shipped()).unwrap() {
        let p = e.unwrap().path();
        std::fs::copy(&p, d.join(p.file_name().unwrap())).unwrap();
    }
    let path = d.join("b1bar.fix");
    let text = std::fs::read_to_string(&path).unwrap();
    let bad = text.replacen("term n=4 lambda=[1,1,1,1] poly=", "term n=4 lambda=[1,1,1,1] poly=1*u^0*v^0+", 1);
    assert_ne!(bad, text);
    std::fs::write(&path, bad).unwrap();
    let o = hl_with_fixtures(&d, &["verify", "--suite", "fixtures"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("FAIL genus-1 closed Euler characteristics"), "{}", stdout(&o));
}
