use std::io::Write;
use std::process::{Command, Output};

use tempfile::NamedTempFile;

fn sympro(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_sympro")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn file(text: &str) -> NamedTempFile {
    let mut f = NamedTempFile::new().unwrap();
    f.write_all(text.as_bytes()).unwrap();
    f
}

fn record<'a>(out: &'a str, kind: &str) -> &'a str {
    out.lines().find(|l| l.starts_with(&format!("{kind} "))).unwrap_or_else(|| panic!("no {kind} record in\n{out}"))
}

#[test]
fn realize_sphere_k2() {
    let o = sympro(&["realize", "thmK1", "--base", "sphere", "--k", "2"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(record(&out, "filtration").starts_with("filtration dim=7 "));
    assert_eq!(out.lines().filter(|l| l.starts_with("basis ")).count(), 7);
}

#[test]
fn realize_rejects_bad_input() {
    assert_eq!(sympro(&["realize", "thmK1", "--base", "sphere", "--k", "2", "--N", "1"]).status.code(), Some(2));
    assert_eq!(sympro(&["realize", "thmK1", "--base", "torus", "--k", "2"]).status.code(), Some(2));
    assert_eq!(sympro(&["realize", "thmK2", "--base", "conf", "--xi", "W(1,1)"]).status.code(), Some(2));
    let o = sympro(&["realize", "thmK2", "--base", "conf", "--xi", "W(1,1)+W(1,-1)"]);
    assert_eq!(o.status.code(), Some(0));
}

const HEIS: &str = "name heis3+R\ndim 4\n[1,2] = e3\nomega(1,3) = 1\nomega(2,4) = 1\n";

#[test]
fn fedosov_reports() {
    let h = file(HEIS);
    let o = sympro(&["fedosov", "--algebra", h.path().to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(record(&out, "ricci").contains("zero=true"));
    assert!(record(&out, "series").contains("nilpotent=true"));

    let aff = file("name aff\ndim 2\n[1,2] = e2\nomega(1,2) = 1\n");
    let o = sympro(&["fedosov", "--algebra", aff.path().to_str().unwrap(), "--report", "full"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(record(&out, "ricci").starts_with("ricci value=2/9,0;0,0 "), "{out}");
    assert_eq!(out.lines().filter(|l| l.starts_with("product ")).count(), 4);
    assert_eq!(out.lines().filter(|l| l.starts_with("curvature ")).count(), 1);
}

#[test]
fn fedosov_exit_codes() {
    // omega not closed: a verification failure
    let bad = file("dim 4\n[1,2] = e3\nomega(1,2) = 1\nomega(3,4) = 1\n");
    let o = sympro(&["fedosov", "--algebra", bad.path().to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    assert!(record(&stdout(&o), "algebra").contains("valid=false"));
    // malformed file
    let junk = file("dim 4\n[1,2] = ???\n");
    assert_eq!(sympro(&["fedosov", "--algebra", junk.path().to_str().unwrap()]).status.code(), Some(2));
    assert_eq!(sympro(&["fedosov", "--algebra", "/nonexistent/file"]).status.code(), Some(2));
}

#[test]
fn prolong_and_finite_type() {
    let p1 = file("# Lagrangian stabilizer\np1*q1\np1*q2\np2*q1\np2*q2\np1^2\np1*p2\np2^2\n");
    let path = p1.path().to_str().unwrap();
    let o = sympro(&["prolong", "--gens", path, "--kmax", "2"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(record(&stdout(&o), "chain").contains("dims=7,10,13"));
    let o = sympro(&["finite-type", "--gens", path]);
    assert!(record(&stdout(&o), "finite-type").contains("verdict=infinite"));

    let u2 = file("p1^2 + q1^2 + p2^2 + q2^2\n");
    let o = sympro(&["finite-type", "--gens", u2.path().to_str().unwrap()]);
    let line = stdout(&o);
    assert!(record(&line, "finite-type").contains("verdict=finite"), "{line}");
}

#[test]
fn witness_grid_from_environment() {
    let g = file("p1^2 + p2^2\np1*p2\n");
    let path = g.path().to_str().unwrap();
    let o = Command::new(env!("CARGO_BIN_EXE_sympro"))
        .args(["finite-type", "--gens", path])
        .env("SYMPRO_WITNESS_GRID", "nonsense")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(2));
    let o = Command::new(env!("CARGO_BIN_EXE_sympro"))
        .args(["finite-type", "--gens", path])
        .env("SYMPRO_WITNESS_GRID", "1,-1")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(0));
    assert!(record(&stdout(&o), "finite-type").contains("verdict=infinite"));
}

#[test]
fn catalog_commands() {
    let o = sympro(&["catalog", "list"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.lines().next().unwrap().starts_with("config command=catalog-list "));
    assert!(out.lines().skip(1).all(|l| l.starts_with("entry ")));
    let o = sympro(&["catalog", "verify", "D_{4,12}", "--param", "eps=-1"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(record(&stdout(&o), "verify").contains("status=pass"));
    let o = sympro(&["catalog", "verify", "p1"]);
    assert!(record(&stdout(&o), "verify").contains("verdict=infinite"));
    let o = sympro(&["catalog", "verify", "maximal/s5"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(record(&stdout(&o), "summary").contains("failed=0"));
    let o = sympro(&["catalog", "verify", "p1-table/D_{6,13}", "--param", "a=3"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert_eq!(sympro(&["catalog", "verify", "p1-table/D_{6,13}", "--param", "a=-1"]).status.code(), Some(2));
    assert_eq!(sympro(&["catalog", "verify", "no-such-entry"]).status.code(), Some(2));
}

#[test]
fn ce_h1_command() {
    let o = sympro(&["ce-h1", "--algebra", "p2^2", "--module", "p1*p2; p1*q2"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(record(&out, "h1").starts_with("h1 dim=1 "));
    assert!(record(&out, "cocycle").contains("c(p2^2) = p1*q2"), "{out}");
    assert_eq!(sympro(&["ce-h1", "--algebra", "p2^2", "--module", "p1*q2"]).status.code(), Some(2));
}

#[test]
fn generator_files() {
    let empty = file("# nothing here\n");
    assert_eq!(sympro(&["prolong", "--gens", empty.path().to_str().unwrap()]).status.code(), Some(2));
    let open = file("p1^2\nq1^2\n");
    let o = sympro(&["finite-type", "--gens", open.path().to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8(o.stderr).unwrap().contains("[g0, g1]"));
    let cartan = file("q1*p1\n");
    let o = sympro(&["prolong", "--gens", cartan.path().to_str().unwrap(), "--kmax", "1"]);
    assert!(record(&stdout(&o), "chain").contains("dims=1,0 "));
    let o = sympro(&["finite-type", "--gens", cartan.path().to_str().unwrap()]);
    assert!(record(&stdout(&o), "finite-type").contains("verdict=finite"));
    let square = file("p1^2\n");
    let o = sympro(&["finite-type", "--gens", square.path().to_str().unwrap()]);
    let out = stdout(&o);
    assert!(record(&out, "finite-type").contains("verdict=infinite evidence=\"rank-one witness p1^2\""), "{out}");
}

#[test]
fn reports_are_deterministic_and_echo_config() {
    let args = ["catalog", "verify", "--format", "records"];
    let a = sympro(&args);
    let b = sympro(&args);
    assert_eq!(a.stdout, b.stdout);
    let out = stdout(&a);
    assert!(out.starts_with("config command=catalog-verify name=- params=- grid="));
    let o = sympro(&["realize", "thmK1", "--base", "sl2aff", "--k", "2", "--N", "1", "--truncation", "10"]);
    assert!(stdout(&o).starts_with("config command=realize-thmK1 base=sl2aff k=2 N=1 truncation=10 "));
    assert!(record(&stdout(&o), "area-form").contains("truncation=10 preserved=true"));
    assert_eq!(
        sympro(&["realize", "thmK1", "--base", "sl2aff", "--k", "2", "--truncation", "0"]).status.code(),
        Some(2)
    );
}

#[test]
fn text_format() {
    let o = sympro(&["--format", "text", "realize", "thmK1", "--base", "sphere", "--k", "2"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("\nfiltration\n  dim: 7\n"), "{out}");
}
