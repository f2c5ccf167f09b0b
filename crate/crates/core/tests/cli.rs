use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::{Command, Stdio};

use khrot::bracket::unnormalized_jones;
use khrot::cli::load_diagram;
use khrot::khovanov::GradedTable;
use khrot::linkdiag::gen::braid_closure;
use tempfile::TempDir;

const TREFOIL: &str = "PD[X[1,5,2,4],X[3,1,4,6],X[5,3,6,2]]";

fn run(args: &[&str]) -> (i32, String, String) {
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let code = khrot::cli::run(std::iter::once("khrot").chain(args.iter().copied()), &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn write(dir: &TempDir, name: &str, text: &str) -> PathBuf {
    let p = dir.path().join(name);
    std::fs::write(&p, text).unwrap();
    p
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn unknot_has_two_generators() {
    let dir = TempDir::new().unwrap();
    let unknot = write(&dir, "unknot.pd", "PD[X[1,2,2,1]]");
    for ring in ["q", "z", "f2", "f7"] {
        let (code, out, _) = run(&["kh", s(&unknot), "--ring", ring, "--format", "csv"]);
        assert_eq!(code, 0);
        let rows: Vec<&str> = out.lines().skip(1).collect();
        assert_eq!(rows, ["0,-1,1,", "0,1,1,"], "{ring}");
    }
}

#[test]
fn jones_agrees_with_euler_characteristic() {
    let dir = TempDir::new().unwrap();
    let pd = write(&dir, "trefoil.pd", TREFOIL);
    let (code, out, _) = run(&["kh", s(&pd), "--format", "json"]);
    assert_eq!(code, 0);
    let table = GradedTable::from_json(&out).unwrap();
    let d = load_diagram(TREFOIL).unwrap();
    assert_eq!(table.euler_characteristic(), unnormalized_jones(&d));

    let (code, out, _) = run(&["jones", s(&pd), "--format", "json"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["unnormalized"], serde_json::to_value(unnormalized_jones(&d).to_json_value("q")).unwrap());
    let (_, text, _) = run(&["jones", s(&pd)]);
    assert!(text.starts_with("bracket: "));
    assert!(text.contains("reduced (t): "));
}

#[test]
fn json_tables_round_trip_over_z() {
    let dir = TempDir::new().unwrap();
    let d = braid_closure(3, &[1, -2, 1, -2, 1, 1]).unwrap();
    let pd = write(&dir, "d.json", &d.to_json());
    let (code, out, _) = run(&["kh", s(&pd), "--ring", "z", "--format", "json"]);
    assert_eq!(code, 0);
    let t = GradedTable::from_json(&out).unwrap();
    assert_eq!(t.to_json() + "\n", out);
}

#[test]
fn output_does_not_depend_on_thread_count() {
    let dir = TempDir::new().unwrap();
    let d = braid_closure(4, &[1, 2, -3, 1, 2, 2, -3, 1, -2, 3, 3, 1, 2, -1, -3, 2, 1, -2]).unwrap();
    let pd = write(&dir, "d.pd", &d.to_pd());
    let outs: Vec<String> = ["1", "3", "8"]
        .iter()
        .map(|n| {
            let (code, out, _) = run(&["--threads", n, "kh", s(&pd), "--ring", "z", "--engine", "scan"]);
            assert_eq!(code, 0);
            out
        })
        .collect();
    assert!(outs.windows(2).all(|w| w[0] == w[1]));
}

#[test]
fn input_errors_exit_2() {
    let dir = TempDir::new().unwrap();
    let bad = write(&dir, "bad.pd", "PD[X[1,2,3,4]]");
    assert_eq!(run(&["kh", s(&bad)]).0, 2);
    let trefoil = write(&dir, "t.pd", TREFOIL);
    assert_eq!(run(&["kh", s(&trefoil), "--ring", "f6"]).0, 2);
    assert_eq!(run(&["kh", s(&trefoil), "--engine", "quick"]).0, 2);
    let big = braid_closure(2, &[1; 15]).unwrap();
    let big = write(&dir, "big.pd", &big.to_pd());
    let (code, _, err) = run(&["kh", s(&big), "--engine", "naive"]);
    assert_eq!(code, 2);
    assert!(err.contains("naive"));
    assert_eq!(run(&["kh", s(&big), "--engine", "scan"]).0, 0);
}

#[test]
fn compare_reports_first_difference() {
    let dir = TempDir::new().unwrap();
    let right = write(&dir, "r.pd", TREFOIL);
    let left = write(&dir, "l.pd", &load_diagram(TREFOIL).unwrap().mirror().to_pd());
    let (code, out, _) = run(&["compare", s(&right), s(&right), "--expect-equal"]);
    assert_eq!(code, 0);
    assert!(out.starts_with("differing cells: 0"));
    let (code, out, _) = run(&["compare", s(&right), s(&left), "--expect-equal", "--format", "json"]);
    assert_eq!(code, 1);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["dominance"], "Incomparable");
    assert!(v["first_difference"].is_object());
}

#[test]
fn rotant_commands() {
    let dir = TempDir::new().unwrap();
    let (code, fixture, _) = run(&["rotant", "sample-fixture"]);
    assert_eq!(code, 0);
    let f = write(&dir, "fixture.json", &fixture);

    let (code, pd, _) = run(&["rotant", "build", "--fixture", s(&f), "--n", "0"]);
    assert_eq!(code, 0);
    let (code, pd_r, _) = run(&["rotant", "build", "--fixture", s(&f), "--n", "0", "--flip"]);
    assert_eq!(code, 0);
    let strip = |t: &str| t.lines().filter(|l| !l.starts_with('#')).collect::<String>();
    let (d, dr) = (load_diagram(&strip(&pd)).unwrap(), load_diagram(&strip(&pd_r)).unwrap());
    assert_eq!(d.num_crossings(), dr.num_crossings());
    assert_eq!(unnormalized_jones(&d), unnormalized_jones(&dr));

    let left = write(&dir, "left.pd", &braid_closure(2, &[-1, -1, -1]).unwrap().to_pd());
    let (code, out, _) = run(&["rotant", "les", s(&left), "--crossing", "1", "--ring", "f2"]);
    assert_eq!(code, 0, "{out}");
    assert!(out.ends_with("result: ok\n"));
    let right = write(&dir, "right.pd", TREFOIL);
    let (code, _, err) = run(&["rotant", "les", s(&right), "--crossing", "0"]);
    assert_eq!(code, 2);
    assert!(err.contains("positive"));

    let (code, out, _) = run(&["rotant", "chain", "--nmax", "40"]);
    assert_eq!(code, 0);
    assert_eq!(out.lines().filter(|l| l.ends_with("\ttrue")).count(), 2 * 41);
    assert_eq!(run(&["rotant", "chain", "--nmax", "3", "--compute"]).0, 2);
}

#[test]
fn binary_reads_stdin() {
    let mut child = Command::new(env!("CARGO_BIN_EXE_khrot"))
        .args(["kh", "-", "--ring", "z"])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(TREFOIL.as_bytes()).unwrap();
    let out = child.wait_with_output().unwrap();
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.starts_with("Kh over Z\n"));
    assert!(text.contains("Z2"));

    let status = Command::new(env!("CARGO_BIN_EXE_khrot")).arg("nonsense").stderr(Stdio::null()).status().unwrap();
    assert_eq!(status.code(), Some(2));
}
