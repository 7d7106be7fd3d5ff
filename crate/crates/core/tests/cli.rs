use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use hzcodes::catalog::Catalog;
use hzcodes::format::{parse_hz_code, parse_matrices};
use hzcodes::{LinearCode, Prime};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hzcodes"))
        .args(args)
        .output()
        .unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let p = dir.join(name);
    fs::write(&p, text).unwrap();
    p.to_string_lossy().into_owned()
}

const R2: &str = "H23 2\n2 2 1\n11\n\n3 2 1\n11\n";
const EXAMPLE_FOUR: &str = "H23 4\n2 4 2\n1000\n0100\n\n3 4 2\n1000\n0100\n";

#[test]
fn check_reports_flags() {
    let dir = tempfile::tempdir().unwrap();
    let o = run(&["check", &write(dir.path(), "r2", R2)]);
    assert!(o.status.success());
    let out = stdout(&o);
    assert!(out.contains("SO=yes QSD=yes SD=no nice=no LCD=no"), "{out}");
    assert!(out.contains("cardinality: 6"));

    let o = run(&[
        "check",
        "--euclidean",
        "--words",
        &write(dir.path(), "ex", EXAMPLE_FOUR),
    ]);
    let out = stdout(&o);
    assert!(out.contains("SO=yes QSD=yes"), "{out}");
    assert!(out.contains("euclidean_SO=no"));
    assert_eq!(
        out.lines()
            .filter(|l| l.len() == 4 && l.chars().all(|c| "0abcde".contains(c)))
            .count(),
        36
    );
}

#[test]
fn input_errors_exit_two() {
    let dir = tempfile::tempdir().unwrap();
    let odd = write(dir.path(), "odd", "H23 3\n2 3 0\n\n3 3 0\n");
    let o = run(&["check", &odd]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("odd"));
    assert_eq!(
        run(&["check", &write(dir.path(), "bad", "H23 2\n2 2 1\n21\n")])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(run(&["check", "/nonexistent/file"]).status.code(), Some(2));
    assert_eq!(
        run(&["count-isotropic", "2", "1", "2"]).status.code(),
        Some(2)
    );
    assert_eq!(
        run(&["classify", "--ring", "H23", "--n", "10", "--target", "SD"])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn dual_with_oracle() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("dual.hz");
    let o = run(&[
        "dual",
        "--brute",
        "-o",
        out.to_str().unwrap(),
        &write(dir.path(), "r2", R2),
    ]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("oracle: match"));
    let d = parse_hz_code(&fs::read_to_string(&out).unwrap()).unwrap();
    assert_eq!(d.cardinality(), 18);
    assert!(d.cb().is_full());

    let h32 = write(dir.path(), "h32", "H32 2\n2 2 1\n10\n\n3 2 1\n12\n");
    let o = run(&["dual", "--brute", &h32]);
    assert!(stdout(&o).contains("oracle: match"));
    let d = parse_hz_code(stdout(&o).split("oracle").next().unwrap()).unwrap();
    assert!(d.ca().is_full());
}

#[test]
fn classify_writes_catalog() {
    let dir = tempfile::tempdir().unwrap();
    let la = write(dir.path(), "la", "2 2 1\n10\n\n2 2 1\n11\n");
    let lb = write(dir.path(), "lb", "3 2 1\n10\n\n3 2 1\n11\n\n3 2 1\n12\n");
    let cat = dir.path().join("cat.json");
    let args = [
        "classify",
        "--ring",
        "H23",
        "--n",
        "2",
        "--target",
        "SO",
        "--ca-list",
        &la,
        "--cb-list",
        &lb,
        "--out",
        cat.to_str().unwrap(),
        "--verify",
    ];
    let o = run(&args);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    let out = stdout(&o);
    assert!(out.contains("total: 7"));
    assert!(out.contains("verification: passed"));
    let first = fs::read_to_string(&cat).unwrap();
    let catalog = Catalog::from_json(&first).unwrap();
    assert_eq!(catalog.records.len(), 7);
    assert_eq!(catalog.summary.total, 7);
    let lists = |p: &str| parse_matrices(&fs::read_to_string(p).unwrap()).unwrap();
    catalog.check(&lists(&la), &lists(&lb)).unwrap();

    assert!(run(&args).status.success());
    assert_eq!(fs::read_to_string(&cat).unwrap(), first);
}

#[test]
fn verification_failure_exits_three() {
    let dir = tempfile::tempdir().unwrap();
    // the two binary codes are equivalent, so the records are too
    let la = write(dir.path(), "la", "2 2 1\n10\n\n2 2 1\n01\n");
    let lb = write(dir.path(), "lb", "3 2 1\n11\n");
    let o = run(&[
        "classify",
        "--ring",
        "H23",
        "--n",
        "2",
        "--target",
        "SO",
        "--ca-list",
        &la,
        "--cb-list",
        &lb,
        "--verify",
    ]);
    assert_eq!(o.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&o.stderr).contains("equivalent"));
}

#[test]
fn classify_with_empty_list() {
    let dir = tempfile::tempdir().unwrap();
    let la = write(dir.path(), "la", "2 2 1\n11\n");
    let lb = write(dir.path(), "lb", "# nothing\n");
    let cat = dir.path().join("cat.json");
    let o = run(&[
        "classify",
        "--ring",
        "H23",
        "--n",
        "2",
        "--target",
        "SO",
        "--ca-list",
        &la,
        "--cb-list",
        &lb,
        "--out",
        cat.to_str().unwrap(),
    ]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("total: 0"));
    let catalog = Catalog::from_json(&fs::read_to_string(&cat).unwrap()).unwrap();
    assert!(catalog.records.is_empty());
    assert_eq!(catalog.meta.cb_list.count, 0);
}

#[test]
fn classify_generated_lists() {
    let o = run(&[
        "classify", "--ring", "H32", "--n", "4", "--target", "QSD", "--verify",
    ]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("verification: passed"));

    let dir = tempfile::tempdir().unwrap();
    let (ca, cb) = (dir.path().join("ca"), dir.path().join("cb"));
    let o = run(&[
        "lists",
        "--ring",
        "H23",
        "--n",
        "4",
        "--target",
        "SD",
        "--ca-out",
        ca.to_str().unwrap(),
        "--cb-out",
        cb.to_str().unwrap(),
    ]);
    assert!(o.status.success());
    let cb = parse_matrices(&fs::read_to_string(cb).unwrap()).unwrap();
    assert_eq!(cb, vec![LinearCode::full(Prime::Three, 4)]);
}

#[test]
fn count_isotropic_values() {
    for (args, expected) in [
        (["2", "2", "2"], "15"),
        (["3", "1", "1"], "4"),
        (["2", "3", "0"], "1"),
    ] {
        let mut full = vec!["count-isotropic"];
        full.extend(args);
        full.push("--enumerate");
        let o = run(&full);
        assert!(o.status.success());
        assert_eq!(stdout(&o).lines().next(), Some(expected));
    }
}

#[test]
fn aut_orders() {
    let dir = tempfile::tempdir().unwrap();
    let cases = [
        ("2 2 1\n10\n", "order: 1"),
        ("3 2 1\n11\n", "order: 2"),
        ("2 4 4\n1000\n0100\n0010\n0001\n", "order: 24"),
    ];
    for (i, (text, expected)) in cases.iter().enumerate() {
        let o = run(&["aut", &write(dir.path(), &format!("c{i}"), text)]);
        assert!(o.status.success());
        assert!(stdout(&o).contains(expected), "{}", stdout(&o));
    }
}
