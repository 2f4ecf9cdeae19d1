use std::io::Write;
use std::process::{Command, Output, Stdio};

fn quatinv(args: &[&str], stdin: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_quatinv"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child
        .stdin
        .take()
        .unwrap()
        .write_all(stdin.as_bytes())
        .unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

#[test]
fn involute_quaternion_from_stdin() {
    let o = quatinv(&["involute", "--axis", "1,0,0"], "1,2,3,4\n");
    assert!(o.status.success(), "{}", stderr(&o));
    assert_eq!(stdout(&o), "1,2,-3,-4\n");
}

#[test]
fn involute_vector_kind() {
    let o = quatinv(
        &["involute", "--kind", "vector", "--axis", "1,0,0"],
        "1,2,3\n1,0,0\n",
    );
    assert_eq!(stdout(&o), "1,-2,-3\n1,0,0\n");
}

#[test]
fn files_in_and_out() {
    let dir = tempfile::tempdir().unwrap();
    let input = dir.path().join("in.csv");
    let output = dir.path().join("out.csv");
    std::fs::write(&input, "# points\n1,2,0\n").unwrap();
    let o = quatinv(
        &[
            "project",
            "--axis",
            "1,0,0",
            "--input",
            input.to_str().unwrap(),
            "--output",
            output.to_str().unwrap(),
        ],
        "",
    );
    assert!(o.status.success(), "{}", stderr(&o));
    assert_eq!(stdout(&o), "");
    assert_eq!(std::fs::read_to_string(&output).unwrap(), "1,0,0,0,2,0\n");
}

#[test]
fn rotate_reports_axis_on_stderr_only() {
    let s = std::f64::consts::FRAC_1_SQRT_2.to_string();
    let b = format!("{s},{s},0");
    let o = quatinv(&["rotate", "--axis", "1,0,0", "--axis-b", &b], "0,0,1\n");
    assert!(o.status.success());
    let row: Vec<f64> = stdout(&o)
        .trim()
        .split(',')
        .map(|f| f.parse().unwrap())
        .collect();
    assert_eq!(row.len(), 3);
    assert!(row[0].abs() < 1e-15 && row[1].abs() < 1e-15 && (row[2] - 1.0).abs() < 1e-15);
    assert!(stderr(&o).contains("rotation axis 0,0,1"));
}

#[test]
fn near_parallel_axes_warn_but_process() {
    let o = quatinv(
        &["rotate", "--axis", "0,1,0", "--axis-b", "0,1,0"],
        "1,2,3\n4,5,6\n",
    );
    assert!(o.status.success());
    assert_eq!(stdout(&o), "1,2,3\n4,5,6\n");
    assert!(stderr(&o).contains("warning"));
}

#[test]
fn decompose_with_check() {
    let o = quatinv(
        &["decompose", "--axis", "1,0,0", "--check"],
        "1,2,3,4\n5,0,0,0\n",
    );
    assert!(o.status.success(), "{}", stderr(&o));
    let out = stdout(&o);
    let rows: Vec<_> = out.lines().filter(|l| !l.starts_with('#')).collect();
    assert_eq!(rows, ["1,2,3,4", "5,0,0,0"]);
    assert!(out.starts_with("# triad nu1=1,0,0 nu2=0,1,0 nu3=0,0,1"));
}

#[test]
fn usage_errors_exit_2() {
    for args in [
        &["verify", "--trials", "0"][..],
        &["involute", "--axis", "1,1,0"],
        &["involute", "--axis", "0,0,0"],
        &["rotate", "--axis", "1,0,0"],
        &["project"],
        &["involute", "--axis", "1,0,0", "--kind", "matrix"],
    ] {
        let o = quatinv(args, "");
        assert_eq!(o.status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn malformed_row_exits_2_with_line_number() {
    let o = quatinv(
        &["involute", "--axis", "1,0,0"],
        "# c\n1,2,3,4\n1,2,three,4\n",
    );
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("line 3"), "{}", stderr(&o));

    let o = quatinv(
        &["involute", "--kind", "vector", "--axis", "1,0,0"],
        "1,2,3,4\n",
    );
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("line 1"));
}

#[test]
fn missing_input_file_exits_2() {
    let o = quatinv(
        &[
            "project",
            "--axis",
            "1,0,0",
            "--input",
            "/nonexistent/in.csv",
        ],
        "",
    );
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn verify_is_deterministic() {
    let a = quatinv(&["verify", "--trials", "100", "--seed", "9"], "");
    let b = quatinv(&["verify", "--trials", "100", "--seed", "9"], "");
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    assert!(stdout(&a).contains("q→ν₁qν₂ multiplicativity: counterexample found"));
    let c = quatinv(&["verify", "--trials", "100", "--seed", "10"], "");
    assert_ne!(a.stdout, c.stdout);
}

#[test]
fn axis_is_normalized_when_close_to_unit() {
    let o = quatinv(&["involute", "--axis", "1.0000004,0,0"], "1,2,3,4\n");
    assert!(o.status.success());
    assert_eq!(stdout(&o), "1,2,-3,-4\n");
}
