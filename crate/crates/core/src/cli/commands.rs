use std::io::{Read, Write};

use quatinv::{
    complete_triad, compose_involutions, decompose as decompose_quaternion,
    involute as involute_quaternion, laws, reflect_vector, rotation_of_composition, split,
    tolerance, InvolutionAxis, UnitVector3,
};

use super::records::{self, format_number, write_row};
use super::{CliError, Kind};

fn axis_text(u: &UnitVector3) -> String {
    u.direction().to_array().map(format_number).join(",")
}

fn diag<W: Write + ?Sized>(out: &mut W, message: std::fmt::Arguments<'_>) -> Result<(), CliError> {
    writeln!(out, "{message}").map_err(CliError::io("diagnostics"))
}

pub fn involute<R: Read, W: Write + ?Sized>(
    input: R,
    out: &mut W,
    axis: UnitVector3,
    kind: Kind,
) -> Result<usize, CliError> {
    let axis = InvolutionAxis::new(axis);
    let mut count = 0;
    match kind {
        Kind::Vector => {
            for rec in records::vectors(input) {
                let v = reflect_vector(rec?.value, &axis);
                write_row(out, &v.to_array())?;
                count += 1;
            }
        }
        Kind::Quaternion => {
            for rec in records::quaternions(input) {
                let q = involute_quaternion(rec?.value, &axis);
                write_row(out, &q.to_array())?;
                count += 1;
            }
        }
    }
    Ok(count)
}

pub fn rotate<R: Read, W: Write + ?Sized, D: Write + ?Sized>(
    input: R,
    out: &mut W,
    diagnostics: &mut D,
    first: UnitVector3,
    second: UnitVector3,
) -> Result<usize, CliError> {
    let (a, b) = (InvolutionAxis::new(first), InvolutionAxis::new(second));
    let rotation = rotation_of_composition(&a, &b);
    match rotation.axis {
        Some(k) => diag(
            diagnostics,
            format_args!("rotation axis {} angle {} rad", axis_text(&k), format_number(rotation.angle)),
        )?,
        None => diag(
            diagnostics,
            format_args!(
                "warning: involution axes are nearly parallel (rotation angle {} rad); rotation is close to identity",
                format_number(rotation.angle)
            ),
        )?,
    }
    let mut count = 0;
    for rec in records::vectors(input) {
        let v = compose_involutions(rec?.value.to_quaternion(), &a, &b).vector();
        write_row(out, &v.to_array())?;
        count += 1;
    }
    Ok(count)
}

pub fn project<R: Read, W: Write + ?Sized>(
    input: R,
    out: &mut W,
    axis: UnitVector3,
) -> Result<usize, CliError> {
    let axis = InvolutionAxis::new(axis);
    let mut count = 0;
    for rec in records::vectors(input) {
        let s = split(rec?.value, &axis);
        let [px, py, pz] = s.parallel.to_array();
        let [nx, ny, nz] = s.perpendicular.to_array();
        write_row(out, &[px, py, pz, nx, ny, nz])?;
        count += 1;
    }
    Ok(count)
}

pub fn decompose<R: Read, W: Write + ?Sized, D: Write + ?Sized>(
    input: R,
    out: &mut W,
    diagnostics: &mut D,
    seed_axis: UnitVector3,
    check: bool,
) -> Result<usize, CliError> {
    let triad = complete_triad(seed_axis);
    let [n1, n2, n3] = triad.units().map(|u| axis_text(&u));
    writeln!(
        out,
        "# triad nu1={n1} nu2={n2} nu3={n3}; columns a,alpha,beta,gamma"
    )
    .map_err(CliError::io("write"))?;
    diag(
        diagnostics,
        format_args!("triad nu1={n1} nu2={n2} nu3={n3}"),
    )?;

    let mut count = 0;
    let mut failures = Vec::new();
    for rec in records::quaternions(input) {
        let rec = rec?;
        let d = decompose_quaternion(rec.value, &triad);
        write_row(out, &d.coefficients())?;
        if check {
            let residual = d.reconstruct().max_abs_diff(&rec.value);
            if residual > tolerance::RECON {
                failures.push(format!("line {} (residual {residual:e})", rec.line));
            }
        }
        count += 1;
    }
    if check {
        if !failures.is_empty() {
            return Err(CliError::CheckFailed(format!(
                "reconstruction exceeded {:e} on {} rows: {}",
                tolerance::RECON,
                failures.len(),
                failures.join(", ")
            )));
        }
        diag(
            diagnostics,
            format_args!(
                "check: {count} rows reconstruct within {:e}",
                tolerance::RECON
            ),
        )?;
    }
    Ok(count)
}

/// Prints the law report; returns whether every law held.
pub fn verify<W: Write + ?Sized>(out: &mut W, trials: usize, seed: u64) -> Result<bool, CliError> {
    let report = laws::run_suite(trials, seed);
    writeln!(out, "{report}").map_err(CliError::io("write"))?;
    Ok(report.all_passed())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cli::parse_axis;

    fn run_involute(data: &str, axis: &str, kind: Kind) -> String {
        let mut out = Vec::new();
        involute(data.as_bytes(), &mut out, parse_axis(axis).unwrap(), kind).unwrap();
        String::from_utf8(out).unwrap()
    }

    #[test]
    fn involute_rows() {
        assert_eq!(
            run_involute("1,2,3,4\n", "1,0,0", Kind::Quaternion),
            "1,2,-3,-4\n"
        );
        assert_eq!(run_involute("1,2,3\n", "1,0,0", Kind::Vector), "1,-2,-3\n");
        assert_eq!(run_involute("0,2,0\n", "0,1,0", Kind::Vector), "0,2,0\n");
    }

    #[test]
    fn involute_preserves_row_count_and_order() {
        let data = "# c\n1,0,0,0\n0,1,0,0\n\n0,0,1,0\n";
        let out = run_involute(data, "0,0,1", Kind::Quaternion);
        assert_eq!(out, "1,0,0,0\n0,-1,0,0\n0,0,-1,0\n");
    }

    #[test]
    fn rotate_rows() {
        let s = std::f64::consts::FRAC_1_SQRT_2;
        let mut out = Vec::new();
        let mut diag = Vec::new();
        let b = parse_axis(&format!("{s},{s},0")).unwrap();
        rotate("1,0,0\n".as_bytes(), &mut out, &mut diag, UnitVector3::I, b).unwrap();
        let row: Vec<f64> = String::from_utf8(out)
            .unwrap()
            .trim()
            .split(',')
            .map(|x| x.parse().unwrap())
            .collect();
        assert!((row[0]).abs() < 1e-15 && (row[1] - 1.0).abs() < 1e-15 && row[2] == 0.0);
        assert!(String::from_utf8(diag)
            .unwrap()
            .starts_with("rotation axis 0,0,1 angle 1.57"));

        let mut out = Vec::new();
        let mut diag = Vec::new();
        rotate(
            "0,0,1\n".as_bytes(),
            &mut out,
            &mut diag,
            UnitVector3::I,
            UnitVector3::J,
        )
        .unwrap();
        assert_eq!(String::from_utf8(out).unwrap(), "0,0,1\n");

        let mut out = Vec::new();
        let mut diag = Vec::new();
        rotate(
            "3,-1,2\n".as_bytes(),
            &mut out,
            &mut diag,
            UnitVector3::K,
            UnitVector3::K,
        )
        .unwrap();
        assert_eq!(String::from_utf8(out).unwrap(), "3,-1,2\n");
        assert!(String::from_utf8(diag).unwrap().starts_with("warning:"));
    }

    #[test]
    fn project_rows() {
        let mut out = Vec::new();
        let n = project(
            "1,2,0\n4,0,0\n0,-3,5\n".as_bytes(),
            &mut out,
            UnitVector3::I,
        )
        .unwrap();
        assert_eq!(n, 3);
        assert_eq!(
            String::from_utf8(out).unwrap(),
            "1,0,0,0,2,0\n4,0,0,0,0,0\n0,0,0,0,-3,5\n"
        );
    }

    #[test]
    fn decompose_rows() {
        let mut out = Vec::new();
        let mut diag = Vec::new();
        decompose(
            "1,2,3,4\n-2,0,0,0\n".as_bytes(),
            &mut out,
            &mut diag,
            UnitVector3::I,
            true,
        )
        .unwrap();
        let out = String::from_utf8(out).unwrap();
        let lines: Vec<_> = out.lines().collect();
        assert_eq!(
            lines[0],
            "# triad nu1=1,0,0 nu2=0,1,0 nu3=0,0,1; columns a,alpha,beta,gamma"
        );
        assert_eq!(&lines[1..], ["1,2,3,4", "-2,0,0,0"]);
        let diag = String::from_utf8(diag).unwrap();
        assert!(diag.contains("check: 2 rows reconstruct"));
    }

    #[test]
    fn malformed_row_is_reported() {
        let mut out = Vec::new();
        let err = project("1,2,3\n1,2\n".as_bytes(), &mut out, UnitVector3::I).unwrap_err();
        assert!(matches!(err, CliError::Parse { line: 2, .. }));
    }

    #[test]
    fn verify_report() {
        let mut out = Vec::new();
        assert!(verify(&mut out, 50, 3).unwrap());
        let text = String::from_utf8(out).unwrap();
        assert!(text.contains("q→ν₁qν₂ multiplicativity: counterexample found"));
    }
}
