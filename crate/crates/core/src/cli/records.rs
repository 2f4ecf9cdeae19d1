use std::io::{BufRead, BufReader, Read, Write};

use quatinv::{Quaternion, Vector3};

use super::CliError;

/// One `x,y,z` row.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct VectorRecord {
    pub line: u64,
    pub value: Vector3,
}

/// One `w,x,y,z` row.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuaternionRecord {
    pub line: u64,
    pub value: Quaternion,
}

/// Yields `(line, fields)` for every data row, checking the field count.
/// Blank lines and lines starting with `#` are skipped.
fn rows<R: Read, const N: usize>(
    input: R,
) -> impl Iterator<Item = Result<(u64, [f64; N]), CliError>> {
    BufReader::new(input)
        .lines()
        .enumerate()
        .filter_map(|(idx, text)| {
            let line = idx as u64 + 1;
            match text {
                Err(e) => Some(Err(CliError::Parse {
                    line,
                    message: e.to_string(),
                })),
                Ok(text) => {
                    let text = text.trim();
                    if text.is_empty() || text.starts_with('#') {
                        None
                    } else {
                        Some(parse_fields(line, text))
                    }
                }
            }
        })
}

fn parse_fields<const N: usize>(line: u64, text: &str) -> Result<(u64, [f64; N]), CliError> {
    let fields: Vec<&str> = text.split(',').map(str::trim).collect();
    if fields.len() != N {
        return Err(CliError::Parse {
            line,
            message: format!("expected {N} fields, found {}", fields.len()),
        });
    }
    let mut out = [0.0; N];
    for (slot, field) in out.iter_mut().zip(fields) {
        *slot = field.parse().map_err(|_| CliError::Parse {
            line,
            message: format!("'{field}' is not a number"),
        })?;
    }
    Ok((line, out))
}

pub fn vectors<R: Read>(input: R) -> impl Iterator<Item = Result<VectorRecord, CliError>> {
    rows::<R, 3>(input).map(|row| {
        let (line, [x, y, z]) = row?;
        let value = Vector3::new(x, y, z).map_err(|e| CliError::Parse {
            line,
            message: e.to_string(),
        })?;
        Ok(VectorRecord { line, value })
    })
}

pub fn quaternions<R: Read>(input: R) -> impl Iterator<Item = Result<QuaternionRecord, CliError>> {
    rows::<R, 4>(input).map(|row| {
        let (line, [w, x, y, z]) = row?;
        let value = Quaternion::new(w, x, y, z).map_err(|e| CliError::Parse {
            line,
            message: e.to_string(),
        })?;
        Ok(QuaternionRecord { line, value })
    })
}

/// Shortest decimal string that parses back to the same `f64`. Negative
/// zero is written as `0`.
pub fn format_number(x: f64) -> String {
    format!("{}", x + 0.0)
}

pub fn write_row<W: Write + ?Sized>(out: &mut W, fields: &[f64]) -> Result<(), CliError> {
    let line = fields
        .iter()
        .map(|&x| format_number(x))
        .collect::<Vec<_>>()
        .join(",");
    writeln!(out, "{line}").map_err(CliError::io("write"))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn skips_comments_and_blank_lines() {
        let data = "# header\n1,2,3\n\n  4 , 5 , 6\n#x\n";
        let got: Vec<_> = vectors(data.as_bytes()).collect::<Result<_, _>>().unwrap();
        assert_eq!(got.len(), 2);
        assert_eq!(got[0].line, 2);
        assert_eq!(got[1].line, 4);
        assert_eq!(got[1].value.to_array(), [4.0, 5.0, 6.0]);
    }

    #[test]
    fn errors_name_the_line() {
        let data = "1,2,3,4\n1,2,3\n";
        let err = quaternions(data.as_bytes())
            .collect::<Result<Vec<_>, _>>()
            .unwrap_err();
        assert!(matches!(err, CliError::Parse { line: 2, .. }), "{err}");

        let err = vectors("1,2,3\n1,oops,3\n".as_bytes())
            .collect::<Result<Vec<_>, _>>()
            .unwrap_err();
        assert_eq!(err.to_string(), "line 2: 'oops' is not a number");

        let err = vectors("inf,0,0\n".as_bytes())
            .collect::<Result<Vec<_>, _>>()
            .unwrap_err();
        assert!(matches!(err, CliError::Parse { line: 1, .. }));
    }

    #[test]
    fn number_format_round_trips() {
        assert_eq!(format_number(1.0), "1");
        assert_eq!(format_number(-0.0), "0");
        assert_eq!(format_number(-2.5), "-2.5");
        for x in [
            0.1,
            1.0 / 3.0,
            -7.123456789012345e-17,
            6.02e23,
            f64::MIN_POSITIVE,
        ] {
            assert_eq!(format_number(x).parse::<f64>().unwrap(), x);
        }
    }
}
