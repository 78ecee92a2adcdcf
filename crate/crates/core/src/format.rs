//! Matrix files: JSON `{"n": n, "entries": [...]}` (row-major, exact strings)
//! and plain CSV for √2-free matrices.

use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::scalar::Scalar;

#[derive(Copy, Clone, Debug, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum OutputFormat {
    #[default]
    Json,
    Csv,
    Pretty,
}

impl std::str::FromStr for OutputFormat {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "json" => Ok(OutputFormat::Json),
            "csv" => Ok(OutputFormat::Csv),
            "pretty" => Ok(OutputFormat::Pretty),
            _ => Err(Error::Parse(format!("unknown output format `{s}`"))),
        }
    }
}

// Square matrices carry only `n`; rectangular ones (construction blocks) carry `rows`/`cols`.
#[derive(Serialize, Deserialize)]
struct MatrixRepr {
    #[serde(skip_serializing_if = "Option::is_none", default)]
    n: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    rows: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    cols: Option<usize>,
    entries: Vec<Scalar>,
}

impl Serialize for Matrix {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let repr = if self.is_square() {
            MatrixRepr { n: Some(self.rows()), rows: None, cols: None, entries: self.entries().to_vec() }
        } else {
            MatrixRepr { n: None, rows: Some(self.rows()), cols: Some(self.cols()), entries: self.entries().to_vec() }
        };
        repr.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Matrix {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let repr = MatrixRepr::deserialize(deserializer)?;
        let (rows, cols) = match (repr.n, repr.rows, repr.cols) {
            (Some(n), None, None) => (n, n),
            (None, Some(r), Some(c)) => (r, c),
            _ => return Err(D::Error::custom("expected either `n` or both `rows` and `cols`")),
        };
        Matrix::new(rows, cols, repr.entries).map_err(D::Error::custom)
    }
}

pub fn to_json(m: &Matrix) -> String {
    serde_json::to_string_pretty(m).expect("matrix serializes")
}

pub fn from_json(text: &str) -> Result<Matrix> {
    Ok(serde_json::from_str(text)?)
}

/// Comma-separated rows of rationals. Fails if any entry has a √2 part.
pub fn to_csv(m: &Matrix) -> Result<String> {
    if !m.is_rational() {
        return Err(Error::Precondition("CSV output needs √2-free entries; use JSON".into()));
    }
    let mut out = String::new();
    for i in 0..m.rows() {
        let row: Vec<String> = (0..m.cols()).map(|j| m.get(i, j).pretty()).collect();
        out.push_str(&row.join(","));
        out.push('\n');
    }
    Ok(out)
}

pub fn from_csv(text: &str) -> Result<Matrix> {
    let rows: Vec<Vec<Scalar>> = text
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .map(|l| l.split(',').map(|c| c.trim().parse::<Scalar>()).collect::<Result<Vec<_>>>())
        .collect::<Result<_>>()?;
    if rows.is_empty() {
        return Err(Error::Parse("empty CSV matrix".into()));
    }
    Matrix::from_rows(rows)
}

pub fn render(m: &Matrix, format: OutputFormat) -> Result<String> {
    match format {
        OutputFormat::Json => Ok(to_json(m) + "\n"),
        OutputFormat::Csv => to_csv(m),
        OutputFormat::Pretty => Ok(m.to_string()),
    }
}

/// Parses JSON when the text starts with `{`, CSV otherwise.
pub fn parse_matrix(text: &str) -> Result<Matrix> {
    if text.trim_start().starts_with('{') {
        from_json(text)
    } else {
        from_csv(text)
    }
}

pub fn read_matrix(path: &Path) -> Result<Matrix> {
    parse_matrix(&std::fs::read_to_string(path)?)
}

pub fn write_matrix(path: &Path, m: &Matrix, format: OutputFormat) -> Result<()> {
    std::fs::write(path, render(m, format)?)?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn json_shape() {
        let m = Matrix::from_int_rows(&[&[1, 2], &[3, 4]]);
        let v: serde_json::Value = serde_json::from_str(&to_json(&m)).unwrap();
        assert_eq!(v["n"], 2);
        assert_eq!(v["entries"][3], "4");
    }

    #[test]
    fn json_with_sqrt2() {
        let text = r#"{"n": 2, "entries": ["1/2", "1/2+3/4*sqrt2", "-1*sqrt2", "0"]}"#;
        let m = from_json(text).unwrap();
        assert_eq!(m.get(0, 1), &Scalar::from_parts((1, 2), (3, 4)));
        assert_eq!(m.get(1, 0), &-Scalar::sqrt2());
        assert_eq!(from_json(&to_json(&m)).unwrap(), m);
    }

    #[test]
    fn rejects_bad_files() {
        assert!(from_json(r#"{"n": 2, "entries": ["1"]}"#).is_err());
        assert!(from_json(r#"{"n": 1, "entries": ["1.5"]}"#).is_err());
        assert!(from_csv("1,2\n3").is_err());
        assert!(from_csv("").is_err());
    }

    #[test]
    fn csv_round_trip_and_sqrt2_refusal() {
        let m = Matrix::from_int_rows(&[&[1, -2], &[0, 7]]).scale(&Scalar::from_ratio(1, 3));
        assert_eq!(from_csv(&to_csv(&m).unwrap()).unwrap(), m);
        assert!(to_csv(&Matrix::involution(2)).is_err());
    }

    #[test]
    fn rectangular_json() {
        let m = Matrix::from_int_rows(&[&[1, 2, 3]]);
        assert_eq!(from_json(&to_json(&m)).unwrap(), m);
    }

    fn arb_scalar() -> impl Strategy<Value = Scalar> {
        (-50i64..50, 1i64..20, -50i64..50, 1i64..20).prop_map(|(a, b, c, d)| Scalar::from_parts((a, b), (c, d)))
    }

    proptest! {
        #[test]
        fn json_round_trip(n in 1usize..5, seed in proptest::collection::vec(arb_scalar(), 16)) {
            let m = Matrix::from_fn(n, n, |i, j| seed[i * 4 + j].clone());
            prop_assert_eq!(parse_matrix(&to_json(&m)).unwrap(), m);
        }
    }
}
