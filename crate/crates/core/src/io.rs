//! Band-file parsing and serialization, and dense matrix output.
//!
//! Input is a JSON document
//! `{"n": 12, "bands": {"d": [...], "a": [...], ..., "R": [...]}}` whose
//! arrays list each band over its valid range. Entries are integers or
//! `"p/q"` strings.

use std::fmt::{self, Write as _};

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::de::{self, Deserializer, Visitor};
use serde::Deserialize;

use crate::band::{Band, CyclicNonadiagonal};
use crate::dense::DenseMatrix;
use crate::error::{Error, Result};
use crate::scalar::parse_rational;

struct Entry(BigRational);

impl<'de> Deserialize<'de> for Entry {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        struct EntryVisitor;

        impl Visitor<'_> for EntryVisitor {
            type Value = Entry;

            fn expecting(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str("an integer or a \"p/q\" string")
            }
            fn visit_i64<E: de::Error>(self, v: i64) -> std::result::Result<Entry, E> {
                Ok(Entry(BigRational::from_integer(v.into())))
            }
            fn visit_u64<E: de::Error>(self, v: u64) -> std::result::Result<Entry, E> {
                Ok(Entry(BigRational::from_integer(v.into())))
            }
            fn visit_f64<E: de::Error>(self, v: f64) -> std::result::Result<Entry, E> {
                Err(E::custom(format!(
                    "non-integer number {v}; write fractions as \"p/q\" strings"
                )))
            }
            fn visit_str<E: de::Error>(self, v: &str) -> std::result::Result<Entry, E> {
                match parse_rational(v) {
                    Ok(q) => Ok(Entry(q)),
                    Err(Error::Syntax { reason, .. }) => Err(E::custom(reason)),
                    Err(e) => Err(E::custom(e)),
                }
            }
        }

        d.deserialize_any(EntryVisitor)
    }
}

#[allow(non_snake_case)]
#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct BandsFile {
    d: Vec<Entry>,
    a: Vec<Entry>,
    A: Vec<Entry>,
    M: Vec<Entry>,
    z: Vec<Entry>,
    b: Vec<Entry>,
    B: Vec<Entry>,
    N: Vec<Entry>,
    R: Vec<Entry>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct MatrixFile {
    n: usize,
    bands: BandsFile,
}

/// Parses a band file.
pub fn parse(content: &str) -> Result<CyclicNonadiagonal<BigRational>> {
    let file: MatrixFile = serde_json::from_str(content).map_err(|e| Error::Syntax {
        line: e.line(),
        reason: strip_position(&e.to_string()),
    })?;
    let b = file.bands;
    let unwrap = |v: Vec<Entry>| v.into_iter().map(|e| e.0).collect::<Vec<_>>();
    // Band::ALL order.
    CyclicNonadiagonal::new(
        file.n,
        [
            unwrap(b.d),
            unwrap(b.a),
            unwrap(b.A),
            unwrap(b.M),
            unwrap(b.z),
            unwrap(b.b),
            unwrap(b.B),
            unwrap(b.N),
            unwrap(b.R),
        ],
    )
}

// serde_json appends " at line L column C"; the line is reported separately.
fn strip_position(msg: &str) -> String {
    match msg.rfind(" at line ") {
        Some(k) => msg[..k].to_string(),
        None => msg.to_string(),
    }
}

fn render_entry(q: &BigRational) -> String {
    if q.is_integer() {
        q.numer().to_string()
    } else {
        format!("\"{q}\"")
    }
}

/// Canonical text form: one band per line, integers as JSON numbers and
/// other rationals as `"p/q"` strings.
pub fn serialize(m: &CyclicNonadiagonal<BigRational>) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "{{");
    let _ = writeln!(out, "  \"n\": {},", m.order());
    let _ = writeln!(out, "  \"bands\": {{");
    for (k, band) in Band::ALL.iter().enumerate() {
        let cells: Vec<String> = m.band(*band).values().iter().map(render_entry).collect();
        let comma = if k + 1 < Band::ALL.len() { "," } else { "" };
        let _ = writeln!(out, "    \"{}\": [{}]{comma}", band.key(), cells.join(", "));
    }
    let _ = writeln!(out, "  }}");
    let _ = writeln!(out, "}}");
    out
}

/// Renders an exact dense matrix as a JSON array of rows of `"p/q"` strings.
pub fn dense_json(x: &DenseMatrix<String>) -> String {
    let mut out = String::from("[\n");
    let n = x.order();
    for (i, row) in x.rows().enumerate() {
        let cells: Vec<String> = row
            .iter()
            .map(|c| serde_json::to_string(c).expect("strings always serialize"))
            .collect();
        let comma = if i + 1 < n { "," } else { "" };
        let _ = writeln!(out, "  [{}]{comma}", cells.join(", "));
    }
    out.push_str("]\n");
    out
}

pub fn dense_csv(x: &DenseMatrix<String>) -> String {
    let mut out = String::new();
    for row in x.rows() {
        out.push_str(&row.join(","));
        out.push('\n');
    }
    out
}

/// Exact cell rendering: `p/q`, or `p` for integers.
pub fn render_rational(q: &BigRational) -> String {
    q.to_string()
}

/// Float cell rendering with 17 significant digits.
pub fn render_float(x: &f64) -> String {
    format!("{x:.16e}")
}

/// Builds a dense rational matrix from integer rows (convenience for tests
/// and fixtures).
pub fn integer_rows(rows: &[Vec<i64>]) -> Result<DenseMatrix<BigRational>> {
    DenseMatrix::from_rows(
        rows.iter()
            .map(|r| r.iter().map(|&v| BigRational::from_integer(BigInt::from(v))).collect())
            .collect(),
    )
}
