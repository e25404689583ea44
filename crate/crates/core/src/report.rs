//! Machine-readable reports for the command line.
//!
//! Integers are written as JSON numbers in full decimal, however large.

use std::fmt::Write as _;

use num_bigint::BigInt;
use serde::{Serialize, Serializer};

use crate::closed_form::Family;
use crate::ehrhart::FormulaFlag;
use crate::error::Result;
use crate::gorenstein::GorensteinCertificate;
use crate::model::{HilbertBasis, LatticePoint, Method, Sequence};

/// Output encodings accepted by `--format`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Json,
    Csv,
    Plain,
}

/// Arbitrary-precision integer serialized as a bare JSON number.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Int(pub BigInt);

impl Serialize for Int {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let number: serde_json::Number = self.0.to_string().parse().map_err(serde::ser::Error::custom)?;
        number.serialize(serializer)
    }
}

fn ints(xs: &[BigInt]) -> Vec<Int> {
    xs.iter().cloned().map(Int).collect()
}

fn point_ints(p: &LatticePoint) -> Vec<Int> {
    ints(p.coords())
}

#[derive(Debug, Clone, Serialize)]
pub struct Degrees {
    pub last_diff: Option<Vec<Int>>,
}

#[derive(Debug, Clone, Serialize)]
pub struct GorensteinSection {
    pub u: Option<Vec<Int>>,
    pub c: Option<Vec<Int>>,
    pub verified_bound: Int,
}

impl GorensteinSection {
    pub fn from_certificate(cert: Option<&GorensteinCertificate>, u: Option<&[BigInt]>) -> Self {
        GorensteinSection {
            u: u.map(ints),
            c: cert.map(|c| point_ints(&c.c)),
            verified_bound: Int(cert.map_or_else(BigInt::default, |c| c.verified_bound.clone())),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct VerificationSection {
    pub passed: bool,
    pub witnesses: Vec<Vec<Int>>,
    pub notes: Vec<String>,
}

impl VerificationSection {
    pub fn new(passed: bool, witnesses: &[LatticePoint], notes: Vec<String>) -> Self {
        VerificationSection {
            passed,
            witnesses: witnesses.iter().map(point_ints).collect(),
            notes,
        }
    }
}

/// The single report shape shared by `basis`, `oracle`, `verify` and
/// `gorenstein`.
#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub sequence: Vec<Int>,
    pub family: Option<String>,
    pub method: Method,
    pub basis: Vec<Vec<Int>>,
    pub cardinality: usize,
    pub degrees: Degrees,
    pub gorenstein: Option<GorensteinSection>,
    pub verification: Option<VerificationSection>,
}

impl Report {
    pub fn new(family: Option<&Family>, basis: &HilbertBasis) -> Self {
        Report {
            sequence: ints(basis.sequence().entries()),
            family: family.map(ToString::to_string),
            method: basis.method(),
            basis: basis.elements().iter().map(point_ints).collect(),
            cardinality: basis.len(),
            degrees: Degrees {
                last_diff: basis.last_diff_degrees().map(|d| ints(&d)),
            },
            gorenstein: None,
            verification: None,
        }
    }

    pub fn render(&self, format: Format) -> Result<String> {
        match format {
            Format::Json => Ok(to_json(self)),
            Format::Csv => self.render_csv(),
            Format::Plain => Ok(self.render_plain()),
        }
    }

    fn render_csv(&self) -> Result<String> {
        let dim = self.sequence.len();
        let mut w = csv::Writer::from_writer(Vec::new());
        let header: Vec<String> = (1..=dim).map(|i| format!("x{i}")).collect();
        w.write_record(&header).map_err(csv_error)?;
        for row in &self.basis {
            w.write_record(row.iter().map(|x| x.0.to_string())).map_err(csv_error)?;
        }
        finish_csv(w)
    }

    fn render_plain(&self) -> String {
        let mut out = String::new();
        let tuple = |xs: &[Int]| {
            let parts: Vec<String> = xs.iter().map(|x| x.0.to_string()).collect();
            format!("({})", parts.join(","))
        };
        let _ = writeln!(out, "sequence {}", tuple(&self.sequence));
        let _ = writeln!(out, "family {}", self.family.as_deref().unwrap_or("none"));
        let _ = writeln!(out, "method {}", self.method);
        let _ = writeln!(out, "cardinality {}", self.cardinality);
        for p in &self.basis {
            let _ = writeln!(out, "  {}", tuple(p));
        }
        if let Some(g) = &self.gorenstein {
            let u = g.u.as_deref().map_or("none".to_string(), tuple);
            let c = g.c.as_deref().map_or("none".to_string(), tuple);
            let _ = writeln!(out, "gorenstein u {u} c {c} verified_bound {}", g.verified_bound.0);
        }
        if let Some(v) = &self.verification {
            let _ = writeln!(out, "verification {}", if v.passed { "passed" } else { "FAILED" });
            for w in &v.witnesses {
                let _ = writeln!(out, "  witness {}", tuple(w));
            }
            for note in &v.notes {
                let _ = writeln!(out, "  note {note}");
            }
        }
        out
    }
}

fn to_json<T: Serialize>(value: &T) -> String {
    let mut text = serde_json::to_string(value).expect("report values always serialize");
    text.push('\n');
    text
}

fn csv_error(e: csv::Error) -> crate::error::Error {
    crate::error::Error::InvalidParameters(format!("csv output: {e}"))
}

fn finish_csv(w: csv::Writer<Vec<u8>>) -> Result<String> {
    let bytes = w
        .into_inner()
        .map_err(|e| crate::error::Error::InvalidParameters(format!("csv output: {e}")))?;
    Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
}

/// A lattice-point count from the `ehrhart` subcommand.
#[derive(Debug, Clone, Serialize)]
pub struct CountReport {
    pub sequence: Vec<Int>,
    pub polytope: String,
    pub t: u64,
    pub count: Int,
}

impl CountReport {
    pub fn new(s: &Sequence, polytope: &str, t: u64, count: BigInt) -> Self {
        CountReport {
            sequence: ints(s.entries()),
            polytope: polytope.to_string(),
            t,
            count: Int(count),
        }
    }

    pub fn render(&self, format: Format) -> Result<String> {
        match format {
            Format::Json => Ok(to_json(self)),
            Format::Csv => {
                let mut w = csv::Writer::from_writer(Vec::new());
                w.write_record(["sequence", "polytope", "t", "count"]).map_err(csv_error)?;
                let seq: Vec<String> = self.sequence.iter().map(|x| x.0.to_string()).collect();
                w.write_record([seq.join(" "), self.polytope.clone(), self.t.to_string(), self.count.0.to_string()])
                    .map_err(csv_error)?;
                finish_csv(w)
            }
            Format::Plain => Ok(format!("{}\n", self.count.0)),
        }
    }
}

/// One parameter tuple of a sweep.
#[derive(Debug, Clone, Serialize)]
pub struct SweepRow {
    pub parameters: String,
    pub cardinality: usize,
    pub formula: Int,
    pub flag: FormulaFlag,
    #[serde(rename = "match")]
    pub matches: bool,
}

pub fn render_sweep(rows: &[SweepRow], format: Format) -> Result<String> {
    match format {
        Format::Json => Ok(to_json(&rows)),
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            w.write_record(["parameters", "cardinality", "formula", "flag", "match"])
                .map_err(csv_error)?;
            for r in rows {
                w.write_record([
                    r.parameters.clone(),
                    r.cardinality.to_string(),
                    r.formula.0.to_string(),
                    r.flag.to_string(),
                    r.matches.to_string(),
                ])
                .map_err(csv_error)?;
            }
            finish_csv(w)
        }
        Format::Plain => {
            let mut out = String::new();
            for r in rows {
                let _ = writeln!(
                    out,
                    "{:<28} {:>6} {:>6} {:<16} {}",
                    r.parameters,
                    r.cardinality,
                    r.formula.0,
                    r.flag,
                    if r.matches { "match" } else { "MISMATCH" }
                );
            }
            Ok(out)
        }
    }
}
