//! Gorenstein points of lecture hall cones.
//!
//! A pointed cone is Gorenstein when some interior lattice point `c` has
//! `C° ∩ Z^n = c + (C ∩ Z^n)`. Three independent routes produce `c`: the
//! u-vector recurrence for u-generated sequences, the general adjacent-gcd
//! recurrence, and the geometric candidate (the coordinatewise smallest
//! interior point) checked by exhaustive shifting.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::model::{LatticePoint, Sequence};
use crate::oracle::{self, VerificationReport};

/// Positive integers `(u_1, ..., u_{n-1})` with `s_2 = u_1 s_1 - 1` and
/// `s_{i+1} = u_i s_i - s_{i-1}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct UVector(Vec<BigInt>);

impl UVector {
    pub fn entries(&self) -> &[BigInt] {
        &self.0
    }

    pub fn into_entries(self) -> Vec<BigInt> {
        self.0
    }
}

impl fmt::Display for UVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(ToString::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CertificateMethod {
    URecurrence,
    GeneralRecurrence,
    Geometric,
}

impl fmt::Display for CertificateMethod {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CertificateMethod::URecurrence => "u_recurrence",
            CertificateMethod::GeneralRecurrence => "general_recurrence",
            CertificateMethod::Geometric => "geometric",
        })
    }
}

/// A Gorenstein point together with how it was found. `verified_bound` is
/// the last-coordinate bound up to which the shift property was checked
/// exhaustively (zero when unchecked).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GorensteinCertificate {
    pub c: LatticePoint,
    pub u: Option<UVector>,
    pub method: CertificateMethod,
    pub verified_bound: BigInt,
}

/// Solves the u-recurrence backwards: `u_1 = (s_2 + 1)/s_1`,
/// `u_i = (s_{i+1} + s_{i-1})/s_i`, each of which must be a positive integer.
/// A single-entry sequence is generated by the empty u-vector.
pub fn detect_u_generated(s: &Sequence) -> Option<UVector> {
    let e = s.entries();
    let mut u = Vec::with_capacity(e.len().saturating_sub(1));
    for i in 0..e.len().saturating_sub(1) {
        let num = if i == 0 { &e[1] + 1 } else { &e[i + 1] + &e[i - 1] };
        let (q, r) = num.div_rem(&e[i]);
        if !r.is_zero() || !q.is_positive() {
            return None;
        }
        u.push(q);
    }
    Some(UVector(u))
}

/// The Gorenstein point of a u-generated sequence: `c_1 = 1`, `c_2 = u_1`,
/// `c_{i+1} = u_i c_i - c_{i-1}`.
pub fn gorenstein_point(s: &Sequence, u: &UVector) -> Result<GorensteinCertificate> {
    let regenerated = Sequence::from_u(s.entries()[0].clone(), u.entries())?;
    if &regenerated != s {
        return Err(Error::InvalidParameters(format!("u = {u} does not generate {s}")));
    }
    let mut c = vec![BigInt::one()];
    for (i, ui) in u.entries().iter().enumerate() {
        let next = match i {
            0 => ui.clone(),
            _ => ui * &c[i] - &c[i - 1],
        };
        c.push(next);
    }
    let c = LatticePoint::new(c);
    if !s.contains_strictly(&c)? {
        return Err(Error::NotInterior(c.to_string()));
    }
    Ok(GorensteinCertificate {
        c,
        u: Some(u.clone()),
        method: CertificateMethod::URecurrence,
        verified_bound: BigInt::zero(),
    })
}

/// General recurrence `c_1 = 1`, `c_j s_{j-1} = c_{j-1} s_j + gcd(s_{j-1}, s_j)`.
///
/// The gcd is taken over the adjacent pair ending at `j`. Returns `None`
/// unless every `c_j` is a positive integer and `c` is strictly interior.
pub fn gorenstein_recurrence(s: &Sequence) -> Option<GorensteinCertificate> {
    let e = s.entries();
    let mut c = vec![BigInt::one()];
    for j in 1..e.len() {
        let num = &c[j - 1] * &e[j] + e[j - 1].gcd(&e[j]);
        let (q, r) = num.div_rem(&e[j - 1]);
        if !r.is_zero() || !q.is_positive() {
            return None;
        }
        c.push(q);
    }
    let c = LatticePoint::new(c);
    if !s.chain_holds(c.coords(), true) {
        return None;
    }
    Some(GorensteinCertificate {
        c,
        u: None,
        method: CertificateMethod::GeneralRecurrence,
        verified_bound: BigInt::zero(),
    })
}

/// The u-recurrence certificate when the sequence is u-generated, otherwise
/// the general recurrence.
pub fn certificate(s: &Sequence) -> Option<GorensteinCertificate> {
    if let Some(u) = detect_u_generated(s) {
        if let Ok(cert) = gorenstein_point(s, &u) {
            return Some(cert);
        }
    }
    gorenstein_recurrence(s)
}

/// Runs the exhaustive shift check up to `bound` and records the bound on
/// success.
pub fn verify_certificate(
    s: &Sequence,
    mut cert: GorensteinCertificate,
    bound: &BigInt,
) -> Result<(GorensteinCertificate, VerificationReport)> {
    let report = oracle::verify_gorenstein_shift(s, &cert.c, bound)?;
    cert.verified_bound = if report.passed { bound.clone() } else { BigInt::zero() };
    Ok((cert, report))
}

/// Geometric route: the only possible Gorenstein point is the smallest
/// interior point, so check that candidate by shifting. `Ok(None)` carries
/// the failing report.
pub fn geometric_certificate(
    s: &Sequence,
    bound: &BigInt,
) -> Result<(Option<GorensteinCertificate>, VerificationReport)> {
    let c = oracle::minimal_interior_point(s);
    let report = oracle::verify_gorenstein_shift(s, &c, bound)?;
    if !report.passed {
        return Ok((None, report));
    }
    let cert = GorensteinCertificate {
        c,
        u: detect_u_generated(s),
        method: CertificateMethod::Geometric,
        verified_bound: bound.clone(),
    };
    Ok((Some(cert), report))
}
