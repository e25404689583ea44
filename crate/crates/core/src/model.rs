//! Sequences, lattice points, ray generators and gradings of s-lecture hall cones.
//!
//! The cone of a positive sequence `s = (s_1, ..., s_n)` is the set of real
//! vectors with `0 <= x_1/s_1 <= x_2/s_2 <= ... <= x_n/s_n`. Every membership
//! test here compares the ratios by integer cross-multiplication, so results
//! are exact for entries of any size.

use std::fmt;
use std::ops::{Add, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::error::{Error, Result};

/// A positive integer sequence `s = (s_1, ..., s_n)` with `n >= 1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Sequence(Vec<BigInt>);

impl Sequence {
    /// Builds a sequence, rejecting empty input and entries `<= 0`.
    pub fn new<I, T>(entries: I) -> Result<Self>
    where
        I: IntoIterator<Item = T>,
        T: Into<BigInt>,
    {
        let entries: Vec<BigInt> = entries.into_iter().map(Into::into).collect();
        if entries.is_empty() {
            return Err(Error::EmptySequence);
        }
        if let Some((index, value)) = entries.iter().enumerate().find(|(_, v)| !v.is_positive()) {
            return Err(Error::NonPositiveEntry {
                index: index + 1,
                value: value.clone(),
            });
        }
        Ok(Sequence(entries))
    }

    /// The sequence generated by `s_2 = u_1 s_1 - 1` and
    /// `s_{i+1} = u_i s_i - s_{i-1}`.
    pub fn from_u<T: Into<BigInt>>(s1: T, u: &[BigInt]) -> Result<Self> {
        let s1 = s1.into();
        if !s1.is_positive() {
            return Err(Error::NonPositiveEntry { index: 1, value: s1 });
        }
        if let Some(bad) = u.iter().find(|x| !x.is_positive()) {
            return Err(Error::InvalidParameters(format!("u entries must be >= 1, got {bad}")));
        }
        let mut entries = vec![s1];
        for (i, ui) in u.iter().enumerate() {
            let next = match i {
                0 => ui * &entries[0] - 1,
                _ => ui * &entries[i] - &entries[i - 1],
            };
            if !next.is_positive() {
                return Err(Error::NotGenerating {
                    index: i + 2,
                    value: next,
                });
            }
            entries.push(next);
        }
        Ok(Sequence(entries))
    }

    /// The 1 mod k sequence `(1, k+1, 2k+1, ..., (n-1)k+1)`.
    pub fn modk<T: Into<BigInt>>(k: T, n: usize) -> Result<Self> {
        let k = k.into();
        if !k.is_positive() || n == 0 {
            return Err(Error::InvalidParameters(format!(
                "1 mod k sequence needs k >= 1 and n >= 1 (k = {k}, n = {n})"
            )));
        }
        Ok(Sequence((0..n).map(|i| &k * i + 1).collect()))
    }

    /// The l-sequence `s_{i+1} = l s_i - s_{i-1}` with `s_0 = 0`, `s_1 = 1`.
    pub fn l_sequence<T: Into<BigInt>>(ell: T, n: usize) -> Result<Self> {
        let ell = ell.into();
        if ell < BigInt::from(2) || n == 0 {
            return Err(Error::InvalidParameters(format!(
                "l-sequence needs l >= 2 and n >= 1 (l = {ell}, n = {n})"
            )));
        }
        Ok(Sequence(l_sequence_terms(&ell, n + 1)[1..].to_vec()))
    }

    pub fn entries(&self) -> &[BigInt] {
        &self.0
    }

    /// Ambient dimension `n`.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    /// Always false; kept for the `len`/`is_empty` pairing.
    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn last(&self) -> &BigInt {
        self.0.last().expect("sequences are nonempty")
    }

    /// Divides every entry by the gcd of all entries. The cone is unchanged;
    /// the polytopes `P` and `R` are not.
    pub fn normalize(&self) -> Sequence {
        let m = self.gcd();
        Sequence(self.0.iter().map(|x| x / &m).collect())
    }

    pub fn gcd(&self) -> BigInt {
        self.0.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x))
    }

    /// Multiplies every entry by `m >= 1`.
    pub fn scale(&self, m: &BigInt) -> Result<Sequence> {
        Sequence::new(self.0.iter().map(|x| x * m))
    }

    /// Volume of the fundamental parallelepiped of the ray generators,
    /// `s_1 s_2 ... s_{n-1}`.
    pub fn box_volume(&self) -> BigInt {
        self.0[..self.len() - 1].iter().product()
    }

    /// Weak membership: `0 <= x_1/s_1 <= ... <= x_n/s_n`.
    pub fn contains(&self, p: &LatticePoint) -> Result<bool> {
        self.check_dim(p)?;
        Ok(self.chain_holds(p.coords(), false))
    }

    /// Interior membership: `0 < x_1/s_1 < ... < x_n/s_n`.
    pub fn contains_strictly(&self, p: &LatticePoint) -> Result<bool> {
        self.check_dim(p)?;
        Ok(self.chain_holds(p.coords(), true))
    }

    pub(crate) fn check_dim(&self, p: &LatticePoint) -> Result<()> {
        if p.dim() != self.len() {
            return Err(Error::DimensionMismatch {
                expected: self.len(),
                actual: p.dim(),
            });
        }
        Ok(())
    }

    /// Chain test on raw coordinates of the right length.
    pub(crate) fn chain_holds(&self, x: &[BigInt], strict: bool) -> bool {
        debug_assert_eq!(x.len(), self.len());
        let first_ok = if strict { x[0].is_positive() } else { !x[0].is_negative() };
        if !first_ok {
            return false;
        }
        let s = &self.0;
        (0..s.len() - 1).all(|i| {
            let lhs = &x[i] * &s[i + 1];
            let rhs = &x[i + 1] * &s[i];
            if strict {
                lhs < rhs
            } else {
                lhs <= rhs
            }
        })
    }

    /// Integral ray generators: `(0,...,0,s_i,...,s_n)` for `i < n`, then the
    /// unit vector `(0,...,0,1)`.
    pub fn ray_generators(&self) -> RayMatrix {
        let n = self.len();
        let mut rows = Vec::with_capacity(n);
        for i in 0..n - 1 {
            let mut row = vec![BigInt::zero(); n];
            row[i..].clone_from_slice(&self.0[i..]);
            rows.push(LatticePoint(row));
        }
        let mut unit = vec![BigInt::zero(); n];
        unit[n - 1] = BigInt::one();
        rows.push(LatticePoint(unit));
        RayMatrix { rows }
    }
}

/// Terms `s_0, s_1, ..., s_{count-1}` of the l-sequence (so `s_0 = 0`).
pub(crate) fn l_sequence_terms(ell: &BigInt, count: usize) -> Vec<BigInt> {
    let mut terms = vec![BigInt::zero(), BigInt::one()];
    while terms.len() < count {
        let k = terms.len();
        let next = ell * &terms[k - 1] - &terms[k - 2];
        terms.push(next);
    }
    terms.truncate(count);
    terms
}

impl fmt::Display for Sequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_tuple(f, &self.0)
    }
}

impl FromStr for Sequence {
    type Err = Error;

    /// Parses comma-separated integers, e.g. `"1,3,5"`; surrounding
    /// parentheses are allowed.
    fn from_str(text: &str) -> Result<Self> {
        Sequence::new(parse_int_list(text)?)
    }
}

pub(crate) fn parse_int_list(text: &str) -> Result<Vec<BigInt>> {
    let trimmed = text.trim().trim_start_matches('(').trim_end_matches(')');
    if trimmed.trim().is_empty() {
        return Ok(Vec::new());
    }
    trimmed
        .split(',')
        .map(|part| {
            part.trim()
                .parse::<BigInt>()
                .map_err(|_| Error::InvalidParameters(format!("not an integer: {:?}", part.trim())))
        })
        .collect()
}

fn write_tuple(f: &mut fmt::Formatter<'_>, xs: &[BigInt]) -> fmt::Result {
    write!(f, "(")?;
    for (i, x) in xs.iter().enumerate() {
        if i > 0 {
            write!(f, ",")?;
        }
        write!(f, "{x}")?;
    }
    write!(f, ")")
}

/// An integer vector. The derived order is lexicographic.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LatticePoint(Vec<BigInt>);

impl LatticePoint {
    pub fn new(coords: Vec<BigInt>) -> Self {
        LatticePoint(coords)
    }

    pub fn zero(dim: usize) -> Self {
        LatticePoint(vec![BigInt::zero(); dim])
    }

    pub fn coords(&self) -> &[BigInt] {
        &self.0
    }

    pub fn into_coords(self) -> Vec<BigInt> {
        self.0
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    pub fn coordinate_sum(&self) -> BigInt {
        self.0.iter().sum()
    }

    pub fn last(&self) -> &BigInt {
        self.0.last().expect("lattice points have at least one coordinate")
    }

    /// `self <= other` in every coordinate.
    pub fn dominated_by(&self, other: &LatticePoint) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }
}

impl<T: Into<BigInt>, const N: usize> From<[T; N]> for LatticePoint {
    fn from(coords: [T; N]) -> Self {
        LatticePoint(coords.into_iter().map(Into::into).collect())
    }
}

impl From<Vec<BigInt>> for LatticePoint {
    fn from(coords: Vec<BigInt>) -> Self {
        LatticePoint(coords)
    }
}

impl fmt::Display for LatticePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_tuple(f, &self.0)
    }
}

/// Coordinatewise sum. Panics on a dimension mismatch.
impl Add for &LatticePoint {
    type Output = LatticePoint;

    fn add(self, rhs: &LatticePoint) -> LatticePoint {
        assert_eq!(self.dim(), rhs.dim(), "adding points of different dimension");
        LatticePoint(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

/// Coordinatewise difference. Panics on a dimension mismatch.
impl Sub for &LatticePoint {
    type Output = LatticePoint;

    fn sub(self, rhs: &LatticePoint) -> LatticePoint {
        assert_eq!(self.dim(), rhs.dim(), "subtracting points of different dimension");
        LatticePoint(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

/// The `n x n` matrix whose rows are the integral ray generators.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RayMatrix {
    rows: Vec<LatticePoint>,
}

impl RayMatrix {
    pub fn rows(&self) -> &[LatticePoint] {
        &self.rows
    }

    /// Exact determinant by fraction-free (Bareiss) elimination.
    pub fn determinant(&self) -> BigInt {
        let n = self.rows.len();
        let mut m: Vec<Vec<BigInt>> = self.rows.iter().map(|r| r.coords().to_vec()).collect();
        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for k in 0..n {
            if m[k][k].is_zero() {
                match (k + 1..n).find(|&r| !m[r][k].is_zero()) {
                    Some(r) => {
                        m.swap(k, r);
                        sign = -sign;
                    }
                    None => return BigInt::zero(),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = &m[i][j] * &m[k][k] - &m[i][k] * &m[k][j];
                    m[i][j] = v / &prev;
                }
                m[i][k] = BigInt::zero();
            }
            prev = m[k][k].clone();
        }
        sign * &m[n - 1][n - 1]
    }
}

/// The three proper gradings of the lecture hall semigroup.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Grading {
    /// `x -> (x_1, ..., x_n)`
    Full,
    /// `x -> x_n`
    Last,
    /// `x -> x_n - x_{n-1}`
    LastDiff,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Degree {
    Scalar(BigInt),
    Vector(Vec<BigInt>),
}

impl Grading {
    pub fn degree(self, p: &LatticePoint) -> Result<Degree> {
        let x = p.coords();
        match self {
            Grading::Full => Ok(Degree::Vector(x.to_vec())),
            Grading::Last => Ok(Degree::Scalar(p.last().clone())),
            Grading::LastDiff => {
                let n = x.len();
                if n < 2 {
                    return Err(Error::GradingUndefined("last_diff"));
                }
                Ok(Degree::Scalar(&x[n - 1] - &x[n - 2]))
            }
        }
    }

    /// Scalar degree; `None` for [`Grading::Full`] or an undefined grading.
    pub fn scalar(self, p: &LatticePoint) -> Option<BigInt> {
        match self.degree(p) {
            Ok(Degree::Scalar(d)) => Some(d),
            _ => None,
        }
    }
}

/// How a basis was obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Method {
    ClosedForm,
    Oracle,
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Method::ClosedForm => "closed_form",
            Method::Oracle => "oracle",
        })
    }
}

/// A sequence together with the minimal generating set of its cone's
/// lattice points, kept sorted and duplicate-free.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HilbertBasis {
    sequence: Sequence,
    elements: Vec<LatticePoint>,
    method: Method,
}

impl HilbertBasis {
    /// Sorts and deduplicates `elements`.
    pub fn new(sequence: Sequence, mut elements: Vec<LatticePoint>, method: Method) -> Self {
        elements.sort();
        elements.dedup();
        HilbertBasis {
            sequence,
            elements,
            method,
        }
    }

    pub fn sequence(&self) -> &Sequence {
        &self.sequence
    }

    pub fn elements(&self) -> &[LatticePoint] {
        &self.elements
    }

    pub fn into_elements(self) -> Vec<LatticePoint> {
        self.elements
    }

    pub fn method(&self) -> Method {
        self.method
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn contains(&self, p: &LatticePoint) -> bool {
        self.elements.binary_search(p).is_ok()
    }

    /// Same element set, regardless of sequence scaling or method.
    pub fn same_elements(&self, other: &HilbertBasis) -> bool {
        self.elements == other.elements
    }

    pub fn with_sequence(mut self, sequence: Sequence) -> Self {
        self.sequence = sequence;
        self
    }

    /// `x_n - x_{n-1}` for each element; `None` when `n = 1`.
    pub fn last_diff_degrees(&self) -> Option<Vec<BigInt>> {
        self.elements.iter().map(|p| Grading::LastDiff.scalar(p)).collect()
    }
}
