//! Brute-force ground truth for lecture hall cones.
//!
//! Every irreducible element of a simplicial cone lies in the closed box
//! `{ sum a_i w_i : 0 <= a_i <= 1 }` over its ray generators `w_i`, so the
//! Hilbert basis is found by enumerating that box and discarding reducible
//! points. Generation and Gorenstein checks enumerate all cone points up to a
//! bound on the last coordinate.

use std::collections::HashSet;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::descent;
use crate::error::{Error, Result};
use crate::model::{HilbertBasis, LatticePoint, Method, Sequence};

/// Witness lists are cut off after this many entries.
pub const MAX_WITNESSES: usize = 16;

/// Outcome of an exhaustive check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerificationReport {
    pub subject: String,
    pub checks_run: u64,
    pub passed: bool,
    pub witnesses: Vec<LatticePoint>,
    pub details: Vec<String>,
}

impl VerificationReport {
    fn new(subject: impl Into<String>) -> Self {
        VerificationReport {
            subject: subject.into(),
            checks_run: 0,
            passed: true,
            witnesses: Vec::new(),
            details: Vec::new(),
        }
    }

    fn fail(&mut self, witness: LatticePoint) {
        self.passed = false;
        if self.witnesses.len() < MAX_WITNESSES {
            self.witnesses.push(witness);
        }
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}: {} after {} checks",
            self.subject,
            if self.passed { "passed" } else { "FAILED" },
            self.checks_run
        )?;
        for w in &self.witnesses {
            write!(f, "\n  witness {w}")?;
        }
        Ok(())
    }
}

/// Limits the fundamental box volume the oracle is willing to enumerate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Budget {
    pub max_volume: BigInt,
}

impl Budget {
    pub fn new(max_volume: impl Into<BigInt>) -> Self {
        Budget {
            max_volume: max_volume.into(),
        }
    }

    pub fn check(&self, s: &Sequence) -> Result<()> {
        let volume = s.box_volume();
        if volume > self.max_volume {
            return Err(Error::BudgetExceeded {
                volume,
                budget: self.max_volume.clone(),
            });
        }
        Ok(())
    }
}

impl Default for Budget {
    fn default() -> Self {
        Budget::new(1_000_000)
    }
}

/// Lattice points of the closed fundamental box over the ray generators,
/// sorted lexicographically.
///
/// With `r_j = x_j / s_j`, the box coordinates are `a_1 = r_1`,
/// `a_j = r_j - r_{j-1}` for `1 < j < n` and `a_n = x_n - s_n r_{n-1}`, so
/// each coordinate ranges over an interval fixed by its predecessor.
pub fn fundamental_box_points(s: &Sequence) -> Vec<LatticePoint> {
    let e = s.entries();
    let n = e.len();
    let mut out = Vec::new();
    let mut buf = Vec::with_capacity(n);
    box_rec(e, &mut buf, &mut out);
    out.sort();
    debug_assert!(out.iter().all(|p| p.dim() == n));
    out
}

fn box_rec(e: &[BigInt], buf: &mut Vec<BigInt>, out: &mut Vec<LatticePoint>) {
    let n = e.len();
    let j = buf.len();
    if j == n {
        out.push(LatticePoint::new(buf.clone()));
        return;
    }
    // value of x_j for which a_j = 0 (as numerator over den), then a_j <= 1
    let (lo, hi) = if j == 0 && n == 1 {
        (BigInt::zero(), BigInt::one())
    } else if j == 0 {
        (BigInt::zero(), e[0].clone())
    } else if j < n - 1 {
        let base = &buf[j - 1] * &e[j];
        let lo = ceil_div(&base, &e[j - 1]);
        let hi = (&base + &e[j - 1] * &e[j]).div_floor(&e[j - 1]);
        (lo, hi)
    } else {
        let base = &buf[j - 1] * &e[j];
        let lo = ceil_div(&base, &e[j - 1]);
        let hi = (&base + &e[j - 1]).div_floor(&e[j - 1]);
        (lo, hi)
    };
    let mut x = lo;
    while x <= hi {
        buf.push(x.clone());
        box_rec(e, buf, out);
        buf.pop();
        x += 1;
    }
}

fn ceil_div(a: &BigInt, b: &BigInt) -> BigInt {
    -((-a).div_floor(b))
}

/// Coefficients `a` with `p = sum a_i w_i` over the ray generators, by exact
/// forward substitution on the lower-triangular system `W^T a = p`.
pub fn box_coefficients(s: &Sequence, p: &LatticePoint) -> Result<Vec<BigRational>> {
    s.check_dim(p)?;
    let rays = s.ray_generators();
    let w = rays.rows();
    let n = s.len();
    let mut a: Vec<BigRational> = Vec::with_capacity(n);
    for row in 0..n {
        // equation `row`: sum_{i <= row} w_i[row] a_i = p[row]
        let mut rhs = BigRational::from_integer(p.coords()[row].clone());
        for (i, ai) in a.iter().enumerate() {
            rhs -= ai * BigRational::from_integer(w[i].coords()[row].clone());
        }
        let pivot = w[row].coords()[row].clone();
        a.push(rhs / BigRational::from_integer(pivot));
    }
    Ok(a)
}

/// The Hilbert basis by greedy filtering of the closed fundamental box.
///
/// Candidates are taken in increasing coordinate sum (positive on every
/// nonzero cone point); a candidate is kept unless it lies in an already
/// kept element plus the cone.
pub fn hilbert_basis_oracle(s: &Sequence, budget: &Budget) -> Result<HilbertBasis> {
    budget.check(s)?;
    let mut candidates: Vec<(BigInt, LatticePoint)> = fundamental_box_points(s)
        .into_iter()
        .filter(|p| !p.is_zero())
        .map(|p| (p.coordinate_sum(), p))
        .collect();
    candidates.sort();
    let mut accepted: Vec<LatticePoint> = Vec::new();
    for (_, x) in candidates {
        let reducible = accepted
            .iter()
            .any(|b| b.dominated_by(&x) && s.chain_holds((&x - b).coords(), false));
        if !reducible {
            accepted.push(x);
        }
    }
    Ok(HilbertBasis::new(s.clone(), accepted, Method::Oracle))
}

/// True iff some `b != p` in `basis` has `p - b` in the cone.
pub fn is_reducible(s: &Sequence, p: &LatticePoint, basis: &[LatticePoint]) -> Result<bool> {
    if !s.contains(p)? {
        return Err(Error::NotInCone(p.to_string()));
    }
    for b in basis {
        s.check_dim(b)?;
    }
    Ok(basis
        .iter()
        .filter(|b| *b != p && !b.is_zero())
        .any(|b| s.chain_holds((p - b).coords(), false)))
}

/// Cone lattice points with last coordinate at most `bound`, sorted by
/// coordinate sum and then lexicographically.
pub fn cone_points_up_to(s: &Sequence, bound: &BigInt) -> Vec<LatticePoint> {
    let mut keyed: Vec<(BigInt, LatticePoint)> = descent::chains_up_to(s.entries(), bound)
        .into_iter()
        .map(LatticePoint::new)
        .map(|p| (p.coordinate_sum(), p))
        .collect();
    keyed.sort();
    keyed.into_iter().map(|(_, p)| p).collect()
}

/// Checks that every cone point with last coordinate at most `bound` is a
/// nonnegative integer combination of `basis`.
///
/// Reachability is memoized: `p` is reachable iff `p = 0` or `p - b` is a
/// reachable cone point for some `b`. Witnesses come out in increasing
/// coordinate sum.
pub fn generates_up_to(s: &Sequence, basis: &[LatticePoint], bound: &BigInt) -> VerificationReport {
    let mut report = VerificationReport::new(format!(
        "generation of {} by {} elements up to last coordinate {bound}",
        s,
        basis.len()
    ));
    let mut gens: Vec<&LatticePoint> = Vec::new();
    for b in basis {
        if b.dim() != s.len() || !s.chain_holds(b.coords(), false) {
            report.details.push(format!("basis element {b} is not a cone point"));
            report.fail(b.clone());
        } else if !b.is_zero() {
            gens.push(b);
        }
    }
    if !report.passed {
        return report;
    }
    let mut reachable: HashSet<LatticePoint> = HashSet::new();
    for p in cone_points_up_to(s, bound) {
        report.checks_run += 1;
        let ok = p.is_zero()
            || gens.iter().any(|b| {
                b.dominated_by(&p) && {
                    let rest = &p - b;
                    reachable.contains(&rest)
                }
            });
        if ok {
            reachable.insert(p);
        } else {
            report.fail(p);
        }
    }
    if !report.passed {
        report
            .details
            .push("points not expressible as sums of basis elements".to_string());
    }
    report
}

/// Interior lattice points with last coordinate at most `bound`, sorted.
pub fn interior_points_up_to(s: &Sequence, bound: &BigInt) -> Vec<LatticePoint> {
    let mut pts: Vec<LatticePoint> = descent::chains_up_to(s.entries(), bound)
        .into_iter()
        .filter(|x| s.chain_holds(x, true))
        .map(LatticePoint::new)
        .collect();
    pts.sort();
    pts
}

/// Checks `C° ∩ Z^n = c + (C ∩ Z^n)` on every lattice point with last
/// coordinate at most `bound`.
///
/// Witnesses are interior points `x` with `x - c` outside the cone, or cone
/// points `p` with `c + p` not interior.
pub fn verify_gorenstein_shift(s: &Sequence, c: &LatticePoint, bound: &BigInt) -> Result<VerificationReport> {
    if !s.contains_strictly(c)? {
        return Err(Error::NotInterior(c.to_string()));
    }
    let mut report = VerificationReport::new(format!("Gorenstein shift by {c} on {s} up to last coordinate {bound}"));
    let points = descent::chains_up_to(s.entries(), bound);
    let mut shifted_out = 0u64;
    for x in &points {
        if s.chain_holds(x, true) {
            report.checks_run += 1;
            let p = LatticePoint::new(x.clone());
            if !s.chain_holds((&p - c).coords(), false) {
                shifted_out += 1;
                report.fail(p);
            }
        }
    }
    let mut not_interior = 0u64;
    for x in &points {
        report.checks_run += 1;
        let p = LatticePoint::new(x.clone());
        let moved = &p + c;
        if !s.chain_holds(moved.coords(), true) {
            not_interior += 1;
            report.fail(p);
        }
    }
    report.witnesses.sort();
    if shifted_out > 0 {
        report
            .details
            .push(format!("{shifted_out} interior points x with x - c outside the cone"));
    }
    if not_interior > 0 {
        report
            .details
            .push(format!("{not_interior} cone points p with c + p not interior"));
    }
    Ok(report)
}

/// The coordinatewise smallest interior lattice point: `c_1 = 1`,
/// `c_j = floor(c_{j-1} s_j / s_{j-1}) + 1`. A Gorenstein point, when one
/// exists, must equal it.
pub fn minimal_interior_point(s: &Sequence) -> LatticePoint {
    let e = s.entries();
    let mut c = vec![BigInt::one()];
    for j in 1..e.len() {
        let next = (&c[j - 1] * &e[j]).div_floor(&e[j - 1]) + 1;
        c.push(next);
    }
    LatticePoint::new(c)
}

/// Largest last coordinate worth checking for a given sequence and factor,
/// `factor * s_n`, never negative.
pub fn default_bound(s: &Sequence, factor: u32) -> BigInt {
    let b = s.last() * factor;
    if b.is_negative() {
        BigInt::zero()
    } else {
        b
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn seq(xs: &[i64]) -> Sequence {
        Sequence::new(xs.iter().copied()).unwrap()
    }

    fn pts(list: &[&[i64]]) -> Vec<LatticePoint> {
        list.iter()
            .map(|xs| LatticePoint::new(xs.iter().map(|&x| BigInt::from(x)).collect()))
            .collect()
    }

    #[test]
    fn box_points_small_cases() {
        assert_eq!(
            fundamental_box_points(&seq(&[1, 3])),
            pts(&[&[0, 0], &[0, 1], &[1, 3], &[1, 4]])
        );
        assert_eq!(
            fundamental_box_points(&seq(&[3, 5])),
            pts(&[&[0, 0], &[0, 1], &[1, 2], &[2, 4], &[3, 5], &[3, 6]])
        );
        assert_eq!(fundamental_box_points(&seq(&[1])), pts(&[&[0], &[1]]));
    }

    #[test]
    fn box_coefficients_solve_exactly() {
        let s = seq(&[3, 5]);
        let a = box_coefficients(&s, &LatticePoint::from([1, 2])).unwrap();
        // (1,2) = 1/3 (3,5) + 1/3 (0,1)
        let third = BigRational::new(1.into(), 3.into());
        assert_eq!(a, vec![third.clone(), third]);
        for p in fundamental_box_points(&s) {
            let a = box_coefficients(&s, &p).unwrap();
            assert!(a.iter().all(|x| !x.is_negative() && x <= &BigRational::one()), "{p}");
        }
    }

    #[test]
    fn oracle_small_cases() {
        let b = Budget::default();
        assert_eq!(
            hilbert_basis_oracle(&seq(&[3, 5]), &b).unwrap().elements(),
            pts(&[&[0, 1], &[1, 2], &[3, 5]]).as_slice()
        );
        assert_eq!(
            hilbert_basis_oracle(&seq(&[1, 2, 3]), &b).unwrap().elements(),
            pts(&[&[0, 0, 1], &[0, 1, 2], &[0, 2, 3], &[1, 2, 3]]).as_slice()
        );
        assert_eq!(
            hilbert_basis_oracle(&seq(&[1, 3, 8]), &b).unwrap().elements(),
            pts(&[&[0, 0, 1], &[0, 1, 3], &[0, 3, 8], &[1, 3, 8]]).as_slice()
        );
        assert_eq!(
            hilbert_basis_oracle(&seq(&[5]), &b).unwrap().elements(),
            pts(&[&[1]]).as_slice()
        );
    }

    #[test]
    fn oracle_respects_budget() {
        let err = hilbert_basis_oracle(&seq(&[10, 10, 10, 3]), &Budget::new(999)).unwrap_err();
        assert_eq!(
            err,
            Error::BudgetExceeded {
                volume: 1000.into(),
                budget: 999.into()
            }
        );
        assert!(hilbert_basis_oracle(&seq(&[10, 10, 10, 3]), &Budget::new(1000)).is_ok());
    }

    #[test]
    fn reducibility() {
        let s = seq(&[3, 5]);
        let basis = pts(&[&[0, 1], &[1, 2], &[3, 5]]);
        assert!(is_reducible(&s, &LatticePoint::from([3, 6]), &basis).unwrap());
        assert!(!is_reducible(&s, &LatticePoint::from([1, 2]), &pts(&[&[0, 1], &[3, 5]])).unwrap());
        assert!(is_reducible(&seq(&[1, 2]), &LatticePoint::from([0, 2]), &pts(&[&[0, 1]])).unwrap());
        assert!(matches!(
            is_reducible(&s, &LatticePoint::from([1, 1]), &basis),
            Err(Error::NotInCone(_))
        ));
    }

    #[test]
    fn generation_checks() {
        let s = seq(&[1, 2, 3]);
        let full = pts(&[&[0, 0, 1], &[0, 1, 2], &[0, 2, 3], &[1, 2, 3]]);
        let ok = generates_up_to(&s, &full, &6.into());
        assert!(ok.passed, "{ok}");
        assert_eq!(ok.checks_run, 27);

        let missing = pts(&[&[0, 0, 1], &[0, 2, 3], &[1, 2, 3]]);
        let bad = generates_up_to(&s, &missing, &6.into());
        assert!(!bad.passed);
        assert_eq!(bad.witnesses[0], LatticePoint::from([0, 1, 2]));

        let vacuous = generates_up_to(&s, &[], &0.into());
        assert!(vacuous.passed);
        assert_eq!(vacuous.checks_run, 1);

        let outside = generates_up_to(&s, &pts(&[&[1, 1, 1]]), &3.into());
        assert!(!outside.passed);
        assert_eq!(outside.witnesses, pts(&[&[1, 1, 1]]));
    }

    #[test]
    fn interior_points() {
        assert_eq!(interior_points_up_to(&seq(&[1, 2]), &3.into()), pts(&[&[1, 3]]));
        assert_eq!(
            interior_points_up_to(&seq(&[2, 3]), &4.into()),
            pts(&[&[1, 2], &[1, 3], &[1, 4], &[2, 4]])
        );
        assert!(interior_points_up_to(&seq(&[4, 7, 2]), &0.into()).is_empty());
    }

    #[test]
    fn gorenstein_shift_examples() {
        let ok = verify_gorenstein_shift(&seq(&[1, 2, 3]), &LatticePoint::from([1, 3, 5]), &8.into()).unwrap();
        assert!(ok.passed, "{ok}");
        let ok = verify_gorenstein_shift(&seq(&[3, 5]), &LatticePoint::from([1, 2]), &10.into()).unwrap();
        assert!(ok.passed, "{ok}");
        let bad = verify_gorenstein_shift(&seq(&[3, 4]), &LatticePoint::from([1, 2]), &10.into()).unwrap();
        assert!(!bad.passed);
        assert!(!bad.witnesses.is_empty());
        assert!(matches!(
            verify_gorenstein_shift(&seq(&[3, 5]), &LatticePoint::from([0, 2]), &10.into()),
            Err(Error::NotInterior(_))
        ));
    }

    #[test]
    fn minimal_interior_points() {
        assert_eq!(minimal_interior_point(&seq(&[3, 5])), LatticePoint::from([1, 2]));
        assert_eq!(minimal_interior_point(&seq(&[1, 2, 3])), LatticePoint::from([1, 3, 5]));
        assert_eq!(minimal_interior_point(&seq(&[7])), LatticePoint::from([1]));
    }
}
