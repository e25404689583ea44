//! Explicit Hilbert bases for the known families of lecture hall cones.
//!
//! * 1 mod k sequences `(1, k+1, ..., (n-1)k+1)`: the degree-one elements
//!   `v_A` for `A ⊆ [n-2]` plus every cone point whose top pair is
//!   `((n-2)k+1, (n-1)k+1)`.
//! * l-sequences: the union over `i = 0..=n` of the strata with top pair
//!   `(s_i, s_{i+1})`, where `s_0 = 0`.
//! * u-generated Gorenstein sequences in dimensions 2, 3 and 4, each given as
//!   an explicit list (dimension 4 splits into cases a through e on
//!   `(s_1, u_1)`).
//!
//! For some parameter values the low-dimensional lists contain an element
//! that is the sum of another listed element and a cone point (for example
//! `(1, k)` when `s = 1` in dimension 2). Constructors drop such elements so
//! the result is always minimal; [`literal_list`] keeps the raw list.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::descent;
use crate::error::{Error, Result};
use crate::gorenstein;
use crate::model::{l_sequence_terms, HilbertBasis, LatticePoint, Method, Sequence};
use crate::oracle::{self, Budget};

/// Case label of the four-dimensional theorem, fixed by `(s_1, u_1)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Dim4Case {
    /// `s_1 = 1, u_1 = 2`
    A,
    /// `s_1 = 1, u_1 >= 3`
    B,
    /// `s_1 = 2, u_1 = 1`
    C,
    /// `s_1 >= 3, u_1 = 1`
    D,
    /// `s_1 >= 2, u_1 >= 2`
    E,
}

impl Dim4Case {
    pub fn classify(s1: &BigInt, u1: &BigInt) -> Result<Dim4Case> {
        let one = BigInt::one();
        let two = BigInt::from(2);
        let case = if s1 == &one && u1 == &two {
            Dim4Case::A
        } else if s1 == &one && u1 > &two {
            Dim4Case::B
        } else if s1 == &two && u1 == &one {
            Dim4Case::C
        } else if s1 > &two && u1 == &one {
            Dim4Case::D
        } else if s1 >= &two && u1 >= &two {
            Dim4Case::E
        } else {
            return Err(Error::InvalidParameters(format!(
                "(s_1, u_1) = ({s1}, {u1}) does not generate a positive sequence"
            )));
        };
        Ok(case)
    }

    pub fn label(self) -> char {
        match self {
            Dim4Case::A => 'a',
            Dim4Case::B => 'b',
            Dim4Case::C => 'c',
            Dim4Case::D => 'd',
            Dim4Case::E => 'e',
        }
    }
}

impl fmt::Display for Dim4Case {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.label())
    }
}

/// Which family a sequence belongs to, with the parameters that rebuild it.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Family {
    ModK { k: BigInt, n: usize },
    LSeq { ell: BigInt, n: usize },
    Dim2 { s: BigInt, k: BigInt },
    Dim3 { s: BigInt, k: BigInt, ell: BigInt },
    Dim4 { s1: BigInt, u: [BigInt; 3], case: Dim4Case },
    Custom,
}

impl Family {
    /// Dimension-4 descriptor with its case derived from `(s1, u1)`.
    pub fn dim4(s1: impl Into<BigInt>, u: [i64; 3]) -> Result<Family> {
        let s1 = s1.into();
        let u = u.map(BigInt::from);
        let case = Dim4Case::classify(&s1, &u[0])?;
        Ok(Family::Dim4 { s1, u, case })
    }

    /// Rebuilds the sequence from the parameters.
    pub fn sequence(&self) -> Result<Sequence> {
        match self {
            Family::ModK { k, n } => Sequence::modk(k.clone(), *n),
            Family::LSeq { ell, n } => Sequence::l_sequence(ell.clone(), *n),
            Family::Dim2 { s, k } => Sequence::from_u(s.clone(), &[k.clone()]),
            Family::Dim3 { s, k, ell } => Sequence::from_u(s.clone(), &[k.clone(), ell.clone()]),
            Family::Dim4 { s1, u, .. } => Sequence::from_u(s1.clone(), u),
            Family::Custom => Err(Error::CustomFamily),
        }
    }

    /// The closed-form Hilbert basis for this family instance.
    pub fn basis(&self) -> Result<HilbertBasis> {
        match self {
            Family::ModK { k, n } => basis_modk(k, *n),
            Family::LSeq { ell, n } => basis_lseq(ell, *n),
            Family::Dim2 { s, k } => basis_gorenstein_dim2(s, k),
            Family::Dim3 { s, k, ell } => basis_gorenstein_dim3(s, k, ell),
            Family::Dim4 { s1, u, .. } => basis_gorenstein_dim4(s1, u),
            Family::Custom => Err(Error::CustomFamily),
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            Family::ModK { .. } => "modk",
            Family::LSeq { .. } => "lseq",
            Family::Dim2 { .. } => "dim2",
            Family::Dim3 { .. } => "dim3",
            Family::Dim4 { .. } => "dim4",
            Family::Custom => "custom",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::ModK { k, n } => write!(f, "modk(k={k},n={n})"),
            Family::LSeq { ell, n } => write!(f, "lseq(l={ell},n={n})"),
            Family::Dim2 { s, k } => write!(f, "dim2(s={s},k={k})"),
            Family::Dim3 { s, k, ell } => write!(f, "dim3(s={s},k={k},l={ell})"),
            Family::Dim4 { s1, u, case } => {
                write!(f, "dim4(s1={s1},u=({},{},{}),case={case})", u[0], u[1], u[2])
            }
            Family::Custom => write!(f, "custom"),
        }
    }
}

fn point(coords: Vec<BigInt>) -> LatticePoint {
    LatticePoint::new(coords)
}

fn int(x: i64) -> BigInt {
    BigInt::from(x)
}

/// Splits `list` into the elements that are not of the form `b + (cone point)`
/// for another listed `b`, and those that are. Both halves come back sorted.
pub fn prune_reducible(s: &Sequence, list: &[LatticePoint]) -> (Vec<LatticePoint>, Vec<LatticePoint>) {
    let mut sorted = list.to_vec();
    sorted.sort();
    sorted.dedup();
    let (mut kept, mut pruned) = (Vec::new(), Vec::new());
    for x in &sorted {
        let reducible = sorted
            .iter()
            .any(|b| b != x && !b.is_zero() && b.dominated_by(x) && s.chain_holds((x - b).coords(), false));
        if reducible {
            pruned.push(x.clone());
        } else {
            kept.push(x.clone());
        }
    }
    (kept, pruned)
}

/// `v_A = (0, ..., 0, a_1, ..., a_r, a_r + 1)` for every `A ⊆ [m]`, with
/// `v_∅ = (0, ..., 0, 1)`, in dimension `dim`.
fn subset_elements(m: usize, dim: usize) -> Result<Vec<LatticePoint>> {
    if m >= 32 {
        return Err(Error::InvalidParameters(format!("2^{m} subset elements is too many to list")));
    }
    let mut out = Vec::with_capacity(1 << m);
    for mask in 0u64..(1u64 << m) {
        let set: Vec<i64> = (1..=m as i64).filter(|a| mask & (1 << (a - 1)) != 0).collect();
        let mut v = vec![BigInt::zero(); dim];
        match set.last() {
            None => v[dim - 1] = BigInt::one(),
            Some(&top) => {
                let r = set.len();
                for (i, a) in set.iter().enumerate() {
                    v[dim - 1 - r + i] = int(*a);
                }
                v[dim - 1] = int(top + 1);
            }
        }
        out.push(point(v));
    }
    Ok(out)
}

fn stratum_points(s: &Sequence, penultimate: &BigInt, last: &BigInt) -> Vec<LatticePoint> {
    descent::stratum(s.entries(), penultimate, last)
        .into_iter()
        .map(point)
        .collect()
}

/// Hilbert basis of the 1 mod k cone in dimension `n >= 2`.
pub fn basis_modk(k: &BigInt, n: usize) -> Result<HilbertBasis> {
    if !k.is_positive() || n < 2 {
        return Err(Error::InvalidParameters(format!("modk basis needs k >= 1, n >= 2 (k = {k}, n = {n})")));
    }
    let s = Sequence::modk(k.clone(), n)?;
    let mut elements = subset_elements(n - 2, n)?;
    let e = s.entries();
    elements.extend(stratum_points(&s, &e[n - 2], &e[n - 1]));
    Ok(HilbertBasis::new(s, elements, Method::ClosedForm))
}

/// Hilbert basis of the l-sequence cone in dimension `n >= 2`.
pub fn basis_lseq(ell: &BigInt, n: usize) -> Result<HilbertBasis> {
    if ell < &int(2) || n < 2 {
        return Err(Error::InvalidParameters(format!("lseq basis needs l >= 2, n >= 2 (l = {ell}, n = {n})")));
    }
    let s = Sequence::l_sequence(ell.clone(), n)?;
    // s_0, ..., s_{n+1}; the i = n stratum has top pair (s_n, s_{n+1}) and is
    // empty because s_n / s_{n-1} > s_{n+1} / s_n
    let terms = l_sequence_terms(ell, n + 2);
    let mut elements = Vec::new();
    for i in 0..=n {
        elements.extend(stratum_points(&s, &terms[i], &terms[i + 1]));
    }
    Ok(HilbertBasis::new(s, elements, Method::ClosedForm))
}

/// The raw element list of the dimension-2 theorem for `(s, ks - 1)`:
/// `{(0,1), (1,k), (s, ks-1)}`.
pub fn literal_dim2(s: &BigInt, k: &BigInt) -> Result<Vec<LatticePoint>> {
    let seq = Sequence::from_u(s.clone(), &[k.clone()])?;
    let s2 = seq.entries()[1].clone();
    Ok(vec![
        point(vec![int(0), int(1)]),
        point(vec![int(1), k.clone()]),
        point(vec![s.clone(), s2]),
    ])
}

/// Hilbert basis for `(s, ks - 1)`; three elements, or two when `s = 1`.
pub fn basis_gorenstein_dim2(s: &BigInt, k: &BigInt) -> Result<HilbertBasis> {
    let seq = Sequence::from_u(s.clone(), &[k.clone()])?;
    let (kept, _) = prune_reducible(&seq, &literal_dim2(s, k)?);
    Ok(HilbertBasis::new(seq, kept, Method::ClosedForm))
}

/// The raw element list of the dimension-3 theorem for
/// `(s, ks - 1, l(ks - 1) - s)`.
pub fn literal_dim3(s: &BigInt, k: &BigInt, ell: &BigInt) -> Result<Vec<LatticePoint>> {
    let seq = Sequence::from_u(s.clone(), &[k.clone(), ell.clone()])?;
    let e = seq.entries();
    let zero = int(0);
    let one = int(1);
    let list = if s > &one {
        let mut v = vec![
            point(vec![zero.clone(), zero.clone(), one.clone()]),
            point(vec![zero.clone(), one.clone(), ell.clone()]),
            point(vec![zero.clone(), k.clone(), ell * k - 1]),
            point(vec![one.clone(), k.clone(), ell * k - 1]),
        ];
        let mut j = BigInt::zero();
        while &j <= s {
            v.push(point(vec![j.clone(), e[1].clone(), e[2].clone()]));
            j += 1;
        }
        v
    } else {
        let km1: BigInt = k - 1;
        vec![
            point(vec![zero.clone(), zero.clone(), one.clone()]),
            point(vec![zero.clone(), one.clone(), ell.clone()]),
            point(vec![zero.clone(), km1.clone(), ell * &km1 - 1]),
            point(vec![one.clone(), km1.clone(), ell * &km1 - 1]),
        ]
    };
    Ok(list)
}

/// Hilbert basis for `(s, ks - 1, l(ks - 1) - s)`.
pub fn basis_gorenstein_dim3(s: &BigInt, k: &BigInt, ell: &BigInt) -> Result<HilbertBasis> {
    let seq = Sequence::from_u(s.clone(), &[k.clone(), ell.clone()])?;
    let (kept, _) = prune_reducible(&seq, &literal_dim3(s, k, ell)?);
    Ok(HilbertBasis::new(seq, kept, Method::ClosedForm))
}

/// The raw element list of the dimension-4 theorem for the sequence
/// generated by `s1` and `u = (u_1, u_2, u_3)`, with its case.
pub fn literal_dim4(s1: &BigInt, u: &[BigInt; 3]) -> Result<(Dim4Case, Vec<LatticePoint>)> {
    let seq = Sequence::from_u(s1.clone(), u)?;
    let case = Dim4Case::classify(s1, &u[0])?;
    let e = seq.entries();
    let (s2, s3, s4) = (&e[1], &e[2], &e[3]);
    let [u1, u2, u3] = u;
    // Gorenstein point c_1 = 1, c_2 = u_1, c_{i+1} = u_i c_i - c_{i-1}
    let c2 = u1.clone();
    let c3: BigInt = u2 * &c2 - 1;
    let c4 = u3 * &c3 - &c2;
    let z = || int(0);
    let p4 = |a: BigInt, b: BigInt, c: BigInt, d: BigInt| point(vec![a, b, c, d]);
    let unit = p4(z(), z(), z(), int(1));
    let low = p4(z(), z(), int(1), u3.clone());
    let mid0 = p4(z(), z(), u2.clone(), u2 * u3 - 1);
    let mid1 = p4(z(), int(1), u2.clone(), u2 * u3 - 1);
    let top_stratum = || stratum_points(&seq, s3, s4);

    let list = match case {
        Dim4Case::A => vec![
            unit,
            low,
            p4(z(), z(), s3.clone(), s4.clone()),
            p4(z(), int(1), s3.clone(), s4.clone()),
            p4(int(1), int(1), s3.clone(), s4.clone()),
        ],
        Dim4Case::B => {
            let mut v = Vec::new();
            let mut j = BigInt::zero();
            while &j <= s2 {
                v.push(p4(z(), j.clone(), s3.clone(), s4.clone()));
                j += 1;
            }
            v.push(p4(int(1), s2.clone(), s3.clone(), s4.clone()));
            v.extend([unit, low, mid0, mid1]);
            v
        }
        Dim4Case::C => vec![
            p4(int(2), int(1), s3.clone(), s4.clone()),
            p4(int(1), int(1), s3.clone(), s4.clone()),
            p4(z(), int(1), s3.clone(), s4.clone()),
            p4(z(), z(), s3.clone(), s4.clone()),
            low,
            unit,
        ],
        Dim4Case::D => {
            let mut v = top_stratum();
            v.extend([
                unit,
                low,
                p4(z(), z(), c3.clone(), c4.clone()),
                p4(z(), int(1), c3.clone(), c4.clone()),
                p4(int(1), int(1), c3.clone(), c4.clone()),
            ]);
            v
        }
        Dim4Case::E => {
            let mut v = top_stratum();
            let mut j = BigInt::zero();
            while j <= c2 {
                v.push(p4(z(), j.clone(), c3.clone(), c4.clone()));
                j += 1;
            }
            v.extend([p4(int(1), c2.clone(), c3.clone(), c4.clone()), unit, low, mid0, mid1]);
            v
        }
    };
    Ok((case, list))
}

/// Hilbert basis for the u-generated sequence of `(s1, u)` in dimension 4.
pub fn basis_gorenstein_dim4(s1: &BigInt, u: &[BigInt; 3]) -> Result<HilbertBasis> {
    let seq = Sequence::from_u(s1.clone(), u)?;
    let (_, list) = literal_dim4(s1, u)?;
    let (kept, _) = prune_reducible(&seq, &list);
    Ok(HilbertBasis::new(seq, kept, Method::ClosedForm))
}

/// The theorem's element list before minimality pruning, deduplicated and
/// sorted. For the 1 mod k and l-sequence families this is the basis itself.
pub fn literal_list(family: &Family) -> Result<Vec<LatticePoint>> {
    let mut list = match family {
        Family::ModK { .. } | Family::LSeq { .. } => family.basis()?.into_elements(),
        Family::Dim2 { s, k } => literal_dim2(s, k)?,
        Family::Dim3 { s, k, ell } => literal_dim3(s, k, ell)?,
        Family::Dim4 { s1, u, .. } => literal_dim4(s1, u)?.1,
        Family::Custom => return Err(Error::CustomFamily),
    };
    list.sort();
    list.dedup();
    Ok(list)
}

/// Elements of the theorem's list that are reducible within the list itself.
/// Empty exactly when the literal list is already minimal.
pub fn reducible_in_literal_list(family: &Family) -> Result<Vec<LatticePoint>> {
    let seq = family.sequence()?;
    let list = literal_list(family)?;
    Ok(prune_reducible(&seq, &list).1)
}

/// Every family the sequence belongs to, in priority order
/// modk, lseq, dim2, dim3, dim4.
pub fn recognize(s: &Sequence) -> Vec<Family> {
    let e = s.entries();
    let n = e.len();
    let mut found = Vec::new();
    if n < 2 {
        return found;
    }
    let one = BigInt::one();
    if e[0] == one {
        let k: BigInt = &e[1] - 1;
        if k.is_positive() && e.iter().enumerate().all(|(i, x)| x == &(&k * i + 1)) {
            found.push(Family::ModK { k, n });
        }
        let ell = e[1].clone();
        if ell >= int(2) && l_sequence_terms(&ell, n + 1)[1..] == *e {
            found.push(Family::LSeq { ell, n });
        }
    }
    if let Some(u) = gorenstein::detect_u_generated(s) {
        let u = u.into_entries();
        let s1 = e[0].clone();
        match n {
            2 => found.push(Family::Dim2 {
                s: s1,
                k: u[0].clone(),
            }),
            3 => found.push(Family::Dim3 {
                s: s1,
                k: u[0].clone(),
                ell: u[1].clone(),
            }),
            4 => {
                if let Ok(case) = Dim4Case::classify(&s1, &u[0]) {
                    found.push(Family::Dim4 {
                        s1,
                        u: [u[0].clone(), u[1].clone(), u[2].clone()],
                        case,
                    });
                }
            }
            _ => {}
        }
    }
    found
}

/// The first matching family and its closed-form basis, if any.
pub fn closed_form_for(s: &Sequence) -> Option<(Family, HilbertBasis)> {
    recognize(s)
        .into_iter()
        .find_map(|f| f.basis().ok().map(|b| (f, b)))
}

/// Hilbert basis of any sequence: the closed form of the gcd-normalized
/// sequence when one is known, otherwise the oracle within `budget`. The
/// cone only depends on `s / gcd(s)`, so the basis is reported against the
/// original sequence.
pub fn hilbert_basis(s: &Sequence, budget: &Budget) -> Result<(Option<Family>, HilbertBasis)> {
    let normalized = s.normalize();
    if let Some((family, basis)) = closed_form_for(&normalized) {
        return Ok((Some(family), basis.with_sequence(s.clone())));
    }
    let basis = oracle::hilbert_basis_oracle(&normalized, budget)?;
    Ok((None, basis.with_sequence(s.clone())))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pts(list: &[&[i64]]) -> Vec<LatticePoint> {
        list.iter()
            .map(|xs| LatticePoint::new(xs.iter().map(|&x| BigInt::from(x)).collect()))
            .collect()
    }

    fn sorted(mut v: Vec<LatticePoint>) -> Vec<LatticePoint> {
        v.sort();
        v
    }

    fn seq(xs: &[i64]) -> Sequence {
        Sequence::new(xs.iter().copied()).unwrap()
    }

    #[test]
    fn modk_examples() {
        let b = basis_modk(&int(1), 3).unwrap();
        assert_eq!(b.elements(), pts(&[&[0, 0, 1], &[0, 1, 2], &[0, 2, 3], &[1, 2, 3]]).as_slice());
        let b = basis_modk(&int(2), 3).unwrap();
        assert_eq!(b.elements(), pts(&[&[0, 0, 1], &[0, 1, 2], &[0, 3, 5], &[1, 3, 5]]).as_slice());
        let b = basis_modk(&int(2), 4).unwrap();
        assert_eq!(b.len(), 9);
        let w: Vec<_> = b
            .elements()
            .iter()
            .filter(|p| p.coords()[2] == int(5) && p.coords()[3] == int(7))
            .map(|p| (p.coords()[0].clone(), p.coords()[1].clone()))
            .collect();
        let expected: Vec<(BigInt, BigInt)> = [(0, 0), (0, 1), (0, 2), (0, 3), (1, 3)]
            .iter()
            .map(|&(a, b)| (int(a), int(b)))
            .collect();
        assert_eq!(w, expected);
        assert!(basis_modk(&int(0), 3).is_err());
        assert!(basis_modk(&int(2), 1).is_err());
    }

    #[test]
    fn lseq_examples() {
        assert_eq!(basis_lseq(&int(3), 2).unwrap().elements(), pts(&[&[0, 1], &[1, 3]]).as_slice());
        assert_eq!(
            basis_lseq(&int(3), 3).unwrap().elements(),
            pts(&[&[0, 0, 1], &[0, 1, 3], &[0, 3, 8], &[1, 3, 8]]).as_slice()
        );
        let two = basis_lseq(&int(2), 4).unwrap();
        assert_eq!(two.elements(), subset_sorted(3, 4).as_slice());
        assert!(basis_lseq(&int(1), 3).is_err());
    }

    fn subset_sorted(m: usize, dim: usize) -> Vec<LatticePoint> {
        sorted(subset_elements(m, dim).unwrap())
    }

    #[test]
    fn dim2_examples() {
        assert_eq!(
            basis_gorenstein_dim2(&int(3), &int(2)).unwrap().elements(),
            pts(&[&[0, 1], &[1, 2], &[3, 5]]).as_slice()
        );
        assert_eq!(
            basis_gorenstein_dim2(&int(1), &int(3)).unwrap().elements(),
            pts(&[&[0, 1], &[1, 2]]).as_slice()
        );
        assert_eq!(
            basis_gorenstein_dim2(&int(2), &int(3)).unwrap().elements(),
            pts(&[&[0, 1], &[1, 3], &[2, 5]]).as_slice()
        );
        assert!(basis_gorenstein_dim2(&int(1), &int(1)).is_err());
    }

    #[test]
    fn dim3_examples() {
        assert_eq!(
            basis_gorenstein_dim3(&int(2), &int(2), &int(2)).unwrap().elements(),
            pts(&[&[0, 0, 1], &[0, 1, 2], &[0, 2, 3], &[0, 3, 4], &[1, 2, 3], &[1, 3, 4], &[2, 3, 4]]).as_slice()
        );
        assert_eq!(
            basis_gorenstein_dim3(&int(1), &int(3), &int(2)).unwrap().elements(),
            pts(&[&[0, 0, 1], &[0, 1, 2], &[0, 2, 3], &[1, 2, 3]]).as_slice()
        );
        // (3,2,1): the literal list has 8 entries but (0,1,2) = (0,1,1) + (0,0,1)
        let fam = Family::Dim3 {
            s: int(3),
            k: int(1),
            ell: int(2),
        };
        assert_eq!(literal_list(&fam).unwrap().len(), 8);
        assert_eq!(reducible_in_literal_list(&fam).unwrap(), pts(&[&[0, 1, 2]]));
        assert_eq!(
            fam.basis().unwrap().elements(),
            pts(&[&[0, 0, 1], &[0, 1, 1], &[0, 2, 1], &[1, 1, 1], &[1, 2, 1], &[2, 2, 1], &[3, 2, 1]]).as_slice()
        );
        assert!(basis_gorenstein_dim3(&int(1), &int(1), &int(3)).is_err());
    }

    #[test]
    fn dim4_examples() {
        let a = basis_gorenstein_dim4(&int(1), &[int(2), int(3), int(2)]).unwrap();
        assert_eq!(a.sequence(), &seq(&[1, 1, 2, 3]));
        assert_eq!(
            a.elements(),
            pts(&[&[0, 0, 0, 1], &[0, 0, 1, 2], &[0, 0, 2, 3], &[0, 1, 2, 3], &[1, 1, 2, 3]]).as_slice()
        );
        // (2,1,1,1): the literal list of case c has (0,0,1,2) = (0,0,1,1) + (0,0,0,1)
        let (case, list) = literal_dim4(&int(2), &[int(1), int(3), int(2)]).unwrap();
        assert_eq!(case, Dim4Case::C);
        assert_eq!(
            sorted(list),
            pts(&[&[0, 0, 0, 1], &[0, 0, 1, 1], &[0, 0, 1, 2], &[0, 1, 1, 1], &[1, 1, 1, 1], &[2, 1, 1, 1]])
        );
        let c = basis_gorenstein_dim4(&int(2), &[int(1), int(3), int(2)]).unwrap();
        assert_eq!(
            c.elements(),
            pts(&[&[0, 0, 0, 1], &[0, 0, 1, 1], &[0, 1, 1, 1], &[1, 1, 1, 1], &[2, 1, 1, 1]]).as_slice()
        );

        let e = basis_gorenstein_dim4(&int(2), &[int(2), int(2), int(2)]).unwrap();
        assert_eq!(e.sequence(), &seq(&[2, 3, 4, 5]));
        assert_eq!(e.len(), 15);
        let top = e
            .elements()
            .iter()
            .filter(|p| p.coords()[2] == int(4) && p.coords()[3] == int(5))
            .count();
        assert_eq!(top, 7);
        for p in pts(&[&[0, 0, 3, 4], &[0, 1, 3, 4], &[0, 2, 3, 4], &[1, 2, 3, 4], &[0, 0, 0, 1], &[0, 0, 1, 2], &[0, 0, 2, 3], &[0, 1, 2, 3]]) {
            assert!(e.contains(&p), "{p}");
        }
        assert!(basis_gorenstein_dim4(&int(1), &[int(1), int(2), int(2)]).is_err());
    }

    #[test]
    fn dim4_case_table() {
        let cases = [((1, 2), Dim4Case::A), ((1, 5), Dim4Case::B), ((2, 1), Dim4Case::C), ((4, 1), Dim4Case::D), ((2, 2), Dim4Case::E), ((7, 3), Dim4Case::E)];
        for ((s1, u1), want) in cases {
            assert_eq!(Dim4Case::classify(&int(s1), &int(u1)).unwrap(), want);
        }
        assert!(Dim4Case::classify(&int(1), &int(1)).is_err());
    }

    #[test]
    fn recognition() {
        let (fam, basis) = closed_form_for(&seq(&[1, 3, 5, 7])).unwrap();
        assert_eq!(fam, Family::ModK { k: int(2), n: 4 });
        assert_eq!(basis.len(), 9);

        let (fam, _) = closed_form_for(&seq(&[2, 3, 4, 5])).unwrap();
        assert_eq!(fam, Family::dim4(2, [2, 2, 2]).unwrap());

        assert!(closed_form_for(&seq(&[3, 4])).is_none());
        assert!(closed_form_for(&seq(&[5])).is_none());

        let all = recognize(&seq(&[1, 2, 3, 4]));
        assert_eq!(all.len(), 3, "{all:?}");
        assert_eq!(all[0].name(), "modk");
        assert_eq!(all[1].name(), "lseq");
        assert_eq!(all[2].name(), "dim4");
        assert_eq!(recognize(&seq(&[1, 3, 8]))[0], Family::LSeq { ell: int(3), n: 3 });
    }

    #[test]
    fn descriptors_rebuild_their_sequences() {
        for s in [seq(&[1, 3, 5, 7]), seq(&[1, 4, 15]), seq(&[3, 5]), seq(&[2, 3, 4]), seq(&[2, 3, 4, 5]), seq(&[1, 2, 3, 4])] {
            for fam in recognize(&s) {
                assert_eq!(fam.sequence().unwrap(), s, "{fam}");
            }
        }
    }

    #[test]
    fn scaled_sequences_share_the_basis() {
        let budget = Budget::default();
        let (fam, base) = hilbert_basis(&seq(&[2, 3, 4]), &budget).unwrap();
        assert_eq!(fam.unwrap().name(), "dim3");
        let (fam3, tripled) = hilbert_basis(&seq(&[6, 9, 12]), &budget).unwrap();
        assert_eq!(fam3.unwrap().name(), "dim3");
        assert_eq!(tripled.sequence(), &seq(&[6, 9, 12]));
        assert_eq!(tripled.elements(), base.elements());

        let (none, fallback) = hilbert_basis(&seq(&[3, 4]), &budget).unwrap();
        assert!(none.is_none());
        assert_eq!(fallback.method(), Method::Oracle);
        assert_eq!(fallback.elements(), pts(&[&[0, 1], &[1, 2], &[2, 3], &[3, 4]]).as_slice());
    }

    #[test]
    fn pruning_keeps_generators() {
        let s = seq(&[1, 2]);
        let (kept, pruned) = prune_reducible(&s, &pts(&[&[0, 1], &[1, 2], &[1, 3], &[0, 1]]));
        assert_eq!(kept, pts(&[&[0, 1], &[1, 2]]));
        assert_eq!(pruned, pts(&[&[1, 3]]));
    }
}
