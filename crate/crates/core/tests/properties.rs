use lecture_hall::closed_form::{hilbert_basis, Family};
use lecture_hall::ehrhart::{count_p, count_r, pick_counts};
use lecture_hall::gorenstein::{certificate, detect_u_generated, geometric_certificate, gorenstein_recurrence};
use lecture_hall::model::{Degree, Grading};
use lecture_hall::oracle::{fundamental_box_points, generates_up_to, hilbert_basis_oracle, Budget};
use lecture_hall::{LatticePoint, Sequence};
use num_bigint::BigInt;
use num_integer::Integer;
use proptest::prelude::*;

fn sequence(max_len: usize, max_entry: i64) -> impl Strategy<Value = Sequence> {
    prop::collection::vec(1..=max_entry, 1..=max_len).prop_map(|v| Sequence::new(v).unwrap())
}

/// A cone point built as a nonnegative combination of the ray generators.
fn cone_point(s: &Sequence, coeffs: &[u8]) -> LatticePoint {
    let rays = s.ray_generators();
    let mut p = LatticePoint::zero(s.len());
    for (row, c) in rays.rows().iter().zip(coeffs) {
        for _ in 0..*c {
            p = &p + row;
        }
    }
    p
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn determinant_is_product_of_leading_entries(s in sequence(6, 20)) {
        let e = s.entries();
        let product: BigInt = e[..e.len() - 1].iter().product();
        prop_assert_eq!(s.ray_generators().determinant().magnitude().clone(), product.magnitude().clone());
        prop_assert_eq!(s.box_volume(), product);
    }

    #[test]
    fn rays_lie_on_the_cone(s in sequence(6, 20)) {
        for row in s.ray_generators().rows() {
            prop_assert!(s.contains(row).unwrap());
            prop_assert_eq!(s.contains_strictly(row).unwrap(), s.len() == 1);
        }
    }

    #[test]
    fn membership_ignores_common_factors(
        s in sequence(5, 12),
        m in 2i64..5,
        raw in prop::collection::vec(0i64..40, 5),
    ) {
        let p = LatticePoint::new(raw[..s.len()].iter().map(|&x| BigInt::from(x)).collect());
        let scaled = s.scale(&BigInt::from(m)).unwrap();
        prop_assert_eq!(s.contains(&p).unwrap(), scaled.contains(&p).unwrap());
        prop_assert_eq!(s.contains(&p).unwrap(), s.normalize().contains(&p).unwrap());
        prop_assert_eq!(s.contains_strictly(&p).unwrap(), scaled.contains_strictly(&p).unwrap());
    }

    #[test]
    fn sums_stay_in_the_cone(
        s in sequence(5, 12),
        a in prop::collection::vec(0u8..4, 5),
        b in prop::collection::vec(0u8..4, 5),
    ) {
        let p = cone_point(&s, &a);
        let q = cone_point(&s, &b);
        let sum = &p + &q;
        prop_assert!(s.contains(&sum).unwrap());
        if s.contains_strictly(&p).unwrap() {
            prop_assert!(s.contains_strictly(&sum).unwrap());
        }
        for g in [Grading::Full, Grading::Last, Grading::LastDiff] {
            if s.len() < 2 && g == Grading::LastDiff {
                continue;
            }
            match (g.degree(&p).unwrap(), g.degree(&q).unwrap(), g.degree(&sum).unwrap()) {
                (Degree::Scalar(x), Degree::Scalar(y), Degree::Scalar(z)) => prop_assert_eq!(x + y, z),
                (Degree::Vector(x), Degree::Vector(y), Degree::Vector(z)) => {
                    let added: Vec<BigInt> = x.iter().zip(&y).map(|(i, j)| i + j).collect();
                    prop_assert_eq!(added, z);
                }
                _ => prop_assert!(false, "grading changed shape"),
            }
        }
        if let Degree::Vector(v) = Grading::Full.degree(&p).unwrap() {
            prop_assert_eq!(v.iter().all(|x| x == &BigInt::from(0)), p.is_zero());
        }
    }

    #[test]
    fn oracle_basis_is_confined_and_generates(s in sequence(3, 7)) {
        let basis = hilbert_basis_oracle(&s, &Budget::default()).unwrap();
        let boxed = fundamental_box_points(&s);
        for p in basis.elements() {
            prop_assert!(boxed.binary_search(p).is_ok(), "{} outside the box", p);
        }
        let bound = s.last() * 2;
        let report = generates_up_to(&s, basis.elements(), &bound);
        prop_assert!(report.passed, "{}", report);
        for p in basis.elements() {
            let rest: Vec<LatticePoint> = basis.elements().iter().filter(|q| *q != p).cloned().collect();
            let check = generates_up_to(&s, &rest, p.last());
            prop_assert_eq!(check.witnesses.first(), Some(p));
        }
    }

    #[test]
    fn basis_is_invariant_under_scaling(s in sequence(3, 6), m in 2i64..=3) {
        let budget = Budget::default();
        let (_, base) = hilbert_basis(&s, &budget).unwrap();
        let scaled = s.scale(&BigInt::from(m)).unwrap();
        let (_, big) = hilbert_basis(&scaled, &budget).unwrap();
        prop_assert_eq!(base.elements(), big.elements());
        let direct = hilbert_basis_oracle(&scaled, &budget).unwrap();
        prop_assert_eq!(base.elements(), direct.elements());
    }

    #[test]
    fn counts_grow_from_one(s in sequence(4, 6), t in 0u64..4) {
        prop_assert_eq!(count_p(&s, 0), BigInt::from(1));
        prop_assert_eq!(count_r(&s, 0), BigInt::from(1));
        prop_assert!(count_p(&s, t) <= count_p(&s, t + 1));
        prop_assert!(count_r(&s, t) <= count_r(&s, t + 1));
        prop_assert!(count_r(&s, t) <= count_p(&s, t));
    }

    #[test]
    fn dilating_the_sequence_dilates_the_polytope(s in sequence(4, 5), m in 1u64..4, t in 0u64..3) {
        let scaled = s.scale(&BigInt::from(m)).unwrap();
        prop_assert_eq!(count_p(&scaled, t), count_p(&s, m * t));
    }

    #[test]
    fn pick_holds_for_coprime_pairs(a in 1i64..15, b in 1i64..15) {
        prop_assume!(a.gcd(&b) == 1);
        let s = Sequence::new([a, b]).unwrap();
        let (interior, boundary) = pick_counts(&s).unwrap();
        prop_assert_eq!(BigInt::from(a * b), interior * 2 + boundary - 2);
    }

    #[test]
    fn two_dimensional_gorenstein_sequences(s in 1i64..12, k in 1i64..8) {
        prop_assume!(k * s >= 2);
        let seq = Sequence::new([s, k * s - 1]).unwrap();
        let u = detect_u_generated(&seq).unwrap();
        prop_assert_eq!(u.entries(), &[BigInt::from(k)][..]);
        let cert = certificate(&seq).unwrap();
        prop_assert_eq!(cert.c, LatticePoint::from([1, k]));
    }

    #[test]
    fn coprime_pairs_off_the_family_are_not_gorenstein(a in 1i64..15, b in 1i64..30) {
        prop_assume!(a.gcd(&b) == 1 && (b + 1) % a != 0);
        prop_assert!(gorenstein_recurrence(&Sequence::new([a, b]).unwrap()).is_none());
    }

    #[test]
    fn recurrence_and_geometry_agree(s in sequence(3, 8)) {
        let bound = s.last() * 3;
        let (geometric, _) = geometric_certificate(&s, &bound).unwrap();
        let algebraic = certificate(&s);
        prop_assert_eq!(geometric.map(|g| g.c), algebraic.map(|a| a.c));
    }

    #[test]
    fn closed_forms_match_the_oracle_off_grid(s in 1i64..7, k in 1i64..6, l in 1i64..6) {
        let budget = Budget::default();
        for family in [
            Family::Dim2 { s: s.into(), k: k.into() },
            Family::Dim3 { s: s.into(), k: k.into(), ell: l.into() },
        ] {
            let Ok(seq) = family.sequence() else { continue };
            let truth = hilbert_basis_oracle(&seq, &budget).unwrap();
            prop_assert!(family.basis().unwrap().same_elements(&truth), "{}", family);
        }
    }
}
