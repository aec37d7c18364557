use proptest::prelude::*;

use cyclic_aqec::aqec::{
    css_aqec, css_subsystem, defset_aqec, euclidean_assc, genpoly_aqec, hull, hull_stabilizers,
    stabilizer_matrices,
};
use cyclic_aqec::cyclic::{CodeSpace, CyclicCode};
use cyclic_aqec::matrix::dot;
use cyclic_aqec::weights::DEFAULT_BUDGET;
use cyclic_aqec::Error;

const SPACES: [(usize, u32); 8] = [
    (7, 2),
    (9, 2),
    (15, 2),
    (17, 2),
    (8, 3),
    (13, 3),
    (5, 4),
    (6, 5),
];

fn code(n: usize, q: u32, mask: u64) -> CyclicCode {
    let space = CodeSpace::new(n, q).unwrap();
    let t: Vec<usize> = space
        .cosets()
        .iter()
        .enumerate()
        .filter(|(i, _)| mask >> i & 1 == 1)
        .flat_map(|(_, c)| c.members.iter().copied())
        .collect();
    space.code_from_defset(&t).unwrap()
}

fn pair() -> impl Strategy<Value = (CyclicCode, CyclicCode)> {
    (0..SPACES.len(), any::<u64>(), any::<u64>()).prop_map(|(i, a, b)| {
        let (n, q) = SPACES[i];
        (code(n, q, a), code(n, q, b))
    })
}

fn single() -> impl Strategy<Value = CyclicCode> {
    (0..SPACES.len(), any::<u64>()).prop_map(|(i, a)| {
        let (n, q) = SPACES[i];
        code(n, q, a)
    })
}

fn nested_pair() -> impl Strategy<Value = (CyclicCode, CyclicCode)> {
    // C2 = dual of a subcode of C1, so C2^perp is inside C1
    (single(), any::<u64>()).prop_map(|(c1, extra)| {
        let sub = c1.intersect(&code(c1.n(), c1.q(), extra)).unwrap();
        (c1, sub.dual())
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn css_records_are_consistent((c1, c2) in nested_pair()) {
        match css_aqec(&c1, &c2, DEFAULT_BUDGET) {
            Ok(rec) => {
                prop_assert_eq!(rec.k + c1.n(), c1.k() + c2.k());
                prop_assert_eq!(rec.k, c1.k() - c2.dual().k());
                prop_assert!(rec.dz.value >= rec.dx.value);
                prop_assert!(stabilizer_matrices(&c1, &c2).unwrap().commutes());
                let back = css_aqec(&c2, &c1, DEFAULT_BUDGET).unwrap();
                prop_assert_eq!(
                    (back.k, back.dx.value, back.dz.value),
                    (rec.k, rec.dx.value, rec.dz.value)
                );
            }
            Err(e) => prop_assert!(
                matches!(e, Error::NonpositiveDimension(_) | Error::EmptyDifference),
                "{e:?}"
            ),
        }
    }

    #[test]
    fn nesting_is_symmetric((a, b) in pair()) {
        prop_assert_eq!(
            b.dual().is_subcode_of(&a).unwrap(),
            a.dual().is_subcode_of(&b).unwrap()
        );
        if !b.dual().is_subcode_of(&a).unwrap() {
            prop_assert_eq!(css_aqec(&a, &b, DEFAULT_BUDGET).unwrap_err(), Error::NotNested);
        }
    }

    #[test]
    fn gauge_trades_with_logical((c1, c2) in nested_pair()) {
        if let Ok(rec) = css_aqec(&c1, &c2, DEFAULT_BUDGET) {
            for r in 0..=rec.k {
                let s = css_subsystem(&c1, &c2, r, DEFAULT_BUDGET).unwrap();
                prop_assert_eq!(s.k + s.r, rec.k);
                prop_assert_eq!((s.dx.value, s.dz.value), (rec.dx.value, rec.dz.value));
            }
            let over = rec.k + 1;
            let is_gauge_error = matches!(
                css_subsystem(&c1, &c2, over, DEFAULT_BUDGET),
                Err(Error::GaugeOutOfRange { .. })
            );
            prop_assert!(is_gauge_error);
        }
    }

    #[test]
    fn defset_construction_matches_formula(c1 in single(), t_mask in any::<u64>()) {
        let space = c1.space().clone();
        let t: Vec<usize> = space
            .cosets()
            .iter()
            .enumerate()
            .filter(|(i, _)| t_mask >> i & 1 == 1)
            .flat_map(|(_, c)| c.members.iter().copied())
            .collect();
        match defset_aqec(&c1, &t, DEFAULT_BUDGET) {
            Ok(rec) => {
                let c2 = space.code_from_defset(&rec.c2_defset).unwrap();
                let mut u = t.clone();
                u.extend(space.negate(&t));
                u.sort_unstable();
                u.dedup();
                let n = c1.n() as i64;
                prop_assert_eq!(2 * c1.k() as i64 - u.len() as i64 - n, rec.k as i64);
                prop_assert_eq!(c1.k() + c2.k() - c1.n(), rec.k);
                prop_assert!(stabilizer_matrices(&c1, &c2).unwrap().commutes());
                prop_assert!(c1.dual().is_subcode_of(&c1).unwrap());
            }
            Err(e) => prop_assert!(
                matches!(e, Error::TNotInAdmissibleSet | Error::RangeViolation { .. } | Error::NotNested | Error::EmptyDifference),
                "{e:?}"
            ),
        }
    }

    #[test]
    fn genpoly_construction_matches_formula(c1 in single(), f_mask in any::<u64>()) {
        let space = c1.space().clone();
        let f = space
            .minimal_polynomials()
            .iter()
            .enumerate()
            .filter(|(i, _)| f_mask >> i & 1 == 1)
            .fold(cyclic_aqec::polyring::Poly::one(space.field()), |acc, (_, p)| acc.mul(p).unwrap());
        match genpoly_aqec(&c1, &f, DEFAULT_BUDGET) {
            Ok(rec) => {
                let c2 = space.code_from_defset(&rec.c2_defset).unwrap();
                let b = f.degree().unwrap() as i64;
                prop_assert_eq!(2 * c1.k() as i64 - b - c1.n() as i64, rec.k as i64);
                prop_assert_eq!(c2.generator(), &f.mul(c1.generator()).unwrap());
                prop_assert!(stabilizer_matrices(&c1, &c2).unwrap().commutes());
            }
            Err(e) => prop_assert!(
                matches!(
                    e,
                    Error::ConstantFactor
                        | Error::NotDivisor(_)
                        | Error::NonpositiveDimension(_)
                        | Error::NotNested
                        | Error::EmptyDifference
                ),
                "{e:?}"
            ),
        }
    }

    #[test]
    fn euclidean_records(c1 in single()) {
        let h = hull(&c1);
        match euclidean_assc(&c1, DEFAULT_BUDGET) {
            Ok((a, b)) => {
                prop_assert_eq!((a.k, a.r), (b.r, b.k));
                prop_assert_eq!((a.dx.value, a.dz.value), (b.dx.value, b.dz.value));
                prop_assert_eq!(a.k + a.r, c1.n() - 2 * h.k());
                prop_assert!(hull_stabilizers(&c1).unwrap().commutes());
            }
            Err(e) => prop_assert!(
                matches!(e, Error::HullTooLarge { .. } | Error::ZeroCode | Error::EmptyDifference),
                "{e:?}"
            ),
        }
        // The hull is self-orthogonal, checked word by word when small.
        if (h.q() as u64).pow(h.k() as u32) <= 1 << 8 {
            let words = h.codewords();
            let f = h.field().clone();
            for x in &words {
                for y in &words {
                    prop_assert_eq!(dot(&f, x, y), 0);
                }
            }
        }
    }
}
