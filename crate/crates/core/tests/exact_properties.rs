mod common;

use common::*;
use proptest::prelude::*;
use weyl_dixmier::exact::{factor, orbit_decompose, shift_distance, Poly};

proptest! {
    #[test]
    fn shift_is_a_ring_automorphism(f in poly(4), g in poly(4), k in -6i64..=6) {
        prop_assert_eq!((&f * &g).shift(k), &f.shift(k) * &g.shift(k));
        prop_assert_eq!((&f + &g).shift(k), &f.shift(k) + &g.shift(k));
        prop_assert_eq!(f.shift(k).shift(-k), f.clone());
        prop_assert_eq!(f.shift(k).degree(), f.degree());
    }

    #[test]
    fn ratfunc_shift_round_trips(f in ratfunc(3), k in -5i64..=5) {
        prop_assert_eq!(f.shift(k).shift(-k), f.clone());
        prop_assert_eq!(f.shift(k).degree(), f.degree());
    }

    #[test]
    fn factor_round_trip(roots in prop::collection::vec(-4i64..=4, 0..5), q in monic_poly(2), c in nonzero_poly(0)) {
        let lin = roots.iter().fold(Poly::one(), |acc, r| &acc * &p(&[-r, 1]));
        let f = &(&lin * &q) * &c;
        let fac = factor(&f).unwrap();
        prop_assert_eq!(fac.reconstruct(), f);
        for (g, e) in &fac.factors {
            prop_assert!(g.is_monic());
            prop_assert!(*e >= 1);
            // no nontrivial factorization of g survives a second pass
            let again = factor(g).unwrap();
            prop_assert_eq!(again.factors, vec![(g.clone(), 1)]);
        }
    }

    #[test]
    fn orbit_partition(base in prop::collection::vec((monic_poly(1), -3i64..=3), 1..5), s in 1u64..=3) {
        let f = base.iter().fold(Poly::one(), |acc, (g, k)| &acc * &g.shift(*k));
        let fac = factor(&f).unwrap();
        let profiles = orbit_decompose(&fac, s);
        let irreducibles: Vec<&Poly> = fac.factors.iter().map(|(g, _)| g).collect();
        let profile_of = |g: &Poly| {
            profiles
                .iter()
                .position(|pr| pr.multiplicities.keys().any(|&k| pr.member(k) == *g))
                .expect("every factor is in some profile")
        };
        for a in &irreducibles {
            for b in &irreducibles {
                let same_orbit = matches!(shift_distance(a, b), Some(k) if k % s as i64 == 0);
                prop_assert_eq!(profile_of(a) == profile_of(b), same_orbit);
            }
        }
        let total: Poly = profiles.iter().fold(Poly::one(), |acc, pr| &acc * &pr.reconstruct().0);
        prop_assert_eq!(total, f.monic());
    }

    #[test]
    fn degree_additive_and_subadditive(f in ratfunc(3), g in ratfunc(3)) {
        prop_assume!(!f.is_zero() && !g.is_zero());
        prop_assert_eq!((&f * &g).degree(), Some(f.degree().unwrap() + g.degree().unwrap()));
        let sum = &f + &g;
        if !sum.is_zero() {
            prop_assert!(sum.degree().unwrap() <= f.degree().unwrap().max(g.degree().unwrap()));
        }
    }

    #[test]
    fn division_with_remainder(f in poly(5), d in nonzero_poly(3)) {
        let (q, r) = f.div_rem(&d);
        prop_assert_eq!(&(&q * &d) + &r, f);
        prop_assert!(r.is_zero() || r.degree() < d.degree());
    }
}

#[test]
fn shift_examples() {
    assert_eq!(Poly::h().shift(1), p(&[-1, 1]));
    assert_eq!(p(&[1, 0, 1]).shift(2), p(&[5, -4, 1]));
}
