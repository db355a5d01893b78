mod common;

use common::*;
use proptest::prelude::*;
use weyl_dixmier::dixmier::{
    classify, eigen_decompose, gwa_relations, ideal_i, type_change_check, DixmierClass,
    EigenReport,
};
use weyl_dixmier::exact::{int, Poly};
use weyl_dixmier::gwa::{ad, GradedElement, HomogeneousElement};

/// Image under the automorphism `X -> Y, Y -> -X`, which sends `H` to `1 - H`
/// and grading `n` to `-n`.
fn mirror(u: &HomogeneousElement) -> HomogeneousElement {
    let reflected = Poly::from_coeffs(
        u.alpha()
            .coeffs()
            .iter()
            .enumerate()
            .map(|(k, c)| if k % 2 == 0 { c.clone() } else { -c.clone() })
            .collect(),
    )
    .shift(1); // alpha(1 - H)
    let n = u.grading();
    let image = if n >= 0 {
        GradedElement::y().pow(n as u32)
    } else {
        GradedElement::x().pow((-n) as u32).scale(&int(if n % 2 == 0 { 1 } else { -1 }))
    };
    let e = &GradedElement::poly(reflected.scale(u.scalar())) * &image;
    HomogeneousElement::from_element(&e).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ideal_exponent_steps(d in 1u64..=3, k in 1u64..=9, lead in prop::collection::vec(-3i64..=3, 0..=2)) {
        let mut c = lead.clone();
        c.resize(d as usize, 0);
        c.push(1);
        let u = HomogeneousElement::new(Poly::from_i64s(&c), 1).unwrap();
        let e0 = ideal_i(&u, k).unwrap().exponent;
        let e1 = ideal_i(&u, k + 1).unwrap().exponent;
        prop_assert!(e1 - e0 <= 1);
        prop_assert_eq!(e1 == e0, (k + 1) % (d + 1) == 0);
    }

    #[test]
    fn classify_invariant_under_scaling_and_mirror(u in homogeneous(), c in -4i64..=4) {
        prop_assume!(!u.is_scalar() && c != 0);
        let class = classify(&u).unwrap();
        prop_assert_ne!(class, DixmierClass::Delta4);
        prop_assert_eq!(classify(&u.times_poly(&p(&[c])).unwrap()).unwrap(), class);
        prop_assert_eq!(classify(&mirror(&u)).unwrap(), class);
    }

    #[test]
    fn eigenvectors_of_linear_h(c in 1i64..=3, e in -3i64..=3, k in 0usize..=2, m in -3i64..=3) {
        let u = HomogeneousElement::new(p(&[e, c]), 0).unwrap();
        let EigenReport::Graded { .. } = eigen_decompose(&u).unwrap() else {
            panic!("linear H is graded");
        };
        let w = GradedElement::v_term(Poly::h_pow(k), m);
        let lambda = eigen_decompose(&u).unwrap().eigenvalue(m).unwrap();
        prop_assert_eq!(ad(&u.to_element(), &w), w.scale(&lambda));
        prop_assert_eq!(lambda, int(c * m));
    }

    #[test]
    fn gwa_relations_hold(lead in prop::collection::vec(-3i64..=3, 1..=3)) {
        let mut c = lead;
        c.push(1);
        let u = HomogeneousElement::new(Poly::from_i64s(&c), 1).unwrap();
        for id in gwa_relations(&u).unwrap() {
            prop_assert!(id.holds(), "{}", id.label);
        }
    }
}

#[test]
fn mirrored_examples() {
    assert_eq!(mirror(&hom("X")), hom("Y"));
    assert_eq!(mirror(&hom("Y")), hom("-X"));
    assert_eq!(mirror(&hom("H")), hom("1 - H"));
    assert_eq!(classify(&mirror(&hom("H*X"))).unwrap(), DixmierClass::Delta2);
}

#[test]
fn type_change_matrix() {
    use DixmierClass::*;
    let x = hom("X");
    let hx = hom("H*X");
    for (alpha, after_x) in [(p(&[5]), Delta1), (p(&[0, 1]), Delta2), (p(&[1, 0, 1]), Delta2)] {
        assert_eq!(type_change_check(&x, &alpha).unwrap(), (Delta1, after_x));
        assert_eq!(type_change_check(&hx, &alpha).unwrap(), (Delta2, Delta2));
    }
    assert!(type_change_check(&hom("H"), &p(&[0, 1])).is_err());
}
