#![allow(dead_code)]

use proptest::prelude::*;
use weyl_dixmier::exact::{rat, Poly, RatFunc};
use weyl_dixmier::gwa::{parse, GradedElement, HomogeneousElement};

pub fn p(c: &[i64]) -> Poly {
    Poly::from_i64s(c)
}

pub fn hom(text: &str) -> HomogeneousElement {
    HomogeneousElement::from_element(&parse(text).unwrap()).unwrap()
}

pub fn small_rat() -> impl Strategy<Value = weyl_dixmier::exact::Rat> {
    (-6i64..=6, 1i64..=4).prop_map(|(n, d)| rat(n, d))
}

pub fn poly(max_deg: usize) -> impl Strategy<Value = Poly> {
    prop::collection::vec(small_rat(), 0..=max_deg + 1).prop_map(Poly::from_coeffs)
}

pub fn nonzero_poly(max_deg: usize) -> impl Strategy<Value = Poly> {
    poly(max_deg).prop_filter("nonzero", |p| !p.is_zero())
}

pub fn monic_poly(max_deg: usize) -> impl Strategy<Value = Poly> {
    prop::collection::vec(-4i64..=4, 0..=max_deg).prop_map(|mut c| {
        c.push(1);
        Poly::from_i64s(&c)
    })
}

pub fn ratfunc(max_deg: usize) -> impl Strategy<Value = RatFunc> {
    (poly(max_deg), nonzero_poly(max_deg)).prop_map(|(n, d)| RatFunc::new(n, d).unwrap())
}

/// A random element of `A1` with at most three graded terms.
pub fn a1_element() -> impl Strategy<Value = GradedElement> {
    prop::collection::vec((-2i64..=2, poly(2)), 0..=3).prop_map(GradedElement::from_v_terms)
}

/// A random nonzero homogeneous element of `A1`.
pub fn homogeneous() -> impl Strategy<Value = HomogeneousElement> {
    (nonzero_poly(2), -3i64..=3).prop_map(|(a, n)| HomogeneousElement::new(a, n).unwrap())
}
