use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::structure::rising;
use crate::error::{Error, Result};
use crate::exact::{int, Poly, Rat, RatFunc};

/// The three nested rings `A1 ⊂ LaurentA ⊂ B`.
///
/// `B = Q(H)[X, X^-1; sigma]`, `LaurentA = Q[H][X, X^-1; sigma]` and `A1`
/// is the span of `Q[H] v_j` with `v_j = X^j` for `j >= 0` and
/// `v_j = Y^{-j}` for `j < 0`. Ordered by inclusion.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Ring {
    A1,
    LaurentA,
    B,
}

impl Ring {
    pub fn name(self) -> &'static str {
        match self {
            Ring::A1 => "A1",
            Ring::LaurentA => "LaurentA",
            Ring::B => "B",
        }
    }

    pub fn from_name(s: &str) -> Option<Ring> {
        match s {
            "A1" => Some(Ring::A1),
            "LaurentA" => Some(Ring::LaurentA),
            "B" => Some(Ring::B),
            _ => None,
        }
    }
}

impl fmt::Display for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A finite sum `sum_j c_j X^j` with `c_j` in `Q(H)`.
///
/// Zero coefficients are never stored. The ring tag is always the smallest
/// of the three rings containing the element.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct GradedElement {
    terms: BTreeMap<i64, RatFunc>,
    ring: Ring,
}

/// True when `c X^j` lies in `A1`: `c` is a polynomial and, for `j < 0`,
/// divisible by `H (H+1) ... (H+|j|-1)`, i.e. vanishes at `0, -1, ..., j+1`.
fn term_in_a1(j: i64, c: &RatFunc) -> bool {
    let Some(p) = c.as_poly() else {
        return false;
    };
    j >= 0 || (0..-j).all(|r| p.eval(&int(-r)).is_zero())
}

fn smallest_ring(terms: &BTreeMap<i64, RatFunc>) -> Ring {
    if !terms.values().all(RatFunc::is_polynomial) {
        Ring::B
    } else if terms.iter().all(|(j, c)| term_in_a1(*j, c)) {
        Ring::A1
    } else {
        Ring::LaurentA
    }
}

impl GradedElement {
    pub fn from_terms(terms: impl IntoIterator<Item = (i64, RatFunc)>) -> Self {
        let mut map: BTreeMap<i64, RatFunc> = BTreeMap::new();
        for (j, c) in terms {
            let slot = map.entry(j).or_insert_with(RatFunc::zero);
            *slot = &*slot + &c;
        }
        map.retain(|_, c| !c.is_zero());
        let ring = smallest_ring(&map);
        GradedElement { terms: map, ring }
    }

    pub fn zero() -> Self {
        GradedElement {
            terms: BTreeMap::new(),
            ring: Ring::A1,
        }
    }

    pub fn one() -> Self {
        Self::scalar(Rat::one())
    }

    pub fn scalar(c: Rat) -> Self {
        Self::monomial(RatFunc::constant(c), 0)
    }

    /// `c X^j`.
    pub fn monomial(c: RatFunc, j: i64) -> Self {
        Self::from_terms([(j, c)])
    }

    pub fn poly(p: Poly) -> Self {
        Self::monomial(RatFunc::from_poly(p), 0)
    }

    pub fn h() -> Self {
        Self::poly(Poly::h())
    }

    pub fn x() -> Self {
        Self::monomial(RatFunc::one(), 1)
    }

    /// `Y = H X^-1`.
    pub fn y() -> Self {
        Self::monomial(RatFunc::h(), -1)
    }

    /// `p v_j` written in the X-basis.
    pub fn v_term(p: Poly, j: i64) -> Self {
        if j >= 0 {
            Self::monomial(p.into(), j)
        } else {
            Self::monomial((&p * &rising(-j as u64)).into(), j)
        }
    }

    /// Builds an `A1` element from its coefficients in the `v_j` basis.
    pub fn from_v_terms(terms: impl IntoIterator<Item = (i64, Poly)>) -> Self {
        terms
            .into_iter()
            .fold(Self::zero(), |acc, (j, p)| &acc + &Self::v_term(p, j))
    }

    pub fn terms(&self) -> &BTreeMap<i64, RatFunc> {
        &self.terms
    }

    pub fn coeff(&self, j: i64) -> RatFunc {
        self.terms.get(&j).cloned().unwrap_or_else(RatFunc::zero)
    }

    /// Coefficient of `v_j` for an element of `A1`.
    pub fn v_coeff(&self, j: i64) -> Option<Poly> {
        let c = self.coeff(j);
        let p = c.as_poly()?;
        if j >= 0 {
            Some(p.clone())
        } else {
            p.exact_div(&rising(-j as u64))
        }
    }

    pub fn ring(&self) -> Ring {
        self.ring
    }

    pub fn is_in(&self, ring: Ring) -> bool {
        self.ring <= ring
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn gradings(&self) -> Vec<i64> {
        self.terms.keys().copied().collect()
    }

    /// The grading when the element is a nonzero homogeneous element.
    pub fn homogeneous_grading(&self) -> Option<i64> {
        match self.terms.len() {
            1 => self.terms.keys().next().copied(),
            _ => None,
        }
    }

    /// Nonzero element of `Q`.
    pub fn as_scalar(&self) -> Option<Rat> {
        match self.homogeneous_grading() {
            Some(0) => {
                let c = &self.terms[&0];
                c.is_unit().then(|| c.leading())
            }
            _ => None,
        }
    }

    pub fn is_scalar(&self) -> bool {
        self.is_zero() || self.as_scalar().is_some()
    }

    pub fn scale(&self, c: &Rat) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        GradedElement {
            terms: self.terms.iter().map(|(j, f)| (*j, f.scale(c))).collect(),
            ring: self.ring,
        }
    }

    /// Restriction to one grading.
    pub fn component(&self, j: i64) -> Self {
        Self::monomial(self.coeff(j), j)
    }

    /// Inverse in `B` of a nonzero homogeneous element:
    /// `(f X^j)^-1 = sigma^{-j}(f^-1) X^{-j}`.
    pub fn inverse(&self) -> Result<Self> {
        let j = self
            .homogeneous_grading()
            .ok_or_else(|| Error::NotHomogeneous(self.gradings()))?;
        let f = self.terms[&j].inv()?;
        Ok(Self::monomial(f.shift(-j), -j))
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Integer power; negative exponents need a homogeneous element.
    pub fn pow_i64(&self, e: i64) -> Result<Self> {
        if e >= 0 {
            Ok(self.pow(e as u32))
        } else {
            Ok(self.inverse()?.pow(e.unsigned_abs() as u32))
        }
    }

    /// Largest H-degree among the `v_j`-coefficients (A1 elements only).
    pub fn max_v_degree(&self) -> Option<usize> {
        self.terms
            .keys()
            .filter_map(|&j| self.v_coeff(j).and_then(|p| p.degree()))
            .max()
    }
}

impl fmt::Debug for GradedElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} [{}]", super::format::format_graded(self), self.ring)
    }
}

impl fmt::Display for GradedElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&super::format::format_graded(self))
    }
}

impl Add for &GradedElement {
    type Output = GradedElement;
    fn add(self, rhs: &GradedElement) -> GradedElement {
        let mut terms = self.terms.clone();
        for (j, c) in &rhs.terms {
            let slot = terms.entry(*j).or_insert_with(RatFunc::zero);
            *slot = &*slot + c;
        }
        terms.retain(|_, c| !c.is_zero());
        let ring = smallest_ring(&terms);
        GradedElement { terms, ring }
    }
}

impl Sub for &GradedElement {
    type Output = GradedElement;
    fn sub(self, rhs: &GradedElement) -> GradedElement {
        self + &(-rhs)
    }
}

impl Neg for &GradedElement {
    type Output = GradedElement;
    fn neg(self) -> GradedElement {
        GradedElement {
            terms: self.terms.iter().map(|(j, c)| (*j, -c)).collect(),
            ring: self.ring,
        }
    }
}

impl Mul for &GradedElement {
    type Output = GradedElement;
    /// `(f X^i)(g X^j) = f sigma^i(g) X^{i+j}`.
    fn mul(self, rhs: &GradedElement) -> GradedElement {
        let mut terms: BTreeMap<i64, RatFunc> = BTreeMap::new();
        for (i, f) in &self.terms {
            for (j, g) in &rhs.terms {
                let prod = f * &g.shift(*i);
                let slot = terms.entry(i + j).or_insert_with(RatFunc::zero);
                *slot = &*slot + &prod;
            }
        }
        terms.retain(|_, c| !c.is_zero());
        let ring = smallest_ring(&terms);
        GradedElement { terms, ring }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for GradedElement {
            type Output = GradedElement;
            fn $m(self, rhs: GradedElement) -> GradedElement {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&GradedElement> for GradedElement {
            type Output = GradedElement;
            fn $m(self, rhs: &GradedElement) -> GradedElement {
                (&self).$m(rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for GradedElement {
    type Output = GradedElement;
    fn neg(self) -> GradedElement {
        -&self
    }
}

/// The inner derivation `ad u (w) = u w - w u`.
pub fn ad(u: &GradedElement, w: &GradedElement) -> GradedElement {
    &(u * w) - &(w * u)
}

/// `(ad u)^k (w)`.
pub fn ad_pow(u: &GradedElement, w: &GradedElement, k: usize) -> GradedElement {
    (0..k).fold(w.clone(), |acc, _| ad(u, &acc))
}

/// Membership test against the invariants of each ring.
pub fn membership(e: &GradedElement, ring: Ring) -> bool {
    e.is_in(ring)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::int;

    fn p(c: &[i64]) -> Poly {
        Poly::from_i64s(c)
    }

    #[test]
    fn defining_relations() {
        let x = GradedElement::x();
        let y = GradedElement::y();
        assert_eq!(&x * &y, GradedElement::poly(p(&[-1, 1])));
        assert_eq!(&y * &x, GradedElement::h());
        assert_eq!(&(&y * &x) - &(&x * &y), GradedElement::one());
        let b = &x + &y;
        assert_eq!(&GradedElement::one() * &b, b);
    }

    #[test]
    fn ad_examples() {
        let h = GradedElement::h();
        let x = GradedElement::x();
        assert_eq!(ad(&h, &x), x);
        let hx = &h * &x;
        assert!(ad(&hx, &hx).is_zero());
        assert_eq!(ad(&hx, &(-&h)), hx);
    }

    #[test]
    fn membership_examples() {
        let y = GradedElement::monomial(RatFunc::h(), -1);
        assert!(membership(&y, Ring::A1));
        let xinv = GradedElement::monomial(RatFunc::one(), -1);
        assert!(!membership(&xinv, Ring::A1));
        assert!(membership(&xinv, Ring::LaurentA));
        assert_eq!(xinv.ring(), Ring::LaurentA);
        let hinv = GradedElement::monomial(RatFunc::h().inv().unwrap(), 0);
        assert_eq!(hinv.ring(), Ring::B);
        assert!(membership(&hinv, Ring::B));
    }

    #[test]
    fn ring_tag_tightens_after_arithmetic() {
        let xinv = GradedElement::monomial(RatFunc::one(), -1);
        let h = GradedElement::h();
        // H X^-1 = Y is in A1 although X^-1 is not
        assert_eq!((&h * &xinv).ring(), Ring::A1);
        let hinv = GradedElement::monomial(RatFunc::h().inv().unwrap(), 0);
        assert_eq!((&hinv * &h).ring(), Ring::A1);
    }

    #[test]
    fn inverse_of_homogeneous() {
        let e = GradedElement::monomial(RatFunc::from_poly(p(&[0, 0, 1])), 2);
        let inv = e.inverse().unwrap();
        assert_eq!(&e * &inv, GradedElement::one());
        assert_eq!(&inv * &e, GradedElement::one());
        assert!((&GradedElement::x() + &GradedElement::y()).inverse().is_err());
    }

    #[test]
    fn v_basis_view() {
        let y2 = GradedElement::y().pow(2);
        assert_eq!(y2.v_coeff(-2), Some(Poly::one()));
        let e = GradedElement::from_v_terms([(-2, p(&[3, 1])), (1, p(&[0, 1]))]);
        assert_eq!(e.v_coeff(-2), Some(p(&[3, 1])));
        assert_eq!(e.v_coeff(1), Some(p(&[0, 1])));
        assert_eq!(e.max_v_degree(), Some(1));
        assert_eq!(GradedElement::scalar(int(3)).as_scalar(), Some(int(3)));
    }
}
