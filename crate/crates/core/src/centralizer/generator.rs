use std::collections::BTreeMap;

use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::exact::{factor, group_orbits, Poly, RatFunc};
use crate::gwa::{GradedElement, HomogeneousElement};

/// The generator `v = beta X^t` of `C(u, B) = K[v, v^-1]`, with `v^m = u`
/// for the monic part of `u`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CanonicalGenerator {
    pub beta: RatFunc,
    pub t: i64,
    pub s: u64,
    pub m: u64,
}

impl CanonicalGenerator {
    pub fn v(&self) -> GradedElement {
        GradedElement::monomial(self.beta.clone(), self.t)
    }

    /// `v^i` for any integer `i`.
    pub fn power(&self, i: i64) -> GradedElement {
        self.v().pow_i64(i).expect("v is homogeneous and nonzero")
    }

    /// `beta sigma^t(beta) ... sigma^{(i-1)t}(beta)`, the coefficient of `v^i`
    /// in the X-basis.
    pub fn twisted_product(&self, i: u64) -> RatFunc {
        twisted_product(&self.beta, self.t, i)
    }

    pub fn to_json(&self) -> Value {
        json!({
            "beta": ratfunc_json(&self.beta),
            "t": self.t,
            "s": self.s,
            "m": self.m,
        })
    }
}

pub(crate) fn ratfunc_json(f: &RatFunc) -> Value {
    json!({
        "num": poly_json(f.numerator()),
        "den": poly_json(f.denominator()),
    })
}

pub(crate) fn poly_json(p: &Poly) -> Value {
    p.coeffs()
        .iter()
        .map(crate::exact::rat_to_exact_string)
        .collect()
}

/// `f sigma^t(f) ... sigma^{(i-1)t}(f)`.
pub fn twisted_product(f: &RatFunc, t: i64, i: u64) -> RatFunc {
    (0..i as i64).fold(RatFunc::one(), |acc, j| &acc * &f.shift(j * t))
}

/// Solves `beta sigma^t(beta) ... sigma^{(m-1)t}(beta) = alpha` for a monic
/// rational function `beta`, or reports that no solution exists.
///
/// Each `sigma^{|t|}`-orbit of irreducible factors is handled separately: the
/// exponents `a(k)` of `alpha` along the orbit are the length-`m` moving sums
/// of the exponents `b(k)` of `beta`, so `b` is recovered by a running
/// difference and the result is checked by convolving back.
pub fn solve_beta(alpha: &RatFunc, t: i64, m: u64) -> Option<RatFunc> {
    assert!(t != 0 && m >= 1, "solve_beta needs t != 0 and m >= 1");
    if alpha.is_zero() || !alpha.is_monic() {
        return None;
    }
    if m == 1 {
        return Some(alpha.clone());
    }
    if alpha.degree()? % m as i64 != 0 {
        return None;
    }
    let mut items: Vec<(Poly, i64)> = Vec::new();
    for (part, sign) in [(alpha.numerator(), 1), (alpha.denominator(), -1)] {
        if part.degree().unwrap_or(0) > 0 {
            let fac = factor(part).ok()?;
            items.extend(fac.factors.into_iter().map(|(p, e)| (p, sign * e as i64)));
        }
    }
    let m = m as i64;
    let mut num = Poly::one();
    let mut den = Poly::one();
    for profile in group_orbits(&items, t.unsigned_abs()) {
        let a = &profile.multiplicities;
        let hi = *a.keys().next_back().expect("profiles are nonempty");
        let get = |map: &BTreeMap<i64, i64>, k: i64| map.get(&k).copied().unwrap_or(0);
        let mut b: BTreeMap<i64, i64> = BTreeMap::new();
        if t > 0 {
            for k in 0..=hi - (m - 1) {
                let v = get(a, k) - (1..m).map(|j| get(&b, k - j)).sum::<i64>();
                b.insert(k, v);
            }
        } else {
            for k in (m - 1..=hi).rev() {
                let v = get(a, k) - (1..m).map(|j| get(&b, k + j)).sum::<i64>();
                b.insert(k, v);
            }
        }
        let dir = t.signum();
        for k in -m..=hi + m {
            let conv: i64 = (0..m).map(|j| get(&b, k - dir * j)).sum();
            if conv != get(a, k) {
                return None;
            }
        }
        for (k, e) in b {
            if e == 0 {
                continue;
            }
            let p = profile.member(k).pow(e.unsigned_abs() as u32);
            if e > 0 {
                num = &num * &p;
            } else {
                den = &den * &p;
            }
        }
    }
    Some(RatFunc::new(num, den).expect("denominator is a product of monic factors"))
}

/// The generator of `C(u, B)` for `u = alpha X^n`, `alpha` a monic rational
/// function and `n != 0`. `s` runs over the divisors of `|n|` in increasing
/// order; `s = |n|` always succeeds with `beta = alpha`.
pub fn canonical_generator_b(alpha: &RatFunc, n: i64) -> Result<CanonicalGenerator> {
    if n == 0 {
        return Err(Error::Precondition(
            "canonical generator needs a nonzero grading".into(),
        ));
    }
    let alpha = alpha.monic();
    let abs = n.unsigned_abs();
    for s in (1..=abs).filter(|s| abs % s == 0) {
        let t = n.signum() * s as i64;
        let m = abs / s;
        if let Some(beta) = solve_beta(&alpha, t, m) {
            return Ok(CanonicalGenerator { beta, t, s, m });
        }
    }
    unreachable!("s = |n| always admits beta = alpha")
}

/// Canonical generator for a homogeneous element of `A1`; the scalar of `u`
/// is ignored.
pub fn canonical_generator(u: &HomogeneousElement) -> Result<CanonicalGenerator> {
    canonical_generator_b(&RatFunc::from_poly(u.b_coefficient()), u.grading())
}

/// `C(u, B)` for a homogeneous non-scalar `u` of `B`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CentralizerB {
    /// `K(H)`, for `u` of grading zero.
    RationalFunctions,
    /// `K[v, v^-1]`.
    Laurent(CanonicalGenerator),
}

impl CentralizerB {
    pub fn to_json(&self) -> Value {
        match self {
            CentralizerB::RationalFunctions => json!({"kind": "K(H)"}),
            CentralizerB::Laurent(g) => json!({"kind": "laurent", "generator": g.to_json()}),
        }
    }
}

pub fn centralizer_b(u: &GradedElement) -> Result<CentralizerB> {
    if u.is_scalar() {
        return Err(Error::Scalar);
    }
    let n = u
        .homogeneous_grading()
        .ok_or_else(|| Error::NotHomogeneous(u.gradings()))?;
    if n == 0 {
        return Ok(CentralizerB::RationalFunctions);
    }
    canonical_generator_b(&u.coeff(n), n).map(CentralizerB::Laurent)
}
