use serde_json::{json, Value};

use super::generator::{canonical_generator, poly_json, ratfunc_json, twisted_product};
use super::CanonicalGenerator;
use crate::error::{Error, Result};
use crate::exact::{Poly, RatFunc};
use crate::gwa::{ad, rising, structure_constant, GradedElement, HomogeneousElement, Ring};
use crate::oracle::TruncationBox;

/// Iteration cap used by [`ndeg`] unless the caller supplies one.
pub const DEFAULT_NDEG_CAP: usize = 512;

/// The data describing `C(u, A1)` and `N(u, A1)` for `u = alpha v_n`,
/// `n != 0`.
///
/// With `v = gamma v_t` the canonical generator and
/// `Gamma_i = gamma sigma^t(gamma) ... sigma^{(i-1)t}(gamma)` we have
/// `v^i = Gamma_i v_{it}`. `mu_list[r]` is the least `j = r mod m` with
/// `Gamma_j` polynomial. `g_i` is the denominator of `Gamma_i`; `f_i` is the
/// denominator of `(-it, it) sigma^{-it}(Gamma_i)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NStructure {
    pub generator: CanonicalGenerator,
    pub gamma: RatFunc,
    pub t: i64,
    pub m: u64,
    pub mu_list: Vec<u64>,
    pub mu: u64,
    /// `g_1 .. g_{mu-1}`.
    pub g_list: Vec<Poly>,
    /// `f_1 .. f_{mu-1}`.
    pub f_list: Vec<Poly>,
}

/// One element `H^k e_i` of the principal basis, where `e_i` generates the
/// grading-`it` component of `N(u, A1)` as a `K[H]`-module.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrincipalElement {
    pub element: GradedElement,
    pub index: i64,
    pub grading: i64,
    pub h_power: u64,
    pub predicted_ndeg: u64,
}

impl NStructure {
    /// `Gamma_i` for `i >= 0`.
    pub fn gamma_product(&self, i: u64) -> RatFunc {
        twisted_product(&self.gamma, self.t, i)
    }

    pub fn v_power(&self, i: i64) -> GradedElement {
        self.generator.power(i)
    }

    pub fn g(&self, i: u64) -> Poly {
        self.gamma_product(i).denominator().clone()
    }

    pub fn f(&self, i: u64) -> Poly {
        let it = i as i64 * self.t;
        let c = RatFunc::from_poly(structure_constant(-it, it));
        (&c * &self.gamma_product(i).shift(-it)).denominator().clone()
    }

    /// The polynomial `c_i` with `e_i = c_i v_{it}`: `num(Gamma_i)` for
    /// `i > 0` (that is `g_i v^i`), `f_{|i|}` for `i < 0`, `1` for `i = 0`.
    pub fn component_coefficient(&self, i: i64) -> Poly {
        match i.signum() {
            0 => Poly::one(),
            1 => self.gamma_product(i as u64).numerator().clone(),
            _ => self.f(i.unsigned_abs()),
        }
    }

    /// `e_i`, the generator of the grading-`it` component of `N(u, A1)`.
    pub fn component_generator(&self, i: i64) -> GradedElement {
        GradedElement::v_term(self.component_coefficient(i), i * self.t)
    }

    /// Nilpotent degree of `e_i`.
    pub fn component_ndeg(&self, i: i64) -> u64 {
        let c = self.component_coefficient(i).degree().unwrap_or(0) as u64;
        if i > 0 {
            // deg g_i, zero once Gamma_i is a polynomial
            self.g(i as u64).degree().unwrap_or(0) as u64
        } else if i < 0 {
            c + i.unsigned_abs() * (self.t.unsigned_abs() + self.gamma_degree())
        } else {
            0
        }
    }

    pub fn gamma_degree(&self) -> u64 {
        self.gamma.degree().unwrap_or(0) as u64
    }

    /// Basis of `N(u, k, A1)` at grading `j`: `H^e e_i` with
    /// `e + ndeg e_i <= k`, empty when `t` does not divide `j`.
    pub fn filtration_component(&self, k: u64, j: i64) -> Vec<GradedElement> {
        if j % self.t != 0 {
            return Vec::new();
        }
        let i = j / self.t;
        let base = self.component_ndeg(i);
        if base > k {
            return Vec::new();
        }
        let e = self.component_generator(i);
        (0..=k - base)
            .map(|p| &GradedElement::poly(Poly::h_pow(p as usize)) * &e)
            .collect()
    }

    /// True iff every graded component of `w` lies in `K[H] e_i`.
    pub fn contains(&self, w: &GradedElement) -> bool {
        if !w.is_in(Ring::A1) {
            return false;
        }
        w.gradings().into_iter().all(|j| {
            if j % self.t != 0 {
                return false;
            }
            let p = w.v_coeff(j).expect("A1 element");
            self.component_coefficient(j / self.t).divides(&p)
        })
    }

    /// Generators `v^{mu_r}` of `C(u, A1)` over `K[u]`.
    pub fn centralizer_generators(&self) -> Vec<GradedElement> {
        self.mu_list.iter().map(|&mu| self.v_power(mu as i64)).collect()
    }

    pub fn to_json(&self) -> Value {
        json!({
            "gamma": ratfunc_json(&self.gamma),
            "t": self.t,
            "m": self.m,
            "mu_list": self.mu_list,
            "mu": self.mu,
            "g": self.g_list.iter().map(poly_json).collect::<Vec<_>>(),
            "f": self.f_list.iter().map(poly_json).collect::<Vec<_>>(),
        })
    }

    /// Principal basis elements `H^k e_i` with `|it| <= G` and `k <= D`,
    /// each with its predicted nilpotent degree `k + ndeg e_i`.
    pub fn principal_basis(&self, bx: TruncationBox) -> Vec<PrincipalElement> {
        let reach = (bx.grading / self.t.unsigned_abs()) as i64;
        let mut out = Vec::new();
        for i in -reach..=reach {
            let e = self.component_generator(i);
            let base = self.component_ndeg(i);
            let mut hk = GradedElement::one();
            for k in 0..=bx.hdegree {
                out.push(PrincipalElement {
                    element: &hk * &e,
                    index: i,
                    grading: i * self.t,
                    h_power: k,
                    predicted_ndeg: k + base,
                });
                hk = &hk * &GradedElement::h();
            }
        }
        out
    }
}

/// `N(u, A1)` data for `u = alpha v_n` with `n != 0`.
pub fn n_structure(u: &HomogeneousElement) -> Result<NStructure> {
    if u.grading() == 0 {
        return Err(Error::Precondition(
            "the N-structure needs an element of nonzero grading".into(),
        ));
    }
    let generator = canonical_generator(u)?;
    let t = generator.t;
    let m = generator.m;
    let gamma = if t > 0 {
        generator.beta.clone()
    } else {
        generator
            .beta
            .div(&RatFunc::from_poly(rising(t.unsigned_abs())))?
    };
    let mut s = NStructure {
        generator,
        gamma,
        t,
        m,
        mu_list: Vec::new(),
        mu: 0,
        g_list: Vec::new(),
        f_list: Vec::new(),
    };
    for r in 0..m {
        let bound = r + m * s.g(r).degree().unwrap_or(0) as u64;
        let mut j = r;
        while !s.gamma_product(j).is_polynomial() {
            j += m;
            if j > bound {
                return Err(Error::Inconclusive(format!(
                    "no polynomial power of v in residue {r} below {bound}"
                )));
            }
        }
        s.mu_list.push(j);
    }
    s.mu = *s.mu_list.iter().max().expect("m >= 1");
    s.g_list = (1..s.mu).map(|i| s.g(i)).collect();
    s.f_list = (1..s.mu).map(|i| s.f(i)).collect();
    Ok(s)
}

/// `C(u, A1)` for a non-scalar homogeneous `u`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CentralizerA1 {
    /// `K[H]`, for `u` of grading zero.
    Polynomials,
    /// `sum_r K[u] v^{mu_r}`.
    Graded {
        mu_list: Vec<u64>,
        generators: Vec<GradedElement>,
    },
}

impl CentralizerA1 {
    pub fn to_json(&self) -> Value {
        match self {
            CentralizerA1::Polynomials => json!({"kind": "K[H]"}),
            CentralizerA1::Graded {
                mu_list,
                generators,
            } => json!({
                "kind": "graded",
                "mu_list": mu_list,
                "generators": generators.iter().map(crate::gwa::to_json_value).collect::<Vec<_>>(),
            }),
        }
    }
}

pub fn centralizer_a1(u: &HomogeneousElement) -> Result<CentralizerA1> {
    if u.is_scalar() {
        return Err(Error::Scalar);
    }
    if u.grading() == 0 {
        return Ok(CentralizerA1::Polynomials);
    }
    let s = n_structure(u)?;
    Ok(CentralizerA1::Graded {
        generators: s.centralizer_generators(),
        mu_list: s.mu_list,
    })
}

/// Membership in `N(u, A1)`. For grading zero `N(u, A1) = K[H]`.
pub fn n_membership(w: &GradedElement, u: &HomogeneousElement) -> Result<bool> {
    if u.is_scalar() {
        return Err(Error::Scalar);
    }
    if u.grading() == 0 {
        return Ok(w.is_in(Ring::A1) && w.gradings().iter().all(|&j| j == 0));
    }
    Ok(n_structure(u)?.contains(w))
}

/// Nilpotent degree by iterating `ad u`, capped at [`DEFAULT_NDEG_CAP`].
pub fn ndeg(w: &GradedElement, u: &HomogeneousElement) -> Result<u64> {
    ndeg_capped(w, u, DEFAULT_NDEG_CAP)
}

pub fn ndeg_capped(w: &GradedElement, u: &HomogeneousElement, cap: usize) -> Result<u64> {
    if w.is_zero() {
        return Err(Error::Domain("the zero element has no nilpotent degree".into()));
    }
    if !n_membership(w, u)? {
        return Err(Error::NotInN);
    }
    iterated_ndeg(w, &u.to_element(), cap)
}

/// Least `i` with `(ad u)^{i+1}(w) = 0`, by direct iteration.
pub fn iterated_ndeg(w: &GradedElement, u: &GradedElement, cap: usize) -> Result<u64> {
    let mut cur = w.clone();
    for i in 0..=cap {
        let next = ad(u, &cur);
        if next.is_zero() {
            return Ok(i as u64);
        }
        cur = next;
    }
    Err(Error::IterationCap(cap))
}

/// Principal basis of `N(u, A1)` inside a box.
pub fn principal_basis(u: &HomogeneousElement, bx: TruncationBox) -> Result<Vec<PrincipalElement>> {
    Ok(n_structure(u)?.principal_basis(bx))
}
