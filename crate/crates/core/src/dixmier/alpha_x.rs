//! Elements `u = alpha X` with `alpha` monic of degree `d >= 1`. For these
//! the ideals `I_k` have a closed form, and `N(u, A1)` is itself a
//! generalized Weyl algebra.

use serde_json::{json, Value};

use super::classify::{classify, DixmierClass};
use crate::centralizer::{n_structure, twisted_product};
use crate::error::{Error, Result};
use crate::exact::{binomial, factor, factorial, int, orbit_decompose, Poly, Rat, RatFunc};
use crate::gwa::{ad_pow, phi, GradedElement, HomogeneousElement};

/// `u = alpha X` with `alpha` monic, `deg alpha = d >= 1`. A scalar factor
/// of the input is dropped; every result here is invariant under it except
/// the derivation identities, which are stated for the monic element.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlphaX {
    alpha: Poly,
    d: u64,
}

impl AlphaX {
    pub fn new(u: &HomogeneousElement) -> Result<Self> {
        if u.grading() != 1 || u.alpha_degree() == 0 {
            return Err(Error::Precondition(format!(
                "closed forms need u = alpha(H) X with deg alpha >= 1, got {u}; \
                 use the oracle for other elements"
            )));
        }
        Ok(AlphaX {
            alpha: u.alpha().clone(),
            d: u.alpha_degree() as u64,
        })
    }

    pub fn alpha(&self) -> &Poly {
        &self.alpha
    }

    pub fn d(&self) -> u64 {
        self.d
    }

    /// The monic element `alpha X`.
    pub fn element(&self) -> GradedElement {
        GradedElement::v_term(self.alpha.clone(), 1)
    }

    pub fn homogeneous(&self) -> HomogeneousElement {
        HomogeneousElement::new(self.alpha.clone(), 1).expect("alpha is nonzero")
    }
}

/// The ideal `u^exponent K[u]` of `C(u, A1) = K[u]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct IdealDescriptor {
    pub k: u64,
    pub exponent: u64,
}

/// `I_k = (ad u)^k N(u, k) = u^{k - [k/(d+1)]} K[u]`.
pub fn ideal_i(u: &HomogeneousElement, k: u64) -> Result<IdealDescriptor> {
    let s = AlphaX::new(u)?;
    if k == 0 {
        return Err(Error::Precondition("I_k needs k >= 1".into()));
    }
    Ok(IdealDescriptor {
        k,
        exponent: k - k / (s.d + 1),
    })
}

/// `I_1 I_{i(d+1)-1}` against `I_{i(d+1)}` for one `i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Problem5Row {
    pub i: u64,
    pub product_exponent: u64,
    pub target_exponent: u64,
}

impl Problem5Row {
    pub fn differs(&self) -> bool {
        self.product_exponent != self.target_exponent
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Problem5Report {
    pub d: u64,
    pub rows: Vec<Problem5Row>,
}

impl Problem5Report {
    /// True when `I_1 I_{i(d+1)-1} != I_{i(d+1)}` for every listed `i`, so
    /// `I_{n+1} = I_1 I_n` fails for arbitrarily large `n`.
    pub fn negative_answer(&self) -> bool {
        !self.rows.is_empty() && self.rows.iter().all(Problem5Row::differs)
    }

    pub fn to_json(&self) -> Value {
        json!({
            "d": self.d,
            "rows": self.rows.iter().map(|r| json!({
                "i": r.i,
                "product_exp": r.product_exponent,
                "target_exp": r.target_exponent,
                "differs": r.differs(),
            })).collect::<Vec<_>>(),
            "negative_answer": self.negative_answer(),
        })
    }
}

pub fn problem5_report(u: &HomogeneousElement, i_max: u64) -> Result<Problem5Report> {
    let s = AlphaX::new(u)?;
    let mut rows = Vec::new();
    for i in 1..=i_max {
        let n = i * (s.d + 1);
        let product = ideal_i(u, 1)?.exponent + ideal_i(u, n - 1)?.exponent;
        rows.push(Problem5Row {
            i,
            product_exponent: product,
            target_exponent: ideal_i(u, n)?.exponent,
        });
    }
    Ok(Problem5Report { d: s.d, rows })
}

/// Both sides of an identity between elements, computed independently.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Identity {
    pub label: String,
    pub lhs: GradedElement,
    pub rhs: GradedElement,
}

impl Identity {
    pub fn holds(&self) -> bool {
        self.lhs == self.rhs
    }
}

fn sign(e: u64) -> Rat {
    if e % 2 == 0 {
        int(1)
    } else {
        int(-1)
    }
}

/// `delta^i(phi_i) = u^i`.
pub fn delta_phi(s: &AlphaX, i: u64) -> Identity {
    let u = s.element();
    Identity {
        label: format!("delta^{i}(phi_{i}) = u^{i}"),
        lhs: ad_pow(&u, &GradedElement::poly(phi(i)), i as usize),
        rhs: u.pow(i as u32),
    }
}

/// `delta^{(d+1)i}(Y^i) = (-1)^{i(d+1)} [(d+1)i]! u^{id}`.
pub fn delta_y(s: &AlphaX, i: u64) -> Identity {
    let u = s.element();
    let p = (s.d + 1) * i;
    Identity {
        label: format!("delta^{p}(Y^{i}) = (-1)^{p} {p}! u^{}", i * s.d),
        lhs: ad_pow(&u, &GradedElement::y().pow(i as u32), p as usize),
        rhs: u.pow((i * s.d) as u32).scale(&(sign(p) * factorial(p))),
    }
}

/// `delta^{i+(d+1)j}(phi_i Y^j) = (-1)^{j(d+1)} C(i+(d+1)j, i) [(d+1)j]! u^{i+dj}`.
pub fn delta_phi_y(s: &AlphaX, i: u64, j: u64) -> Identity {
    let u = s.element();
    let q = (s.d + 1) * j;
    let p = i + q;
    let w = &GradedElement::poly(phi(i)) * &GradedElement::y().pow(j as u32);
    let c = sign(q) * binomial(p, i) * factorial(q);
    Identity {
        label: format!("delta^{p}(phi_{i} Y^{j}) = {c} u^{}", i + s.d * j),
        lhs: ad_pow(&u, &w, p as usize),
        rhs: u.pow((i + s.d * j) as u32).scale(&c),
    }
}

/// Every derivation identity with total power at most `budget`.
pub fn delta_power_identities(u: &HomogeneousElement, budget: u64) -> Result<Vec<Identity>> {
    let s = AlphaX::new(u)?;
    let mut out = Vec::new();
    for i in 0..=budget {
        out.push(delta_phi(&s, i));
    }
    for i in 1..=budget / (s.d + 1) {
        out.push(delta_y(&s, i));
    }
    for j in 0..=budget / (s.d + 1) {
        for i in 0..=budget - (s.d + 1) * j {
            out.push(delta_phi_y(&s, i, j));
        }
    }
    Ok(out)
}

/// `K[H](sigma^step, a)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GwaPresentation {
    pub a: Poly,
    pub step: i64,
}

impl GwaPresentation {
    pub fn to_json(&self) -> Value {
        json!({"a": self.a.to_string(), "step": self.step})
    }
}

/// `N(u, A1) = K[H](sigma, H sigma^{-1}(alpha))`, generated by `Y`, `H` and
/// `X' = alpha X`.
pub fn n_gwa_presentation(u: &HomogeneousElement) -> Result<GwaPresentation> {
    let s = AlphaX::new(u)?;
    Ok(GwaPresentation {
        a: &Poly::h() * &s.alpha.shift(-1),
        step: 1,
    })
}

/// The four defining relations `X'H = sigma(H) X'`, `YH = sigma^{-1}(H) Y`,
/// `YX' = a`, `X'Y = sigma(a)` under multiplication in `A1`.
pub fn gwa_relations(u: &HomogeneousElement) -> Result<Vec<Identity>> {
    let s = AlphaX::new(u)?;
    let a = n_gwa_presentation(u)?.a;
    let xp = s.element();
    let y = GradedElement::y();
    let h = GradedElement::h();
    let poly = GradedElement::poly;
    Ok(vec![
        Identity {
            label: "X'H = sigma(H) X'".into(),
            lhs: &xp * &h,
            rhs: &poly(Poly::h().shift(1)) * &xp,
        },
        Identity {
            label: "YH = sigma^-1(H) Y".into(),
            lhs: &y * &h,
            rhs: &poly(Poly::h().shift(-1)) * &y,
        },
        Identity {
            label: "YX' = a".into(),
            lhs: &y * &xp,
            rhs: poly(a.clone()),
        },
        Identity {
            label: "X'Y = sigma(a)".into(),
            lhs: &xp * &y,
            rhs: poly(a.shift(1)),
        },
    ])
}

/// Simple iff no two distinct irreducible factors of `a` are shifts of
/// each other.
pub fn is_simple_n(u: &HomogeneousElement) -> Result<bool> {
    let a = n_gwa_presentation(u)?.a;
    let fac = factor(&a)?;
    Ok(orbit_decompose(&fac, 1)
        .iter()
        .all(|p| p.multiplicities.len() == 1))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GlobalDimension {
    One,
    Two,
    Infinite,
}

impl GlobalDimension {
    pub fn tag(self) -> &'static str {
        match self {
            GlobalDimension::One => "1",
            GlobalDimension::Two => "2",
            GlobalDimension::Infinite => "inf",
        }
    }
}

impl std::fmt::Display for GlobalDimension {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            GlobalDimension::Infinite => "\u{221e}",
            other => other.tag(),
        })
    }
}

/// Infinite if `a` has a repeated factor, 2 if squarefree with two factors
/// in one orbit, 1 otherwise.
pub fn global_dimension_n(u: &HomogeneousElement) -> Result<GlobalDimension> {
    let a = n_gwa_presentation(u)?.a;
    let fac = factor(&a)?;
    if !fac.is_squarefree() {
        return Ok(GlobalDimension::Infinite);
    }
    Ok(if is_simple_n(u)? {
        GlobalDimension::One
    } else {
        GlobalDimension::Two
    })
}

/// Which torsion module the growth count is taken from.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GrowthMode {
    /// `M_i = K[H] / alpha_i`, `alpha_i = alpha sigma(alpha) ... sigma^{i-1}(alpha)`,
    /// for `u = alpha X`.
    AlphaX,
    /// `M_i = K[H] / Gamma_{i mu}` for general `u` of nonzero grading.
    Centralizer,
}

/// `dim M_1, ..., dim M_{n_max}`, each the H-degree of the annihilating
/// polynomial, computed from the polynomial itself. Their partial sums grow
/// quadratically, so `A1` is not finitely generated over `N(u, A1)`.
pub fn dimension_growth(u: &HomogeneousElement, mode: GrowthMode, n_max: u64) -> Result<Vec<u64>> {
    if classify(u)? != DixmierClass::Delta2 {
        return Err(Error::Precondition(
            "dimension growth is defined for elements of class Delta2".into(),
        ));
    }
    let deg = |f: RatFunc| -> Result<u64> {
        f.as_poly()
            .and_then(Poly::degree)
            .map(|d| d as u64)
            .ok_or_else(|| Error::Domain("annihilator is not a polynomial".into()))
    };
    match mode {
        GrowthMode::AlphaX => {
            let s = AlphaX::new(u)?;
            let alpha = RatFunc::from_poly(s.alpha.clone());
            (1..=n_max).map(|i| deg(twisted_product(&alpha, 1, i))).collect()
        }
        GrowthMode::Centralizer => {
            let ns = n_structure(u)?;
            let mu = ns.mu.max(1);
            (1..=n_max).map(|i| deg(ns.gamma_product(i * mu))).collect()
        }
    }
}
