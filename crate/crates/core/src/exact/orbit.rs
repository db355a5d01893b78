use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};

use super::{Factorization, Poly, Rat};

/// The part of a factorization lying in one `sigma^s`-orbit.
///
/// `multiplicities[k]` is the exponent of `sigma^{k s}(representative)`.
/// The representative sits at index 0 and all stored indices are
/// non-negative. Exponents are signed so that denominators of rational
/// functions can be described in the same way.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrbitProfile {
    pub representative: Poly,
    pub step: u64,
    pub multiplicities: BTreeMap<i64, i64>,
}

impl OrbitProfile {
    /// `sigma^{k s}(representative)`.
    pub fn member(&self, k: i64) -> Poly {
        self.representative.shift(k * self.step as i64)
    }

    pub fn reconstruct(&self) -> (Poly, Poly) {
        let mut num = Poly::one();
        let mut den = Poly::one();
        for (&k, &e) in &self.multiplicities {
            let m = self.member(k).pow(e.unsigned_abs() as u32);
            if e > 0 {
                num = &num * &m;
            } else {
                den = &den * &m;
            }
        }
        (num, den)
    }
}

/// The integer `k` with `sigma^k(p) = q`, i.e. `p(H - k) = q(H)`, if any.
///
/// Both inputs must be monic. Comparing the `H^{d-1}` coefficients pins
/// down the only candidate `k`, which is then checked exactly.
pub fn shift_distance(p: &Poly, q: &Poly) -> Option<i64> {
    let d = p.degree()?;
    if q.degree() != Some(d) || d == 0 {
        return (p == q).then_some(0);
    }
    // p(H - k) has H^{d-1} coefficient p_{d-1} - d k
    let diff = p.coeff(d - 1) - q.coeff(d - 1);
    let k = diff / Rat::from_integer(BigInt::from(d));
    if !k.is_integer() {
        return None;
    }
    let k = k.to_integer().to_i64()?;
    (p.shift(k) == *q).then_some(k)
}

/// Groups signed irreducible exponents into `sigma^s`-orbits.
pub(crate) fn group_orbits(items: &[(Poly, i64)], s: u64) -> Vec<OrbitProfile> {
    assert!(s >= 1, "orbit step must be positive");
    let step = s as i64;
    // (anchor, members relative to anchor)
    let mut groups: Vec<(Poly, BTreeMap<i64, i64>)> = Vec::new();
    for (q, e) in items {
        if *e == 0 {
            continue;
        }
        let slot = groups.iter_mut().find_map(|(anchor, members)| {
            shift_distance(anchor, q)
                .filter(|k| k % step == 0)
                .map(|k| (members, k / step))
        });
        match slot {
            Some((members, idx)) => *members.entry(idx).or_insert(0) += e,
            None => groups.push((q.clone(), BTreeMap::from([(0, *e)]))),
        }
    }
    let mut out: Vec<OrbitProfile> = groups
        .into_iter()
        .map(|(anchor, members)| {
            let members: BTreeMap<i64, i64> =
                members.into_iter().filter(|(_, e)| !e.is_zero()).collect();
            let lo = members.keys().next().copied().unwrap_or(0);
            OrbitProfile {
                representative: anchor.shift(lo * step),
                step: s,
                multiplicities: members.into_iter().map(|(k, e)| (k - lo, e)).collect(),
            }
        })
        .filter(|p| !p.multiplicities.is_empty())
        .collect();
    out.sort_by(|a, b| a.representative.cmp(&b.representative));
    out
}

/// Partitions the irreducible factors of `fac` into `sigma^s`-orbits.
pub fn orbit_decompose(fac: &Factorization, s: u64) -> Vec<OrbitProfile> {
    let items: Vec<(Poly, i64)> = fac
        .factors
        .iter()
        .map(|(p, e)| (p.clone(), *e as i64))
        .collect();
    group_orbits(&items, s)
}
