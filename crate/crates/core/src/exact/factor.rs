use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::modp::{next_prime, Field};
use super::{gcd, Poly, Rat};
use crate::error::{Error, Result};

/// `unit * prod p_i^{e_i}` with distinct monic irreducible `p_i` over Q.
///
/// Factors are kept sorted (degree, then coefficients) so equal inputs give
/// identical factorizations.
#[derive(Clone, PartialEq, Eq)]
pub struct Factorization {
    pub unit: Rat,
    pub factors: Vec<(Poly, usize)>,
}

impl Factorization {
    pub fn reconstruct(&self) -> Poly {
        self.factors
            .iter()
            .fold(Poly::constant(self.unit.clone()), |acc, (p, e)| {
                &acc * &p.pow(*e as u32)
            })
    }

    pub fn multiplicity(&self, p: &Poly) -> usize {
        self.factors
            .iter()
            .find(|(q, _)| q == p)
            .map_or(0, |(_, e)| *e)
    }

    pub fn is_squarefree(&self) -> bool {
        self.factors.iter().all(|(_, e)| *e == 1)
    }
}

impl fmt::Debug for Factorization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.unit)?;
        for (p, e) in &self.factors {
            write!(f, " * ({p})^{e}")?;
        }
        Ok(())
    }
}

/// Factorization over Q into monic irreducibles.
pub fn factor(f: &Poly) -> Result<Factorization> {
    if f.is_zero() {
        return Err(Error::Domain("cannot factor the zero polynomial".into()));
    }
    let unit = f.leading();
    let monic = f.monic();
    let mut factors: Vec<(Poly, usize)> = Vec::new();
    for (part, mult) in squarefree_decomposition(&monic) {
        let (_, prim) = part.to_primitive_integer();
        for g in factor_squarefree_integer(&prim) {
            factors.push((Poly::from_integers(&g).monic(), mult));
        }
    }
    factors.sort();
    Ok(Factorization { unit, factors })
}

/// Yun's algorithm: monic `f = prod s_i^i` with squarefree, pairwise coprime `s_i`.
fn squarefree_decomposition(f: &Poly) -> Vec<(Poly, usize)> {
    let mut out = Vec::new();
    if f.degree().unwrap_or(0) == 0 {
        return out;
    }
    let df = f.derivative();
    let c = gcd(f, &df).expect("f nonzero");
    let mut w = f.div_rem(&c).0;
    let mut y = df.div_rem(&c).0;
    let mut z = &y - &w.derivative();
    let mut i = 1;
    while w.degree().unwrap_or(0) > 0 {
        let g = gcd(&w, &z).expect("w nonzero");
        if g.degree().unwrap_or(0) > 0 {
            out.push((g.clone(), i));
        }
        w = w.div_rem(&g).0;
        y = z.div_rem(&g).0;
        z = &y - &w.derivative();
        i += 1;
    }
    out
}

fn int_poly_mul(f: &[BigInt], g: &[BigInt]) -> Vec<BigInt> {
    let mut out = vec![BigInt::zero(); f.len() + g.len() - 1];
    for (i, a) in f.iter().enumerate() {
        for (j, b) in g.iter().enumerate() {
            out[i + j] += a * b;
        }
    }
    out
}

fn primitive_part(f: &[BigInt]) -> Vec<BigInt> {
    let (_, p) = Poly::from_integers(f).to_primitive_integer();
    p
}

/// Irreducible factors over Z of a primitive squarefree polynomial with
/// positive leading coefficient (big-prime Zassenhaus).
fn factor_squarefree_integer(f: &[BigInt]) -> Vec<Vec<BigInt>> {
    let n = f.len() - 1;
    if n <= 1 {
        return vec![f.to_vec()];
    }
    let lc = f[n].clone();
    // Mignotte-style bound on coefficients of any factor, times |lc|
    let max_coeff = f.iter().map(|c| c.abs()).max().unwrap();
    let sqrt_n1 = BigInt::from(n + 1).sqrt() + 1u32;
    let bound: BigInt = sqrt_n1 * (BigInt::one() << n) * max_coeff * lc.abs();

    let mut candidate = &bound * 2u32;
    let field = loop {
        let p = next_prime(&candidate);
        let field = Field::new(p.clone());
        let fp = field.from_integers(f);
        if !(&lc % &p).is_zero() && field.is_squarefree(&fp) {
            break field;
        }
        candidate = p;
    };

    let fp = field.monic(&field.from_integers(f));
    let modular = field.factor_squarefree(&fp);
    if modular.len() == 1 {
        return vec![f.to_vec()];
    }

    let mut remaining: Vec<Vec<BigInt>> = modular;
    let mut current = f.to_vec();
    let mut found = Vec::new();
    let mut size = 1;
    while 2 * size <= remaining.len() {
        let mut hit = None;
        for subset in subsets(remaining.len(), size) {
            let lc_cur = field.reduce(current.last().unwrap());
            let mut g = vec![lc_cur.clone()];
            let mut h = vec![lc_cur];
            for (i, m) in remaining.iter().enumerate() {
                if subset.contains(&i) {
                    g = field.mul(&g, m);
                } else {
                    h = field.mul(&h, m);
                }
            }
            let g: Vec<BigInt> = g.iter().map(|c| field.symmetric(c)).collect();
            let h: Vec<BigInt> = h.iter().map(|c| field.symmetric(c)).collect();
            let g = primitive_part(&g);
            let h = primitive_part(&h);
            if int_poly_mul(&g, &h) == current {
                hit = Some((subset, g, h));
                break;
            }
        }
        match hit {
            Some((subset, g, h)) => {
                found.push(g);
                current = h;
                remaining = remaining
                    .into_iter()
                    .enumerate()
                    .filter(|(i, _)| !subset.contains(i))
                    .map(|(_, m)| m)
                    .collect();
            }
            None => size += 1,
        }
    }
    found.push(current);
    found
}

/// All `k`-element subsets of `0..n`, in lexicographic order.
fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur: Vec<usize> = (0..k).collect();
    if k > n {
        return out;
    }
    loop {
        out.push(cur.clone());
        let mut i = k;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if cur[i] < n - k + i {
                break;
            }
            if i == 0 {
                return out;
            }
        }
        cur[i] += 1;
        for j in i + 1..k {
            cur[j] = cur[j - 1] + 1;
        }
    }
}
