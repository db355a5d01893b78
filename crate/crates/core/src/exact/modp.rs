//! Dense polynomials over a prime field `F_p` with big-integer `p`, and
//! Cantor-Zassenhaus factorization of squarefree polynomials.

use num_bigint::{BigInt, RandBigInt};
use num_integer::Integer;
use num_traits::{One, Zero};
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct Field {
    p: BigInt,
}

pub(crate) type ModPoly = Vec<BigInt>;

impl Field {
    pub fn new(p: BigInt) -> Self {
        Field { p }
    }

    pub fn reduce(&self, a: &BigInt) -> BigInt {
        a.mod_floor(&self.p)
    }

    fn trim(mut f: ModPoly) -> ModPoly {
        while f.last().is_some_and(Zero::is_zero) {
            f.pop();
        }
        f
    }

    pub fn from_integers(&self, f: &[BigInt]) -> ModPoly {
        Self::trim(f.iter().map(|c| self.reduce(c)).collect())
    }

    pub fn inv(&self, a: &BigInt) -> BigInt {
        let e = a.extended_gcd(&self.p);
        debug_assert!(e.gcd.is_one(), "non-invertible element mod p");
        self.reduce(&e.x)
    }

    pub fn sub(&self, f: &ModPoly, g: &ModPoly) -> ModPoly {
        let n = f.len().max(g.len());
        let z = BigInt::zero();
        Self::trim(
            (0..n)
                .map(|i| self.reduce(&(f.get(i).unwrap_or(&z) - g.get(i).unwrap_or(&z))))
                .collect(),
        )
    }

    pub fn mul(&self, f: &ModPoly, g: &ModPoly) -> ModPoly {
        if f.is_empty() || g.is_empty() {
            return Vec::new();
        }
        let mut out = vec![BigInt::zero(); f.len() + g.len() - 1];
        for (i, a) in f.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in g.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Self::trim(out.iter().map(|c| self.reduce(c)).collect())
    }

    pub fn scale(&self, f: &ModPoly, c: &BigInt) -> ModPoly {
        Self::trim(f.iter().map(|a| self.reduce(&(a * c))).collect())
    }

    pub fn monic(&self, f: &ModPoly) -> ModPoly {
        match f.last() {
            None => Vec::new(),
            Some(lc) => self.scale(f, &self.inv(lc)),
        }
    }

    pub fn div_rem(&self, f: &ModPoly, d: &ModPoly) -> (ModPoly, ModPoly) {
        assert!(!d.is_empty(), "division by zero mod p");
        if f.len() < d.len() {
            return (Vec::new(), f.clone());
        }
        let lc_inv = self.inv(d.last().unwrap());
        let mut rem = f.clone();
        let dd = d.len() - 1;
        let mut quot = vec![BigInt::zero(); f.len() - dd];
        for i in (0..quot.len()).rev() {
            let q = self.reduce(&(&rem[i + dd] * &lc_inv));
            if q.is_zero() {
                continue;
            }
            for (j, dc) in d.iter().enumerate() {
                rem[i + j] = self.reduce(&(&rem[i + j] - &q * dc));
            }
            quot[i] = q;
        }
        rem.truncate(dd);
        (Self::trim(quot), Self::trim(rem))
    }

    pub fn rem(&self, f: &ModPoly, d: &ModPoly) -> ModPoly {
        self.div_rem(f, d).1
    }

    pub fn gcd(&self, f: &ModPoly, g: &ModPoly) -> ModPoly {
        let mut a = f.clone();
        let mut b = g.clone();
        while !b.is_empty() {
            let r = self.rem(&a, &b);
            a = b;
            b = r;
        }
        self.monic(&a)
    }

    pub fn derivative(&self, f: &ModPoly) -> ModPoly {
        Self::trim(
            f.iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| self.reduce(&(c * BigInt::from(i))))
                .collect(),
        )
    }

    /// `f^e mod m`.
    pub fn pow_mod(&self, f: &ModPoly, e: &BigInt, m: &ModPoly) -> ModPoly {
        let mut acc: ModPoly = vec![BigInt::one()];
        let mut base = self.rem(f, m);
        let bits = e.bits();
        for i in 0..bits {
            if e.bit(i) {
                acc = self.rem(&self.mul(&acc, &base), m);
            }
            if i + 1 < bits {
                base = self.rem(&self.mul(&base, &base), m);
            }
        }
        self.rem(&acc, m)
    }

    pub fn is_squarefree(&self, f: &ModPoly) -> bool {
        let d = self.derivative(f);
        !d.is_empty() && self.gcd(f, &d).len() == 1
    }

    /// Distinct-degree factorization of a monic squarefree polynomial.
    fn distinct_degree(&self, f: &ModPoly) -> Vec<(ModPoly, usize)> {
        let x: ModPoly = vec![BigInt::zero(), BigInt::one()];
        let mut out = Vec::new();
        let mut rest = f.clone();
        let mut h = x.clone();
        let mut d = 1;
        while rest.len() - 1 >= 2 * d {
            h = self.pow_mod(&h, &self.p, &rest);
            let g = self.gcd(&self.sub(&h, &x), &rest);
            if g.len() > 1 {
                rest = self.div_rem(&rest, &g).0;
                h = self.rem(&h, &rest);
                out.push((g, d));
            }
            d += 1;
        }
        if rest.len() > 1 {
            let deg = rest.len() - 1;
            out.push((rest, deg));
        }
        out
    }

    /// Splits a monic product of distinct irreducibles all of degree `d`.
    fn equal_degree(&self, f: &ModPoly, d: usize, rng: &mut ChaCha8Rng, out: &mut Vec<ModPoly>) {
        let n = f.len() - 1;
        if n == d {
            out.push(f.clone());
            return;
        }
        let exp = (self.p.pow(d as u32) - 1u32) / 2u32;
        loop {
            let a: ModPoly = Self::trim(
                (0..n)
                    .map(|_| rng.gen_bigint_range(&BigInt::zero(), &self.p))
                    .collect(),
            );
            if a.len() < 2 {
                continue;
            }
            let b = self.sub(&self.pow_mod(&a, &exp, f), &vec![BigInt::one()]);
            let g = self.gcd(&b, f);
            if g.len() > 1 && g.len() < f.len() {
                let h = self.div_rem(f, &g).0;
                self.equal_degree(&g, d, rng, out);
                self.equal_degree(&self.monic(&h), d, rng, out);
                return;
            }
        }
    }

    /// Monic irreducible factors of a monic squarefree polynomial over `F_p`
    /// (`p` odd).
    pub fn factor_squarefree(&self, f: &ModPoly) -> Vec<ModPoly> {
        let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0f_f00d);
        let mut out = Vec::new();
        for (g, d) in self.distinct_degree(f) {
            self.equal_degree(&g, d, &mut rng, &mut out);
        }
        out.sort();
        out
    }

    /// Symmetric representative in `(-p/2, p/2]`.
    pub fn symmetric(&self, a: &BigInt) -> BigInt {
        let r = self.reduce(a);
        if &r + &r > self.p {
            r - &self.p
        } else {
            r
        }
    }
}

/// Probabilistic primality test (Miller-Rabin, 32 random bases plus small
/// trial division).
pub(crate) fn is_probable_prime(n: &BigInt) -> bool {
    let two = BigInt::from(2u32);
    if n < &two {
        return false;
    }
    for sp in [2u32, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let sp = BigInt::from(sp);
        if n == &sp {
            return true;
        }
        if (n % &sp).is_zero() {
            return false;
        }
    }
    let n1 = n - 1u32;
    let mut d = n1.clone();
    let mut r = 0u32;
    while d.is_even() {
        d >>= 1;
        r += 1;
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0x9e37_79b9);
    'witness: for _ in 0..32 {
        let a = rng.gen_bigint_range(&two, &n1);
        let mut x = a.modpow(&d, n);
        if x.is_one() || x == n1 {
            continue;
        }
        for _ in 1..r {
            x = x.modpow(&two, n);
            if x == n1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Smallest probable prime strictly greater than `n`.
pub(crate) fn next_prime(n: &BigInt) -> BigInt {
    let mut c: BigInt = n + 1u32;
    if c.is_even() {
        c += 1u32;
    }
    while !is_probable_prime(&c) {
        c += 2u32;
    }
    c
}
