//! Exact arithmetic over Q, Q[H] and Q(H), the shift automorphism
//! `sigma: H -> H - 1`, and factorization over Q.

mod factor;
mod modp;
mod orbit;
mod poly;
mod ratfunc;

pub use factor::{factor, Factorization};
pub(crate) use orbit::group_orbits;
pub use orbit::{orbit_decompose, shift_distance, OrbitProfile};
pub use poly::{gcd, Poly};
pub use ratfunc::RatFunc;

use num_bigint::BigInt;
use num_traits::{One, Zero};

/// Exact rational number. The denominator is always positive and coprime
/// to the numerator.
pub type Rat = num_rational::BigRational;

pub fn rat(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

pub fn int(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// `n!` as a rational.
pub fn factorial(n: u64) -> Rat {
    let mut acc = BigInt::one();
    for i in 2..=n {
        acc *= i;
    }
    Rat::from_integer(acc)
}

/// Binomial coefficient `C(n, k)`.
pub fn binomial(n: u64, k: u64) -> Rat {
    if k > n {
        return Rat::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    Rat::from_integer(acc)
}

/// Exact "p/q" rendering, always with an explicit denominator.
pub fn rat_to_exact_string(r: &Rat) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

/// Parses "p/q" or "p".
pub fn rat_from_str(s: &str) -> Option<Rat> {
    let s = s.trim();
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().ok()?;
            let d: BigInt = d.trim().parse().ok()?;
            if d.is_zero() {
                return None;
            }
            Some(Rat::new(n, d))
        }
        None => s.parse::<BigInt>().ok().map(Rat::from_integer),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binomials() {
        assert_eq!(binomial(5, 2), int(10));
        assert_eq!(binomial(3, 1), int(3));
        assert_eq!(binomial(2, 3), int(0));
        assert_eq!(factorial(4), int(24));
    }

    #[test]
    fn exact_strings() {
        assert_eq!(rat_to_exact_string(&rat(-6, 4)), "-3/2");
        assert_eq!(rat_to_exact_string(&int(3)), "3/1");
        assert_eq!(rat_from_str("-3/2"), Some(rat(-3, 2)));
        assert_eq!(rat_from_str("7"), Some(int(7)));
        assert_eq!(rat_from_str("1/0"), None);
    }
}
