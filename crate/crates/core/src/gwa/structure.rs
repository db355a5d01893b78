//! Structure constants of the v-basis and the phi-polynomials.

use super::GradedElement;
use crate::exact::{factorial, int, Poly, RatFunc};

/// `H (H+1) ... (H+k-1)`; `1` for `k = 0`.
pub fn rising(k: u64) -> Poly {
    (0..k as i64).fold(Poly::one(), |acc, r| &acc * &Poly::linear(int(-r)))
}

/// `prod_{r=lo}^{hi} (H + r)`, empty product `1`.
fn linear_product(lo: i64, hi: i64) -> Poly {
    (lo..=hi).fold(Poly::one(), |acc, r| &acc * &Poly::linear(int(-r)))
}

/// The polynomial `(n, m)` with `v_n v_m = (n, m) v_{n+m}`.
pub fn structure_constant(n: i64, m: i64) -> Poly {
    match (n.signum(), m.signum()) {
        (1, -1) => {
            let (a, b) = (n, -m);
            // (a,-b) = (H-a)...(H-a+min(a,b)-1)
            let c = a.min(b);
            linear_product(-a, -a + c - 1)
        }
        (-1, 1) => {
            let (a, b) = (-n, m);
            // (-a,b) = (H+a-1)...(H+a-min(a,b))
            let c = a.min(b);
            linear_product(a - c, a - 1)
        }
        _ => Poly::one(),
    }
}

/// `phi_n = (-1)^n H (H+1) ... (H+n-1) / n!`.
pub fn phi(n: u64) -> Poly {
    let sign = if n % 2 == 0 { int(1) } else { int(-1) };
    rising(n).scale(&(sign / factorial(n)))
}

/// `phi_n(c H)` for a rational `c`; used with `c = 1/n` for the Jordan basis.
pub fn phi_scaled(n: u64, c: &crate::exact::Rat) -> Poly {
    let f = phi(n);
    // substitute H -> c H
    let mut pow = crate::exact::Rat::from_integer(1.into());
    let coeffs = f
        .coeffs()
        .iter()
        .map(|a| {
            let t = a * &pow;
            pow = &pow * c;
            t
        })
        .collect();
    Poly::from_coeffs(coeffs)
}

/// `v_n`: `X^n` for `n >= 0`, `Y^{-n}` otherwise.
pub fn v(n: i64) -> GradedElement {
    GradedElement::v_term(Poly::one(), n)
}

/// `Y^n = H (H+1) ... (H+n-1) X^{-n} = (-1)^n n! phi_n X^{-n}`.
pub fn y_power_in_x_basis(n: u64) -> GradedElement {
    let sign = if n % 2 == 0 { int(1) } else { int(-1) };
    let c = phi(n).scale(&(sign * factorial(n)));
    GradedElement::monomial(RatFunc::from_poly(c), -(n as i64))
}
