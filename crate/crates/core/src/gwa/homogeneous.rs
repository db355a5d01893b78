use std::fmt;

use num_traits::One;

use super::structure::rising;
use super::{GradedElement, Ring};
use crate::error::{Error, Result};
use crate::exact::{Poly, Rat, RatFunc};

/// A nonzero homogeneous element `scalar * alpha * v_n` of `A1` with
/// `alpha` monic.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct HomogeneousElement {
    scalar: Rat,
    alpha: Poly,
    grading: i64,
}

impl HomogeneousElement {
    pub fn new(alpha: Poly, grading: i64) -> Result<Self> {
        if alpha.is_zero() {
            return Err(Error::Domain("homogeneous element with zero coefficient".into()));
        }
        Ok(HomogeneousElement {
            scalar: alpha.leading(),
            alpha: alpha.monic(),
            grading,
        })
    }

    /// Monic `alpha v_n`.
    pub fn monic(alpha: Poly, grading: i64) -> Result<Self> {
        Self::new(alpha.monic(), grading)
    }

    pub fn from_element(e: &GradedElement) -> Result<Self> {
        if e.is_zero() {
            return Err(Error::Domain("zero element".into()));
        }
        let n = e
            .homogeneous_grading()
            .ok_or_else(|| Error::NotHomogeneous(e.gradings()))?;
        if !e.is_in(Ring::A1) {
            return Err(Error::NotInRing("A1"));
        }
        let alpha = e.v_coeff(n).expect("A1 element has v-coefficients");
        Self::new(alpha, n)
    }

    pub fn scalar(&self) -> &Rat {
        &self.scalar
    }

    /// The monic coefficient in the v-basis.
    pub fn alpha(&self) -> &Poly {
        &self.alpha
    }

    pub fn grading(&self) -> i64 {
        self.grading
    }

    pub fn alpha_degree(&self) -> usize {
        self.alpha.degree().unwrap_or(0)
    }

    pub fn is_scalar(&self) -> bool {
        self.grading == 0 && self.alpha.is_one()
    }

    /// The same element with the scalar stripped.
    pub fn monic_part(&self) -> HomogeneousElement {
        HomogeneousElement {
            scalar: Rat::one(),
            alpha: self.alpha.clone(),
            grading: self.grading,
        }
    }

    /// Monic coefficient of `X^n` when the element is viewed in `B`:
    /// `alpha` for `n >= 0`, `alpha H (H+1) ... (H+|n|-1)` for `n < 0`.
    pub fn b_coefficient(&self) -> Poly {
        if self.grading >= 0 {
            self.alpha.clone()
        } else {
            &self.alpha * &rising(self.grading.unsigned_abs())
        }
    }

    pub fn to_element(&self) -> GradedElement {
        GradedElement::monomial(
            RatFunc::from_poly(self.b_coefficient().scale(&self.scalar)),
            self.grading,
        )
    }

    /// `c * self` for a nonzero polynomial `c(H)` on the left.
    pub fn times_poly(&self, c: &Poly) -> Result<HomogeneousElement> {
        if c.is_zero() {
            return Err(Error::Domain("multiplication by zero polynomial".into()));
        }
        Ok(HomogeneousElement {
            scalar: &self.scalar * c.leading(),
            alpha: &self.alpha * &c.monic(),
            grading: self.grading,
        })
    }
}

impl fmt::Display for HomogeneousElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let v = match self.grading {
            0 => String::new(),
            1 => "X".into(),
            -1 => "Y".into(),
            n if n > 0 => format!("X^{n}"),
            n => format!("Y^{}", -n),
        };
        let coeff = self.alpha.scale(&self.scalar);
        match (coeff.is_one(), v.is_empty()) {
            (_, true) => write!(f, "{coeff}"),
            (true, false) => write!(f, "{v}"),
            (false, false) if coeff.degree() == Some(0) || self.alpha.is_one() => {
                write!(f, "{coeff}*{v}")
            }
            _ => write!(f, "({coeff})*{v}"),
        }
    }
}

impl fmt::Debug for HomogeneousElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Homogeneous({self})")
    }
}
