use std::fmt;

use serde_json::{json, Value};

use crate::centralizer::{centralizer_a1, CentralizerA1};
use crate::error::{Error, Result};
use crate::exact::{Poly, Rat};
use crate::gwa::HomogeneousElement;

/// Dixmier's partition of the non-scalar elements of `A1`.
///
/// Homogeneous elements only ever land in `Delta1`, `Delta2`, `Delta3` or
/// `Delta5`; `Delta4` exists so reports can name every class.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum DixmierClass {
    Delta1,
    Delta2,
    Delta3,
    Delta4,
    Delta5,
}

impl DixmierClass {
    pub fn tag(self) -> &'static str {
        match self {
            DixmierClass::Delta1 => "Delta1",
            DixmierClass::Delta2 => "Delta2",
            DixmierClass::Delta3 => "Delta3",
            DixmierClass::Delta4 => "Delta4",
            DixmierClass::Delta5 => "Delta5",
        }
    }

    pub fn from_tag(s: &str) -> Option<Self> {
        [
            DixmierClass::Delta1,
            DixmierClass::Delta2,
            DixmierClass::Delta3,
            DixmierClass::Delta4,
            DixmierClass::Delta5,
        ]
        .into_iter()
        .find(|c| c.tag() == s)
    }
}

impl fmt::Display for DixmierClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sub = ['\u{2081}', '\u{2082}', '\u{2083}', '\u{2084}', '\u{2085}'][*self as usize];
        write!(f, "\u{0394}{sub}")
    }
}

/// Class of a homogeneous non-scalar `u = alpha v_n`:
/// `Delta1` for constant `alpha` and `n != 0`, `Delta2` for non-constant
/// `alpha` and `n != 0`, `Delta3` for `deg alpha = 1` and `n = 0`,
/// `Delta5` for `deg alpha > 1` and `n = 0`.
pub fn classify(u: &HomogeneousElement) -> Result<DixmierClass> {
    if u.is_scalar() {
        return Err(Error::Scalar);
    }
    let d = u.alpha_degree();
    Ok(match (u.grading() != 0, d) {
        (true, 0) => DixmierClass::Delta1,
        (true, _) => DixmierClass::Delta2,
        (false, 1) => DixmierClass::Delta3,
        (false, _) => DixmierClass::Delta5,
    })
}

/// Eigenvectors of `ad u` in `A1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum EigenReport {
    /// `u = c H + e`: every `c m`, `m` an integer, is an eigenvalue with
    /// eigenspace `K[H] v_m`.
    Graded { c: Rat },
    /// Only the eigenvalue 0, with eigenspace `C(u, A1)`.
    ZeroOnly(CentralizerA1),
}

impl EigenReport {
    /// Eigenvalue of `ad u` on the grading-`m` component, if any.
    pub fn eigenvalue(&self, m: i64) -> Option<Rat> {
        match self {
            EigenReport::Graded { c } => Some(c * Rat::from_integer(m.into())),
            EigenReport::ZeroOnly(_) => None,
        }
    }

    pub fn to_json(&self) -> Value {
        match self {
            EigenReport::Graded { c } => json!({
                "eigenvalues": format!("{c}*Z"),
                "eigenspace": "K[H] v_m for eigenvalue c*m",
                "c": crate::exact::rat_to_exact_string(c),
            }),
            EigenReport::ZeroOnly(cent) => json!({
                "eigenvalues": "{0}",
                "eigenspace": cent.to_json(),
            }),
        }
    }
}

pub fn eigen_decompose(u: &HomogeneousElement) -> Result<EigenReport> {
    if u.is_scalar() {
        return Err(Error::Scalar);
    }
    if u.grading() == 0 && u.alpha_degree() == 1 {
        return Ok(EigenReport::Graded {
            c: u.scalar().clone(),
        });
    }
    Ok(EigenReport::ZeroOnly(centralizer_a1(u)?))
}

/// Classes of `p` and of `alpha(H) p` for `p` of nonzero grading.
pub fn type_change_check(
    p: &HomogeneousElement,
    alpha: &Poly,
) -> Result<(DixmierClass, DixmierClass)> {
    if p.grading() == 0 {
        return Err(Error::Precondition(
            "type change needs p with [H, p] = lambda p, lambda != 0, i.e. nonzero grading".into(),
        ));
    }
    if alpha.is_zero() {
        return Err(Error::Domain("alpha must be nonzero".into()));
    }
    Ok((classify(p)?, classify(&p.times_poly(alpha)?)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gwa::parse;

    fn hom(text: &str) -> HomogeneousElement {
        HomogeneousElement::from_element(&parse(text).unwrap()).unwrap()
    }

    #[test]
    fn classification_table() {
        use DixmierClass::*;
        for (text, class) in [
            ("X", Delta1),
            ("Y", Delta1),
            ("H*X", Delta2),
            ("H*(H-3)*X^2", Delta2),
            ("H", Delta3),
            ("H^2", Delta5),
            ("H^3", Delta5),
            ("-2*Y^3", Delta1),
            ("3*H - 1", Delta3),
        ] {
            assert_eq!(classify(&hom(text)).unwrap(), class, "{text}");
        }
        assert!(matches!(classify(&hom("5")), Err(Error::Scalar)));
        assert_eq!(Delta2.to_string(), "\u{0394}\u{2082}");
        assert_eq!(DixmierClass::from_tag("Delta4"), Some(Delta4));
    }

    #[test]
    fn eigen_examples() {
        match eigen_decompose(&hom("2*H + 1")).unwrap() {
            r @ EigenReport::Graded { .. } => {
                assert_eq!(r.eigenvalue(3), Some(crate::exact::int(6)))
            }
            other => panic!("{other:?}"),
        }
        assert_eq!(
            eigen_decompose(&hom("H^2")).unwrap(),
            EigenReport::ZeroOnly(CentralizerA1::Polynomials)
        );
        assert!(matches!(
            eigen_decompose(&hom("H*X")).unwrap(),
            EigenReport::ZeroOnly(CentralizerA1::Graded { .. })
        ));
    }

    #[test]
    fn type_change_examples() {
        use DixmierClass::*;
        let t = Poly::h();
        let five = Poly::from_i64s(&[5]);
        let t2 = Poly::from_i64s(&[1, 0, 1]);
        assert_eq!(type_change_check(&hom("X"), &t).unwrap(), (Delta1, Delta2));
        assert_eq!(type_change_check(&hom("X"), &five).unwrap(), (Delta1, Delta1));
        assert_eq!(type_change_check(&hom("H*X"), &t2).unwrap(), (Delta2, Delta2));
        assert!(matches!(
            type_change_check(&hom("H"), &t),
            Err(Error::Precondition(_))
        ));
    }
}
