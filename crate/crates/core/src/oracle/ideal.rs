use super::kernel::{kernel_power, saturated_against};
use super::TruncationBox;
use crate::dixmier::AlphaX;
use crate::error::{Error, Result};
use crate::gwa::{ad_pow, HomogeneousElement};

/// Oracle value for `I_n = (ad u)^n N(u, n)` as an ideal `u^exponent K[u]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdealAnswer {
    pub n: u64,
    /// `None` when no kernel vector in the box has a nonzero image.
    pub exponent: Option<u64>,
    pub bx: TruncationBox,
    pub saturated: bool,
}

/// Minimal `u`-exponent among the images of `N(u, n)` inside `bx`.
///
/// The images are homogeneous elements of `C(u, A1) = K[u]`, so each is
/// `c u^g` for its grading `g`; this is checked, not assumed.
pub fn oracle_ideal(u: &HomogeneousElement, n: u64, bx: TruncationBox) -> Result<IdealAnswer> {
    let shape = AlphaX::new(u)?;
    let u = shape.homogeneous();
    let ue = u.to_element();
    let kernel = kernel_power(&u, n, bx);
    let mut best: Option<u64> = None;
    for w in kernel.elements() {
        let img = ad_pow(&ue, &w, n as usize);
        if img.is_zero() {
            continue;
        }
        let g = img
            .homogeneous_grading()
            .filter(|g| *g >= 0)
            .ok_or_else(|| Error::Domain(format!("image {img} is not a power of u")))?;
        let power = ue.pow(g as u32);
        let ratio = img.coeff(g).div(&power.coeff(g))?;
        if !ratio.is_unit() {
            return Err(Error::Domain(format!("image {img} is not a multiple of u^{g}")));
        }
        best = Some(best.map_or(g as u64, |b| b.min(g as u64)));
    }
    let saturated = bx.grading >= n && saturated_against(&u, &kernel);
    Ok(IdealAnswer {
        n,
        exponent: best,
        bx,
        saturated,
    })
}

/// Grows the H-degree bound of `start` (by `deg alpha + 1` per step, and the
/// grading bound up to `n`) until the answer is saturated or `max_steps`
/// enlargements have been tried. The last answer is returned either way.
pub fn oracle_ideal_adaptive(
    u: &HomogeneousElement,
    n: u64,
    start: TruncationBox,
    max_steps: usize,
) -> Result<IdealAnswer> {
    let step = AlphaX::new(u)?.d() + 1;
    let mut bx = TruncationBox::new(start.grading.max(n), start.hdegree);
    let mut answer = oracle_ideal(u, n, bx)?;
    for _ in 0..max_steps {
        if answer.saturated {
            break;
        }
        bx.hdegree += step;
        answer = oracle_ideal(u, n, bx)?;
    }
    Ok(answer)
}
