use std::collections::BTreeMap;

use num_traits::Zero;

use super::linalg::{rref, span_rank, ExactMatrix};
use super::TruncationBox;
use crate::exact::{Poly, Rat};
use crate::gwa::{ad, GradedElement, HomogeneousElement};

/// Coefficient vector of `p` padded to `len` entries.
pub(crate) fn poly_vector(p: &Poly, len: usize) -> Vec<Rat> {
    assert!(p.degree().map_or(true, |d| d < len), "polynomial exceeds the box");
    (0..len).map(|i| p.coeff(i)).collect()
}

pub(crate) fn vector_poly(v: &[Rat]) -> Poly {
    Poly::from_coeffs(v.to_vec())
}

/// Images of `H^e v_j`, `e = 0..=hdegree`, under `(ad u)^power`, as
/// v-coefficients at grading `j + power * n`.
fn block_images(u: &GradedElement, j: i64, hdegree: u64, power: u64) -> Vec<Poly> {
    let n = u.homogeneous_grading().expect("homogeneous u");
    let target = j + power as i64 * n;
    let mut w = GradedElement::v_term(Poly::one(), j);
    let h = GradedElement::h();
    let mut out = Vec::with_capacity(hdegree as usize + 1);
    for _ in 0..=hdegree {
        let img = (0..power).fold(w.clone(), |acc, _| ad(u, &acc));
        out.push(img.v_coeff(target).expect("A1 is closed under ad"));
        w = &h * &w;
    }
    out
}

/// Codomain of `(ad u)^power` on `domain`: large enough that nothing is
/// truncated.
pub fn codomain(u: &HomogeneousElement, domain: TruncationBox, power: u64) -> TruncationBox {
    let n = u.grading().unsigned_abs();
    let d = u.alpha_degree() as u64;
    TruncationBox::new(domain.grading + power * n, domain.hdegree + power * (d + n))
}

/// Matrix of `(ad u)^power` from the basis `H^e v_j` of `domain` (ordered by
/// `j`, then `e`) to the same kind of basis of the returned codomain.
pub fn ad_matrix(
    u: &HomogeneousElement,
    domain: TruncationBox,
    power: u64,
) -> (ExactMatrix, TruncationBox) {
    let cod = codomain(u, domain, power);
    let ue = u.to_element();
    let n = u.grading();
    let width = cod.hdegree as usize + 1;
    let index = |bx: TruncationBox, j: i64, e: usize| {
        (j + bx.grading as i64) as usize * (bx.hdegree as usize + 1) + e
    };
    let mut m = ExactMatrix::zeros(cod.dimension(), domain.dimension());
    let g = domain.grading as i64;
    for j in -g..=g {
        for (e, img) in block_images(&ue, j, domain.hdegree, power).iter().enumerate() {
            let target = j + power as i64 * n;
            for (r, x) in poly_vector(img, width).into_iter().enumerate() {
                if !x.is_zero() {
                    m.set(index(cod, target, r), index(domain, j, e), x);
                }
            }
        }
    }
    (m, cod)
}

/// `ker (ad u)^{k+1}` inside a box, one block per grading. Each block is a
/// canonical (reduced echelon) basis of coefficient vectors of length
/// `hdegree + 1` for polynomials `p` with `p v_j` in the kernel.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KernelSlice {
    pub k: u64,
    pub bx: TruncationBox,
    pub blocks: BTreeMap<i64, Vec<Vec<Rat>>>,
}

impl KernelSlice {
    pub fn dimension(&self) -> usize {
        self.blocks.values().map(Vec::len).sum()
    }

    pub fn block(&self, j: i64) -> &[Vec<Rat>] {
        self.blocks.get(&j).map_or(&[], Vec::as_slice)
    }

    pub fn elements(&self) -> Vec<GradedElement> {
        self.blocks
            .iter()
            .flat_map(|(&j, vs)| vs.iter().map(move |v| GradedElement::v_term(vector_poly(v), j)))
            .collect()
    }

    /// True when `w` (in `A1`, inside the box) lies in the span.
    pub fn contains(&self, w: &GradedElement) -> bool {
        let width = self.bx.hdegree as usize + 1;
        w.gradings().into_iter().all(|j| {
            let Some(p) = w.v_coeff(j) else { return false };
            if !self.bx.contains(j, p.degree().unwrap_or(0) as u64) {
                return false;
            }
            let block = self.block(j);
            let mut vs = block.to_vec();
            vs.push(poly_vector(&p, width));
            span_rank(&vs) == block.len()
        })
    }
}

fn kernel_block(u: &GradedElement, j: i64, hdegree: u64, power: u64, rows: usize) -> Vec<Vec<Rat>> {
    let cols: Vec<Vec<Rat>> = block_images(u, j, hdegree, power)
        .iter()
        .map(|p| poly_vector(p, rows))
        .collect();
    ExactMatrix::from_columns(rows, &cols).nullspace()
}

fn kernel_blocks(u: &HomogeneousElement, k: u64, gradings: i64, hdegree: u64) -> BTreeMap<i64, Vec<Vec<Rat>>> {
    let ue = u.to_element();
    let power = k + 1;
    let rows = codomain(u, TruncationBox::new(0, hdegree), power).hdegree as usize + 1;
    (-gradings..=gradings)
        .map(|j| (j, kernel_block(&ue, j, hdegree, power, rows)))
        .filter(|(_, b)| !b.is_empty())
        .collect()
}

/// `N(u, k, A1)` intersected with the box, by exact elimination.
pub fn kernel_power(u: &HomogeneousElement, k: u64, bx: TruncationBox) -> KernelSlice {
    KernelSlice {
        k,
        bx,
        blocks: kernel_blocks(u, k, bx.grading as i64, bx.hdegree),
    }
}

/// One enlargement step `(G + |n|, D + deg alpha + |n|)`.
pub fn enlarge(u: &HomogeneousElement, bx: TruncationBox) -> TruncationBox {
    codomain(u, bx, 1)
}

/// Compares the kernel in `bx` with the kernel of the once-enlarged box
/// projected back onto `bx` (higher H-powers and outer gradings dropped).
/// Equal spans mean no kernel vector of the larger box is cut off by `bx`.
pub fn saturation_check(u: &HomogeneousElement, k: u64, bx: TruncationBox) -> bool {
    let small = kernel_power(u, k, bx);
    saturated_against(u, &small)
}

pub(crate) fn saturated_against(u: &HomogeneousElement, small: &KernelSlice) -> bool {
    let big = enlarge(u, small.bx);
    // outer gradings vanish under the projection, so only |j| <= G matter
    let blocks = kernel_blocks(u, small.k, small.bx.grading as i64, big.hdegree);
    let width = small.bx.hdegree as usize + 1;
    blocks.iter().all(|(j, vs)| {
        let projected: Vec<Vec<Rat>> = vs.iter().map(|v| v[..width].to_vec()).collect();
        rref(projected).len() == small.block(*j).len()
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::int;
    use crate::gwa::parse;

    fn hom(text: &str) -> HomogeneousElement {
        HomogeneousElement::from_element(&parse(text).unwrap()).unwrap()
    }

    #[test]
    fn ad_matrix_of_hx_on_small_box() {
        let u = hom("H*X");
        let (m, cod) = ad_matrix(&u, TruncationBox::new(0, 1), 1);
        assert_eq!(cod, TruncationBox::new(1, 3));
        // column 0 is the image of 1, column 1 the image of H = -u = -H v_1
        assert!(m.column(0).iter().all(Zero::is_zero));
        let col = m.column(1);
        let idx = 2 * 4 + 1; // grading 1, H^1
        assert_eq!(col[idx], int(-1));
        assert_eq!(col.iter().filter(|x| !x.is_zero()).count(), 1);
    }

    #[test]
    fn ad_squared_of_y_is_2u() {
        let u = hom("H*X");
        let (m, cod) = ad_matrix(&u, TruncationBox::new(1, 0), 2);
        // Y is H^0 v_{-1}, index 0
        let img = m.column(0);
        let w = cod.hdegree as usize + 1;
        let expect = &parse("2*H*X").unwrap();
        let p = expect.v_coeff(1).unwrap();
        let at = (1 + cod.grading as usize) * w;
        assert_eq!(&img[at..at + w], poly_vector(&p, w).as_slice());
    }

    #[test]
    fn centralizer_of_hx_is_k_u() {
        let u = hom("H*X");
        let bx = TruncationBox::new(4, 4);
        let c = kernel_power(&u, 0, bx);
        assert_eq!(c.dimension(), 5);
        for i in 0..=4 {
            assert!(c.contains(&u.to_element().pow(i)));
        }
        assert!(saturation_check(&u, 0, bx));
    }

    #[test]
    fn centralizer_of_h2_is_k_h() {
        let u = hom("H^2");
        let bx = TruncationBox::new(2, 3);
        let c = kernel_power(&u, 0, bx);
        assert_eq!(c.dimension(), 4);
        assert_eq!(c.blocks.keys().copied().collect::<Vec<_>>(), vec![0]);
        assert!(saturation_check(&u, 0, bx));
    }

    #[test]
    fn too_small_box_is_unsaturated() {
        // u^3 = H(H-1)(H-2) v_3 is cut off at H-degree 2
        assert!(!saturation_check(&hom("H*X"), 0, TruncationBox::new(4, 2)));
        // Y^2 sits outside the gradings of this box, which the projection drops
        assert!(saturation_check(&hom("H*X"), 6, TruncationBox::new(1, 1)));
    }

    #[test]
    fn kernels_nest_and_delta_lowers_the_filtration() {
        let u = hom("H*X");
        let bx = TruncationBox::new(3, 5);
        let ks: Vec<KernelSlice> = (0..4).map(|k| kernel_power(&u, k, bx)).collect();
        for w in ks.windows(2) {
            for e in w[0].elements() {
                assert!(w[1].contains(&e));
            }
        }
        let ue = u.to_element();
        for k in 1..4 {
            for e in ks[k].elements() {
                let d = ad(&ue, &e);
                assert!(crate::centralizer::iterated_ndeg(&d, &ue, k).unwrap() < k as u64);
            }
        }
    }
}
