//! Centralizers and the nilpotent filtration of homogeneous elements.
//!
//! For `u = alpha v_n` with `n != 0` the centralizer in `B` is a Laurent
//! polynomial ring `K[v, v^-1]` in a canonical `v = beta X^t`. Everything
//! about `C(u, A1)` and `N(u, A1)` follows from which powers of `v` land in
//! `A1`.

mod generator;
mod nstructure;

pub use generator::{
    canonical_generator, canonical_generator_b, centralizer_b, solve_beta, twisted_product,
    CanonicalGenerator, CentralizerB,
};
pub use nstructure::{
    centralizer_a1, iterated_ndeg, n_membership, n_structure, ndeg, ndeg_capped, principal_basis,
    CentralizerA1, NStructure, PrincipalElement, DEFAULT_NDEG_CAP,
};
