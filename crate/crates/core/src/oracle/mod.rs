//! Brute-force linear algebra on finite slices of `A1`.
//!
//! A slice is spanned by `H^e v_j` inside a [`TruncationBox`]. Since
//! `(ad u)^p` shifts gradings by `p n`, kernels are computed one grading at
//! a time. Every answer that depends on the box carries a saturation flag.

mod ideal;
mod kernel;
mod linalg;
mod suite;
mod truncation;

pub use ideal::{oracle_ideal, oracle_ideal_adaptive, IdealAnswer};
pub use kernel::{ad_matrix, codomain, enlarge, kernel_power, saturation_check, KernelSlice};
pub use linalg::{rref, span_rank, ExactMatrix};
pub use suite::{
    standard_suite, verify_element, verify_suite, Check, VerificationReport, Verdict, VerifyOptions,
    STANDARD_SUITE,
};
pub use truncation::TruncationBox;
