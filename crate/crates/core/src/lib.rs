//! Exact computations in the first Weyl algebra `A1 = K<X, Y | YX - XY = 1>`
//! presented as the generalized Weyl algebra `Q[H](sigma, H)` with `H = YX`
//! and `sigma(H) = H - 1`.
//!
//! Elements are stored in the skew Laurent ring `B = Q(H)[X, X^-1; sigma]`
//! that contains `A1`. On top of that arithmetic the crate computes
//! centralizers and the nilpotent filtration `N(u, k) = ker (ad u)^{k+1}`
//! of homogeneous elements, the ideals `I_k = (ad u)^k N(u, k)` and Dixmier
//! classes. A brute-force linear-algebra oracle checks each closed form on
//! finite slices of `A1`.

pub mod error;
pub mod exact;
pub mod centralizer;
pub mod dixmier;
pub mod gwa;
pub mod oracle;

pub use error::{Error, Result};
