//! Elements of `A1 ⊂ LaurentA ⊂ B` stored in the X-power basis, with the
//! adjoint derivation and the phi-polynomials.

mod element;
mod format;
mod homogeneous;
mod parse;
mod structure;

pub use element::{ad, ad_pow, membership, GradedElement, Ring};
pub use format::{format, format_graded, format_latex, from_json, to_json, to_json_value, Style};
pub use homogeneous::HomogeneousElement;
pub use parse::{parse, parse_in};
pub use structure::{phi, phi_scaled, rising, structure_constant, v, y_power_in_x_basis};
