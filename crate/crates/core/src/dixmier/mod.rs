//! Consequences of the structure theory. Covers Dixmier classes and
//! eigenvectors, the ideals `I_k` with their failure to satisfy
//! `I_{n+1} = I_1 I_n`, and growth counts of torsion modules.

mod alpha_x;
mod classify;
mod report;

pub use alpha_x::{
    delta_phi, delta_phi_y, delta_power_identities, delta_y, dimension_growth, global_dimension_n,
    gwa_relations, ideal_i, is_simple_n, n_gwa_presentation, problem5_report, AlphaX,
    GlobalDimension, GrowthMode, GwaPresentation, IdealDescriptor, Identity, Problem5Report,
    Problem5Row,
};
pub use classify::{classify, eigen_decompose, type_change_check, DixmierClass, EigenReport};
pub use report::{analyze, AnalysisReport};
