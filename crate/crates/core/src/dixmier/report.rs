use serde_json::{json, Value};

use super::classify::{classify, eigen_decompose, DixmierClass};
use super::alpha_x::{
    global_dimension_n, ideal_i, is_simple_n, n_gwa_presentation, AlphaX, GlobalDimension,
    GwaPresentation, IdealDescriptor,
};
use crate::centralizer::{centralizer_a1, centralizer_b, n_structure, CentralizerA1, CentralizerB, NStructure};
use crate::error::Result;
use crate::gwa::{to_json_value, HomogeneousElement};

/// Everything the closed forms say about one homogeneous element.
#[derive(Clone, Debug)]
pub struct AnalysisReport {
    pub element: HomogeneousElement,
    pub class: DixmierClass,
    pub centralizer_b: CentralizerB,
    pub centralizer: CentralizerA1,
    pub n_structure: Option<NStructure>,
    /// Present for `u = alpha X` with `deg alpha >= 1`.
    pub ideals: Vec<IdealDescriptor>,
    pub gwa: Option<GwaPresentation>,
    pub simple: Option<bool>,
    pub gl_dim: Option<GlobalDimension>,
}

/// Runs the analysis with `I_1 .. I_{k_max}` for the ideal table.
pub fn analyze(u: &HomogeneousElement, k_max: u64) -> Result<AnalysisReport> {
    let class = classify(u)?;
    let shaped = AlphaX::new(u).is_ok();
    let ideals = if shaped {
        (1..=k_max).map(|k| ideal_i(u, k)).collect::<Result<Vec<_>>>()?
    } else {
        Vec::new()
    };
    Ok(AnalysisReport {
        element: u.clone(),
        class,
        centralizer_b: centralizer_b(&u.to_element())?,
        centralizer: centralizer_a1(u)?,
        n_structure: if u.grading() != 0 { Some(n_structure(u)?) } else { None },
        ideals,
        gwa: shaped.then(|| n_gwa_presentation(u)).transpose()?,
        simple: shaped.then(|| is_simple_n(u)).transpose()?,
        gl_dim: shaped.then(|| global_dimension_n(u)).transpose()?,
    })
}

impl AnalysisReport {
    pub fn to_json(&self) -> Value {
        json!({
            "element": to_json_value(&self.element.to_element()),
            "class": self.class.tag(),
            "centralizer_b": self.centralizer_b.to_json(),
            "centralizer": self.centralizer.to_json(),
            "n_structure": self.n_structure.as_ref().map(NStructure::to_json),
            "ideals": self.ideals.iter().map(|i| json!({"k": i.k, "exp": i.exponent})).collect::<Vec<_>>(),
            "gwa": self.gwa.as_ref().map(GwaPresentation::to_json),
            "simple": self.simple,
            "gl_dim": self.gl_dim.map(GlobalDimension::tag),
            "eigen": eigen_decompose(&self.element).ok().map(|e| e.to_json()),
        })
    }
}
