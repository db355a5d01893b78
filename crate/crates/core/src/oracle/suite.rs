use std::collections::BTreeMap;
use std::fmt;

use serde_json::{json, Value};

use super::ideal::oracle_ideal_adaptive;
use super::kernel::{kernel_power, poly_vector, saturated_against, KernelSlice};
use super::linalg::rref;
use super::TruncationBox;
use crate::centralizer::{iterated_ndeg, n_structure, NStructure};
use crate::dixmier::{ideal_i, AlphaX};
use crate::error::Result;
use crate::exact::{Poly, Rat};
use crate::gwa::{parse_in, HomogeneousElement, Ring};

/// The elements every default verification run covers.
pub const STANDARD_SUITE: [&str; 9] = [
    "X",
    "X^2",
    "H*X",
    "H^2*X",
    "H*(H-1)*X^2",
    "H*(H-3)*X^2",
    "Y",
    "H",
    "H^2",
];

pub fn standard_suite() -> Vec<HomogeneousElement> {
    STANDARD_SUITE
        .iter()
        .map(|s| {
            HomogeneousElement::from_element(&parse_in(s, Ring::A1).expect("suite parses"))
                .expect("suite is homogeneous")
        })
        .collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    Pass,
    Fail,
    Inconclusive,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Pass => "pass",
            Verdict::Fail => "fail",
            Verdict::Inconclusive => "inconclusive",
        })
    }
}

/// One closed form compared with the oracle.
#[derive(Clone, Debug)]
pub struct Check {
    pub element: String,
    pub claim: String,
    pub closed_form: Value,
    pub oracle: Value,
    pub bx: Option<TruncationBox>,
    pub saturated: bool,
    pub verdict: Verdict,
}

impl Check {
    pub fn to_json(&self) -> Value {
        json!({
            "element": self.element,
            "claim": self.claim,
            "closed_form": self.closed_form,
            "oracle": self.oracle,
            "box": self.bx.map(|b| json!([b.grading, b.hdegree])),
            "saturated": self.saturated,
            "verdict": self.verdict.to_string(),
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct VerifyOptions {
    pub bx: TruncationBox,
    /// Filtration levels `0..=k_max` and ideals `I_1..I_{k_max}`.
    pub k_max: u64,
    /// Enlargements tried before a comparison is declared inconclusive.
    pub max_growth: usize,
    /// Box for the nilpotent-degree comparison on principal basis elements.
    pub ndeg_box: TruncationBox,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            bx: TruncationBox::default(),
            k_max: 4,
            max_growth: 8,
            ndeg_box: TruncationBox::new(3, 3),
        }
    }
}

#[derive(Clone, Debug, Default)]
pub struct VerificationReport {
    pub checks: Vec<Check>,
}

impl VerificationReport {
    pub fn count(&self, v: Verdict) -> usize {
        self.checks.iter().filter(|c| c.verdict == v).count()
    }

    pub fn all_pass(&self) -> bool {
        self.count(Verdict::Pass) == self.checks.len()
    }

    pub fn to_json(&self) -> Value {
        json!({
            "checks": self.checks.iter().map(Check::to_json).collect::<Vec<_>>(),
            "pass": self.count(Verdict::Pass),
            "fail": self.count(Verdict::Fail),
            "inconclusive": self.count(Verdict::Inconclusive),
        })
    }
}

/// Closed form of `N(u, k, A1)` inside `bx`, one reduced basis per grading.
fn closed_form_slice(ns: Option<&NStructure>, k: u64, bx: TruncationBox) -> BTreeMap<i64, Vec<Vec<Rat>>> {
    let width = bx.hdegree as usize + 1;
    let mut out = BTreeMap::new();
    let g = bx.grading as i64;
    for j in -g..=g {
        let polys: Vec<Poly> = match ns {
            Some(ns) => ns
                .filtration_component(k, j)
                .iter()
                .map(|e| e.v_coeff(j).expect("A1 element"))
                .collect(),
            // grading zero: N(u, k) = K[H]
            None if j == 0 => (0..width).map(Poly::h_pow).collect(),
            None => Vec::new(),
        };
        let vs: Vec<Vec<Rat>> = polys
            .iter()
            .filter(|p| p.degree().unwrap_or(0) < width)
            .map(|p| poly_vector(p, width))
            .collect();
        let basis = rref(vs);
        if !basis.is_empty() {
            out.insert(j, basis);
        }
    }
    out
}

/// `[[grading, dimension], ...]` in ascending grading order.
fn dims(blocks: &BTreeMap<i64, Vec<Vec<Rat>>>) -> Value {
    blocks.iter().map(|(j, b)| json!([j, b.len()])).collect()
}

/// Kernel at level `k`, growing the H-degree bound until saturated.
fn saturated_kernel(u: &HomogeneousElement, k: u64, opts: &VerifyOptions) -> (KernelSlice, bool) {
    let step = u.alpha_degree() as u64 + u.grading().unsigned_abs();
    let mut bx = opts.bx;
    let mut slice = kernel_power(u, k, bx);
    for attempt in 0..=opts.max_growth {
        if saturated_against(u, &slice) {
            return (slice, true);
        }
        if attempt == opts.max_growth {
            break;
        }
        bx.hdegree += step.max(1);
        slice = kernel_power(u, k, bx);
    }
    (slice, false)
}

fn verdict(saturated: bool, equal: bool) -> Verdict {
    match (saturated, equal) {
        (_, false) if saturated => Verdict::Fail,
        (true, true) => Verdict::Pass,
        _ => Verdict::Inconclusive,
    }
}

/// Compares every closed form for `u` with the oracle.
pub fn verify_element(u: &HomogeneousElement, opts: &VerifyOptions) -> Result<Vec<Check>> {
    let name = u.to_string();
    let u = &u.monic_part();
    let ns = if u.grading() != 0 { Some(n_structure(u)?) } else { None };
    let mut checks = Vec::new();

    for k in 0..=opts.k_max {
        let (slice, saturated) = saturated_kernel(u, k, opts);
        let closed = closed_form_slice(ns.as_ref(), k, slice.bx);
        let claim = if k == 0 {
            "C(u, A1) in box".to_string()
        } else {
            format!("N(u, {k}, A1) in box")
        };
        checks.push(Check {
            element: name.clone(),
            claim,
            closed_form: dims(&closed),
            oracle: dims(&slice.blocks),
            bx: Some(slice.bx),
            saturated,
            verdict: verdict(saturated, closed == slice.blocks),
        });
    }

    if let Some(ns) = &ns {
        let ue = u.to_element();
        let basis = ns.principal_basis(opts.ndeg_box);
        let predicted: Vec<u64> = basis.iter().map(|b| b.predicted_ndeg).collect();
        let cap = predicted.iter().max().copied().unwrap_or(0) as usize + 2;
        let iterated: Vec<Option<u64>> = basis
            .iter()
            .map(|b| iterated_ndeg(&b.element, &ue, cap).ok())
            .collect();
        let equal = predicted.iter().zip(&iterated).all(|(p, i)| Some(*p) == *i);
        checks.push(Check {
            element: name.clone(),
            claim: "principal basis nilpotent degrees".into(),
            closed_form: json!(predicted),
            oracle: json!(iterated),
            bx: Some(opts.ndeg_box),
            saturated: true,
            verdict: if equal { Verdict::Pass } else { Verdict::Fail },
        });
    }

    if AlphaX::new(u).is_ok() {
        for k in 1..=opts.k_max {
            let closed = ideal_i(u, k)?.exponent;
            let answer = oracle_ideal_adaptive(u, k, opts.bx, opts.max_growth)?;
            checks.push(Check {
                element: name.clone(),
                claim: format!("I_{k} = u^e K[u]"),
                closed_form: json!(closed),
                oracle: json!(answer.exponent),
                bx: Some(answer.bx),
                saturated: answer.saturated,
                verdict: verdict(answer.saturated, answer.exponent == Some(closed)),
            });
        }
    }
    Ok(checks)
}

/// Runs [`verify_element`] on each element, one thread per element. Checks
/// are reported in input order.
pub fn verify_suite(elements: &[HomogeneousElement], opts: &VerifyOptions) -> Result<VerificationReport> {
    let results: Vec<Result<Vec<Check>>> = std::thread::scope(|scope| {
        let handles: Vec<_> = elements
            .iter()
            .map(|u| scope.spawn(move || verify_element(u, opts)))
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("verification thread panicked"))
            .collect()
    });
    let mut report = VerificationReport::default();
    for r in results {
        report.checks.extend(r?);
    }
    Ok(report)
}
