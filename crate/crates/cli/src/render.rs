//! Text and LaTeX rendering of reports. JSON goes through the library's
//! `to_json` methods instead.

use std::fmt::Write;

use weyl_dixmier::centralizer::{CentralizerA1, CentralizerB, NStructure};
use weyl_dixmier::dixmier::{AnalysisReport, EigenReport, Problem5Report};
use weyl_dixmier::exact::{Poly, RatFunc};
use weyl_dixmier::gwa::{format_graded, format_latex, GradedElement, HomogeneousElement};
use weyl_dixmier::oracle::{Check, VerificationReport};

use crate::Format;

/// Formats algebraic values in the chosen style.
#[derive(Clone, Copy)]
pub struct Renderer {
    latex: bool,
}

impl Renderer {
    pub fn new(format: Format) -> Self {
        Renderer {
            latex: format == Format::Latex,
        }
    }

    pub fn elem(&self, e: &GradedElement) -> String {
        if self.latex {
            format!("${}$", format_latex(e))
        } else {
            format_graded(e)
        }
    }

    pub fn rf(&self, f: &RatFunc) -> String {
        if self.latex {
            self.elem(&GradedElement::monomial(f.clone(), 0))
        } else {
            f.to_string()
        }
    }

    pub fn poly(&self, p: &Poly) -> String {
        self.rf(&RatFunc::from_poly(p.clone()))
    }

    fn polys(&self, ps: &[Poly]) -> String {
        let items: Vec<String> = ps.iter().map(|p| self.poly(p)).collect();
        format!("[{}]", items.join(", "))
    }

    pub fn homogeneous(&self, u: &HomogeneousElement) -> String {
        self.elem(&u.to_element())
    }

    pub fn centralizer_b(&self, c: &CentralizerB) -> String {
        match c {
            CentralizerB::RationalFunctions => "K(H)".into(),
            CentralizerB::Laurent(g) => format!(
                "K[v, v^-1], v = {}, s = {}, m = {}",
                self.elem(&g.v()),
                g.s,
                g.m
            ),
        }
    }

    pub fn centralizer_a1(&self, c: &CentralizerA1) -> String {
        match c {
            CentralizerA1::Polynomials => "K[H]".into(),
            CentralizerA1::Graded { mu_list, .. } => mu_list
                .iter()
                .map(|&mu| match mu {
                    0 => "K[u]".to_string(),
                    1 => "K[u] v".to_string(),
                    mu => format!("K[u] v^{mu}"),
                })
                .collect::<Vec<_>>()
                .join(" + "),
        }
    }

    pub fn n_structure(&self, ns: &NStructure) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "gamma: {}", self.rf(&ns.gamma));
        let _ = writeln!(s, "t: {}", ns.t);
        let _ = writeln!(s, "m: {}", ns.m);
        let _ = writeln!(s, "mu_list: {:?}", ns.mu_list);
        let _ = writeln!(s, "mu: {}", ns.mu);
        let _ = writeln!(s, "g: {}", self.polys(&ns.g_list));
        let _ = writeln!(s, "f: {}", self.polys(&ns.f_list));
        s
    }

    pub fn eigen(&self, r: &EigenReport) -> String {
        match r {
            EigenReport::Graded { c } => {
                format!("eigenvalues: {c}*Z\nD(u, {c}*m) = K[H] v_m for every integer m\n")
            }
            EigenReport::ZeroOnly(c) => {
                format!("eigenvalues: {{0}}\nD(u, 0) = C(u, A1) = {}\n", self.centralizer_a1(c))
            }
        }
    }

    pub fn ideals(&self, rows: &[(u64, u64)]) -> String {
        let mut s = String::new();
        for (k, e) in rows {
            let _ = writeln!(s, "I_{k} = u^{e} K[u]");
        }
        s
    }

    pub fn problem5(&self, r: &Problem5Report) -> String {
        let mut s = String::new();
        for row in &r.rows {
            let n = row.i * (r.d + 1);
            let rel = if row.differs() { "!=" } else { "=" };
            let _ = writeln!(
                s,
                "i = {}: I_1 I_{} = u^{} K[u] {rel} I_{n} = u^{} K[u]",
                row.i,
                n - 1,
                row.product_exponent,
                row.target_exponent
            );
        }
        let _ = writeln!(
            s,
            "I_(n+1) = I_1 I_n for all n: {}",
            if r.negative_answer() { "no" } else { "not refuted" }
        );
        s
    }

    pub fn analysis(&self, r: &AnalysisReport) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "element: {}", self.homogeneous(&r.element));
        let _ = writeln!(s, "grading: {}", r.element.grading());
        let _ = writeln!(s, "class: {}", r.class);
        let _ = writeln!(s, "C(u, B): {}", self.centralizer_b(&r.centralizer_b));
        let _ = writeln!(s, "C(u, A1): {}", self.centralizer_a1(&r.centralizer));
        match &r.n_structure {
            Some(ns) => {
                s.push_str("N(u, A1):\n");
                for line in self.n_structure(ns).lines() {
                    let _ = writeln!(s, "  {line}");
                }
            }
            None => s.push_str("N(u, A1): K[H]\n"),
        }
        if !r.ideals.is_empty() {
            s.push_str("ideals:\n");
            let rows: Vec<(u64, u64)> = r.ideals.iter().map(|i| (i.k, i.exponent)).collect();
            for line in self.ideals(&rows).lines() {
                let _ = writeln!(s, "  {line}");
            }
        }
        if let Some(g) = &r.gwa {
            let step = if g.step == 1 { "sigma".to_string() } else { format!("sigma^{}", g.step) };
            let _ = writeln!(s, "N(u, A1) = K[H]({step}, {})", self.poly(&g.a));
        }
        if let Some(simple) = r.simple {
            let _ = writeln!(s, "simple: {}", if simple { "yes" } else { "no" });
        }
        if let Some(gl) = r.gl_dim {
            let _ = writeln!(s, "gl.dim: {gl}");
        }
        s
    }

    fn check(&self, c: &Check) -> String {
        let bx = c.bx.map(|b| format!(" box {b}")).unwrap_or_default();
        let sat = if c.saturated { "" } else { " (unsaturated)" };
        format!(
            "{:<12} {:<14} {}: closed form {} vs oracle {}{bx}{sat}",
            c.verdict.to_string(),
            c.element,
            c.claim,
            c.closed_form,
            c.oracle
        )
    }

    pub fn verification(&self, r: &VerificationReport) -> String {
        let mut s = String::new();
        for c in &r.checks {
            let _ = writeln!(s, "{}", self.check(c));
        }
        let _ = writeln!(
            s,
            "{} checks: {} pass, {} fail, {} inconclusive",
            r.checks.len(),
            r.count(weyl_dixmier::oracle::Verdict::Pass),
            r.count(weyl_dixmier::oracle::Verdict::Fail),
            r.count(weyl_dixmier::oracle::Verdict::Inconclusive)
        );
        s
    }
}
