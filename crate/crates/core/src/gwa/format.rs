use serde::{Deserialize, Serialize};
use serde_json::Value;

use super::{GradedElement, Ring};
use crate::error::{Error, Result};
use crate::exact::{rat_from_str, rat_to_exact_string, Poly, RatFunc};

/// Output styles for [`format`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Style {
    Graded,
    Latex,
    Json,
}

impl std::str::FromStr for Style {
    type Err = Error;
    fn from_str(s: &str) -> Result<Style> {
        match s {
            "graded" | "text" => Ok(Style::Graded),
            "latex" => Ok(Style::Latex),
            "json" => Ok(Style::Json),
            _ => Err(Error::Domain(format!("unknown format {s:?}"))),
        }
    }
}

pub fn format(e: &GradedElement, style: Style) -> String {
    match style {
        Style::Graded => format_graded(e),
        Style::Latex => format_latex(e),
        Style::Json => to_json(e),
    }
}

fn x_power(j: i64) -> String {
    match j {
        0 => String::new(),
        1 => "*X".into(),
        j => format!("*X^{j}"),
    }
}

/// `(c_j)*X^j` summed over ascending gradings. Parses back to `e`.
pub fn format_graded(e: &GradedElement) -> String {
    if e.is_zero() {
        return "0".into();
    }
    e.terms()
        .iter()
        .map(|(j, c)| {
            let coeff = match c.as_poly() {
                Some(p) => format!("({p})"),
                None => format!("(({})/({}))", c.numerator(), c.denominator()),
            };
            format!("{coeff}{}", x_power(*j))
        })
        .collect::<Vec<_>>()
        .join(" + ")
}

fn latex_rat(r: &crate::exact::Rat) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("\\frac{{{}}}{{{}}}", r.numer(), r.denom())
    }
}

fn latex_poly(p: &Poly) -> String {
    use num_traits::{One, Signed, Zero};
    if p.is_zero() {
        return "0".into();
    }
    let mut out = String::new();
    for (k, c) in p.coeffs().iter().enumerate().rev() {
        if c.is_zero() {
            continue;
        }
        let neg = c.is_negative();
        let a = c.abs();
        if out.is_empty() {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        let mono = match k {
            0 => String::new(),
            1 => "H".into(),
            k => format!("H^{{{k}}}"),
        };
        if k == 0 || !a.is_one() {
            out.push_str(&latex_rat(&a));
        }
        out.push_str(&mono);
    }
    out
}

pub fn format_latex(e: &GradedElement) -> String {
    if e.is_zero() {
        return "0".into();
    }
    e.terms()
        .iter()
        .map(|(j, c)| {
            let coeff = match c.as_poly() {
                Some(p) => format!("\\left({}\\right)", latex_poly(p)),
                None => format!(
                    "\\frac{{{}}}{{{}}}",
                    latex_poly(c.numerator()),
                    latex_poly(c.denominator())
                ),
            };
            match j {
                0 => coeff,
                1 => format!("{coeff} X"),
                j => format!("{coeff} X^{{{j}}}"),
            }
        })
        .collect::<Vec<_>>()
        .join(" + ")
}

#[derive(Serialize, Deserialize)]
struct JsonTerm {
    grading: i64,
    num: Vec<String>,
    den: Vec<String>,
}

#[derive(Serialize, Deserialize)]
struct JsonElement {
    ring: Ring,
    terms: Vec<JsonTerm>,
}

fn poly_strings(p: &Poly) -> Vec<String> {
    p.coeffs().iter().map(rat_to_exact_string).collect()
}

fn poly_from_strings(v: &[String]) -> Result<Poly> {
    v.iter()
        .map(|s| rat_from_str(s).ok_or_else(|| Error::Domain(format!("bad coefficient {s:?}"))))
        .collect::<Result<Vec<_>>>()
        .map(Poly::from_coeffs)
}

pub fn to_json_value(e: &GradedElement) -> Value {
    let doc = JsonElement {
        ring: e.ring(),
        terms: e
            .terms()
            .iter()
            .map(|(j, c)| JsonTerm {
                grading: *j,
                num: poly_strings(c.numerator()),
                den: poly_strings(c.denominator()),
            })
            .collect(),
    };
    serde_json::to_value(doc).expect("plain data serializes")
}

pub fn to_json(e: &GradedElement) -> String {
    to_json_value(e).to_string()
}

/// Reads the JSON element schema back. The stored ring tag must match the
/// smallest ring of the decoded element.
pub fn from_json(text: &str) -> Result<GradedElement> {
    let doc: JsonElement =
        serde_json::from_str(text).map_err(|e| Error::Domain(format!("bad element JSON: {e}")))?;
    let mut terms = Vec::with_capacity(doc.terms.len());
    for t in &doc.terms {
        let c = RatFunc::new(poly_from_strings(&t.num)?, poly_from_strings(&t.den)?)?;
        terms.push((t.grading, c));
    }
    let e = GradedElement::from_terms(terms);
    if e.ring() != doc.ring {
        return Err(Error::Domain(format!(
            "ring tag {} does not match element in {}",
            doc.ring,
            e.ring()
        )));
    }
    Ok(e)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gwa::parse;

    #[test]
    fn graded_examples() {
        assert_eq!(format_graded(&parse("H - 1").unwrap()), "(H - 1)");
        assert_eq!(format_graded(&parse("Y").unwrap()), "(H)*X^-1");
        assert_eq!(format_graded(&GradedElement::zero()), "0");
        assert_eq!(format_graded(&parse("X + 1/2*H").unwrap()), "(1/2*H) + (1)*X");
        assert_eq!(format_graded(&parse("1/H*X").unwrap()), "((1)/(H))*X");
    }

    #[test]
    fn latex_examples() {
        assert_eq!(format_latex(&parse("H^2 - 1/2").unwrap()), "\\left(H^{2} - \\frac{1}{2}\\right)");
        assert_eq!(format_latex(&parse("X^2").unwrap()), "\\left(1\\right) X^{2}");
    }

    #[test]
    fn json_round_trip() {
        for text in ["0", "Y^3 + H*X", "1/(H+1)*X^-2 + 3", "X^-1"] {
            let e = parse(text).unwrap();
            let j = to_json(&e);
            assert_eq!(from_json(&j).unwrap(), e, "{j}");
        }
        let v = to_json_value(&parse("Y").unwrap());
        assert_eq!(v["ring"], "A1");
        assert_eq!(v["terms"][0]["num"][1], "1/1");
        assert!(from_json(r#"{"ring":"A1","terms":[{"grading":-1,"num":["1/1"],"den":["1/1"]}]}"#).is_err());
    }
}
