//! `weyl-dixmier`: command-line front end for the first Weyl algebra tools.
//!
//! Exit codes: 0 success, 1 syntax error in an expression, 2 precondition
//! violated (non-homogeneous input, wrong element shape, bad options),
//! 3 inconclusive oracle run, 4 an oracle check contradicted a closed form.

mod config;
mod render;

use std::fmt::Write as _;
use std::io::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};
use weyl_dixmier::centralizer::{centralizer_a1, centralizer_b, n_structure};
use weyl_dixmier::dixmier::{analyze, classify, eigen_decompose, ideal_i, problem5_report};
use weyl_dixmier::gwa::{parse, to_json_value, GradedElement, HomogeneousElement, Ring};
use weyl_dixmier::oracle::{
    standard_suite, verify_suite, TruncationBox, Verdict, VerifyOptions,
};
use weyl_dixmier::Error;

use config::Config;
use render::Renderer;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Latex,
}

impl FromStr for Format {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        <Format as ValueEnum>::from_str(s, true)
    }
}

#[derive(Parser, Debug)]
#[command(name = "weyl-dixmier", version, about = "Centralizers, nilpotent filtrations and Dixmier classes in the first Weyl algebra")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[command(flatten)]
    opts: Opts,
}

#[derive(Args, Debug, Default)]
struct Opts {
    /// Output format.
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,
    /// Truncation box `G,D`: gradings |j| <= G, H-degree <= D.
    #[arg(long = "box", global = true, value_name = "G,D")]
    bx: Option<TruncationBox>,
    /// Filtration level or ideal index bound.
    #[arg(long, global = true, value_name = "N")]
    k: Option<u64>,
    /// Largest i in the I_1 I_(i(d+1)-1) comparison.
    #[arg(long, global = true, value_name = "N")]
    imax: Option<u64>,
    /// File with one element per line for `verify`.
    #[arg(long, global = true, value_name = "FILE")]
    suite: Option<PathBuf>,
    /// Configuration file of `key = value` lines.
    #[arg(long, global = true, env = "WEYL_DIXMIER_CONFIG", value_name = "FILE")]
    config: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Full report; ideals and GWA data are included when u = alpha(H) X.
    Analyze { element: String },
    /// Dixmier class.
    Classify { element: String },
    /// C(u, B) and C(u, A1).
    Centralizer { element: String },
    /// gamma, mu-list, g_i and f_i describing N(u, A1).
    Nstructure { element: String },
    /// The ideals I_k = (ad u)^k N(u, k) for u = alpha(H) X.
    Ideals { element: String },
    /// Compare closed forms with brute-force kernels (default: the standard suite).
    Verify { elements: Vec<String> },
    /// Eigenvalues of ad u and their eigenspaces.
    Eigen { element: String },
    /// Normal form of an expression.
    Eval { expression: String },
}

/// Resolved settings: flags override the config file, which overrides defaults.
struct Settings {
    format: Format,
    bx: TruncationBox,
    k: Option<u64>,
    imax: u64,
    suite: Option<PathBuf>,
    max_growth: usize,
}

impl Settings {
    fn resolve(opts: Opts) -> Result<Settings, Failure> {
        let cfg = match &opts.config {
            Some(path) => Config::load(path).map_err(Failure::precondition)?,
            None => Config::default(),
        };
        Ok(Settings {
            format: opts.format.or(cfg.format).unwrap_or(Format::Text),
            bx: opts.bx.or(cfg.bx).unwrap_or_default(),
            k: opts.k.or(cfg.k),
            imax: opts.imax.or(cfg.imax).unwrap_or(2),
            suite: opts.suite.or(cfg.suite),
            max_growth: cfg.max_growth.unwrap_or(VerifyOptions::default().max_growth),
        })
    }
}

/// An error message with its exit code.
#[derive(Debug)]
struct Failure {
    code: u8,
    msg: String,
}

impl Failure {
    fn precondition(msg: impl Into<String>) -> Self {
        Failure { code: 2, msg: msg.into() }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Syntax { .. } => 1,
            Error::Inconclusive(_) | Error::IterationCap(_) => 3,
            _ => 2,
        };
        Failure { code, msg: e.to_string() }
    }
}

fn parse_expr(text: &str) -> Result<GradedElement, Failure> {
    parse(text).map_err(|e| match e {
        Error::Syntax { pos, msg } => Failure {
            code: 1,
            msg: format!("syntax error: {msg}\n  {text}\n  {}^", " ".repeat(pos)),
        },
        other => other.into(),
    })
}

/// Parses a nonzero homogeneous element of `A1`, explaining what is wrong
/// otherwise.
fn parse_homogeneous(text: &str) -> Result<HomogeneousElement, Failure> {
    let e = parse_expr(text)?;
    if e.is_zero() {
        return Err(Failure::precondition("the element is zero"));
    }
    if !e.is_in(Ring::A1) {
        return Err(Failure::precondition(format!(
            "{e} lies in {} but not in A1",
            e.ring()
        )));
    }
    if e.homogeneous_grading().is_none() {
        let parts: Vec<String> = e
            .gradings()
            .iter()
            .map(|&j| format!("  grading {j}: {}", e.component(j)))
            .collect();
        return Err(Failure::precondition(format!(
            "{text} is not homogeneous; only homogeneous elements are analysed.\nhomogeneous components:\n{}",
            parts.join("\n")
        )));
    }
    Ok(HomogeneousElement::from_element(&e)?)
}

fn emit(format: Format, json: Value, text: impl FnOnce(Renderer) -> String) -> String {
    match format {
        Format::Json => serde_json::to_string_pretty(&json).expect("json values serialize"),
        f => text(Renderer::new(f)).trim_end().to_string(),
    }
}

fn read_suite(path: &Path) -> Result<Vec<String>, Failure> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Failure::precondition(format!("cannot read suite {}: {e}", path.display())))?;
    Ok(text
        .lines()
        .map(|l| l.split('#').next().unwrap_or("").trim())
        .filter(|l| !l.is_empty())
        .map(String::from)
        .collect())
}

fn run(cli: Cli) -> Result<(String, u8), Failure> {
    let s = Settings::resolve(cli.opts)?;
    let out = match cli.command {
        Command::Analyze { element } => {
            let u = parse_homogeneous(&element)?;
            let r = analyze(&u, s.k.unwrap_or(6))?;
            emit(s.format, r.to_json(), |r2| r2.analysis(&r))
        }
        Command::Classify { element } => {
            let u = parse_homogeneous(&element)?;
            let c = classify(&u)?;
            emit(s.format, json!({"element": element, "class": c.tag()}), |_| match s.format {
                Format::Latex => format!("$\\Delta_{}$", &c.tag()[5..]),
                _ => c.to_string(),
            })
        }
        Command::Centralizer { element } => {
            let u = parse_homogeneous(&element)?;
            let b = centralizer_b(&u.to_element())?;
            let a = centralizer_a1(&u)?;
            let json = json!({"centralizer_b": b.to_json(), "centralizer": a.to_json()});
            emit(s.format, json, |r| {
                let mut t = format!("C(u, B): {}\nC(u, A1): {}\n", r.centralizer_b(&b), r.centralizer_a1(&a));
                if let weyl_dixmier::centralizer::CentralizerA1::Graded { generators, mu_list } = &a {
                    for (mu, g) in mu_list.iter().zip(generators) {
                        let _ = writeln!(t, "v^{mu} = {}", r.elem(g));
                    }
                }
                t
            })
        }
        Command::Nstructure { element } => {
            let u = parse_homogeneous(&element)?;
            let ns = n_structure(&u)?;
            emit(s.format, ns.to_json(), |r| r.n_structure(&ns))
        }
        Command::Ideals { element } => {
            let u = parse_homogeneous(&element)?;
            let k_max = s.k.unwrap_or(10);
            let rows: Vec<(u64, u64)> = (1..=k_max)
                .map(|k| ideal_i(&u, k).map(|d| (k, d.exponent)))
                .collect::<Result<_, _>>()?;
            let p5 = problem5_report(&u, s.imax)?;
            let json = json!({
                "ideals": rows.iter().map(|(k, e)| json!({"k": k, "exp": e})).collect::<Vec<_>>(),
                "problem5": p5.to_json(),
            });
            emit(s.format, json, |r| format!("{}{}", r.ideals(&rows), r.problem5(&p5)))
        }
        Command::Verify { elements } => {
            let texts = match (elements.is_empty(), &s.suite) {
                (false, _) => elements,
                (true, Some(path)) => read_suite(path)?,
                (true, None) => Vec::new(),
            };
            let suite = if texts.is_empty() {
                standard_suite()
            } else {
                texts.iter().map(|t| parse_homogeneous(t)).collect::<Result<_, _>>()?
            };
            let opts = VerifyOptions {
                bx: s.bx,
                k_max: s.k.unwrap_or(4),
                max_growth: s.max_growth,
                ..VerifyOptions::default()
            };
            let report = verify_suite(&suite, &opts)?;
            let code = if report.count(Verdict::Fail) > 0 {
                4
            } else if report.count(Verdict::Inconclusive) > 0 {
                3
            } else {
                0
            };
            return Ok((emit(s.format, report.to_json(), |r| r.verification(&report)), code));
        }
        Command::Eigen { element } => {
            let u = parse_homogeneous(&element)?;
            let r = eigen_decompose(&u)?;
            emit(s.format, r.to_json(), |rr| rr.eigen(&r))
        }
        Command::Eval { expression } => {
            let e = parse_expr(&expression)?;
            let json = json!({
                "element": to_json_value(&e),
                "ring": e.ring().name(),
                "homogeneous": e.homogeneous_grading().is_some() || e.is_zero(),
            });
            emit(s.format, json, |r| {
                let mut t = format!("{}\nring: {}\n", r.elem(&e), e.ring());
                if e.gradings().len() > 1 {
                    for j in e.gradings() {
                        let _ = writeln!(t, "grading {j}: {}", r.elem(&e.component(j)));
                    }
                }
                t
            })
        }
    };
    Ok((out, 0))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok((out, code)) => {
            // a closed pipe (e.g. `| head`) is not an error worth reporting
            let _ = writeln!(std::io::stdout(), "{out}");
            ExitCode::from(code)
        }
        Err(f) => {
            eprintln!("error: {}", f.msg);
            ExitCode::from(f.code)
        }
    }
}
