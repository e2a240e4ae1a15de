//! Command-line front end: parses polynomials, dispatches to the library and
//! writes one JSON object per line, or aligned text.

pub mod parse;

use std::fmt::Write as _;

use clap::{Parser, Subcommand, ValueEnum};
use indecomp::algebra::primes::divisors;
use indecomp::algebra::{
    reduce_mod_p, FiniteField, Integers, MPoly, MPolyRing, PerfectField, PolyRing, Rationals, Ring,
};
use indecomp::census::{self, CensusReport, MultiVars};
use indecomp::decomp::{
    decompose_multi, decompose_uni, is_indecomposable_multi, is_indecomposable_uni, is_pth_power,
};
use indecomp::parallel::{with_jobs, Execution};
use indecomp::redmod::{build_chain, good_primes};
use indecomp::spectrum::{quadratic_spectral_value, spectral_values};
use serde_json::{json, Value};

pub use parse::{parse_poly, Coefficients, ParseError};

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error(transparent)]
    Domain(#[from] indecomp::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Domain(_) => 1,
            _ => 2,
        }
    }
}

type CliResult<T> = Result<T, CliError>;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum Format {
    #[default]
    Json,
    Text,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum MethodArg {
    Closed,
    Recursion,
    Enumeration,
    All,
}

#[derive(Debug, Parser)]
#[command(
    name = "spec",
    version,
    about = "Decomposition, spectra and counts of polynomials over finite fields"
)]
pub struct Cli {
    /// Output format
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    /// Worker threads for enumeration (0: all cores)
    #[arg(long, global = true, default_value_t = 0)]
    pub jobs: usize,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Spectral values of an indecomposable polynomial in x, y
    Spectrum {
        /// Coefficient field: p, p^k, or Q where supported
        #[arg(long)]
        field: String,
        /// Polynomial, e.g. "y^2 + x^3 - 2"
        poly: String,
    },
    /// Normalized decompositions u(H), one per outer degree
    Decompose {
        /// Coefficient field: p, p^k, or Q where supported
        #[arg(long)]
        field: String,
        /// Comma-separated variable names (default x,y or x1..xn)
        #[arg(long)]
        vars: Option<String>,
        /// Only try this outer degree
        #[arg(long)]
        outer_degree: Option<u32>,
        /// Polynomial, e.g. "y^2 + x^3 - 2"
        poly: String,
    },
    /// Whether a polynomial is indecomposable
    Indec {
        /// Coefficient field: p, p^k, or Q where supported
        #[arg(long)]
        field: String,
        #[arg(long)]
        vars: Option<String>,
        /// Polynomial, e.g. "y^2 + x^3 - 2"
        poly: String,
    },
    /// Whether a polynomial over F_q is a p-th power
    Pthpower {
        /// Coefficient field: p, p^k, or Q where supported
        #[arg(long)]
        field: String,
        #[arg(long)]
        vars: Option<String>,
        /// Polynomial, e.g. "y^2 + x^3 - 2"
        poly: String,
    },
    /// Discriminant chain of F in Z[x, y] and its good primes
    Modp {
        /// Polynomial, e.g. "y^2 + x^3 - 2"
        poly: String,
        /// Largest prime to test
        #[arg(long, default_value_t = 13)]
        primes_to: u64,
        /// Also test indecomposability of F mod p for each good prime
        #[arg(long)]
        verify: bool,
    },
    /// Counts N, I, D by closed form, recursion and/or enumeration
    Census {
        /// Field size, a prime power
        #[arg(long)]
        q: u64,
        /// Number of variables
        #[arg(long)]
        n: u32,
        /// Total degree
        #[arg(long)]
        d: u32,
        /// Counting method, or all of them with an agreement line
        #[arg(long, value_enum, default_value_t = MethodArg::All)]
        method: MethodArg,
    },
    /// Full scan of all polynomials of degree d
    Enumerate {
        /// Field size, a prime power
        #[arg(long)]
        q: u64,
        /// Number of variables
        #[arg(long)]
        n: u32,
        /// Total degree
        #[arg(long)]
        d: u32,
        /// Number of disjoint index ranges
        #[arg(long, default_value_t = 16)]
        partitions: usize,
    },
    /// Asymptotic bounds on D_d / N_d (n = 2) or on D_d (n = 1)
    CheckBounds {
        /// Field size, a prime power
        #[arg(long)]
        q: u64,
        /// Total degree
        #[arg(long)]
        d: u32,
        /// Number of variables
        #[arg(long, default_value_t = 2)]
        n: u32,
        /// For n = 1, also enumerate and test the bounds
        #[arg(long)]
        enumerate: bool,
    },
    /// Integer inequalities on b(d) = (d+1)(d+2)/2
    BdLemma {
        /// Check every degree up to this bound
        #[arg(long, default_value_t = 10000)]
        d_max: u64,
    },
}

#[derive(Clone, Debug)]
enum FieldArg {
    Q,
    Finite(FiniteField),
}

fn parse_field(s: &str) -> CliResult<FieldArg> {
    let s = s.trim();
    if s == "Q" {
        return Ok(FieldArg::Q);
    }
    let bad = || CliError::Usage(format!("bad field '{s}': expected p, p^k or Q"));
    let field = match s.split_once('^') {
        Some((p, k)) => FiniteField::new(
            p.trim().parse().map_err(|_| bad())?,
            k.trim().parse().map_err(|_| bad())?,
        )?,
        None => FiniteField::with_size(s.parse().map_err(|_| bad())?)?,
    };
    Ok(FieldArg::Finite(field))
}

fn field_label(f: &FieldArg) -> String {
    match f {
        FieldArg::Q => "Q".into(),
        FieldArg::Finite(ff) if ff.k() == 1 => ff.p().to_string(),
        FieldArg::Finite(ff) => format!("{}^{}", ff.p(), ff.k()),
    }
}

/// Explicit names win; otherwise `x1..xn` if any indexed name appears, and
/// `x, y` if not.
fn infer_vars(text: &str, explicit: Option<&str>) -> Vec<String> {
    if let Some(list) = explicit {
        return list
            .split(',')
            .map(|v| v.trim().to_string())
            .filter(|v| !v.is_empty())
            .collect();
    }
    let max = parse::names_in(text)
        .iter()
        .filter_map(|n| n.strip_prefix('x').and_then(|i| i.parse::<usize>().ok()))
        .max();
    match max {
        Some(m) => (1..=m.max(2)).map(|i| format!("x{i}")).collect(),
        None => vec!["x".into(), "y".into()],
    }
}

fn decompositions<R: Coefficients + PerfectField>(
    ring: &MPolyRing<R>,
    f: &MPoly<R::Element>,
    only: Option<u32>,
) -> CliResult<(Vec<Value>, bool)> {
    let d = f.degree().ok_or(indecomp::Error::ZeroPolynomial)?;
    let outer_ring = PolyRing::new(ring.base().clone(), "z");
    let uni = ring.nvars() == 1;
    let mut found = Vec::new();
    for e in divisors(d as u64).into_iter().map(|e| e as u32) {
        if e < 2 || only.is_some_and(|o| o != e) || (uni && d / e < 2) {
            continue;
        }
        let dec = if uni {
            decompose_uni(ring, f, e)?
        } else {
            decompose_multi(ring, f, e)?
        };
        if let Some(dec) = dec {
            found.push(json!({
                "outer_degree": e,
                "outer": outer_ring.display(&dec.outer).to_string(),
                "inner": ring.display(&dec.inner).to_string(),
            }));
        }
    }
    let indecomposable = if uni {
        is_indecomposable_uni(ring, f)?
    } else {
        is_indecomposable_multi(ring, f)?
    };
    Ok((found, indecomposable))
}

fn decompose_cmd(
    field: &str,
    vars: Option<&str>,
    outer: Option<u32>,
    poly: &str,
    list: bool,
) -> CliResult<Vec<Value>> {
    let names = infer_vars(poly, vars);
    let rule = if names.len() == 1 {
        "one-variable"
    } else {
        "multivariate"
    };
    let fa = parse_field(field)?;
    let label = field_label(&fa);
    let (shown, found, indec) = match fa {
        FieldArg::Q => {
            let ring = MPolyRing::new(Rationals, names);
            let f = parse_poly(poly, &ring)?;
            let (found, indec) = decompositions(&ring, &f, outer)?;
            (ring.display(&f).to_string(), found, indec)
        }
        FieldArg::Finite(ff) => {
            let ring = MPolyRing::new(ff, names);
            let f = parse_poly(poly, &ring)?;
            let (found, indec) = decompositions(&ring, &f, outer)?;
            (ring.display(&f).to_string(), found, indec)
        }
    };
    let mut out = json!({ "field": label, "poly": shown, "rule": rule, "indecomposable": indec });
    if list {
        out["decompositions"] = Value::Array(found);
    }
    Ok(vec![out])
}

fn census_all(q: u64, n: u32, d: u32, method: MethodArg, exec: Execution) -> CliResult<Vec<Value>> {
    let want = |m: MethodArg| method == m || method == MethodArg::All;
    let mut reports: Vec<CensusReport> = Vec::new();
    let mut lines = Vec::new();
    if want(MethodArg::Closed) {
        if n >= 2 {
            if let Some(r) = census::closed_report(q, MultiVars::new(n)?, d)? {
                reports.push(r);
            } else if method == MethodArg::Closed {
                return Err(CliError::Usage(format!("no closed form for d = {d}")));
            }
        } else {
            let uni = census::count_uni(q, d);
            match uni {
                Ok(c) if c.exact.is_some() => reports.push(CensusReport {
                    q,
                    n,
                    d,
                    indecomposable: &c.total - c.exact.as_ref().expect("checked"),
                    decomposable: c.exact.clone().expect("checked"),
                    total: c.total,
                    method: census::Method::Closed,
                }),
                Ok(c) => lines.push(c.to_json()),
                Err(e) if method == MethodArg::Closed => return Err(e.into()),
                Err(_) => {}
            }
        }
    }
    if want(MethodArg::Recursion) {
        match MultiVars::new(n) {
            Ok(nv) => reports.push(census::count_recursive(q, nv, d)?),
            Err(e) if method == MethodArg::Recursion => return Err(e.into()),
            Err(_) => {}
        }
    }
    if want(MethodArg::Enumeration) {
        reports.push(census::enumerate_census(q, n, d, 16, exec)?);
    }
    let agree = reports.windows(2).all(|w| w[0].same_counts(&w[1]));
    let mut out: Vec<Value> = reports.iter().map(CensusReport::to_json).collect();
    out.extend(lines);
    if method == MethodArg::All {
        out.push(json!({ "agree": agree, "methods": reports.len() }));
    }
    Ok(out)
}

fn execute(cli: &Cli) -> CliResult<Vec<Value>> {
    let exec = Execution::Parallel;
    match &cli.command {
        Command::Spectrum { field, poly } => match parse_field(field)? {
            FieldArg::Finite(ff) => {
                let ring = MPolyRing::new(ff, ["x", "y"]);
                let f = parse_poly(poly, &ring)?;
                let mut report = spectral_values(&ring, &f)?.to_json();
                report["poly"] = json!(ring.display(&f).to_string());
                Ok(vec![report])
            }
            FieldArg::Q => {
                let ring = MPolyRing::new(Rationals, ["x", "y"]);
                let f = parse_poly(poly, &ring)?;
                let value = quadratic_spectral_value(&ring, &f)?;
                Ok(vec![json!({
                    "field": "Q",
                    "poly": ring.display(&f).to_string(),
                    "degree": 2,
                    "spectral_value": Rationals.display(&value).to_string(),
                })])
            }
        },
        Command::Decompose {
            field,
            vars,
            outer_degree,
            poly,
        } => decompose_cmd(field, vars.as_deref(), *outer_degree, poly, true),
        Command::Indec { field, vars, poly } => {
            decompose_cmd(field, vars.as_deref(), None, poly, false)
        }
        Command::Pthpower { field, vars, poly } => {
            let FieldArg::Finite(ff) = parse_field(field)? else {
                return Err(CliError::Usage("pthpower needs a finite field".into()));
            };
            let ring = MPolyRing::new(ff.clone(), infer_vars(poly, vars.as_deref()));
            let f = parse_poly(poly, &ring)?;
            let root = is_pth_power(&ring, &f);
            Ok(vec![json!({
                "field": field_label(&FieldArg::Finite(ff.clone())),
                "p": ff.p(),
                "poly": ring.display(&f).to_string(),
                "pth_power": root.is_some(),
                "root": root.map(|g| ring.display(&g).to_string()),
            })])
        }
        Command::Modp {
            poly,
            primes_to,
            verify,
        } => {
            let ring = MPolyRing::new(Integers, ["x", "y"]);
            let f = parse_poly(poly, &ring)?;
            let chain = build_chain(&ring, &f)?;
            let primes = good_primes(&chain, *primes_to);
            let mut out = chain.to_json();
            out["good_primes"] = json!(primes);
            if *verify {
                let mut checks = Vec::new();
                for &p in &primes {
                    let target = MPolyRing::new(FiniteField::new(p, 1)?, ["x", "y"]);
                    let fp =
                        reduce_mod_p(&ring, &f, &target).ok_or(indecomp::Error::BadPrime(p))?;
                    checks.push(
                        json!({ "p": p, "indecomposable": is_indecomposable_multi(&target, &fp)? }),
                    );
                }
                out["verified"] = Value::Array(checks);
            }
            Ok(vec![out])
        }
        Command::Census { q, n, d, method } => census_all(*q, *n, *d, *method, exec),
        Command::Enumerate {
            q,
            n,
            d,
            partitions,
        } => Ok(vec![census::enumerate_census(
            *q,
            *n,
            *d,
            *partitions,
            exec,
        )?
        .to_json()]),
        Command::CheckBounds { q, d, n, enumerate } => match n {
            2 => Ok(vec![census::bounds_check_n2(*q, *d)?.to_json()]),
            1 => {
                let c = census::count_uni(*q, *d)?;
                let mut out = c.to_json();
                if *enumerate {
                    let r = census::enumerate_census(*q, 1, *d, 16, exec)?;
                    out["D_enumerated"] = json!(r.decomposable.to_string());
                    out["holds"] = json!(c.admits(&r.decomposable));
                } else {
                    out["holds"] = json!(match (&c.lower, &c.upper) {
                        (Some(l), Some(u)) => l <= u,
                        _ => true,
                    });
                }
                Ok(vec![out])
            }
            _ => Err(CliError::Usage(
                "check-bounds supports n = 1 and n = 2".into(),
            )),
        },
        Command::BdLemma { d_max } => Ok(vec![census::bd_lemma_check(*d_max)?.to_json()]),
    }
}

fn scalar(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Null => "-".into(),
        other => other.to_string(),
    }
}

/// Aligned `key  value` lines for one report; nested values stay compact
/// JSON.
pub fn render_text(v: &Value) -> String {
    let Value::Object(map) = v else {
        return scalar(v);
    };
    let width = map.keys().map(|k| k.len()).max().unwrap_or(0);
    let mut out = String::new();
    for (k, val) in map {
        let _ = writeln!(out, "{k:<width$}  {}", scalar(val));
    }
    out
}

/// Output of one invocation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

/// Parses `args` (program name first) and runs the command.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            return if code == 0 {
                Outcome {
                    code,
                    stdout: text,
                    stderr: String::new(),
                }
            } else {
                Outcome {
                    code,
                    stdout: String::new(),
                    stderr: text,
                }
            };
        }
    };
    match with_jobs(cli.jobs, || execute(&cli)) {
        Ok(values) => {
            let mut stdout = String::new();
            for v in &values {
                match cli.format {
                    Format::Json => {
                        let _ = writeln!(stdout, "{v}");
                    }
                    Format::Text => {
                        stdout.push_str(&render_text(v));
                        if values.len() > 1 {
                            stdout.push('\n');
                        }
                    }
                }
            }
            Outcome {
                code: 0,
                stdout,
                stderr: String::new(),
            }
        }
        Err(e) => Outcome {
            code: e.exit_code(),
            stdout: String::new(),
            stderr: format!("error: {e}\n"),
        },
    }
}
