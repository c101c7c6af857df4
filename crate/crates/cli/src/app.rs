//! Argument handling and subcommand dispatch.

use std::ffi::OsString;

use clap::{Parser, Subcommand, ValueEnum};
use ene::algebra::{Gaussian, Poly};
use ene::euler::euler_p;
use ene::limits::{convergence_report, ConvergenceReport, SampleRegion};
use ene::series::SeriesWindow;
use ene::transalg::{transalg_make, TransalgebraicFunction};
use serde_json::json;

use crate::render::{series_json, series_line, value_json, value_text};
use crate::syntax::parse;
use crate::value::{ene_values, evaluate, expand, EvalError, Value};
use crate::verify::{verify, Fault, Suite, VerifyConfig};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Parser)]
#[command(name = "ene-cli", version, about = "Exact eñe products, Euler functions and limit experiments")]
pub struct Cli {
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Truncation order of series output.
    #[arg(long, global = true, default_value_t = 16)]
    pub order: i64,
    /// Exclusion radius around zeros and singularities in `limit`.
    #[arg(long, global = true, default_value_t = ene::limits::DEFAULT_EPSILON)]
    pub epsilon: f64,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Evaluate an expression.
    Eval { expr: String },
    /// Eñe product of two expressions.
    Ene { a: String, b: String },
    /// Expansion at 0 up to `--order`.
    Series { expr: String },
    /// `P_k` and `R_k` for k = 1..K.
    EulerTable { k: i64 },
    /// Run an identity suite: ring, euler, generators, polylog, bridge, limits.
    Verify {
        suite: String,
        #[arg(long, default_value_t = 16)]
        max_k: i64,
        #[arg(long, hide = true)]
        inject_fault: Option<String>,
    },
    /// Sup-norm error and support distance of the Euler approximants.
    Limit {
        #[arg(long)]
        expr: String,
        #[arg(long)]
        kmax: u64,
        /// e.g. `circle:0,0,1,64;rect:-2,-2,2,2,20,20`
        #[arg(long)]
        grid: String,
    },
}

/// What a run writes, and its exit status.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Output {
    pub status: u8,
    pub stdout: String,
    pub stderr: String,
}

impl Output {
    fn ok(stdout: String) -> Self {
        Self {
            status: 0,
            stdout,
            stderr: String::new(),
        }
    }

    fn usage(message: impl std::fmt::Display) -> Self {
        Self {
            status: 2,
            stdout: String::new(),
            stderr: format!("error: {message}\n"),
        }
    }
}

pub fn run<I, T>(args: I) -> Output
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Output {
                    status: 2,
                    stdout: String::new(),
                    stderr: text,
                }
            } else {
                Output::ok(text)
            };
        }
    };
    execute(&cli)
}

fn with_newline(mut s: String) -> String {
    if !s.ends_with('\n') {
        s.push('\n');
    }
    s
}

fn pretty(v: &impl serde::Serialize) -> String {
    with_newline(serde_json::to_string_pretty(v).expect("serializable"))
}

fn parse_value(src: &str, window: SeriesWindow) -> Result<Value, String> {
    let e = parse(src).map_err(|e| format!("parse error at {e}"))?;
    evaluate(&e, window).map_err(|e| e.to_string())
}

pub fn execute(cli: &Cli) -> Output {
    if cli.order < 0 {
        return Output::usage(format!("--order must be ≥ 0, got {}", cli.order));
    }
    let window = SeriesWindow::order(cli.order);
    let result = match &cli.command {
        Command::Eval { expr } => parse_value(expr, window).and_then(|v| show_value(&v, cli.format, window)),
        Command::Ene { a, b } => parse_value(a, window).and_then(|x| {
            let y = parse_value(b, window)?;
            let v = ene_values(&x, &y, window).map_err(|e| e.to_string())?;
            show_value(&v, cli.format, window)
        }),
        Command::Series { expr } => parse_value(expr, window).and_then(|v| {
            let (s, p) = expand(&v, window).map_err(|e| e.to_string())?;
            let normalized = matches!(v, Value::Function { .. } | Value::Ene { .. });
            Ok(match cli.format {
                Format::Text => with_newline(series_line(&s, &p)),
                Format::Json => pretty(&series_json(&s, &p, normalized)),
            })
        }),
        Command::EulerTable { k } => euler_table(*k, cli.format),
        Command::Verify {
            suite,
            max_k,
            inject_fault,
        } => return run_verify(cli, suite, *max_k, inject_fault.as_deref()),
        Command::Limit { expr, kmax, grid } => limit(cli, expr, *kmax, grid),
    };
    match result {
        Ok(s) => Output::ok(s),
        Err(e) => Output::usage(e),
    }
}

fn show_value(v: &Value, format: Format, window: SeriesWindow) -> Result<String, String> {
    let r: Result<String, EvalError> = match format {
        Format::Text => value_text(v, window).map(with_newline),
        Format::Json => value_json(v, window).map(|j| pretty(&j)),
    };
    r.map_err(|e| e.to_string())
}

fn run_verify(cli: &Cli, suite: &str, max_k: i64, fault: Option<&str>) -> Output {
    let suite: Suite = match suite.parse() {
        Ok(s) => s,
        Err(e) => return Output::usage(e),
    };
    let fault: Option<Fault> = match fault.map(str::parse).transpose() {
        Ok(f) => f,
        Err(e) => return Output::usage(e),
    };
    let cfg = VerifyConfig {
        order: cli.order,
        max_k,
        fault,
        ..VerifyConfig::default()
    };
    match verify(suite, &cfg) {
        Ok(report) => Output {
            status: if report.passed { 0 } else { 1 },
            stdout: match cli.format {
                Format::Text => with_newline(report.to_string()),
                Format::Json => pretty(&report),
            },
            stderr: String::new(),
        },
        Err(e) => Output::usage(e),
    }
}

/// `1 + 4z + z^2` for integer coefficients.
fn compact_poly(p: &Poly) -> String {
    let mut out = String::new();
    for (j, c) in p.coeffs().iter().enumerate() {
        let n = c.as_i64().expect("integer coefficients");
        if n == 0 {
            continue;
        }
        let mag = n.unsigned_abs();
        if out.is_empty() {
            if n < 0 {
                out.push('-');
            }
        } else {
            out.push_str(if n < 0 { " - " } else { " + " });
        }
        if mag != 1 || j == 0 {
            out.push_str(&mag.to_string());
        }
        match j {
            0 => {}
            1 => out.push('z'),
            _ => out.push_str(&format!("z^{j}")),
        }
    }
    out
}

/// `-z(P_k)/(1 - z)^k`.
pub fn euler_rational_text(k: i64, p: &Poly) -> String {
    let num = if p.is_constant() {
        "-z".to_string()
    } else {
        format!("-z({})", compact_poly(p))
    };
    let den = if k == 1 {
        "(1 - z)".to_string()
    } else {
        format!("(1 - z)^{k}")
    };
    format!("{num}/{den}")
}

pub fn euler_table(k: i64, format: Format) -> Result<String, String> {
    if k < 1 {
        return Err(format!("euler-table needs K ≥ 1, got {k}"));
    }
    let rows: Vec<(i64, Vec<String>, String)> = (1..=k)
        .map(|j| {
            let p = euler_p(j).expect("j ≥ 1").poly;
            let coeffs = p.coeffs().iter().map(Gaussian::to_string).collect();
            (j, coeffs, euler_rational_text(j, &p))
        })
        .collect();
    Ok(match format {
        Format::Text => rows
            .iter()
            .map(|(j, c, r)| format!("k={j}  P=[{}]  R_{j}(z) = {r}\n", c.join(", ")))
            .collect(),
        Format::Json => pretty(&json!({
            "rows": rows
                .iter()
                .map(|(j, c, r)| json!({ "k": j, "p": c, "rational": r }))
                .collect::<Vec<_>>()
        })),
    })
}

fn limit_function(v: Value) -> Result<TransalgebraicFunction, String> {
    match v {
        Value::Rational(r) => TransalgebraicFunction::rational(r).map_err(|e| e.to_string()),
        Value::Function { rat, exponent } if exponent.terms.is_empty() => {
            transalg_make(rat, exponent.rational).map_err(|e| e.to_string())
        }
        v => Err(format!(
            "limit needs R0·exp(R1) with R0, R1 rational, got a {}",
            v.kind()
        )),
    }
}

/// `1, 2, 4, …` up to `kmax`, ending at `kmax`.
pub fn limit_ks(kmax: u64) -> Vec<u64> {
    let mut ks: Vec<u64> = std::iter::successors(Some(1u64), |k| k.checked_mul(2))
        .take_while(|&k| k <= kmax)
        .collect();
    if ks.last() != Some(&kmax) {
        ks.push(kmax);
    }
    ks
}

fn limit(cli: &Cli, expr: &str, kmax: u64, grid: &str) -> Result<String, String> {
    if kmax == 0 {
        return Err("--kmax must be ≥ 1".into());
    }
    let f = limit_function(parse_value(expr, SeriesWindow::order(cli.order))?)?;
    let region: SampleRegion = grid.parse().map_err(|e| format!("bad grid: {e}"))?;
    let region = region.with_epsilon(cli.epsilon);
    let report = convergence_report(&f, &limit_ks(kmax), &region).map_err(|e| e.to_string())?;
    Ok(match cli.format {
        Format::Json => pretty(&report),
        Format::Text => limit_table(&report),
    })
}

fn limit_table(r: &ConvergenceReport) -> String {
    let mut out = format!("{:>6}  {:>12}  {:>12}\n", "k", "sup_error", "hausdorff");
    for e in &r.entries {
        let h = e.hausdorff.map_or("-".to_string(), |h| format!("{h:.6e}"));
        out.push_str(&format!("{:>6}  {:>12.6e}  {:>12}\n", e.k, e.sup_error, h));
    }
    match r.decay_exponent {
        Some(d) => out.push_str(&format!("decay exponent: {d:.4}\n")),
        None => out.push_str("decay exponent: -\n"),
    }
    out
}
