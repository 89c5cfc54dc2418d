//! Command-line front end: evaluate, convert and take roots of expressions
//! over hyperspace and 3D numbers, and run the law audit.

pub mod ast;
pub mod eval;
pub mod parse;
pub mod render;

use std::ffi::OsString;
use std::io::Write;

use clap::{Args, Parser, Subcommand, ValueEnum};
use hyperspace::{Orientation, Tol};
use hyperspace_audit::{AuditConfig, Domain, Law};

use crate::eval::Value;
use crate::parse::ParseError;
use crate::render::{Repr, Style};

pub const EXIT_OK: i32 = 0;
pub const EXIT_PARSE: i32 = 1;
pub const EXIT_ARITH: i32 = 2;
pub const EXIT_AUDIT_FAILURES: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "hyperspace", version, about = "Hyperspace complex number calculator and law auditor")]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct Global {
    /// Index order of the angle chain.
    #[arg(long, global = true, default_value = "ccw", value_parser = str::parse::<Orientation>)]
    orientation: Orientation,
    /// Significant digits in output.
    #[arg(long, global = true, default_value_t = 12, value_parser = clap::value_parser!(u8).range(1..=17))]
    digits: u8,
    /// Output format; `audit` defaults to json, everything else to text.
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,
    /// Absolute tolerance, used for zero snapping and audit comparisons.
    #[arg(long, global = true, default_value_t = 1e-12)]
    abs_eps: f64,
    /// Relative tolerance, used for zero snapping and audit comparisons.
    #[arg(long, global = true, default_value_t = 1e-9)]
    rel_eps: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Markdown,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Target {
    Polar,
    Cartesian,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Evaluate an expression.
    Eval {
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
    /// Evaluate an expression and print it in the chosen representation.
    Convert {
        #[arg(long, value_enum)]
        to: Target,
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
    /// All n-th roots of an expression's value.
    Roots {
        #[arg(allow_hyphen_values = true)]
        expr: String,
        n: u32,
    },
    /// Audit algebraic laws on seeded random samples.
    Audit {
        /// Dimensions, comma separated.
        #[arg(long, value_delimiter = ',', default_values_t = [2usize, 3, 4])]
        dim: Vec<usize>,
        #[arg(long, default_value_t = 10_000)]
        samples: usize,
        #[arg(long, default_value_t = 42)]
        seed: u64,
        /// Law to audit, repeatable; `all` selects every law. Defaults to the standard suite.
        #[arg(long)]
        law: Vec<String>,
        #[arg(long, default_value = "unrestricted", value_parser = parse_domain)]
        domain: Domain,
    },
}

fn parse_domain(s: &str) -> Result<Domain, String> {
    s.parse().map_err(|e: hyperspace_audit::AuditError| e.to_string())
}

/// Renders a parse or type error with the offending position marked.
pub fn diagnostic(input: &str, err: &ParseError) -> String {
    let col = input[..err.offset.min(input.len())].chars().count();
    format!("error: {err}\n  {input}\n  {}^", " ".repeat(col))
}

/// Runs the command line `args` (program name first), writing to the given
/// streams, and returns the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_PARSE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() { err.write_all(text.as_bytes()) } else { out.write_all(text.as_bytes()) };
            return code;
        }
    };
    let g = &cli.global;
    let tol = match Tol::new(g.abs_eps, g.rel_eps) {
        Ok(t) => t,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            return EXIT_PARSE;
        }
    };
    match cli.command {
        Command::Eval { ref expr } => evaluate(expr, None, Repr::Cartesian, g, tol, out, err),
        Command::Convert { to, ref expr } => {
            let repr = match to {
                Target::Polar => Repr::Polar,
                Target::Cartesian => Repr::Cartesian,
            };
            evaluate(expr, None, repr, g, tol, out, err)
        }
        Command::Roots { ref expr, n } => {
            if n == 0 {
                let _ = writeln!(err, "error: root index must be at least 1");
                return EXIT_PARSE;
            }
            evaluate(expr, Some(n), Repr::Cartesian, g, tol, out, err)
        }
        Command::Audit { dim, samples, seed, ref law, domain } => {
            let cfg = AuditConfig {
                dims: dim,
                samples,
                seed,
                tolerance: tol,
                domain,
                orientation: g.orientation,
            };
            audit(cfg, law, g.format.unwrap_or(Format::Json), out, err)
        }
    }
}

fn evaluate(
    input: &str,
    roots: Option<u32>,
    repr: Repr,
    g: &Global,
    tol: Tol,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> i32 {
    let (expr, fam) = match parse::parse(input) {
        Ok(x) => x,
        Err(e) => {
            let _ = writeln!(err, "{}", diagnostic(input, &e));
            return EXIT_PARSE;
        }
    };
    let expr = match roots {
        Some(n) => {
            if !matches!(fam, ast::Family::Hyper(_) | ast::Family::Space3) {
                let _ = writeln!(err, "error: roots expects a number, got a {fam}");
                return EXIT_PARSE;
            }
            ast::Expr::Roots(Box::new(expr), n)
        }
        None => expr,
    };
    let value = match eval::eval(&expr, g.orientation) {
        Ok(v) => v,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            return EXIT_ARITH;
        }
    };
    if repr == Repr::Polar && matches!(value, Value::Scalar(_)) {
        let _ = writeln!(err, "error: a real scalar has no polar form here");
        return EXIT_PARSE;
    }
    let style = Style {
        digits: usize::from(g.digits),
        tol,
        repr,
        orientation: g.orientation,
    };
    let rendered = match g.format.unwrap_or(Format::Text) {
        Format::Json => render::json_value(&value, &style).to_string(),
        Format::Text | Format::Markdown => render::text(&value, &style),
    };
    let _ = writeln!(out, "{rendered}");
    EXIT_OK
}

fn audit(cfg: AuditConfig, names: &[String], format: Format, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let mut laws = Vec::new();
    for name in names {
        if name == "all" {
            laws.extend(Law::all());
            continue;
        }
        match name.parse::<Law>() {
            Ok(l) => laws.push(l),
            Err(e) => {
                let _ = writeln!(err, "error: {e}");
                return EXIT_PARSE;
            }
        }
    }
    let report = match hyperspace_audit::run_audit(&cfg, &laws) {
        Ok(r) => r,
        Err(hyperspace_audit::AuditError::Arithmetic(e)) => {
            let _ = writeln!(err, "error: {e}");
            return EXIT_ARITH;
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            return EXIT_PARSE;
        }
    };
    let text = match format {
        Format::Json => serde_json::to_string_pretty(&report).expect("report serializes"),
        Format::Text | Format::Markdown => hyperspace_audit::render_markdown(&report),
    };
    let _ = writeln!(out, "{}", text.trim_end());
    if report.any_failures() {
        EXIT_AUDIT_FAILURES
    } else {
        EXIT_OK
    }
}
