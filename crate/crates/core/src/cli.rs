//! Command-line front end. [`run`] takes the arguments and output streams
//! explicitly and returns the exit code: 0 on success, 1 when a
//! verification fails, 2 for usage and parse errors.

use std::ffi::OsString;
use std::io::Write;

use clap::{Parser, Subcommand};

use crate::combinatorics::{Composition, Partition, SkewShape};
use crate::error::{Error, Result};
use crate::polyval::{eval_s_tableau, eval_symfunc, SparsePoly};
use crate::ring::{convert, multiply, skew_schur};
use crate::symfunc::{Basis, SymFunc};
use crate::tableaux::{enumerate_ssyt, kostka, lr_coefficient, lr_tableaux, Tableau};
use crate::verify::{run_suite, SUITES};

pub const MAX_DEGREE_VAR: &str = "SCHURKIT_MAX_DEGREE";
pub const DEFAULT_MAX_DEGREE: usize = 20;

#[derive(Debug, Parser)]
#[command(name = "schurkit", version, about = "Exact symmetric function computations")]
struct Cli {
    /// Print machine-readable JSON instead of text.
    #[arg(long, global = true)]
    json: bool,

    /// Basis for printed symmetric functions.
    #[arg(long, global = true, value_name = "s|h|e|m")]
    basis: Option<Basis>,

    /// Number of variables for `eval`.
    #[arg(long, global = true, value_name = "N")]
    vars: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Multiply factors such as `s[2,1]*h[1]` or `(s[2] - s[1,1])*e[1]`.
    Mult { expr: String },
    /// Rewrite an expression such as `2*h[2,1] - h[3]` in `--basis`.
    Convert { expr: String },
    /// Littlewood-Richardson coefficient c^λ_{μν}.
    Lr {
        lambda: Partition,
        mu: Partition,
        nu: Partition,
        /// Also print the counted LR tableaux as JSON.
        #[arg(long)]
        witnesses: bool,
    },
    /// Number of tableaux of shape λ/μ with content α.
    Kostka {
        lambda: Partition,
        mu: Partition,
        alpha: Composition,
        /// Also print the counted tableaux as JSON.
        #[arg(long)]
        witnesses: bool,
    },
    /// Expand the skew Schur function s_{λ/μ}.
    Skew { lambda: Partition, mu: Partition },
    /// Polynomial in `--vars` variables: a shape `λ [μ]` summed over
    /// tableaux, or any symmetric function expression.
    Eval { target: String, inner: Option<Partition> },
    /// Run a property suite at one degree (or every degree up to it).
    Verify {
        suite: String,
        bound: usize,
        /// Check every degree from 0 through the bound.
        #[arg(long)]
        upto: bool,
    },
}

/// Reads the degree cap from the environment; unparsable values fall back
/// to the default.
pub fn max_degree_from_env() -> usize {
    std::env::var(MAX_DEGREE_VAR)
        .ok()
        .and_then(|v| v.trim().parse().ok())
        .unwrap_or(DEFAULT_MAX_DEGREE)
}

fn check_cap(degree: usize, cap: usize) -> Result<()> {
    if degree > cap {
        return Err(Error::DegreeCap { degree, cap });
    }
    Ok(())
}

/// Splits on `*` outside brackets and parentheses.
fn split_factors(expr: &str) -> Result<Vec<String>> {
    let compact: String = expr.chars().filter(|c| !c.is_whitespace()).collect();
    let mut depth = 0i32;
    let mut parts = vec![String::new()];
    for ch in compact.chars() {
        match ch {
            '(' | '[' => depth += 1,
            ')' | ']' => depth -= 1,
            _ => {}
        }
        if depth < 0 {
            return Err(Error::Parse(format!("unbalanced `{ch}` in `{expr}`")));
        }
        if ch == '*' && depth == 0 {
            parts.push(String::new());
        } else {
            parts.last_mut().expect("nonempty").push(ch);
        }
    }
    if depth != 0 {
        return Err(Error::Parse(format!("unbalanced brackets in `{expr}`")));
    }
    Ok(parts)
}

/// A product of factors, each `B[parts]` or a parenthesized expression.
fn parse_product(expr: &str) -> Result<Vec<SymFunc>> {
    let factors = split_factors(expr)?;
    factors
        .iter()
        .map(|f| {
            if f.is_empty() {
                return Err(Error::Parse(format!("empty factor in `{expr}`")));
            }
            let inner = match f.strip_prefix('(') {
                Some(rest) => rest
                    .strip_suffix(')')
                    .ok_or_else(|| Error::Parse(format!("unbalanced factor `{f}`")))?,
                None if f.contains(['+', '-']) => {
                    return Err(Error::Parse(format!("parenthesize the sum `{f}`")));
                }
                None => f.as_str(),
            };
            inner.parse()
        })
        .collect()
}

fn degree_of(f: &SymFunc) -> usize {
    f.max_degree().unwrap_or(0)
}

fn render_symfunc(f: &SymFunc, json: bool) -> String {
    if json {
        f.to_json().to_string()
    } else {
        f.to_string()
    }
}

fn render_poly(p: &SparsePoly, json: bool) -> String {
    if json {
        p.to_json().to_string()
    } else {
        p.to_string()
    }
}

fn render_count(count: String, witnesses: Option<Vec<Tableau>>, json: bool) -> String {
    let listed = witnesses.map(|ts| serde_json::Value::Array(ts.iter().map(Tableau::to_json).collect()));
    match (json, listed) {
        (true, Some(list)) => serde_json::json!({ "value": count, "witnesses": list }).to_string(),
        (true, None) => serde_json::json!({ "value": count }).to_string(),
        (false, Some(list)) => format!("{count}\n{list}"),
        (false, None) => count,
    }
}

enum Outcome {
    Done(String),
    Failed(String, String),
}

fn execute(cli: Cli, cap: usize, err: &mut dyn Write) -> Result<Outcome> {
    let target = cli.basis.unwrap_or(Basis::Schur);
    let json = cli.json;
    let text = match cli.command {
        Command::Mult { expr } => {
            let factors = parse_product(&expr)?;
            check_cap(factors.iter().map(degree_of).sum(), cap)?;
            let product = factors
                .iter()
                .fold(SymFunc::one(Basis::Schur), |acc, f| multiply(&acc, f));
            render_symfunc(&convert(&product, target), json)
        }
        Command::Convert { expr } => {
            let f: SymFunc = expr.parse()?;
            check_cap(degree_of(&f), cap)?;
            render_symfunc(&convert(&f, target), json)
        }
        Command::Lr {
            lambda,
            mu,
            nu,
            witnesses,
        } => {
            check_cap(lambda.size(), cap)?;
            let c = lr_coefficient(&lambda, &mu, &nu);
            let listed = witnesses.then(|| lr_tableaux(&lambda, &mu, &nu));
            render_count(c.to_string(), listed, json)
        }
        Command::Kostka {
            lambda,
            mu,
            alpha,
            witnesses,
        } => {
            check_cap(lambda.size(), cap)?;
            let shape = SkewShape::new(lambda, mu)?;
            let count = kostka(&shape, &alpha.to_int_vector());
            let listed = witnesses.then(|| enumerate_ssyt(&shape, alpha.len(), Some(&alpha)));
            render_count(count.to_string(), listed, json)
        }
        Command::Skew { lambda, mu } => {
            check_cap(lambda.size(), cap)?;
            render_symfunc(&convert(&skew_schur(&lambda, &mu), target), json)
        }
        Command::Eval { target: expr, inner } => {
            let n = cli.vars.ok_or_else(|| Error::Parse("eval needs --vars N".into()))?;
            let poly = if expr.trim_start().starts_with('[') {
                let lambda: Partition = expr.parse()?;
                check_cap(lambda.size(), cap)?;
                eval_s_tableau(&lambda, &inner.unwrap_or_default(), n)
            } else {
                if inner.is_some() {
                    return Err(Error::Parse("an inner shape only applies to a partition".into()));
                }
                let f: SymFunc = expr.parse()?;
                check_cap(degree_of(&f), cap)?;
                eval_symfunc(&f, n)
            };
            render_poly(&poly, json)
        }
        Command::Verify { suite, bound, upto } => {
            if !SUITES.contains(&suite.as_str()) {
                return Err(Error::Parse(format!(
                    "unknown suite `{suite}`; expected one of {}",
                    SUITES.join(", ")
                )));
            }
            check_cap(bound, cap)?;
            let report = run_suite(&suite, bound, upto, &mut |line| {
                let _ = writeln!(err, "{line}");
            })?;
            let text = if json {
                report.to_json().to_string()
            } else {
                report.to_string()
            };
            if !report.passed() {
                let why = report.counterexample.clone().unwrap_or_default();
                return Ok(Outcome::Failed(text, why));
            }
            text
        }
    };
    Ok(Outcome::Done(text))
}

/// Parses `args` (including the program name) and runs the command,
/// writing results to `out` and diagnostics to `err`.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let rendered = e.render().to_string();
            let sink: &mut dyn Write = if code == 0 { out } else { err };
            let _ = write!(sink, "{rendered}");
            return if code == 0 { 0 } else { 2 };
        }
    };
    match execute(cli, max_degree_from_env(), err) {
        Ok(Outcome::Done(text)) => {
            let _ = writeln!(out, "{text}");
            0
        }
        Ok(Outcome::Failed(text, why)) => {
            let _ = writeln!(out, "{text}");
            let _ = writeln!(err, "counterexample: {why}");
            1
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            2
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let argv = std::iter::once("schurkit").chain(args.iter().copied());
        let code = run(argv, &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn factor_splitting() {
        assert_eq!(split_factors("s[2,1] * h[1]").unwrap(), vec!["s[2,1]", "h[1]"]);
        assert_eq!(split_factors("(2*s[1])*s[1]").unwrap(), vec!["(2*s[1])", "s[1]"]);
        assert!(split_factors("s[1]*(s[1]").is_err());
        assert!(parse_product("s[1]+s[2]*s[1]").is_err());
        assert!(parse_product("s[1]**s[1]").is_err());
    }

    #[test]
    fn documented_outputs() {
        assert_eq!(call(&["mult", "h[1]*s[1]", "--basis", "m"]).1, "m[2] + 2*m[1,1]\n");
        assert_eq!(call(&["mult", "s[]*s[3]"]).1, "s[3]\n");
        assert_eq!(call(&["lr", "[3,2,1]", "[2,1]", "[2,1]"]).1, "2\n");
        assert_eq!(call(&["lr", "[2]", "[]", "[1,1]"]).1, "0\n");
        assert_eq!(call(&["kostka", "[2,1]", "[]", "[1,1,1]"]).1, "2\n");
    }

    #[test]
    fn usage_errors_exit_two() {
        assert_eq!(call(&["mult", "s[1,2]*s[1]"]).0, 2);
        assert_eq!(call(&["mult", "q[1]*s[1]"]).0, 2);
        assert_eq!(call(&["lr", "[1,2]", "[]", "[1]"]).0, 2);
        assert_eq!(call(&["verify", "nope", "3"]).0, 2);
        assert_eq!(call(&["eval", "[2]"]).0, 2);
        assert_eq!(call(&["frobnicate"]).0, 2);
        assert_eq!(call(&["--help"]).0, 0);
    }

    #[test]
    fn degree_cap() {
        assert!(matches!(check_cap(21, 20), Err(Error::DegreeCap { .. })));
        assert!(check_cap(20, 20).is_ok());
    }
}
