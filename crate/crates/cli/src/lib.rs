//! Command-line surface for fibsection.
//!
//! [`run`] parses an argument vector, performs the computation and returns
//! the exit status together with the text destined for stdout and stderr.
//! Exit status: 0 success, 1 verification failure, 2 usage error.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::time::Instant;

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand, ValueEnum};
use fibsection::verify::{run_suite, Report, Suite, SweepBounds};
use fibsection::{
    conv_by_route, fib, lucas, monic_signed_u, section_gf, section_terms, signed_u_explicit,
    BigInt, Kind, Route, SectionParams, Sign,
};
use serde::{Deserialize, Serialize};
use serde_json::{Map, Value};

pub const VERSION: &str = env!("CARGO_PKG_VERSION");

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFY_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "fibsection",
    version,
    about = "Exact Fibonacci/Lucas sections, convolutions and Chebyshev families",
    allow_negative_numbers = true
)]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Plain)]
    format: Format,
    /// Suppress diagnostics and per-check detail.
    #[arg(long, global = true)]
    quiet: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Plain,
    Json,
    Csv,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Fibonacci numbers F_n.
    Fib(IndexArgs),
    /// Lucas numbers L_n.
    Lucas(IndexArgs),
    /// Terms X_{dn+h} of a Fibonacci or Lucas section.
    Section(SectionArgs),
    /// Coefficients of the (s+1)-th power of a section's generating function.
    Conv(ConvArgs),
    /// Coefficients of a signed Chebyshev polynomial of the second kind.
    Cheb(ChebArgs),
    /// Run an invariant sweep and report pass/fail counts.
    Verify(VerifyArgs),
}

#[derive(Debug, Args)]
struct IndexArgs {
    /// Index (any sign).
    #[arg(allow_negative_numbers = true)]
    n: Option<i64>,
    /// Inclusive index window A..=B.
    #[arg(long, num_args = 2, value_names = ["A", "B"], allow_negative_numbers = true, conflicts_with = "n")]
    range: Option<Vec<i64>>,
}

#[derive(Debug, Args)]
struct SectionArgs {
    #[arg(long, allow_negative_numbers = true)]
    d: i64,
    #[arg(long, allow_negative_numbers = true)]
    h: i64,
    /// Section the Lucas numbers instead of Fibonacci.
    #[arg(long)]
    lucas: bool,
    #[arg(long, required_unless_present = "gf")]
    terms: Option<usize>,
    /// Print the numerator and denominator coefficient lists.
    #[arg(long)]
    gf: bool,
}

#[derive(Debug, Args)]
struct ConvArgs {
    #[arg(long, allow_negative_numbers = true)]
    d: i64,
    #[arg(long, allow_negative_numbers = true)]
    h: i64,
    #[arg(long)]
    s: usize,
    #[arg(long)]
    terms: usize,
    #[arg(long, default_value = "closed", value_parser = parse_route)]
    route: Route,
    #[arg(long)]
    lucas: bool,
}

#[derive(Debug, Args)]
struct ChebArgs {
    #[arg(long)]
    n: usize,
    #[arg(long, default_value_t = 0)]
    s: usize,
    /// Sign of the t² term; -1 gives the classical family.
    #[arg(long, default_value_t = -1, allow_negative_numbers = true)]
    eps: i64,
    /// Use the argument y = 2x (integer-scaled monic variant).
    #[arg(long)]
    monic: bool,
}

#[derive(Debug, Args)]
struct VerifyArgs {
    #[arg(long, value_parser = parse_suite)]
    suite: Suite,
    #[arg(long)]
    max_d: Option<i64>,
    #[arg(long)]
    max_s: Option<usize>,
    #[arg(long)]
    max_n: Option<usize>,
}

fn parse_route(s: &str) -> Result<Route, String> {
    s.parse()
}

fn parse_suite(s: &str) -> Result<Suite, String> {
    s.parse()
}

/// Machine-readable output record.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct OutputRecord {
    pub params: Map<String, Value>,
    pub terms: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub gf: Option<GfRecord>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub failures: Option<Vec<String>>,
    pub meta: Meta,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GfRecord {
    pub num: Vec<String>,
    pub den: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Meta {
    pub route: String,
    pub version: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn usage(msg: impl std::fmt::Display) -> Outcome {
        Outcome {
            code: EXIT_USAGE,
            stdout: String::new(),
            stderr: format!("error: {msg}\n"),
        }
    }
}

fn strings(values: &[BigInt]) -> Vec<String> {
    values.iter().map(BigInt::to_string).collect()
}

fn params(pairs: &[(&str, Value)]) -> Map<String, Value> {
    pairs
        .iter()
        .map(|(k, v)| ((*k).to_owned(), v.clone()))
        .collect()
}

fn num(v: impl ToString) -> Value {
    Value::String(v.to_string())
}

/// Data computed by one subcommand, before formatting.
struct Emitted {
    params: Map<String, Value>,
    route: &'static str,
    /// `(index, value)` rows.
    rows: Vec<(String, String)>,
    gf: Option<GfRecord>,
    verify: Option<Report>,
}

impl Emitted {
    fn series(params: Map<String, Value>, route: &'static str, start: i64, values: &[BigInt]) -> Self {
        Emitted {
            params,
            route,
            rows: values
                .iter()
                .zip(start..)
                .map(|(v, i)| (i.to_string(), v.to_string()))
                .collect(),
            gf: None,
            verify: None,
        }
    }

    fn record(&self) -> OutputRecord {
        let terms = match &self.verify {
            Some(r) => vec![r.total(), r.passed(), r.failed()]
                .into_iter()
                .map(|c| c.to_string())
                .collect(),
            None => self.rows.iter().map(|(_, v)| v.clone()).collect(),
        };
        OutputRecord {
            params: self.params.clone(),
            terms,
            gf: self.gf.clone(),
            failures: self
                .verify
                .as_ref()
                .map(|r| r.failures().map(|c| c.label.clone()).collect()),
            meta: Meta {
                route: self.route.to_owned(),
                version: VERSION.to_owned(),
            },
        }
    }

    fn render(&self, format: Format, quiet: bool) -> String {
        match format {
            Format::Json => {
                let mut s = serde_json::to_string(&self.record()).expect("record serializes");
                s.push('\n');
                s
            }
            Format::Plain => self.render_plain(quiet),
            Format::Csv => self.render_csv(),
        }
    }

    fn render_plain(&self, quiet: bool) -> String {
        let mut out = String::new();
        if let Some(r) = &self.verify {
            if !quiet {
                for c in r.failures() {
                    let _ = writeln!(out, "FAIL {} {}", r.suite, c.label);
                }
            }
            let _ = writeln!(
                out,
                "{}: {} checks, {} passed, {} failed",
                r.suite,
                r.total(),
                r.passed(),
                r.failed()
            );
        } else if let Some(gf) = &self.gf {
            let _ = writeln!(out, "num: {}", gf.num.join(" "));
            let _ = writeln!(out, "den: {}", gf.den.join(" "));
        } else {
            let line: Vec<&str> = self.rows.iter().map(|(_, v)| v.as_str()).collect();
            let _ = writeln!(out, "{}", line.join(" "));
        }
        out
    }

    fn render_csv(&self) -> String {
        let mut out = String::new();
        if let Some(r) = &self.verify {
            out.push_str("suite,checks,passed,failed\n");
            let _ = writeln!(out, "{},{},{},{}", r.suite, r.total(), r.passed(), r.failed());
        } else if let Some(gf) = &self.gf {
            out.push_str("part,n,value\n");
            for (part, coeffs) in [("num", &gf.num), ("den", &gf.den)] {
                for (i, c) in coeffs.iter().enumerate() {
                    let _ = writeln!(out, "{part},{i},{c}");
                }
            }
        } else {
            out.push_str("n,value\n");
            for (i, v) in &self.rows {
                let _ = writeln!(out, "{i},{v}");
            }
        }
        out
    }
}

fn index_command(args: &IndexArgs, f: fn(i64) -> BigInt) -> Result<Emitted, String> {
    match (&args.n, &args.range) {
        (Some(n), None) => Ok(Emitted::series(
            params(&[("n", num(n))]),
            "closed",
            *n,
            &[f(*n)],
        )),
        (None, Some(r)) => {
            let (a, b) = (r[0], r[1]);
            if a > b {
                return Err(format!("empty range {a}..{b}"));
            }
            let values: Vec<BigInt> = (a..=b).map(f).collect();
            Ok(Emitted::series(
                params(&[("range", Value::Array(vec![num(a), num(b)]))]),
                "closed",
                a,
                &values,
            ))
        }
        _ => Err("expected an index N or --range A B".to_owned()),
    }
}

fn kind_of(lucas: bool) -> Kind {
    if lucas {
        Kind::Lucas
    } else {
        Kind::Fibonacci
    }
}

fn section_command(args: &SectionArgs) -> Result<Emitted, String> {
    let kind = kind_of(args.lucas);
    let mut echo = vec![
        ("d", num(args.d)),
        ("h", num(args.h)),
        ("kind", Value::String(kind.as_str().to_owned())),
    ];
    if let Some(t) = args.terms {
        echo.push(("terms", num(t)));
    }
    if args.gf {
        echo.push(("gf", Value::Bool(true)));
        let gf = section_gf(args.d, args.h, kind).map_err(|e| e.to_string())?;
        let pad = |c: &[BigInt], len: usize| {
            let mut v = strings(c);
            v.resize(len, "0".to_owned());
            v
        };
        return Ok(Emitted {
            params: params(&echo),
            route: "closed",
            rows: Vec::new(),
            gf: Some(GfRecord {
                num: pad(gf.num.coeffs(), 2),
                den: pad(gf.den.coeffs(), 3),
            }),
            verify: None,
        });
    }
    let p = SectionParams::new(args.d, args.h, 0)
        .map_err(|e| e.to_string())?
        .with_kind(kind);
    let terms = section_terms(&p, args.terms.unwrap_or_default());
    Ok(Emitted::series(params(&echo), "oracle", 0, &terms))
}

fn conv_command(args: &ConvArgs) -> Result<Emitted, String> {
    let kind = kind_of(args.lucas);
    let p = SectionParams::new(args.d, args.h, args.s)
        .map_err(|e| e.to_string())?
        .with_kind(kind);
    let terms = conv_by_route(&p, args.route, args.terms);
    let echo = params(&[
        ("d", num(args.d)),
        ("h", num(args.h)),
        ("s", num(args.s)),
        ("kind", Value::String(kind.as_str().to_owned())),
        ("terms", num(args.terms)),
        ("route", Value::String(args.route.as_str().to_owned())),
    ]);
    Ok(Emitted::series(echo, args.route.as_str(), 0, &terms))
}

fn cheb_command(args: &ChebArgs) -> Result<Emitted, String> {
    let eps = Sign::try_from(args.eps).map_err(|e| e.to_string())?;
    let poly = if args.monic {
        monic_signed_u(args.n, args.s, eps)
    } else {
        signed_u_explicit(args.n, args.s, eps)
    };
    // full dense list up to degree n, so the zero polynomial never appears empty
    let mut coeffs = poly.into_coeffs();
    coeffs.resize(args.n + 1, BigInt::default());
    let echo = params(&[
        ("n", num(args.n)),
        ("s", num(args.s)),
        ("eps", Value::String(eps.to_string())),
        ("monic", Value::Bool(args.monic)),
    ]);
    Ok(Emitted::series(echo, "closed", 0, &coeffs))
}

fn verify_command(args: &VerifyArgs) -> Emitted {
    let report = run_suite(
        args.suite,
        SweepBounds {
            max_d: args.max_d,
            max_s: args.max_s,
            max_n: args.max_n,
        },
    );
    let b = report.bounds;
    let echo = params(&[
        ("suite", Value::String(args.suite.as_str().to_owned())),
        ("max_d", num(b.max_d)),
        ("max_s", num(b.max_s)),
        ("max_n", num(b.max_n)),
    ]);
    Emitted {
        params: echo,
        route: "sweep",
        rows: Vec::new(),
        gf: None,
        verify: Some(report),
    }
}

/// Parse `argv` (including the program name) and execute it.
pub fn run<I, T>(argv: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => Outcome {
                    code: EXIT_OK,
                    stdout: e.to_string(),
                    stderr: String::new(),
                },
                _ => {
                    let msg = e.to_string();
                    let line = msg
                        .lines()
                        .next()
                        .unwrap_or("invalid arguments")
                        .trim_start_matches("error: ");
                    Outcome::usage(line)
                }
            };
        }
    };

    let started = Instant::now();
    let emitted = match &cli.command {
        Command::Fib(a) => index_command(a, fib),
        Command::Lucas(a) => index_command(a, lucas),
        Command::Section(a) => section_command(a),
        Command::Conv(a) => conv_command(a),
        Command::Cheb(a) => cheb_command(a),
        Command::Verify(a) => Ok(verify_command(a)),
    };
    let emitted = match emitted {
        Ok(e) => e,
        Err(msg) => return Outcome::usage(msg),
    };

    let mut outcome = Outcome {
        code: EXIT_OK,
        stdout: emitted.render(cli.format, cli.quiet),
        stderr: String::new(),
    };
    if let Some(r) = &emitted.verify {
        if !r.ok() {
            outcome.code = EXIT_VERIFY_FAILED;
        }
        if !cli.quiet {
            outcome.stderr = format!("elapsed: {:.3}s\n", started.elapsed().as_secs_f64());
        }
    }
    outcome
}
