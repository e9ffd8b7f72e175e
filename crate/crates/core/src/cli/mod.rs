//! Command-line front end.
//!
//! Exit status: 0 success, 1 a verification came out false, 2 usage or
//! parse error, 3 singular input (a core operation rejected its arguments).

pub mod expr;
pub mod svg;
pub mod syntax;

use std::fmt::Write as _;
use std::path::PathBuf;
use std::str::FromStr;

use clap::{Parser, Subcommand, ValueEnum};

use crate::constructions::DesarguesError;
use crate::crossratio_maps::{verify_all, CrossRatioBase, MapError, MapFamily, SampleSet};
use crate::plane::Plane;
use crate::skewfield::{PrimeField, Quaternions, Rationals};
use expr::{parse_expression, EvalError};
use syntax::{parse_desargues_config, parse_point, parse_scalar, parse_scalar_list, CliBackend};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_SINGULAR: i32 = 3;

/// `rational`, `gfp(p)` or `quaternion`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BackendSpec {
    Rational,
    Prime(u64),
    Quaternion,
}

impl FromStr for BackendSpec {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s.trim() {
            "rational" => Ok(BackendSpec::Rational),
            "quaternion" => Ok(BackendSpec::Quaternion),
            other => {
                let p = other
                    .strip_prefix("gfp(")
                    .and_then(|r| r.strip_suffix(')'))
                    .and_then(|n| n.trim().parse::<u64>().ok())
                    .ok_or_else(|| format!("unknown backend `{other}` (expected rational, gfp(p) or quaternion)"))?;
                PrimeField::new(p).map_err(|e| e.to_string())?;
                Ok(BackendSpec::Prime(p))
            }
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OpArg {
    Add,
    Mul,
}

#[derive(Debug, Parser)]
#[command(name = "desargues", version, about = "Exact arithmetic on a Desargues affine plane over a skew field")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Evaluate a scalar expression exactly.
    Eval {
        #[arg(allow_hyphen_values = true)]
        expression: String,
        #[arg(long, default_value = "rational")]
        backend: BackendSpec,
    },
    /// Run the addition or multiplication construction on the line OI.
    Construct {
        op: OpArg,
        #[arg(long, allow_hyphen_values = true)]
        a: String,
        #[arg(long, allow_hyphen_values = true)]
        b: String,
        /// Auxiliary point B1 off the line OI.
        #[arg(long, allow_hyphen_values = true)]
        aux: String,
        #[arg(long, default_value = "(0, 0)")]
        origin: String,
        #[arg(long, default_value = "(1, 0)")]
        unit: String,
        /// Write the construction as SVG (rational backend only).
        #[arg(long)]
        svg: Option<PathBuf>,
        #[arg(long, default_value = "rational")]
        backend: BackendSpec,
    },
    /// Check the algebraic identities of one cross-ratio map family.
    Verify {
        #[arg(long)]
        family: MapFamily,
        /// The three fixed points, comma separated, in slot order.
        #[arg(long, allow_hyphen_values = true)]
        base: String,
        #[arg(long, default_value = "rational")]
        backend: BackendSpec,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 100, value_parser = clap::value_parser!(u64).range(1..))]
        count: u64,
        /// Enumerate every argument tuple (finite fields only).
        #[arg(long)]
        exhaustive: bool,
    },
    /// Check a Desargues configuration read from a file.
    Desargues {
        #[arg(long)]
        config: PathBuf,
        #[arg(long, default_value = "rational")]
        backend: BackendSpec,
    },
    /// Run the built-in invariant suite.
    Selftest {
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

/// Exit status and captured output of one invocation.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn fail(code: i32, stdout: String, message: impl std::fmt::Display) -> Self {
        Outcome { code, stdout, stderr: format!("error: {message}\n") }
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => execute(&cli.command),
        Err(e) => {
            let text = e.render().to_string();
            match e.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => {
                    Outcome { code: EXIT_OK, stdout: text, stderr: String::new() }
                }
                _ => Outcome { code: EXIT_USAGE, stdout: String::new(), stderr: text },
            }
        }
    }
}

macro_rules! with_backend {
    ($spec:expr, |$f:ident| $body:expr) => {
        match $spec {
            BackendSpec::Rational => {
                let $f = Rationals;
                $body
            }
            BackendSpec::Quaternion => {
                let $f = Quaternions;
                $body
            }
            BackendSpec::Prime(p) => {
                let $f = PrimeField::new(p).expect("validated when parsed");
                $body
            }
        }
    };
}

pub fn execute(cmd: &Command) -> Outcome {
    match cmd {
        Command::Eval { expression, backend } => with_backend!(*backend, |f| run_eval(&f, expression)),
        Command::Construct { op, a, b, aux, origin, unit, svg, backend } => {
            let args = ConstructArgs { op: *op, a, b, aux, origin, unit, svg: svg.as_deref() };
            with_backend!(*backend, |f| construct(&f, &args))
        }
        Command::Verify { family, base, backend, seed, count, exhaustive } => {
            let samples = if *exhaustive { SampleSet::Exhaustive } else { SampleSet::Random { seed: *seed, count: *count as usize } };
            with_backend!(*backend, |f| run_verify(&f, *family, base, samples))
        }
        Command::Desargues { config, backend } => {
            let text = match std::fs::read_to_string(config) {
                Ok(t) => t,
                Err(e) => return Outcome::fail(EXIT_USAGE, String::new(), format!("{}: {e}", config.display())),
            };
            with_backend!(*backend, |f| run_desargues(&f, &text))
        }
        Command::Selftest { seed } => {
            let checks = crate::selftest::run(*seed);
            let mut out = String::new();
            for c in &checks {
                let _ = writeln!(out, "{c}");
            }
            let ok = checks.iter().all(|c| c.passed);
            let _ = writeln!(out, "{}", if ok { "selftest passed" } else { "selftest FAILED" });
            Outcome { code: if ok { EXIT_OK } else { EXIT_FAILED }, stdout: out, stderr: String::new() }
        }
    }
}

/// `eval` over an explicit backend.
pub fn run_eval<F: CliBackend>(field: &F, text: &str) -> Outcome {
    let ast = match parse_expression(field, text) {
        Ok(a) => a,
        Err(e) => return Outcome::fail(EXIT_USAGE, String::new(), e),
    };
    match ast.evaluate(field) {
        Ok(v) => Outcome { code: EXIT_OK, stdout: format!("{v}\n"), stderr: String::new() },
        Err(EvalError::Map(e @ (MapError::InvalidBase(_) | MapError::UnknownFamily(_)))) => Outcome::fail(EXIT_USAGE, String::new(), e),
        Err(e) => Outcome::fail(EXIT_SINGULAR, String::new(), e),
    }
}

struct ConstructArgs<'a> {
    op: OpArg,
    a: &'a str,
    b: &'a str,
    aux: &'a str,
    origin: &'a str,
    unit: &'a str,
    svg: Option<&'a std::path::Path>,
}

fn construct<F: CliBackend>(field: &F, args: &ConstructArgs<'_>) -> Outcome {
    let plane = Plane::new(field.clone());
    let parsed = (|| {
        Ok::<_, syntax::SyntaxError>((
            parse_scalar(field, args.a)?,
            parse_scalar(field, args.b)?,
            parse_point(field, args.aux)?,
            parse_point(field, args.origin)?,
            parse_point(field, args.unit)?,
        ))
    })();
    let (a, b, aux, origin, unit) = match parsed {
        Ok(p) => p,
        Err(e) => return Outcome::fail(EXIT_USAGE, String::new(), e),
    };
    let frame = match plane.frame(&origin, &unit) {
        Ok(f) => f,
        Err(e) => return Outcome::fail(EXIT_SINGULAR, String::new(), e),
    };
    let (pa, pb) = (plane.embed(&frame, &a), plane.embed(&frame, &b));
    let trace = match args.op {
        OpArg::Add => plane.trace_add(&frame, &pa, &pb, &aux),
        OpArg::Mul => plane.trace_mul(&frame, &pa, &pb, &aux),
    };
    let trace = match trace {
        Ok(t) => t,
        Err(e) => return Outcome::fail(EXIT_SINGULAR, String::new(), e),
    };
    let mut out = String::new();
    for (name, p) in [("O", &trace.origin), ("I", &trace.unit), ("A", &trace.a), ("B", &trace.b), ("B1", &trace.aux), ("P1", &trace.p1)] {
        let _ = writeln!(out, "{name} = {p}");
    }
    let _ = writeln!(out, "result = {}", trace.result);
    if let Ok(c) = plane.extract(&frame, &trace.result) {
        let _ = writeln!(out, "coordinate = {c}");
    }
    if let Some(path) = args.svg {
        if let Err(e) = svg::write_svg(field, &trace, path) {
            return Outcome::fail(EXIT_USAGE, out, e);
        }
        let _ = writeln!(out, "svg = {}", path.display());
    }
    Outcome { code: EXIT_OK, stdout: out, stderr: String::new() }
}

/// `verify` over an explicit backend.
pub fn run_verify<F: CliBackend>(field: &F, family: MapFamily, base: &str, samples: SampleSet) -> Outcome {
    let points = match parse_scalar_list(field, base) {
        Ok(p) => p,
        Err(e) => return Outcome::fail(EXIT_USAGE, String::new(), e),
    };
    let Ok(points) = <[F::Elem; 3]>::try_from(points) else {
        return Outcome::fail(EXIT_USAGE, String::new(), "--base needs exactly three points");
    };
    let base = match CrossRatioBase::new(field, family, points) {
        Ok(b) => b,
        Err(e) => return Outcome::fail(EXIT_USAGE, String::new(), e),
    };
    if samples == SampleSet::Exhaustive && field.elements().is_none() {
        return Outcome::fail(EXIT_USAGE, String::new(), format!("--exhaustive needs a finite backend, not {}", field.name()));
    }
    let reports = verify_all(field, &base, samples);
    let mut out = String::new();
    for r in &reports {
        let _ = write!(out, "{r}");
    }
    let ok = reports.iter().all(|r| r.passed());
    let _ = writeln!(out, "{}", if ok { "all identities hold" } else { "verification FAILED" });
    Outcome { code: if ok { EXIT_OK } else { EXIT_FAILED }, stdout: out, stderr: String::new() }
}

/// `desargues` over an explicit backend, with the file already read.
pub fn run_desargues<F: CliBackend>(field: &F, text: &str) -> Outcome {
    let cfg = match parse_desargues_config(field, text) {
        Ok(c) => c,
        Err(e) => return Outcome::fail(EXIT_USAGE, String::new(), e),
    };
    let plane = Plane::new(field.clone());
    let mut out = String::new();
    for h in plane.desargues_hypotheses(&cfg) {
        let _ = writeln!(out, "{:<5} {}", if h.holds { "ok" } else { "FAIL" }, h.name);
    }
    match plane.check_desargues(&cfg) {
        Ok(holds) => {
            let _ = writeln!(out, "AC || A'C': {holds}");
            Outcome { code: if holds { EXIT_OK } else { EXIT_FAILED }, stdout: out, stderr: String::new() }
        }
        Err(e @ DesarguesError::InvalidConfiguration(_)) => Outcome::fail(EXIT_SINGULAR, out, e),
        Err(e) => Outcome::fail(EXIT_FAILED, out, e),
    }
}
