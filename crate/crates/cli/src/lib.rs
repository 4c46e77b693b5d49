//! Command-line front end for `torus-bif`.
//!
//! [`run`] takes the argument list and two writers and returns the process exit code, so
//! the binary and the tests share one code path.
//!
//! | code | meaning |
//! |------|---------|
//! | 0 | success |
//! | 1 | internal error |
//! | 2 | usage, problem-file or expression parse error |
//! | 3 | the requested level is not a bifurcation level |
//! | 4 | I/O failure |

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use num_rational::BigRational;
use serde_json::{json, Value};

use torus_bif::bifurcation::{analyze, report, Analysis, BifError};
use torus_bif::euler_ring::syntax::parse_t2;
use torus_bif::problem_file::{parse_problem, write_problem};
use torus_bif::report::{analysis_to_json, element_json, report_to_json};
use torus_bif::spectral::{format_rational, parse_rational, ResonantLevel};
use torus_bif::{example_problem, BifurcationLevel, CriticalPointProblem, ProblemError};

#[derive(Debug, Parser)]
#[command(
    name = "torus-bif",
    version,
    about = "Global bifurcation invariants of periodic solutions in the T²-Euler ring"
)]
pub struct Cli {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    pub json: bool,

    /// Largest k enumerated for levels k/√α.
    #[arg(long, global = true, default_value_t = 5, value_name = "INT")]
    pub max_k: u64,

    /// Problem file (JSON).
    #[arg(long, global = true, value_name = "PATH")]
    pub problem: Option<PathBuf>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// List the bifurcation levels λ² = k²/α with their resonant modes.
    Levels,
    /// Compute the bifurcation index at one level.
    Index(LevelArgs),
    /// Classify the continua and report every enumerated level.
    Classify,
    /// Multiply two Euler-ring elements.
    Star {
        #[arg(allow_hyphen_values = true)]
        lhs: String,
        #[arg(allow_hyphen_values = true)]
        rhs: String,
    },
    /// Write the built-in four-dimensional example problem.
    Example {
        /// Output file; stdout when omitted.
        out: Option<PathBuf>,
    },
}

#[derive(Debug, Args)]
pub struct LevelArgs {
    /// Level k/√α, together with --alpha.
    #[arg(long, requires = "alpha", required_unless_present = "lambda_sq")]
    pub k: Option<u64>,

    /// Positive eigenvalue α, as an integer or "p/q".
    #[arg(long, value_parser = rational_arg, requires = "k", allow_hyphen_values = true)]
    pub alpha: Option<BigRational>,

    /// Level given directly by λ², as an integer or "p/q".
    #[arg(long, value_parser = rational_arg, allow_hyphen_values = true, conflicts_with_all = ["k", "alpha"])]
    pub lambda_sq: Option<BigRational>,
}

fn rational_arg(s: &str) -> Result<BigRational, String> {
    parse_rational(s).ok_or_else(|| format!("{s:?} is not an integer or \"p/q\" rational"))
}

#[derive(Debug)]
enum Failure {
    Internal(String),
    Parse(String),
    Level(String),
    Io(String),
}

impl Failure {
    fn code(&self) -> i32 {
        match self {
            Failure::Internal(_) => 1,
            Failure::Parse(_) => 2,
            Failure::Level(_) => 3,
            Failure::Io(_) => 4,
        }
    }

    fn message(&self) -> &str {
        match self {
            Failure::Internal(m) | Failure::Parse(m) | Failure::Level(m) | Failure::Io(m) => m,
        }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Io(format!("write failed: {e}"))
    }
}

fn level_failure(e: ProblemError) -> Failure {
    Failure::Level(e.to_string())
}

fn bif_failure(e: BifError) -> Failure {
    match e {
        BifError::InvalidLevel(_) => Failure::Level(e.to_string()),
        BifError::Problem(p) => level_failure(p),
        other => Failure::Internal(other.to_string()),
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                let _ = write!(err, "{text}");
                2
            } else {
                match write!(out, "{text}") {
                    Ok(()) => 0,
                    Err(_) => 4,
                }
            };
        }
    };
    match execute(&cli, out, err) {
        Ok(()) => 0,
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message());
            f.code()
        }
    }
}

fn execute(cli: &Cli, out: &mut dyn Write, err: &mut dyn Write) -> Result<(), Failure> {
    match &cli.command {
        Command::Levels => cmd_levels(&load(cli)?, cli, out, err),
        Command::Index(args) => cmd_index(&load(cli)?, args, cli.json, out),
        Command::Classify => cmd_classify(&load(cli)?, cli, out),
        Command::Star { lhs, rhs } => cmd_star(lhs, rhs, cli.json, out),
        Command::Example { out: path } => cmd_example(path.as_deref(), out),
    }
}

fn load(cli: &Cli) -> Result<CriticalPointProblem, Failure> {
    let path = cli
        .problem
        .as_ref()
        .ok_or_else(|| Failure::Parse("this command needs --problem <PATH>".into()))?;
    let text = std::fs::read_to_string(path)
        .map_err(|e| Failure::Io(format!("cannot read {}: {e}", path.display())))?;
    parse_problem(&text).map_err(|e| Failure::Parse(format!("{}: {e}", path.display())))
}

fn print_json(out: &mut dyn Write, v: &Value) -> Result<(), Failure> {
    let text = serde_json::to_string_pretty(v).map_err(|e| Failure::Internal(e.to_string()))?;
    writeln!(out, "{text}")?;
    Ok(())
}

fn level_json(l: &ResonantLevel) -> Value {
    json!({
        "lambda_sq": format_rational(l.level.lambda_sq()),
        "k": l.level.k(),
        "alpha": format_rational(l.level.alpha()),
        "resonances": l.resonances.iter().map(|r| json!({
            "n": r.n,
            "alpha": format_rational(&r.alpha),
        })).collect::<Vec<_>>(),
    })
}

fn cmd_levels(
    problem: &CriticalPointProblem,
    cli: &Cli,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> Result<(), Failure> {
    let levels = problem.lambda_set(cli.max_k);
    if levels.is_empty() {
        let reason = if cli.max_k == 0 {
            "--max-k is 0"
        } else {
            "U''(u0) has no positive eigenvalue"
        };
        writeln!(err, "warning: the level set is empty: {reason}")?;
    }
    if cli.json {
        return print_json(out, &Value::Array(levels.iter().map(level_json).collect()));
    }
    for l in &levels {
        let pairs: Vec<String> = l
            .resonances
            .iter()
            .map(|r| format!("n={} alpha={}", r.n, format_rational(&r.alpha)))
            .collect();
        writeln!(
            out,
            "lambda_sq={} resonances: {}",
            format_rational(l.level.lambda_sq()),
            pairs.join("; ")
        )?;
    }
    Ok(())
}

fn resolve_level(
    problem: &CriticalPointProblem,
    args: &LevelArgs,
) -> Result<BifurcationLevel, Failure> {
    match (&args.k, &args.alpha, &args.lambda_sq) {
        (Some(k), Some(alpha), None) => problem.level(*k, alpha).map_err(level_failure),
        (None, None, Some(lsq)) => problem.level_from_lambda_sq(lsq).map_err(level_failure),
        _ => Err(Failure::Parse(
            "give either --k with --alpha, or --lambda-sq".into(),
        )),
    }
}

fn cmd_index(
    problem: &CriticalPointProblem,
    args: &LevelArgs,
    json: bool,
    out: &mut dyn Write,
) -> Result<(), Failure> {
    let level = resolve_level(problem, args)?;
    let r = report(problem, &level).map_err(bif_failure)?;
    if json {
        writeln!(out, "{}", report_to_json(&r))?;
    } else {
        writeln!(out, "{}", r.index)?;
        writeln!(out, "certificate: {}", r.certificate.as_str())?;
    }
    Ok(())
}

fn write_analysis(a: &Analysis, out: &mut dyn Write) -> Result<(), Failure> {
    writeln!(out, "classification: {}", a.classification.as_str())?;
    for (r, w) in a.reports.iter().zip(&a.zero_sum_witnesses) {
        let witness = match w {
            None => "none".to_string(),
            Some(levels) => {
                let lsq: Vec<String> = levels
                    .iter()
                    .map(|l| format_rational(l.lambda_sq()))
                    .collect();
                format!("{{{}}}", lsq.join(", "))
            }
        };
        writeln!(
            out,
            "lambda_sq={} (k={}, alpha={}): {} | nontrivial={} certificate={} classification={} zero_sum_subset={}",
            format_rational(r.level.lambda_sq()),
            r.level.k(),
            format_rational(r.level.alpha()),
            r.index,
            r.nontrivial,
            r.certificate.as_str(),
            r.classification.as_str(),
            witness
        )?;
    }
    Ok(())
}

fn cmd_classify(
    problem: &CriticalPointProblem,
    cli: &Cli,
    out: &mut dyn Write,
) -> Result<(), Failure> {
    let a = analyze(problem, cli.max_k).map_err(bif_failure)?;
    if cli.json {
        writeln!(out, "{}", analysis_to_json(&a))?;
    } else {
        write_analysis(&a, out)?;
    }
    Ok(())
}

fn cmd_star(lhs: &str, rhs: &str, json: bool, out: &mut dyn Write) -> Result<(), Failure> {
    let parse = |label: &str, s: &str| {
        parse_t2(s).map_err(|e| Failure::Parse(format!("{label}: {}", e.annotate(s))))
    };
    let product = parse("lhs", lhs)?.star(&parse("rhs", rhs)?);
    if json {
        let terms = serde_json::to_value(element_json(&product))
            .map_err(|e| Failure::Internal(e.to_string()))?;
        print_json(out, &json!({ "product": terms }))
    } else {
        writeln!(out, "{product}")?;
        Ok(())
    }
}

fn cmd_example(path: Option<&Path>, out: &mut dyn Write) -> Result<(), Failure> {
    let text = write_problem(&example_problem());
    match path {
        None => out.write_all(text.as_bytes())?,
        Some(p) => std::fs::write(p, text)
            .map_err(|e| Failure::Io(format!("cannot write {}: {e}", p.display())))?,
    }
    Ok(())
}
