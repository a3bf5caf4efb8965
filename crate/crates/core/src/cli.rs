//! Command-line driver.
//!
//! Exit status: 0 success, 1 singular matrix, 2 input or usage error, 3
//! verification failure or internal breakdown.

use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_rational::BigRational;
use rand::{rngs::StdRng, Rng, SeedableRng};

use crate::band::{CyclicNonadiagonal, MIN_STRUCTURED_ORDER};
use crate::dense::DenseMatrix;
use crate::error::Error;
use crate::factor::factorize;
use crate::field::Field;
use crate::inverse::invert;
use crate::io;
use crate::oracle::{bareiss_det, gauss_jordan_inverse};
use crate::scalar::Scalar;

pub const EXIT_OK: i32 = 0;
pub const EXIT_SINGULAR: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_INTERNAL: i32 = 3;

#[derive(Parser, Debug)]
#[command(name = "nonadiag", version, about = "Determinant and inverse of cyclic nonadiagonal matrices")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print the determinant.
    Det(SolveArgs),
    /// Write the inverse.
    Inv(SolveArgs),
    /// Write the inverse of K*R, where R reverses the column order.
    AntiInv(SolveArgs),
    /// Write a random band file (used by the test suite).
    #[command(hide = true)]
    GenRandom(GenArgs),
}

#[derive(Args, Debug)]
struct SolveArgs {
    input: PathBuf,
    #[arg(long, value_enum, default_value_t = Mode::Exact)]
    mode: Mode,
    /// Check K * K^-1 = I before writing (exact and oracle modes).
    #[arg(long, overrides_with = "no_verify")]
    verify: bool,
    #[arg(long)]
    no_verify: bool,
    #[arg(long)]
    output: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
}

#[derive(Args, Debug)]
struct GenArgs {
    #[arg(long)]
    n: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Entries are drawn uniformly from [-range, range].
    #[arg(long, default_value_t = 5)]
    range: i64,
    /// Redraw zero entries.
    #[arg(long)]
    nonzero: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Mode {
    Exact,
    Float,
    Oracle,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Task {
    Det,
    Inv,
    AntiInv,
}

/// A validated invocation.
#[derive(Clone, Debug)]
pub struct RunConfig {
    pub task: Task,
    pub input: PathBuf,
    pub output: Option<PathBuf>,
    pub mode: Mode,
    pub verify: bool,
    pub format: Format,
}

impl RunConfig {
    fn new(task: Task, a: SolveArgs) -> Result<Self, String> {
        if task == Task::AntiInv && a.mode == Mode::Float {
            return Err("anti-inv requires --mode exact or --mode oracle".into());
        }
        Ok(RunConfig {
            task,
            input: a.input,
            output: a.output,
            mode: a.mode,
            verify: a.mode != Mode::Float && !a.no_verify,
            format: a.format,
        })
    }
}

struct Outcome {
    determinant: String,
    inverse: Option<DenseMatrix<String>>,
    substitutions: usize,
    verified: bool,
}

/// Runs the command line `args` (program name first) and returns the exit
/// status.
pub fn run<I, S>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            let text = e.render().to_string();
            if e.use_stderr() {
                let _ = write!(err, "{text}");
            } else {
                let _ = write!(out, "{text}");
            }
            return code;
        }
    };
    let (task, args) = match cli.command {
        Command::Det(a) => (Task::Det, a),
        Command::Inv(a) => (Task::Inv, a),
        Command::AntiInv(a) => (Task::AntiInv, a),
        Command::GenRandom(g) => return gen_random(&g, out, err),
    };
    let config = match RunConfig::new(task, args) {
        Ok(c) => c,
        Err(msg) => {
            let _ = writeln!(err, "error: {msg}");
            return EXIT_INPUT;
        }
    };
    execute(&config, out, err)
}

/// Runs a validated configuration.
pub fn execute(config: &RunConfig, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let content = match fs::read_to_string(&config.input) {
        Ok(c) => c,
        Err(e) => {
            let _ = writeln!(err, "error: cannot read {}: {e}", config.input.display());
            return EXIT_INPUT;
        }
    };
    let m = match io::parse(&content) {
        Ok(m) => m,
        Err(e) => {
            let _ = writeln!(err, "error: {}: {e}", config.input.display());
            return EXIT_INPUT;
        }
    };
    let start = Instant::now();
    let outcome = match config.mode {
        Mode::Exact if m.order() >= MIN_STRUCTURED_ORDER => structured::<Scalar>(config, &m),
        Mode::Float if m.order() >= MIN_STRUCTURED_ORDER => structured::<f64>(config, &m),
        Mode::Float => dense::<f64>(config, &m),
        Mode::Exact | Mode::Oracle => dense::<BigRational>(config, &m),
    };
    let elapsed = start.elapsed();
    let outcome = match outcome {
        Ok(o) => o,
        Err(Error::SingularMatrix) => {
            let _ = writeln!(err, "singular matrix");
            return EXIT_SINGULAR;
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            return EXIT_INTERNAL;
        }
    };
    let _ = writeln!(
        err,
        "n={} mode={} det={} substitutions={} verified={} elapsed={:.3?}",
        m.order(),
        format!("{:?}", config.mode).to_lowercase(),
        outcome.determinant,
        outcome.substitutions,
        if outcome.verified { "yes" } else { "no" },
        elapsed
    );

    let text = match &outcome.inverse {
        None => format!("{}\n", outcome.determinant),
        Some(x) => match config.format {
            Format::Json => io::dense_json(x),
            Format::Csv => io::dense_csv(x),
        },
    };
    let written = match &config.output {
        Some(path) => fs::write(path, text.as_bytes()).map_err(|e| format!("{}: {e}", path.display())),
        None => out.write_all(text.as_bytes()).map_err(|e| e.to_string()),
    };
    match written {
        Ok(()) => EXIT_OK,
        Err(e) => {
            let _ = writeln!(err, "error: cannot write output: {e}");
            EXIT_INPUT
        }
    }
}

trait Render {
    fn render(&self) -> String;
}

impl Render for BigRational {
    fn render(&self) -> String {
        io::render_rational(self)
    }
}

impl Render for f64 {
    fn render(&self) -> String {
        io::render_float(self)
    }
}

fn structured<F>(config: &RunConfig, m: &CyclicNonadiagonal<BigRational>) -> Result<Outcome, Error>
where
    F: Field,
    F::Value: Render,
{
    let m = m.map(F::from_rational);
    if config.task == Task::Det {
        let lu = factorize(&m)?;
        return Ok(Outcome {
            determinant: lu.determinant()?.render(),
            inverse: None,
            substitutions: lu.substitutions().len(),
            verified: false,
        });
    }
    let r = invert(&m, config.verify)?;
    let inverse = if config.task == Task::AntiInv {
        r.inverse.reverse_rows()
    } else {
        r.inverse
    };
    Ok(Outcome {
        determinant: r.determinant.render(),
        inverse: Some(inverse.map(Render::render)),
        substitutions: r.substitutions,
        verified: r.verified,
    })
}

fn dense<F: Field + Render>(config: &RunConfig, m: &CyclicNonadiagonal<BigRational>) -> Result<Outcome, Error> {
    let x = m.to_dense().map(F::from_rational);
    if config.task == Task::Det {
        return Ok(Outcome {
            determinant: bareiss_det(&x).render(),
            inverse: None,
            substitutions: 0,
            verified: false,
        });
    }
    let r = gauss_jordan_inverse(&x);
    let inverse = r.inverse.ok_or(Error::SingularMatrix)?;
    if config.verify {
        if let Some((row, col)) = x.mul(&inverse)?.first_non_identity() {
            return Err(Error::VerificationFailed { row, col });
        }
    }
    let inverse = if config.task == Task::AntiInv {
        inverse.reverse_rows()
    } else {
        inverse
    };
    Ok(Outcome {
        determinant: r.determinant.render(),
        inverse: Some(inverse.map(Render::render)),
        substitutions: 0,
        verified: config.verify,
    })
}

fn gen_random(g: &GenArgs, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let mut rng = StdRng::seed_from_u64(g.seed);
    let range = g.range.abs().max(1);
    let m = CyclicNonadiagonal::from_fn(g.n, |_, _| loop {
        let v = rng.gen_range(-range..=range);
        if v != 0 || !g.nonzero {
            break BigRational::from_integer(v.into());
        }
    });
    match m {
        Ok(m) => match out.write_all(io::serialize(&m).as_bytes()) {
            Ok(()) => EXIT_OK,
            Err(e) => {
                let _ = writeln!(err, "error: {e}");
                EXIT_INPUT
            }
        },
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_INPUT
        }
    }
}
