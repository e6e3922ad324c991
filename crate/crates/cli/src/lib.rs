//! Command-line driver: argument parsing, report envelopes and rendering.

mod mesh;
mod text;

use std::ffi::OsString;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use serde::{Deserialize, Serialize};

use npspread_core::spread::{spread_disjoint_primary, spread_two_prime_powers, two_prime_powers_ideal, DEFAULT_MAX_POWER};
use npspread_core::{
    analytic_spread, check_reduction, is_basic, minimal_monomial_reduction, spread_bound, Error, Monomial,
    MonomialIdeal, Polyhedron, PrimaryComponent, Ring,
};

#[derive(Debug, Parser)]
#[command(name = "npspread", version, about = "Newton polyhedra and analytic spread of monomial ideals")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Print a JSON report instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Largest power searched for a reduction witness.
    #[arg(long, global = true, default_value_t = DEFAULT_MAX_POWER)]
    max_power: u64,
    /// Skip the direct polyhedral computation behind closed-form values.
    #[arg(long, global = true)]
    no_crosscheck: bool,
    /// Write a mesh of NP(I) and np(I) in OFF format (three variables only).
    #[arg(long, global = true, value_name = "PATH")]
    obj: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// H- and V-representations of np(I) and NP(I).
    Np(IdealArgs),
    /// Exact analytic spread with the hyperplane and facet bound.
    Spread(IdealArgs),
    /// Hyperplane and facet bound with its certificate.
    Bound(IdealArgs),
    /// Whether the ideal has no proper reduction.
    Basic(IdealArgs),
    /// Whether a candidate sub-ideal is a reduction.
    Reduce {
        #[command(flatten)]
        ideal: IdealArgs,
        /// Generators of the candidate sub-ideal.
        #[arg(long)]
        candidate: String,
    },
    /// Ideal generated by the vertices of np(I).
    Minred(IdealArgs),
    /// Closed-form spreads of intersections of primary ideals.
    #[command(subcommand)]
    Family(Family),
}

#[derive(Debug, Args)]
struct IdealArgs {
    /// Ring variables, comma separated.
    #[arg(long)]
    vars: String,
    /// Ideal generators, comma separated.
    #[arg(long, conflicts_with = "file", required_unless_present = "file")]
    ideal: Option<String>,
    /// File holding the ideal generators.
    #[arg(long)]
    file: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
enum Family {
    /// Intersection of primary ideals over disjoint sets of variables.
    DisjointPrimary {
        /// Ring variables, comma separated.
        #[arg(long)]
        vars: String,
        /// One component as `prime variables: generators`, e.g. `x,y: x^2, y^3`.
        #[arg(long = "component", required = true)]
        components: Vec<String>,
    },
    /// Powers of two primes sharing `t` variables.
    TwoPrimePowers {
        #[arg(long)]
        s: usize,
        #[arg(long)]
        t: usize,
        #[arg(long)]
        r: usize,
        #[arg(long)]
        a: u64,
        #[arg(long)]
        b: u64,
    },
}

/// Top-level shape of every JSON report.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Envelope<R> {
    pub command: String,
    pub ring: Ring,
    /// Minimal generators of the input ideal in ascending order.
    pub input_generators: Vec<Monomial>,
    pub result: R,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NpResult {
    pub polytope: Polyhedron,
    pub polyhedron: Polyhedron,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MinredResult {
    pub ideal: String,
    pub generators: Vec<Monomial>,
}

/// Exit status and captured streams of one invocation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Output {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

#[derive(Debug, thiserror::Error)]
enum CliError {
    #[error(transparent)]
    Core(#[from] Error),
    #[error("{0}")]
    Usage(String),
    #[error("cannot read {path}: {source}")]
    Io { path: String, source: std::io::Error },
    #[error("cannot serialize the report: {0}")]
    Json(#[from] serde_json::Error),
}

impl CliError {
    fn exit_code(&self) -> i32 {
        match self {
            CliError::Core(e) if e.is_internal() => 2,
            CliError::Json(_) => 2,
            _ => 1,
        }
    }
}

/// Runs one command line; `args` includes the program name.
pub fn run<I, T>(args: I) -> Output
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let rendered = e.render().to_string();
            let (stdout, stderr) = if e.use_stderr() {
                (String::new(), rendered)
            } else {
                (rendered, String::new())
            };
            return Output { code, stdout, stderr };
        }
    };
    match execute(&cli) {
        Ok(stdout) => Output {
            code: 0,
            stdout,
            stderr: String::new(),
        },
        Err(e) => Output {
            code: e.exit_code(),
            stdout: String::new(),
            stderr: format!("error: {e}\n"),
        },
    }
}

fn execute(cli: &Cli) -> Result<String, CliError> {
    match &cli.command {
        Command::Np(a) => {
            let i = load(a)?;
            export_mesh(cli, &i)?;
            let result = NpResult {
                polytope: i.newton_polytope()?,
                polyhedron: i.newton_polyhedron()?,
            };
            emit(cli, "np", &i, &result, |r| text::np(i.ring(), r))
        }
        Command::Spread(a) => {
            let i = load(a)?;
            export_mesh(cli, &i)?;
            let report = analytic_spread(&i)?;
            let np = i.newton_polytope()?;
            emit(cli, "spread", &i, &report, |r| text::spread(i.ring(), &np, r))
        }
        Command::Bound(a) => {
            let i = load(a)?;
            export_mesh(cli, &i)?;
            let report = spread_bound(&i)?;
            emit(cli, "bound", &i, &report, |r| text::bound(i.ring(), r))
        }
        Command::Basic(a) => {
            let i = load(a)?;
            export_mesh(cli, &i)?;
            let report = is_basic(&i)?;
            emit(cli, "basic", &i, &report, text::basic)
        }
        Command::Reduce { ideal, candidate } => {
            let i = load(ideal)?;
            export_mesh(cli, &i)?;
            let j = MonomialIdeal::parse(i.ring(), candidate)?;
            let report = check_reduction(&j, &i, cli.max_power)?;
            emit(cli, "reduce", &i, &report, |r| text::reduce(cli.max_power, r))
        }
        Command::Minred(a) => {
            let i = load(a)?;
            export_mesh(cli, &i)?;
            let m = minimal_monomial_reduction(&i)?;
            let result = MinredResult {
                ideal: m.to_string(),
                generators: sorted_generators(&m),
            };
            emit(cli, "minred", &i, &result, text::minred)
        }
        Command::Family(Family::DisjointPrimary { vars, components }) => {
            let ring = Ring::parse(vars)?;
            let parsed = components
                .iter()
                .map(|c| PrimaryComponent::parse(&ring, c))
                .collect::<Result<Vec<_>, _>>()?;
            let report = spread_disjoint_primary(&parsed, !cli.no_crosscheck)?;
            let mut meet = parsed[0].ideal().clone();
            for c in &parsed[1..] {
                meet = meet.intersect(c.ideal())?;
            }
            export_mesh(cli, &meet)?;
            emit(cli, "family disjoint-primary", &meet, &report, text::family)
        }
        Command::Family(Family::TwoPrimePowers { s, t, r, a, b }) => {
            let report = spread_two_prime_powers(*s, *t, *r, *a, *b, !cli.no_crosscheck)?;
            let ideal = two_prime_powers_ideal(*s, *t, *r, *a, *b)?;
            export_mesh(cli, &ideal)?;
            emit(cli, "family two-prime-powers", &ideal, &report, text::family)
        }
    }
}

fn load(a: &IdealArgs) -> Result<MonomialIdeal, CliError> {
    let ring = Ring::parse(&a.vars)?;
    let text = match (&a.ideal, &a.file) {
        (Some(t), _) => t.clone(),
        (None, Some(path)) => std::fs::read_to_string(path).map_err(|source| CliError::Io {
            path: path.display().to_string(),
            source,
        })?,
        (None, None) => return Err(CliError::Usage("one of --ideal or --file is required".into())),
    };
    Ok(MonomialIdeal::parse(&ring, text.trim())?)
}

fn sorted_generators(i: &MonomialIdeal) -> Vec<Monomial> {
    let mut g = i.generators().to_vec();
    g.sort();
    g
}

fn emit<R: Serialize>(
    cli: &Cli,
    command: &str,
    i: &MonomialIdeal,
    result: &R,
    render: impl FnOnce(&R) -> String,
) -> Result<String, CliError> {
    if cli.json {
        let envelope = Envelope {
            command: command.to_string(),
            ring: i.ring().clone(),
            input_generators: sorted_generators(i),
            result,
        };
        let mut out = serde_json::to_string_pretty(&envelope)?;
        out.push('\n');
        Ok(out)
    } else {
        Ok(render(result))
    }
}

fn export_mesh(cli: &Cli, i: &MonomialIdeal) -> Result<(), CliError> {
    let Some(path) = &cli.obj else {
        return Ok(());
    };
    if i.n() != 3 {
        return Err(CliError::Usage(format!(
            "mesh export needs exactly 3 variables, the ring has {}",
            i.n()
        )));
    }
    let off = mesh::off(i)?;
    write_file(path, &off)
}

fn write_file(path: &Path, contents: &str) -> Result<(), CliError> {
    std::fs::write(path, contents).map_err(|source| CliError::Io {
        path: path.display().to_string(),
        source,
    })
}
