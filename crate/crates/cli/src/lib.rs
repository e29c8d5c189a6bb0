//! Command-line front end for `abcensus`.
//!
//! Exit codes: 0 success, 1 failed verification (or an internal error),
//! 2 parse/usage error, 3 domain error, 4 cap exceeded, 5 overflow.

pub mod render;
mod table;

use std::fs;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use abcensus::arith::{euler_phi, jordan_phi};
use abcensus::spectra::{
    average_order, cyclic_total, cyclic_total_rank2, full_spectrum, order_count_moebius,
    subgroup_total_rank2,
};
use abcensus::verify::{run_suite, Suite, SuiteParams};
use abcensus::{BigCount, Count, Exact, GroupSpec, Limits};

pub use render::{render_rational, SpectrumJson, Table, TableJson, TableRow};
pub use table::{parse_range, TableRequest};

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error(transparent)]
    Core(#[from] abcensus::Error),
    #[error("{0}")]
    Usage(String),
    #[error("cannot write output: {0}")]
    Io(#[from] std::io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        use abcensus::Error::*;
        match self {
            CliError::Usage(_) | CliError::Core(Parse { .. }) => 2,
            CliError::Core(Domain(_) | NotADivisor { .. }) => 3,
            CliError::Core(CapExceeded { .. }) => 4,
            CliError::Core(Overflow(_)) => 5,
            CliError::Core(Internal(_)) | CliError::Io(_) => 1,
        }
    }
}

pub type CliResult<T> = Result<T, CliError>;

#[derive(Debug, Parser)]
#[command(name = "abcensus", version, about = "Element orders and subgroup counts of C_n1 x ... x C_nr")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    #[command(flatten)]
    pub caps: CapArgs,

    /// Write output to FILE instead of stdout.
    #[arg(long, global = true, value_name = "FILE")]
    pub out: Option<PathBuf>,

    /// Count with arbitrary-width integers instead of 128-bit ones.
    #[arg(long, global = true)]
    pub bigint: bool,
}

#[derive(Debug, Args)]
pub struct CapArgs {
    /// Largest divisor count of a group exponent for full spectra.
    #[arg(long, global = true, env = "ABCENSUS_SPECTRUM_CAP")]
    pub spectrum_cap: Option<usize>,

    /// Largest group size swept by the brute-force oracle.
    #[arg(long, global = true, env = "ABCENSUS_ORACLE_CAP")]
    pub oracle_cap: Option<u64>,

    /// Largest number of cells in a table.
    #[arg(long, global = true, env = "ABCENSUS_TABLE_CAP")]
    pub table_cap: Option<u128>,
}

impl CapArgs {
    pub fn limits(&self) -> Limits {
        let mut limits = Limits::DEFAULT;
        if let Some(cap) = self.spectrum_cap {
            limits.spectrum = cap;
        }
        if let Some(cap) = self.oracle_cap {
            limits.oracle = cap;
        }
        limits
    }

    pub fn table_cap(&self) -> u128 {
        self.table_cap.unwrap_or(1_000_000)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Quantity {
    /// Number of cyclic subgroups.
    #[value(name = "c")]
    Cyclic,
    /// Number of cyclic subgroups of a rank-2 group, gcd-sum form.
    #[value(name = "c2")]
    CyclicRank2,
    /// Number of all subgroups of a rank-2 group.
    #[value(name = "s")]
    Subgroups,
    /// Mean element order.
    #[value(name = "A")]
    Average,
    /// Number of elements of order delta.
    #[value(name = "o_delta")]
    Elements,
    /// Number of cyclic subgroups of order delta.
    #[value(name = "c_delta")]
    CyclicOfOrder,
    /// Jordan totient of order r.
    #[value(name = "phi_r")]
    Jordan,
}

impl Quantity {
    pub fn name(self) -> &'static str {
        match self {
            Quantity::Cyclic => "c",
            Quantity::CyclicRank2 => "c2",
            Quantity::Subgroups => "s",
            Quantity::Average => "A",
            Quantity::Elements => "o_delta",
            Quantity::CyclicOfOrder => "c_delta",
            Quantity::Jordan => "phi_r",
        }
    }

    fn needs_delta(self) -> bool {
        matches!(self, Quantity::Elements | Quantity::CyclicOfOrder)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print one exact value for a group spec such as 4x2x3.
    Compute {
        spec: String,
        #[arg(value_enum)]
        quantity: Quantity,
        /// Element order, for o_delta and c_delta.
        delta: Option<u64>,
        /// Order of the Jordan totient, for phi_r.
        #[arg(long)]
        r: Option<u32>,
    },
    /// Print o_delta and c_delta for every divisor of the exponent.
    Spectrum {
        spec: String,
        #[arg(long, value_enum, default_value = "csv")]
        format: Format,
    },
    /// Run an identity suite and report failing cases.
    Verify {
        /// forms-agree, oracle, multiplicativity, jordan, von-sterneck,
        /// pgroup-reduction, rank2-subgroups or all.
        suite: String,
        #[arg(long)]
        max_n: Option<u64>,
        #[arg(long)]
        max_r: Option<usize>,
        #[arg(long)]
        max_order: Option<u64>,
        #[arg(long, default_value_t = 42)]
        seed: u64,
    },
    /// Evaluate a quantity over a grid of inclusive ranges such as 1..4.
    Table {
        #[arg(value_enum)]
        quantity: Quantity,
        #[arg(required = true, value_name = "RANGE")]
        ranges: Vec<String>,
        #[arg(long, value_enum, default_value = "csv")]
        format: Format,
        #[arg(long)]
        r: Option<u32>,
        #[arg(long)]
        delta: Option<u64>,
    },
}

fn parse_spec(s: &str) -> CliResult<GroupSpec> {
    Ok(s.parse::<GroupSpec>()?)
}

fn rank2(spec: &GroupSpec) -> CliResult<(u64, u64)> {
    match *spec.orders() {
        [a, b] => Ok((a, b)),
        _ => Err(abcensus::Error::Domain(format!("{spec} is not of rank 2")).into()),
    }
}

/// `c_delta = o_delta / phi(delta)`.
fn cyclic_of_order<C: Exact>(spec: &GroupSpec, delta: u64) -> CliResult<C> {
    let o: C = order_count_moebius(spec, delta)?;
    let (q, r) = o.div_rem(&C::from(euler_phi(delta)));
    if !r.is_zero() {
        return Err(abcensus::Error::Internal(format!("phi({delta}) does not divide o_delta")).into());
    }
    Ok(q)
}

/// Evaluates one quantity as an exact decimal string.
pub fn evaluate<C: Exact>(
    quantity: Quantity,
    spec: &GroupSpec,
    delta: Option<u64>,
    r: Option<u32>,
    limits: &Limits,
) -> CliResult<String> {
    let delta_for = || {
        delta.ok_or_else(|| CliError::Usage(format!("{} needs a delta", quantity.name())))
    };
    Ok(match quantity {
        Quantity::Cyclic => cyclic_total::<C>(spec, limits)?.to_string(),
        Quantity::CyclicRank2 => {
            let (a, b) = rank2(spec)?;
            cyclic_total_rank2::<C>(a, b, limits)?.to_string()
        }
        Quantity::Subgroups => {
            let (a, b) = rank2(spec)?;
            subgroup_total_rank2::<C>(a, b, limits)?.to_string()
        }
        Quantity::Average => render_rational(&average_order::<C>(spec, limits)?),
        Quantity::Elements => order_count_moebius::<C>(spec, delta_for()?)?.to_string(),
        Quantity::CyclicOfOrder => cyclic_of_order::<C>(spec, delta_for()?)?.to_string(),
        Quantity::Jordan => {
            let r = r.ok_or_else(|| CliError::Usage("phi_r needs --r".into()))?;
            if r == 0 {
                return Err(abcensus::Error::Domain("r must be at least 1".into()).into());
            }
            let [n] = *spec.orders() else {
                return Err(abcensus::Error::Domain("phi_r takes a single n".into()).into());
            };
            jordan_phi::<C>(r, n)?.to_string()
        }
    })
}

fn compute(cli: &Cli, spec: &str, quantity: Quantity, delta: Option<u64>, r: Option<u32>) -> CliResult<String> {
    if delta.is_some() != quantity.needs_delta() {
        return Err(CliError::Usage(if delta.is_some() {
            format!("{} takes no delta", quantity.name())
        } else {
            format!("{} needs a delta", quantity.name())
        }));
    }
    if r.is_some() && quantity != Quantity::Jordan {
        return Err(CliError::Usage("--r only applies to phi_r".into()));
    }
    let spec = parse_spec(spec)?;
    let limits = cli.caps.limits();
    let value = if cli.bigint {
        evaluate::<BigCount>(quantity, &spec, delta, r, &limits)?
    } else {
        evaluate::<Count>(quantity, &spec, delta, r, &limits)?
    };
    Ok(format!("{value}\n"))
}

fn spectrum_output<C: Exact>(spec: &GroupSpec, format: Format, limits: &Limits) -> CliResult<String> {
    let s = full_spectrum::<C>(spec, limits)?;
    Ok(match format {
        Format::Csv => Table::from_spectrum(&s)?.to_csv()?,
        Format::Json => SpectrumJson::from_spectrum(&s)?.to_json(),
    })
}

fn verify(cli: &Cli, suite: &str, max_n: Option<u64>, max_r: Option<usize>, max_order: Option<u64>, seed: u64) -> CliResult<(String, u8)> {
    let suites: Vec<Suite> = if suite == "all" {
        Suite::ALL.to_vec()
    } else {
        vec![suite
            .parse()
            .map_err(|_| CliError::Usage(format!("unknown suite {suite:?}")))?]
    };
    let params = SuiteParams {
        max_n,
        max_r,
        max_order,
        seed,
        limits: cli.caps.limits(),
        ..SuiteParams::default()
    };
    let mut out = String::new();
    let (mut checks, mut failures) = (0u64, 0usize);
    for suite in suites {
        let outcome = run_suite(suite, &params);
        for report in &outcome.failures {
            out.push_str(&format!("{report}\n"));
        }
        out.push_str(&format!(
            "suite {}: {} checks, {} failures\n",
            suite,
            outcome.checks,
            outcome.failures.len()
        ));
        checks += outcome.checks;
        failures += outcome.failures.len();
    }
    out.push_str(&format!("summary: {checks} checks, {failures} failures\n"));
    Ok((out, if failures == 0 { 0 } else { 1 }))
}

/// Runs one invocation; returns the exit code on success.
pub fn run(cli: &Cli) -> CliResult<u8> {
    let (text, code) = match &cli.command {
        Command::Compute { spec, quantity, delta, r } => (compute(cli, spec, *quantity, *delta, *r)?, 0),
        Command::Spectrum { spec, format } => {
            let spec = parse_spec(spec)?;
            let limits = cli.caps.limits();
            let text = if cli.bigint {
                spectrum_output::<BigCount>(&spec, *format, &limits)?
            } else {
                spectrum_output::<Count>(&spec, *format, &limits)?
            };
            (text, 0)
        }
        Command::Verify { suite, max_n, max_r, max_order, seed } => {
            verify(cli, suite, *max_n, *max_r, *max_order, *seed)?
        }
        Command::Table { quantity, ranges, format, r, delta } => {
            let request = TableRequest::new(*quantity, ranges, *format, *r, *delta, cli.caps.table_cap())?;
            let table = if cli.bigint {
                request.evaluate::<BigCount>(&cli.caps.limits())?
            } else {
                request.evaluate::<Count>(&cli.caps.limits())?
            };
            let text = match format {
                Format::Csv => table.to_csv()?,
                Format::Json => TableJson::new(quantity.name(), &table).to_json(),
            };
            (text, 0)
        }
    };
    match &cli.out {
        Some(path) => fs::write(path, text)?,
        None => print!("{text}"),
    }
    Ok(code)
}
