//! `tindep` — independence numbers, exact maximum-set search, certified
//! constructions, and bound reports for subsets of finite abelian groups.
//!
//! Exit codes: 0 success; 1 domain error (well-formed arguments naming an
//! invalid mathematical object); 2 search budget exhausted; 3 usage error.

mod table;
mod verify;

use std::fmt;
use std::io::{self, Write};
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand, ValueEnum};
use tindep::constructions::{self, Certificate};
use tindep::formulas;
use tindep::group::Group;
use tindep::independence::{self, Mode, Subset};
use tindep::search::{self, SearchOptions, SearchResult, SearchStatus, DEFAULT_BUDGET};

#[derive(Parser)]
#[command(
    name = "tindep",
    version,
    about = "Independence numbers and maximum independent, weakly independent, \
             and sum-free sets in finite abelian groups"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check a set at one weight and print a JSON report.
    Check {
        #[command(flatten)]
        target: SetTarget,
        /// Weight t.
        #[arg(long)]
        t: u64,
        /// Coefficient regime: any integers (strong) or only ±1 (weak).
        #[arg(long, value_enum, default_value_t = CheckMode::Strong)]
        mode: CheckMode,
    },
    /// Print the independence number of a set.
    Ind {
        #[command(flatten)]
        target: SetTarget,
    },
    /// Print the weak independence number of a set ("inf" when infinite).
    Wind {
        #[command(flatten)]
        target: SetTarget,
    },
    /// Print the maximum size of a t-independent set, by exact search.
    Smax {
        #[command(flatten)]
        query: MaxQuery,
    },
    /// Print the maximum size of a weakly t-independent set, by exact search.
    Wmax {
        #[command(flatten)]
        query: MaxQuery,
    },
    /// Print the maximum size of a sum-free set, by exact search.
    Sfmax {
        /// Group spec: invariant factors joined by 'x', e.g. "30" or "2x4x8".
        #[arg(long)]
        group: String,
        #[command(flatten)]
        run: RunOpts,
    },
    /// Build a certified set by a named construction and print its members.
    Construct {
        /// Group spec: invariant factors joined by 'x', e.g. "30" or "2x4x8".
        #[arg(long)]
        group: String,
        /// Construction to run.
        #[arg(long, value_enum)]
        method: MethodArg,
        /// Weight t (required by cyclic, greedy, and greedy-weak).
        #[arg(long)]
        t: Option<u64>,
    },
    /// Print the certified lower/upper bound report for one group as JSON.
    Bounds {
        /// Group spec: invariant factors joined by 'x', e.g. "30" or "2x4x8".
        #[arg(long)]
        group: String,
        /// Weight t (required for strong and weak modes).
        #[arg(long)]
        t: Option<u64>,
        /// Quantity bounded: strong, weak, or sumfree.
        #[arg(long, value_enum, default_value_t = ModeArg::Strong)]
        mode: ModeArg,
    },
    /// Emit a CSV or JSON table of maximum-set sizes over a group family.
    Table(table::TableArgs),
    /// Sweep the group catalog comparing formulas, search, constructions,
    /// and bounds; nonzero exit on the first mismatch.
    Verify(verify::VerifyArgs),
}

#[derive(Args)]
struct SetTarget {
    /// Group spec: invariant factors joined by 'x', e.g. "30" or "2x4x8".
    #[arg(long)]
    group: String,
    /// Set members: coordinates comma-joined within an element, elements
    /// semicolon-joined; rank-1 groups also accept commas between members.
    /// Examples: "1,2,4,8" (rank 1), "0,1;1,3;1,5" (rank 2).
    #[arg(long)]
    set: String,
}

#[derive(Args)]
struct MaxQuery {
    /// Group spec: invariant factors joined by 'x', e.g. "30" or "2x4x8".
    #[arg(long)]
    group: String,
    /// Weight t.
    #[arg(long)]
    t: u64,
    #[command(flatten)]
    run: RunOpts,
}

#[derive(Args, Clone)]
struct RunOpts {
    /// Feasibility-test budget per search.
    #[arg(long, env = "TINDEP_BUDGET", default_value_t = DEFAULT_BUDGET)]
    budget: u64,
    /// Worker threads; 0 means all cores. Results never depend on this.
    #[arg(long, default_value_t = 0)]
    threads: usize,
}

impl RunOpts {
    fn options(&self) -> SearchOptions {
        SearchOptions {
            budget: self.budget,
            threads: effective_threads(self.threads),
            ..SearchOptions::default()
        }
    }
}

fn effective_threads(requested: usize) -> usize {
    if requested == 0 {
        std::thread::available_parallelism().map_or(1, |p| p.get())
    } else {
        requested
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum CheckMode {
    Strong,
    Weak,
}

impl From<CheckMode> for Mode {
    fn from(m: CheckMode) -> Mode {
        match m {
            CheckMode::Strong => Mode::Strong,
            CheckMode::Weak => Mode::Weak,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ModeArg {
    Strong,
    Weak,
    Sumfree,
}

impl ModeArg {
    pub fn label(self) -> &'static str {
        match self {
            ModeArg::Strong => "strong",
            ModeArg::Weak => "weak",
            ModeArg::Sumfree => "sumfree",
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum MethodArg {
    /// Half of the elements whose doubling is not zero.
    Two,
    /// Fiber construction at weight three.
    Three,
    /// Cyclic difference construction (rank-1 groups).
    Cyclic,
    /// Greedy signed-sum avoidance.
    Greedy,
    /// Greedy ±1-sum avoidance.
    GreedyWeak,
}

/// Failures carrying their process exit code.
#[derive(Debug)]
pub enum CliError {
    /// Valid syntax naming an invalid mathematical object (exit 1).
    Domain(String),
    /// A search ran out of budget before finishing (exit 2).
    Budget(String),
    /// Structurally invalid invocation (exit 3).
    Usage(String),
}

impl CliError {
    fn code(&self) -> u8 {
        match self {
            CliError::Domain(_) => 1,
            CliError::Budget(_) => 2,
            CliError::Usage(_) => 3,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Domain(msg) | CliError::Budget(msg) | CliError::Usage(msg) => {
                f.write_str(msg)
            }
        }
    }
}

impl From<tindep::Error> for CliError {
    fn from(err: tindep::Error) -> CliError {
        CliError::Domain(err.to_string())
    }
}

/// Writes one line to stdout. A pipe closed downstream ends the process
/// quietly with success, the conventional behavior for filters.
pub fn emit_line(text: impl fmt::Display) -> Result<(), CliError> {
    let mut out = io::stdout().lock();
    match writeln!(out, "{text}").and_then(|()| out.flush()) {
        Ok(()) => Ok(()),
        Err(e) if e.kind() == io::ErrorKind::BrokenPipe => std::process::exit(0),
        Err(e) => Err(CliError::Domain(format!("cannot write to stdout: {e}"))),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) => {
            print!("{e}");
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            eprint!("{e}");
            return ExitCode::from(3);
        }
    };
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(err.code())
        }
    }
}

fn run(command: Command) -> Result<(), CliError> {
    match command {
        Command::Check { target, t, mode } => {
            let set = target.parse()?;
            let report = independence::check(&set, t, mode.into());
            emit_line(serde_json::to_string(&report).expect("report serializes"))
        }
        Command::Ind { target } => {
            let set = target.parse()?;
            emit_line(independence::independence_number(&set)?)
        }
        Command::Wind { target } => {
            let set = target.parse()?;
            emit_line(independence::weak_independence_number(&set)?)
        }
        Command::Smax { query } => run_max(query, ModeArg::Strong),
        Command::Wmax { query } => run_max(query, ModeArg::Weak),
        Command::Sfmax { group, run } => {
            let group = parse_group(&group)?;
            finish_search(search::max_sum_free(&group, &run.options()))
        }
        Command::Construct { group, method, t } => run_construct(&group, method, t),
        Command::Bounds { group, t, mode } => {
            let group = parse_group(&group)?;
            let report = match mode {
                ModeArg::Strong => formulas::s_bounds(&group, required_t(t)?),
                ModeArg::Weak => formulas::w_bounds(&group, required_t(t)?),
                ModeArg::Sumfree => formulas::sf_bounds(&group),
            };
            emit_line(serde_json::to_string(&report).expect("report serializes"))
        }
        Command::Table(args) => table::run(args),
        Command::Verify(args) => verify::run(args),
    }
}

fn run_max(query: MaxQuery, mode: ModeArg) -> Result<(), CliError> {
    let group = parse_group(&query.group)?;
    let opts = query.run.options();
    let result = match mode {
        ModeArg::Strong => search::max_independent(&group, query.t, &opts),
        ModeArg::Weak => search::max_weakly_independent(&group, query.t, &opts),
        ModeArg::Sumfree => unreachable!("sum-free has its own subcommand"),
    };
    finish_search(result)
}

/// Prints the size, then converts a truncated run into the budget error.
fn finish_search(result: SearchResult) -> Result<(), CliError> {
    emit_line(result.max_size)?;
    match result.status {
        SearchStatus::Exact => Ok(()),
        SearchStatus::BudgetExhausted => Err(CliError::Budget(format!(
            "budget exhausted after {} feasibility tests; {} is only a lower bound",
            result.nodes, result.max_size
        ))),
    }
}

fn run_construct(group: &str, method: MethodArg, t: Option<u64>) -> Result<(), CliError> {
    let group = parse_group(group)?;
    let cert: Certificate = match method {
        MethodArg::Two => constructions::two_independent(&group),
        MethodArg::Three => constructions::three_independent(&group),
        MethodArg::Cyclic => {
            if group.rank() != 1 {
                return Err(CliError::Domain(format!(
                    "the cyclic construction needs a rank-1 group, got {group}"
                )));
            }
            constructions::cyclic_bh(group.order(), required_t(t)?)?
        }
        MethodArg::Greedy => constructions::greedy_independent(&group, required_t(t)?)?,
        MethodArg::GreedyWeak => constructions::greedy_weakly_independent(&group, required_t(t)?)?,
    };
    if !cert.verified {
        return Err(CliError::Domain(format!(
            "construction produced an uncertified set of size {} (expected {})",
            cert.size(),
            cert.expected_size
        )));
    }
    emit_line(format_members(&group, &cert.members))
}

fn required_t(t: Option<u64>) -> Result<u64, CliError> {
    t.ok_or_else(|| CliError::Usage("--t is required here".into()))
}

/// Space-joined members, each rendered as comma-joined coordinates.
pub fn format_members(group: &Group, members: &[u64]) -> String {
    members
        .iter()
        .map(|&i| {
            group
                .element(i)
                .expect("members are valid indices")
                .to_string()
        })
        .collect::<Vec<_>>()
        .join(" ")
}

pub fn parse_group(spec: &str) -> Result<Group, CliError> {
    Group::parse(spec).map_err(CliError::from)
}

impl SetTarget {
    fn parse(&self) -> Result<Subset, CliError> {
        let group = parse_group(&self.group)?;
        let members = parse_members(&group, &self.set)?;
        Subset::new(group, members).map_err(CliError::from)
    }
}

/// Members from the `--set` syntax: semicolons between elements, commas
/// between coordinates; on rank-1 groups commas alone list members.
fn parse_members(group: &Group, spec: &str) -> Result<Vec<u64>, CliError> {
    let element_specs: Vec<&str> = if spec.contains(';') {
        spec.split(';').collect()
    } else if group.rank() == 1 {
        spec.split(',').collect()
    } else {
        vec![spec]
    };
    let mut members = Vec::with_capacity(element_specs.len());
    for es in element_specs {
        let coords = es
            .split(',')
            .map(|c| {
                c.trim()
                    .parse::<u64>()
                    .map_err(|_| CliError::Usage(format!("invalid coordinate {c:?} in --set")))
            })
            .collect::<Result<Vec<u64>, CliError>>()?;
        let element = group.element_from_coords(&coords)?;
        members.push(group.index_of(&element)?);
    }
    Ok(members)
}
