//! Batch table generation: one row per (group, weight), computed in
//! parallel but emitted in family order so output is byte-stable for any
//! thread count (each row's search runs single-threaded).

use clap::{Args, ValueEnum};
use rayon::prelude::*;
use serde::Serialize;
use tindep::group::Group;
use tindep::search::{self, SearchOptions, SearchResult, SearchStatus};

use crate::{effective_threads, format_members, parse_group, CliError, ModeArg, RunOpts};

#[derive(Args)]
pub struct TableArgs {
    /// First cyclic order of the family Z_min ..= Z_max.
    #[arg(long)]
    min: Option<u64>,
    /// Last cyclic order of the family.
    #[arg(long)]
    max: Option<u64>,
    /// Explicit comma-separated group specs (alternative to --min/--max).
    #[arg(long, value_delimiter = ',')]
    groups: Vec<String>,
    /// Comma-separated weights, one table row per weight per group;
    /// required unless --mode sumfree (whose rows always carry t=0).
    #[arg(long = "t", value_delimiter = ',')]
    t_values: Vec<u64>,
    /// Quantity tabulated: strong, weak, or sumfree.
    #[arg(long, value_enum, default_value_t = ModeArg::Strong)]
    mode: ModeArg,
    /// Output format.
    #[arg(long, value_enum, default_value_t = FormatArg::Csv)]
    format: FormatArg,
    /// Append a monotonicity summary over even/odd orders to stderr
    /// (computed over rows with exact status).
    #[arg(long)]
    monotone_report: bool,
    #[command(flatten)]
    run: RunOpts,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FormatArg {
    Csv,
    Json,
}

#[derive(Serialize)]
struct Row {
    n: u64,
    group: String,
    t: u64,
    mode: &'static str,
    value: u64,
    witness: String,
    nodes: u64,
    status: &'static str,
}

pub fn run(args: TableArgs) -> Result<(), CliError> {
    let family = build_family(&args)?;
    let t_values = build_t_values(&args)?;
    let per_row = SearchOptions {
        budget: args.run.budget,
        threads: 1,
        ..SearchOptions::default()
    };
    let jobs: Vec<(&Group, u64)> = family
        .iter()
        .flat_map(|g| t_values.iter().map(move |&t| (g, t)))
        .collect();
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(effective_threads(args.run.threads))
        .build()
        .expect("thread pool");
    let rows: Vec<Row> = pool.install(|| {
        jobs.par_iter()
            .map(|&(g, t)| row_for(g, t, args.mode, &per_row))
            .collect()
    });
    emit(&rows, args.format)?;
    if args.monotone_report {
        monotone_report(&rows, &t_values, args.mode);
    }
    Ok(())
}

fn build_family(args: &TableArgs) -> Result<Vec<Group>, CliError> {
    if !args.groups.is_empty() {
        if args.min.is_some() || args.max.is_some() {
            return Err(CliError::Usage(
                "give either --groups or --min/--max, not both".into(),
            ));
        }
        return args.groups.iter().map(|s| parse_group(s)).collect();
    }
    let (min, max) = match (args.min, args.max) {
        (Some(a), Some(b)) => (a, b),
        _ => {
            return Err(CliError::Usage(
                "a family is required: either --min and --max, or --groups".into(),
            ))
        }
    };
    if min > max {
        return Err(CliError::Usage(format!(
            "empty family: --min {min} exceeds --max {max}"
        )));
    }
    (min..=max).map(|n| parse_group(&n.to_string())).collect()
}

fn build_t_values(args: &TableArgs) -> Result<Vec<u64>, CliError> {
    if args.mode == ModeArg::Sumfree {
        return Ok(vec![0]);
    }
    if args.t_values.is_empty() {
        return Err(CliError::Usage(
            "at least one weight is required: --t 3 or --t 4,5".into(),
        ));
    }
    Ok(args.t_values.clone())
}

fn row_for(group: &Group, t: u64, mode: ModeArg, opts: &SearchOptions) -> Row {
    let result: SearchResult = match mode {
        ModeArg::Strong => search::max_independent(group, t, opts),
        ModeArg::Weak => search::max_weakly_independent(group, t, opts),
        ModeArg::Sumfree => search::max_sum_free(group, opts),
    };
    Row {
        n: group.order(),
        group: group.to_string(),
        t,
        mode: mode.label(),
        value: result.max_size,
        witness: format_members(group, &result.witness),
        nodes: result.nodes,
        status: match result.status {
            SearchStatus::Exact => "exact",
            SearchStatus::BudgetExhausted => "budget_exhausted",
        },
    }
}

fn emit(rows: &[Row], format: FormatArg) -> Result<(), CliError> {
    match format {
        FormatArg::Csv => {
            let mut writer = csv::Writer::from_writer(std::io::stdout());
            for row in rows {
                writer.serialize(row).map_err(csv_write_error)?;
            }
            writer.flush().map_err(io_write_error)?;
        }
        FormatArg::Json => {
            crate::emit_line(serde_json::to_string(rows).expect("rows serialize"))?;
        }
    }
    Ok(())
}

/// A closed pipe downstream (e.g. `tindep table ... | head`) ends the
/// program quietly; any other write failure is a real error.
fn io_write_error(err: std::io::Error) -> CliError {
    if err.kind() == std::io::ErrorKind::BrokenPipe {
        std::process::exit(0);
    }
    CliError::Domain(format!("cannot write to stdout: {err}"))
}

fn csv_write_error(err: csv::Error) -> CliError {
    match err.into_kind() {
        csv::ErrorKind::Io(io_err) => io_write_error(io_err),
        other => CliError::Domain(format!("CSV write failed: {other:?}")),
    }
}

/// Per weight, lists adjacent value drops along the even-order and
/// odd-order subsequences (exact rows only), mirroring the observation
/// that these sequences need not grow with the order.
fn monotone_report(rows: &[Row], t_values: &[u64], mode: ModeArg) {
    for &t in t_values {
        for (parity, name) in [(0, "even"), (1, "odd")] {
            let seq: Vec<&Row> = rows
                .iter()
                .filter(|r| r.t == t && r.n % 2 == parity && r.status == "exact")
                .collect();
            let drops: Vec<String> = seq
                .windows(2)
                .filter(|w| w[1].value < w[0].value)
                .map(|w| {
                    format!(
                        "s({}) = {} > s({}) = {}",
                        w[0].group, w[0].value, w[1].group, w[1].value
                    )
                })
                .collect();
            let summary = if drops.is_empty() {
                "monotone (no violations)".to_string()
            } else {
                format!("{} violation(s): {}", drops.len(), drops.join("; "))
            };
            eprintln!(
                "monotone-report mode={} t={t} {name}-order: {summary}",
                mode.label()
            );
        }
    }
}
