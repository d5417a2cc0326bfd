//! Catalog sweep: checks every closed-form value against exact search,
//! certifies every construction, and validates every bound sandwich, over
//! all abelian groups up to a given order. Any mismatch fails the run with
//! the first counterexample; searches that outgrow the budget leave the
//! run undecided instead.

use clap::Args;
use rayon::prelude::*;
use tindep::group::Group;
use tindep::search::{self, SearchOptions, SearchStatus};
use tindep::{catalog, constructions, formulas};

use crate::{effective_threads, CliError, RunOpts};

#[derive(Args)]
pub struct VerifyArgs {
    /// Largest group order swept.
    #[arg(long, default_value_t = 24)]
    max_order: u64,
    /// Largest weight checked.
    #[arg(long, default_value_t = 4)]
    max_t: u64,
    #[command(flatten)]
    run: RunOpts,
}

#[derive(Default)]
struct Outcome {
    formula_checks: u64,
    sandwich_checks: u64,
    certificate_checks: u64,
    failures: Vec<String>,
    undecided: Vec<String>,
}

impl Outcome {
    fn merge(&mut self, other: Outcome) {
        self.formula_checks += other.formula_checks;
        self.sandwich_checks += other.sandwich_checks;
        self.certificate_checks += other.certificate_checks;
        self.failures.extend(other.failures);
        self.undecided.extend(other.undecided);
    }
}

pub fn run(args: VerifyArgs) -> Result<(), CliError> {
    if args.max_order < 2 || args.max_t < 2 {
        return Err(CliError::Usage(
            "--max-order and --max-t must both be at least 2".into(),
        ));
    }
    let groups = catalog::abelian_groups_up_to(args.max_order)?;
    let per_search = SearchOptions {
        budget: args.run.budget,
        threads: 1,
        ..SearchOptions::default()
    };
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(effective_threads(args.run.threads))
        .build()
        .expect("thread pool");
    let outcomes: Vec<Outcome> = pool.install(|| {
        groups
            .par_iter()
            .map(|g| sweep(g, args.max_t, &per_search))
            .collect()
    });
    let mut total = Outcome::default();
    for o in outcomes {
        total.merge(o);
    }
    crate::emit_line(format_args!(
        "verify: {} groups of order 2..={}, weights up to {}",
        groups.len(),
        args.max_order,
        args.max_t
    ))?;
    crate::emit_line(format_args!(
        "verify: formula values: {} checked",
        total.formula_checks
    ))?;
    crate::emit_line(format_args!(
        "verify: bound sandwiches: {} checked",
        total.sandwich_checks
    ))?;
    crate::emit_line(format_args!(
        "verify: certificates: {} checked",
        total.certificate_checks
    ))?;
    if let Some(first) = total.failures.first() {
        crate::emit_line(format_args!(
            "verify: FAIL — {} mismatch(es); first counterexample: {first}",
            total.failures.len()
        ))?;
        return Err(CliError::Domain(format!("verification failed: {first}")));
    }
    if let Some(first) = total.undecided.first() {
        crate::emit_line(format_args!(
            "verify: UNDECIDED — {} search(es) hit the budget; first: {first}",
            total.undecided.len()
        ))?;
        return Err(CliError::Budget(format!(
            "verification incomplete: {first}"
        )));
    }
    crate::emit_line("verify: PASS")
}

fn sweep(g: &Group, max_t: u64, opts: &SearchOptions) -> Outcome {
    let mut out = Outcome::default();
    for t in 2..=max_t {
        if let Some(found) = exact_size(g, t, true, opts, &mut out) {
            if let Some(want) = formulas::s_exact(g, t) {
                out.formula_checks += 1;
                if want != found {
                    out.failures.push(format!(
                        "{g}: closed form gives {want} at weight {t}, search finds {found}"
                    ));
                }
            }
            let sb = formulas::s_bounds(g, t);
            out.sandwich_checks += 1;
            if found < sb.lower || found > sb.upper {
                out.failures.push(format!(
                    "{g}: weight-{t} value {found} outside bounds [{}, {}]",
                    sb.lower, sb.upper
                ));
            }
        }
        if let Some(found) = exact_size(g, t, false, opts, &mut out) {
            if let Some(want) = formulas::w_exact(g, t) {
                out.formula_checks += 1;
                if want != found {
                    out.failures.push(format!(
                        "{g}: weak closed form gives {want} at weight {t}, search finds {found}"
                    ));
                }
            }
            let wb = formulas::w_bounds(g, t);
            out.sandwich_checks += 1;
            if found < wb.lower || found > wb.upper {
                out.failures.push(format!(
                    "{g}: weak weight-{t} value {found} outside bounds [{}, {}]",
                    wb.lower, wb.upper
                ));
            }
        }
    }
    let sf = search::max_sum_free(g, opts);
    if sf.status == SearchStatus::Exact {
        let fb = formulas::sf_bounds(g);
        out.sandwich_checks += 1;
        if sf.max_size < fb.lower || sf.max_size > fb.upper {
            out.failures.push(format!(
                "{g}: sum-free value {} outside bounds [{}, {}]",
                sf.max_size, fb.lower, fb.upper
            ));
        }
    } else {
        out.undecided
            .push(format!("{g}: sum-free search hit the budget"));
    }
    certify(
        g,
        constructions::two_independent(g),
        "pair classes",
        &mut out,
    );
    certify(
        g,
        constructions::three_independent(g),
        "weight-3 fibers",
        &mut out,
    );
    for t in 1..=max_t {
        match constructions::greedy_independent(g, t) {
            Ok(cert) => certify(g, cert, "greedy", &mut out),
            Err(e) => out.failures.push(format!("{g}: greedy at weight {t}: {e}")),
        }
        match constructions::greedy_weakly_independent(g, t) {
            Ok(cert) => certify(g, cert, "weak greedy", &mut out),
            Err(e) => out
                .failures
                .push(format!("{g}: weak greedy at weight {t}: {e}")),
        }
    }
    out
}

/// Runs one exact search; records budget exhaustion as undecided.
fn exact_size(
    g: &Group,
    t: u64,
    strong: bool,
    opts: &SearchOptions,
    out: &mut Outcome,
) -> Option<u64> {
    let result = if strong {
        search::max_independent(g, t, opts)
    } else {
        search::max_weakly_independent(g, t, opts)
    };
    if result.status == SearchStatus::Exact {
        Some(result.max_size)
    } else {
        out.undecided.push(format!(
            "{g}: {} weight-{t} search hit the budget",
            if strong { "strong" } else { "weak" }
        ));
        None
    }
}

fn certify(g: &Group, cert: constructions::Certificate, label: &str, out: &mut Outcome) {
    out.certificate_checks += 1;
    if !cert.verified {
        out.failures.push(format!(
            "{g}: {label} construction yielded an uncertified set of size {} (expected {})",
            cert.size(),
            cert.expected_size
        ));
    }
}
