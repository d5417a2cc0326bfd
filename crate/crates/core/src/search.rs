//! Exhaustive maximization of t-independent, weakly t-independent, and
//! sum-free subsets by depth-first branch and bound.
//!
//! Candidates are scanned in ascending index order and chains only extend
//! upward, so subsets are enumerated in lexicographic preorder. Three rules
//! keep the tree small without affecting the result:
//!
//! - **counting cap**: no chain is grown past the combinatorial size cap for
//!   the mode (distinct low-weight sums force `m` to be small relative to
//!   the group order), and a subtree whose best possible size cannot beat
//!   the recorded best is abandoned;
//! - **negation pruning** (optional): a root whose negation has a smaller
//!   index is skipped, because negating a witness element-wise yields an
//!   equally large witness that sorts earlier;
//! - **tie rule**: on equality with the recorded best size, a subtree is
//!   abandoned only when the recorded witness is rooted at or before this
//!   subtree's root. Serially that reduces to classic pruning; under
//!   parallel execution it makes both the maximum size and the reported
//!   witness independent of thread count and timing, because the witness of
//!   record can only be displaced by a lexicographically smaller one.
//!
//! The reported witness is always the lexicographically least among the
//! maximum-size sets. The node counter charges one unit per feasibility
//! test; when the budget runs out the best set found so far is returned
//! with [`SearchStatus::BudgetExhausted`]. Node counts are reproducible for
//! single-threaded runs but not under parallelism (pruning races shift
//! work), which is why the CLI parallelizes *across* table rows by default.

use std::sync::atomic::{AtomicBool, AtomicU64, AtomicUsize, Ordering};
use std::sync::Mutex;

use serde::Serialize;

use crate::bitset::ElemSet;
use crate::group::Group;
use crate::independence::{Mode, SignedSumTable, StarSumTable};
use crate::num;

/// Default cap on feasibility tests per search.
pub const DEFAULT_BUDGET: u64 = 100_000_000;

/// Tuning knobs for the exhaustive searches.
#[derive(Debug, Clone)]
pub struct SearchOptions {
    /// Maximum number of feasibility tests before giving up.
    pub budget: u64,
    /// Worker threads exploring root subtrees; results are identical for
    /// any value, node counts only for 1.
    pub threads: usize,
    /// Skip roots whose negation sorts earlier (sound; see module docs).
    pub negation_prune: bool,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions {
            budget: DEFAULT_BUDGET,
            threads: 1,
            negation_prune: true,
        }
    }
}

/// Whether a search ran to completion or hit its node budget.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SearchStatus {
    Exact,
    BudgetExhausted,
}

/// Outcome of a maximization: the optimum (or best-found, if the budget ran
/// out), its lexicographically least witness as sorted element indices, and
/// the number of feasibility tests spent.
#[derive(Debug, Clone)]
pub struct SearchResult {
    pub group: Group,
    pub t: u64,
    pub mode: Mode,
    pub max_size: u64,
    pub witness: Vec<u64>,
    pub nodes: u64,
    pub status: SearchStatus,
}

/// Largest size of a t-independent subset of `group`, with witness.
pub fn max_independent(group: &Group, t: u64, opts: &SearchOptions) -> SearchResult {
    let n = group.order();
    if t == 0 {
        // Every subset qualifies; the whole group is the unique maximum.
        return trivial(group, t, Mode::Strong, (0..n).collect());
    }
    if t == 1 {
        // Exactly the sets avoiding 0.
        return trivial(group, t, Mode::Strong, (1..n).collect());
    }
    if t >= group.exponent() {
        // Every element x satisfies ord(x)·x = 0 with ord(x) ≤ exponent ≤ t.
        return trivial(group, t, Mode::Strong, Vec::new());
    }
    let ord = group.ord_set(t);
    let pool: Vec<u64> = (0..n).filter(|&i| !ord.contains(i)).collect();
    let m_cap = num::strong_size_cap(n, t).min(pool.len() as u64);
    run(
        group,
        t,
        Mode::Strong,
        &pool,
        m_cap,
        SignedSumTable::new(group.clone(), t),
        opts,
    )
}

/// Largest size of a weakly t-independent subset of `group`, with witness.
pub fn max_weakly_independent(group: &Group, t: u64, opts: &SearchOptions) -> SearchResult {
    let n = group.order();
    if t == 0 {
        return trivial(group, t, Mode::Weak, (0..n).collect());
    }
    if t == 1 {
        return trivial(group, t, Mode::Weak, (1..n).collect());
    }
    let pool: Vec<u64> = (1..n).collect();
    let m_cap = num::weak_size_cap(n, t).min(pool.len() as u64);
    run(
        group,
        t,
        Mode::Weak,
        &pool,
        m_cap,
        StarSumTable::new(group.clone(), t),
        opts,
    )
}

/// Largest size of a sum-free subset of `group`, with witness. The `t`
/// field of the result is 0, which sum-freeness does not parameterize.
pub fn max_sum_free(group: &Group, opts: &SearchOptions) -> SearchResult {
    let n = group.order();
    let pool: Vec<u64> = (1..n).collect();
    let m_cap = n / 2;
    run(
        group,
        0,
        Mode::SumFree,
        &pool,
        m_cap,
        SumFreeState::new(group.clone()),
        opts,
    )
}

fn trivial(group: &Group, t: u64, mode: Mode, witness: Vec<u64>) -> SearchResult {
    SearchResult {
        group: group.clone(),
        t,
        mode,
        max_size: witness.len() as u64,
        witness,
        nodes: 0,
        status: SearchStatus::Exact,
    }
}

/// One growable candidate set: probes and journaled push/pop.
trait Engine: Clone + Send + Sync {
    fn feasible(&self, x: u64) -> bool;
    fn push(&mut self, x: u64);
    fn pop(&mut self);
}

impl Engine for SignedSumTable {
    fn feasible(&self, x: u64) -> bool {
        SignedSumTable::feasible(self, x)
    }
    fn push(&mut self, x: u64) {
        SignedSumTable::push(self, x);
    }
    fn pop(&mut self) {
        SignedSumTable::pop(self);
    }
}

impl Engine for StarSumTable {
    fn feasible(&self, x: u64) -> bool {
        StarSumTable::feasible(self, x)
    }
    fn push(&mut self, x: u64) {
        StarSumTable::push(self, x);
    }
    fn pop(&mut self) {
        StarSumTable::pop(self);
    }
}

/// Incremental state for growing a sum-free set: the member set and the
/// sumset `A + A`, with journaled undo.
#[derive(Clone)]
struct SumFreeState {
    group: Group,
    members: Vec<u64>,
    member_set: ElemSet,
    sums: ElemSet,
    journal: Vec<Vec<u64>>,
}

impl SumFreeState {
    fn new(group: Group) -> SumFreeState {
        let n = group.order();
        SumFreeState {
            group,
            members: Vec::new(),
            member_set: ElemSet::new(n),
            sums: ElemSet::new(n),
            journal: Vec::new(),
        }
    }
}

impl Engine for SumFreeState {
    /// `A ∪ {x}` is sum-free iff x is new, x avoids `A + A`, and every sum
    /// involving x (including `2x`) avoids `A ∪ {x}`. Members are nonzero,
    /// so `a + x = x` cannot happen; `2x = x` only for `x = 0`, rejected.
    fn feasible(&self, x: u64) -> bool {
        if self.member_set.contains(x) || self.sums.contains(x) {
            return false;
        }
        let dx = self.group.add_index(x, x);
        if dx == x || self.member_set.contains(dx) {
            return false;
        }
        for &a in &self.members {
            if self.member_set.contains(self.group.add_index(a, x)) {
                return false;
            }
        }
        true
    }

    fn push(&mut self, x: u64) {
        let mut log = Vec::new();
        for i in 0..self.members.len() {
            let s = self.group.add_index(self.members[i], x);
            if self.sums.insert(s) {
                log.push(s);
            }
        }
        let dx = self.group.add_index(x, x);
        if self.sums.insert(dx) {
            log.push(dx);
        }
        self.member_set.insert(x);
        self.members.push(x);
        self.journal.push(log);
    }

    fn pop(&mut self) {
        let x = self.members.pop().expect("pop on empty engine");
        self.member_set.remove(x);
        for s in self.journal.pop().expect("journal tracks members") {
            self.sums.remove(s);
        }
    }
}

/// Cross-thread search state. `best_key` packs (size, inverted root rank)
/// so a single atomic max tracks "largest size, then earliest root"; the
/// actual witness is merged under the mutex, keeping the lexicographically
/// least among maximum-size reports.
struct Shared {
    best_key: AtomicU64,
    best: Mutex<Best>,
    nodes: AtomicU64,
    budget: u64,
    exhausted: AtomicBool,
    next_root: AtomicUsize,
}

struct Best {
    size: u64,
    witness: Vec<u64>,
}

impl Shared {
    fn new(budget: u64) -> Shared {
        Shared {
            best_key: AtomicU64::new(0),
            best: Mutex::new(Best {
                size: 0,
                witness: Vec::new(),
            }),
            nodes: AtomicU64::new(0),
            budget,
            exhausted: AtomicBool::new(false),
            next_root: AtomicUsize::new(0),
        }
    }

    /// (best size, root rank of the recorded witness; `u32::MAX` if none).
    #[inline]
    fn best_parts(&self) -> (u64, u32) {
        let key = self.best_key.load(Ordering::Relaxed);
        (key >> 32, u32::MAX - (key & u64::from(u32::MAX)) as u32)
    }

    /// Charges one feasibility test against the budget.
    #[inline]
    fn charge(&self) -> bool {
        if self.exhausted.load(Ordering::Relaxed) {
            return false;
        }
        let prev = self.nodes.fetch_add(1, Ordering::Relaxed);
        if prev >= self.budget {
            // Undo the speculative increment so the counter stays exact.
            self.nodes.fetch_sub(1, Ordering::Relaxed);
            self.exhausted.store(true, Ordering::Relaxed);
            return false;
        }
        true
    }

    fn report(&self, chain: &[u64], root: u32) {
        let size = chain.len() as u64;
        let (best_size, _) = self.best_parts();
        if size < best_size {
            return;
        }
        {
            let mut best = self.best.lock().expect("search mutex");
            if size > best.size || (size == best.size && chain < best.witness.as_slice()) {
                best.size = size;
                best.witness = chain.to_vec();
            }
        }
        let key = (size << 32) | u64::from(u32::MAX - root);
        self.best_key.fetch_max(key, Ordering::Relaxed);
    }
}

struct Ctx<'a, E> {
    pool: &'a [u64],
    roots: &'a [usize],
    /// `suffix[p]`: upper bound on members any feasible chain can still
    /// gain from pool positions ≥ p (see [`extension_bounds`]).
    suffix: &'a [u32],
    m_cap: u64,
    base: &'a E,
    shared: &'a Shared,
}

/// Per-position extension bounds. For strong and weak modes at weight ≥ 2
/// no feasible set contains two members of a negation class `{x, −x}`
/// (their sum vanishes with weight 2), and in strong mode no member may
/// have order ≤ t (a zero multiple of weight ≤ t); so the count of
/// negation classes with an eligible element in `pool[p..]` bounds the
/// extension size. Weak mode counts 2-torsion elements as singleton
/// classes, since only coefficients ±1 exist there. Sum-free sets and
/// weight ≤ 1 get the plain element count: they may hold whole classes.
fn extension_bounds(group: &Group, pool: &[u64], t: u64, mode: Mode) -> Vec<u32> {
    let len = pool.len();
    let mut suffix = vec![0u32; len + 1];
    if mode == Mode::SumFree || t < 2 {
        for p in (0..len).rev() {
            suffix[p] = suffix[p + 1] + 1;
        }
        return suffix;
    }
    let mut seen = ElemSet::new(group.order());
    for p in (0..len).rev() {
        let x = pool[p];
        let eligible = match mode {
            Mode::Strong => group.order_of_index(x) > t,
            Mode::Weak => x != 0,
            Mode::SumFree => unreachable!("handled above"),
        };
        let counts = eligible && seen.insert(x.min(group.neg_index(x)));
        suffix[p] = suffix[p + 1] + u32::from(counts);
    }
    suffix
}

fn run<E: Engine>(
    group: &Group,
    t: u64,
    mode: Mode,
    pool: &[u64],
    m_cap: u64,
    base: E,
    opts: &SearchOptions,
) -> SearchResult {
    let shared = Shared::new(opts.budget);
    let roots: Vec<usize> = pool
        .iter()
        .enumerate()
        .filter(|&(_, &x)| !opts.negation_prune || group.neg_index(x) >= x)
        .map(|(i, _)| i)
        .collect();
    let suffix = extension_bounds(group, pool, t, mode);
    let ctx = Ctx {
        pool,
        roots: &roots,
        suffix: &suffix,
        m_cap,
        base: &base,
        shared: &shared,
    };
    if m_cap > 0 {
        let threads = opts.threads.max(1).min(roots.len().max(1));
        if threads <= 1 {
            worker(&ctx);
        } else {
            std::thread::scope(|scope| {
                for _ in 0..threads {
                    scope.spawn(|| worker(&ctx));
                }
            });
        }
    }
    let best = shared.best.into_inner().expect("search mutex");
    SearchResult {
        group: group.clone(),
        t,
        mode,
        max_size: best.size,
        witness: best.witness,
        nodes: shared.nodes.into_inner(),
        status: if shared.exhausted.into_inner() {
            SearchStatus::BudgetExhausted
        } else {
            SearchStatus::Exact
        },
    }
}

fn worker<E: Engine>(ctx: &Ctx<'_, E>) {
    let mut engine = ctx.base.clone();
    loop {
        if ctx.shared.exhausted.load(Ordering::Relaxed) {
            return;
        }
        let ri = ctx.shared.next_root.fetch_add(1, Ordering::Relaxed);
        if ri >= ctx.roots.len() {
            return;
        }
        let root_pos = ctx.roots[ri];
        let potential = u64::from(ctx.suffix[root_pos]).min(ctx.m_cap);
        let (best_size, best_root) = ctx.shared.best_parts();
        if potential < best_size || (potential == best_size && best_root <= root_pos as u32) {
            // Later roots have even less potential and the recorded root
            // can only move earlier, so nothing further can improve.
            return;
        }
        explore(ctx, &mut engine, root_pos);
    }
}

/// Exhausts the subtree rooted at `pool[root_pos]`, leaving `engine` as it
/// was on entry. Iterative so deep chains cannot overflow the stack.
fn explore<E: Engine>(ctx: &Ctx<'_, E>, engine: &mut E, root_pos: usize) {
    let shared = ctx.shared;
    let my_root = root_pos as u32;
    if !shared.charge() || !engine.feasible(ctx.pool[root_pos]) {
        return;
    }
    let mut chain = vec![ctx.pool[root_pos]];
    engine.push(ctx.pool[root_pos]);
    shared.report(&chain, my_root);
    // frames[d] = next pool position to try when the chain has d+1 members.
    let mut frames = vec![root_pos + 1];
    while let Some(frame) = frames.last_mut() {
        let depth = chain.len() as u64;
        let potential = (depth + u64::from(ctx.suffix[*frame])).min(ctx.m_cap);
        let (best_size, best_root) = shared.best_parts();
        let abandoned = shared.exhausted.load(Ordering::Relaxed)
            || depth >= ctx.m_cap
            || *frame >= ctx.pool.len()
            || potential < best_size
            || (potential == best_size && best_root <= my_root);
        if abandoned {
            frames.pop();
            engine.pop();
            chain.pop();
            continue;
        }
        let pos = *frame;
        *frame += 1;
        if !shared.charge() {
            break;
        }
        if engine.feasible(ctx.pool[pos]) {
            engine.push(ctx.pool[pos]);
            chain.push(ctx.pool[pos]);
            shared.report(&chain, my_root);
            frames.push(pos + 1);
        }
    }
    // Distinguish normal exhaustion (chain already unwound) from a budget
    // abort, which must restore the engine before returning.
    while !chain.is_empty() {
        engine.pop();
        chain.pop();
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::independence::{is_sum_free, is_t_independent, is_weakly_t_independent, Subset};

    fn group(spec: &str) -> Group {
        Group::parse(spec).unwrap()
    }

    fn subset(g: &Group, members: &[u64]) -> Subset {
        Subset::new(g.clone(), members.to_vec()).unwrap()
    }

    #[test]
    fn trivial_weights() {
        let g = group("6");
        let r = max_independent(&g, 0, &SearchOptions::default());
        assert_eq!((r.max_size, r.witness.len(), r.nodes), (6, 6, 0));
        let r = max_independent(&g, 1, &SearchOptions::default());
        assert_eq!(r.max_size, 5);
        assert_eq!(r.witness, vec![1, 2, 3, 4, 5]);
        let r = max_weakly_independent(&g, 1, &SearchOptions::default());
        assert_eq!(r.max_size, 5);
    }

    #[test]
    fn exponent_kills_strong_independence() {
        let g = group("6");
        for t in 6..8 {
            let r = max_independent(&g, t, &SearchOptions::default());
            assert_eq!(r.max_size, 0);
            assert!(r.witness.is_empty());
            assert_eq!(r.status, SearchStatus::Exact);
        }
    }

    #[test]
    fn small_cyclic_optima() {
        let opts = SearchOptions::default();
        let g9 = group("9");
        let r = max_independent(&g9, 3, &opts);
        assert_eq!(r.max_size, 1);
        assert_eq!(r.witness, vec![1]);
        let g11 = group("11");
        assert_eq!(max_independent(&g11, 4, &opts).max_size, 1);
        let g20 = group("20");
        let r = max_independent(&g20, 3, &opts);
        assert_eq!(r.max_size, 5);
        assert!(is_t_independent(&subset(&g20, &r.witness), 3));
        let g25 = group("25");
        let r = max_independent(&g25, 3, &opts);
        assert_eq!(r.max_size, 5);
        assert!(is_t_independent(&subset(&g25, &r.witness), 3));
    }

    #[test]
    fn weak_optima_match_pair_formula() {
        let opts = SearchOptions::default();
        for (spec, expected) in [("5", 2), ("10", 5), ("16", 8)] {
            let g = group(spec);
            let r = max_weakly_independent(&g, 2, &opts);
            assert_eq!(r.max_size, expected, "w({spec}, 2)");
            assert!(is_weakly_t_independent(&subset(&g, &r.witness), 2));
        }
    }

    #[test]
    fn weak_character_two_groups_saturate() {
        // In Z_2^4 sums of two distinct nonzero elements never vanish, so
        // all 15 nonzero elements are weakly 2-independent; the tie rule
        // must close the search quickly rather than revisiting equal-size
        // witnesses.
        let g = group("2x2x2x2");
        let r = max_weakly_independent(&g, 2, &SearchOptions::default());
        assert_eq!(r.max_size, 15);
        assert_eq!(r.witness, (1..16).collect::<Vec<u64>>());
        assert!(
            r.nodes < 1000,
            "tie rule should cap the node count, got {}",
            r.nodes
        );
    }

    #[test]
    fn sum_free_optima() {
        let opts = SearchOptions::default();
        let g7 = group("7");
        let r = max_sum_free(&g7, &opts);
        assert_eq!(r.max_size, 2);
        assert_eq!(r.witness, vec![1, 3]);
        assert_eq!(max_sum_free(&group("2"), &opts).max_size, 1);
        let g10 = group("10");
        let r = max_sum_free(&g10, &opts);
        assert_eq!(r.max_size, 5);
        assert!(is_sum_free(&subset(&g10, &r.witness)));
        assert_eq!(r.witness[0], 1);
    }

    #[test]
    fn budget_exhaustion_reports_partial_result() {
        let g = group("20");
        let opts = SearchOptions {
            budget: 3,
            ..Default::default()
        };
        let r = max_independent(&g, 3, &opts);
        assert_eq!(r.status, SearchStatus::BudgetExhausted);
        assert!(r.nodes <= 3);
        assert!(r.max_size <= 5);
        // The witness found so far must still be valid.
        assert!(is_t_independent(&subset(&g, &r.witness), 3));
    }

    #[test]
    fn thread_count_does_not_change_result() {
        for spec in ["20", "25", "2x12"] {
            let g = group(spec);
            let serial = max_independent(&g, 3, &SearchOptions::default());
            let parallel = max_independent(
                &g,
                3,
                &SearchOptions {
                    threads: 4,
                    ..Default::default()
                },
            );
            assert_eq!(serial.max_size, parallel.max_size, "{spec}");
            assert_eq!(serial.witness, parallel.witness, "{spec}");
            let sw = max_sum_free(&g, &SearchOptions::default());
            let pw = max_sum_free(
                &g,
                &SearchOptions {
                    threads: 4,
                    ..Default::default()
                },
            );
            assert_eq!(sw.witness, pw.witness, "{spec}");
        }
    }

    #[test]
    fn negation_pruning_is_transparent() {
        for spec in ["20", "11", "3x9"] {
            let g = group(spec);
            let pruned = max_independent(&g, 3, &SearchOptions::default());
            let full = max_independent(
                &g,
                3,
                &SearchOptions {
                    negation_prune: false,
                    ..Default::default()
                },
            );
            assert_eq!(pruned.max_size, full.max_size, "{spec}");
            assert_eq!(pruned.witness, full.witness, "{spec}");
            assert!(pruned.nodes <= full.nodes, "{spec}");
        }
    }
}
