//! Exact independence checking for subsets of finite abelian groups.
//!
//! A subset `A = {a_1, …, a_m}` is **t-independent** when no nonzero integer
//! vector `λ` with `Σ|λ_i| ≤ t` satisfies `Σ λ_i·a_i = 0`, and **weakly
//! t-independent** when the same holds with every `λ_i ∈ {-1, 0, 1}`.
//!
//! Two independent implementations live here on purpose:
//!
//! - [`check`] enumerates coefficient vectors of increasing weight in
//!   lexicographic order, straight from the definition, and reports the
//!   lexicographically least violating vector of minimum weight;
//! - [`SignedSumTable`] / [`StarSumTable`] maintain the sets of low-weight
//!   signed sums incrementally, so a set can be grown one element at a time
//!   with O(1) bitset probes per feasibility test. [`is_t_independent`] and
//!   [`is_weakly_t_independent`] are built on them.
//!
//! The property tests assert the two routes agree.

use std::fmt;

use serde::Serialize;

use crate::bitset::ElemSet;
use crate::group::{Element, Group};
use crate::{Error, Result};

/// Which notion of independence (or the sum-free property) is in play.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Strong,
    Weak,
    SumFree,
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Mode::Strong => "strong",
            Mode::Weak => "weak",
            Mode::SumFree => "sumfree",
        })
    }
}

/// A set of distinct group elements, stored as sorted indices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subset {
    group: Group,
    members: Vec<u64>,
}

impl Subset {
    /// Builds a subset from element indices; sorts them and rejects
    /// duplicates and out-of-range indices.
    pub fn new(group: Group, mut members: Vec<u64>) -> Result<Subset> {
        for &m in &members {
            if m >= group.order() {
                return Err(Error::IndexOutOfRange {
                    index: m,
                    order: group.order(),
                });
            }
        }
        members.sort_unstable();
        if let Some(w) = members.windows(2).find(|w| w[0] == w[1]) {
            let shown = group.element(w[0]).expect("validated index").to_string();
            return Err(Error::DuplicateMember(shown));
        }
        Ok(Subset { group, members })
    }

    /// Builds a subset from coordinate-vector elements.
    pub fn from_elements(group: Group, elements: &[Element]) -> Result<Subset> {
        let members = elements
            .iter()
            .map(|e| group.index_of(e))
            .collect::<Result<Vec<_>>>()?;
        Subset::new(group, members)
    }

    pub fn group(&self) -> &Group {
        &self.group
    }

    /// Sorted element indices.
    pub fn members(&self) -> &[u64] {
        &self.members
    }

    /// Members decoded to coordinate vectors, in index order.
    pub fn elements(&self) -> Vec<Element> {
        self.members
            .iter()
            .map(|&i| self.group.element(i).expect("members are valid indices"))
            .collect()
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }
}

/// Structural classification of a vanishing coefficient vector.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum ViolationKind {
    /// A multiset of `h` members (with repetition) sums to zero.
    ZeroSum { h: u64 },
    /// An `h`-fold sum coincides with a `k`-fold sum, `h < k`.
    SumsetOverlap { h: u64, k: u64 },
    /// Two distinct `h`-element multisets share the same sum.
    SumsetCollision { h: u64 },
}

/// A nonzero coefficient vector witnessing dependence: `Σ λ_i·a_i = 0`
/// with `Σ|λ_i|` equal to `weight`. Coefficients align with the subset's
/// sorted member order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ViolatingVector {
    pub coefficients: Vec<i64>,
    pub weight: u64,
    pub kind: ViolationKind,
}

/// Result of [`check`]: verdict plus, when dependent, the lexicographically
/// least violating vector among those of minimum weight.
#[derive(Debug, Clone, Serialize)]
pub struct IndependenceReport {
    pub group: Group,
    pub set: Vec<Element>,
    pub t: u64,
    pub mode: Mode,
    pub independent: bool,
    #[serde(rename = "violating_vector", skip_serializing_if = "Option::is_none")]
    pub violation: Option<ViolatingVector>,
}

/// Weak independence number: maximal `t` for which a set stays weakly
/// t-independent, or infinite when no 0/±1 combination vanishes at all.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Wind {
    Finite(u64),
    Infinite,
}

impl fmt::Display for Wind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Wind::Finite(v) => write!(f, "{v}"),
            Wind::Infinite => f.write_str("inf"),
        }
    }
}

impl Serialize for Wind {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Wind::Finite(v) => s.serialize_u64(*v),
            Wind::Infinite => s.serialize_str("inf"),
        }
    }
}

/// Tests t-independence by growing a [`SignedSumTable`] one member at a time.
pub fn is_t_independent(set: &Subset, t: u64) -> bool {
    let mut table = SignedSumTable::new(set.group().clone(), t);
    set.members().iter().all(|&x| table.try_extend(x))
}

/// Tests weak t-independence by growing a [`StarSumTable`].
pub fn is_weakly_t_independent(set: &Subset, t: u64) -> bool {
    let mut table = StarSumTable::new(set.group().clone(), t);
    set.members().iter().all(|&x| table.try_extend(x))
}

/// The h-fold sumset `h·A`: all sums of `h` not-necessarily-distinct
/// members. `h = 0` gives `{0}`.
pub fn fold_sumset(set: &Subset, h: u64) -> ElemSet {
    let group = set.group();
    let n = group.order();
    let mut cur = ElemSet::new(n);
    cur.insert(0);
    for _ in 0..h {
        let mut next = ElemSet::new(n);
        for s in cur.iter() {
            for &a in set.members() {
                next.insert(group.add_index(s, a));
            }
        }
        cur = next;
    }
    cur
}

/// The h-fold star sumset `h⋆A`: all sums of `h` pairwise-distinct members.
/// Empty when `h` exceeds the set size; `h = 0` gives `{0}`.
pub fn star_sumset(set: &Subset, h: u64) -> ElemSet {
    let group = set.group();
    let n = group.order();
    let mut layers: Vec<ElemSet> = (0..=h).map(|_| ElemSet::new(n)).collect();
    layers[0].insert(0);
    for &a in set.members() {
        for k in (1..=h as usize).rev() {
            let (lower, upper) = layers.split_at_mut(k);
            let (prev, cur) = (&lower[k - 1], &mut upper[0]);
            let additions: Vec<u64> = prev.iter().map(|s| group.add_index(s, a)).collect();
            for s in additions {
                cur.insert(s);
            }
        }
    }
    layers.pop().expect("h+1 layers were built")
}

/// Sumset-based route to t-independence: `A` is t-independent iff
///
/// - `0 ∉ h·A` for `1 ≤ h ≤ t`,
/// - `h·A ∩ k·A = ∅` for `1 ≤ h < k ≤ t-h`, and
/// - `|h·A| = C(m+h-1, h)` for `1 ≤ h ≤ ⌊t/2⌋` (all h-term sums distinct
///   up to reordering).
///
/// An alternative to the coefficient-vector route of [`check`]; the test
/// suite holds the two to agreement.
pub fn conditions_hold(set: &Subset, t: u64) -> bool {
    let m = set.len() as u64;
    let folds: Vec<ElemSet> = (0..=t).map(|h| fold_sumset(set, h)).collect();
    for fold in folds.iter().skip(1) {
        if fold.contains(0) {
            return false;
        }
    }
    for h in 1..=t {
        for k in (h + 1)..=t.saturating_sub(h) {
            if folds[h as usize].intersects(&folds[k as usize]) {
                return false;
            }
        }
    }
    for h in 1..=t / 2 {
        if folds[h as usize].len() as u128 != crate::num::binomial_saturating(m + h - 1, h) {
            return false;
        }
    }
    true
}

/// Like [`conditions_hold`] but only evaluates the equations whose two
/// sides total `t` or `t-1` terms. Dependence of minimum weight always
/// shows up at one of those totals, so this decides the same predicate
/// with `t+1` set comparisons; the property tests pin the equivalence.
pub fn conditions_hold_reduced(set: &Subset, t: u64) -> bool {
    if t == 0 {
        return true;
    }
    let m = set.len() as u64;
    let folds: Vec<ElemSet> = (0..=t).map(|h| fold_sumset(set, h)).collect();
    for h in [t.saturating_sub(1), t] {
        if h >= 1 && folds[h as usize].contains(0) {
            return false;
        }
    }
    for total in [t.saturating_sub(1), t] {
        for h in 1..=total.saturating_sub(1) / 2 {
            let k = total - h;
            if k > h && folds[h as usize].intersects(&folds[k as usize]) {
                return false;
            }
        }
    }
    let q = t / 2;
    if q >= 1 && folds[q as usize].len() as u128 != crate::num::binomial_saturating(m + q - 1, q) {
        return false;
    }
    true
}

/// Star-sumset route to weak t-independence: `0 ∉ h⋆A` for `1 ≤ h ≤ t`,
/// `h⋆A ∩ k⋆A = ∅` for `1 ≤ h < k ≤ t-h`, and `|h⋆A| = C(m, h)` for
/// `1 ≤ h ≤ ⌊t/2⌋`.
pub fn star_conditions_hold(set: &Subset, t: u64) -> bool {
    let m = set.len() as u64;
    let stars: Vec<ElemSet> = (0..=t).map(|h| star_sumset(set, h)).collect();
    for star in stars.iter().skip(1) {
        if star.contains(0) {
            return false;
        }
    }
    for h in 1..=t {
        for k in (h + 1)..=t.saturating_sub(h) {
            if stars[h as usize].intersects(&stars[k as usize]) {
                return false;
            }
        }
    }
    for h in 1..=t / 2 {
        if stars[h as usize].len() as u128 != crate::num::binomial_saturating(m, h) {
            return false;
        }
    }
    true
}

/// Whether no two members (repetition allowed) sum to a member.
pub fn is_sum_free(set: &Subset) -> bool {
    let group = set.group();
    let mut in_set = ElemSet::new(group.order());
    for &a in set.members() {
        in_set.insert(a);
    }
    for (i, &a) in set.members().iter().enumerate() {
        for &b in &set.members()[i..] {
            if in_set.contains(group.add_index(a, b)) {
                return false;
            }
        }
    }
    true
}

/// Definition-direct check with an explicit certificate of failure.
///
/// Enumerates coefficient vectors of exact weight `1, 2, …, t` in
/// lexicographic order and stops at the first vanishing one, so a reported
/// violation has minimum weight and is lexicographically least among
/// violations of that weight.
pub fn check(set: &Subset, t: u64, mode: Mode) -> IndependenceReport {
    let weak = match mode {
        Mode::Weak => true,
        Mode::Strong => false,
        Mode::SumFree => panic!("check() applies to independence modes only"),
    };
    let cap = if weak { t.min(set.len() as u64) } else { t };
    let violation = minimum_violation(set.group(), set.members(), cap, weak);
    IndependenceReport {
        group: set.group().clone(),
        set: set.elements(),
        t,
        mode,
        independent: violation.is_none(),
        violation,
    }
}

/// The independence number `ind(A)`: the largest `t` such that `A` is
/// t-independent. Finite for nonempty `A`, because `d·a = 0` for the order
/// `d` of any member; errors on the empty set, whose value is unbounded.
pub fn independence_number(set: &Subset) -> Result<u64> {
    if set.is_empty() {
        return Err(Error::EmptySubset);
    }
    let group = set.group();
    let cap = set
        .members()
        .iter()
        .map(|&a| group.order_of_index(a))
        .min()
        .expect("nonempty");
    let (weight, _) = minimum_violation(group, set.members(), cap, false)
        .map(|v| (v.weight, v))
        .expect("the order of a member always yields a vanishing vector");
    Ok(weight - 1)
}

/// The weak independence number `wind(A)`: the largest `t` such that `A`
/// is weakly t-independent, or [`Wind::Infinite`] when every 0/±1
/// combination of distinct members is nonzero.
pub fn weak_independence_number(set: &Subset) -> Result<Wind> {
    if set.is_empty() {
        return Err(Error::EmptySubset);
    }
    let cap = set.len() as u64;
    Ok(
        match minimum_violation(set.group(), set.members(), cap, true) {
            Some(v) => Wind::Finite(v.weight - 1),
            None => Wind::Infinite,
        },
    )
}

/// First vanishing vector over weights `1..=max_weight`, if any.
fn minimum_violation(
    group: &Group,
    members: &[u64],
    max_weight: u64,
    weak: bool,
) -> Option<ViolatingVector> {
    if members.is_empty() {
        return None;
    }
    for weight in 1..=max_weight {
        if weak && weight > members.len() as u64 {
            break;
        }
        if let Some(coefficients) = first_vanishing_vector(group, members, weight, weak) {
            let kind = classify(&coefficients);
            return Some(ViolatingVector {
                coefficients,
                weight,
                kind,
            });
        }
    }
    None
}

/// Lexicographically first coefficient vector of exact total weight `weight`
/// whose combination vanishes, scanning coefficients ascending from most
/// negative.
fn first_vanishing_vector(
    group: &Group,
    members: &[u64],
    weight: u64,
    weak: bool,
) -> Option<Vec<i64>> {
    fn rec(
        group: &Group,
        members: &[u64],
        pos: usize,
        rem: u64,
        sum: u64,
        weak: bool,
        coeffs: &mut Vec<i64>,
    ) -> bool {
        let left = members.len() - pos;
        if left == 1 {
            let candidates: &[i64] = if rem == 0 {
                &[0]
            } else if weak && rem > 1 {
                return false;
            } else {
                &[-(rem as i64), rem as i64]
            };
            for &c in candidates {
                let total = group.add_index(sum, group.scalar_mul_index(c, members[pos]));
                if total == 0 {
                    coeffs.push(c);
                    return true;
                }
            }
            return false;
        }
        let lim = if weak { rem.min(1) } else { rem } as i64;
        for c in -lim..=lim {
            let used = c.unsigned_abs();
            // In weak mode the remaining positions can absorb at most 1 each.
            if weak && rem - used > (left - 1) as u64 {
                continue;
            }
            let next_sum = group.add_index(sum, group.scalar_mul_index(c, members[pos]));
            coeffs.push(c);
            if rec(group, members, pos + 1, rem - used, next_sum, weak, coeffs) {
                return true;
            }
            coeffs.pop();
        }
        false
    }

    let mut coeffs = Vec::with_capacity(members.len());
    rec(group, members, 0, weight, 0, weak, &mut coeffs).then_some(coeffs)
}

/// Splits a vanishing vector into its positive and negative weight to name
/// what failed: a plain zero multiset sum, a collision between sumsets of
/// unequal weights, or two equal-weight multisets sharing a sum (the
/// multisets are distinct because they live on disjoint coordinates).
fn classify(coefficients: &[i64]) -> ViolationKind {
    let pos: u64 = coefficients
        .iter()
        .filter(|&&c| c > 0)
        .map(|&c| c as u64)
        .sum();
    let neg: u64 = coefficients
        .iter()
        .filter(|&&c| c < 0)
        .map(|&c| c.unsigned_abs())
        .sum();
    if pos == 0 || neg == 0 {
        ViolationKind::ZeroSum { h: pos + neg }
    } else if pos == neg {
        ViolationKind::SumsetCollision { h: pos }
    } else {
        ViolationKind::SumsetOverlap {
            h: pos.min(neg),
            k: pos.max(neg),
        }
    }
}

/// Incremental membership table for growing a t-independent set.
///
/// Level `w` holds every signed sum `Σ λ_i·a_i` with `Σ|λ_i| ≤ w` over the
/// current members, for `w < t`. Adding `x` to an independent member set
/// keeps it t-independent iff `j·x` avoids level `t-j` for every
/// `j = 1..=t` (a vanishing vector using `x` with coefficient `±j` moves
/// `j·x` into the weight-`(t-j)` span of the rest, and the level sets are
/// symmetric under negation). Pushes are journaled so [`pop`](Self::pop)
/// restores the previous state exactly.
#[derive(Clone)]
pub struct SignedSumTable {
    group: Group,
    t: u64,
    levels: Vec<ElemSet>,
    members: Vec<u64>,
    journal: Vec<Vec<(u32, u64)>>,
}

impl SignedSumTable {
    /// Table over the empty set; every level starts as `{0}`.
    pub fn new(group: Group, t: u64) -> SignedSumTable {
        let n = group.order();
        let levels = (0..t)
            .map(|_| {
                let mut s = ElemSet::new(n);
                s.insert(0);
                s
            })
            .collect();
        SignedSumTable {
            group,
            t,
            levels,
            members: Vec::new(),
            journal: Vec::new(),
        }
    }

    pub fn group(&self) -> &Group {
        &self.group
    }

    pub fn t(&self) -> u64 {
        self.t
    }

    /// Members in push order.
    pub fn members(&self) -> &[u64] {
        &self.members
    }

    /// The set of signed sums `Σ λ_i·a_i` with `Σ|λ_i| ≤ w` over the
    /// current members. Panics unless `w < t`.
    pub fn level(&self, w: u64) -> &ElemSet {
        &self.levels[w as usize]
    }

    /// Whether adding `x` keeps the member set t-independent (assuming the
    /// current members are, which holds when every push went through
    /// [`try_extend`](Self::try_extend)).
    pub fn feasible(&self, x: u64) -> bool {
        if self.members.contains(&x) {
            return false;
        }
        for j in 1..=self.t {
            let jx = self.group.scalar_mul_index(j as i64, x);
            if self.levels[(self.t - j) as usize].contains(jx) {
                return false;
            }
        }
        true
    }

    /// Adds `x`, folding `±j·x` translates of lower levels into each level.
    pub fn push(&mut self, x: u64) {
        let t = self.t as usize;
        let mut log = Vec::new();
        let mult: Vec<u64> = (1..t)
            .map(|j| self.group.scalar_mul_index(j as i64, x))
            .collect();
        // Descending so the source levels below `w` are still pre-push.
        for w in (1..t).rev() {
            for j in 1..=w {
                let jx = mult[j - 1];
                let njx = self.group.neg_index(jx);
                let (lo, hi) = self.levels.split_at_mut(w);
                let src = &lo[w - j];
                let dst = &mut hi[0];
                for y in src.iter() {
                    let p = self.group.add_index(y, jx);
                    if dst.insert(p) {
                        log.push((w as u32, p));
                    }
                    if njx != jx {
                        let q = self.group.add_index(y, njx);
                        if dst.insert(q) {
                            log.push((w as u32, q));
                        }
                    }
                }
            }
        }
        self.members.push(x);
        self.journal.push(log);
    }

    /// Removes the most recently pushed member, undoing its insertions.
    pub fn pop(&mut self) -> Option<u64> {
        let x = self.members.pop()?;
        for (w, idx) in self.journal.pop().expect("journal tracks members") {
            self.levels[w as usize].remove(idx);
        }
        Some(x)
    }

    /// Pushes `x` if feasible; returns whether it did.
    pub fn try_extend(&mut self, x: u64) -> bool {
        let ok = self.feasible(x);
        if ok {
            self.push(x);
        }
        ok
    }
}

/// Incremental membership table for growing a weakly t-independent set.
///
/// Level `w` holds every sum `Σ ε_i·a_i` with `ε_i ∈ {-1,0,1}` and at most
/// `w` nonzero terms. Adding `x` keeps the member set weakly t-independent
/// iff `x` avoids level `min(t-1, |members|)`; levels at or above the
/// member count coincide, so the probe level is always valid.
#[derive(Clone)]
pub struct StarSumTable {
    group: Group,
    t: u64,
    levels: Vec<ElemSet>,
    members: Vec<u64>,
    journal: Vec<Vec<(u32, u64)>>,
}

impl StarSumTable {
    /// Table over the empty set; every level starts as `{0}`.
    pub fn new(group: Group, t: u64) -> StarSumTable {
        let n = group.order();
        let levels = (0..t)
            .map(|_| {
                let mut s = ElemSet::new(n);
                s.insert(0);
                s
            })
            .collect();
        StarSumTable {
            group,
            t,
            levels,
            members: Vec::new(),
            journal: Vec::new(),
        }
    }

    pub fn group(&self) -> &Group {
        &self.group
    }

    pub fn t(&self) -> u64 {
        self.t
    }

    pub fn members(&self) -> &[u64] {
        &self.members
    }

    /// The set of sums `Σ ε_i·a_i`, `ε_i ∈ {-1,0,1}`, with at most `w`
    /// nonzero terms over the current members. Panics unless `w < t`.
    pub fn level(&self, w: u64) -> &ElemSet {
        &self.levels[w as usize]
    }

    /// Whether adding `x` keeps the member set weakly t-independent.
    pub fn feasible(&self, x: u64) -> bool {
        if self.members.contains(&x) {
            return false;
        }
        if self.t == 0 {
            return true;
        }
        let w = (self.t - 1).min(self.members.len() as u64) as usize;
        !self.levels[w].contains(x)
    }

    /// Adds `x`, folding `±x` translates of each lower level upward.
    pub fn push(&mut self, x: u64) {
        let t = self.t as usize;
        let mut log = Vec::new();
        let nx = self.group.neg_index(x);
        for w in (1..t).rev() {
            let (lo, hi) = self.levels.split_at_mut(w);
            let src = &lo[w - 1];
            let dst = &mut hi[0];
            for y in src.iter() {
                let p = self.group.add_index(y, x);
                if dst.insert(p) {
                    log.push((w as u32, p));
                }
                if nx != x {
                    let q = self.group.add_index(y, nx);
                    if dst.insert(q) {
                        log.push((w as u32, q));
                    }
                }
            }
        }
        self.members.push(x);
        self.journal.push(log);
    }

    /// Removes the most recently pushed member, undoing its insertions.
    pub fn pop(&mut self) -> Option<u64> {
        let x = self.members.pop()?;
        for (w, idx) in self.journal.pop().expect("journal tracks members") {
            self.levels[w as usize].remove(idx);
        }
        Some(x)
    }

    /// Pushes `x` if feasible; returns whether it did.
    pub fn try_extend(&mut self, x: u64) -> bool {
        let ok = self.feasible(x);
        if ok {
            self.push(x);
        }
        ok
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn subset(spec: &str, members: &[u64]) -> Subset {
        Subset::new(Group::parse(spec).unwrap(), members.to_vec()).unwrap()
    }

    #[test]
    fn subset_construction() {
        let s = subset("11", &[3, 1]);
        assert_eq!(s.members(), &[1, 3]);
        assert!(matches!(
            Subset::new(Group::parse("11").unwrap(), vec![1, 1]),
            Err(Error::DuplicateMember(_))
        ));
        assert!(matches!(
            Subset::new(Group::parse("11").unwrap(), vec![11]),
            Err(Error::IndexOutOfRange { .. })
        ));
    }

    #[test]
    fn fold_sumset_examples() {
        let s = subset("7", &[1, 2]);
        assert_eq!(fold_sumset(&s, 2).iter().collect::<Vec<_>>(), vec![2, 3, 4]);
        assert_eq!(fold_sumset(&s, 1).iter().collect::<Vec<_>>(), vec![1, 2]);
        assert_eq!(fold_sumset(&s, 0).iter().collect::<Vec<_>>(), vec![0]);
        let empty = subset("7", &[]);
        assert!(fold_sumset(&empty, 2).is_empty());
    }

    #[test]
    fn star_sumset_examples() {
        let s = subset("30", &[1, 2, 4]);
        assert_eq!(star_sumset(&s, 2).iter().collect::<Vec<_>>(), vec![3, 5, 6]);
        // All three members at once, and more members than exist.
        assert_eq!(star_sumset(&s, 3).iter().collect::<Vec<_>>(), vec![7]);
        assert!(star_sumset(&s, 4).is_empty());
        assert_eq!(star_sumset(&s, 0).iter().collect::<Vec<_>>(), vec![0]);
    }

    #[test]
    fn condition_routes_match_direct_checks() {
        for (spec, members) in [
            ("11", vec![1, 3]),
            ("8", vec![1, 5]),
            ("30", vec![1, 2, 4, 8, 16]),
            ("12", vec![2, 3, 6]),
            ("2x6", vec![1, 5, 7]),
            ("9", vec![0, 1]),
            ("16", vec![2]),
        ] {
            let s = subset(spec, &members);
            for t in 0..=6 {
                let direct = check(&s, t, Mode::Strong).independent;
                assert_eq!(conditions_hold(&s, t), direct, "{spec} {members:?} t={t}");
                assert_eq!(
                    conditions_hold_reduced(&s, t),
                    direct,
                    "reduced {spec} {members:?} t={t}"
                );
                let weak_direct = check(&s, t, Mode::Weak).independent;
                assert_eq!(
                    star_conditions_hold(&s, t),
                    weak_direct,
                    "star {spec} {members:?} t={t}"
                );
            }
        }
    }

    #[test]
    fn check_reports_least_minimal_violation() {
        // {1,3} in Z_11: 3·1 = 3 gives the weight-4 vector (-3, 1); nothing
        // of weight <= 3 vanishes.
        let s = subset("11", &[1, 3]);
        let report = check(&s, 4, Mode::Strong);
        assert!(!report.independent);
        let v = report.violation.unwrap();
        assert_eq!(v.coefficients, vec![-3, 1]);
        assert_eq!(v.weight, 4);
        assert_eq!(v.kind, ViolationKind::SumsetOverlap { h: 1, k: 3 });
        assert!(check(&s, 3, Mode::Strong).independent);
    }

    #[test]
    fn check_zero_sum_classification() {
        // {1,5} in Z_8 is 3-independent; at t = 4 the least violator is
        // (-3,-1): -3·1 - 5 = -8 = 0, a one-sided zero sum.
        let s = subset("8", &[1, 5]);
        assert!(check(&s, 3, Mode::Strong).independent);
        let v = check(&s, 4, Mode::Strong).violation.unwrap();
        assert_eq!(v.coefficients, vec![-3, -1]);
        assert_eq!(v.kind, ViolationKind::ZeroSum { h: 4 });
    }

    #[test]
    fn check_collision_classification() {
        // {26,28,29,31} in Z_100: 26 + 31 = 28 + 29 is the only minimal
        // relation, an equal-weight collision.
        let s = subset("100", &[26, 28, 29, 31]);
        assert!(check(&s, 3, Mode::Strong).independent);
        let v = check(&s, 4, Mode::Strong).violation.unwrap();
        assert_eq!(v.weight, 4);
        assert_eq!(v.kind, ViolationKind::SumsetCollision { h: 2 });
        assert_eq!(v.coefficients, vec![-1, 1, 1, -1]);
    }

    #[test]
    fn independence_number_examples() {
        // {1,2,4,8,16} in Z_30: 2·1 - 2 shows ind = 2.
        let s = subset("30", &[1, 2, 4, 8, 16]);
        assert_eq!(independence_number(&s).unwrap(), 2);
        let v = check(&s, 3, Mode::Strong).violation.unwrap();
        assert_eq!(v.coefficients, vec![-2, 1, 0, 0, 0]);
        assert_eq!(independence_number(&subset("2", &[1])).unwrap(), 1);
        // A single generator of Z_7 is independent up to weight 6; the
        // weight-7 vector 7·1 vanishes, matching the ind <= n-1 ceiling.
        assert_eq!(independence_number(&subset("7", &[1])).unwrap(), 6);
        assert_eq!(
            independence_number(&subset("30", &[1, 2, 4, 8])).unwrap(),
            2
        );
        assert!(matches!(
            independence_number(&Subset::new(Group::parse("5").unwrap(), vec![]).unwrap()),
            Err(Error::EmptySubset)
        ));
    }

    #[test]
    fn weak_independence_number_examples() {
        // -2 - 4 - 8 - 16 = -30 = 0 in Z_30, so wind = 3 …
        let s = subset("30", &[1, 2, 4, 8, 16]);
        assert_eq!(weak_independence_number(&s).unwrap(), Wind::Finite(3));
        let v = check(&s, 4, Mode::Weak).violation.unwrap();
        assert_eq!(v.coefficients, vec![0, -1, -1, -1, -1]);
        assert_eq!(v.kind, ViolationKind::ZeroSum { h: 4 });
        // … but dropping 16 leaves no vanishing 0/±1 combination at all.
        let s = subset("30", &[1, 2, 4, 8]);
        assert_eq!(weak_independence_number(&s).unwrap(), Wind::Infinite);
        assert_eq!(Wind::Infinite.to_string(), "inf");
    }

    #[test]
    fn strong_implies_weak_on_example() {
        let s = subset("30", &[1, 2, 4, 8, 16]);
        for t in 0..=2 {
            assert!(is_t_independent(&s, t));
            assert!(is_weakly_t_independent(&s, t));
        }
        assert!(!is_t_independent(&s, 3));
        assert!(is_weakly_t_independent(&s, 3));
    }

    #[test]
    fn signed_table_matches_direct_checker() {
        let group = Group::parse("30").unwrap();
        let members = [1u64, 2, 4, 8, 16];
        for t in 0..=5 {
            let mut table = SignedSumTable::new(group.clone(), t);
            let mut ok = true;
            for &x in &members {
                ok = ok && table.try_extend(x);
            }
            let direct = check(&subset("30", &members), t, Mode::Strong).independent;
            assert_eq!(ok, direct, "t = {t}");
        }
    }

    #[test]
    fn table_pop_restores_feasibility() {
        let group = Group::parse("40").unwrap();
        let mut table = SignedSumTable::new(group.clone(), 3);
        assert!(table.try_extend(1));
        let before: Vec<bool> = (0..40).map(|x| table.feasible(x)).collect();
        assert!(table.try_extend(5));
        assert_eq!(table.pop(), Some(5));
        let after: Vec<bool> = (0..40).map(|x| table.feasible(x)).collect();
        assert_eq!(before, after);
        assert_eq!(table.pop(), Some(1));
        assert_eq!(table.pop(), None);
    }

    #[test]
    fn star_table_matches_direct_checker() {
        let group = Group::parse("16").unwrap();
        let members = [1u64, 2, 4, 7];
        for t in 0..=4 {
            let mut table = StarSumTable::new(group.clone(), t);
            let mut ok = true;
            for &x in &members {
                ok = ok && table.try_extend(x);
            }
            let direct = check(&subset("16", &members), t, Mode::Weak).independent;
            assert_eq!(ok, direct, "t = {t}");
        }
        assert!(is_weakly_t_independent(&subset("16", &[1, 2, 4, 7]), 2));
    }

    #[test]
    fn star_table_pop_restores_feasibility() {
        let group = Group::parse("16").unwrap();
        let mut table = StarSumTable::new(group, 3);
        assert!(table.try_extend(1));
        assert!(table.try_extend(2));
        let before: Vec<bool> = (0..16).map(|x| table.feasible(x)).collect();
        assert!(table.try_extend(4));
        table.pop();
        let after: Vec<bool> = (0..16).map(|x| table.feasible(x)).collect();
        assert_eq!(before, after);
    }

    #[test]
    fn sum_free_examples() {
        assert!(is_sum_free(&subset("7", &[1, 3])));
        assert!(!is_sum_free(&subset("7", &[1, 2])));
        // Odd residues of Z_10 are sum-free (sums are even).
        assert!(is_sum_free(&subset("10", &[1, 3, 5, 7, 9])));
        assert!(
            is_sum_free(&subset("10", &[5])),
            "5 + 5 = 0 lands outside the set"
        );
        assert!(!is_sum_free(&subset("10", &[2, 4])), "2 + 2 = 4");
        assert!(!is_sum_free(&subset("12", &[4, 8])), "4 + 4 = 8");
    }

    #[test]
    fn zero_element_and_duplicates_rejected_by_tables() {
        let group = Group::parse("9").unwrap();
        let mut table = SignedSumTable::new(group.clone(), 1);
        assert!(!table.feasible(0), "0 is never 1-independent");
        assert!(table.try_extend(4));
        assert!(!table.feasible(4), "duplicate members are rejected");
        let mut star = StarSumTable::new(group, 1);
        assert!(!star.feasible(0));
        assert!(star.try_extend(4));
        assert!(!star.feasible(4));
    }

    #[test]
    fn empty_set_is_independent_and_errors_on_numbers() {
        let s = Subset::new(Group::parse("9").unwrap(), vec![]).unwrap();
        assert!(is_t_independent(&s, 5));
        assert!(is_weakly_t_independent(&s, 5));
        assert!(is_sum_free(&s));
        assert!(check(&s, 5, Mode::Strong).independent);
        assert!(matches!(
            weak_independence_number(&s),
            Err(Error::EmptySubset)
        ));
    }
}
