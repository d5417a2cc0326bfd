//! Explicit families of independent and weakly independent sets.
//!
//! Every constructor returns a [`Certificate`]: the set, the size it was
//! designed to reach, a floor that size is guaranteed to meet, and a
//! `verified` flag set by re-checking the set through the exact checkers in
//! [`crate::independence`]. Constructions never bypass verification —
//! a certificate is only as good as its flag.

use std::collections::HashSet;
use std::fmt;

use serde::Serialize;

use crate::bitset::ElemSet;
use crate::group::Group;
use crate::independence::{
    is_sum_free, is_t_independent, is_weakly_t_independent, Mode, SignedSumTable, StarSumTable,
    Subset,
};
use crate::num;
use crate::{Error, Result};

/// Which construction produced a certificate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Method {
    /// One representative of each `{x, -x}` pair outside the 2-torsion.
    Two,
    /// Fibers of a projection onto a cyclic quotient, split by exponent
    /// residue class.
    Three,
    /// Difference form of a greedy distinct-sums sequence in a cyclic group.
    Cyclic,
    /// Smallest-first greedy avoiding all low-weight root sets.
    Greedy,
    /// Smallest-first greedy avoiding all low-weight 0/±1 sums.
    GreedyWeak,
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Method::Two => "two",
            Method::Three => "three",
            Method::Cyclic => "cyclic",
            Method::Greedy => "greedy",
            Method::GreedyWeak => "greedy_weak",
        })
    }
}

/// A constructed set plus its promises and the exact checker's verdict.
#[derive(Debug, Clone)]
pub struct Certificate {
    pub group: Group,
    pub method: Method,
    pub mode: Mode,
    pub t: u64,
    /// Sorted element indices.
    pub members: Vec<u64>,
    /// Size the construction is designed to produce.
    pub expected_size: u64,
    /// Size every instance is guaranteed to reach (≤ expected).
    pub size_floor: u64,
    /// True when the exact checker confirms the property, the size matches
    /// `expected_size`, and the floor is met.
    pub verified: bool,
}

impl Certificate {
    pub fn size(&self) -> u64 {
        self.members.len() as u64
    }

    /// The members as a checked [`Subset`].
    pub fn subset(&self) -> Subset {
        Subset::new(self.group.clone(), self.members.clone())
            .expect("certificate members are valid, sorted, distinct indices")
    }
}

fn certify(
    group: &Group,
    method: Method,
    mode: Mode,
    t: u64,
    mut members: Vec<u64>,
    expected_size: u64,
    size_floor: u64,
) -> Certificate {
    members.sort_unstable();
    let subset = Subset::new(group.clone(), members.clone())
        .expect("constructions emit distinct in-range indices");
    let property_holds = match mode {
        Mode::Strong => is_t_independent(&subset, t),
        Mode::Weak => is_weakly_t_independent(&subset, t),
        Mode::SumFree => is_sum_free(&subset),
    };
    let size = members.len() as u64;
    Certificate {
        group: group.clone(),
        method,
        mode,
        t,
        members,
        expected_size,
        size_floor,
        verified: property_holds && size == expected_size && size >= size_floor,
    }
}

/// Maximum 2-independent set: one element of each `{x, -x}` pair with
/// `2x ≠ 0`. Always reaches `(n - |{x : 2x = 0}|) / 2`, which is optimal.
pub fn two_independent(group: &Group) -> Certificate {
    let n = group.order();
    let involutions = group.torsion_count(2);
    let members: Vec<u64> = (0..n)
        .filter(|&x| {
            let neg = group.neg_index(x);
            neg != x && x < neg
        })
        .collect();
    let expected = (n - involutions) / 2;
    certify(
        group,
        Method::Two,
        Mode::Strong,
        2,
        members,
        expected,
        expected,
    )
}

/// 3-independent set built from fibers of the projection onto the exponent
/// factor, case-split on the exponent `κ` mod 4:
///
/// - `κ ≡ 0`: the fibers with last coordinate `≡ 1 (mod 4)`, size `n/4`;
/// - `κ ≡ 2`: fibers with odd last coordinate below `κ/2`, plus a maximum
///   2-independent set of the complement factor lifted to the `κ/2` fiber,
///   size `(n - |{x : 2x = 0}|)/4`;
/// - `κ` odd: the full fibers of residues in the open interval
///   `(d/6, d/3)`, maximized over all divisors `d` of `κ`, size
///   `max_d #{j : d/6 < j < d/3} · n/d`.
pub fn three_independent(group: &Group) -> Certificate {
    let n = group.order();
    let kappa = group.exponent();
    let fibers = n / kappa;
    let (members, expected) = if kappa % 4 == 0 {
        let mut m = Vec::with_capacity((n / 4) as usize);
        for p in 0..fibers {
            let mut j = 1;
            while j < kappa {
                m.push(p * kappa + j);
                j += 4;
            }
        }
        (m, n / 4)
    } else if kappa % 2 == 0 {
        let mut m = Vec::new();
        for p in 0..fibers {
            let mut j = 1;
            while j < kappa / 2 {
                m.push(p * kappa + j);
                j += 2;
            }
        }
        if group.rank() > 1 {
            let prefix = Group::from_factors(&group.factors()[..group.rank() - 1])
                .expect("factors of a valid group stay valid");
            for &h in &two_independent(&prefix).members {
                m.push(h * kappa + kappa / 2);
            }
        }
        (m, (n - group.torsion_count(2)) / 4)
    } else {
        let (d, js) = best_odd_divisor_interval(kappa);
        let mut m = Vec::new();
        for p in 0..fibers {
            for c in 0..kappa {
                if js.contains(&(c % d)) {
                    m.push(p * kappa + c);
                }
            }
        }
        let expected = js.len() as u64 * (n / d);
        (m, expected)
    };
    certify(
        group,
        Method::Three,
        Mode::Strong,
        3,
        members,
        expected,
        expected,
    )
}

/// The divisor `d` of odd `κ` whose fiber residues `d/6 < j < d/3` cover
/// the most elements, with its residue set; smallest such `d` on ties.
fn best_odd_divisor_interval(kappa: u64) -> (u64, Vec<u64>) {
    let mut best: Option<(u64, u64, Vec<u64>)> = None; // (covered, d, js)
    for d in (1..=kappa).filter(|d| kappa % d == 0) {
        let js: Vec<u64> = (1..d).filter(|&j| 6 * j > d && 3 * j < d).collect();
        let covered = js.len() as u64 * (kappa / d);
        let better = match &best {
            None => true,
            Some((c, _, _)) => covered > *c,
        };
        if better {
            best = Some((covered, d, js));
        }
    }
    let (_, d, js) = best.expect("d = 1 always present");
    (d, js)
}

/// t-independent subset of `Z_n` from a greedy distinct-sums sequence:
/// with `q = ⌊n/t⌋` and `N = ⌊q / ⌈t/2⌉⌋`, take `{q - b}` over the greedy
/// `⌊t/2⌋`-fold-distinct-sums sequence up to `N`. Requires `3 ≤ t < n`.
pub fn cyclic_bh(n: u64, t: u64) -> Result<Certificate> {
    let group = Group::from_factors(&[n])?;
    if t < 3 || t >= n {
        return Err(Error::InvalidParameter(format!(
            "cyclic construction needs 3 <= t <= n-1, got t = {t}, n = {n}"
        )));
    }
    let q = n / t;
    let cap = q / t.div_ceil(2);
    let b = bh_sequence_greedy(t / 2, cap)?;
    let members: Vec<u64> = b.iter().rev().map(|&x| q - x).collect();
    let expected = members.len() as u64;
    Ok(certify(
        &group,
        Method::Cyclic,
        Mode::Strong,
        t,
        members,
        expected,
        expected,
    ))
}

/// Greedy t-independent set: repeatedly admit the smallest element outside
/// the forbidden set `C = ⋃_{h ≤ t} {x : h·x ∈ T}`, where `T` is the set of
/// signed sums of weight at most `t` over the members so far. Every
/// admitted element provably preserves t-independence, and the greedy
/// cannot stall before the counting floor `max{r : r^t·2σ ≤ n}` is reached.
pub fn greedy_independent(group: &Group, t: u64) -> Result<Certificate> {
    if t == 0 {
        return Err(Error::InvalidParameter(
            "greedy construction needs t >= 1".into(),
        ));
    }
    let n = group.order();
    // Levels up to `t` are needed, so size the table one past `t`.
    let mut table = SignedSumTable::new(group.clone(), t + 1);
    let mut members = Vec::new();
    loop {
        let mut avoid = ElemSet::new(n);
        for v in table.level(t).iter() {
            for h in 1..=t {
                for x in group.roots(h, v) {
                    avoid.insert(x);
                }
            }
        }
        match (0..n).find(|&x| !avoid.contains(x)) {
            Some(x) => {
                members.push(x);
                table.push(x);
            }
            None => break,
        }
    }
    let expected = members.len() as u64;
    let floor = num::general_floor(n, t, group.sigma(t));
    Ok(certify(
        group,
        Method::Greedy,
        Mode::Strong,
        t,
        members,
        expected,
        floor,
    ))
}

/// Greedy weakly t-independent set: repeatedly admit the smallest element
/// outside the set of 0/±1 sums of weight at most `t` over the members so
/// far. Cannot stall before the floor `min{w : (2w+t)^t > t!·n}`.
pub fn greedy_weakly_independent(group: &Group, t: u64) -> Result<Certificate> {
    if t == 0 {
        return Err(Error::InvalidParameter(
            "greedy construction needs t >= 1".into(),
        ));
    }
    let n = group.order();
    let mut table = StarSumTable::new(group.clone(), t + 1);
    let mut members = Vec::new();
    while let Some(x) = (0..n).find(|&x| !table.level(t).contains(x)) {
        members.push(x);
        table.push(x);
    }
    let expected = members.len() as u64;
    let floor = num::weakly_floor(n, t);
    Ok(certify(
        group,
        Method::GreedyWeak,
        Mode::Weak,
        t,
        members,
        expected,
        floor,
    ))
}

/// Greedy integer sequence whose `h`-element multiset sums are pairwise
/// distinct: scan `c = 1, 2, …, limit` and admit `c` whenever distinctness
/// survives. (For `h = 2` this is the classic greedy Sidon sequence
/// 1, 2, 4, 8, 13, 21, ….)
pub fn bh_sequence_greedy(h: u64, limit: u64) -> Result<Vec<u64>> {
    if h == 0 {
        return Err(Error::InvalidParameter(
            "distinct-sums order h must be >= 1".into(),
        ));
    }
    let h = h as usize;
    // sums[k] holds all k-element multiset sums over the members so far;
    // they are pairwise distinct because the members stay h-fold-distinct
    // (shared k-sums would lift to shared h-sums by padding).
    let mut sums: Vec<Vec<u64>> = (0..=h)
        .map(|k| if k == 0 { vec![0] } else { Vec::new() })
        .collect();
    let mut members: Vec<u64> = Vec::new();
    let mut seen: HashSet<u64> = HashSet::new();
    for c in 1..=limit {
        seen.clear();
        seen.extend(sums[h].iter().copied());
        let mut ok = true;
        'admission: for j in 1..=h {
            // Sums using exactly j copies of c, one per (h-j)-sum of the
            // old members; distinct j never produce equal values twice
            // within themselves, so a clash is a genuine collision.
            for &s in &sums[h - j] {
                if !seen.insert(j as u64 * c + s) {
                    ok = false;
                    break 'admission;
                }
            }
        }
        if !ok {
            continue;
        }
        for k in (1..=h).rev() {
            for j in 1..=k {
                let (lo, hi) = sums.split_at_mut(k);
                let adds: Vec<u64> = lo[k - j].iter().map(|&s| j as u64 * c + s).collect();
                hi[0].extend(adds);
            }
        }
        members.push(c);
    }
    Ok(members)
}

/// Brute-force check that all `h`-element multiset sums of `members` are
/// pairwise distinct. Test-oriented; exponential in `h`.
pub fn is_bh_sequence(members: &[u64], h: u64) -> bool {
    fn rec(members: &[u64], start: usize, left: u64, acc: u64, seen: &mut HashSet<u64>) -> bool {
        if left == 0 {
            return seen.insert(acc);
        }
        for i in start..members.len() {
            if !rec(members, i, left - 1, acc + members[i], seen) {
                return false;
            }
        }
        true
    }
    let mut seen = HashSet::new();
    rec(members, 0, h, 0, &mut seen)
}
