//! Closed-form exact values and certified lower/upper bounds.
//!
//! Everything here is straight arithmetic over the group invariants — no
//! search. The test suite cross-checks these values against the exhaustive
//! search module, which derives the same quantities by a completely
//! different route.
//!
//! Exact values exist for weights 0, 1, 2 (both notions), for weight 3 in
//! most exponent classes, and whenever the weight reaches the exponent.
//! Elsewhere [`s_bounds`] / [`w_bounds`] / [`sf_bounds`] return the best
//! certified sandwich, each bound labeled with the mechanism that proves it.

use serde::Serialize;

use crate::constructions;
use crate::group::Group;
use crate::independence::Mode;
use crate::num;

/// Direction of a bound entry.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum BoundKind {
    Lower,
    Upper,
    Exact,
}

/// One certified bound plus the mechanism that justifies it.
#[derive(Debug, Clone, Serialize)]
pub struct BoundEntry {
    pub kind: BoundKind,
    pub value: u64,
    pub source: &'static str,
}

/// Best certified sandwich for one quantity; `exact` is set when the
/// bounds meet.
#[derive(Debug, Clone, Serialize)]
pub struct BoundsReport {
    pub group: Group,
    pub t: u64,
    pub mode: Mode,
    pub lower: u64,
    pub upper: u64,
    pub exact: Option<u64>,
    pub entries: Vec<BoundEntry>,
}

impl BoundsReport {
    fn assemble(group: &Group, t: u64, mode: Mode, entries: Vec<BoundEntry>) -> BoundsReport {
        let mut lower = 0;
        let mut upper = u64::MAX;
        for e in &entries {
            match e.kind {
                BoundKind::Lower => lower = lower.max(e.value),
                BoundKind::Upper => upper = upper.min(e.value),
                BoundKind::Exact => {
                    lower = lower.max(e.value);
                    upper = upper.min(e.value);
                }
            }
        }
        debug_assert!(lower <= upper, "inconsistent bounds {lower} > {upper}");
        BoundsReport {
            group: group.clone(),
            t,
            mode,
            lower,
            upper,
            exact: (lower == upper).then_some(lower),
            entries,
        }
    }

    /// The entry with the given source label, if present.
    pub fn entry(&self, source: &str) -> Option<&BoundEntry> {
        self.entries.iter().find(|e| e.source == source)
    }
}

/// Exact maximum size of a t-independent set, where a closed form is known.
///
/// Covered: `t = 0` (everything), `t = 1` (everything but 0), `t ≥ exponent`
/// (nothing), `t = 2` (half the non-involutions), and `t = 3` for exponent
/// `κ ≡ 0, 2 (mod 4)`, for odd `κ` divisible by a prime `p ≡ 5 (mod 6)`,
/// and for the remaining odd case when the fiber count pinches against
/// `⌊n/6⌋`. Returns `None` outside those cases.
pub fn s_exact(group: &Group, t: u64) -> Option<u64> {
    let n = group.order();
    let kappa = group.exponent();
    match t {
        0 => Some(n),
        1 => Some(n - 1),
        _ if t >= kappa => Some(0),
        2 => Some((n - group.torsion_count(2)) / 2),
        3 => {
            if kappa % 4 == 0 {
                Some(n / 4)
            } else if kappa % 2 == 0 {
                Some((n - group.torsion_count(2)) / 4)
            } else if let Some(p) = smallest_prime_5_mod_6(kappa) {
                Some((p + 1) * n / (6 * p))
            } else if (kappa / 6) * (n / kappa) == n / 6 {
                Some(n / 6)
            } else {
                None
            }
        }
        _ => None,
    }
}

/// Exact maximum size of a 3-independent subset of `Z_n`: `⌊n/4⌋` for even
/// `n`, `(p+1)n/(6p)` for odd `n` with smallest prime factor `p ≡ 5 (mod 6)`,
/// and `⌊n/6⌋` for the remaining odd `n`.
pub fn s_cyclic_three(n: u64) -> u64 {
    if n % 2 == 0 {
        n / 4
    } else if let Some(p) = smallest_prime_5_mod_6(n) {
        (p + 1) * n / (6 * p)
    } else {
        n / 6
    }
}

/// Exact maximum size of a weakly t-independent set for `t ≤ 2`:
/// `n`, `n - 1`, and `(n + |{x : 2x = 0}| - 2) / 2` respectively.
pub fn w_exact(group: &Group, t: u64) -> Option<u64> {
    let n = group.order();
    match t {
        0 => Some(n),
        1 => Some(n - 1),
        2 => Some((n + group.torsion_count(2) - 2) / 2),
        _ => None,
    }
}

/// Upper size cap for t-independent sets: signed sums of weight up to
/// `⌊t/2⌋` are pairwise distinct, so `2·C(m+⌊t/2⌋, ⌊t/2⌋) - 1 ≤ n`.
pub fn strong_counting_cap(n: u64, t: u64) -> u64 {
    num::strong_size_cap(n, t)
}

/// Upper size cap for weakly t-independent sets: 0/1 sums of up to
/// `⌊t/2⌋` members are pairwise distinct, so `Σ_{h ≤ ⌊t/2⌋} C(m,h) ≤ n`.
pub fn weak_counting_cap(n: u64, t: u64) -> u64 {
    num::weak_size_cap(n, t)
}

/// Guaranteed size of a greedily built t-independent set (`t ≥ 1`):
/// the largest `r` with `r^t · 2σ(G,t) ≤ n`.
pub fn general_size_floor(group: &Group, t: u64) -> u64 {
    num::general_floor(group.order(), t, group.sigma(t))
}

/// Guaranteed size of a greedily built weakly t-independent set (`t ≥ 1`):
/// the largest `m` with `(2m-2+t)^t < t! · n`.
pub fn weakly_size_floor(n: u64, t: u64) -> u64 {
    num::weakly_floor(n, t)
}

/// Certified bounds on the maximum t-independent set size.
pub fn s_bounds(group: &Group, t: u64) -> BoundsReport {
    let n = group.order();
    let kappa = group.exponent();
    let mut entries = Vec::new();
    if let Some(v) = s_exact(group, t) {
        let source = match t {
            0 => "whole_group",
            1 => "nonzero_elements",
            _ if t >= kappa => "exponent_collapse",
            2 => "pair_classes",
            _ => "fiber_cases",
        };
        entries.push(BoundEntry {
            kind: BoundKind::Exact,
            value: v,
            source,
        });
    }
    if t >= 1 && t < kappa {
        entries.push(BoundEntry {
            kind: BoundKind::Lower,
            value: general_size_floor(group, t),
            source: "counting_floor",
        });
        if t == 3 {
            let c = constructions::three_independent(group);
            entries.push(BoundEntry {
                kind: BoundKind::Lower,
                value: c.expected_size,
                source: "fiber_construction",
            });
            // Partitioning into cosets caps a weight-3-free set at n/6,
            // or (1+1/p)n/6 when a divisor p ≡ 2 (mod 3) exists.
            let coset_cap = match smallest_divisor_2_mod_3(n) {
                Some(p) => (p + 1) * n / (6 * p),
                None => n / 6,
            };
            entries.push(BoundEntry {
                kind: BoundKind::Upper,
                value: coset_cap,
                source: "coset_partition",
            });
            if kappa % 4 == 2 {
                entries.push(BoundEntry {
                    kind: BoundKind::Upper,
                    value: (n - group.torsion_count(2)) / 4,
                    source: "involution_count",
                });
            }
        }
        if group.rank() == 1 && t >= 3 {
            let c = constructions::cyclic_bh(n, t).expect("3 <= t < kappa = n here");
            entries.push(BoundEntry {
                kind: BoundKind::Lower,
                value: c.expected_size,
                source: "difference_sequence",
            });
        }
        entries.push(BoundEntry {
            kind: BoundKind::Upper,
            value: strong_counting_cap(n, t),
            source: "signed_sum_count",
        });
    }
    BoundsReport::assemble(group, t, Mode::Strong, entries)
}

/// Certified bounds on the maximum weakly t-independent set size.
pub fn w_bounds(group: &Group, t: u64) -> BoundsReport {
    let n = group.order();
    let mut entries = Vec::new();
    if let Some(v) = w_exact(group, t) {
        let source = match t {
            0 => "whole_group",
            1 => "nonzero_elements",
            _ => "pair_classes",
        };
        entries.push(BoundEntry {
            kind: BoundKind::Exact,
            value: v,
            source,
        });
    }
    if t >= 1 {
        entries.push(BoundEntry {
            kind: BoundKind::Lower,
            value: weakly_size_floor(n, t),
            source: "weak_counting_floor",
        });
        entries.push(BoundEntry {
            kind: BoundKind::Lower,
            value: group.rank() as u64,
            source: "generator_set",
        });
        entries.push(BoundEntry {
            kind: BoundKind::Lower,
            value: num::ceil_log(group.exponent(), n),
            source: "exponent_log",
        });
        entries.push(BoundEntry {
            kind: BoundKind::Upper,
            value: weak_counting_cap(n, t),
            source: "star_sum_count",
        });
    }
    BoundsReport::assemble(group, t, Mode::Weak, entries)
}

/// Certified bounds on the maximum sum-free set size: `n/2` exactly for
/// even exponent; fiber-interval lower bound and `⌊n/2⌋` upper otherwise.
pub fn sf_bounds(group: &Group) -> BoundsReport {
    let n = group.order();
    let kappa = group.exponent();
    let mut entries = Vec::new();
    if kappa % 2 == 0 {
        entries.push(BoundEntry {
            kind: BoundKind::Exact,
            value: n / 2,
            source: "odd_fiber",
        });
    } else {
        entries.push(BoundEntry {
            kind: BoundKind::Lower,
            value: (n / kappa) * ((kappa + 1) / 3),
            source: "middle_interval",
        });
    }
    entries.push(BoundEntry {
        kind: BoundKind::Lower,
        value: (2 * n).div_ceil(7),
        source: "general_fraction",
    });
    entries.push(BoundEntry {
        kind: BoundKind::Upper,
        value: n / 2,
        source: "doubling_count",
    });
    BoundsReport::assemble(group, 0, Mode::SumFree, entries)
}

/// Smallest divisor of `n` congruent to 2 (mod 3), if any. Such a divisor,
/// when it exists, is always prime: any composite one has a prime factor in
/// the same residue class.
fn smallest_divisor_2_mod_3(n: u64) -> Option<u64> {
    if n % 2 == 0 {
        Some(2)
    } else {
        // Odd primes ≡ 2 (mod 3) are exactly the primes ≡ 5 (mod 6).
        smallest_prime_5_mod_6(n)
    }
}

/// Smallest prime `p ≡ 5 (mod 6)` dividing `m`, if any.
fn smallest_prime_5_mod_6(m: u64) -> Option<u64> {
    let mut m = m;
    let mut p = 2;
    let mut found = None;
    while p * p <= m {
        if m % p == 0 {
            if p % 6 == 5 && found.is_none() {
                found = Some(p);
            }
            while m % p == 0 {
                m /= p;
            }
            if found.is_some() {
                return found;
            }
        }
        p += 1;
    }
    if m > 1 && m % 6 == 5 {
        found = found.or(Some(m));
    }
    found
}
