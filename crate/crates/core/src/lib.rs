//! Independence numbers of subsets of finite abelian groups.
//!
//! A subset `A` of a finite abelian group `G` is *t-independent* if no
//! nonzero integer coefficient vector `λ` with `Σ|λ_i| ≤ t` satisfies
//! `Σ λ_i·a_i = 0`, and *weakly t-independent* if the same holds with every
//! coefficient restricted to `{-1, 0, 1}`. This crate provides:
//!
//! - [`group`]: finite abelian groups in invariant-factor form, with
//!   mixed-radix element indexing, torsion subgroups, and root solving;
//! - [`independence`]: exact checkers for both notions, incremental
//!   feasibility tables for extending sets one element at a time, and the
//!   independence / weak-independence numbers of a given subset;
//! - [`search`]: exhaustive branch-and-bound maximization of t-independent,
//!   weakly t-independent, and sum-free sets, with deterministic witnesses,
//!   optional parallelism, and a node budget;
//! - [`constructions`]: explicit families (pairing, coset fibers, greedy
//!   Sidon-type sequences, greedy avoidance) emitted as verified
//!   [`Certificate`](constructions::Certificate)s;
//! - [`formulas`]: closed-form exact values where known and certified
//!   lower/upper bounds elsewhere, each bound labeled with its origin;
//! - [`catalog`]: enumeration of all abelian groups up to a given order.
//!
//! Search and formulas are independent routes to the same quantities; the
//! test suite cross-checks them against each other and against a
//! brute-force oracle.
//!
//! # Example
//!
//! ```
//! use tindep::{independence, search, Group, SearchOptions, Subset};
//!
//! let g = Group::parse("30")?; // Z_30
//! let a = Subset::new(g.clone(), vec![1, 2, 4, 8, 16])?;
//!
//! // Largest t with A t-independent, and the weak analogue.
//! assert_eq!(independence::independence_number(&a)?, 2);
//! assert_eq!(independence::weak_independence_number(&a)?.to_string(), "3");
//!
//! // Maximum 3-independent set in Z_30, by exact search.
//! let r = search::max_independent(&g, 3, &SearchOptions::default());
//! assert_eq!(r.max_size, 7);
//! # Ok::<(), tindep::Error>(())
//! ```

pub mod bitset;
pub mod catalog;
pub mod constructions;
pub mod formulas;
pub mod group;
pub mod independence;
mod num;
pub mod search;

pub use group::{Element, Group};
pub use independence::{IndependenceReport, Subset, ViolatingVector};
pub use search::{SearchOptions, SearchResult, SearchStatus};

/// Errors for malformed groups, elements, subsets, or operation parameters.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("empty group specification")]
    EmptyGroupSpec,
    #[error("invalid factor `{0}` in group specification")]
    InvalidFactor(String),
    #[error("cyclic factor {0} is smaller than 2")]
    FactorTooSmall(u64),
    #[error("group order {order} exceeds the supported limit {limit}")]
    OrderTooLarge { order: u128, limit: u64 },
    #[error("element has {got} coordinates but the group has rank {expected}")]
    RankMismatch { expected: usize, got: usize },
    #[error("coordinate {value} is out of range for cyclic factor {factor}")]
    CoordOutOfRange { value: u64, factor: u64 },
    #[error("element index {index} is out of range for a group of order {order}")]
    IndexOutOfRange { index: u64, order: u64 },
    #[error("subset lists element {0} more than once")]
    DuplicateMember(String),
    #[error("operation requires a nonempty subset")]
    EmptySubset,
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
}

/// Convenience alias used throughout the crate.
pub type Result<T> = std::result::Result<T, Error>;
