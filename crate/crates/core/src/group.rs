//! Finite abelian groups in invariant-factor form.
//!
//! A group is a product `Z_{d_1} × … × Z_{d_r}` with `2 ≤ d_1 | d_2 | … | d_r`
//! (the invariant factors). Any list of cyclic factors is canonicalized into
//! this form on construction, so `4x6` and `2x12` denote the same group and
//! compare equal. Elements are coordinate vectors, addressed either as such
//! or through a mixed-radix *index* in `0..order` with the first coordinate
//! most significant; all hot-path arithmetic works on indices.

use std::fmt;

use serde::Serialize;

use crate::bitset::ElemSet;
use crate::{Error, Result};

/// Largest supported group order.
pub const MAX_ORDER: u64 = 1_000_000;

/// Element of a finite abelian group, stored as one coordinate per
/// invariant factor.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(transparent)]
pub struct Element {
    coords: Vec<u64>,
}

impl Element {
    /// The coordinate vector, one entry per invariant factor.
    pub fn coords(&self) -> &[u64] {
        &self.coords
    }
}

impl fmt::Display for Element {
    /// Comma-joined coordinates: `7` for rank one, `1,3` for rank two.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, c) in self.coords.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

/// Finite abelian group in canonical invariant-factor form.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Group {
    factors: Vec<u64>,
    strides: Vec<u64>,
    order: u64,
}

impl Group {
    /// Parses a specification like `"9"` or `"4x6"` (factors separated by
    /// `x`, whitespace tolerated) and canonicalizes it.
    pub fn parse(spec: &str) -> Result<Group> {
        let trimmed = spec.trim();
        if trimmed.is_empty() {
            return Err(Error::EmptyGroupSpec);
        }
        let mut factors = Vec::new();
        for token in trimmed.split(['x', 'X']) {
            let token = token.trim();
            let value: u64 = token
                .parse()
                .map_err(|_| Error::InvalidFactor(token.to_string()))?;
            factors.push(value);
        }
        Group::from_factors(&factors)
    }

    /// Builds a group from cyclic factors in any order, canonicalizing to
    /// invariant-factor form. Every factor must be at least 2 and the order
    /// must not exceed [`MAX_ORDER`].
    pub fn from_factors(factors: &[u64]) -> Result<Group> {
        if factors.is_empty() {
            return Err(Error::EmptyGroupSpec);
        }
        let mut order: u128 = 1;
        for &d in factors {
            if d < 2 {
                return Err(Error::FactorTooSmall(d));
            }
            order *= d as u128;
            if order > MAX_ORDER as u128 {
                return Err(Error::OrderTooLarge {
                    order,
                    limit: MAX_ORDER,
                });
            }
        }
        let factors = canonical_invariant_factors(factors);
        let mut strides = vec![1u64; factors.len()];
        for i in (0..factors.len().saturating_sub(1)).rev() {
            strides[i] = strides[i + 1] * factors[i + 1];
        }
        Ok(Group {
            factors,
            strides,
            order: order as u64,
        })
    }

    /// The invariant factors `d_1 | d_2 | … | d_r`.
    pub fn factors(&self) -> &[u64] {
        &self.factors
    }

    /// Number of invariant factors.
    pub fn rank(&self) -> usize {
        self.factors.len()
    }

    /// Group order `n = Π d_i`.
    pub fn order(&self) -> u64 {
        self.order
    }

    /// Group exponent (largest element order), i.e. the last invariant factor.
    pub fn exponent(&self) -> u64 {
        *self
            .factors
            .last()
            .expect("groups have at least one factor")
    }

    /// Canonical specification string, e.g. `"2x12"`.
    pub fn spec_string(&self) -> String {
        self.to_string()
    }

    /// Validates a coordinate vector and wraps it as an [`Element`].
    pub fn element_from_coords(&self, coords: &[u64]) -> Result<Element> {
        if coords.len() != self.factors.len() {
            return Err(Error::RankMismatch {
                expected: self.factors.len(),
                got: coords.len(),
            });
        }
        for (&c, &d) in coords.iter().zip(&self.factors) {
            if c >= d {
                return Err(Error::CoordOutOfRange {
                    value: c,
                    factor: d,
                });
            }
        }
        Ok(Element {
            coords: coords.to_vec(),
        })
    }

    /// Decodes a mixed-radix index into an element.
    pub fn element(&self, index: u64) -> Result<Element> {
        if index >= self.order {
            return Err(Error::IndexOutOfRange {
                index,
                order: self.order,
            });
        }
        let mut coords = Vec::with_capacity(self.factors.len());
        let mut rest = index;
        for &s in &self.strides {
            coords.push(rest / s);
            rest %= s;
        }
        Ok(Element { coords })
    }

    /// All elements in canonical (index) order.
    pub fn elements(&self) -> impl Iterator<Item = Element> + '_ {
        (0..self.order).map(|i| self.element(i).expect("index in range"))
    }

    /// Encodes an element back into its mixed-radix index.
    pub fn index_of(&self, element: &Element) -> Result<u64> {
        // Re-validate so indices built from foreign elements cannot alias.
        let e = self.element_from_coords(&element.coords)?;
        Ok(e.coords
            .iter()
            .zip(&self.strides)
            .map(|(&c, &s)| c * s)
            .sum())
    }

    /// Index of the sum of two elements given by index.
    #[inline]
    pub fn add_index(&self, a: u64, b: u64) -> u64 {
        debug_assert!(a < self.order && b < self.order);
        let (mut ra, mut rb, mut out) = (a, b, 0);
        for (&d, &s) in self.factors.iter().zip(&self.strides) {
            let (ca, cb) = (ra / s, rb / s);
            ra %= s;
            rb %= s;
            let mut c = ca + cb;
            if c >= d {
                c -= d;
            }
            out += c * s;
        }
        out
    }

    /// Index of the additive inverse of the element with the given index.
    #[inline]
    pub fn neg_index(&self, a: u64) -> u64 {
        debug_assert!(a < self.order);
        let (mut ra, mut out) = (a, 0);
        for (&d, &s) in self.factors.iter().zip(&self.strides) {
            let c = ra / s;
            ra %= s;
            if c != 0 {
                out += (d - c) * s;
            }
        }
        out
    }

    /// Index of `a - b` for elements given by index.
    #[inline]
    pub fn sub_index(&self, a: u64, b: u64) -> u64 {
        self.add_index(a, self.neg_index(b))
    }

    /// Index of `k·a` for a (possibly negative) integer scalar.
    #[inline]
    pub fn scalar_mul_index(&self, k: i64, a: u64) -> u64 {
        debug_assert!(a < self.order);
        let (mut ra, mut out) = (a, 0);
        for (&d, &s) in self.factors.iter().zip(&self.strides) {
            let c = ra / s;
            ra %= s;
            let kc = (k.rem_euclid(d as i64) as u64) * c % d;
            out += kc * s;
        }
        out
    }

    /// Multiplicative order of the element with the given index.
    pub fn order_of_index(&self, a: u64) -> u64 {
        debug_assert!(a < self.order);
        let (mut ra, mut ord) = (a, 1u64);
        for (&d, &s) in self.factors.iter().zip(&self.strides) {
            let c = ra / s;
            ra %= s;
            ord = lcm(ord, d / gcd(d, c));
        }
        ord
    }

    /// Number of elements `x` with `h·x = 0`, i.e. `Π gcd(h, d_i)`.
    pub fn torsion_count(&self, h: u64) -> u64 {
        self.factors.iter().map(|&d| gcd(h, d)).product()
    }

    /// Ascending indices of all `x` with `h·x = 0`.
    pub fn torsion_indices(&self, h: u64) -> Vec<u64> {
        let per_factor: Vec<Vec<u64>> = self
            .factors
            .iter()
            .map(|&d| {
                let g = gcd(h, d);
                let step = d / g;
                (0..g).map(|k| k * step).collect()
            })
            .collect();
        self.cartesian_indices(&per_factor)
    }

    /// Ascending indices of all `x` with `h·x = g` for the target element
    /// given by index. Empty when the congruence has no solution.
    pub fn roots(&self, h: u64, target: u64) -> Vec<u64> {
        debug_assert!(target < self.order);
        let mut rest = target;
        let mut per_factor = Vec::with_capacity(self.factors.len());
        for (&d, &s) in self.factors.iter().zip(&self.strides) {
            let c = rest / s;
            rest %= s;
            match solve_linear_congruence(h, c, d) {
                Some(sols) => per_factor.push(sols),
                None => return Vec::new(),
            }
        }
        self.cartesian_indices(&per_factor)
    }

    /// Union of the torsion sets for every weight `1..=t`, as a bitset.
    pub fn ord_set(&self, t: u64) -> ElemSet {
        let mut set = ElemSet::new(self.order);
        set.insert(0);
        for h in 1..=t {
            for idx in self.torsion_indices(h) {
                set.insert(idx);
            }
        }
        set
    }

    /// `Σ_{h=1..t} |{x : h·x = 0}|`, computed without materializing the sets.
    pub fn sigma(&self, t: u64) -> u64 {
        (1..=t).map(|h| self.torsion_count(h)).sum()
    }

    /// All indices, product of per-factor ascending choice lists; ascending
    /// because the first coordinate is the most significant index digit.
    fn cartesian_indices(&self, per_factor: &[Vec<u64>]) -> Vec<u64> {
        fn rec(
            per_factor: &[Vec<u64>],
            strides: &[u64],
            depth: usize,
            acc: u64,
            out: &mut Vec<u64>,
        ) {
            if depth == per_factor.len() {
                out.push(acc);
                return;
            }
            for &c in &per_factor[depth] {
                rec(
                    per_factor,
                    strides,
                    depth + 1,
                    acc + c * strides[depth],
                    out,
                );
            }
        }
        let total: usize = per_factor.iter().map(Vec::len).product();
        let mut out = Vec::with_capacity(total);
        rec(per_factor, &self.strides, 0, 0, &mut out);
        out
    }
}

impl fmt::Display for Group {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, d) in self.factors.iter().enumerate() {
            if i > 0 {
                write!(f, "x")?;
            }
            write!(f, "{d}")?;
        }
        Ok(())
    }
}

impl Serialize for Group {
    fn serialize<S: serde::Serializer>(
        &self,
        serializer: S,
    ) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// Greatest common divisor; `gcd(0, b) = b`.
pub(crate) fn gcd(a: u64, b: u64) -> u64 {
    let (mut a, mut b) = (a, b);
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Least common multiple of two nonzero values.
pub(crate) fn lcm(a: u64, b: u64) -> u64 {
    a / gcd(a, b) * b
}

/// Reduces arbitrary cyclic factors to ascending invariant factors by
/// repeatedly replacing a non-dividing pair with (gcd, lcm); the product is
/// preserved and the process terminates because each swap strictly grows
/// the multiset of pairwise lcms. Unit factors are dropped.
fn canonical_invariant_factors(factors: &[u64]) -> Vec<u64> {
    let mut f: Vec<u64> = factors.to_vec();
    loop {
        let mut changed = false;
        for i in 0..f.len() {
            for j in (i + 1)..f.len() {
                let (a, b) = (f[i], f[j]);
                if a % b != 0 && b % a != 0 {
                    f[i] = gcd(a, b);
                    f[j] = lcm(a, b);
                    changed = true;
                }
            }
        }
        if !changed {
            break;
        }
    }
    f.retain(|&d| d > 1);
    f.sort_unstable();
    // After the loop every pair divides one way; ascending order makes each
    // factor divide the next.
    debug_assert!(f.windows(2).all(|w| w[1] % w[0] == 0));
    f
}

/// Sorted solutions of `h·x ≡ c (mod d)` in `0..d`, or `None` if unsolvable.
fn solve_linear_congruence(h: u64, c: u64, d: u64) -> Option<Vec<u64>> {
    let g = gcd(h, d);
    if c % g != 0 {
        return None;
    }
    let m = d / g;
    let x0 = if m == 1 {
        0
    } else {
        c / g % m * mod_inverse(h / g % m, m)? % m
    };
    Some((0..g).map(|k| x0 + k * m).collect())
}

/// Modular inverse of `a` modulo `m` via the extended Euclidean algorithm.
fn mod_inverse(a: u64, m: u64) -> Option<u64> {
    if m == 1 {
        return Some(0);
    }
    let (mut old_r, mut r) = (a as i128, m as i128);
    let (mut old_s, mut s) = (1i128, 0i128);
    while r != 0 {
        let q = old_r / r;
        (old_r, r) = (r, old_r - q * r);
        (old_s, s) = (s, old_s - q * s);
    }
    if old_r != 1 {
        return None;
    }
    Some(old_s.rem_euclid(m as i128) as u64)
}
