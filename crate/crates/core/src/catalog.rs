//! Enumeration of all finite abelian groups of a given order.
//!
//! Every finite abelian group of order `n = Π p_i^{e_i}` decomposes as a
//! direct product, over the primes `p_i`, of groups `Z_{p^λ1} × Z_{p^λ2} × …`
//! where `λ` is a partition of `e_i`. Choosing one partition per prime and
//! merging the prime-power cyclic factors into invariant-factor form yields
//! each isomorphism class exactly once, so the number of groups of order `n`
//! is the product of the partition counts of the exponents.

use crate::group::Group;
use crate::{Error, Result};

/// All abelian groups of order `n`, each in invariant-factor form, in a
/// deterministic order (sorted by their factor vectors).
pub fn abelian_groups_of_order(n: u64) -> Result<Vec<Group>> {
    if n == 0 {
        return Err(Error::InvalidParameter(
            "group order must be positive".into(),
        ));
    }
    if n > crate::group::MAX_ORDER {
        return Err(Error::OrderTooLarge {
            order: n as u128,
            limit: crate::group::MAX_ORDER,
        });
    }
    if n == 1 {
        return Err(Error::InvalidParameter(
            "the trivial group has no invariant factors".into(),
        ));
    }
    // One list of candidate prime-power factor multisets per prime.
    let mut per_prime: Vec<Vec<Vec<u64>>> = Vec::new();
    for (p, e) in factorize(n) {
        let powers = partitions(e)
            .into_iter()
            .map(|parts| parts.into_iter().map(|k| p.pow(k)).collect::<Vec<u64>>())
            .collect();
        per_prime.push(powers);
    }
    let mut factor_lists: Vec<Vec<u64>> = Vec::new();
    let mut choice = Vec::new();
    pick(&per_prime, 0, &mut choice, &mut factor_lists);
    let mut groups: Vec<Group> = factor_lists
        .into_iter()
        .map(|fs| Group::from_factors(&fs))
        .collect::<Result<_>>()?;
    groups.sort_by(|a, b| a.factors().cmp(b.factors()));
    groups.dedup_by(|a, b| a.factors() == b.factors());
    Ok(groups)
}

/// All abelian groups of order 2 through `max_order` inclusive, ordered by
/// order and then by factor vector.
pub fn abelian_groups_up_to(max_order: u64) -> Result<Vec<Group>> {
    let mut out = Vec::new();
    for n in 2..=max_order {
        out.extend(abelian_groups_of_order(n)?);
    }
    Ok(out)
}

/// Number of abelian groups of order `n`: the product over primes `p^e | n`
/// of the partition count of `e`.
pub fn count_abelian_groups(n: u64) -> u64 {
    if n == 0 {
        return 0;
    }
    factorize(n)
        .into_iter()
        .map(|(_, e)| partitions(e).len() as u64)
        .product()
}

fn pick(per_prime: &[Vec<Vec<u64>>], i: usize, choice: &mut Vec<u64>, out: &mut Vec<Vec<u64>>) {
    if i == per_prime.len() {
        out.push(choice.clone());
        return;
    }
    for powers in &per_prime[i] {
        let mark = choice.len();
        choice.extend_from_slice(powers);
        pick(per_prime, i + 1, choice, out);
        choice.truncate(mark);
    }
}

/// Prime factorization as (prime, exponent) pairs, ascending.
fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            let mut e = 0;
            while n % p == 0 {
                n /= p;
                e += 1;
            }
            out.push((p, e));
        }
        p += 1;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

/// All partitions of `e` as non-increasing part lists.
fn partitions(e: u32) -> Vec<Vec<u32>> {
    fn rec(remaining: u32, max_part: u32, acc: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if remaining == 0 {
            out.push(acc.clone());
            return;
        }
        let mut part = remaining.min(max_part);
        while part >= 1 {
            acc.push(part);
            rec(remaining - part, part, acc, out);
            acc.pop();
            part -= 1;
        }
    }
    let mut out = Vec::new();
    rec(e, e, &mut Vec::new(), &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn partition_counts() {
        assert_eq!(partitions(1).len(), 1);
        assert_eq!(partitions(2).len(), 2);
        assert_eq!(partitions(3).len(), 3);
        assert_eq!(partitions(4).len(), 5);
        assert_eq!(partitions(5).len(), 7);
        assert_eq!(partitions(6).len(), 11);
    }

    #[test]
    fn known_group_counts() {
        for (n, c) in [
            (2, 1),
            (8, 3),
            (16, 5),
            (24, 3),
            (36, 4),
            (48, 5),
            (60, 2),
            (64, 11),
        ] {
            assert_eq!(count_abelian_groups(n), c, "order {n}");
            assert_eq!(
                abelian_groups_of_order(n).unwrap().len() as u64,
                c,
                "order {n}"
            );
        }
    }

    #[test]
    fn enumeration_matches_count_everywhere() {
        for n in 2..=100 {
            let groups = abelian_groups_of_order(n).unwrap();
            assert_eq!(groups.len() as u64, count_abelian_groups(n), "order {n}");
            for g in &groups {
                assert_eq!(g.order(), n);
                // Invariant-factor form: a divisibility chain.
                let fs = g.factors();
                for w in fs.windows(2) {
                    assert_eq!(w[1] % w[0], 0);
                }
            }
        }
    }

    #[test]
    fn order_eight_groups() {
        let groups = abelian_groups_of_order(8).unwrap();
        let specs: Vec<String> = groups.iter().map(|g| g.to_string()).collect();
        assert_eq!(specs, ["2x2x2", "2x4", "8"]);
    }

    #[test]
    fn catalog_up_to_24() {
        let groups = abelian_groups_up_to(24).unwrap();
        assert_eq!(groups.len(), 36);
        // Ordered by order, then by factor vector.
        let mut sorted = groups.clone();
        sorted.sort_by(|a, b| a.order().cmp(&b.order()).then(a.factors().cmp(b.factors())));
        for (a, b) in groups.iter().zip(&sorted) {
            assert_eq!(a.factors(), b.factors());
        }
    }

    #[test]
    fn rejects_bad_orders() {
        assert!(abelian_groups_of_order(0).is_err());
        assert!(abelian_groups_of_order(1).is_err());
    }
}
