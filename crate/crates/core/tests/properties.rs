//! Randomized invariants tying the independent code paths together: the
//! definition-direct checker, the sumset-condition routes, the incremental
//! tables, the search engine, and the closed-form constructions must all
//! agree wherever their domains overlap.

mod common;

use proptest::prelude::*;
use tindep::constructions;
use tindep::group::Group;
use tindep::independence::{self, Mode, SignedSumTable, StarSumTable, Subset, Wind};
use tindep::search::{self, SearchOptions};

/// Strategy: a canonical group with order at most `max_order`.
fn small_group(max_order: u64) -> impl Strategy<Value = Group> {
    prop::collection::vec(2u64..=12, 1..=3)
        .prop_map(|fs| Group::from_factors(&fs).expect("factors in range"))
        .prop_filter("order cap", move |g| g.order() <= max_order)
}

/// Strategy: a group plus a subset of up to `max_members` element indices.
fn group_and_members(
    max_order: u64,
    max_members: usize,
) -> impl Strategy<Value = (Group, Vec<u64>)> {
    small_group(max_order).prop_flat_map(move |g| {
        let order = g.order();
        prop::collection::btree_set(0..order, 0..=max_members)
            .prop_map(move |s| (g.clone(), s.into_iter().collect()))
    })
}

fn subset(group: &Group, members: &[u64]) -> Subset {
    Subset::new(group.clone(), members.to_vec()).expect("strategy yields valid indices")
}

/// Fresh incremental table accepting every member, or reporting failure.
fn table_accepts(group: &Group, members: &[u64], t: u64) -> bool {
    let mut table = SignedSumTable::new(group.clone(), t);
    members.iter().all(|&x| table.try_extend(x))
}

fn star_table_accepts(group: &Group, members: &[u64], t: u64) -> bool {
    let mut table = StarSumTable::new(group.clone(), t);
    members.iter().all(|&x| table.try_extend(x))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    /// The four ways of deciding t-independence agree: definition-direct
    /// enumeration, the full sumset conditions, the reduced sumset
    /// conditions, and the incremental table.
    #[test]
    fn strong_routes_agree((g, members) in group_and_members(40, 5), t in 0u64..=6) {
        let s = subset(&g, &members);
        let direct = common::passes(&g, &members, t, Mode::Strong);
        prop_assert_eq!(independence::conditions_hold(&s, t), direct);
        prop_assert_eq!(independence::conditions_hold_reduced(&s, t), direct);
        prop_assert_eq!(independence::is_t_independent(&s, t), direct);
        prop_assert_eq!(table_accepts(&g, &members, t), direct);
    }

    /// Same agreement for the weak variant.
    #[test]
    fn weak_routes_agree((g, members) in group_and_members(40, 5), t in 0u64..=6) {
        let s = subset(&g, &members);
        let direct = common::passes(&g, &members, t, Mode::Weak);
        prop_assert_eq!(independence::star_conditions_hold(&s, t), direct);
        prop_assert_eq!(independence::is_weakly_t_independent(&s, t), direct);
        prop_assert_eq!(star_table_accepts(&g, &members, t), direct);
    }

    /// Raising the weight only removes sets: independence at t implies
    /// independence at every smaller weight, in both variants.
    #[test]
    fn independence_is_downward_closed_in_weight(
        (g, members) in group_and_members(40, 5),
        t in 1u64..=6,
    ) {
        let s = subset(&g, &members);
        if independence::is_t_independent(&s, t) {
            prop_assert!(independence::is_t_independent(&s, t - 1));
        }
        if independence::is_weakly_t_independent(&s, t) {
            prop_assert!(independence::is_weakly_t_independent(&s, t - 1));
        }
    }

    /// Every coefficient vector allowed in the weak variant is allowed in
    /// the strong one, so strong independence implies weak independence and
    /// the weak independence number dominates the strong one.
    #[test]
    fn weak_dominates_strong((g, members) in group_and_members(40, 5), t in 0u64..=6) {
        let s = subset(&g, &members);
        if independence::is_t_independent(&s, t) {
            prop_assert!(independence::is_weakly_t_independent(&s, t));
        }
        if !members.is_empty() {
            let ind = independence::independence_number(&s).unwrap();
            match independence::weak_independence_number(&s).unwrap() {
                Wind::Finite(w) => prop_assert!(w >= ind),
                Wind::Infinite => {}
            }
        }
    }

    /// Removing a member never destroys independence (subset closure),
    /// checked for each single-member removal.
    #[test]
    fn independence_closed_under_subsets(
        (g, members) in group_and_members(40, 5),
        t in 0u64..=5,
    ) {
        let s = subset(&g, &members);
        let strong = independence::is_t_independent(&s, t);
        let weak = independence::is_weakly_t_independent(&s, t);
        for drop in 0..members.len() {
            let mut rest = members.clone();
            rest.remove(drop);
            let r = subset(&g, &rest);
            if strong {
                prop_assert!(independence::is_t_independent(&r, t));
            }
            if weak {
                prop_assert!(independence::is_weakly_t_independent(&r, t));
            }
        }
    }

    /// Negating every member preserves both independence numbers, because
    /// coefficient vectors negate along with the set.
    #[test]
    fn negation_preserves_independence_numbers(
        (g, members) in group_and_members(60, 5),
    ) {
        prop_assume!(!members.is_empty());
        let s = subset(&g, &members);
        let negated: Vec<u64> = members.iter().map(|&x| g.neg_index(x)).collect();
        let ns = subset(&g, &negated);
        prop_assert_eq!(
            independence::independence_number(&s).unwrap(),
            independence::independence_number(&ns).unwrap()
        );
        prop_assert_eq!(
            independence::weak_independence_number(&s).unwrap(),
            independence::weak_independence_number(&ns).unwrap()
        );
    }

    /// Weight-3 independence coincides with being sum-free while avoiding
    /// zero in the first three fold sumsets.
    #[test]
    fn weight_three_is_sum_free_plus_zero_avoidance(
        (g, members) in group_and_members(60, 6),
    ) {
        let s = subset(&g, &members);
        let zero_free = (1..=3u64).all(|h| !independence::fold_sumset(&s, h).contains(0));
        let expected = zero_free && independence::is_sum_free(&s);
        prop_assert_eq!(independence::is_t_independent(&s, 3), expected);
    }

    /// Incremental tables equal a from-scratch recomputation of every level
    /// after an arbitrary interleaving of pushes and pops.
    #[test]
    fn tables_match_definitional_rebuild(
        (g, members) in group_and_members(24, 6),
        t in 1u64..=5,
        pops in 0usize..=3,
    ) {
        let mut table = SignedSumTable::new(g.clone(), t);
        let mut star = StarSumTable::new(g.clone(), t);
        for &x in &members {
            table.push(x);
            star.push(x);
        }
        let mut kept = members.clone();
        for _ in 0..pops.min(members.len()) {
            table.pop();
            star.pop();
            kept.pop();
        }
        for w in 0..t {
            let strong_expected = common::signed_sums(&g, &kept, w, false);
            let weak_expected = common::signed_sums(&g, &kept, w, true);
            prop_assert_eq!(
                common::set_contents(table.level(w)),
                common::set_contents(&strong_expected)
            );
            prop_assert_eq!(
                common::set_contents(star.level(w)),
                common::set_contents(&weak_expected)
            );
        }
    }

    /// Parsing the display form reproduces the group, and the canonical
    /// factors form a divisibility chain multiplying to the order.
    #[test]
    fn parse_display_roundtrip(g in small_group(1_000)) {
        let reparsed = Group::parse(&g.to_string()).unwrap();
        prop_assert_eq!(&reparsed, &g);
        let fs = g.factors();
        prop_assert!(fs.windows(2).all(|w| w[1] % w[0] == 0));
        prop_assert_eq!(fs.iter().product::<u64>(), g.order());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    /// The branch-and-bound engine matches the from-scratch oracle and
    /// returns a witness the oracle accepts.
    #[test]
    fn search_matches_oracle(g in small_group(16), t in 2u64..=4) {
        let opts = SearchOptions::default();
        for mode in [Mode::Strong, Mode::Weak] {
            let got = match mode {
                Mode::Strong => search::max_independent(&g, t, &opts),
                Mode::Weak => search::max_weakly_independent(&g, t, &opts),
                Mode::SumFree => unreachable!(),
            };
            let (want, _) = common::oracle_max(&g, t, mode);
            prop_assert_eq!(got.max_size, want, "mode {:?} group {} t {}", mode, g, t);
            prop_assert_eq!(got.witness.len() as u64, got.max_size);
            prop_assert!(common::passes(&g, &got.witness, t, mode));
        }
        let sf = search::max_sum_free(&g, &opts);
        let (want_sf, _) = common::oracle_max(&g, 0, Mode::SumFree);
        prop_assert_eq!(sf.max_size, want_sf);
        prop_assert!(common::passes(&g, &sf.witness, 0, Mode::SumFree));
    }

    /// Every construction certifies on random groups: the checker accepts
    /// the set and the closed-form size is met.
    #[test]
    fn constructions_certify(g in small_group(144), t in 1u64..=5) {
        prop_assert!(constructions::two_independent(&g).verified);
        prop_assert!(constructions::three_independent(&g).verified);
        prop_assert!(constructions::greedy_independent(&g, t).unwrap().verified);
        prop_assert!(constructions::greedy_weakly_independent(&g, t).unwrap().verified);
    }
}

/// The strong independence number never reaches the group order, and a
/// vanishing vector of weight equal to the smallest member order always
/// exists — confirmed by definition-direct enumeration on small groups.
#[test]
fn independence_cannot_reach_member_order() {
    for n in 2..=14u64 {
        let g = Group::parse(&n.to_string()).unwrap();
        for a in 0..n {
            for b in a + 1..n {
                for c in b + 1..n {
                    let members = vec![a, b, c];
                    let s = subset(&g, &members);
                    let min_ord = members.iter().map(|&x| g.order_of_index(x)).min().unwrap();
                    let report = independence::check(&s, min_ord, Mode::Strong);
                    assert!(
                        !report.independent,
                        "{} in Z_{} should fail at weight {}",
                        s.members()
                            .iter()
                            .map(|m| m.to_string())
                            .collect::<Vec<_>>()
                            .join(","),
                        n,
                        min_ord
                    );
                }
            }
        }
    }
}

/// API-level cap: the reported independence number is always below the
/// group order, exhaustively for all subsets of up to three elements.
#[test]
fn independence_number_below_order() {
    for n in 2..=20u64 {
        let g = Group::parse(&n.to_string()).unwrap();
        for a in 0..n {
            for b in a..n {
                for c in b..n {
                    let members: Vec<u64> = [a, b, c]
                        .iter()
                        .copied()
                        .collect::<std::collections::BTreeSet<_>>()
                        .into_iter()
                        .collect();
                    let s = subset(&g, &members);
                    assert!(independence::independence_number(&s).unwrap() < n);
                }
            }
        }
    }
}
