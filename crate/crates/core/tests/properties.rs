use std::collections::BTreeSet;

use pinv::involution::extract;
use pinv::modular::{delete_leg_hook, insert_leg_hook, leg_hooks, modular_conjugate};
use pinv::weight::{fixed_point_sum, weight, weighted_sum};
use pinv::{APoly, FamilySpec, Partition, TruncatedSeries, WeightKind};
use proptest::prelude::*;

fn distinct() -> impl Strategy<Value = Partition> {
    prop::collection::btree_set(1u32..30, 0..8).prop_map(|s| Partition::from_parts(s.into_iter().collect()).unwrap())
}

fn any_partition() -> impl Strategy<Value = Partition> {
    prop::collection::vec(1u32..20, 0..10).prop_map(|v| Partition::from_parts(v).unwrap())
}

fn small_poly() -> impl Strategy<Value = APoly> {
    prop::collection::vec((0u32..4, -5i64..=5), 0..4)
        .prop_map(|terms| terms.into_iter().fold(APoly::zero(), |acc, (e, c)| acc + APoly::monomial(c, e)))
}

fn small_series() -> impl Strategy<Value = TruncatedSeries> {
    prop::collection::vec(small_poly(), 7).prop_map(TruncatedSeries::from_coeffs)
}

proptest! {
    #[test]
    fn adding_partitions_is_commutative_and_associative(x in any_partition(), y in any_partition(), z in any_partition()) {
        prop_assert_eq!(x.add(&y), y.add(&x));
        prop_assert_eq!(x.add(&y).add(&z), x.add(&y.add(&z)));
        prop_assert_eq!(x.add(&y).weight(), x.weight() + y.weight());
    }

    #[test]
    fn conjugation_is_an_involution(x in any_partition()) {
        let c = x.conjugate().unwrap();
        prop_assert_eq!(c.weight(), x.weight());
        prop_assert_eq!(c.conjugate().unwrap(), x);
    }

    #[test]
    fn modular_conjugation_is_an_involution(m in 1u32..4, cols in prop::collection::vec(1u32..8, 0..8)) {
        let sigma = Partition::from_parts(cols.iter().map(|c| c * 2 * m).collect()).unwrap();
        let c = modular_conjugate(&sigma, m).unwrap();
        prop_assert_eq!(c.weight(), sigma.weight());
        prop_assert_eq!(modular_conjugate(&c, m).unwrap(), sigma);
    }

    #[test]
    fn series_ring_laws(x in small_series(), y in small_series(), z in small_series()) {
        prop_assert_eq!(x.mul(&y).unwrap(), y.mul(&x).unwrap());
        prop_assert_eq!(x.mul(&y).unwrap().mul(&z).unwrap(), x.mul(&y.mul(&z).unwrap()).unwrap());
        prop_assert_eq!(
            x.mul(&y.add(&z).unwrap()).unwrap(),
            x.mul(&y).unwrap().add(&x.mul(&z).unwrap()).unwrap()
        );
        prop_assert_eq!(x.add(&x.neg()).unwrap(), TruncatedSeries::zero(6));
    }

    #[test]
    fn distinct_strategy_stays_distinct(x in distinct()) {
        prop_assert!(FamilySpec::AllDistinct.contains(&x));
    }
}

#[test]
fn deleting_then_inserting_a_hook_restores_the_partition() {
    for m in 1..=2 {
        for k in 1..=6 {
            for n in 0..=40 {
                for pi in (FamilySpec::Dk { k, m }).enumerate(n).unwrap() {
                    for hook in leg_hooks(&pi, k, m).unwrap().into_iter().filter(|h| h.deletion_valid) {
                        let rest = delete_leg_hook(&pi, hook.row, m).unwrap();
                        let (back, row) = insert_leg_hook(&rest, hook.length, m).unwrap();
                        assert_eq!(back, pi, "m={m} row {}", hook.row);
                        // the highest valid hook is the one insertion recreates
                        if Some(hook.row)
                            == leg_hooks(&pi, k, m).unwrap().iter().filter(|h| h.deletion_valid).map(|h| h.row).max()
                        {
                            assert_eq!(row, hook.row);
                        }
                    }
                }
            }
        }
    }
}

/// Every partition of `n` with parts at most `max`, largest part first.
fn brute_force(n: u32, max: u32, prefix: &mut Vec<u32>, out: &mut Vec<Partition>) {
    if n == 0 {
        out.push(Partition::from_parts(prefix.clone()).unwrap());
        return;
    }
    for p in (1..=n.min(max)).rev() {
        prefix.push(p);
        brute_force(n - p, p, prefix, out);
        prefix.pop();
    }
}

#[test]
fn enumeration_matches_brute_force_filtering() {
    let families = [
        FamilySpec::AllDistinct,
        FamilySpec::Pdo { m: 1 },
        FamilySpec::Pdo { m: 2 },
        FamilySpec::B { m: 1 },
        FamilySpec::B { m: 3 },
        FamilySpec::Dk { k: 3, m: 1 },
        FamilySpec::Ek { k: 3, m: 1 },
        FamilySpec::Hkm { k: 4, m: 2 },
    ];
    for n in 0..=30u32 {
        let mut all = Vec::new();
        brute_force(n, n, &mut Vec::new(), &mut all);
        for family in families {
            let expected: BTreeSet<Partition> = all.iter().filter(|p| family.contains(p)).cloned().collect();
            let got: BTreeSet<Partition> = family.enumerate(n.into()).unwrap().into_iter().collect();
            assert_eq!(got, expected, "{family} n={n}");
        }
        // the zero-part families: attach a zero to every candidate
        for family in [FamilySpec::Q, FamilySpec::A { m: 2 }] {
            let expected: BTreeSet<Partition> =
                all.iter().flat_map(|p| [p.clone(), p.with_zero().unwrap()]).filter(|p| family.contains(p)).collect();
            let got: BTreeSet<Partition> = family.enumerate(n.into()).unwrap().into_iter().collect();
            assert_eq!(got, expected, "{family} n={n}");
        }
    }
}

#[test]
fn enumeration_is_lexicographically_decreasing() {
    for family in [FamilySpec::Pdo { m: 1 }, FamilySpec::Q, FamilySpec::B { m: 2 }] {
        for n in 0..=40 {
            let list = family.enumerate(n).unwrap();
            assert!(list.windows(2).all(|w| w[0].parts() > w[1].parts()), "{family} n={n}");
        }
    }
}

#[test]
fn gap_weight_exponent_counts_both_partitions() {
    for n in 0..=60 {
        for lambda in (FamilySpec::Pdo { m: 1 }).enumerate(n).unwrap() {
            let w = weight(&lambda, WeightKind::Gap).unwrap();
            let s = extract(&lambda, 1).unwrap();
            assert_eq!(s.pi.len(), lambda.len());
            assert_eq!(w.degree(), Some((lambda.len() + s.sigma.len()) as u32), "{lambda}");
        }
    }
}

#[test]
fn even_smallest_weight_at_minus_one() {
    for n in 0..=60 {
        for lambda in FamilySpec::Q.enumerate(n).unwrap() {
            let w = weight(&lambda, WeightKind::EvenSmallest).unwrap().substitute(-1);
            let sign = if lambda.even_len() % 2 == 1 { 1 } else { -1 };
            assert_eq!(w, APoly::constant(sign), "{lambda}");
        }
    }
}

#[test]
fn weighted_sums_equal_fixed_point_sums() {
    let cases = [
        (FamilySpec::Pdo { m: 1 }, WeightKind::Gap),
        (FamilySpec::Pdo { m: 1 }, WeightKind::Odd),
        (FamilySpec::Pdo { m: 1 }, WeightKind::SignOnly),
        (FamilySpec::Q, WeightKind::EvenSmallest),
        (FamilySpec::A { m: 1 }, WeightKind::A1),
        (FamilySpec::A { m: 2 }, WeightKind::A1),
        (FamilySpec::A { m: 3 }, WeightKind::A1),
    ];
    for (family, kind) in cases {
        for n in 0..=60 {
            assert_eq!(
                weighted_sum(family, n, kind).unwrap(),
                fixed_point_sum(family, n, kind).unwrap(),
                "{family} {kind} n={n}"
            );
        }
    }
}
