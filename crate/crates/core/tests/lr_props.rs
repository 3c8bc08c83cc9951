mod common;

use lrhorn::lr::{lr_coefficient_u64, SkewShape};
use lrhorn::{lr_coefficient, lr_positive, Partition};
use num_bigint::BigUint;
use proptest::prelude::*;

fn p(v: &[u64]) -> Partition {
    Partition::new(v.to_vec())
}

#[test]
fn known_values() {
    assert_eq!(
        lr_coefficient_u64(&p(&[2, 1]), &p(&[2, 1]), &p(&[3, 2, 1])),
        Some(2)
    );
    assert_eq!(
        lr_coefficient_u64(&p(&[3]), &p(&[1, 1, 1]), &p(&[4, 1, 1])),
        Some(1)
    );
    assert_eq!(
        lr_coefficient_u64(&p(&[2, 2]), &p(&[2, 2]), &p(&[4, 2, 2])),
        Some(1)
    );
    // s_{21} s_{21} s_{21} structure: c^{4,2,2,1}_{(3,2,1),(2,1)}
    let c = lr_coefficient_u64(&p(&[3, 2, 1]), &p(&[2, 1]), &p(&[4, 3, 2]));
    assert_eq!(
        c,
        Some(common::brute_force_lr(
            &p(&[3, 2, 1]),
            &p(&[2, 1]),
            &p(&[4, 3, 2])
        ))
    );
}

#[test]
fn exhaustive_against_brute_force() {
    let parts = common::bounded_partitions(3, 3, 4);
    for a in &parts {
        for b in &parts {
            let n = a.size() + b.size();
            for g in common::bounded_partitions(n, 4, n)
                .into_iter()
                .filter(|g| g.size() == n)
            {
                let want = common::brute_force_lr(a, b, &g);
                assert_eq!(
                    lr_coefficient(a, b, &g).0,
                    BigUint::from(want),
                    "{a} {b} {g}"
                );
                assert_eq!(lr_positive(a, b, &g), want > 0);
            }
        }
    }
}

#[test]
fn pieri_rule() {
    for n in 0..=6u64 {
        for m in 0..=6u64 {
            let total = n + m;
            for g in common::bounded_partitions(total, 4, total)
                .into_iter()
                .filter(|g| g.size() == total)
            {
                let got = lr_coefficient_u64(&p(&[n]), &p(&[m]), &g).unwrap();
                assert_eq!(got, common::pieri(n, m, &g), "({n}) ({m}) {g}");
            }
        }
    }
}

#[test]
fn skew_shape_rejects_non_containment() {
    assert!(SkewShape::new(p(&[2]), p(&[3])).is_err());
    assert_eq!(SkewShape::new(p(&[3, 1]), p(&[1])).unwrap().cell_count(), 3);
}

fn small_partition() -> impl Strategy<Value = Partition> {
    prop::collection::vec(0u64..5, 0..4).prop_map(Partition::new)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn symmetry(a in small_partition(), b in small_partition(), g in small_partition()) {
        prop_assert_eq!(lr_coefficient(&a, &b, &g), lr_coefficient(&b, &a, &g));
    }

    #[test]
    fn symmetry_on_valid_sizes(a in small_partition(), b in small_partition(), extra in prop::collection::vec(0u64..3, 0..6)) {
        // Grow γ from α ∪ β so that the sizes agree and most triples are nonzero.
        let mut parts: Vec<u64> = (0..4).map(|i| a.part(i).max(b.part(i))).collect();
        let mut deficit = a.size() + b.size() - parts.iter().sum::<u64>();
        for (i, e) in extra.iter().enumerate() {
            let add = (*e).min(deficit);
            parts[i % 4] += add;
            deficit -= add;
        }
        parts.push(deficit);
        let g = Partition::new(parts);
        prop_assert_eq!(lr_coefficient(&a, &b, &g), lr_coefficient(&b, &a, &g));
    }

    #[test]
    fn zero_conditions(a in small_partition(), b in small_partition(), g in small_partition()) {
        if lr_positive(&a, &b, &g) {
            prop_assert_eq!(g.size(), a.size() + b.size());
            prop_assert!(g.contains(&a));
            prop_assert!(g.contains(&b));
        }
    }

    #[test]
    fn unit_laws(a in small_partition(), g in small_partition()) {
        let want = u64::from(a == g);
        prop_assert_eq!(lr_coefficient_u64(&a, &Partition::empty(), &g), Some(want));
        prop_assert_eq!(lr_coefficient_u64(&Partition::empty(), &a, &g), Some(want));
    }
}
