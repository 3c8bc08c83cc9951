mod common;

use std::collections::BTreeSet;

use lrhorn::horn::{
    generate_t, generate_u, horn_compatible, horn_compatible_partitions, weyl_bounds, IndexTriple,
    SpectrumVector, DEFAULT_TOL,
};
use lrhorn::lr_positive;
use proptest::prelude::*;

type Key = (Vec<usize>, Vec<usize>, Vec<usize>);

fn key(t: &IndexTriple) -> Key {
    (t.i().to_vec(), t.j().to_vec(), t.k().to_vec())
}

fn subsets(n: usize, r: usize) -> Vec<Vec<usize>> {
    (0u32..1 << n)
        .filter(|m| m.count_ones() as usize == r)
        .map(|m| (1..=n).filter(|&i| m >> (i - 1) & 1 == 1).collect())
        .collect()
}

fn oracle_u(n: usize, r: usize) -> BTreeSet<Key> {
    let subs = subsets(n, r);
    let mut out = BTreeSet::new();
    for i in &subs {
        for j in &subs {
            for k in &subs {
                let lhs: usize = i.iter().sum::<usize>() + j.iter().sum::<usize>();
                if lhs == k.iter().sum::<usize>() + r * (r + 1) / 2 {
                    out.insert((i.clone(), j.clone(), k.clone()));
                }
            }
        }
    }
    out
}

fn oracle_t(n: usize, r: usize) -> BTreeSet<Key> {
    let inner: Vec<BTreeSet<Key>> = (1..r).map(|p| oracle_t(r, p)).collect();
    oracle_u(n, r)
        .into_iter()
        .filter(|(i, j, k)| {
            inner.iter().enumerate().all(|(p0, tp)| {
                let p = p0 + 1;
                tp.iter().all(|(f, g, h)| {
                    let lhs: usize = f.iter().map(|&x| i[x - 1]).sum::<usize>()
                        + g.iter().map(|&x| j[x - 1]).sum::<usize>();
                    lhs <= h.iter().map(|&x| k[x - 1]).sum::<usize>() + p * (p + 1) / 2
                })
            })
        })
        .collect()
}

#[test]
fn u_and_t_match_oracles() {
    for n in 1..=5 {
        for r in 1..=n {
            let u: BTreeSet<Key> = generate_u(n, r).unwrap().iter().map(key).collect();
            assert_eq!(u, oracle_u(n, r), "U^{n}_{r}");
            let t: BTreeSet<Key> = generate_t(n, r).unwrap().iter().map(key).collect();
            assert_eq!(t, oracle_t(n, r), "T^{n}_{r}");
        }
    }
}

#[test]
fn t_is_subset_of_u() {
    for n in 1..=6 {
        for r in 1..=n {
            let u: BTreeSet<Key> = generate_u(n, r).unwrap().iter().map(key).collect();
            let t = generate_t(n, r).unwrap();
            assert!(
                t.iter().all(|x| u.contains(&key(x))),
                "T^{n}_{r} not inside U^{n}_{r}"
            );
        }
    }
}

#[test]
fn small_counts() {
    // n = 2: γ1 ≤ α1 + β1, γ2 ≤ α1 + β2, γ2 ≤ α2 + β1.
    assert_eq!(generate_t(2, 1).unwrap().len(), 3);
    // n = 3: the twelve classical inequalities.
    let n3 = generate_t(3, 1).unwrap().len() + generate_t(3, 2).unwrap().len();
    assert_eq!(n3, 12);
}

#[test]
fn output_is_sorted() {
    for n in 2..=5 {
        for r in 1..n {
            let t = generate_t(n, r).unwrap();
            assert!(t.windows(2).all(|w| key(&w[0]) < key(&w[1])));
        }
    }
}

#[test]
fn concurrent_generation_agrees() {
    let handles: Vec<_> = (0..8)
        .map(|_| std::thread::spawn(|| generate_t(6, 3).unwrap()))
        .collect();
    let results: Vec<_> = handles.into_iter().map(|h| h.join().unwrap()).collect();
    assert!(results.windows(2).all(|w| w[0] == w[1]));
}

#[test]
fn lr_equivalence_n3() {
    let parts = common::bounded_partitions(3, 3, 9);
    for a in &parts {
        for b in &parts {
            for g in &parts {
                if g.size() != a.size() + b.size() {
                    continue;
                }
                assert_eq!(
                    lr_positive(a, b, g),
                    horn_compatible_partitions(a, b, g, 3).unwrap(),
                    "{a} {b} {g}"
                );
            }
        }
    }
}

fn sorted_vec(n: usize) -> impl Strategy<Value = Vec<f64>> {
    prop::collection::vec(-10.0f64..10.0, n).prop_map(|mut v| {
        v.sort_by(|a, b| b.total_cmp(a));
        v
    })
}

proptest! {
    #[test]
    fn horn_symmetry_numeric(
        (a, b, g) in (2usize..=4).prop_flat_map(|n| (sorted_vec(n), sorted_vec(n), sorted_vec(n)))
    ) {
        let (a, b, g) = (
            SpectrumVector::new(a).unwrap(),
            SpectrumVector::new(b).unwrap(),
            SpectrumVector::new(g).unwrap(),
        );
        prop_assert_eq!(
            horn_compatible(&a, &b, &g, DEFAULT_TOL).unwrap(),
            horn_compatible(&b, &a, &g, DEFAULT_TOL).unwrap()
        );
    }

    #[test]
    fn horn_symmetry_exact(
        a in prop::collection::vec(0u64..5, 0..4),
        b in prop::collection::vec(0u64..5, 0..4),
        g in prop::collection::vec(0u64..7, 0..4),
    ) {
        let (a, b, g) = (a.into_iter().collect(), b.into_iter().collect(), g.into_iter().collect());
        prop_assert_eq!(
            horn_compatible_partitions(&a, &b, &g, 4).unwrap(),
            horn_compatible_partitions(&b, &a, &g, 4).unwrap()
        );
    }

    #[test]
    fn weyl_lower_below_upper(
        (a, b, k) in (1usize..=6).prop_flat_map(|n| (sorted_vec(n), sorted_vec(n), 1..=n))
    ) {
        let a = SpectrumVector::new(a).unwrap();
        let b = SpectrumVector::new(b).unwrap();
        let w = weyl_bounds(&a, &b, k).unwrap();
        if let (Some(lo), Some(hi)) = (w.lower, w.upper) {
            prop_assert!(lo <= hi, "lower {} > upper {}", lo, hi);
        }
    }
}
