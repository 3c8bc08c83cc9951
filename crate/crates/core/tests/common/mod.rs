//! Reference implementations used only by the test suites. None of these
//! share code with the library beyond its plain data types.
#![allow(dead_code)]

use std::collections::BTreeSet;

use lrhorn::{BipartiteGraph, Graph, Partition};
use num_bigint::BigInt;
use num_traits::Zero;

/// Number of partitions of `n` into exactly `k` positive parts.
pub fn partition_count(n: usize, k: usize) -> u64 {
    let mut p = vec![vec![0u64; k + 1]; n + 1];
    p[0][0] = 1;
    for total in 1..=n {
        for parts in 1..=k.min(total) {
            p[total][parts] = p[total - 1][parts - 1] + p[total - parts][parts];
        }
    }
    p[n][k]
}

/// All partitions with every part at most `max_part`, at most `max_len`
/// parts and size at most `max_size`, including the empty one.
pub fn bounded_partitions(max_part: u64, max_len: usize, max_size: u64) -> Vec<Partition> {
    fn rec(
        cap: u64,
        len_left: usize,
        size_left: u64,
        cur: &mut Vec<u64>,
        out: &mut Vec<Partition>,
    ) {
        out.push(Partition::new(cur.clone()));
        if len_left == 0 {
            return;
        }
        for v in 1..=cap.min(size_left) {
            cur.push(v);
            rec(v, len_left - 1, size_left - v, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(max_part, max_len, max_size, &mut Vec::new(), &mut out);
    out
}

/// Littlewood-Richardson coefficient by listing every filling of `γ/α`
/// with labels `1..=l(β)` and testing each one in full.
pub fn brute_force_lr(alpha: &Partition, beta: &Partition, gamma: &Partition) -> u64 {
    if alpha.size() + beta.size() != gamma.size() {
        return 0;
    }
    if (0..gamma.length().max(alpha.length())).any(|i| alpha.part(i) > gamma.part(i)) {
        return 0;
    }
    let cells: Vec<(usize, usize)> = (0..gamma.length())
        .flat_map(|r| (alpha.part(r) as usize..gamma.part(r) as usize).map(move |c| (r, c)))
        .collect();
    let labels = beta.length();
    if cells.is_empty() {
        return 1;
    }
    if labels == 0 {
        return 0;
    }
    let total = (labels as u64).pow(cells.len() as u32);
    let mut count = 0;
    let mut filling = vec![0usize; cells.len()];
    for code in 0..total {
        let mut c = code;
        for f in filling.iter_mut() {
            *f = (c % labels as u64) as usize + 1;
            c /= labels as u64;
        }
        if is_lr_tableau(&cells, &filling, beta) {
            count += 1;
        }
    }
    count
}

fn is_lr_tableau(cells: &[(usize, usize)], filling: &[usize], beta: &Partition) -> bool {
    let at = |r: usize, c: usize| cells.iter().position(|&p| p == (r, c)).map(|i| filling[i]);
    for (idx, &(r, c)) in cells.iter().enumerate() {
        if let Some(right) = at(r, c + 1) {
            if right < filling[idx] {
                return false;
            }
        }
        if let Some(below) = at(r + 1, c) {
            if below <= filling[idx] {
                return false;
            }
        }
    }
    let mut content = vec![0u64; beta.length() + 1];
    for &f in filling {
        content[f] += 1;
    }
    if (1..=beta.length()).any(|i| content[i] != beta.part(i - 1)) {
        return false;
    }
    // Reverse reading word: rows top to bottom, each right to left.
    let mut order: Vec<usize> = (0..cells.len()).collect();
    order.sort_by(|&a, &b| {
        cells[a]
            .0
            .cmp(&cells[b].0)
            .then(cells[b].1.cmp(&cells[a].1))
    });
    let mut seen = vec![0u64; beta.length() + 2];
    for i in order {
        let l = filling[i];
        seen[l] += 1;
        if l > 1 && seen[l] > seen[l - 1] {
            return false;
        }
    }
    true
}

/// Pieri rule for `s_(n) · s_(m)`: coefficient of `s_γ`.
pub fn pieri(n: u64, m: u64, gamma: &Partition) -> u64 {
    let ok =
        gamma.length() <= 2 && gamma.size() == n + m && gamma.part(0) >= n && n >= gamma.part(1);
    u64::from(ok)
}

/// Bipartite complement of a disjoint union of even cycles, built from
/// scratch: cycle `t` of length `2h` joins `x_i ~ y_i` and `x_i ~ y_{i+1}`
/// cyclically inside its block.
pub fn bipcomp_of_cycles(lengths: &[usize]) -> BipartiteGraph {
    let mut present = BTreeSet::new();
    let mut offset = 0;
    for &len in lengths {
        let h = len / 2;
        for i in 0..h {
            present.insert((offset + i, offset + i));
            present.insert((offset + i, offset + (i + 1) % h));
        }
        offset += h;
    }
    let edges: Vec<(usize, usize)> = (0..offset)
        .flat_map(|x| (0..offset).map(move |y| (x, y)))
        .filter(|e| !present.contains(e))
        .collect();
    BipartiteGraph::new(offset, offset, edges).unwrap()
}

/// Dense adjacency matrix from `has_edge`.
pub fn dense(g: &Graph) -> Vec<Vec<i64>> {
    let n = g.order();
    (0..n)
        .map(|i| (0..n).map(|j| i64::from(g.has_edge(i, j))).collect())
        .collect()
}

pub fn mat_mul(a: &[Vec<i64>], b: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let n = a.len();
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| (0..n).map(|k| a[i][k] * b[k][j]).sum())
                .collect()
        })
        .collect()
}

pub fn trace(a: &[Vec<i64>]) -> i64 {
    (0..a.len()).map(|i| a[i][i]).sum()
}

/// Power sums `p_1..=p_k` of the roots of a monic polynomial (leading
/// coefficient first) by Newton's identities.
pub fn power_sums(poly: &[BigInt], k: usize) -> Vec<BigInt> {
    let c = |i: usize| poly.get(i).cloned().unwrap_or_else(BigInt::zero);
    let mut p: Vec<BigInt> = vec![BigInt::zero()];
    for m in 1..=k {
        let mut acc = BigInt::from(m) * c(m);
        for i in 1..m {
            acc += c(i) * &p[m - i];
        }
        p.push(-acc);
    }
    p.remove(0);
    p
}

pub fn poly_mul(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

/// Determinant of an integer matrix by Bareiss fraction-free elimination.
pub fn bareiss_det(mut m: Vec<Vec<BigInt>>) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::from(1);
    }
    let mut sign = 1;
    let mut prev = BigInt::from(1);
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            let Some(swap) = (k + 1..n).find(|&r| !m[r][k].is_zero()) else {
                return BigInt::zero();
            };
            m.swap(k, swap);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &m[i][j] * &m[k][k] - &m[i][k] * &m[k][j];
                m[i][j] = v / &prev;
            }
        }
        prev = m[k][k].clone();
    }
    BigInt::from(sign) * &m[n - 1][n - 1]
}

/// `det(xI − A)` evaluated at an integer point.
pub fn char_poly_at(g: &Graph, x: i64) -> BigInt {
    let a = dense(g);
    let n = a.len();
    let m = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| BigInt::from(if i == j { x } else { 0 } - a[i][j]))
                .collect()
        })
        .collect();
    bareiss_det(m)
}

pub fn eval_poly(poly: &[BigInt], x: i64) -> BigInt {
    poly.iter().fold(BigInt::zero(), |acc, c| acc * x + c)
}
