//! Exhaustive generation of small connected bipartite graphs, one per
//! isomorphism class that preserves the colour classes.
//!
//! A graph with classes of sizes `m` and `n` is a list of `m` row bitmasks
//! over `n` columns. Its canonical form is the lexicographically smallest
//! sorted row list over all column permutations (row order is free because
//! rows are sorted). A candidate is emitted only when it already equals its
//! canonical form.

use super::BipartiteGraph;
use crate::error::{Error, Result};

/// Largest total order accepted by [`connected_bipartite_graphs`].
pub const MAX_ENUMERATION_ORDER: usize = 10;

fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn rec(prefix: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        if prefix.len() == used.len() {
            out.push(prefix.clone());
            return;
        }
        for v in 0..used.len() {
            if !used[v] {
                used[v] = true;
                prefix.push(v);
                rec(prefix, used, out);
                prefix.pop();
                used[v] = false;
            }
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::with_capacity(n), &mut vec![false; n], &mut out);
    out
}

fn permute_row(row: u64, perm: &[usize]) -> u64 {
    perm.iter()
        .enumerate()
        .filter(|&(src, _)| row >> src & 1 == 1)
        .fold(0, |acc, (_, &dst)| acc | 1 << dst)
}

fn canonical_rows(rows: &[u64], perms: &[Vec<usize>]) -> Vec<u64> {
    let mut best: Option<Vec<u64>> = None;
    for perm in perms {
        let mut r: Vec<u64> = rows.iter().map(|&row| permute_row(row, perm)).collect();
        r.sort_unstable();
        if best.as_ref().is_none_or(|b| r < *b) {
            best = Some(r);
        }
    }
    best.unwrap_or_default()
}

fn rows_of(g: &BipartiteGraph) -> Vec<u64> {
    let mut rows = vec![0u64; g.x_size()];
    for (x, y) in g.edges() {
        rows[x] |= 1 << y;
    }
    rows
}

/// Canonical row-bitmask form of `g` under permutations within each colour
/// class; equal forms mean isomorphic graphs with `X` mapped to `X`.
pub fn canonical_form(g: &BipartiteGraph) -> Result<Vec<u64>> {
    if g.order() > MAX_ENUMERATION_ORDER {
        return Err(Error::InvalidArgument(format!(
            "canonical forms are limited to {MAX_ENUMERATION_ORDER} vertices"
        )));
    }
    Ok(canonical_rows(&rows_of(g), &permutations(g.y_size())))
}

fn connected(rows: &[u64], n: usize) -> bool {
    let m = rows.len();
    let mut seen_x = 1u64;
    let mut seen_y = 0u64;
    loop {
        let ys = (0..m)
            .filter(|&x| seen_x >> x & 1 == 1)
            .fold(0, |acc, x| acc | rows[x]);
        let xs = (0..m)
            .filter(|&x| rows[x] & ys != 0)
            .fold(seen_x, |acc, x| acc | 1 << x);
        if ys == seen_y && xs == seen_x {
            break;
        }
        seen_x = xs;
        seen_y = ys;
    }
    seen_x.count_ones() as usize == m && seen_y.count_ones() as usize == n
}

/// Every connected bipartite graph with `2 ≤ |X| + |Y| ≤ max_order`, one
/// per colour-preserving isomorphism class. Both orientations `(m, n)` and
/// `(n, m)` are produced.
pub fn connected_bipartite_graphs(max_order: usize) -> Result<Vec<BipartiteGraph>> {
    if max_order > MAX_ENUMERATION_ORDER {
        return Err(Error::InvalidArgument(format!(
            "enumeration is limited to {MAX_ENUMERATION_ORDER} vertices, got {max_order}"
        )));
    }
    let mut out = Vec::new();
    for order in 2..=max_order {
        for m in 1..order {
            let n = order - m;
            let perms = permutations(n);
            let full = (1u64 << n) - 1;
            let mut rows = vec![1u64; m];
            // Odometer over weakly increasing row tuples with no empty row.
            'outer: loop {
                if connected(&rows, n) && canonical_rows(&rows, &perms) == rows {
                    let edges = rows.iter().enumerate().flat_map(|(x, &row)| {
                        (0..n)
                            .filter(move |&y| row >> y & 1 == 1)
                            .map(move |y| (x, y))
                    });
                    out.push(BipartiteGraph::new(m, n, edges)?);
                }
                let mut pos = m;
                loop {
                    if pos == 0 {
                        break 'outer;
                    }
                    pos -= 1;
                    if rows[pos] < full {
                        rows[pos] += 1;
                        let v = rows[pos];
                        for r in rows.iter_mut().skip(pos + 1) {
                            *r = v;
                        }
                        break;
                    }
                }
            }
        }
    }
    Ok(out)
}
