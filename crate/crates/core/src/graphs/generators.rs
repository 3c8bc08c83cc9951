use super::{BipartiteGraph, Graph};
use crate::error::{Error, Result};

/// `K_{s,t}`.
pub fn complete_bipartite(s: usize, t: usize) -> Result<BipartiteGraph> {
    BipartiteGraph::new(s, t, (0..s).flat_map(|x| (0..t).map(move |y| (x, y))))
}

/// The even cycle `C_len` with `x_i ~ y_i` and `x_i ~ y_{i-1}`.
pub fn cycle(len: usize) -> Result<BipartiteGraph> {
    if len < 4 || len % 2 != 0 {
        return Err(Error::InvalidArgument(format!(
            "bipartite cycles need even length >= 4, got {len}"
        )));
    }
    let k = len / 2;
    BipartiteGraph::new(k, k, (0..k).flat_map(|i| [(i, i), (i, (i + k - 1) % k)]))
}

/// Perfect matching `nK_2`.
pub fn matching(n: usize) -> Result<BipartiteGraph> {
    BipartiteGraph::new(n, n, (0..n).map(|i| (i, i)))
}

/// The path on `vertices` vertices, alternating between `X` and `Y`.
pub fn path(vertices: usize) -> Result<BipartiteGraph> {
    if vertices < 2 {
        return Err(Error::InvalidArgument(format!(
            "a bipartite path needs at least 2 vertices, got {vertices}"
        )));
    }
    let xs = vertices.div_ceil(2);
    let ys = vertices / 2;
    // Vertex 2i is x_i, vertex 2i+1 is y_i.
    let edges = (0..vertices - 1).map(|v| {
        if v % 2 == 0 {
            (v / 2, v / 2)
        } else {
            (v / 2 + 1, v / 2)
        }
    });
    BipartiteGraph::new(xs, ys, edges)
}

/// Disjoint union; classes are relabelled consecutively in list order.
pub fn disjoint_union(parts: &[BipartiteGraph]) -> Result<BipartiteGraph> {
    if parts.is_empty() {
        return Err(Error::InvalidArgument("disjoint union of no graphs".into()));
    }
    let mut edges = Vec::new();
    let (mut dx, mut dy) = (0, 0);
    for g in parts {
        edges.extend(g.edges().map(|(x, y)| (x + dx, y + dy)));
        dx += g.x_size();
        dy += g.y_size();
    }
    BipartiteGraph::new(dx, dy, edges)
}

/// `K_n` as a plain graph.
pub fn complete_graph(n: usize) -> Graph {
    Graph::from_edges(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))))
        .expect("complete graph edges are valid")
}

/// `C_n` as a plain graph (`n >= 3`).
pub fn cycle_graph(n: usize) -> Graph {
    assert!(n >= 3, "cycle needs at least 3 vertices");
    Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))).expect("cycle edges are valid")
}
