//! Simple graphs, bipartite graphs with explicit colour classes, line graphs
//! and the structural constructions used by the spectral analysis.

mod enumerate;
mod generators;
mod io;
mod spectrum;

use std::collections::{BTreeSet, VecDeque};

pub use enumerate::{canonical_form, connected_bipartite_graphs, MAX_ENUMERATION_ORDER};
pub use generators::{
    complete_bipartite, complete_graph, cycle, cycle_graph, disjoint_union, matching, path,
};
pub use io::{parse_bipartite, BipartiteGraphJson, LineGraphJson};
pub use spectrum::{
    char_poly_exact, integer_roots_within, integer_spectrum, minus_two_multiplicity_numeric,
    numeric_spectrum, poly_to_string, ExactSpectrum,
};

use crate::error::{Error, Result};
use crate::partitions::Partition;

/// A simple undirected graph on vertices `0..order`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    neighbors: Vec<Vec<usize>>,
}

impl Graph {
    /// Graph with no edges.
    pub fn empty(order: usize) -> Self {
        Graph {
            neighbors: vec![Vec::new(); order],
        }
    }

    /// Builds a graph from an edge list; rejects loops, duplicate edges and
    /// out-of-range endpoints.
    pub fn from_edges(
        order: usize,
        edges: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Self> {
        let mut g = Graph::empty(order);
        for (u, v) in edges {
            if u >= order || v >= order {
                return Err(Error::InvalidArgument(format!(
                    "edge ({u},{v}) out of range for order {order}"
                )));
            }
            if u == v {
                return Err(Error::InvalidArgument(format!("loop at vertex {u}")));
            }
            if g.neighbors[u].contains(&v) {
                return Err(Error::InvalidArgument(format!("duplicate edge ({u},{v})")));
            }
            g.neighbors[u].push(v);
            g.neighbors[v].push(u);
        }
        for n in &mut g.neighbors {
            n.sort_unstable();
        }
        Ok(g)
    }

    pub fn order(&self) -> usize {
        self.neighbors.len()
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.neighbors[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.neighbors[v].len()
    }

    pub fn max_degree(&self) -> usize {
        self.neighbors.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn edge_count(&self) -> usize {
        self.neighbors.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.neighbors[u].binary_search(&v).is_ok()
    }

    /// Edges `(u, v)` with `u < v`, lexicographic.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for (u, ns) in self.neighbors.iter().enumerate() {
            out.extend(ns.iter().filter(|&&v| v > u).map(|&v| (u, v)));
        }
        out
    }

    /// Dense 0/1 adjacency matrix.
    pub fn adjacency_matrix(&self) -> Vec<Vec<i64>> {
        let n = self.order();
        let mut a = vec![vec![0i64; n]; n];
        for (u, ns) in self.neighbors.iter().enumerate() {
            for &v in ns {
                a[u][v] = 1;
            }
        }
        a
    }

    /// The common degree when the graph is regular.
    pub fn regular_degree(&self) -> Option<usize> {
        let d = self.neighbors.first()?.len();
        self.neighbors.iter().all(|n| n.len() == d).then_some(d)
    }

    fn bfs(&self, source: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.order()];
        dist[source] = Some(0);
        let mut queue = VecDeque::from([source]);
        while let Some(u) = queue.pop_front() {
            let du = dist[u].expect("queued vertices have a distance");
            for &v in &self.neighbors[u] {
                if dist[v].is_none() {
                    dist[v] = Some(du + 1);
                    queue.push_back(v);
                }
            }
        }
        dist
    }

    pub fn is_connected(&self) -> bool {
        self.order() == 0 || self.bfs(0).iter().all(Option::is_some)
    }

    /// Proper 2-colouring check.
    pub fn is_bipartite(&self) -> bool {
        let mut colour = vec![None; self.order()];
        for start in 0..self.order() {
            if colour[start].is_some() {
                continue;
            }
            colour[start] = Some(false);
            let mut queue = VecDeque::from([start]);
            while let Some(u) = queue.pop_front() {
                let cu = colour[u].expect("coloured");
                for &v in &self.neighbors[u] {
                    match colour[v] {
                        None => {
                            colour[v] = Some(!cu);
                            queue.push_back(v);
                        }
                        Some(cv) if cv == cu => return false,
                        Some(_) => {}
                    }
                }
            }
        }
        true
    }

    /// Largest BFS distance over all vertex pairs; `None` when disconnected.
    pub fn diameter(&self) -> Option<usize> {
        let mut best = 0;
        for s in 0..self.order() {
            for d in self.bfs(s) {
                best = best.max(d?);
            }
        }
        Some(best)
    }

    /// Size of a largest clique (branch and bound over candidate sets).
    pub fn clique_number(&self) -> usize {
        let mut best = 0;
        let all: Vec<usize> = (0..self.order()).collect();
        self.extend_clique(0, &all, &mut best);
        best
    }

    fn extend_clique(&self, size: usize, candidates: &[usize], best: &mut usize) {
        if candidates.is_empty() {
            *best = (*best).max(size);
            return;
        }
        for (idx, &v) in candidates.iter().enumerate() {
            // Even taking every remaining candidate cannot beat the record.
            if size + candidates.len() - idx <= *best {
                return;
            }
            let next: Vec<usize> = candidates[idx + 1..]
                .iter()
                .copied()
                .filter(|&w| self.has_edge(v, w))
                .collect();
            self.extend_clique(size + 1, &next, best);
        }
    }

    /// Entrywise sum of two graphs on the same vertex set; `None` if they
    /// share an edge or differ in order.
    pub fn edge_disjoint_sum(&self, other: &Graph) -> Option<Graph> {
        if self.order() != other.order() {
            return None;
        }
        let edges = self.edges().into_iter().chain(other.edges());
        Graph::from_edges(self.order(), edges).ok()
    }
}

/// A bipartite graph with colour classes `X = {0..x_size}` and
/// `Y = {0..y_size}`; edges are `(x, y)` pairs kept in lexicographic order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BipartiteGraph {
    x_size: usize,
    y_size: usize,
    edges: BTreeSet<(usize, usize)>,
}

impl BipartiteGraph {
    pub fn new(
        x_size: usize,
        y_size: usize,
        edges: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Self> {
        if x_size == 0 || y_size == 0 {
            return Err(Error::InvalidArgument(format!(
                "colour classes must be non-empty, got {x_size} and {y_size}"
            )));
        }
        let mut g = BipartiteGraph {
            x_size,
            y_size,
            edges: BTreeSet::new(),
        };
        for (x, y) in edges {
            g.add_edge(x, y)?;
        }
        Ok(g)
    }

    pub fn add_edge(&mut self, x: usize, y: usize) -> Result<()> {
        if x >= self.x_size || y >= self.y_size {
            return Err(Error::InvalidArgument(format!(
                "edge ({x},{y}) out of range for classes of size {} and {}",
                self.x_size, self.y_size
            )));
        }
        if !self.edges.insert((x, y)) {
            return Err(Error::InvalidArgument(format!("duplicate edge ({x},{y})")));
        }
        Ok(())
    }

    pub fn x_size(&self) -> usize {
        self.x_size
    }

    pub fn y_size(&self) -> usize {
        self.y_size
    }

    /// `ν = |X| + |Y|`.
    pub fn order(&self) -> usize {
        self.x_size + self.y_size
    }

    /// `e`, the number of edges.
    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges in the fixed `(x, y)` lexicographic order, which is also the
    /// vertex order of the line graph.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.edges.iter().copied()
    }

    pub fn has_edge(&self, x: usize, y: usize) -> bool {
        self.edges.contains(&(x, y))
    }

    pub fn x_degrees(&self) -> Vec<usize> {
        let mut d = vec![0; self.x_size];
        for &(x, _) in &self.edges {
            d[x] += 1;
        }
        d
    }

    pub fn y_degrees(&self) -> Vec<usize> {
        let mut d = vec![0; self.y_size];
        for &(_, y) in &self.edges {
            d[y] += 1;
        }
        d
    }

    pub fn max_degree(&self) -> usize {
        self.x_degrees()
            .into_iter()
            .chain(self.y_degrees())
            .max()
            .unwrap_or(0)
    }

    /// `s` when every vertex of both classes has degree `s`.
    pub fn regular_degree(&self) -> Option<usize> {
        let mut all = self.x_degrees().into_iter().chain(self.y_degrees());
        let s = all.next()?;
        all.all(|d| d == s).then_some(s)
    }

    /// The underlying simple graph with `X` numbered first, then `Y`.
    pub fn to_graph(&self) -> Graph {
        let shift = self.x_size;
        Graph::from_edges(self.order(), self.edges().map(|(x, y)| (x, shift + y)))
            .expect("bipartite edges are valid graph edges")
    }

    pub fn is_connected(&self) -> bool {
        self.to_graph().is_connected()
    }

    /// Line graph `L(Γ)`: one vertex per edge of Γ (in [`Self::edges`]
    /// order), adjacent when the edges share an endpoint.
    pub fn line_graph(&self) -> Result<Graph> {
        let (gx, gy) = self.star_decomposition()?;
        Ok(gx
            .edge_disjoint_sum(&gy)
            .expect("no two edges share both endpoints"))
    }

    /// `(G_X, G_Y)` on the line graph's vertex set: edges of Γ are adjacent
    /// in `G_X` (resp. `G_Y`) when they share their `X` (resp. `Y`) end.
    pub fn star_decomposition(&self) -> Result<(Graph, Graph)> {
        if self.edges.is_empty() {
            return Err(Error::InvalidArgument("graph has no edges".into()));
        }
        let edges: Vec<(usize, usize)> = self.edges().collect();
        let mut by_x = vec![Vec::new(); self.x_size];
        let mut by_y = vec![Vec::new(); self.y_size];
        for (idx, &(x, y)) in edges.iter().enumerate() {
            by_x[x].push(idx);
            by_y[y].push(idx);
        }
        let cliques = |groups: &[Vec<usize>]| {
            let pairs = groups.iter().flat_map(|g| {
                g.iter()
                    .enumerate()
                    .flat_map(move |(a, &u)| g[a + 1..].iter().map(move |&v| (u, v)))
            });
            Graph::from_edges(edges.len(), pairs).expect("clique edges are distinct")
        };
        Ok((cliques(&by_x), cliques(&by_y)))
    }

    /// `(α, β)`: the degree sequences of `X` and `Y` as partitions.
    pub fn degree_partitions(&self) -> Result<(Partition, Partition)> {
        let dx = self.x_degrees();
        let dy = self.y_degrees();
        if let Some(x) = dx.iter().position(|&d| d == 0) {
            return Err(Error::Precondition(format!("vertex x{x} is isolated")));
        }
        if let Some(y) = dy.iter().position(|&d| d == 0) {
            return Err(Error::Precondition(format!("vertex y{y} is isolated")));
        }
        let to_p = |d: Vec<usize>| Partition::new(d.into_iter().map(|v| v as u64).collect());
        Ok((to_p(dx), to_p(dy)))
    }

    /// Same colour classes, edges flipped between `X` and `Y`.
    pub fn bipartite_complement(&self) -> BipartiteGraph {
        let edges = (0..self.x_size)
            .flat_map(|x| (0..self.y_size).map(move |y| (x, y)))
            .filter(|e| !self.edges.contains(e))
            .collect();
        BipartiteGraph {
            x_size: self.x_size,
            y_size: self.y_size,
            edges,
        }
    }
}
