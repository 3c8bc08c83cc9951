//! Graph file formats.
//!
//! Text:
//! ```text
//! X 2
//! Y 2
//! 0 0
//! 0 1
//! ```
//! JSON: `{"x_size":2,"y_size":2,"edges":[[0,0],[0,1]]}`.

use serde::{Deserialize, Serialize};

use super::{BipartiteGraph, Graph};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BipartiteGraphJson {
    pub x_size: usize,
    pub y_size: usize,
    pub edges: Vec<[usize; 2]>,
}

impl From<&BipartiteGraph> for BipartiteGraphJson {
    fn from(g: &BipartiteGraph) -> Self {
        BipartiteGraphJson {
            x_size: g.x_size(),
            y_size: g.y_size(),
            edges: g.edges().map(|(x, y)| [x, y]).collect(),
        }
    }
}

impl TryFrom<BipartiteGraphJson> for BipartiteGraph {
    type Error = Error;

    fn try_from(j: BipartiteGraphJson) -> Result<Self> {
        BipartiteGraph::new(j.x_size, j.y_size, j.edges.into_iter().map(|[x, y]| (x, y)))
    }
}

/// Line graph output: `labels[v]` is the `(x, y)` edge of the base graph that
/// vertex `v` stands for.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LineGraphJson {
    pub order: usize,
    pub edges: Vec<[usize; 2]>,
    pub labels: Vec<[usize; 2]>,
}

impl LineGraphJson {
    pub fn new(base: &BipartiteGraph, line: &Graph) -> Self {
        LineGraphJson {
            order: line.order(),
            edges: line.edges().into_iter().map(|(u, v)| [u, v]).collect(),
            labels: base.edges().map(|(x, y)| [x, y]).collect(),
        }
    }
}

impl BipartiteGraph {
    /// Serializes to the text format.
    pub fn to_text(&self) -> String {
        let mut s = format!("X {}\nY {}\n", self.x_size(), self.y_size());
        for (x, y) in self.edges() {
            s.push_str(&format!("{x} {y}\n"));
        }
        s
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&BipartiteGraphJson::from(self)).expect("plain struct serializes")
    }
}

/// Parses either format, picking JSON when the first non-blank character is
/// `{`. Blank lines and `#` comments are allowed in the text format.
pub fn parse_bipartite(input: &str) -> Result<BipartiteGraph> {
    if input.trim_start().starts_with('{') {
        let j: BipartiteGraphJson =
            serde_json::from_str(input).map_err(|e| Error::Parse(e.to_string()))?;
        return j.try_into();
    }
    let mut lines = input
        .lines()
        .enumerate()
        .map(|(n, l)| (n + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty());
    let mut header = |tag: &str| -> Result<usize> {
        let (n, line) = lines
            .next()
            .ok_or_else(|| Error::Parse(format!("missing `{tag} <size>` header")))?;
        let mut it = line.split_whitespace();
        match (it.next(), it.next().map(str::parse::<usize>), it.next()) {
            (Some(t), Some(Ok(v)), None) if t == tag => Ok(v),
            _ => Err(Error::Parse(format!(
                "line {n}: expected `{tag} <size>`, got {line:?}"
            ))),
        }
    };
    let m = header("X")?;
    let n = header("Y")?;
    let mut edges = Vec::new();
    for (ln, line) in lines {
        let mut it = line.split_whitespace().map(str::parse::<usize>);
        match (it.next(), it.next(), it.next()) {
            (Some(Ok(x)), Some(Ok(y)), None) => edges.push((x, y)),
            _ => {
                return Err(Error::Parse(format!(
                    "line {ln}: expected `xi yj`, got {line:?}"
                )))
            }
        }
    }
    BipartiteGraph::new(m, n, edges)
}
