//! Horn's inequalities, exact Littlewood-Richardson coefficients and the
//! spectral analysis of integral line graphs of bipartite graphs.
//!
//! Modules, bottom-up:
//!
//! - [`partitions`]: canonical integer partitions and a bounded enumerator.
//! - [`lr`]: Littlewood-Richardson coefficients by LR tableau backtracking.
//! - [`horn`]: Horn triple families, the inequality system and Weyl bounds.
//! - [`graphs`]: bipartite graphs, line graphs, exact and numeric spectra.
//! - [`spectra`]: candidate spectra `P(α, β)`, line graph reports and the
//!   Ramanujan analysis of regular line graphs.
//! - [`cli`]: the `lrhorn` command line.

pub mod cli;
pub mod error;
pub mod graphs;
pub mod horn;
pub mod lr;
pub mod partitions;
pub mod sampling;
pub mod spectra;

pub use error::{Error, Result};
pub use graphs::{BipartiteGraph, ExactSpectrum, Graph};
pub use horn::{IndexTriple, SpectrumVector};
pub use lr::{lr_coefficient, lr_positive, LRCount};
pub use partitions::Partition;
pub use spectra::{analyze_line_graph, enumerate_p, CandidateSet, SpectrumReport};
