//! Littlewood-Richardson coefficients by counting LR skew tableaux.
//!
//! `c^γ_{αβ}` is the number of semistandard fillings of the skew shape `γ/α`
//! with content `β` whose reverse reading word (right to left along each
//! row, rows top to bottom) is a lattice word. Cells are filled in exactly
//! that reading order, so the lattice condition, row weak increase and column
//! strict increase can all be checked against cells already placed.

use num_bigint::BigUint;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::partitions::Partition;

/// The skew diagram `outer / inner`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SkewShape {
    outer: Partition,
    inner: Partition,
}

impl SkewShape {
    pub fn new(outer: Partition, inner: Partition) -> Result<Self> {
        if !outer.contains(&inner) {
            return Err(Error::InvalidArgument(format!(
                "skew shape {outer}/{inner}: inner diagram is not contained in outer"
            )));
        }
        Ok(SkewShape { outer, inner })
    }

    pub fn outer(&self) -> &Partition {
        &self.outer
    }

    pub fn inner(&self) -> &Partition {
        &self.inner
    }

    pub fn cell_count(&self) -> u64 {
        self.outer.size() - self.inner.size()
    }

    /// Cells in reverse reading order: rows top to bottom, right to left.
    fn reading_cells(&self) -> Vec<(usize, usize)> {
        let mut cells = Vec::with_capacity(self.cell_count() as usize);
        for row in 0..self.outer.length() {
            let lo = self.inner.part(row) as usize;
            let hi = self.outer.part(row) as usize;
            for col in (lo..hi).rev() {
                cells.push((row, col));
            }
        }
        cells
    }
}

/// A Littlewood-Richardson coefficient.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct LRCount(pub BigUint);

impl LRCount {
    pub fn value(&self) -> &BigUint {
        &self.0
    }

    pub fn is_positive(&self) -> bool {
        !self.0.is_zero()
    }
}

impl std::fmt::Display for LRCount {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        self.0.fmt(f)
    }
}

/// `c^γ_{αβ}`; zero whenever no LR tableau can exist.
pub fn lr_coefficient(alpha: &Partition, beta: &Partition, gamma: &Partition) -> LRCount {
    match Search::prepare(alpha, beta, gamma) {
        Some(mut s) => {
            let mut count = BigUint::zero();
            s.run(0, &mut |_| {
                count += 1u32;
                true
            });
            LRCount(count)
        }
        None => LRCount(BigUint::zero()),
    }
}

/// `c^γ_{αβ} > 0`, stopping at the first LR tableau found.
pub fn lr_positive(alpha: &Partition, beta: &Partition, gamma: &Partition) -> bool {
    match Search::prepare(alpha, beta, gamma) {
        Some(mut s) => {
            let mut found = false;
            s.run(0, &mut |_| {
                found = true;
                false
            });
            found
        }
        None => false,
    }
}

/// Backtracking state for one `(α, β, γ)`.
struct Search {
    cells: Vec<(usize, usize)>,
    /// Filled labels per row, indexed by column; 0 = unfilled or inner cell.
    grid: Vec<Vec<u32>>,
    inner: Vec<usize>,
    /// Remaining multiplicity of each label (1-based labels, index label-1).
    remaining: Vec<u64>,
    /// Occurrences of each label so far in the reading word.
    used: Vec<u64>,
}

impl Search {
    fn prepare(alpha: &Partition, beta: &Partition, gamma: &Partition) -> Option<Search> {
        if gamma.size() != alpha.size() + beta.size() || !gamma.contains(alpha) {
            return None;
        }
        if gamma.length() > alpha.length() + beta.length() || !gamma.contains(beta) {
            return None;
        }
        let shape = SkewShape::new(gamma.clone(), alpha.clone()).ok()?;
        let grid = (0..gamma.length())
            .map(|r| vec![0u32; gamma.part(r) as usize])
            .collect();
        Some(Search {
            cells: shape.reading_cells(),
            grid,
            inner: (0..gamma.length())
                .map(|r| alpha.part(r) as usize)
                .collect(),
            remaining: beta.parts().to_vec(),
            used: vec![0; beta.length()],
        })
    }

    /// Fills cell `idx` onward. `on_complete` returns whether to keep going;
    /// the return value of `run` is `false` once the search was stopped.
    fn run(&mut self, idx: usize, on_complete: &mut dyn FnMut(&[Vec<u32>]) -> bool) -> bool {
        if idx == self.cells.len() {
            return on_complete(&self.grid);
        }
        let (row, col) = self.cells[idx];
        // Row weakly increases left to right; we fill right to left, so the
        // cell to the right bounds this label from above.
        let row_cap = self.grid[row]
            .get(col + 1)
            .copied()
            .filter(|&v| v > 0)
            .unwrap_or(self.remaining.len() as u32);
        // Column strictly increases downward; inner cells impose nothing.
        let col_floor = if row > 0 && col >= self.inner[row - 1] {
            self.grid[row - 1][col] + 1
        } else {
            1
        };
        // A lattice word cannot place a label larger than the row index + 1
        // in row `row` of an LR tableau.
        let top = row_cap.min(row as u32 + 1);
        for label in col_floor..=top {
            let k = (label - 1) as usize;
            if self.remaining[k] == 0 {
                continue;
            }
            if k > 0 && self.used[k] + 1 > self.used[k - 1] {
                continue;
            }
            self.grid[row][col] = label;
            self.remaining[k] -= 1;
            self.used[k] += 1;
            let keep_going = self.run(idx + 1, on_complete);
            self.used[k] -= 1;
            self.remaining[k] += 1;
            self.grid[row][col] = 0;
            if !keep_going {
                return false;
            }
        }
        true
    }
}

/// Coefficient as `u64` when it fits, for callers that want a machine word.
pub fn lr_coefficient_u64(alpha: &Partition, beta: &Partition, gamma: &Partition) -> Option<u64> {
    let c = lr_coefficient(alpha, beta, gamma);
    u64::try_from(&c.0).ok()
}
