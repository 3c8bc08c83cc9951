//! Randomized necessity check of Horn's conditions on real symmetric pairs.

use nalgebra::{DMatrix, SymmetricEigen};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::Result;
use crate::horn::{check_inequality, generate_t, trace_condition, weyl_bounds, SpectrumVector};

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct SampleSummary {
    pub n: usize,
    pub trials: usize,
    pub seed: u64,
    pub inequalities_checked: usize,
    pub trace_violations: usize,
    pub inequality_violations: usize,
    pub weyl_violations: usize,
}

impl SampleSummary {
    pub fn violations(&self) -> usize {
        self.trace_violations + self.inequality_violations + self.weyl_violations
    }
}

/// Symmetric matrix with independent entries uniform in `[-1, 1]` on and
/// above the diagonal.
pub fn random_symmetric<R: Rng>(rng: &mut R, n: usize) -> DMatrix<f64> {
    let mut m = DMatrix::zeros(n, n);
    for i in 0..n {
        for j in i..n {
            let v = rng.random_range(-1.0..=1.0);
            m[(i, j)] = v;
            m[(j, i)] = v;
        }
    }
    m
}

pub fn sorted_spectrum(m: DMatrix<f64>) -> SpectrumVector<f64> {
    SpectrumVector::from_unsorted(SymmetricEigen::new(m).eigenvalues.iter().copied().collect())
}

/// Draws `trials` pairs `(A, B)` of `n × n` symmetric matrices and checks
/// the trace condition, every `T^n_r` inequality for `r < n` and every Weyl
/// window on the spectra of `A`, `B`, `A + B`.
pub fn sample_necessity(n: usize, trials: usize, tol: f64, seed: u64) -> Result<SampleSummary> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let triples: Vec<_> = (1..n).map(|r| generate_t(n, r)).collect::<Result<_>>()?;
    let mut summary = SampleSummary {
        n,
        trials,
        seed,
        ..Default::default()
    };
    for _ in 0..trials {
        let a = random_symmetric(&mut rng, n);
        let b = random_symmetric(&mut rng, n);
        let c = &a + &b;
        let (alpha, beta, gamma) = (sorted_spectrum(a), sorted_spectrum(b), sorted_spectrum(c));
        if !trace_condition(&alpha, &beta, &gamma, tol)? {
            summary.trace_violations += 1;
        }
        for t in triples.iter().flat_map(|ts| ts.iter()) {
            summary.inequalities_checked += 1;
            if !check_inequality(t, &alpha, &beta, &gamma, tol)? {
                summary.inequality_violations += 1;
            }
        }
        for k in 1..=n {
            let w = weyl_bounds(&alpha, &beta, k)?;
            if !w.contains(&gamma.values()[k - 1], tol) {
                summary.weyl_violations += 1;
            }
        }
    }
    Ok(summary)
}
