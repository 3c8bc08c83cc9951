//! Exact characteristic polynomials, integer root extraction and a numeric
//! symmetric eigensolver fallback.

use nalgebra::{DMatrix, SymmetricEigen};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::Graph;

/// Characteristic polynomial of a graph together with its integer root
/// multiset when the polynomial splits over `Z`.
///
/// Coefficients run from the leading `x^n` term down to the constant term,
/// so `x^4 - 4x^2` is `[1, 0, -4, 0, 0]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExactSpectrum {
    pub char_poly: Vec<BigInt>,
    /// `(eigenvalue, multiplicity)` in descending eigenvalue order.
    pub integer_roots: Option<Vec<(i64, usize)>>,
}

impl ExactSpectrum {
    pub fn of(g: &Graph) -> Self {
        let char_poly = char_poly_exact(g);
        let integer_roots = integer_roots_within(&char_poly, g.max_degree() as u64);
        ExactSpectrum {
            char_poly,
            integer_roots,
        }
    }

    pub fn is_integral(&self) -> bool {
        self.integer_roots.is_some()
    }

    /// Eigenvalues with multiplicity, descending.
    pub fn eigenvalues(&self) -> Option<Vec<i64>> {
        self.integer_roots.as_ref().map(|roots| {
            roots
                .iter()
                .flat_map(|&(v, m)| std::iter::repeat_n(v, m))
                .collect()
        })
    }

    pub fn multiplicity(&self, value: i64) -> Option<usize> {
        self.integer_roots
            .as_ref()
            .map(|r| r.iter().find(|&&(v, _)| v == value).map_or(0, |&(_, m)| m))
    }
}

/// `det(xI - A)` by the Faddeev-LeVerrier recurrence over big integers.
///
/// With `M_1 = I`, `c_0 = 1`:
/// `c_k = -tr(A M_k) / k` and `M_{k+1} = A M_k + c_k I`. The division is
/// exact for integer matrices. `A` is applied through adjacency lists, so a
/// step costs `O(n^2 · Δ)` big-integer additions.
pub fn char_poly_exact(g: &Graph) -> Vec<BigInt> {
    let n = g.order();
    let mut coeffs = Vec::with_capacity(n + 1);
    coeffs.push(BigInt::one());
    let mut m: Vec<Vec<BigInt>> = identity(n);
    for k in 1..=n {
        let am = apply_adjacency(g, &m);
        let trace: BigInt = (0..n).map(|i| &am[i][i]).sum();
        let (c, rem) = (-trace).div_rem(&BigInt::from(k));
        debug_assert!(rem.is_zero(), "Faddeev-LeVerrier division must be exact");
        if k < n {
            m = am;
            for (i, row) in m.iter_mut().enumerate() {
                row[i] += &c;
            }
        }
        coeffs.push(c);
    }
    coeffs
}

fn identity(n: usize) -> Vec<Vec<BigInt>> {
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    if i == j {
                        BigInt::one()
                    } else {
                        BigInt::zero()
                    }
                })
                .collect()
        })
        .collect()
}

fn apply_adjacency(g: &Graph, m: &[Vec<BigInt>]) -> Vec<Vec<BigInt>> {
    let n = g.order();
    let mut out = vec![vec![BigInt::zero(); n]; n];
    for (i, row) in out.iter_mut().enumerate() {
        for &l in g.neighbors(i) {
            for (dst, src) in row.iter_mut().zip(&m[l]) {
                *dst += src;
            }
        }
    }
    out
}

/// Synthetic division by `(x - root)`; returns the quotient when the
/// remainder vanishes.
fn deflate(poly: &[BigInt], root: &BigInt) -> Option<Vec<BigInt>> {
    let mut q = Vec::with_capacity(poly.len().saturating_sub(1));
    let mut acc = BigInt::zero();
    for c in poly {
        acc = &acc * root + c;
        q.push(acc.clone());
    }
    let rem = q.pop()?;
    rem.is_zero().then_some(q)
}

/// Integer roots of a monic polynomial (coefficients leading first) when it
/// splits completely over `Z`, searching candidates in `[-bound, bound]`.
///
/// Powers of `x` are factored out first; every other candidate must divide
/// the current constant term. `bound` must dominate every root's absolute
/// value for the verdict to be complete; for adjacency matrices the maximum
/// degree does.
pub fn integer_roots_within(poly: &[BigInt], bound: u64) -> Option<Vec<(i64, usize)>> {
    let mut p: Vec<BigInt> = poly.to_vec();
    if p.first().is_none_or(|c| !c.is_one()) {
        return None;
    }
    let mut roots: Vec<(i64, usize)> = Vec::new();
    let zeros = p.iter().rev().take_while(|c| c.is_zero()).count();
    p.truncate(p.len() - zeros);
    if zeros > 0 {
        roots.push((0, zeros));
    }
    for mag in 1..=bound as i64 {
        for cand in [mag, -mag] {
            if p.len() == 1 {
                break;
            }
            let root = BigInt::from(cand);
            let mut mult = 0;
            while p.len() > 1 && p.last().expect("non-empty").is_multiple_of(&root) {
                match deflate(&p, &root) {
                    Some(q) => {
                        p = q;
                        mult += 1;
                    }
                    None => break,
                }
            }
            if mult > 0 {
                roots.push((cand, mult));
            }
        }
    }
    if p.len() != 1 {
        return None;
    }
    roots.sort_by_key(|r| std::cmp::Reverse(r.0));
    Some(roots)
}

/// The integer spectrum of `g`, or `None` when `g` is not integral.
pub fn integer_spectrum(g: &Graph) -> Option<Vec<(i64, usize)>> {
    ExactSpectrum::of(g).integer_roots
}

/// All adjacency eigenvalues, descending.
pub fn numeric_spectrum(g: &Graph) -> Vec<f64> {
    let n = g.order();
    if n == 0 {
        return Vec::new();
    }
    let a = DMatrix::from_fn(n, n, |i, j| if g.has_edge(i, j) { 1.0 } else { 0.0 });
    let mut ev: Vec<f64> = SymmetricEigen::new(a).eigenvalues.iter().copied().collect();
    ev.sort_by(|a, b| b.total_cmp(a));
    ev
}

/// Number of eigenvalues within `tol` of `-2`.
pub fn minus_two_multiplicity_numeric(spectrum: &[f64], tol: f64) -> usize {
    spectrum.iter().filter(|&&v| (v + 2.0).abs() <= tol).count()
}

/// Human-readable polynomial in `x`, e.g. `x^4 - 4x^2`.
pub fn poly_to_string(poly: &[BigInt]) -> String {
    let deg = poly.len().saturating_sub(1);
    let mut out = String::new();
    for (idx, c) in poly.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let power = deg - idx;
        let mag = c.abs();
        if out.is_empty() {
            if c.is_negative() {
                out.push('-');
            }
        } else {
            out.push_str(if c.is_negative() { " - " } else { " + " });
        }
        if !mag.is_one() || power == 0 {
            out.push_str(&mag.to_string());
        }
        match power {
            0 => {}
            1 => out.push('x'),
            _ => out.push_str(&format!("x^{power}")),
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}
