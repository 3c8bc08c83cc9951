//! Horn's triple families `U^n_r`, `T^n_r` and the inequality system they
//! index, plus per-eigenvalue Weyl bounds.
//!
//! A triple `(I, J, K)` of `r`-subsets of `{1..n}` stands for the inequality
//! `Σ_{k∈K} γ_k ≤ Σ_{i∈I} α_i + Σ_{j∈J} β_j` on weakly decreasing spectra.
//! `U^n_r` keeps the triples with `ΣI + ΣJ = ΣK + r(r+1)/2`; `T^n_r` further
//! keeps only those that themselves satisfy every inequality of `T^r_p`,
//! `p < r`, read on the index sequences `(i_1..i_r)`, `(j_1..j_r)`,
//! `(k_1..k_r)`.
//!
//! Two scalar modes share the same code: [`num_rational::BigRational`] for
//! exact checks (tolerance ignored) and `f64` for sampled spectra.

use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Sub};
use std::sync::{Arc, OnceLock, RwLock};

use num_rational::BigRational;
use num_traits::{Signed, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::partitions::Partition;

/// Default tolerance for numeric mode.
pub const DEFAULT_TOL: f64 = 1e-9;

/// An `(I, J, K)` triple of strictly increasing 1-based index sets of equal
/// cardinality inside `{1..n}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct IndexTriple {
    n: usize,
    i: Vec<usize>,
    j: Vec<usize>,
    k: Vec<usize>,
}

impl IndexTriple {
    pub fn new(n: usize, i: Vec<usize>, j: Vec<usize>, k: Vec<usize>) -> Result<Self> {
        let r = i.len();
        if r == 0 || j.len() != r || k.len() != r || r > n {
            return Err(Error::InvalidArgument(format!(
                "index sets must share a cardinality in 1..={n}, got {}, {}, {}",
                i.len(),
                j.len(),
                k.len()
            )));
        }
        for set in [&i, &j, &k] {
            let increasing = set.windows(2).all(|w| w[0] < w[1]);
            if !increasing || set[0] < 1 || set[r - 1] > n {
                return Err(Error::InvalidArgument(format!(
                    "index set {set:?} is not strictly increasing inside 1..={n}"
                )));
            }
        }
        Ok(IndexTriple { n, i, j, k })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn r(&self) -> usize {
        self.i.len()
    }

    pub fn i(&self) -> &[usize] {
        &self.i
    }

    pub fn j(&self) -> &[usize] {
        &self.j
    }

    pub fn k(&self) -> &[usize] {
        &self.k
    }
}

fn fmt_set(f: &mut fmt::Formatter<'_>, set: &[usize]) -> fmt::Result {
    f.write_str("{")?;
    for (idx, v) in set.iter().enumerate() {
        if idx > 0 {
            f.write_str(",")?;
        }
        write!(f, "{v}")?;
    }
    f.write_str("}")
}

/// `I={..} J={..} K={..}`
impl fmt::Display for IndexTriple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("I=")?;
        fmt_set(f, &self.i)?;
        f.write_str(" J=")?;
        fmt_set(f, &self.j)?;
        f.write_str(" K=")?;
        fmt_set(f, &self.k)
    }
}

/// All strictly increasing `r`-subsets of `1..=n`, lexicographic.
fn subsets(n: usize, r: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur: Vec<usize> = (1..=r).collect();
    if r > n {
        return out;
    }
    loop {
        out.push(cur.clone());
        // Advance to the next combination.
        let mut pos = r;
        while pos > 0 && cur[pos - 1] == n - r + pos {
            pos -= 1;
        }
        if pos == 0 {
            return out;
        }
        cur[pos - 1] += 1;
        for q in pos..r {
            cur[q] = cur[q - 1] + 1;
        }
    }
}

fn check_dims(n: usize, r: usize) -> Result<()> {
    if n == 0 || r == 0 || r > n {
        return Err(Error::InvalidArgument(format!(
            "need 1 <= r <= n, got n={n}, r={r}"
        )));
    }
    Ok(())
}

/// `U^n_r`, lexicographically ordered by `(I, J, K)`.
pub fn generate_u(n: usize, r: usize) -> Result<Vec<IndexTriple>> {
    check_dims(n, r)?;
    let subs = subsets(n, r);
    let shift = r * (r + 1) / 2;
    let mut by_sum: HashMap<usize, Vec<&Vec<usize>>> = HashMap::new();
    for s in &subs {
        by_sum.entry(s.iter().sum()).or_default().push(s);
    }
    let mut out = Vec::new();
    for i in &subs {
        let si: usize = i.iter().sum();
        for j in &subs {
            let sj: usize = j.iter().sum();
            let Some(target) = (si + sj).checked_sub(shift) else {
                continue;
            };
            if let Some(ks) = by_sum.get(&target) {
                for k in ks {
                    out.push(IndexTriple {
                        n,
                        i: i.clone(),
                        j: j.clone(),
                        k: (*k).clone(),
                    });
                }
            }
        }
    }
    out.sort();
    Ok(out)
}

type TripleTable = RwLock<HashMap<(usize, usize), Arc<Vec<IndexTriple>>>>;

fn t_table() -> &'static TripleTable {
    static TABLE: OnceLock<TripleTable> = OnceLock::new();
    TABLE.get_or_init(|| RwLock::new(HashMap::new()))
}

/// `T^n_r`, memoized per `(n, r)` across calls and threads.
pub fn generate_t(n: usize, r: usize) -> Result<Arc<Vec<IndexTriple>>> {
    check_dims(n, r)?;
    if let Some(hit) = t_table()
        .read()
        .expect("triple table poisoned")
        .get(&(n, r))
    {
        return Ok(Arc::clone(hit));
    }
    let u = generate_u(n, r)?;
    let filtered = if r == 1 {
        u
    } else {
        // The admissibility filter quantifies over T^r_p for the inner
        // dimension r, not the ambient n.
        let inner: Vec<Arc<Vec<IndexTriple>>> =
            (1..r).map(|p| generate_t(r, p)).collect::<Result<_>>()?;
        u.into_iter()
            .filter(|t| {
                inner
                    .iter()
                    .all(|tp| tp.iter().all(|fgh| admissible(t, fgh)))
            })
            .collect()
    };
    let arc = Arc::new(filtered);
    // Concurrent writers compute identical values; keep whichever landed first.
    let mut table = t_table().write().expect("triple table poisoned");
    Ok(Arc::clone(table.entry((n, r)).or_insert(arc)))
}

/// `Σ_{f∈F} i_f + Σ_{g∈G} j_g ≤ Σ_{h∈H} k_h + p(p+1)/2`.
fn admissible(t: &IndexTriple, fgh: &IndexTriple) -> bool {
    let p = fgh.r();
    let lhs: usize = fgh.i.iter().map(|&f| t.i[f - 1]).sum::<usize>()
        + fgh.j.iter().map(|&g| t.j[g - 1]).sum::<usize>();
    let rhs: usize = fgh.k.iter().map(|&h| t.k[h - 1]).sum::<usize>() + p * (p + 1) / 2;
    lhs <= rhs
}

/// Scalar field for spectrum checks.
pub trait Scalar:
    Clone + PartialOrd + fmt::Debug + Zero + Add<Output = Self> + Sub<Output = Self>
{
    /// `lhs ≤ rhs` up to `tol` (ignored in exact mode).
    fn le_tol(lhs: &Self, rhs: &Self, tol: f64) -> bool;
    /// `|lhs - rhs| ≤ tol` (exact equality in exact mode).
    fn eq_tol(lhs: &Self, rhs: &Self, tol: f64) -> bool;
}

impl Scalar for f64 {
    fn le_tol(lhs: &Self, rhs: &Self, tol: f64) -> bool {
        *lhs <= *rhs + tol
    }

    fn eq_tol(lhs: &Self, rhs: &Self, tol: f64) -> bool {
        (lhs - rhs).abs() <= tol
    }
}

impl Scalar for BigRational {
    fn le_tol(lhs: &Self, rhs: &Self, _tol: f64) -> bool {
        lhs <= rhs
    }

    fn eq_tol(lhs: &Self, rhs: &Self, _tol: f64) -> bool {
        (lhs - rhs).is_zero()
    }
}

/// A weakly decreasing spectrum `(v_1 ≥ … ≥ v_n)`.
#[derive(Clone, Debug, PartialEq)]
pub struct SpectrumVector<T> {
    values: Vec<T>,
}

impl<T: Scalar> SpectrumVector<T> {
    /// Rejects vectors that are not weakly decreasing.
    pub fn new(values: Vec<T>) -> Result<Self> {
        if values.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidArgument(format!(
                "spectrum {values:?} is not weakly decreasing"
            )));
        }
        Ok(SpectrumVector { values })
    }

    /// Sorts an arbitrary multiset of eigenvalues descending.
    pub fn from_unsorted(mut values: Vec<T>) -> Self {
        values.sort_by(|a, b| b.partial_cmp(a).unwrap_or(std::cmp::Ordering::Equal));
        SpectrumVector { values }
    }

    pub fn values(&self) -> &[T] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    fn sum_at(&self, idx: &[usize]) -> T {
        idx.iter()
            .fold(T::zero(), |acc, &i| acc + self.values[i - 1].clone())
    }

    fn total(&self) -> T {
        self.values.iter().cloned().fold(T::zero(), |a, b| a + b)
    }
}

impl SpectrumVector<BigRational> {
    /// Exact spectrum of a partition padded with zeros to length `n`.
    pub fn from_partition(p: &Partition, n: usize) -> Result<Self> {
        let padded = p.padded(n).ok_or_else(|| {
            Error::InvalidArgument(format!("partition {p} has more than {n} parts"))
        })?;
        Ok(SpectrumVector {
            values: padded
                .into_iter()
                .map(|v| BigRational::from_integer(v.into()))
                .collect(),
        })
    }
}

fn same_len<T>(vs: &[&SpectrumVector<T>], n: Option<usize>) -> Result<()> {
    let len = n.unwrap_or(vs[0].values.len());
    if vs.iter().any(|v| v.values.len() != len) {
        return Err(Error::InvalidArgument(format!(
            "spectrum lengths differ: expected {len}, got {:?}",
            vs.iter().map(|v| v.values.len()).collect::<Vec<_>>()
        )));
    }
    Ok(())
}

/// The single inequality indexed by `t`.
pub fn check_inequality<T: Scalar>(
    t: &IndexTriple,
    alpha: &SpectrumVector<T>,
    beta: &SpectrumVector<T>,
    gamma: &SpectrumVector<T>,
    tol: f64,
) -> Result<bool> {
    same_len(&[alpha, beta, gamma], Some(t.n))?;
    let lhs = gamma.sum_at(&t.k);
    let rhs = alpha.sum_at(&t.i) + beta.sum_at(&t.j);
    Ok(T::le_tol(&lhs, &rhs, tol))
}

/// `Σγ = Σα + Σβ`.
pub fn trace_condition<T: Scalar>(
    alpha: &SpectrumVector<T>,
    beta: &SpectrumVector<T>,
    gamma: &SpectrumVector<T>,
    tol: f64,
) -> Result<bool> {
    same_len(&[alpha, beta, gamma], None)?;
    Ok(T::eq_tol(
        &gamma.total(),
        &(alpha.total() + beta.total()),
        tol,
    ))
}

/// First reason a triple of spectra fails Horn's conditions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum HornViolation {
    Trace,
    Inequality(IndexTriple),
}

impl fmt::Display for HornViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            HornViolation::Trace => f.write_str("trace condition"),
            HornViolation::Inequality(t) => t.fmt(f),
        }
    }
}

/// `None` when `(α, β, γ)` passes the trace condition and every `T^n_r`
/// inequality for `r < n`; otherwise the first failure in generation order.
pub fn first_violation<T: Scalar>(
    alpha: &SpectrumVector<T>,
    beta: &SpectrumVector<T>,
    gamma: &SpectrumVector<T>,
    tol: f64,
) -> Result<Option<HornViolation>> {
    if !trace_condition(alpha, beta, gamma, tol)? {
        return Ok(Some(HornViolation::Trace));
    }
    let n = alpha.len();
    for r in 1..n {
        for t in generate_t(n, r)?.iter() {
            if !check_inequality(t, alpha, beta, gamma, tol)? {
                return Ok(Some(HornViolation::Inequality(t.clone())));
            }
        }
    }
    Ok(None)
}

/// Whether `(α, β, γ)` can be the spectra of Hermitian `A`, `B`, `A + B`.
pub fn horn_compatible<T: Scalar>(
    alpha: &SpectrumVector<T>,
    beta: &SpectrumVector<T>,
    gamma: &SpectrumVector<T>,
    tol: f64,
) -> Result<bool> {
    Ok(first_violation(alpha, beta, gamma, tol)?.is_none())
}

/// Exact-mode Horn check on partitions, each padded with zeros to length `n`.
pub fn horn_compatible_partitions(
    alpha: &Partition,
    beta: &Partition,
    gamma: &Partition,
    n: usize,
) -> Result<bool> {
    let a = SpectrumVector::from_partition(alpha, n)?;
    let b = SpectrumVector::from_partition(beta, n)?;
    let c = SpectrumVector::from_partition(gamma, n)?;
    horn_compatible(&a, &b, &c, 0.0)
}

/// Window `[lower, upper]` that must contain `γ_k`.
#[derive(Clone, Debug, PartialEq)]
pub struct WeylBounds<T> {
    /// `max_{i+j=n+k} α_i + β_j`; `None` when no index pair is valid.
    pub lower: Option<T>,
    /// `min_{i+j=k+1} α_i + β_j`; `None` when no index pair is valid.
    pub upper: Option<T>,
}

impl<T: Scalar> WeylBounds<T> {
    pub fn contains(&self, value: &T, tol: f64) -> bool {
        self.lower
            .as_ref()
            .is_none_or(|lo| T::le_tol(lo, value, tol))
            && self
                .upper
                .as_ref()
                .is_none_or(|hi| T::le_tol(value, hi, tol))
    }
}

/// Weyl bounds for `γ_k` given `α`, `β` (k is 1-based).
pub fn weyl_bounds<T: Scalar>(
    alpha: &SpectrumVector<T>,
    beta: &SpectrumVector<T>,
    k: usize,
) -> Result<WeylBounds<T>> {
    same_len(&[alpha, beta], None)?;
    let n = alpha.len();
    if k < 1 || k > n {
        return Err(Error::InvalidArgument(format!("k={k} outside 1..={n}")));
    }
    let pairs = |target: usize| {
        (1..=n).filter_map(move |i| {
            let j = target.checked_sub(i)?;
            (1..=n).contains(&j).then_some((i, j))
        })
    };
    let value = |(i, j): (usize, usize)| alpha.values[i - 1].clone() + beta.values[j - 1].clone();
    let pick = |acc: Option<T>, v: T, take_larger: bool| match acc {
        None => Some(v),
        Some(a) => Some(if (v > a) == take_larger { v } else { a }),
    };
    let lower = pairs(n + k)
        .map(value)
        .fold(None, |acc, v| pick(acc, v, true));
    let upper = pairs(k + 1)
        .map(value)
        .fold(None, |acc, v| pick(acc, v, false));
    Ok(WeylBounds { lower, upper })
}

/// Exact rational from an integer.
pub fn rational(v: i64) -> BigRational {
    BigRational::from_integer(v.into())
}

/// Largest `|x|` in a rational spectrum, handy for scaling tolerances.
pub fn max_abs(v: &SpectrumVector<BigRational>) -> BigRational {
    v.values
        .iter()
        .map(|x| x.abs())
        .max()
        .unwrap_or_else(BigRational::zero)
}
