//! Candidate spectra `P(α, β)` for line graphs of bipartite graphs and the
//! checks built on them: spectrum recovery for integral line graphs,
//! diameter bounds, Ramanujan verdicts and the regular-case classification.
//!
//! For a bipartite `Γ` with colour-class degree partitions `α` (on `X`) and
//! `β` (on `Y`), `e = |α| = |β|` edges and `ν = l(α) + l(β)` vertices, the
//! adjacency matrix of `L(Γ)` splits as `A(G_X) + A(G_Y)` where each summand
//! is a disjoint union of cliques. Shifting by `2I` turns the three spectra
//! into partitions `γ`, `α`, `β` (padded with zeros), so Horn's conditions
//! (equivalently `c^γ_{αβ} > 0`) constrain the line graph spectrum. Closed
//! walks of length 2 and 3 pin down two more moment identities.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graphs::{numeric_spectrum, BipartiteGraph, ExactSpectrum, Graph};
use crate::lr::lr_positive;
use crate::partitions::{enumerate_partitions, Partition};

/// Clustering tolerance when reading eigenvalue multiplicities numerically.
pub const CLUSTER_TOL: f64 = 1e-6;
/// Tolerance for numeric eigenvalue inequalities.
pub const NUMERIC_TOL: f64 = 1e-9;

fn binom2(v: u64) -> BigInt {
    let v = BigInt::from(v);
    &v * (&v - 1) / 2
}

fn binom3(v: u64) -> BigInt {
    let v = BigInt::from(v);
    &v * (&v - 1) * (&v - 2) / 6
}

/// `Σ_{i<ν} (γ_i − 2)^p`, reading missing parts of `γ` as zero.
fn shifted_power_sum(gamma: &Partition, nu: usize, p: u32) -> BigInt {
    (0..nu.saturating_sub(1))
        .map(|i| {
            let shifted: BigInt = BigInt::from(gamma.part(i)) - 2;
            shifted.pow(p)
        })
        .sum()
}

/// Second-moment condition:
/// `Σ (γ_i − 2)^2 = 2(Σ C(α_j, 2) + Σ C(β_k, 2)) − 4(e − ν + 1)`.
pub fn moment_c(gamma: &Partition, alpha: &Partition, beta: &Partition, e: u64, nu: usize) -> bool {
    let pairs: BigInt = alpha
        .parts()
        .iter()
        .chain(beta.parts())
        .map(|&v| binom2(v))
        .sum();
    let cyclomatic = BigInt::from(e) - BigInt::from(nu) + 1;
    shifted_power_sum(gamma, nu, 2) == 2 * pairs - 4 * cyclomatic
}

/// Third-moment condition:
/// `Σ (γ_i − 2)^3 = 6(Σ C(α_j, 3) + Σ C(β_k, 3)) + 8(e − ν + 1)`.
pub fn moment_d(gamma: &Partition, alpha: &Partition, beta: &Partition, e: u64, nu: usize) -> bool {
    let triples: BigInt = alpha
        .parts()
        .iter()
        .chain(beta.parts())
        .map(|&v| binom3(v))
        .sum();
    let cyclomatic = BigInt::from(e) - BigInt::from(nu) + 1;
    shifted_power_sum(gamma, nu, 3) == 6 * triples + 8 * cyclomatic
}

/// The set `P(α, β)` of candidate shifted line graph spectra.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CandidateSet {
    pub alpha: Partition,
    pub beta: Partition,
    pub e: u64,
    pub nu: usize,
    /// Descending lexicographic order.
    pub members: Vec<Partition>,
}

impl CandidateSet {
    pub fn contains(&self, gamma: &Partition) -> bool {
        self.members.contains(gamma)
    }

    /// `max k(γ)` over the members.
    pub fn max_distinct_parts(&self) -> Option<usize> {
        self.members.iter().map(Partition::distinct_parts).max()
    }
}

/// All `γ ⊢ 2e` with exactly `ν − 1` parts, `γ_1 > γ_i` for `i ≥ 2`, both
/// moment conditions and `c^γ_{αβ} > 0`.
///
/// The search caps `γ_1 ≤ α_1 + β_1`, the `k = 1` Weyl upper bound.
pub fn enumerate_p(alpha: &Partition, beta: &Partition) -> Result<CandidateSet> {
    enumerate_p_capped(alpha, beta, alpha.first() + beta.first())
}

/// [`enumerate_p`] with an explicit cap on `γ_1`; any cap `≥ 2e` searches
/// the whole space.
pub fn enumerate_p_capped(alpha: &Partition, beta: &Partition, cap: u64) -> Result<CandidateSet> {
    if alpha.size() != beta.size() {
        return Err(Error::InvalidArgument(format!(
            "|alpha| = {} differs from |beta| = {}",
            alpha.size(),
            beta.size()
        )));
    }
    let nu = alpha.length() + beta.length();
    if nu < 2 {
        return Err(Error::InvalidArgument(format!(
            "need l(alpha) + l(beta) >= 2, got {nu}"
        )));
    }
    let e = alpha.size();
    let members = enumerate_partitions(2 * e, nu - 1, cap.max(1))
        // Only the first comparison matters on a weakly decreasing sequence.
        .filter(|g| g.length() < 2 || g.part(0) > g.part(1))
        .filter(|g| moment_c(g, alpha, beta, e, nu))
        .filter(|g| moment_d(g, alpha, beta, e, nu))
        .filter(|g| lr_positive(alpha, beta, g))
        .collect();
    Ok(CandidateSet {
        alpha: alpha.clone(),
        beta: beta.clone(),
        e,
        nu,
        members,
    })
}

/// Reals are reported with 12 significant digits.
pub fn round12(x: f64) -> f64 {
    if !x.is_finite() || x == 0.0 {
        return x;
    }
    format!("{x:.11e}").parse().unwrap_or(x)
}

mod real12 {
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(x: &f64, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_f64(super::round12(*x))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<f64, D::Error> {
        f64::deserialize(d)
    }
}

mod bigints {
    use num_bigint::BigInt;
    use serde::de::Error;
    use serde::{Deserialize, Deserializer, Serialize, Serializer};

    pub fn serialize<S: Serializer>(v: &[BigInt], s: S) -> Result<S::Ok, S::Error> {
        v.iter()
            .map(ToString::to_string)
            .collect::<Vec<_>>()
            .serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<BigInt>, D::Error> {
        Vec::<String>::deserialize(d)?
            .iter()
            .map(|s| s.parse().map_err(D::Error::custom))
            .collect()
    }
}

/// Ramanujan test for a `k`-regular graph, under both readings of the
/// bound: `|λ_2| ≤ 2√(k−1)` on the second largest eigenvalue alone, and the
/// same bound on every eigenvalue except `k` (and `−k` when bipartite).
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RamanujanVerdict {
    pub degree: usize,
    #[serde(with = "real12")]
    pub lambda2: f64,
    #[serde(with = "real12")]
    pub least: f64,
    #[serde(with = "real12")]
    pub bound: f64,
    /// Largest `|λ|` over the nontrivial eigenvalues (0 when there are none).
    #[serde(with = "real12")]
    pub nontrivial_max_abs: f64,
    /// Comparisons were done exactly on an integer spectrum.
    pub exact: bool,
    pub ramanujan_second_largest: bool,
    pub ramanujan_all_nontrivial: bool,
}

/// Ramanujan verdict for a `k`-regular graph of order at least 2.
pub fn ramanujan_verdict(g: &Graph, k: usize) -> Result<RamanujanVerdict> {
    match g.regular_degree() {
        Some(d) if d == k => {}
        _ => {
            return Err(Error::InvalidArgument(format!("graph is not {k}-regular")));
        }
    }
    if g.order() < 2 || k == 0 {
        return Err(Error::InvalidArgument(
            "Ramanujan verdicts need a regular graph of degree >= 1 on >= 2 vertices".into(),
        ));
    }
    let exact = ExactSpectrum::of(g);
    Ok(verdict_from(g, k, &exact))
}

fn verdict_from(g: &Graph, k: usize, exact: &ExactSpectrum) -> RamanujanVerdict {
    let bipartite = g.is_bipartite();
    let bound = 2.0 * ((k - 1) as f64).sqrt();
    if let Some(ev) = exact.eigenvalues() {
        let k_i = k as i64;
        let four_k1 = 4 * (k_i - 1);
        let lambda2 = ev[1];
        let mut rest = ev.clone();
        rest.remove(0);
        if bipartite {
            if let Some(pos) = rest.iter().position(|&v| v == -k_i) {
                rest.remove(pos);
            }
        }
        let max_abs = rest.iter().map(|v| v.abs()).max().unwrap_or(0);
        return RamanujanVerdict {
            degree: k,
            lambda2: lambda2 as f64,
            least: *ev.last().expect("order >= 2") as f64,
            bound,
            nontrivial_max_abs: max_abs as f64,
            exact: true,
            ramanujan_second_largest: lambda2 * lambda2 <= four_k1,
            ramanujan_all_nontrivial: max_abs * max_abs <= four_k1,
        };
    }
    let ev = numeric_spectrum(g);
    let mut rest = ev[1..].to_vec();
    if bipartite {
        rest.pop();
    }
    let max_abs = rest.iter().fold(0.0f64, |m, v| m.max(v.abs()));
    RamanujanVerdict {
        degree: k,
        lambda2: ev[1],
        least: *ev.last().expect("order >= 2"),
        bound,
        nontrivial_max_abs: max_abs,
        exact: false,
        ramanujan_second_largest: ev[1].abs() <= bound + NUMERIC_TOL,
        ramanujan_all_nontrivial: max_abs <= bound + NUMERIC_TOL,
    }
}

/// Everything the line graph analysis of one bipartite graph produces.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SpectrumReport {
    pub alpha: Partition,
    pub beta: Partition,
    pub e: u64,
    pub nu: usize,
    pub is_integral: bool,
    #[serde(with = "bigints")]
    pub char_poly: Vec<BigInt>,
    /// `(eigenvalue, multiplicity)`, descending; present when integral.
    pub spectrum: Option<Vec<(i64, usize)>>,
    /// Top `ν − 1` eigenvalues shifted by `+2`; present when integral.
    pub gamma: Option<Partition>,
    pub p_set: Option<Vec<Partition>>,
    pub minus_two_multiplicity: usize,
    pub diameter: usize,
    pub max_k_gamma: Option<usize>,
    pub two_omega: usize,
    pub ramanujan: Option<RamanujanVerdict>,
    /// Theorem checks that failed on this graph; empty on a healthy run.
    pub violations: Vec<String>,
}

impl SpectrumReport {
    pub fn has_violations(&self) -> bool {
        !self.violations.is_empty()
    }

    /// One-line summary used by the CLI and corpus runs.
    pub fn summary(&self) -> String {
        let fmt_opt = |v: Option<usize>| v.map_or("-".to_string(), |x| x.to_string());
        format!(
            "alpha={} beta={} e={} nu={} integral={} gamma={} minus_two={} diameter={} max_k_gamma={} two_omega={} violations={}",
            self.alpha,
            self.beta,
            self.e,
            self.nu,
            self.is_integral,
            self.gamma.as_ref().map_or("-".to_string(), ToString::to_string),
            self.minus_two_multiplicity,
            self.diameter,
            fmt_opt(self.max_k_gamma),
            self.two_omega,
            self.violations.len()
        )
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct AnalyzeOptions {
    /// Also enumerate `P(α, β)` when the line graph is not integral.
    pub p_set_when_not_integral: bool,
}

/// Analyzes `L(Γ)` for a connected bipartite `Γ`.
pub fn analyze_line_graph(g: &BipartiteGraph) -> Result<SpectrumReport> {
    analyze_line_graph_with(g, AnalyzeOptions::default())
}

pub fn analyze_line_graph_with(g: &BipartiteGraph, opts: AnalyzeOptions) -> Result<SpectrumReport> {
    if !g.is_connected() {
        return Err(Error::Precondition("base graph is not connected".into()));
    }
    let (alpha, beta) = g.degree_partitions()?;
    let e = g.edge_count() as u64;
    let nu = g.order();
    let cyclomatic = g.edge_count() + 1 - nu;
    let line = g.line_graph()?;
    let exact = ExactSpectrum::of(&line);
    let mut violations = Vec::new();

    let (minus_two, gamma) = match exact.eigenvalues() {
        Some(ev) => {
            let minus_two = ev.iter().filter(|&&v| v == -2).count();
            let (top, tail) = ev.split_at(nu - 1);
            if tail.iter().any(|&v| v != -2) {
                violations.push(format!(
                    "eigenvalues below the top nu-1 are not all -2: {tail:?}"
                ));
            }
            if top.iter().any(|&v| v + 2 <= 0) {
                violations.push(format!("top nu-1 eigenvalues {top:?} include values <= -2"));
            }
            let gamma = Partition::new(top.iter().map(|&v| (v + 2).max(0) as u64).collect());
            (minus_two, Some(gamma))
        }
        None => {
            let ev = numeric_spectrum(&line);
            if ev.last().is_some_and(|&l| l < -2.0 - NUMERIC_TOL) {
                violations.push(format!("least eigenvalue {} is below -2", ev[ev.len() - 1]));
            }
            (
                crate::graphs::minus_two_multiplicity_numeric(&ev, CLUSTER_TOL),
                None,
            )
        }
    };
    if minus_two != cyclomatic {
        violations.push(format!(
            "multiplicity of -2 is {minus_two}, expected e - nu + 1 = {cyclomatic}"
        ));
    }

    let p_set = if gamma.is_some() || opts.p_set_when_not_integral {
        Some(enumerate_p(&alpha, &beta)?)
    } else {
        None
    };
    if let (Some(gamma), Some(p)) = (&gamma, &p_set) {
        if !p.contains(gamma) {
            violations.push(format!("recovered gamma {gamma} is not in P(alpha, beta)"));
        }
    }

    let diameter = line
        .diameter()
        .expect("line graph of a connected graph is connected");
    let omega = line.clique_number();
    let delta = g.max_degree();
    if delta >= 2 && omega != delta {
        violations.push(format!(
            "clique number {omega} differs from max degree {delta}"
        ));
    }
    let max_k_gamma = p_set.as_ref().and_then(CandidateSet::max_distinct_parts);
    if gamma.is_some() {
        match max_k_gamma {
            Some(mk) if diameter <= mk => {}
            Some(mk) => violations.push(format!("diameter {diameter} exceeds max k(gamma) = {mk}")),
            None => violations.push("P(alpha, beta) is empty".into()),
        }
        if diameter > 2 * omega {
            violations.push(format!(
                "diameter {diameter} exceeds 2 omega = {}",
                2 * omega
            ));
        }
    }

    let ramanujan = match line.regular_degree() {
        Some(k) if k >= 1 && line.order() >= 2 => Some(verdict_from(&line, k, &exact)),
        _ => None,
    };

    Ok(SpectrumReport {
        alpha,
        beta,
        e,
        nu,
        is_integral: exact.is_integral(),
        char_poly: exact.char_poly.clone(),
        spectrum: exact.integer_roots.clone(),
        gamma,
        p_set: p_set.map(|p| p.members),
        minus_two_multiplicity: minus_two,
        diameter,
        max_k_gamma,
        two_omega: 2 * omega,
        ramanujan,
        violations,
    })
}

/// The spectrum template of the line graph of an `s`-regular bipartite
/// graph with classes of size `n` whose base spectrum carries `±2` with
/// multiplicity `x` and `±1` with multiplicity `y`:
/// `{−2^{(s−2)n+1}, (s−4)^x, (s−3)^y, (s−2)^{2n−2x−2y−2}, (s−1)^y, s^x, 2s−2}`.
///
/// Returned as `(eigenvalue, multiplicity)` pairs, descending, with equal
/// values merged and zero multiplicities dropped.
pub fn regular_line_spectrum_template(s: i64, n: i64, x: i64, y: i64) -> Result<Vec<(i64, usize)>> {
    let middle = 2 * n - 2 * x - 2 * y - 2;
    if s < 2 || n < 1 || x < 0 || y < 0 || middle < 0 {
        return Err(Error::InvalidArgument(format!(
            "template needs s >= 2, n >= 1, x, y >= 0 and 2n-2x-2y-2 >= 0; got s={s}, n={n}, x={x}, y={y}"
        )));
    }
    let entries = [
        (-2, (s - 2) * n + 1),
        (s - 4, x),
        (s - 3, y),
        (s - 2, middle),
        (s - 1, y),
        (s, x),
        (2 * s - 2, 1),
    ];
    let total: i64 = entries.iter().map(|&(_, m)| m).sum();
    if total != s * n {
        return Err(Error::InvalidArgument(format!(
            "template multiplicities sum to {total}, expected s*n = {}",
            s * n
        )));
    }
    let mut merged: BTreeMap<i64, usize> = BTreeMap::new();
    for (v, m) in entries {
        if m > 0 {
            *merged.entry(v).or_default() += m as usize;
        }
    }
    Ok(merged.into_iter().rev().collect())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CaseLabel {
    Lambda0,
    Lambda1,
    Lambda2,
}

impl CaseLabel {
    pub fn as_str(self) -> &'static str {
        match self {
            CaseLabel::Lambda0 => "lambda0",
            CaseLabel::Lambda1 => "lambda1",
            CaseLabel::Lambda2 => "lambda2",
        }
    }

    /// Admissible `s` range for each case.
    pub fn degree_range(self) -> std::ops::RangeInclusive<usize> {
        match self {
            CaseLabel::Lambda0 => 3..=10,
            CaseLabel::Lambda1 => 3..=8,
            CaseLabel::Lambda2 => 3..=6,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RamanujanCase {
    pub case: CaseLabel,
    /// Degree of the base graph.
    pub s: usize,
    /// Size of each colour class.
    pub n: usize,
    /// Second largest eigenvalue of the base graph.
    pub lambda_base: i64,
    /// Multiplicity of `2` in the base spectrum.
    pub x: usize,
    /// Multiplicity of `1` in the base spectrum.
    pub y: usize,
}

/// Classifies a connected `s`-regular bipartite `Γ` (`s ≥ 3`) whose line
/// graph is integral and Ramanujan (second-largest reading) by the second
/// largest eigenvalue of `Γ`, which must be 0, 1 or 2.
pub fn classify_regular_ramanujan_case(g: &BipartiteGraph) -> Result<RamanujanCase> {
    if !g.is_connected() {
        return Err(Error::Precondition("base graph is not connected".into()));
    }
    let s = g
        .regular_degree()
        .ok_or_else(|| Error::Precondition("base graph is not regular".into()))?;
    if s < 3 {
        return Err(Error::Precondition(format!(
            "line graph degree 2s-2 = {} is below 3",
            2 * s as i64 - 2
        )));
    }
    let n = g.x_size();
    let line = g.line_graph()?;
    let line_spec = ExactSpectrum::of(&line);
    let Some(line_roots) = line_spec.integer_roots.clone() else {
        return Err(Error::Precondition("line graph is not integral".into()));
    };
    let verdict = verdict_from(&line, 2 * s - 2, &line_spec);
    if !verdict.ramanujan_second_largest {
        return Err(Error::Precondition(format!(
            "line graph is not Ramanujan: lambda2 = {} > {:.6}",
            verdict.lambda2, verdict.bound
        )));
    }

    let base = ExactSpectrum::of(&g.to_graph());
    let base_ev = base.eigenvalues().ok_or_else(|| {
        Error::TheoremViolation("base graph of an integral line graph is not integral".into())
    })?;
    let lambda_base = base_ev[1];
    let case = match lambda_base {
        0 => CaseLabel::Lambda0,
        1 => CaseLabel::Lambda1,
        2 => CaseLabel::Lambda2,
        other => {
            return Err(Error::TheoremViolation(format!(
                "second largest base eigenvalue is {other}, expected 0, 1 or 2"
            )))
        }
    };
    if !case.degree_range().contains(&s) {
        return Err(Error::TheoremViolation(format!(
            "case {} requires s in {:?}, got s = {s}",
            case.as_str(),
            case.degree_range()
        )));
    }
    let x = base.multiplicity(2).unwrap_or(0);
    let y = base.multiplicity(1).unwrap_or(0);
    let template = regular_line_spectrum_template(s as i64, n as i64, x as i64, y as i64)?;
    if template != line_roots {
        return Err(Error::TheoremViolation(format!(
            "line spectrum {line_roots:?} does not match the template {template:?}"
        )));
    }
    Ok(RamanujanCase {
        case,
        s,
        n,
        lambda_base,
        x,
        y,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graphs::{
        complete_bipartite, complete_graph, cycle, disjoint_union, matching, path,
    };

    fn p(v: &[u64]) -> Partition {
        Partition::new(v.to_vec())
    }

    #[test]
    fn moment_examples() {
        assert!(moment_c(&p(&[4, 1, 1]), &p(&[3]), &p(&[1, 1, 1]), 3, 4));
        assert!(moment_c(&p(&[4, 2, 2]), &p(&[2, 2]), &p(&[2, 2]), 4, 4));
        assert!(!moment_c(&p(&[3, 2, 1]), &p(&[3]), &p(&[1, 1, 1]), 3, 4));
        assert!(moment_d(&p(&[4, 1, 1]), &p(&[3]), &p(&[1, 1, 1]), 3, 4));
        assert!(moment_d(&p(&[4, 2, 2]), &p(&[2, 2]), &p(&[2, 2]), 4, 4));
        assert!(!moment_d(&p(&[2, 2, 2]), &p(&[3]), &p(&[1, 1, 1]), 3, 4));
    }

    #[test]
    fn enumerate_p_examples() {
        let set = enumerate_p(&p(&[3]), &p(&[1, 1, 1])).unwrap();
        assert_eq!(set.members, vec![p(&[4, 1, 1])]);
        assert_eq!((set.e, set.nu), (3, 4));
        let set = enumerate_p(&p(&[2, 2]), &p(&[2, 2])).unwrap();
        assert!(set.contains(&p(&[4, 2, 2])));
        let set = enumerate_p(&p(&[1]), &p(&[1])).unwrap();
        assert_eq!(set.members, vec![p(&[2])]);
        assert!(enumerate_p(&p(&[2]), &p(&[1])).is_err());
        assert!(enumerate_p(&Partition::empty(), &Partition::empty()).is_err());
    }

    #[test]
    fn analyze_examples() {
        let r = analyze_line_graph(&complete_bipartite(1, 3).unwrap()).unwrap();
        assert!(r.is_integral);
        assert_eq!(r.spectrum, Some(vec![(2, 1), (-1, 2)]));
        assert_eq!(r.gamma, Some(p(&[4, 1, 1])));
        assert_eq!(r.minus_two_multiplicity, 0);
        assert_eq!(r.diameter, 1);
        assert_eq!(r.max_k_gamma, Some(2));
        assert_eq!(r.two_omega, 6);
        assert!(r.violations.is_empty(), "{:?}", r.violations);

        let r = analyze_line_graph(&complete_bipartite(2, 2).unwrap()).unwrap();
        assert_eq!(r.spectrum, Some(vec![(2, 1), (0, 2), (-2, 1)]));
        assert_eq!(r.gamma, Some(p(&[4, 2, 2])));
        assert_eq!(r.minus_two_multiplicity, 1);
        assert_eq!(r.diameter, 2);
        assert_eq!(r.two_omega, 4);
        assert!(r.violations.is_empty(), "{:?}", r.violations);

        let r = analyze_line_graph(&path(4).unwrap()).unwrap();
        assert!(!r.is_integral);
        assert_eq!(
            r.char_poly,
            vec![1, 0, -2, 0]
                .into_iter()
                .map(BigInt::from)
                .collect::<Vec<_>>()
        );
        assert_eq!(r.gamma, None);
        assert_eq!(r.p_set, None);
        assert!(r.violations.is_empty(), "{:?}", r.violations);

        let disconnected = disjoint_union(&[cycle(4).unwrap(), cycle(4).unwrap()]).unwrap();
        assert!(matches!(
            analyze_line_graph(&disconnected),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn ramanujan_examples() {
        let v = ramanujan_verdict(&complete_graph(4), 3).unwrap();
        assert_eq!(v.lambda2, -1.0);
        assert!(v.exact && v.ramanujan_second_largest && v.ramanujan_all_nontrivial);
        assert!(ramanujan_verdict(&complete_graph(4), 2).is_err());
        let l = complete_bipartite(2, 3).unwrap().line_graph().unwrap();
        assert!(ramanujan_verdict(&l, 3).is_ok());
        let p3 = path(4).unwrap().line_graph().unwrap();
        assert!(ramanujan_verdict(&p3, 2).is_err());
    }

    #[test]
    fn template_examples() {
        assert_eq!(
            regular_line_spectrum_template(2, 2, 0, 0).unwrap(),
            vec![(2, 1), (0, 2), (-2, 1)]
        );
        assert_eq!(
            regular_line_spectrum_template(3, 3, 0, 0).unwrap(),
            vec![(4, 1), (1, 4), (-2, 4)]
        );
        assert!(regular_line_spectrum_template(3, 3, 2, 1).is_err());
        assert!(regular_line_spectrum_template(1, 3, 0, 0).is_err());
    }

    #[test]
    fn classify_examples() {
        let c = classify_regular_ramanujan_case(&complete_bipartite(5, 5).unwrap()).unwrap();
        assert_eq!((c.case, c.s), (CaseLabel::Lambda0, 5));
        let c =
            classify_regular_ramanujan_case(&matching(5).unwrap().bipartite_complement()).unwrap();
        assert_eq!((c.case, c.s), (CaseLabel::Lambda1, 4));
        let c6 = cycle(6).unwrap();
        let g = disjoint_union(&[c6.clone(), c6])
            .unwrap()
            .bipartite_complement();
        let c = classify_regular_ramanujan_case(&g).unwrap();
        assert_eq!((c.case, c.s), (CaseLabel::Lambda2, 4));
        assert!(matches!(
            classify_regular_ramanujan_case(&complete_bipartite(2, 2).unwrap()),
            Err(Error::Precondition(_))
        ));
        assert!(matches!(
            classify_regular_ramanujan_case(&complete_bipartite(11, 11).unwrap()),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn round12_behaviour() {
        assert_eq!(round12(2.0 * 2f64.sqrt()), 2.82842712475);
        assert_eq!(round12(0.0), 0.0);
        assert_eq!(round12(9.0), 9.0);
    }
}
