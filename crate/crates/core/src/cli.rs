//! The `lrhorn` command line.
//!
//! Exit codes: `0` success, `1` a theorem-violation finding, `2` usage or
//! input errors (including unparsable graph files), `3` I/O failures.

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_rational::BigRational;
use rayon::prelude::*;
use serde::Serialize;
use serde_json::json;

use crate::error::{Error, Result};
use crate::graphs::{
    numeric_spectrum, parse_bipartite, poly_to_string, BipartiteGraph, ExactSpectrum, LineGraphJson,
};
use crate::horn::{
    first_violation, generate_t, generate_u, weyl_bounds, HornViolation, Scalar, SpectrumVector,
    DEFAULT_TOL,
};
use crate::lr::{lr_coefficient, lr_positive};
use crate::partitions::Partition;
use crate::sampling::sample_necessity;
use crate::spectra::{
    analyze_line_graph_with, classify_regular_ramanujan_case, enumerate_p, ramanujan_verdict,
    round12, AnalyzeOptions, RamanujanVerdict, SpectrumReport,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VIOLATION: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_IO: i32 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "lrhorn",
    version,
    about = "Horn inequalities, LR coefficients and line graph spectra"
)]
struct Cli {
    /// Output mode for stdout.
    #[arg(long, value_enum, global = true, default_value_t = Format::Text)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Littlewood-Richardson coefficient c^gamma_{alpha beta}.
    Lr(LrArgs),
    #[command(subcommand)]
    Horn(HornCommand),
    #[command(subcommand)]
    Graph(GraphCommand),
    #[command(subcommand)]
    Spectra(SpectraCommand),
    #[command(subcommand)]
    Corpus(CorpusCommand),
}

#[derive(Debug, Args)]
struct LrArgs {
    #[arg(long)]
    alpha: Partition,
    #[arg(long)]
    beta: Partition,
    #[arg(long)]
    gamma: Partition,
    /// Print the coefficient (default).
    #[arg(long, conflicts_with = "positive")]
    count: bool,
    /// Print `true`/`false`, stopping at the first LR tableau.
    #[arg(long)]
    positive: bool,
}

#[derive(Debug, Subcommand)]
enum HornCommand {
    /// List T^n_r (or U^n_r) one triple per line.
    Triples {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        r: usize,
        #[arg(long)]
        u_only: bool,
    },
    /// Trace condition plus every T^n_r inequality, r < n.
    Check {
        #[arg(long, allow_hyphen_values = true)]
        alpha: String,
        #[arg(long, allow_hyphen_values = true)]
        beta: String,
        #[arg(long, allow_hyphen_values = true)]
        gamma: String,
        #[arg(long, default_value_t = DEFAULT_TOL)]
        tol: f64,
    },
    /// Weyl window for gamma_k.
    Weyl {
        #[arg(long, allow_hyphen_values = true)]
        alpha: String,
        #[arg(long, allow_hyphen_values = true)]
        beta: String,
        #[arg(long)]
        k: usize,
    },
    /// Random symmetric pairs checked against every necessary condition.
    Sample {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 1000)]
        trials: usize,
        #[arg(long, default_value_t = DEFAULT_TOL)]
        tol: f64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

#[derive(Debug, Subcommand)]
enum GraphCommand {
    /// Spectrum of the graph in the file.
    Spectrum {
        #[arg(long)]
        file: PathBuf,
        #[arg(long, conflicts_with = "numeric")]
        exact: bool,
        #[arg(long)]
        numeric: bool,
    },
    /// Write the line graph as JSON.
    Linegraph {
        #[arg(long)]
        file: PathBuf,
        #[arg(long)]
        out: PathBuf,
    },
    /// Bipartite complement, in the text graph format.
    Complement {
        #[arg(long)]
        file: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Debug, Subcommand)]
enum SpectraCommand {
    /// Members of P(alpha, beta), one per line.
    EnumP {
        #[arg(long)]
        alpha: Partition,
        #[arg(long)]
        beta: Partition,
    },
    /// Full line graph report.
    Analyze {
        #[arg(long)]
        file: PathBuf,
        /// Also write the JSON report to this path.
        #[arg(long)]
        json: Option<PathBuf>,
        /// Enumerate P(alpha, beta) even when the line graph is not integral.
        #[arg(long)]
        p_set: bool,
    },
    /// Ramanujan verdicts for the line graph, plus the regular-case label.
    Ramanujan {
        #[arg(long)]
        file: PathBuf,
    },
}

#[derive(Debug, Subcommand)]
enum CorpusCommand {
    /// Analyze every graph file in a directory.
    Verify { dir: PathBuf },
}

/// Outcome of a subcommand: stdout text and exit code.
struct Outcome {
    stdout: String,
    code: i32,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome {
            stdout,
            code: EXIT_OK,
        }
    }
}

/// Runs the CLI on `args` (including the program name).
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let rendered = e.render().to_string();
            if e.use_stderr() {
                let _ = err.write_all(rendered.as_bytes());
            } else {
                let _ = out.write_all(rendered.as_bytes());
            }
            return code;
        }
    };
    match dispatch(cli) {
        Ok(o) => {
            if out.write_all(o.stdout.as_bytes()).is_err() {
                return EXIT_IO;
            }
            o.code
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            match e {
                Error::Io(_) => EXIT_IO,
                Error::TheoremViolation(_) => EXIT_VIOLATION,
                _ => EXIT_USAGE,
            }
        }
    }
}

fn dispatch(cli: Cli) -> Result<Outcome> {
    let json = cli.format == Format::Json;
    match cli.command {
        Command::Lr(a) => cmd_lr(a, json),
        Command::Horn(h) => cmd_horn(h, json),
        Command::Graph(g) => cmd_graph(g, json),
        Command::Spectra(s) => cmd_spectra(s, json),
        Command::Corpus(CorpusCommand::Verify { dir }) => cmd_corpus(&dir, json),
    }
}

fn to_json<T: Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string(v).expect("report types serialize");
    s.push('\n');
    s
}

fn cmd_lr(a: LrArgs, json: bool) -> Result<Outcome> {
    let text = if a.positive {
        let v = lr_positive(&a.alpha, &a.beta, &a.gamma);
        if json {
            to_json(&json!({ "positive": v }))
        } else {
            format!("{v}\n")
        }
    } else {
        let c = lr_coefficient(&a.alpha, &a.beta, &a.gamma);
        if json {
            to_json(&json!({ "count": c.to_string() }))
        } else {
            format!("{c}\n")
        }
    };
    Ok(Outcome::ok(text))
}

/// Spectrum vectors from the CLI, exact when every entry is an integer or
/// a fraction `p/q`.
enum Vectors {
    Exact(Vec<SpectrumVector<BigRational>>),
    Numeric(Vec<SpectrumVector<f64>>),
}

fn tokens(s: &str) -> Vec<String> {
    let s = s.trim();
    if s == "-" || s.is_empty() {
        return Vec::new();
    }
    s.split(',').map(|t| t.trim().to_string()).collect()
}

/// Parses the inputs, pads with zeros to a common length and sorts each
/// vector descending.
fn parse_vectors(inputs: &[&str]) -> Result<Vectors> {
    let toks: Vec<Vec<String>> = inputs.iter().map(|s| tokens(s)).collect();
    let n = toks.iter().map(Vec::len).max().unwrap_or(0);
    if n == 0 {
        return Err(Error::InvalidArgument("all spectra are empty".into()));
    }
    let exact: Option<Vec<Vec<BigRational>>> = toks
        .iter()
        .map(|v| v.iter().map(|t| t.parse::<BigRational>().ok()).collect())
        .collect();
    if let Some(vals) = exact {
        return Ok(Vectors::Exact(
            vals.into_iter().map(|v| pad_sort(v, n)).collect(),
        ));
    }
    let numeric: Vec<Vec<f64>> = toks
        .iter()
        .map(|v| {
            v.iter()
                .map(|t| {
                    t.parse::<f64>()
                        .map_err(|_| Error::Parse(format!("bad number {t:?}")))
                })
                .collect()
        })
        .collect::<Result<_>>()?;
    Ok(Vectors::Numeric(
        numeric.into_iter().map(|v| pad_sort(v, n)).collect(),
    ))
}

fn pad_sort<T: Scalar>(mut v: Vec<T>, n: usize) -> SpectrumVector<T> {
    v.resize(n, T::zero());
    SpectrumVector::from_unsorted(v)
}

fn fmt_vec<T: std::fmt::Display>(v: &[T]) -> String {
    v.iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join(",")
}

fn check_report<T: Scalar + std::fmt::Display>(
    v: &[SpectrumVector<T>],
    tol: f64,
    mode: &str,
    json: bool,
) -> Result<String> {
    let violation = first_violation(&v[0], &v[1], &v[2], tol)?;
    if json {
        return Ok(to_json(&json!({
            "mode": mode,
            "n": v[0].len(),
            "alpha": fmt_vec(v[0].values()),
            "beta": fmt_vec(v[1].values()),
            "gamma": fmt_vec(v[2].values()),
            "compatible": violation.is_none(),
            "violation": violation.as_ref().map(ToString::to_string),
        })));
    }
    Ok(match violation {
        None => "compatible\n".to_string(),
        Some(HornViolation::Trace) => "incompatible\nviolated: trace condition\n".to_string(),
        Some(HornViolation::Inequality(t)) => format!("incompatible\nviolated: {t}\n"),
    })
}

fn weyl_report<T: Scalar + std::fmt::Display>(
    v: &[SpectrumVector<T>],
    k: usize,
    json: bool,
) -> Result<String> {
    let w = weyl_bounds(&v[0], &v[1], k)?;
    let lower = w.lower.map(|x| x.to_string());
    let upper = w.upper.map(|x| x.to_string());
    if json {
        return Ok(to_json(&json!({ "k": k, "lower": lower, "upper": upper })));
    }
    Ok(format!(
        "{} {}\n",
        lower.unwrap_or_else(|| "-inf".into()),
        upper.unwrap_or_else(|| "inf".into())
    ))
}

fn cmd_horn(h: HornCommand, json: bool) -> Result<Outcome> {
    match h {
        HornCommand::Triples { n, r, u_only } => {
            let triples = if u_only {
                generate_u(n, r)?
            } else {
                generate_t(n, r)?.to_vec()
            };
            if json {
                let lines: Vec<String> = triples.iter().map(ToString::to_string).collect();
                return Ok(Outcome::ok(to_json(
                    &json!({ "n": n, "r": r, "triples": lines }),
                )));
            }
            Ok(Outcome::ok(
                triples.iter().map(|t| format!("{t}\n")).collect(),
            ))
        }
        HornCommand::Check {
            alpha,
            beta,
            gamma,
            tol,
        } => {
            let text = match parse_vectors(&[&alpha, &beta, &gamma])? {
                Vectors::Exact(v) => check_report(&v, 0.0, "exact", json)?,
                Vectors::Numeric(v) => check_report(&v, tol, "numeric", json)?,
            };
            Ok(Outcome::ok(text))
        }
        HornCommand::Weyl { alpha, beta, k } => {
            let text = match parse_vectors(&[&alpha, &beta])? {
                Vectors::Exact(v) => weyl_report(&v, k, json)?,
                Vectors::Numeric(v) => weyl_report(&v, k, json)?,
            };
            Ok(Outcome::ok(text))
        }
        HornCommand::Sample {
            n,
            trials,
            tol,
            seed,
        } => {
            if n == 0 {
                return Err(Error::InvalidArgument("--n must be positive".into()));
            }
            let s = sample_necessity(n, trials, tol, seed)?;
            let text = if json {
                to_json(&s)
            } else {
                format!(
                    "n={} trials={} seed={} inequalities_checked={} trace_violations={} inequality_violations={} weyl_violations={}\n",
                    s.n, s.trials, s.seed, s.inequalities_checked, s.trace_violations,
                    s.inequality_violations, s.weyl_violations
                )
            };
            let code = if s.violations() > 0 {
                EXIT_VIOLATION
            } else {
                EXIT_OK
            };
            Ok(Outcome { stdout: text, code })
        }
    }
}

fn read_graph(path: &Path) -> Result<BipartiteGraph> {
    let text = fs::read_to_string(path).map_err(|e| {
        Error::Io(std::io::Error::new(
            e.kind(),
            format!("{}: {e}", path.display()),
        ))
    })?;
    parse_bipartite(&text).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))
}

fn write_file(path: &Path, contents: &str) -> Result<()> {
    fs::write(path, contents).map_err(|e| {
        Error::Io(std::io::Error::new(
            e.kind(),
            format!("{}: {e}", path.display()),
        ))
    })
}

fn fmt_real(x: f64) -> String {
    round12(x).to_string()
}

fn fmt_roots(roots: &[(i64, usize)]) -> String {
    roots
        .iter()
        .map(|(v, m)| format!("{v}^{m}"))
        .collect::<Vec<_>>()
        .join(" ")
}

fn cmd_graph(g: GraphCommand, json: bool) -> Result<Outcome> {
    match g {
        GraphCommand::Spectrum {
            file,
            exact: _,
            numeric,
        } => {
            let graph = read_graph(&file)?.to_graph();
            if numeric {
                let ev = numeric_spectrum(&graph);
                let text = if json {
                    to_json(
                        &json!({ "eigenvalues": ev.iter().map(|&x| round12(x)).collect::<Vec<_>>() }),
                    )
                } else {
                    format!(
                        "{}\n",
                        ev.iter()
                            .map(|&x| fmt_real(x))
                            .collect::<Vec<_>>()
                            .join(",")
                    )
                };
                return Ok(Outcome::ok(text));
            }
            let spec = ExactSpectrum::of(&graph);
            let text = if json {
                to_json(&json!({
                    "char_poly": spec.char_poly.iter().map(ToString::to_string).collect::<Vec<_>>(),
                    "is_integral": spec.is_integral(),
                    "spectrum": spec.integer_roots,
                }))
            } else {
                let roots = spec
                    .integer_roots
                    .as_ref()
                    .map_or_else(|| "not integral".to_string(), |r| fmt_roots(r));
                format!(
                    "char_poly: {}\nspectrum: {roots}\n",
                    poly_to_string(&spec.char_poly)
                )
            };
            Ok(Outcome::ok(text))
        }
        GraphCommand::Linegraph { file, out } => {
            let base = read_graph(&file)?;
            let line = base.line_graph()?;
            let lg = LineGraphJson::new(&base, &line);
            write_file(&out, &to_json(&lg))?;
            let text = if json {
                to_json(
                    &json!({ "order": lg.order, "edges": lg.edges.len(), "out": out.display().to_string() }),
                )
            } else {
                format!(
                    "order={} edges={} -> {}\n",
                    lg.order,
                    lg.edges.len(),
                    out.display()
                )
            };
            Ok(Outcome::ok(text))
        }
        GraphCommand::Complement { file, out } => {
            let comp = read_graph(&file)?.bipartite_complement();
            let body = if json {
                format!("{}\n", comp.to_json())
            } else {
                comp.to_text()
            };
            match out {
                Some(path) => {
                    write_file(&path, &body)?;
                    Ok(Outcome::ok(String::new()))
                }
                None => Ok(Outcome::ok(body)),
            }
        }
    }
}

fn verdict_text(v: &RamanujanVerdict) -> String {
    format!(
        "degree={} lambda2={} least={} bound={} nontrivial_max_abs={} exact={} ramanujan_second_largest={} ramanujan_all_nontrivial={}",
        v.degree,
        fmt_real(v.lambda2),
        fmt_real(v.least),
        fmt_real(v.bound),
        fmt_real(v.nontrivial_max_abs),
        v.exact,
        v.ramanujan_second_largest,
        v.ramanujan_all_nontrivial
    )
}

fn report_text(r: &SpectrumReport) -> String {
    let mut s = format!("{}\n", r.summary());
    s.push_str(&format!("char_poly: {}\n", poly_to_string(&r.char_poly)));
    if let Some(roots) = &r.spectrum {
        s.push_str(&format!("spectrum: {}\n", fmt_roots(roots)));
    }
    if let Some(p) = &r.p_set {
        s.push_str(&format!(
            "p_set: {}\n",
            p.iter()
                .map(ToString::to_string)
                .collect::<Vec<_>>()
                .join(" ")
        ));
    }
    if let Some(v) = &r.ramanujan {
        s.push_str(&format!("ramanujan: {}\n", verdict_text(v)));
    }
    for v in &r.violations {
        s.push_str(&format!("violation: {v}\n"));
    }
    s
}

fn cmd_spectra(s: SpectraCommand, json: bool) -> Result<Outcome> {
    match s {
        SpectraCommand::EnumP { alpha, beta } => {
            let set = enumerate_p(&alpha, &beta)?;
            let text = if json {
                to_json(&set)
            } else {
                set.members.iter().map(|g| format!("{g}\n")).collect()
            };
            Ok(Outcome::ok(text))
        }
        SpectraCommand::Analyze {
            file,
            json: json_path,
            p_set,
        } => {
            let g = read_graph(&file)?;
            let report = analyze_line_graph_with(
                &g,
                AnalyzeOptions {
                    p_set_when_not_integral: p_set,
                },
            )?;
            let encoded = to_json(&report);
            if let Some(path) = json_path {
                write_file(&path, &encoded)?;
            }
            let code = if report.has_violations() {
                EXIT_VIOLATION
            } else {
                EXIT_OK
            };
            let text = if json { encoded } else { report_text(&report) };
            Ok(Outcome { stdout: text, code })
        }
        SpectraCommand::Ramanujan { file } => {
            let g = read_graph(&file)?;
            let line = g.line_graph()?;
            let k = line
                .regular_degree()
                .ok_or_else(|| Error::InvalidArgument("line graph is not regular".into()))?;
            let verdict = ramanujan_verdict(&line, k)?;
            let case = match g.regular_degree() {
                Some(_) => classify_regular_ramanujan_case(&g),
                None => Err(Error::Precondition("base graph is not regular".into())),
            };
            let code = if matches!(case, Err(Error::TheoremViolation(_))) {
                EXIT_VIOLATION
            } else {
                EXIT_OK
            };
            let text = if json {
                let (label, reason) = match &case {
                    Ok(c) => (Some(c), None),
                    Err(e) => (None, Some(e.to_string())),
                };
                to_json(&json!({ "verdict": verdict, "case": label, "case_error": reason }))
            } else {
                let case_line = match &case {
                    Ok(c) => format!(
                        "case: {} s={} n={} lambda_base={}",
                        c.case.as_str(),
                        c.s,
                        c.n,
                        c.lambda_base
                    ),
                    Err(e) => format!("case: n/a ({e})"),
                };
                format!("{}\n{case_line}\n", verdict_text(&verdict))
            };
            Ok(Outcome { stdout: text, code })
        }
    }
}

#[derive(Serialize)]
struct CorpusEntry {
    file: String,
    report: Option<SpectrumReport>,
    skipped: Option<String>,
}

#[derive(Serialize)]
struct CorpusSummary {
    graphs: usize,
    integral: usize,
    non_integral: usize,
    skipped: usize,
    violations: usize,
    entries: Vec<CorpusEntry>,
}

fn cmd_corpus(dir: &Path, json: bool) -> Result<Outcome> {
    let mut files: Vec<PathBuf> = fs::read_dir(dir)
        .map_err(|e| {
            Error::Io(std::io::Error::new(
                e.kind(),
                format!("{}: {e}", dir.display()),
            ))
        })?
        .filter_map(|entry| entry.ok().map(|e| e.path()))
        .filter(|p| p.is_file())
        .collect();
    files.sort();
    let graphs: Vec<(String, BipartiteGraph)> = files
        .iter()
        .map(|p| {
            Ok((
                p.file_name()
                    .unwrap_or_default()
                    .to_string_lossy()
                    .into_owned(),
                read_graph(p)?,
            ))
        })
        .collect::<Result<_>>()?;
    // Ordered collect keeps output in input order.
    let entries: Vec<CorpusEntry> = graphs
        .par_iter()
        .map(
            |(name, g)| match analyze_line_graph_with(g, AnalyzeOptions::default()) {
                Ok(r) => CorpusEntry {
                    file: name.clone(),
                    report: Some(r),
                    skipped: None,
                },
                Err(e) => CorpusEntry {
                    file: name.clone(),
                    report: None,
                    skipped: Some(e.to_string()),
                },
            },
        )
        .collect();
    let reports = entries.iter().filter_map(|e| e.report.as_ref());
    let summary = CorpusSummary {
        graphs: entries.len(),
        integral: reports.clone().filter(|r| r.is_integral).count(),
        non_integral: reports.clone().filter(|r| !r.is_integral).count(),
        skipped: entries.iter().filter(|e| e.skipped.is_some()).count(),
        violations: reports.filter(|r| r.has_violations()).count(),
        entries,
    };
    let code = if summary.violations > 0 {
        EXIT_VIOLATION
    } else {
        EXIT_OK
    };
    if json {
        return Ok(Outcome {
            stdout: to_json(&summary),
            code,
        });
    }
    let mut text = String::new();
    for e in &summary.entries {
        match (&e.report, &e.skipped) {
            (Some(r), _) => {
                text.push_str(&format!("{}: {}\n", e.file, r.summary()));
                for v in &r.violations {
                    text.push_str(&format!("{}: violation: {v}\n", e.file));
                }
            }
            (None, Some(why)) => text.push_str(&format!("{}: skipped: {why}\n", e.file)),
            (None, None) => {}
        }
    }
    text.push_str(&format!(
        "graphs={} integral={} non_integral={} skipped={} violations={}\n",
        summary.graphs, summary.integral, summary.non_integral, summary.skipped, summary.violations
    ));
    Ok(Outcome { stdout: text, code })
}
