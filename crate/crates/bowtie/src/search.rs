//! Counterexample search: evaluate graph6 streams exhaustively, or
//! hill-climb over edge mutations, scoring graphs that satisfy a fixed
//! (λ₀, μ₀) bow constraint by how non-tree-like they manage to be
//! (2δ first, then max metric-triangle size, then thinness).
//!
//! Every evaluated graph is additionally pushed through the whole check
//! catalog; a FAIL is surfaced immediately with its witnesses. A fail is a
//! bug until the replayed witness proves otherwise; the replay arithmetic
//! is independent of the scanning loops.

use rand::prelude::*;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::formats;
use crate::graph::{DistanceMatrix, Graph};
use crate::halfint::HalfInt;
use crate::report::{self, Caps, InvariantReport};
use crate::transforms;
use crate::verify::{self, CheckResult};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SearchMode {
    ExhaustiveStream,
    Mutate,
}

#[derive(Debug, Clone, Serialize)]
pub struct SearchConfig {
    pub mode: SearchMode,
    /// Bow constraint the scored candidates must satisfy.
    pub lambda0: u32,
    pub mu0: u32,
    /// Mutate mode: vertex count of the walk.
    pub n: usize,
    /// Mutate mode: number of mutation steps; stream mode ignores it.
    /// Zero evaluates only the seed graph.
    pub budget: u64,
    pub seed: u64,
    pub top_k: usize,
    pub caps: Caps,
    /// Also evaluate the 1-subdivision (and line graph when bipartite)
    /// whenever `n + m` stays at or below this, so the transform checks run.
    pub transform_cap: usize,
}

impl Default for SearchConfig {
    fn default() -> SearchConfig {
        SearchConfig {
            mode: SearchMode::Mutate,
            lambda0: 0,
            mu0: 1,
            n: 10,
            budget: 200,
            seed: 0,
            top_k: 5,
            caps: Caps::default(),
            transform_cap: 120,
        }
    }
}

/// One evaluated graph with its report, catalog results, and score.
#[derive(Debug, Clone, Serialize)]
pub struct Evaluated {
    pub graph6: String,
    pub report: InvariantReport,
    pub checks: Vec<CheckResult>,
    pub failed_checks: Vec<String>,
    /// (2δ, q_max, thinness) when the bow constraint holds.
    pub score: Option<[u32; 3]>,
}

#[derive(Debug, Clone, Serialize)]
pub struct SearchOutcome {
    pub evaluated: u64,
    pub skipped_disconnected: u64,
    /// Top candidates by score, best first.
    pub candidates: Vec<Evaluated>,
    /// Every evaluation with at least one FAIL check.
    pub failures: Vec<Evaluated>,
}

impl SearchOutcome {
    pub fn any_failure(&self) -> bool {
        !self.failures.is_empty()
    }
}

/// Full pipeline for one graph: report, transform reports when affordable,
/// catalog checks, witness replay on any failure.
pub fn evaluate(g: &Graph, config: &SearchConfig) -> Result<Evaluated> {
    let dm = DistanceMatrix::build(g)?;
    let report = report::compute_report(g, &dm, &config.caps, false);
    let affordable = g.n() + g.m() <= config.transform_cap;
    let sub_report = affordable.then(|| {
        let sub = transforms::subdivide(g);
        let sdm = DistanceMatrix::build(&sub).expect("subdivision stays connected");
        report::compute_report(&sub, &sdm, &config.caps, false)
    });
    let line_report = (affordable && report.classes.bipartite.is_true() && g.m() >= 1)
        .then(|| {
            let (lg, _) = transforms::line_graph(g).expect("m >= 1");
            let ldm = DistanceMatrix::build(&lg).expect("line graph of connected is connected");
            report::compute_report(&lg, &ldm, &config.caps, false)
        });
    let checks = verify::check_all(&report, sub_report.as_ref(), line_report.as_ref());
    let failed_checks: Vec<String> = checks
        .iter()
        .filter(|c| c.failed())
        .map(|c| {
            // triage: a fail whose witnesses do not replay is an internal bug
            let replay = report::verify_report_witnesses(g, &dm, &report);
            format!(
                "{} ({})",
                c.id,
                match replay {
                    Ok(()) => "witnesses replay: candidate refutation",
                    Err(_) => "witness replay failed: implementation bug",
                }
            )
        })
        .collect();
    let eligible = report
        .bow
        .satisfied(HalfInt::from(config.lambda0), HalfInt::from(config.mu0));
    let score = eligible.then_some([
        report.two_delta.two_delta,
        report.triangles.q_max,
        report.thinness.value,
    ]);
    Ok(Evaluated {
        graph6: formats::serialize_graph6(g)?,
        report,
        checks,
        failed_checks,
        score,
    })
}

fn keep_top(candidates: &mut Vec<Evaluated>, top_k: usize) {
    candidates.sort_by(|a, b| b.score.cmp(&a.score).then(a.graph6.cmp(&b.graph6)));
    candidates.dedup_by(|a, b| a.graph6 == b.graph6);
    candidates.truncate(top_k);
}

/// Evaluates every connected graph of a one-per-line graph6 stream.
/// Disconnected entries are counted and skipped; malformed lines are
/// errors.
pub fn search_stream(text: &str, config: &SearchConfig) -> Result<SearchOutcome> {
    let mut graphs = Vec::new();
    for (line_no, parsed) in formats::parse_graph6_stream(text) {
        match parsed {
            Ok(g) => graphs.push(g),
            Err(e) => {
                return Err(Error::malformed(format!("stream line {line_no}"), e.to_string()))
            }
        }
    }
    let evaluations: Vec<Option<Evaluated>> = graphs
        .par_iter()
        .map(|g| match evaluate(g, config) {
            Ok(e) => Some(e),
            Err(Error::Disconnected { .. }) => None,
            Err(e) => panic!("evaluation failed unexpectedly: {e}"),
        })
        .collect();
    let mut outcome = SearchOutcome {
        evaluated: 0,
        skipped_disconnected: 0,
        candidates: Vec::new(),
        failures: Vec::new(),
    };
    for evaluation in evaluations {
        match evaluation {
            None => outcome.skipped_disconnected += 1,
            Some(e) => {
                outcome.evaluated += 1;
                if !e.failed_checks.is_empty() {
                    outcome.failures.push(e.clone());
                }
                if e.score.is_some() {
                    outcome.candidates.push(e);
                    keep_top(&mut outcome.candidates, config.top_k);
                }
            }
        }
    }
    Ok(outcome)
}

/// Hill-climb from a seed graph by single edge toggles that keep the graph
/// simple and connected. Plateau moves are accepted half the time so the
/// walk can drift across equal-score ridges; the best scorers overall are
/// retained.
pub fn search_mutate(config: &SearchConfig, seed_graph: Option<Graph>) -> Result<SearchOutcome> {
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    let start = match seed_graph {
        Some(g) => g,
        None => crate::families::gnp_connected(config.n, 2.5 / config.n.max(3) as f64, config.seed),
    };
    let mut outcome = SearchOutcome {
        evaluated: 0,
        skipped_disconnected: 0,
        candidates: Vec::new(),
        failures: Vec::new(),
    };
    let note = |e: &Evaluated, outcome: &mut SearchOutcome| {
        outcome.evaluated += 1;
        if !e.failed_checks.is_empty() {
            outcome.failures.push(e.clone());
        }
        if e.score.is_some() {
            outcome.candidates.push(e.clone());
            keep_top(&mut outcome.candidates, config.top_k);
        }
    };

    let mut current = start;
    let mut current_eval = evaluate(&current, config)?;
    note(&current_eval, &mut outcome);

    for _ in 0..config.budget {
        let n = current.n();
        let mut edges = current.edges();
        let u = rng.random_range(0..n);
        let v = rng.random_range(0..n);
        if u == v {
            continue;
        }
        let pair = (u.min(v), u.max(v));
        if current.has_edge(pair.0, pair.1) {
            edges.retain(|&e| e != pair);
        } else {
            edges.push(pair);
        }
        let candidate = Graph::build(n, edges).expect("toggle keeps the graph simple");
        if !candidate.is_connected() {
            outcome.skipped_disconnected += 1;
            continue;
        }
        let eval = evaluate(&candidate, config)?;
        note(&eval, &mut outcome);
        let accept = match (eval.score, current_eval.score) {
            (Some(new), Some(old)) => new > old || (new == old && rng.random::<bool>()),
            (Some(_), None) => true,
            (None, None) => rng.random::<bool>(), // drift until the constraint holds
            (None, Some(_)) => false,
        };
        if accept {
            current = candidate;
            current_eval = eval;
        }
    }
    Ok(outcome)
}
