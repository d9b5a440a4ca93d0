//! Command-line surface: gen, compute, classify, transform, verify, search.
//!
//! Exit codes: 0 on success, 1 on input errors (with a JSON error object on
//! stderr), 2 when verify/search encounters a failed check, so a CI job
//! can gate on the catalog directly.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::json;

use crate::error::{Error, Result};
use crate::families;
use crate::formats::{self, Format};
use crate::graph::{DistanceMatrix, Graph};
use crate::report::{self, Caps, InvariantReport};
use crate::search::{self, SearchConfig, SearchMode};
use crate::transforms;
use crate::verify::{self, CheckResult, CheckStatus};

#[derive(Parser)]
#[command(
    name = "bowtie",
    about = "Exact metric invariants, class recognition, and inequality verification for graphs",
    version
)]
pub struct Cli {
    /// Worker threads for the parallel scans (0 = all cores)
    #[arg(long, global = true, default_value_t = 0)]
    threads: usize,
    /// Default seed for random families whose spec omits one
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Generate a named family and write it out
    Gen {
        /// Family spec, e.g. grid:3,3 (cells), cycle:7, gnp:20,0.2,42
        #[arg(long)]
        family: String,
        #[command(flatten)]
        output: OutputArgs,
        /// Output graph format
        #[arg(long, default_value = "edgelist")]
        format: String,
    },
    /// Measure every invariant of one graph
    Compute {
        #[command(flatten)]
        input: InputArgs,
        #[command(flatten)]
        caps: CapsArgs,
        #[command(flatten)]
        output: OutputArgs,
        /// Include per-invariant wall times (breaks byte-identical output)
        #[arg(long)]
        timings: bool,
    },
    /// Decide membership in the recognized graph classes
    Classify {
        #[command(flatten)]
        input: InputArgs,
        #[command(flatten)]
        caps: CapsArgs,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Apply a graph transform and write the result
    Transform {
        /// subdivide | linegraph
        #[arg(long)]
        op: String,
        #[command(flatten)]
        input: InputArgs,
        #[command(flatten)]
        output: OutputArgs,
        /// Output graph format
        #[arg(long, default_value = "edgelist")]
        out_format: String,
    },
    /// Run the inequality catalog; exit 2 on any failed check
    Verify {
        #[command(flatten)]
        input: InputArgs,
        /// Run the standing corpus instead of a single input
        #[arg(long, value_name = "NAME")]
        suite: Option<String>,
        /// Also compute the 1-subdivision report (enables its checks)
        #[arg(long)]
        with_subdivision: bool,
        /// Also compute the line-graph report (enables its checks)
        #[arg(long)]
        with_linegraph: bool,
        #[command(flatten)]
        caps: CapsArgs,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Exhaustive graph6-stream or mutation search; exit 2 on any failed check
    Search {
        /// exhaustive | mutate
        #[arg(long, default_value = "mutate")]
        mode: String,
        /// graph6 stream file for exhaustive mode
        #[arg(long, value_name = "PATH")]
        r#in: Option<PathBuf>,
        /// Vertex count for mutate mode
        #[arg(long, default_value_t = 10)]
        n: usize,
        /// Mutation steps (0 = evaluate the seed only)
        #[arg(long, default_value_t = 200)]
        budget: u64,
        /// Bow constraint lambda
        #[arg(long, default_value_t = 0)]
        lambda: u32,
        /// Bow constraint mu
        #[arg(long, default_value_t = 1)]
        mu: u32,
        /// Candidates to keep
        #[arg(long, default_value_t = 5)]
        top: usize,
        #[command(flatten)]
        caps: CapsArgs,
        #[command(flatten)]
        output: OutputArgs,
    },
}

#[derive(Args)]
struct InputArgs {
    /// Input graph file
    #[arg(long, value_name = "PATH", conflicts_with = "family")]
    r#in: Option<PathBuf>,
    /// Generate the input from a family spec instead
    #[arg(long)]
    family: Option<String>,
    /// Input format: edgelist | graph6
    #[arg(long, default_value = "edgelist")]
    format: String,
}

#[derive(Args)]
struct CapsArgs {
    /// Slimness is skipped above this vertex count
    #[arg(long, default_value_t = 96)]
    max_n_slimness: usize,
    /// Longest induced cycle the chordality search certifies
    #[arg(long, default_value_t = 16)]
    chordality_cap: u32,
    /// Pseudo-modular scan runs while n*diam is at most this
    #[arg(long, default_value_t = 640)]
    pm_budget: usize,
}

impl CapsArgs {
    fn caps(&self) -> Caps {
        Caps {
            slimness_max_n: self.max_n_slimness,
            chordality_max_len: self.chordality_cap,
            pm_budget: self.pm_budget,
            ..Caps::default()
        }
    }
}

#[derive(Args)]
struct OutputArgs {
    /// Write to a file instead of stdout
    #[arg(long, value_name = "PATH")]
    out: Option<PathBuf>,
    /// Emit JSON (the default)
    #[arg(long)]
    json: bool,
    /// Emit a human-readable table instead of JSON
    #[arg(long, conflicts_with = "json")]
    table: bool,
}

impl InputArgs {
    fn load(&self, seed: u64) -> Result<Graph> {
        match (&self.r#in, &self.family) {
            (Some(path), None) => {
                let bytes = fs::read(path).map_err(|e| {
                    Error::malformed(path.display().to_string(), e.to_string())
                })?;
                formats::parse(&bytes, self.format.parse()?)
            }
            (None, Some(spec)) => families::generate(spec, seed),
            (None, None) => Err(Error::BadParameters(
                "exactly one graph source: --in or --family".into(),
            )),
            (Some(_), Some(_)) => unreachable!("clap conflicts_with"),
        }
    }
}

fn emit(output: &OutputArgs, json: &serde_json::Value, table: String) -> Result<()> {
    let text = if output.table {
        table
    } else {
        let mut s = serde_json::to_string_pretty(json).expect("serializable");
        s.push('\n');
        s
    };
    match &output.out {
        Some(path) => fs::write(path, text)
            .map_err(|e| Error::malformed(path.display().to_string(), e.to_string())),
        None => {
            print!("{text}");
            std::io::stdout().flush().ok();
            Ok(())
        }
    }
}

fn write_graph(g: &Graph, format: &str, out: &Option<PathBuf>) -> Result<()> {
    let parsed: Format = format.parse()?;
    let mut bytes = formats::serialize(g, parsed)?;
    if parsed == Format::Graph6 {
        bytes.push(b'\n');
    }
    match out {
        Some(path) => fs::write(path, bytes)
            .map_err(|e| Error::malformed(path.display().to_string(), e.to_string())),
        None => {
            std::io::stdout().write_all(&bytes).ok();
            Ok(())
        }
    }
}

fn check_table(checks: &[CheckResult]) -> String {
    let mut out = String::new();
    for c in checks {
        let status = match &c.status {
            CheckStatus::Pass => "pass".to_string(),
            CheckStatus::Fail => "FAIL".to_string(),
            CheckStatus::Skipped { reason } => format!("skipped ({reason})"),
        };
        let sides = match (c.lhs, c.rhs) {
            (Some(l), Some(r)) => format!("  [{l} <= {r}]"),
            _ => String::new(),
        };
        out.push_str(&format!("{:<4} {status}{sides}  {}\n", c.id, c.statement));
    }
    out
}

fn report_table(r: &InvariantReport) -> String {
    let slim = match r.slimness_value() {
        Some(v) => v.to_string(),
        None => "skipped".to_string(),
    };
    let mu_row: Vec<String> = (0..=r.bow.diam).map(|l| r.bow.mu_star(l).to_string()).collect();
    format!(
        "n {}  m {}  diameter {}\n2*delta {}  slimness {}  thinness {}  alpha_index {}\nmu*(0..diam): [{}]\nq_max {}  metric triangles {}  ball quasiconvexity {}  balls isometric {}\n",
        r.n,
        r.m,
        r.diameter,
        r.two_delta.two_delta,
        slim,
        r.thinness.value,
        r.alpha_index,
        mu_row.join(", "),
        r.triangles.q_max,
        r.triangles.count,
        r.ball_quasiconvexity.value,
        r.balls_isometric.isometric,
    )
}

struct VerifyBundle {
    report: InvariantReport,
    sub: Option<InvariantReport>,
    line: Option<InvariantReport>,
}

fn build_reports(
    g: &Graph,
    caps: &Caps,
    with_subdivision: bool,
    with_linegraph: bool,
    timings: bool,
) -> Result<VerifyBundle> {
    let dm = DistanceMatrix::build(g)?;
    let report = report::compute_report(g, &dm, caps, timings);
    let sub = if with_subdivision {
        let s = transforms::subdivide(g);
        let sdm = DistanceMatrix::build(&s)?;
        Some(report::compute_report(&s, &sdm, caps, false))
    } else {
        None
    };
    let line = if with_linegraph && report.classes.bipartite.is_true() && g.m() >= 1 {
        let (lg, _) = transforms::line_graph(g)?;
        let ldm = DistanceMatrix::build(&lg)?;
        Some(report::compute_report(&lg, &ldm, caps, false))
    } else {
        None
    };
    Ok(VerifyBundle { report, sub, line })
}

fn cmd_verify_corpus(caps: &Caps, output: &OutputArgs) -> Result<bool> {
    let corpus = families::standing_corpus();
    let mut rows = Vec::new();
    let mut total_fail = 0usize;
    for (name, g) in &corpus {
        let bundle = build_reports(g, caps, true, true, false)?;
        let checks = verify::check_all(&bundle.report, bundle.sub.as_ref(), bundle.line.as_ref());
        let failed: Vec<&str> = checks.iter().filter(|c| c.failed()).map(|c| c.id).collect();
        total_fail += failed.len();
        rows.push(json!({
            "name": name,
            "n": g.n(),
            "m": g.m(),
            "pass": checks.iter().filter(|c| c.passed()).count(),
            "skipped": checks.iter().filter(|c| matches!(c.status, CheckStatus::Skipped{..})).count(),
            "failed": failed,
        }));
    }
    let any_fail = total_fail > 0;
    let table = rows
        .iter()
        .map(|r| format!("{} fails: {}\n", r["name"].as_str().unwrap_or("?"), r["failed"]))
        .collect();
    emit(
        output,
        &json!({"graphs": corpus.len(), "total_failed_checks": total_fail, "results": rows}),
        table,
    )?;
    Ok(any_fail)
}

/// Runs the CLI; returns the process exit code.
pub fn run() -> ExitCode {
    let cli = Cli::parse();
    if cli.threads > 0 {
        rayon::ThreadPoolBuilder::new()
            .num_threads(cli.threads)
            .build_global()
            .ok();
    }
    match dispatch(cli.command, cli.seed) {
        Ok(false) => ExitCode::SUCCESS,
        Ok(true) => ExitCode::from(2),
        Err(e) => {
            let payload = match &e {
                Error::Disconnected { u, v } => {
                    json!({"error": "disconnected", "message": e.to_string(), "witness": [u, v]})
                }
                other => json!({"error": "input", "message": other.to_string()}),
            };
            eprintln!("{payload}");
            ExitCode::FAILURE
        }
    }
}

/// Returns Ok(true) when a failed check should flip the exit code to 2.
fn dispatch(command: Command, seed: u64) -> Result<bool> {
    match command {
        Command::Gen { family, output, format } => {
            let g = families::generate(&family, seed)?;
            write_graph(&g, &format, &output.out)?;
            Ok(false)
        }
        Command::Compute { input, caps, output, timings } => {
            let g = input.load(seed)?;
            let dm = DistanceMatrix::build(&g)?;
            let report = report::compute_report(&g, &dm, &caps.caps(), timings);
            emit(&output, &serde_json::to_value(&report).expect("serializable"), report_table(&report))?;
            Ok(false)
        }
        Command::Classify { input, caps, output } => {
            let g = input.load(seed)?;
            let dm = DistanceMatrix::build(&g)?;
            let flags = crate::classes::classify(&g, &dm, &caps.caps());
            let table = serde_json::to_string_pretty(&flags).expect("serializable") + "\n";
            emit(&output, &serde_json::to_value(&flags).expect("serializable"), table)?;
            Ok(false)
        }
        Command::Transform { op, input, output, out_format } => {
            let g = input.load(seed)?;
            let result = match op.as_str() {
                "subdivide" => transforms::subdivide(&g),
                "linegraph" => transforms::line_graph(&g)?.0,
                other => {
                    return Err(Error::BadParameters(format!(
                        "unknown transform {other:?} (subdivide | linegraph)"
                    )))
                }
            };
            write_graph(&result, &out_format, &output.out)?;
            Ok(false)
        }
        Command::Verify { input, suite, with_subdivision, with_linegraph, caps, output } => {
            if let Some(name) = suite {
                if name != "corpus" {
                    return Err(Error::BadParameters(format!("unknown suite {name:?}")));
                }
                return cmd_verify_corpus(&caps.caps(), &output);
            }
            let g = input.load(seed)?;
            let bundle = build_reports(&g, &caps.caps(), with_subdivision, with_linegraph, false)?;
            let checks = verify::check_all(&bundle.report, bundle.sub.as_ref(), bundle.line.as_ref());
            let any_fail = checks.iter().any(|c| c.failed());
            emit(
                &output,
                &json!({"report": bundle.report, "checks": checks}),
                check_table(&checks),
            )?;
            Ok(any_fail)
        }
        Command::Search { mode, r#in, n, budget, lambda, mu, top, caps, output } => {
            let config = SearchConfig {
                mode: match mode.as_str() {
                    "exhaustive" => SearchMode::ExhaustiveStream,
                    "mutate" => SearchMode::Mutate,
                    other => {
                        return Err(Error::BadParameters(format!(
                            "unknown mode {other:?} (exhaustive | mutate)"
                        )))
                    }
                },
                lambda0: lambda,
                mu0: mu,
                n,
                budget,
                seed,
                top_k: top,
                caps: caps.caps(),
                ..SearchConfig::default()
            };
            let outcome = match config.mode {
                SearchMode::ExhaustiveStream => {
                    let path: &Path = r#in.as_deref().ok_or_else(|| {
                        Error::BadParameters("exhaustive mode needs --in STREAM".into())
                    })?;
                    let text = fs::read_to_string(path).map_err(|e| {
                        Error::malformed(path.display().to_string(), e.to_string())
                    })?;
                    search::search_stream(&text, &config)?
                }
                SearchMode::Mutate => search::search_mutate(&config, None)?,
            };
            let table = format!(
                "evaluated {}  disconnected skipped {}  failures {}\nbest scores: {:?}\n",
                outcome.evaluated,
                outcome.skipped_disconnected,
                outcome.failures.len(),
                outcome.candidates.iter().map(|c| c.score).collect::<Vec<_>>(),
            );
            let any_fail = outcome.any_failure();
            emit(&output, &serde_json::to_value(&outcome).expect("serializable"), table)?;
            Ok(any_fail)
        }
    }
}
