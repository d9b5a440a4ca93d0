//! Run the whole inequality catalog against one graph and print a line per
//! check, including the transform-based checks (1-subdivision, line graph).
//!
//! Run with: cargo run --example theorem_checks

use bowtie::families;
use bowtie::graph::DistanceMatrix;
use bowtie::report::{compute_report, Caps};
use bowtie::transforms;
use bowtie::verify::{check_all, CheckStatus};

fn main() {
    let caps = Caps::default();
    let g = families::generate("grid:2,3", 0).unwrap();
    let dm = DistanceMatrix::build(&g).unwrap();
    let report = compute_report(&g, &dm, &caps, false);

    let sub = transforms::subdivide(&g);
    let sub_dm = DistanceMatrix::build(&sub).unwrap();
    let sub_report = compute_report(&sub, &sub_dm, &caps, false);

    let line_report = report.classes.bipartite.is_true().then(|| {
        let (lg, _) = transforms::line_graph(&g).unwrap();
        let ldm = DistanceMatrix::build(&lg).unwrap();
        compute_report(&lg, &ldm, &caps, false)
    });

    println!("grid:2,3: 2*delta {}, thinness {}, q_max {}", report.two_delta.two_delta, report.thinness.value, report.triangles.q_max);
    for c in check_all(&report, Some(&sub_report), line_report.as_ref()) {
        let status = match &c.status {
            CheckStatus::Pass => "pass".to_string(),
            CheckStatus::Fail => "FAIL".to_string(),
            CheckStatus::Skipped { reason } => format!("skip: {reason}"),
        };
        let sides = match (c.lhs, c.rhs) {
            (Some(l), Some(r)) => format!(" [{l} <= {r}]"),
            _ => String::new(),
        };
        println!("{:<4} {status}{sides}", c.id);
    }
}
