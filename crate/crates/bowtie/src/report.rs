//! The full invariant report of one graph and the caps that gate the
//! expensive measurements.

use std::collections::BTreeMap;
use std::time::Instant;

use serde::Serialize;

use crate::classes::{self, ClassFlags};
use crate::graph::{DistanceMatrix, Graph};
use crate::invariants::{
    self, BallsIsometric, BowProfile, FourPoint, Quasiconvexity, Slimness, Thinness,
};
use crate::triangles::{self, MetricTriangleStats};

/// Budget knobs for the measurements that do not scale to every input.
/// A capped quantity is reported as skipped, never guessed, and every
/// check depending on it is skipped as well.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Caps {
    /// Slimness is O(n^3 m); skip above this vertex count.
    pub slimness_max_n: usize,
    /// Induced-cycle search caps: vertex count, cycle length, DFS budget.
    pub chordality_max_n: usize,
    pub chordality_max_len: u32,
    pub chordality_budget: u64,
    /// Pseudo-modular scan runs when `n * diam` is at most this.
    pub pm_budget: usize,
}

impl Default for Caps {
    fn default() -> Caps {
        Caps {
            slimness_max_n: 96,
            chordality_max_n: 24,
            chordality_max_len: 16,
            chordality_budget: 5_000_000,
            pm_budget: 640,
        }
    }
}

/// A measurement that may be skipped by a cap.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(untagged)]
pub enum Measured<T> {
    Value(T),
    Skipped { skipped: String },
}

impl<T> Measured<T> {
    pub fn value(&self) -> Option<&T> {
        match self {
            Measured::Value(v) => Some(v),
            Measured::Skipped { .. } => None,
        }
    }
}

/// Every measured invariant of one graph. Witnesses are vertex ids in the
/// input numbering and replay to their reported values against the
/// distance matrix.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct InvariantReport {
    pub n: usize,
    pub m: usize,
    pub diameter: u32,
    pub two_delta: FourPoint,
    pub slimness: Measured<Slimness>,
    pub thinness: Thinness,
    pub bow: BowProfile,
    pub alpha_index: u32,
    pub ball_quasiconvexity: Quasiconvexity,
    pub balls_isometric: BallsIsometric,
    pub triangles: MetricTriangleStats,
    pub classes: ClassFlags,
    pub caps: Caps,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timings_ms: Option<BTreeMap<String, u64>>,
}

impl InvariantReport {
    pub fn slimness_value(&self) -> Option<u32> {
        self.slimness.value().map(|s| s.value)
    }
}

/// Computes the whole report. `timings` adds per-invariant wall time in
/// milliseconds; leave it off when byte-identical output across runs
/// matters.
pub fn compute_report(g: &Graph, dm: &DistanceMatrix, caps: &Caps, timings: bool) -> InvariantReport {
    let mut clock = Timings::new(timings);
    let two_delta = clock.time("two_delta", || invariants::hyperbolicity(dm));
    let slimness = clock.time("slimness", || {
        if g.n() <= caps.slimness_max_n {
            Measured::Value(invariants::slimness(g, dm))
        } else {
            Measured::Skipped {
                skipped: format!("n = {} exceeds the slimness cap {}", g.n(), caps.slimness_max_n),
            }
        }
    });
    let thinness = clock.time("thinness", || invariants::interval_thinness(dm));
    let bow = clock.time("bow_profile", || invariants::bow_profile(dm));
    let ball_quasiconvexity = clock.time("ball_quasiconvexity", || invariants::ball_quasiconvexity(dm));
    let balls_isometric = clock.time("balls_isometric", || invariants::balls_isometric(g, dm));
    let triangles = clock.time("triangles", || triangles::triangle_stats(g, dm));
    let classes = clock.time("classes", || classes::classify(g, dm, caps));
    InvariantReport {
        n: g.n(),
        m: g.m(),
        diameter: dm.diameter(),
        alpha_index: bow.alpha_index(),
        two_delta,
        slimness,
        thinness,
        bow,
        ball_quasiconvexity,
        balls_isometric,
        triangles,
        classes,
        caps: caps.clone(),
        timings_ms: clock.finish(),
    }
}

struct Timings {
    enabled: bool,
    table: BTreeMap<String, u64>,
}

impl Timings {
    fn new(enabled: bool) -> Timings {
        Timings {
            enabled,
            table: BTreeMap::new(),
        }
    }

    fn time<T>(&mut self, label: &str, f: impl FnOnce() -> T) -> T {
        let start = Instant::now();
        let out = f();
        if self.enabled {
            self.table.insert(label.to_string(), start.elapsed().as_millis() as u64);
        }
        out
    }

    fn finish(self) -> Option<BTreeMap<String, u64>> {
        self.enabled.then_some(self.table)
    }
}

/// Replays every witness in the report and confirms it reproduces the
/// reported value. Used by the verification suites and the search triage;
/// the replay arithmetic is straight distance-matrix reads, independent of
/// the scanning loops.
pub fn verify_report_witnesses(
    g: &Graph,
    dm: &DistanceMatrix,
    report: &InvariantReport,
) -> Result<(), String> {
    let fp = report.two_delta;
    if invariants::four_point_gap(dm, fp.witness) != fp.two_delta {
        return Err(format!("four-point witness {:?} does not replay", fp.witness));
    }
    if let Measured::Value(slim) = &report.slimness {
        let [u, v, w, x] = slim.witness;
        if !dm.in_interval(u, v, x) {
            return Err(format!("slimness witness {:?}: x is not on a u-v geodesic", slim.witness));
        }
        let value = invariants::geodesic_bottleneck(g, dm, x, v, w)
            .min(invariants::geodesic_bottleneck(g, dm, x, w, u));
        if value != slim.value {
            return Err(format!(
                "slimness witness {:?} replays to {value}, reported {}",
                slim.witness, slim.value
            ));
        }
    }
    let tw = report.thinness.witness;
    let d = dm.dist(tw.u, tw.v);
    let on_slice = |p| dm.dist(tw.u, p) == tw.k && dm.dist(p, tw.v) == d - tw.k;
    if !on_slice(tw.x) || !on_slice(tw.y) || dm.dist(tw.x, tw.y) != report.thinness.value {
        return Err(format!("thinness witness {tw:?} does not replay"));
    }
    for lambda in 0..=report.bow.diam {
        let mu = report.bow.mu_star(lambda);
        if mu == 0 {
            continue;
        }
        let witness = report
            .bow
            .witness(lambda)
            .ok_or_else(|| format!("bow witness missing at lambda = {lambda}"))?;
        match invariants::bow_quadruple(dm, witness) {
            Some((overlap, defect)) if overlap > lambda && defect == mu => {}
            other => {
                return Err(format!(
                    "bow witness {witness:?} at lambda {lambda}: replay {other:?}, want defect {mu}"
                ))
            }
        }
    }
    if let Some(w) = report.ball_quasiconvexity.witness {
        if invariants::quasiconvexity_defect(dm, w) != Some(report.ball_quasiconvexity.value) {
            return Err(format!("quasiconvexity witness {w:?} does not replay"));
        }
    }
    if let Some(w) = report.balls_isometric.witness {
        if dm.dist(w.c, w.x) > w.r || dm.dist(w.c, w.y) > w.r {
            return Err(format!("ball isometry witness {w:?}: pair not inside the ball"));
        }
    }
    Ok(())
}
