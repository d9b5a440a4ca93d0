//! Metric triangles, quasi-medians, and the equidistant-path test.
//!
//! A triple of distinct vertices is a metric triangle when its three
//! pairwise intervals meet only in the shared endpoints. Every triple
//! projects onto one via a quasi-median; the stats scan classifies all
//! metric triangles of a graph (sizes, equilateral / strongly equilateral,
//! equidistant side paths) in one pass.

use std::collections::BTreeMap;
use std::collections::VecDeque;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{DistanceMatrix, Graph, Vertex};
use crate::invariants::Best;

/// True iff `I(x,y) ∩ I(y,z) = {y}` and rotations; vertices must be distinct.
pub fn is_metric_triangle(dm: &DistanceMatrix, x: Vertex, y: Vertex, z: Vertex) -> bool {
    if x == y || y == z || x == z {
        return false;
    }
    let n = dm.n();
    for p in 0..n {
        let in_xy = dm.in_interval(x, y, p);
        let in_yz = dm.in_interval(y, z, p);
        let in_zx = dm.in_interval(z, x, p);
        if (in_xy && in_yz && p != y) || (in_yz && in_zx && p != z) || (in_zx && in_xy && p != x) {
            return false;
        }
    }
    true
}

/// Whether every vertex of `I(u, v)` is at distance `d(u, w)` from `w`.
fn side_strongly_equidistant(dm: &DistanceMatrix, u: Vertex, v: Vertex, w: Vertex) -> bool {
    let k = dm.dist(u, w);
    if dm.dist(v, w) != k {
        return false;
    }
    (0..dm.n()).all(|p| !dm.in_interval(u, v, p) || dm.dist(p, w) == k)
}

/// Whether some shortest u-v path keeps all its vertices at distance
/// `d(u, w)` from `w`; decided by reachability in the u-v geodesic DAG
/// restricted to that distance level.
pub fn check_equidistant_path(
    g: &Graph,
    dm: &DistanceMatrix,
    u: Vertex,
    v: Vertex,
    w: Vertex,
) -> Result<bool> {
    if !is_metric_triangle(dm, u, v, w) {
        return Err(Error::NotMetricTriangle(u, v, w));
    }
    Ok(equidistant_path_exists(g, dm, u, v, w))
}

fn equidistant_path_exists(g: &Graph, dm: &DistanceMatrix, u: Vertex, v: Vertex, w: Vertex) -> bool {
    let k = dm.dist(u, w);
    if dm.dist(v, w) != k {
        return false; // the endpoint v itself breaks equidistance
    }
    let duv = dm.dist(u, v);
    let allowed = |p: Vertex| dm.in_interval(u, v, p) && dm.dist(p, w) == k;
    let mut seen = vec![false; g.n()];
    let mut queue = VecDeque::new();
    seen[u] = true;
    queue.push_back(u);
    while let Some(p) = queue.pop_front() {
        if p == v {
            return true;
        }
        let next_layer = dm.dist(u, p) + 1;
        if next_layer > duv {
            continue;
        }
        for &q in g.neighbors(p) {
            if !seen[q] && dm.dist(u, q) == next_layer && allowed(q) {
                seen[q] = true;
                queue.push_back(q);
            }
        }
    }
    false
}

/// Aggregate shape of all metric triangles in a graph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MetricTriangleStats {
    pub count: u64,
    /// Maximum side length over all metric triangles (0 when there are none).
    pub q_max: u32,
    pub all_equilateral: bool,
    pub all_strongly_equilateral: bool,
    /// Every metric triangle admits, for each corner, a shortest opposite
    /// side path equidistant from that corner.
    pub all_sides_equidistant: bool,
    /// Every metric triangle is strongly equilateral or has type (2,2,1).
    pub all_strong_or_type221: bool,
    /// Side-length triples (k1 >= k2 >= k3), rendered "k1,k2,k3" -> count.
    pub type_histogram: BTreeMap<String, u64>,
    pub witness_max: Option<[Vertex; 3]>,
    pub non_equilateral: Option<[Vertex; 3]>,
    pub non_strongly_equilateral: Option<[Vertex; 3]>,
    pub non_equidistant: Option<[Vertex; 3]>,
    pub non_strong_or_type221: Option<[Vertex; 3]>,
}

#[derive(Clone)]
struct StatsAccum {
    count: u64,
    q_max: Best<[Vertex; 3]>,
    histogram: BTreeMap<(u32, u32, u32), u64>,
    non_equilateral: Option<[Vertex; 3]>,
    non_strong: Option<[Vertex; 3]>,
    non_equidistant: Option<[Vertex; 3]>,
    non_strong_or_221: Option<[Vertex; 3]>,
}

impl StatsAccum {
    fn new() -> StatsAccum {
        StatsAccum {
            count: 0,
            q_max: Best::new(0, [usize::MAX; 3]),
            histogram: BTreeMap::new(),
            non_equilateral: None,
            non_strong: None,
            non_equidistant: None,
            non_strong_or_221: None,
        }
    }

    fn merge(mut self, other: StatsAccum) -> StatsAccum {
        self.count += other.count;
        self.q_max = self.q_max.merge(other.q_max);
        for (k, v) in other.histogram {
            *self.histogram.entry(k).or_insert(0) += v;
        }
        let first = |a: Option<[Vertex; 3]>, b: Option<[Vertex; 3]>| match (a, b) {
            (Some(x), Some(y)) => Some(x.min(y)),
            (x, y) => x.or(y),
        };
        self.non_equilateral = first(self.non_equilateral, other.non_equilateral);
        self.non_strong = first(self.non_strong, other.non_strong);
        self.non_equidistant = first(self.non_equidistant, other.non_equidistant);
        self.non_strong_or_221 = first(self.non_strong_or_221, other.non_strong_or_221);
        self
    }
}

/// Scans all unordered vertex triples and classifies the metric triangles.
/// Triples with coinciding vertices are not metric triangles; degenerate
/// situations are represented by quasi-medians of size zero instead.
pub fn triangle_stats(g: &Graph, dm: &DistanceMatrix) -> MetricTriangleStats {
    let n = g.n();
    let acc = (0..n)
        .into_par_iter()
        .map(|x| {
            let mut acc = StatsAccum::new();
            for y in x + 1..n {
                for z in y + 1..n {
                    if !is_metric_triangle(dm, x, y, z) {
                        continue;
                    }
                    let tri = [x, y, z];
                    acc.count += 1;
                    let mut sides = [dm.dist(x, y), dm.dist(y, z), dm.dist(x, z)];
                    sides.sort_unstable_by(|a, b| b.cmp(a));
                    let [k1, k2, k3] = sides;
                    acc.q_max.consider(k1, tri);
                    *acc.histogram.entry((k1, k2, k3)).or_insert(0) += 1;

                    let equilateral = k1 == k3;
                    if !equilateral && acc.non_equilateral.is_none() {
                        acc.non_equilateral = Some(tri);
                    }
                    let strong = side_strongly_equidistant(dm, x, y, z)
                        && side_strongly_equidistant(dm, y, z, x)
                        && side_strongly_equidistant(dm, z, x, y);
                    if !strong && acc.non_strong.is_none() {
                        acc.non_strong = Some(tri);
                    }
                    if !strong && (k1, k2, k3) != (2, 2, 1) && acc.non_strong_or_221.is_none() {
                        acc.non_strong_or_221 = Some(tri);
                    }
                    let equidistant = equidistant_path_exists(g, dm, x, y, z)
                        && equidistant_path_exists(g, dm, y, z, x)
                        && equidistant_path_exists(g, dm, z, x, y);
                    if !equidistant && acc.non_equidistant.is_none() {
                        acc.non_equidistant = Some(tri);
                    }
                }
            }
            acc
        })
        .reduce(StatsAccum::new, StatsAccum::merge);

    MetricTriangleStats {
        count: acc.count,
        q_max: acc.q_max.value,
        all_equilateral: acc.non_equilateral.is_none(),
        all_strongly_equilateral: acc.non_strong.is_none(),
        all_sides_equidistant: acc.non_equidistant.is_none(),
        all_strong_or_type221: acc.non_strong_or_221.is_none(),
        type_histogram: acc
            .histogram
            .into_iter()
            .map(|((a, b, c), v)| (format!("{a},{b},{c}"), v))
            .collect(),
        witness_max: (acc.count > 0).then_some(acc.q_max.witness),
        non_equilateral: acc.non_equilateral,
        non_strongly_equilateral: acc.non_strong,
        non_equidistant: acc.non_equidistant,
        non_strong_or_type221: acc.non_strong_or_221,
    }
}

/// A quasi-median of a triple: a metric triangle (or a single vertex when
/// all three projections coincide) splitting the three pairwise distances.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct QuasiMedian {
    pub vertices: [Vertex; 3],
}

impl QuasiMedian {
    pub fn is_median(&self) -> bool {
        self.vertices[0] == self.vertices[1] && self.vertices[1] == self.vertices[2]
    }

    pub fn size(&self, dm: &DistanceMatrix) -> u32 {
        let [a, b, c] = self.vertices;
        dm.dist(a, b).max(dm.dist(b, c)).max(dm.dist(a, c))
    }
}

/// The three distance-splitting equations a quasi-median must satisfy.
pub fn quasi_median_equations_hold(
    dm: &DistanceMatrix,
    triple: [Vertex; 3],
    qm: [Vertex; 3],
) -> bool {
    let [u, v, w] = triple;
    let [u1, v1, w1] = qm;
    dm.dist(u, v) == dm.dist(u, u1) + dm.dist(u1, v1) + dm.dist(v1, v)
        && dm.dist(v, w) == dm.dist(v, v1) + dm.dist(v1, w1) + dm.dist(w1, w)
        && dm.dist(w, u) == dm.dist(w, w1) + dm.dist(w1, u1) + dm.dist(u1, u)
}

/// Greedy quasi-median: repeatedly pull a corner as deep as possible into
/// the intersection of its two adjacent intervals (farthest candidate, ties
/// to the smallest id). The perimeter strictly shrinks on every move, and
/// the terminal triple is verified against the splitting equations; a
/// verification failure would be an internal bug, not an input error.
pub fn quasi_median(dm: &DistanceMatrix, u: Vertex, v: Vertex, w: Vertex) -> QuasiMedian {
    let n = dm.n();
    let mut t = [u, v, w];
    loop {
        let mut moved = false;
        for role in 0..3 {
            let a = t[role];
            let b = t[(role + 1) % 3];
            let c = t[(role + 2) % 3];
            let mut pick: Option<(u32, Vertex)> = None;
            for p in 0..n {
                if p == a || !dm.in_interval(a, b, p) || !dm.in_interval(a, c, p) {
                    continue;
                }
                let dp = dm.dist(a, p);
                if pick.is_none_or(|(best, at)| dp > best || (dp == best && p < at)) {
                    pick = Some((dp, p));
                }
            }
            if let Some((_, p)) = pick {
                t[role] = p;
                moved = true;
            }
        }
        if !moved {
            break;
        }
    }
    let qm = QuasiMedian { vertices: t };
    debug_assert!(
        quasi_median_equations_hold(dm, [u, v, w], t)
            && (qm.is_median() || is_metric_triangle(dm, t[0], t[1], t[2])),
        "greedy quasi-median invariant violated for ({u}, {v}, {w}) -> {t:?}"
    );
    qm
}
