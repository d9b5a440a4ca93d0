//! Exact global metric invariants: the four-point value 2δ, geodesic
//! triangle slimness ς, interval thinness τ, the bow profile μ*(λ), and the
//! two ball measurements (quasiconvexity defect, isometry of induced balls).
//!
//! Everything here is a pure function of the immutable distance matrix (plus
//! adjacency where geodesic structure matters). The heavy loops are
//! partitioned over their outermost index; each worker keeps a running
//! maximum with its witness and merging tie-breaks on the lexicographically
//! smallest witness, so results are identical for any thread count.

use rayon::prelude::*;
use serde::Serialize;

use crate::graph::{DistanceMatrix, Graph, Vertex};
use crate::halfint::HalfInt;

/// Running maximum with deterministic witness tie-breaking.
#[derive(Debug, Clone, Copy)]
pub(crate) struct Best<W: Ord + Copy> {
    pub value: u32,
    pub witness: W,
}

impl<W: Ord + Copy> Best<W> {
    pub fn new(value: u32, witness: W) -> Best<W> {
        Best { value, witness }
    }

    #[inline(always)]
    pub fn consider(&mut self, value: u32, witness: W) {
        if value > self.value || (value == self.value && witness < self.witness) {
            self.value = value;
            self.witness = witness;
        }
    }

    pub fn merge(mut self, other: Best<W>) -> Best<W> {
        self.consider(other.value, other.witness);
        self
    }
}

/// Result of the Gromov four-point scan: the maximum gap between the two
/// largest distance sums over all vertex quadruples, i.e. 2δ.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct FourPoint {
    #[serde(rename = "value")]
    pub two_delta: u32,
    pub witness: [Vertex; 4],
}

impl FourPoint {
    pub fn delta(&self) -> HalfInt {
        HalfInt::from_doubled(i64::from(self.two_delta))
    }
}

/// Distance-sum gap of one quadruple; the replay primitive for 2δ witnesses.
pub fn four_point_gap(dm: &DistanceMatrix, q: [Vertex; 4]) -> u32 {
    let [a, b, c, d] = q;
    let s1 = dm.dist(a, b) + dm.dist(c, d);
    let s2 = dm.dist(a, c) + dm.dist(b, d);
    let s3 = dm.dist(a, d) + dm.dist(b, c);
    let hi = s1.max(s2).max(s3);
    let lo = s1.min(s2).min(s3);
    let mid = s1 + s2 + s3 - hi - lo;
    hi - mid
}

/// Exact 2δ by exhaustive quadruple scan. Quadruples with repeated vertices
/// contribute zero gap, so scanning distinct ones only is complete.
pub fn hyperbolicity(dm: &DistanceMatrix) -> FourPoint {
    let n = dm.n();
    let id = || Best::new(0, [0usize; 4]);
    if n < 4 {
        return FourPoint {
            two_delta: 0,
            witness: [0; 4],
        };
    }
    let best = (0..n)
        .into_par_iter()
        .map(|a| {
            let mut best = id();
            let ra = dm.row(a);
            for b in a + 1..n {
                let rb = dm.row(b);
                let dab = ra[b];
                for c in b + 1..n {
                    let rc = dm.row(c);
                    let dac = ra[c];
                    let dbc = rb[c];
                    for d in c + 1..n {
                        let s1 = dab + rc[d];
                        let s2 = dac + rb[d];
                        let s3 = ra[d] + dbc;
                        let hi = s1.max(s2).max(s3);
                        let lo = s1.min(s2).min(s3);
                        let gap = 2 * hi + lo - s1 - s2 - s3;
                        best.consider(gap, [a, b, c, d]);
                    }
                }
            }
            best
        })
        .reduce(id, Best::merge);
    FourPoint {
        two_delta: best.value,
        witness: best.witness,
    }
}

/// Slimness value with a witness `(u, v, w, x)`: the geodesic triangle on
/// `(u, v, w)` whose side vertex `x` realizes the value.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Slimness {
    pub value: u32,
    pub witness: [Vertex; 4],
}

/// Bottleneck table for a fixed label row: `out[a * n + q]` is the largest,
/// over shortest a-q paths, of the smallest label on the path.
///
/// Labels are distances from a fixed vertex x, so `out[a * n + b]` equals
/// `max_{P(a,b)} min_{p in P} d(x, p)`: how far an adversarial geodesic
/// from a to b can stay from x.
fn bottleneck_table(g: &Graph, dm: &DistanceMatrix, labels: &[u32]) -> Vec<u32> {
    let n = g.n();
    let mut out = vec![0u32; n * n];
    let mut order: Vec<Vertex> = (0..n).collect();
    for a in 0..n {
        let ra = dm.row(a);
        order.sort_unstable_by_key(|&p| (ra[p], p));
        let row = &mut out[a * n..(a + 1) * n];
        for &q in &order {
            if q == a {
                row[a] = labels[a];
                continue;
            }
            let dq = ra[q];
            let mut reach = 0u32;
            for &p in g.neighbors(q) {
                if ra[p] + 1 == dq {
                    reach = reach.max(row[p]);
                }
            }
            row[q] = reach.min(labels[q]);
        }
    }
    out
}

/// Farthest an adversarial geodesic from `a` to `b` stays from `x`.
pub fn geodesic_bottleneck(g: &Graph, dm: &DistanceMatrix, x: Vertex, a: Vertex, b: Vertex) -> u32 {
    bottleneck_table(g, dm, dm.row(x))[a * g.n() + b]
}

/// Exact slimness. For a fixed triangle corner set `(u, v, w)` the three
/// sides are chosen independently, so the worst placement of the two far
/// sides against a point x on some u-v geodesic is
/// `min(bottleneck(x; v, w), bottleneck(x; w, u))`, and x ranges over the
/// interval I(u, v). The scan maximizes this over all ordered triples.
pub fn slimness(g: &Graph, dm: &DistanceMatrix) -> Slimness {
    let n = g.n();
    let id = || Best::new(0, [0usize; 4]);
    let best = (0..n)
        .into_par_iter()
        .map(|x| {
            let labels = dm.row(x);
            let table = bottleneck_table(g, dm, labels);
            let mut best = id();
            for u in 0..n {
                let ru = dm.row(u);
                let bn_u = &table[u * n..(u + 1) * n];
                for v in 0..n {
                    if labels[u] + labels[v] != ru[v] {
                        continue; // x not on any u-v geodesic
                    }
                    let bn_v = &table[v * n..(v + 1) * n];
                    for w in 0..n {
                        best.consider(bn_v[w].min(bn_u[w]), [u, v, w, x]);
                    }
                }
            }
            best
        })
        .reduce(id, Best::merge);
    Slimness {
        value: best.value,
        witness: best.witness,
    }
}

/// Interval thinness τ with witness: `x, y` lie in slice `k` of `I(u, v)`
/// and realize the maximum slice diameter.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Thinness {
    pub value: u32,
    pub witness: ThinnessWitness,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct ThinnessWitness {
    pub u: Vertex,
    pub v: Vertex,
    pub k: u32,
    pub x: Vertex,
    pub y: Vertex,
}

pub fn interval_thinness(dm: &DistanceMatrix) -> Thinness {
    let n = dm.n();
    let id = || {
        Best::new(
            0,
            ThinnessWitness {
                u: 0,
                v: 0,
                k: 0,
                x: 0,
                y: 0,
            },
        )
    };
    let best = (0..n)
        .into_par_iter()
        .map(|u| {
            let ru = dm.row(u);
            let mut best = id();
            let mut layers: Vec<Vec<Vertex>> = Vec::new();
            for v in u + 1..n {
                let duv = ru[v];
                let rv = dm.row(v);
                layers.clear();
                layers.resize(duv as usize + 1, Vec::new());
                for p in 0..n {
                    if ru[p] + rv[p] == duv {
                        layers[ru[p] as usize].push(p);
                    }
                }
                for (k, layer) in layers.iter().enumerate() {
                    for (i, &x) in layer.iter().enumerate() {
                        let rx = dm.row(x);
                        for &y in &layer[i + 1..] {
                            best.consider(
                                rx[y],
                                ThinnessWitness {
                                    u,
                                    v,
                                    k: k as u32,
                                    x,
                                    y,
                                },
                            );
                        }
                    }
                }
            }
            best
        })
        .reduce(id, Best::merge);
    Thinness {
        value: best.value,
        witness: best.witness,
    }
}

const NO_WITNESS: [Vertex; 4] = [usize::MAX; 4];

/// The bow profile λ ↦ μ*(λ): for each integer λ in `0..=diam`, the least μ
/// such that every qualifying quadruple (v between u and w, w between v and
/// x, overlap d(v, w) > λ) has path defect
/// `d(u,v) + d(v,w) + d(w,x) - d(u,x)` at most μ.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BowProfile {
    pub diam: u32,
    mu: Vec<u32>,
    witnesses: Vec<Option<[Vertex; 4]>>,
}

impl BowProfile {
    /// μ*(λ); zero beyond the diameter, where the overlap condition is vacuous.
    pub fn mu_star(&self, lambda: u32) -> u32 {
        self.mu.get(lambda as usize).copied().unwrap_or(0)
    }

    /// A quadruple realizing μ*(λ), present whenever μ*(λ) > 0.
    pub fn witness(&self, lambda: u32) -> Option<[Vertex; 4]> {
        self.witnesses.get(lambda as usize).copied().flatten()
    }

    /// Least i such that the graph is α_i-metric.
    pub fn alpha_index(&self) -> u32 {
        self.mu_star(0)
    }

    /// Worst defect among qualifying quadruples with overlap strictly
    /// larger than `lambda`. Distances are integers, so only
    /// `floor(lambda)` matters.
    pub fn worst_beyond(&self, lambda: HalfInt) -> u32 {
        let floor = lambda.floor().max(0);
        if floor >= i64::from(self.diam) {
            0
        } else {
            self.mu_star(floor as u32)
        }
    }

    /// Whether the graph satisfies the (`lambda`, `mu`) bow condition.
    pub fn satisfied(&self, lambda: HalfInt, mu: HalfInt) -> bool {
        HalfInt::from(self.worst_beyond(lambda)) <= mu
    }
}

pub fn bow_profile(dm: &DistanceMatrix) -> BowProfile {
    let n = dm.n();
    let diam = dm.diameter() as usize;
    let id = || vec![Best::new(0, NO_WITNESS); diam + 1];
    let merge = |mut a: Vec<Best<[Vertex; 4]>>, b: Vec<Best<[Vertex; 4]>>| {
        for (x, y) in a.iter_mut().zip(b) {
            *x = x.merge(y);
        }
        a
    };
    // table[t] = worst defect among qualifying quadruples with overlap exactly t
    let table = (0..n)
        .into_par_iter()
        .map(|v| {
            let mut table = id();
            let rv = dm.row(v);
            let mut us: Vec<Vertex> = Vec::new();
            let mut xs: Vec<Vertex> = Vec::new();
            for w in 0..n {
                let t = rv[w];
                if t == 0 {
                    continue; // zero overlap never exceeds any λ >= 0
                }
                let rw = dm.row(w);
                us.clear();
                xs.clear();
                for p in 0..n {
                    if dm.dist(p, v) + t == dm.dist(p, w) {
                        us.push(p); // v ∈ I(u, w)
                    }
                    if t + rw[p] == rv[p] {
                        xs.push(p); // w ∈ I(v, x)
                    }
                }
                for &u in &us {
                    let ru = dm.row(u);
                    let base = ru[v] + t;
                    for &x in &xs {
                        let defect = base + rw[x] - ru[x];
                        table[t as usize].consider(defect, [u, v, w, x]);
                    }
                }
            }
            table
        })
        .reduce(id, merge);

    // μ*(λ) maximizes the defect over overlaps strictly larger than λ.
    let mut mu = vec![0u32; diam + 1];
    let mut witnesses = vec![None; diam + 1];
    let mut running = Best::new(0, NO_WITNESS);
    for lambda in (0..diam).rev() {
        running = running.merge(table[lambda + 1]);
        mu[lambda] = running.value;
        if running.value > 0 {
            witnesses[lambda] = Some(running.witness);
        }
    }
    BowProfile {
        diam: diam as u32,
        mu,
        witnesses,
    }
}

/// Replay a bow witness: returns `(overlap, defect)` if the quadruple
/// qualifies (v between u and w, w between v and x).
pub fn bow_quadruple(dm: &DistanceMatrix, q: [Vertex; 4]) -> Option<(u32, u32)> {
    let [u, v, w, x] = q;
    let t = dm.dist(v, w);
    if dm.dist(u, v) + t != dm.dist(u, w) || t + dm.dist(w, x) != dm.dist(v, x) {
        return None;
    }
    Some((t, dm.dist(u, v) + t + dm.dist(w, x) - dm.dist(u, x)))
}

/// Smallest ε such that every ball is ε-quasiconvex, with a witness
/// `(c, r, x, y, p)`: p lies between two ball members but ε outside B(c, r).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Quasiconvexity {
    pub value: u32,
    pub witness: Option<QuasiconvexityWitness>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct QuasiconvexityWitness {
    pub c: Vertex,
    pub r: u32,
    pub x: Vertex,
    pub y: Vertex,
    pub p: Vertex,
}

/// In hop metrics `d(p, B(c, r)) = max(0, d(p, c) - r)`: walking a geodesic
/// towards c enters the ball after exactly that many steps, and no ball
/// member is closer. Each center is scanned independently; for a fixed
/// (c, r) the candidates p are tried in decreasing-excess order so the scan
/// stops as soon as no strictly larger defect is possible.
pub fn ball_quasiconvexity(dm: &DistanceMatrix) -> Quasiconvexity {
    let n = dm.n();
    let id = || Best::new(0, (0usize, 0u32, 0usize, 0usize, 0usize));
    let best = (0..n)
        .into_par_iter()
        .map(|c| {
            let rc = dm.row(c);
            let ecc = dm.eccentricity(c);
            let mut best = id();
            if ecc < 2 {
                return best;
            }
            let mut order: Vec<Vertex> = (0..n).collect();
            order.sort_unstable_by_key(|&p| (std::cmp::Reverse(rc[p]), p));
            let members: Vec<Vertex> = (0..n).collect();
            for r in 1..ecc {
                'candidates: for &p in &order {
                    let excess = rc[p].saturating_sub(r);
                    if excess <= best.value {
                        break; // sorted by excess: nothing further improves
                    }
                    if excess > r {
                        continue; // p between ball members needs d(x,y) <= 2r
                    }
                    let rp = dm.row(p);
                    for &x in &members {
                        if rc[x] > r {
                            continue;
                        }
                        let rx = dm.row(x);
                        for &y in &members {
                            if rc[y] <= r && rx[p] + rp[y] == rx[y] {
                                best.consider(excess, (c, r, x, y, p));
                                continue 'candidates;
                            }
                        }
                    }
                }
            }
            best
        })
        .reduce(id, Best::merge);
    let (c, r, x, y, p) = best.witness;
    Quasiconvexity {
        value: best.value,
        witness: (best.value > 0).then_some(QuasiconvexityWitness { c, r, x, y, p }),
    }
}

/// Replay a quasiconvexity witness against the matrix.
pub fn quasiconvexity_defect(dm: &DistanceMatrix, w: QuasiconvexityWitness) -> Option<u32> {
    let inside = |v: Vertex| dm.dist(w.c, v) <= w.r;
    if !inside(w.x) || !inside(w.y) || !dm.in_interval(w.x, w.y, w.p) {
        return None;
    }
    Some(dm.dist(w.c, w.p).saturating_sub(w.r))
}

/// Whether every ball induces an isometric subgraph, with the first
/// violating `(c, r, x, y)` in scan order as witness.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct BallsIsometric {
    pub isometric: bool,
    pub witness: Option<IsometryWitness>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct IsometryWitness {
    pub c: Vertex,
    pub r: u32,
    pub x: Vertex,
    pub y: Vertex,
}

pub fn balls_isometric(g: &Graph, dm: &DistanceMatrix) -> BallsIsometric {
    let n = g.n();
    let per_center: Vec<Option<IsometryWitness>> = (0..n)
        .into_par_iter()
        .map(|c| {
            let rc = dm.row(c);
            let ecc = dm.eccentricity(c);
            for r in 1..ecc {
                let members: Vec<Vertex> = (0..n).filter(|&p| rc[p] <= r).collect();
                let mut local = vec![usize::MAX; n];
                for (i, &p) in members.iter().enumerate() {
                    local[p] = i;
                }
                for &x in &members {
                    let inside = ball_bfs(g, &members, &local, x);
                    for (&y, &din) in members.iter().zip(&inside) {
                        if din != dm.dist(x, y) {
                            return Some(IsometryWitness { c, r, x, y });
                        }
                    }
                }
            }
            None
        })
        .collect();
    let witness = per_center.into_iter().flatten().next();
    BallsIsometric {
        isometric: witness.is_none(),
        witness,
    }
}

/// BFS restricted to `members`; output is indexed like `members`.
fn ball_bfs(g: &Graph, members: &[Vertex], local: &[usize], src: Vertex) -> Vec<u32> {
    let mut dist = vec![u32::MAX; members.len()];
    let mut queue = std::collections::VecDeque::new();
    dist[local[src]] = 0;
    queue.push_back(src);
    while let Some(p) = queue.pop_front() {
        let dp = dist[local[p]];
        for &q in g.neighbors(p) {
            let lq = local[q];
            if lq != usize::MAX && dist[lq] == u32::MAX {
                dist[lq] = dp + 1;
                queue.push_back(q);
            }
        }
    }
    dist
}
