//! Graph class recognizers: bipartite, chordal (LexBFS), chordality,
//! AT-free, distance-hereditary (twin/pendant pruning), meshed, weakly
//! modular, modular, median, pseudo-modular, and convex balls.
//!
//! Each recognizer returns a witness on the negative side: a hole, an
//! asteroidal triple, a triple violating the defining condition, or three
//! balls with no common vertex. Definitional polynomial scans are used
//! throughout; only chordal recognition gets the linear-style LexBFS
//! treatment since it feeds the random-corpus generators.

use std::collections::VecDeque;

use serde::Serialize;

use crate::graph::{DistanceMatrix, Graph, Vertex};
use crate::report::Caps;

/// Tri-state class membership with an optional witness for the negative
/// case. Witnesses are vertex-id lists except for pseudo-modular, which
/// interleaves centers and radii as `[a, ra, b, rb, c, rc]`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum Flag {
    True,
    False { witness: Vec<usize> },
    Skipped { reason: String },
}

impl Flag {
    pub fn from_bool(value: bool, witness: impl FnOnce() -> Vec<usize>) -> Flag {
        if value {
            Flag::True
        } else {
            Flag::False { witness: witness() }
        }
    }

    pub fn as_bool(&self) -> Option<bool> {
        match self {
            Flag::True => Some(true),
            Flag::False { .. } => Some(false),
            Flag::Skipped { .. } => None,
        }
    }

    pub fn is_true(&self) -> bool {
        matches!(self, Flag::True)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum Chordality {
    Value { value: u32 },
    AboveCap { reason: String },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClassFlags {
    pub bipartite: Flag,
    pub chordal: Flag,
    pub chordality: Chordality,
    pub at_free: Flag,
    pub distance_hereditary: Flag,
    pub ptolemaic: Flag,
    pub meshed: Flag,
    pub weakly_modular: Flag,
    pub modular: Flag,
    pub median: Flag,
    pub pseudo_modular: Flag,
    pub convex_balls: Flag,
}

/// Runs every recognizer. The graph is assumed connected (a distance
/// matrix exists).
pub fn classify(g: &Graph, dm: &DistanceMatrix, caps: &Caps) -> ClassFlags {
    let (bipartite, odd_cycle) = is_bipartite(g);
    let (chordal, hole) = is_chordal(g);
    let (at_free, at) = is_at_free(g, dm);
    let dh = is_distance_hereditary(g);
    let (meshed, mw) = is_meshed(g, dm);
    let (wm, wmw) = is_weakly_modular(g, dm);
    let (modular, median, modw, medw) = modular_median(dm);
    let (cb, cbw) = has_convex_balls(dm);
    ClassFlags {
        bipartite: Flag::from_bool(bipartite, || odd_cycle.unwrap_or_default()),
        chordal: Flag::from_bool(chordal, || hole.unwrap_or_default()),
        chordality: chordality(g, caps),
        at_free: Flag::from_bool(at_free, || at.map(|t| t.to_vec()).unwrap_or_default()),
        distance_hereditary: Flag::from_bool(dh, Vec::new),
        ptolemaic: Flag::from_bool(chordal && dh, Vec::new),
        meshed: Flag::from_bool(meshed, || mw.map(|t| t.to_vec()).unwrap_or_default()),
        weakly_modular: Flag::from_bool(wm, || wmw.unwrap_or_default()),
        modular: Flag::from_bool(modular, || modw.map(|t| t.to_vec()).unwrap_or_default()),
        median: Flag::from_bool(median, || medw.map(|t| t.to_vec()).unwrap_or_default()),
        pseudo_modular: is_pseudo_modular(dm, caps.pm_budget),
        convex_balls: Flag::from_bool(cb, || cbw.unwrap_or_default()),
    }
}

/// BFS two-coloring; returns an odd cycle on failure.
pub fn is_bipartite(g: &Graph) -> (bool, Option<Vec<Vertex>>) {
    let n = g.n();
    let mut depth = vec![usize::MAX; n];
    let mut parent = vec![usize::MAX; n];
    for root in 0..n {
        if depth[root] != usize::MAX {
            continue;
        }
        depth[root] = 0;
        let mut queue = VecDeque::from([root]);
        while let Some(u) = queue.pop_front() {
            for &v in g.neighbors(u) {
                if depth[v] == usize::MAX {
                    depth[v] = depth[u] + 1;
                    parent[v] = u;
                    queue.push_back(v);
                } else if (depth[u] ^ depth[v]) & 1 == 0 {
                    return (false, Some(odd_cycle(&depth, &parent, u, v)));
                }
            }
        }
    }
    (true, None)
}

fn odd_cycle(depth: &[usize], parent: &[Vertex], u: Vertex, v: Vertex) -> Vec<Vertex> {
    let (mut a, mut b) = (u, v);
    let mut up_a = vec![a];
    let mut up_b = vec![b];
    while depth[a] > depth[b] {
        a = parent[a];
        up_a.push(a);
    }
    while depth[b] > depth[a] {
        b = parent[b];
        up_b.push(b);
    }
    while a != b {
        a = parent[a];
        b = parent[b];
        up_a.push(a);
        up_b.push(b);
    }
    up_b.pop(); // shared ancestor listed once
    up_b.reverse();
    up_a.extend(up_b);
    up_a
}

/// LexBFS followed by a perfect-elimination-order check. On failure the
/// witness is an induced cycle of length at least four.
pub fn is_chordal(g: &Graph) -> (bool, Option<Vec<Vertex>>) {
    let n = g.n();
    let order = lexbfs(g);
    let mut pos = vec![0usize; n];
    for (i, &v) in order.iter().rev().enumerate() {
        pos[v] = i; // elimination position
    }
    for &v in order.iter().rev() {
        let later: Vec<Vertex> = g
            .neighbors(v)
            .iter()
            .copied()
            .filter(|&w| pos[w] > pos[v])
            .collect();
        for (i, &x) in later.iter().enumerate() {
            for &y in &later[i + 1..] {
                if !g.has_edge(x, y) {
                    let hole = find_hole(g).expect("PEO failure implies a hole exists");
                    return (false, Some(hole));
                }
            }
        }
    }
    (true, None)
}

fn lexbfs(g: &Graph) -> Vec<Vertex> {
    let n = g.n();
    let mut labels: Vec<Vec<u32>> = vec![Vec::new(); n];
    let mut visited = vec![false; n];
    let mut order = Vec::with_capacity(n);
    for step in 0..n {
        let mut pick = usize::MAX;
        for v in 0..n {
            if !visited[v] && (pick == usize::MAX || labels[v] > labels[pick]) {
                pick = v;
            }
        }
        visited[pick] = true;
        order.push(pick);
        let rank = (n - step) as u32;
        for &w in g.neighbors(pick) {
            if !visited[w] {
                labels[w].push(rank);
            }
        }
    }
    order
}

/// Finds one induced cycle of length >= 4 in a non-chordal graph: for some
/// vertex v with nonadjacent neighbors x, y, a shortest x-y path outside
/// N[v] closes an induced cycle through v. A shortest hole guarantees such
/// a triple exists.
fn find_hole(g: &Graph) -> Option<Vec<Vertex>> {
    let n = g.n();
    for v in 0..n {
        let nv = g.neighbors(v);
        for (i, &x) in nv.iter().enumerate() {
            for &y in &nv[i + 1..] {
                if g.has_edge(x, y) {
                    continue;
                }
                let allowed = |p: Vertex| p == x || p == y || (p != v && !g.has_edge(v, p));
                let mut parent = vec![usize::MAX; n];
                let mut seen = vec![false; n];
                seen[x] = true;
                let mut queue = VecDeque::from([x]);
                'bfs: while let Some(p) = queue.pop_front() {
                    for &q in g.neighbors(p) {
                        if !seen[q] && allowed(q) {
                            seen[q] = true;
                            parent[q] = p;
                            if q == y {
                                break 'bfs;
                            }
                            queue.push_back(q);
                        }
                    }
                }
                if seen[y] {
                    let mut cycle = vec![v];
                    let mut walk = y;
                    while walk != usize::MAX {
                        cycle.push(walk);
                        walk = parent[walk];
                    }
                    cycle.reverse(); // x .. y, v at the end
                    return Some(cycle);
                }
            }
        }
    }
    None
}

/// Length of the longest induced cycle (0 when acyclic of induced cycles),
/// by exhaustive DFS over induced paths under a vertex count, cycle length,
/// and expansion budget cap.
pub fn chordality(g: &Graph, caps: &Caps) -> Chordality {
    let n = g.n();
    let max_n = caps.chordality_max_n.min(64);
    if n > max_n {
        return Chordality::AboveCap {
            reason: format!("n = {n} exceeds the chordality search cap {max_n}"),
        };
    }
    let adj: Vec<u64> = (0..n)
        .map(|u| g.neighbors(u).iter().fold(0u64, |m, &v| m | 1 << v))
        .collect();
    let mut budget = caps.chordality_budget;
    let mut best = 0u32;

    struct Dfs<'a> {
        adj: &'a [u64],
        gt_s: u64,
        s: Vertex,
        max_len: u32,
        budget: &'a mut u64,
        best: &'a mut u32,
    }

    impl Dfs<'_> {
        /// Extends an induced path s..tail. `path` marks path vertices,
        /// `inner` the neighborhoods of strictly interior path vertices
        /// (everything except s and the tail). Returns false on a cap hit.
        fn run(&mut self, tail: Vertex, len: u32, path: u64, inner: u64) -> bool {
            if *self.budget == 0 {
                return false;
            }
            *self.budget -= 1;
            let open = !path & !inner & self.gt_s;
            if len >= 2 && self.adj[tail] & self.adj[self.s] & open != 0 {
                // some w closes an induced cycle s..tail..w of length len+1
                let cycle = len + 1;
                *self.best = (*self.best).max(cycle);
                if cycle > self.max_len {
                    return false;
                }
            }
            let mut ext = self.adj[tail] & open;
            if len >= 2 {
                ext &= !self.adj[self.s]; // s-adjacency means closing, not extending
            }
            while ext != 0 {
                let w = ext.trailing_zeros() as usize;
                ext &= ext - 1;
                // the old tail becomes interior unless it is s itself
                let inner_next = if tail == self.s { inner } else { inner | self.adj[tail] };
                if !self.run(w, len + 1, path | 1 << w, inner_next) {
                    return false;
                }
            }
            true
        }
    }

    for s in 0..n {
        let gt_s = if s + 1 >= 64 { 0 } else { (!0u64 << (s + 1)) & (!0u64 >> (64 - n)) };
        let mut dfs = Dfs {
            adj: &adj,
            gt_s,
            s,
            max_len: caps.chordality_max_len,
            budget: &mut budget,
            best: &mut best,
        };
        if !dfs.run(s, 1, 1 << s, 0) {
            if best > caps.chordality_max_len {
                return Chordality::AboveCap {
                    reason: format!("an induced cycle longer than {} exists", caps.chordality_max_len),
                };
            }
            return Chordality::AboveCap {
                reason: "search budget exhausted".into(),
            };
        }
    }
    Chordality::Value { value: best }
}

/// Definitional asteroidal-triple scan: for each z, component labels of
/// G - N[z]; a triple is asteroidal when each pair stays connected avoiding
/// the closed neighborhood of the third.
pub fn is_at_free(g: &Graph, _dm: &DistanceMatrix) -> (bool, Option<[Vertex; 3]>) {
    let n = g.n();
    let comp: Vec<Vec<usize>> = (0..n).map(|z| components_avoiding(g, z)).collect();
    for x in 0..n {
        for y in x + 1..n {
            if g.has_edge(x, y) {
                continue;
            }
            for z in y + 1..n {
                if g.has_edge(x, z) || g.has_edge(y, z) {
                    continue;
                }
                if comp[z][x] == comp[z][y]
                    && comp[z][x] != usize::MAX
                    && comp[x][y] == comp[x][z]
                    && comp[x][y] != usize::MAX
                    && comp[y][x] == comp[y][z]
                    && comp[y][x] != usize::MAX
                {
                    return (false, Some([x, y, z]));
                }
            }
        }
    }
    (true, None)
}

/// Component ids of `G - N[z]`; removed vertices get `usize::MAX`.
fn components_avoiding(g: &Graph, z: Vertex) -> Vec<usize> {
    let n = g.n();
    let mut comp = vec![usize::MAX; n];
    let mut removed = vec![false; n];
    removed[z] = true;
    for &w in g.neighbors(z) {
        removed[w] = true;
    }
    let mut next = 0;
    for start in 0..n {
        if removed[start] || comp[start] != usize::MAX {
            continue;
        }
        comp[start] = next;
        let mut queue = VecDeque::from([start]);
        while let Some(u) = queue.pop_front() {
            for &v in g.neighbors(u) {
                if !removed[v] && comp[v] == usize::MAX {
                    comp[v] = next;
                    queue.push_back(v);
                }
            }
        }
        next += 1;
    }
    comp
}

/// Distance-hereditary recognition by iterated pruning of pendant vertices
/// and twins down to a single vertex.
pub fn is_distance_hereditary(g: &Graph) -> bool {
    let n = g.n();
    let words = n.div_ceil(64);
    let mut rows: Vec<Vec<u64>> = vec![vec![0u64; words]; n];
    for (u, row) in rows.iter_mut().enumerate() {
        for &v in g.neighbors(u) {
            row[v / 64] |= 1 << (v % 64);
        }
    }
    let mut alive: Vec<bool> = vec![true; n];
    let mut remaining = n;
    let mut scratch_u = vec![0u64; words];
    let mut scratch_v = vec![0u64; words];
    while remaining > 1 {
        let mut removed = usize::MAX;
        'scan: for u in 0..n {
            if !alive[u] {
                continue;
            }
            let deg: u32 = rows[u].iter().map(|w| w.count_ones()).sum();
            if deg == 1 {
                removed = u;
                break 'scan;
            }
            for v in 0..n {
                if v == u || !alive[v] {
                    continue;
                }
                if rows[u] == rows[v] {
                    removed = u; // false twins
                    break 'scan;
                }
                let adjacent = rows[u][v / 64] >> (v % 64) & 1 == 1;
                if adjacent {
                    scratch_u.copy_from_slice(&rows[u]);
                    scratch_v.copy_from_slice(&rows[v]);
                    scratch_u[v / 64] &= !(1 << (v % 64));
                    scratch_v[u / 64] &= !(1 << (u % 64));
                    if scratch_u == scratch_v {
                        removed = u; // true twins
                        break 'scan;
                    }
                }
            }
        }
        if removed == usize::MAX {
            return false;
        }
        alive[removed] = false;
        remaining -= 1;
        for row in rows.iter_mut() {
            row[removed / 64] &= !(1 << (removed % 64));
        }
        rows[removed].iter_mut().for_each(|w| *w = 0);
    }
    true
}

/// Meshed: every pair v, w at distance two has, against every u, a common
/// neighbor x with `2 d(u,x) <= d(u,v) + d(u,w)`.
pub fn is_meshed(g: &Graph, dm: &DistanceMatrix) -> (bool, Option<[Vertex; 3]>) {
    let n = g.n();
    for v in 0..n {
        for w in v + 1..n {
            if dm.dist(v, w) != 2 {
                continue;
            }
            let common = g.common_neighbors(v, w);
            for u in 0..n {
                let bound = dm.dist(u, v) + dm.dist(u, w);
                if !common.iter().any(|&x| 2 * dm.dist(u, x) <= bound) {
                    return (false, Some([u, v, w]));
                }
            }
        }
    }
    (true, None)
}

/// Weakly modular: the triangle and quadrangle distance conditions. The
/// witness is `[u, v, w]` for a triangle failure, `[u, v, w, z]` for a
/// quadrangle failure.
pub fn is_weakly_modular(g: &Graph, dm: &DistanceMatrix) -> (bool, Option<Vec<Vertex>>) {
    let n = g.n();
    // triangle condition over edges (v, w)
    for v in 0..n {
        for &w in g.neighbors(v) {
            if w < v {
                continue;
            }
            for u in 0..n {
                let k = dm.dist(u, v);
                if k <= 1 || dm.dist(u, w) != k {
                    continue;
                }
                let ok = g
                    .common_neighbors(v, w)
                    .iter()
                    .any(|&x| dm.dist(u, x) == k - 1);
                if !ok {
                    return (false, Some(vec![u, v, w]));
                }
            }
        }
    }
    // quadrangle condition over pairs (v, w) at distance two
    for v in 0..n {
        for w in v + 1..n {
            if dm.dist(v, w) != 2 {
                continue;
            }
            let common = g.common_neighbors(v, w);
            for &z in &common {
                for u in 0..n {
                    let k = dm.dist(u, v);
                    if k < 2 || dm.dist(u, w) != k || dm.dist(u, z) != k + 1 {
                        continue;
                    }
                    if !common.iter().any(|&x| dm.dist(u, x) == k - 1) {
                        return (false, Some(vec![u, v, w, z]));
                    }
                }
            }
        }
    }
    (true, None)
}

/// Modular and median in one triple scan over `I(u,v) ∩ I(v,w) ∩ I(w,u)`.
pub fn modular_median(
    dm: &DistanceMatrix,
) -> (bool, bool, Option<[Vertex; 3]>, Option<[Vertex; 3]>) {
    let n = dm.n();
    let mut modular_witness = None;
    let mut median_witness = None;
    for u in 0..n {
        for v in u + 1..n {
            for w in v + 1..n {
                let mut hits = 0;
                for p in 0..n {
                    if dm.in_interval(u, v, p)
                        && dm.in_interval(v, w, p)
                        && dm.in_interval(u, w, p)
                    {
                        hits += 1;
                        if hits > 1 {
                            break;
                        }
                    }
                }
                if hits == 0 && modular_witness.is_none() {
                    modular_witness = Some([u, v, w]);
                }
                if hits != 1 && median_witness.is_none() {
                    median_witness = Some([u, v, w]);
                }
                if modular_witness.is_some() && median_witness.is_some() {
                    return (false, false, modular_witness, median_witness);
                }
            }
        }
    }
    (
        modular_witness.is_none(),
        median_witness.is_none(),
        modular_witness,
        median_witness,
    )
}

pub fn is_modular(dm: &DistanceMatrix) -> (bool, Option<[Vertex; 3]>) {
    let (modular, _, w, _) = modular_median(dm);
    (modular, w)
}

pub fn is_median(dm: &DistanceMatrix) -> (bool, Option<[Vertex; 3]>) {
    let (_, median, _, w) = modular_median(dm);
    (median, w)
}

/// Pseudo-modular: any three pairwise intersecting balls share a vertex.
/// Concentric triples never violate the condition (pairwise intersection
/// already forces a common vertex), so only distinct centers are scanned.
/// Skipped when `n * diam` exceeds the budget.
pub fn is_pseudo_modular(dm: &DistanceMatrix, budget: usize) -> Flag {
    let n = dm.n();
    let diam = dm.diameter() as usize;
    if n * diam > budget {
        return Flag::Skipped {
            reason: format!("n*diam = {} exceeds the pseudo-modular budget {budget}", n * diam),
        };
    }
    let ecc: Vec<u32> = (0..n).map(|v| dm.eccentricity(v)).collect();
    for a in 0..n {
        for b in a + 1..n {
            let dab = dm.dist(a, b);
            for c in b + 1..n {
                let (dac, dbc) = (dm.dist(a, c), dm.dist(b, c));
                for ra in 1..ecc[a] {
                    for rb in dab.saturating_sub(ra).max(1)..ecc[b] {
                        // only the smallest admissible third radius matters:
                        // larger balls are supersets and stay nonempty
                        let rc = dac.saturating_sub(ra).max(dbc.saturating_sub(rb)).max(1);
                        if rc >= ecc[c] {
                            continue;
                        }
                        let common = (0..n).any(|p| {
                            dm.dist(a, p) <= ra && dm.dist(b, p) <= rb && dm.dist(c, p) <= rc
                        });
                        if !common {
                            return Flag::False {
                                witness: vec![a, ra as usize, b, rb as usize, c, rc as usize],
                            };
                        }
                    }
                }
            }
        }
    }
    Flag::True
}

/// Convex balls: every interval between two ball members stays inside.
/// Returns the first violating `(c, r, x, y, p)` in scan order.
#[allow(clippy::type_complexity)]
pub fn has_convex_balls(dm: &DistanceMatrix) -> (bool, Option<Vec<usize>>) {
    let n = dm.n();
    for c in 0..n {
        let rc = dm.row(c);
        for r in 1..dm.eccentricity(c) {
            for x in 0..n {
                if rc[x] > r {
                    continue;
                }
                let rx = dm.row(x);
                for y in x + 1..n {
                    if rc[y] > r || rx[y] < 2 {
                        continue;
                    }
                    for p in 0..n {
                        if rc[p] > r && rx[p] + dm.dist(p, y) == rx[y] {
                            return (false, Some(vec![c, r as usize, x, y, p]));
                        }
                    }
                }
            }
        }
    }
    (true, None)
}

pub fn is_ptolemaic(g: &Graph, _dm: &DistanceMatrix) -> bool {
    is_chordal(g).0 && is_distance_hereditary(g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;
    use crate::report::Caps;

    fn matrix(g: &Graph) -> DistanceMatrix {
        DistanceMatrix::build(g).unwrap()
    }

    #[test]
    fn bipartite_examples() {
        assert!(is_bipartite(&families::grid(2, 3).unwrap()).0);
        let (flag, witness) = is_bipartite(&families::cycle(5).unwrap());
        assert!(!flag);
        let cyc = witness.unwrap();
        assert_eq!(cyc.len() % 2, 1);
        // verify the witness is a closed walk of adjacent vertices
        let g = families::cycle(5).unwrap();
        for i in 0..cyc.len() {
            assert!(g.has_edge(cyc[i], cyc[(i + 1) % cyc.len()]));
        }
    }

    #[test]
    fn chordal_examples() {
        assert!(is_chordal(&families::random_tree(12, 4).unwrap()).0);
        let (flag, witness) = is_chordal(&families::cycle(4).unwrap());
        assert!(!flag);
        assert_eq!(witness.unwrap().len(), 4);
        assert!(is_chordal(&families::complete(6).unwrap()).0);
    }

    #[test]
    fn chordal_hole_witness_is_induced() {
        for seed in 0..25u64 {
            let g = families::gnp_connected(6 + (seed as usize % 10), 0.3, seed);
            let (flag, witness) = is_chordal(&g);
            if flag {
                continue;
            }
            let hole = witness.unwrap();
            assert!(hole.len() >= 4, "seed {seed}");
            for i in 0..hole.len() {
                for j in i + 1..hole.len() {
                    let adjacent = g.has_edge(hole[i], hole[j]);
                    let consecutive = j == i + 1 || (i == 0 && j == hole.len() - 1);
                    assert_eq!(adjacent, consecutive, "seed {seed} hole {hole:?}");
                }
            }
        }
    }

    #[test]
    fn chordality_examples() {
        let caps = Caps::default();
        assert_eq!(
            chordality(&families::cycle(7).unwrap(), &caps),
            Chordality::Value { value: 7 }
        );
        assert_eq!(
            chordality(&families::random_tree(10, 1).unwrap(), &caps),
            Chordality::Value { value: 0 }
        );
        // The domino's outer 6-cycle has a chord path; only 4-cycles are induced.
        assert_eq!(
            chordality(&families::domino(), &caps),
            Chordality::Value { value: 4 }
        );
        assert_eq!(
            chordality(&families::complete(5).unwrap(), &caps),
            Chordality::Value { value: 3 }
        );
        assert!(matches!(
            chordality(&families::gnp_connected(30, 0.2, 1), &caps),
            Chordality::AboveCap { .. }
        ));
        // length-cap boundary: 16 is certified, 17 is over the cap
        assert_eq!(
            chordality(&families::cycle(16).unwrap(), &caps),
            Chordality::Value { value: 16 }
        );
        assert!(matches!(
            chordality(&families::cycle(17).unwrap(), &caps),
            Chordality::AboveCap { .. }
        ));
    }

    #[test]
    fn at_free_examples() {
        let p6 = families::path(6).unwrap();
        assert!(is_at_free(&p6, &matrix(&p6)).0);
        let c6 = families::cycle(6).unwrap();
        let (flag, witness) = is_at_free(&c6, &matrix(&c6));
        assert!(!flag);
        assert_eq!(witness, Some([0, 2, 4]));
        let k33 = families::complete_bipartite(3, 3).unwrap();
        // decided by the definition scan; K33 has no independent triple
        // spanning both sides avoiding neighborhoods
        let (flag, _) = is_at_free(&k33, &matrix(&k33));
        assert!(flag);
    }

    #[test]
    fn distance_hereditary_examples() {
        assert!(is_distance_hereditary(&families::random_tree(14, 2).unwrap()));
        assert!(is_distance_hereditary(&families::complete_bipartite(2, 3).unwrap()));
        assert!(!is_distance_hereditary(&families::cycle(5).unwrap()));
        assert!(!is_distance_hereditary(&families::cycle(6).unwrap()));
        assert!(is_distance_hereditary(&families::cycle(4).unwrap()));
    }

    /// Definitional oracle: some induced path longer than the distance
    /// between its endpoints exists iff the graph is not distance-hereditary.
    fn dh_by_definition(g: &Graph, dm: &DistanceMatrix) -> bool {
        fn extend(
            g: &Graph,
            dm: &DistanceMatrix,
            path: &mut Vec<Vertex>,
            on_path: &mut Vec<bool>,
        ) -> bool {
            let tail = *path.last().expect("nonempty");
            let head = path[0];
            if (path.len() as u32 - 1) > dm.dist(head, tail) {
                return false;
            }
            for w in 0..g.n() {
                if on_path[w] || !g.has_edge(tail, w) {
                    continue;
                }
                // induced: w may only touch the tail
                if path[..path.len() - 1].iter().any(|&p| g.has_edge(p, w)) {
                    continue;
                }
                path.push(w);
                on_path[w] = true;
                let ok = extend(g, dm, path, on_path);
                path.pop();
                on_path[w] = false;
                if !ok {
                    return false;
                }
            }
            true
        }
        let n = g.n();
        let mut on_path = vec![false; n];
        for s in 0..n {
            let mut path = vec![s];
            on_path[s] = true;
            let ok = extend(g, dm, &mut path, &mut on_path);
            on_path[s] = false;
            if !ok {
                return false;
            }
        }
        true
    }

    #[test]
    fn distance_hereditary_pruning_matches_definition() {
        for n in 2..=6 {
            for g in families::enumerate_connected(n).unwrap() {
                let dm = matrix(&g);
                assert_eq!(
                    is_distance_hereditary(&g),
                    dh_by_definition(&g, &dm),
                    "n = {n}, edges {:?}",
                    g.edges()
                );
            }
        }
    }

    #[test]
    fn meshed_examples() {
        let ico = families::icosahedron();
        assert!(is_meshed(&ico, &matrix(&ico)).0);
        let c5 = families::cycle(5).unwrap();
        let (flag, witness) = is_meshed(&c5, &matrix(&c5));
        assert!(!flag);
        assert!(witness.is_some());
        let tree = families::random_tree(12, 9).unwrap();
        assert!(is_meshed(&tree, &matrix(&tree)).0);
    }

    #[test]
    fn weakly_modular_examples() {
        let chordal = families::random_chordal(14, 4, 5).unwrap();
        assert!(is_weakly_modular(&chordal, &matrix(&chordal)).0);
        let ico = families::icosahedron();
        assert!(!is_weakly_modular(&ico, &matrix(&ico)).0);
        let c4 = families::cycle(4).unwrap();
        assert!(is_weakly_modular(&c4, &matrix(&c4)).0);
    }

    #[test]
    fn modular_median_examples() {
        let tree = families::random_tree(11, 3).unwrap();
        let (modular, median, _, _) = modular_median(&matrix(&tree));
        assert!(modular && median);

        let (modular, _, witness, _) = modular_median(&matrix(&families::complete(3).unwrap()));
        assert!(!modular);
        assert_eq!(witness, Some([0, 1, 2]));

        // C4 is the 2-cube, a median graph.
        let (_, median, _, _) = modular_median(&matrix(&families::cycle(4).unwrap()));
        assert!(median);
        let (_, median, _, _) = modular_median(&matrix(&families::hypercube(3).unwrap()));
        assert!(median);
    }

    #[test]
    fn pseudo_modular_examples() {
        let tree = families::random_tree(10, 6).unwrap();
        assert!(is_pseudo_modular(&matrix(&tree), 10_000).is_true());
        let c6 = families::cycle(6).unwrap();
        match is_pseudo_modular(&matrix(&c6), 10_000) {
            Flag::False { witness } => assert_eq!(witness.len(), 6),
            other => panic!("C6 should fail pseudo-modularity, got {other:?}"),
        }
        assert!(matches!(
            is_pseudo_modular(&matrix(&families::cycle(12).unwrap()), 10),
            Flag::Skipped { .. }
        ));
    }

    #[test]
    fn convex_balls_examples() {
        assert!(has_convex_balls(&matrix(&families::complete(5).unwrap())).0);
        let (flag, witness) = has_convex_balls(&matrix(&families::cycle(4).unwrap()));
        assert!(!flag);
        assert!(witness.is_some());
        assert!(has_convex_balls(&matrix(&families::cycle(5).unwrap())).0);
    }

    #[test]
    fn ptolemaic_examples() {
        let block = families::random_block(12, 8).unwrap();
        assert!(is_ptolemaic(&block, &matrix(&block)));
        assert!(!is_ptolemaic(&families::cycle(4).unwrap(), &matrix(&families::cycle(4).unwrap())));
        assert!(!is_ptolemaic(&families::domino(), &matrix(&families::domino())));
    }

    #[test]
    fn containment_chain_on_random_graphs() {
        // median => modular => weakly modular => meshed
        for seed in 0..30u64 {
            let g = families::gnp_connected(5 + (seed as usize % 8), 0.35, seed);
            let dm = matrix(&g);
            let (modular, median, _, _) = modular_median(&dm);
            let wm = is_weakly_modular(&g, &dm).0;
            let meshed = is_meshed(&g, &dm).0;
            if median {
                assert!(modular, "seed {seed}");
            }
            if modular {
                assert!(wm, "seed {seed}");
            }
            if wm {
                assert!(meshed, "seed {seed}");
            }
        }
    }
}
