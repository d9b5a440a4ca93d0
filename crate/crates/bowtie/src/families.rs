//! Graph family generators: the named examples (grids, ladders, the domino,
//! the icosahedron, hypercubes), seeded random families, and the exhaustive
//! small-graph enumerator used by the verification sweeps.
//!
//! Grid parameters count CELLS, not vertices: `grid(a, b)` has
//! `(a+1) * (b+1)` vertices. `grid(1, 1)` is C4, `grid(1, 2)` the domino,
//! `grid(1, n)` the ladder.
//!
//! Every random generator takes an explicit seed and is deterministic:
//! identical spec strings always yield identical edge lists.

use rand::prelude::*;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::Graph;

pub fn path(n: usize) -> Result<Graph> {
    if n < 1 {
        return Err(Error::BadParameters("path needs n >= 1".into()));
    }
    Graph::build(n, (1..n).map(|i| (i - 1, i)))
}

pub fn cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::BadParameters("cycle needs n >= 3".into()));
    }
    Graph::build(n, (0..n).map(|i| (i, (i + 1) % n)))
}

pub fn complete(n: usize) -> Result<Graph> {
    if n < 1 {
        return Err(Error::BadParameters("complete needs n >= 1".into()));
    }
    Graph::build(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))))
}

pub fn complete_bipartite(a: usize, b: usize) -> Result<Graph> {
    if a < 1 || b < 1 {
        return Err(Error::BadParameters("biclique needs both sides >= 1".into()));
    }
    Graph::build(a + b, (0..a).flat_map(|u| (a..a + b).map(move |v| (u, v))))
}

/// The star K_{1,k}: center 0 with k leaves.
pub fn star(k: usize) -> Result<Graph> {
    complete_bipartite(1, k)
}

/// Rectilinear grid with `a x b` cells, i.e. `(a+1) x (b+1)` vertices.
/// Vertex (i, j) is `i * (b + 1) + j`.
pub fn grid(a: usize, b: usize) -> Result<Graph> {
    if a < 1 || b < 1 {
        return Err(Error::BadParameters("grid needs at least 1x1 cells".into()));
    }
    let (rows, cols) = (a + 1, b + 1);
    let at = |i: usize, j: usize| i * cols + j;
    let mut edges = Vec::new();
    for i in 0..rows {
        for j in 0..cols {
            if i + 1 < rows {
                edges.push((at(i, j), at(i + 1, j)));
            }
            if j + 1 < cols {
                edges.push((at(i, j), at(i, j + 1)));
            }
        }
    }
    Graph::build(rows * cols, edges)
}

/// The 1 x 2 grid on 6 vertices.
pub fn domino() -> Graph {
    grid(1, 2).expect("fixed parameters")
}

pub fn hypercube(d: usize) -> Result<Graph> {
    if !(1..=16).contains(&d) {
        return Err(Error::BadParameters("hypercube needs 1 <= d <= 16".into()));
    }
    let n = 1usize << d;
    Graph::build(
        n,
        (0..n).flat_map(move |u| (0..d).filter_map(move |bit| {
            let v = u ^ (1 << bit);
            (u < v).then_some((u, v))
        })),
    )
}

/// The icosahedron: two pentagonal pyramids joined by an antiprism band.
/// 12 vertices, 30 edges, 5-regular, diameter 3.
pub fn icosahedron() -> Graph {
    let mut edges = Vec::new();
    // apex 0 over ring 1..=5, apex 11 under ring 6..=10
    for i in 0..5 {
        let top = 1 + i;
        let bot = 6 + i;
        edges.push((0, top));
        edges.push((11, bot));
        edges.push((top, 1 + (i + 1) % 5));
        edges.push((bot, 6 + (i + 1) % 5));
        edges.push((top, bot));
        edges.push((top, 6 + (i + 1) % 5));
    }
    Graph::build(12, edges).expect("fixed edge list")
}

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Uniform random recursive tree: vertex i > 0 attaches to a uniformly
/// random earlier vertex.
pub fn random_tree(n: usize, seed: u64) -> Result<Graph> {
    if n < 1 {
        return Err(Error::BadParameters("tree needs n >= 1".into()));
    }
    let mut r = rng(seed);
    Graph::build(n, (1..n).map(|v| (r.random_range(0..v), v)).collect::<Vec<_>>())
}

/// Connected G(n, p): rejection-sample up to 32 draws, then overlay a random
/// spanning tree on the last draw so the generator always terminates.
pub fn gnp_connected(n: usize, p: f64, seed: u64) -> Graph {
    assert!(n >= 1, "gnp needs n >= 1");
    let p = p.clamp(0.0, 1.0);
    let mut r = rng(seed);
    let mut edges = Vec::new();
    for attempt in 0..32 {
        edges.clear();
        for u in 0..n {
            for v in u + 1..n {
                if r.random::<f64>() < p {
                    edges.push((u, v));
                }
            }
        }
        let g = Graph::build(n, edges.iter().copied()).expect("simple by construction");
        if g.is_connected() {
            return g;
        }
        if attempt == 31 {
            for v in 1..n {
                edges.push((r.random_range(0..v), v));
            }
            return Graph::build(n, edges).expect("simple by construction");
        }
    }
    unreachable!()
}

/// Random chordal graph by construction: each new vertex is attached to a
/// clique inside the current graph, so the reverse insertion order is a
/// perfect elimination order.
pub fn random_chordal(n: usize, k_max: usize, seed: u64) -> Result<Graph> {
    if n < 1 || k_max < 1 {
        return Err(Error::BadParameters("chordal needs n >= 1, k_max >= 1".into()));
    }
    let mut r = rng(seed);
    let mut adj: Vec<Vec<usize>> = vec![Vec::new(); n];
    let mut edges = Vec::new();
    for i in 1..n {
        let want = r.random_range(1..=k_max.min(i));
        let first = r.random_range(0..i);
        let mut clique = vec![first];
        let mut candidates: Vec<usize> = adj[first].clone();
        while clique.len() < want && !candidates.is_empty() {
            let pick = candidates[r.random_range(0..candidates.len())];
            clique.push(pick);
            candidates.retain(|&c| c != pick && adj[pick].contains(&c));
        }
        for &c in &clique {
            adj[i].push(c);
            adj[c].push(i);
            edges.push((c, i));
        }
    }
    Graph::build(n, edges)
}

/// Random block graph: repeatedly glue a small clique onto one existing
/// vertex, so every biconnected component is a clique.
pub fn random_block(n: usize, seed: u64) -> Result<Graph> {
    if n < 1 {
        return Err(Error::BadParameters("block needs n >= 1".into()));
    }
    let mut r = rng(seed);
    let mut edges = Vec::new();
    let mut built = 1usize;
    while built < n {
        let size = r.random_range(2..=4usize.min(n - built + 1));
        let anchor = r.random_range(0..built);
        let mut members = vec![anchor];
        members.extend(built..built + size - 1);
        built += size - 1;
        for i in 0..members.len() {
            for j in i + 1..members.len() {
                edges.push((members[i], members[j]));
            }
        }
    }
    Graph::build(n, edges)
}

/// Random connected interval graph: sorted random intervals whose left
/// endpoints are pulled back to the running maximum so consecutive
/// intervals always overlap.
pub fn random_interval(n: usize, seed: u64) -> Result<Graph> {
    if n < 1 {
        return Err(Error::BadParameters("interval needs n >= 1".into()));
    }
    let mut r = rng(seed);
    let mut spans: Vec<(f64, f64)> = (0..n)
        .map(|_| {
            let l = r.random::<f64>();
            (l, l + 0.4 * r.random::<f64>())
        })
        .collect();
    spans.sort_by(|a, b| a.partial_cmp(b).expect("finite endpoints"));
    let mut reach = spans[0].1;
    for s in spans.iter_mut().skip(1) {
        if s.0 > reach {
            s.0 = reach;
        }
        if s.1 < s.0 {
            s.1 = s.0;
        }
        reach = reach.max(s.1);
    }
    let mut edges = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if spans[i].0 <= spans[j].1 && spans[j].0 <= spans[i].1 {
                edges.push((i, j));
            }
        }
    }
    Graph::build(n, edges)
}

/// All connected graphs on `n <= 6` labeled vertices, one canonical
/// representative per isomorphism class, in a fixed order. Exponential in
/// n; meant for exhaustive sweeps at tiny sizes.
pub fn enumerate_connected(n: usize) -> Result<Vec<Graph>> {
    if !(1..=6).contains(&n) {
        return Err(Error::BadParameters("enumeration supports 1 <= n <= 6".into()));
    }
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    let nbits = pairs.len();
    let mut perms: Vec<Vec<usize>> = Vec::new();
    permutations(&mut (0..n).collect::<Vec<_>>(), 0, &mut perms);
    // pair index lookup
    let mut pair_idx = vec![vec![0usize; n]; n];
    for (i, &(u, v)) in pairs.iter().enumerate() {
        pair_idx[u][v] = i;
        pair_idx[v][u] = i;
    }

    let mut out = Vec::new();
    'masks: for mask in 0u64..1 << nbits {
        // connectivity over bit-adjacency
        let mut adj = vec![0u64; n];
        for (i, &(u, v)) in pairs.iter().enumerate() {
            if mask >> i & 1 == 1 {
                adj[u] |= 1 << v;
                adj[v] |= 1 << u;
            }
        }
        let mut seen = 1u64;
        let mut frontier = 1u64;
        while frontier != 0 {
            let mut next = 0u64;
            let mut f = frontier;
            while f != 0 {
                let v = f.trailing_zeros() as usize;
                f &= f - 1;
                next |= adj[v] & !seen;
            }
            seen |= next;
            frontier = next;
        }
        if seen.count_ones() as usize != n {
            continue;
        }
        // canonical form: keep only masks that are minimal over relabelings
        for perm in &perms {
            let mut mapped = 0u64;
            for (i, &(u, v)) in pairs.iter().enumerate() {
                if mask >> i & 1 == 1 {
                    mapped |= 1 << pair_idx[perm[u]][perm[v]];
                }
            }
            if mapped < mask {
                continue 'masks;
            }
        }
        let edges: Vec<(usize, usize)> = pairs
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, &e)| e)
            .collect();
        out.push(Graph::build(n, edges).expect("simple by construction"));
    }
    Ok(out)
}

fn permutations(items: &mut Vec<usize>, k: usize, out: &mut Vec<Vec<usize>>) {
    if k == items.len() {
        out.push(items.clone());
        return;
    }
    for i in k..items.len() {
        items.swap(k, i);
        permutations(items, k + 1, out);
        items.swap(k, i);
    }
}

/// Parses and generates `family:param,param[,seed]` specs, e.g. `grid:3,3`,
/// `gnp:20,0.2,42`, `icosahedron`. Random families may omit the trailing
/// seed, in which case `default_seed` is used.
pub fn generate(spec: &str, default_seed: u64) -> Result<Graph> {
    let (name, rest) = match spec.split_once(':') {
        Some((n, r)) => (n, r),
        None => (spec, ""),
    };
    let params: Vec<&str> = if rest.is_empty() {
        Vec::new()
    } else {
        rest.split(',').collect()
    };
    let bad = |msg: &str| Error::BadParameters(format!("{spec}: {msg}"));
    let count = |expect: usize| -> Result<()> {
        if params.len() == expect {
            Ok(())
        } else {
            Err(bad(&format!("expected {expect} parameters, got {}", params.len())))
        }
    };
    // `fixed` non-seed parameters plus an optional trailing seed
    let count_seeded = |fixed: usize| -> Result<u64> {
        if params.len() == fixed {
            Ok(default_seed)
        } else if params.len() == fixed + 1 {
            params[fixed]
                .parse()
                .map_err(|_| bad(&format!("bad seed {:?}", params[fixed])))
        } else {
            Err(bad(&format!(
                "expected {fixed} parameters plus an optional seed, got {}",
                params.len()
            )))
        }
    };
    let int = |s: &str| -> Result<usize> {
        s.parse().map_err(|_| bad(&format!("bad integer {s:?}")))
    };
    let num = |s: &str| -> Result<f64> {
        s.parse().map_err(|_| bad(&format!("bad number {s:?}")))
    };

    match name {
        "path" => {
            count(1)?;
            path(int(params[0])?)
        }
        "cycle" => {
            count(1)?;
            cycle(int(params[0])?)
        }
        "complete" => {
            count(1)?;
            complete(int(params[0])?)
        }
        "biclique" | "complete_bipartite" => {
            count(2)?;
            complete_bipartite(int(params[0])?, int(params[1])?)
        }
        "star" => {
            count(1)?;
            star(int(params[0])?)
        }
        "grid" => {
            count(2)?;
            grid(int(params[0])?, int(params[1])?)
        }
        "ladder" => {
            count(1)?;
            grid(1, int(params[0])?)
        }
        "domino" => {
            count(0)?;
            Ok(domino())
        }
        "hypercube" => {
            count(1)?;
            hypercube(int(params[0])?)
        }
        "icosahedron" => {
            count(0)?;
            Ok(icosahedron())
        }
        "tree" => {
            let seed = count_seeded(1)?;
            random_tree(int(params[0])?, seed)
        }
        "gnp" => {
            let seed = count_seeded(2)?;
            let n = int(params[0])?;
            if n < 1 {
                return Err(bad("gnp needs n >= 1"));
            }
            Ok(gnp_connected(n, num(params[1])?, seed))
        }
        "chordal" => {
            let seed = count_seeded(2)?;
            random_chordal(int(params[0])?, int(params[1])?, seed)
        }
        "block" => {
            let seed = count_seeded(1)?;
            random_block(int(params[0])?, seed)
        }
        "interval" => {
            let seed = count_seeded(1)?;
            random_interval(int(params[0])?, seed)
        }
        other => Err(Error::BadParameters(format!("unknown family {other:?}"))),
    }
}

/// The standing verification corpus: every named family at small
/// parameters plus 200 seeded random connected graphs on at most 24
/// vertices, edge counts kept small enough that 1-subdivisions stay inside
/// the slimness cap.
pub fn standing_corpus() -> Vec<(String, Graph)> {
    let mut out: Vec<(String, Graph)> = Vec::new();
    let mut named = |spec: &str| {
        out.push((spec.to_string(), generate(spec, 0).expect("corpus spec")));
    };
    for n in 3..=12 {
        named(&format!("cycle:{n}"));
    }
    for a in 1..=4usize {
        for b in a..=4 {
            named(&format!("grid:{a},{b}"));
        }
    }
    for d in 1..=4 {
        named(&format!("hypercube:{d}"));
    }
    named("icosahedron");
    named("path:10");
    named("star:5");
    named("tree:15,1");
    named("tree:20,2");
    named("tree:24,3");
    named("complete:4");
    named("complete:5");
    named("biclique:2,3");
    named("biclique:3,3");
    named("chordal:18,4,21");
    named("chordal:24,3,22");
    named("block:18,31");
    named("block:24,32");
    named("interval:16,41");

    for seed in 0..200u64 {
        let n = 4 + (seed as usize * 7) % 21; // 4..=24
        let p = 0.15 + 0.05 * (seed % 7) as f64;
        let mut g = gnp_connected(n, p, seed);
        let mut shrink = p;
        let mut bump = 0;
        while g.m() > 60 {
            // keep subdivisions inside the slimness cap
            shrink *= 0.8;
            bump += 1;
            g = gnp_connected(n, shrink, seed + 1000 * bump);
        }
        out.push((format!("gnp:{n},{p:.2},{seed}"), g));
    }
    out
}
