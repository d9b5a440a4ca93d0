//! Graph transforms: the 1-subdivision and the line graph.

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};

/// The 1-subdivision: every edge uv becomes a length-two path through a
/// fresh vertex. Original vertices keep their ids `0..n`; edge vertices are
/// appended as `n + i` following the normalized edge order of [`Graph::edges`].
pub fn subdivide(g: &Graph) -> Graph {
    let n = g.n();
    let edges = g.edges();
    let mut out = Vec::with_capacity(2 * edges.len());
    for (i, &(u, v)) in edges.iter().enumerate() {
        out.push((u, n + i));
        out.push((n + i, v));
    }
    Graph::build(n + edges.len(), out).expect("subdivision of a simple graph is simple")
}

/// The line graph: one vertex per edge of `g` (in normalized edge order),
/// adjacent when the edges share an endpoint. Also returns the map from
/// line-graph vertex to the original edge.
pub fn line_graph(g: &Graph) -> Result<(Graph, Vec<(Vertex, Vertex)>)> {
    let edges = g.edges();
    if edges.is_empty() {
        return Err(Error::EmptyEdgeSet);
    }
    let mut out = Vec::new();
    for (i, &(a, b)) in edges.iter().enumerate() {
        for (j, &(c, d)) in edges.iter().enumerate().skip(i + 1) {
            if a == c || a == d || b == c || b == d {
                out.push((i, j));
            }
        }
    }
    let lg = Graph::build(edges.len(), out).expect("line graph of a simple graph is simple");
    Ok((lg, edges))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;
    use crate::graph::DistanceMatrix;

    #[test]
    fn subdivision_shapes() {
        let k3 = families::complete(3).unwrap();
        let s = subdivide(&k3);
        assert_eq!((s.n(), s.m()), (6, 6));
        assert_eq!(DistanceMatrix::build(&s).unwrap().diameter(), 3); // C6

        let edge = families::path(2).unwrap();
        let s = subdivide(&edge);
        assert_eq!((s.n(), s.m()), (3, 2)); // P3

        let g = families::gnp_connected(9, 0.4, 5);
        let s = subdivide(&g);
        assert_eq!((s.n(), s.m()), (g.n() + g.m(), 2 * g.m()));
    }

    #[test]
    fn subdivision_doubles_distances() {
        for seed in 0..10u64 {
            let g = families::gnp_connected(4 + (seed as usize % 8), 0.35, seed);
            let s = subdivide(&g);
            let dg = DistanceMatrix::build(&g).unwrap();
            let ds = DistanceMatrix::build(&s).unwrap();
            for u in 0..g.n() {
                for v in 0..g.n() {
                    assert_eq!(ds.dist(u, v), 2 * dg.dist(u, v), "seed {seed}");
                }
            }
        }
    }

    #[test]
    fn line_graph_shapes() {
        let p4 = families::path(4).unwrap();
        let (lg, _) = line_graph(&p4).unwrap();
        assert_eq!(lg, families::path(3).unwrap());

        let c4 = families::cycle(4).unwrap();
        let (lg, _) = line_graph(&c4).unwrap();
        assert_eq!((lg.n(), lg.m()), (4, 4));
        assert_eq!(DistanceMatrix::build(&lg).unwrap().diameter(), 2); // a C4 again

        let star = families::star(3).unwrap();
        let (lg, _) = line_graph(&star).unwrap();
        assert_eq!(lg, families::complete(3).unwrap());

        let single = families::path(1).unwrap();
        assert!(matches!(line_graph(&single), Err(Error::EmptyEdgeSet)));
    }
}
