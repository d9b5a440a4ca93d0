//! Metric triangles and quasi-medians: classify all metric triangles of a
//! graph and project triples onto their quasi-medians.
//!
//! Run with: cargo run --example metric_triangles

use bowtie::families;
use bowtie::graph::DistanceMatrix;
use bowtie::triangles::{quasi_median, triangle_stats};

fn main() {
    for spec in ["cycle:6", "icosahedron", "hypercube:3", "gnp:14,0.3,11"] {
        let g = families::generate(spec, 0).unwrap();
        let dm = DistanceMatrix::build(&g).unwrap();
        let s = triangle_stats(&g, &dm);
        println!("{spec}:");
        println!(
            "  {} metric triangles, q_max = {}, equilateral: {}, strongly equilateral: {}",
            s.count, s.q_max, s.all_equilateral, s.all_strongly_equilateral
        );
        if !s.type_histogram.is_empty() {
            println!("  side-length types: {:?}", s.type_histogram);
        }
        if let Some(w) = s.witness_max {
            println!("  largest triangle: {w:?}");
        }

        // quasi-medians of a few triples
        let n = g.n();
        for (u, v, w) in [(0, n / 3, 2 * n / 3), (0, 1, n - 1)] {
            let qm = quasi_median(&dm, u, v, w);
            if qm.is_median() {
                println!("  quasi-median of ({u},{v},{w}): median at {}", qm.vertices[0]);
            } else {
                println!(
                    "  quasi-median of ({u},{v},{w}): {:?}, size {}",
                    qm.vertices,
                    qm.size(&dm)
                );
            }
        }
        println!();
    }
}
