//! The reduction pipeline: subdivide (bipartite, doubled distances), then
//! take the line graph, watching how the bow profile shifts at each step.
//! A graph with a (λ, μ) profile subdivides into a (2λ+2, 2μ+2) one, and a
//! bipartite (λ, μ) graph has a (λ-1, μ+2) line graph.
//!
//! Run with: cargo run --example transform_pipeline

use bowtie::families;
use bowtie::graph::{DistanceMatrix, Graph};
use bowtie::invariants::{bow_profile, hyperbolicity};
use bowtie::transforms;

fn show(label: &str, g: &Graph) {
    let dm = DistanceMatrix::build(g).unwrap();
    let p = bow_profile(&dm);
    let mus: Vec<u32> = (0..=p.diam).map(|l| p.mu_star(l)).collect();
    println!(
        "{label:<16} n={:<3} m={:<3} 2*delta={:<2} mu* = {mus:?}",
        g.n(),
        g.m(),
        hyperbolicity(&dm).two_delta
    );
}

fn main() {
    let g = families::generate("gnp:10,0.35,4", 0).unwrap();
    show("G", &g);

    let sub = transforms::subdivide(&g);
    show("subdivision", &sub);

    let (line_of_sub, _) = transforms::line_graph(&sub).unwrap();
    show("line(subdiv)", &line_of_sub);
}
