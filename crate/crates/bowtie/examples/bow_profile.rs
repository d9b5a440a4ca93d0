//! Bow profiles close up: how far gluing two overlapping shortest paths
//! can fall short of a shortest path, as a function of the overlap.
//!
//! The ladder family shows why the zero-overlap defect (the alpha index)
//! is not bounded by hyperbolicity: it grows linearly while the ladders
//! stay 1-hyperbolic.
//!
//! Run with: cargo run --example bow_profile

use bowtie::families;
use bowtie::graph::DistanceMatrix;
use bowtie::halfint::HalfInt;
use bowtie::invariants::{bow_profile, hyperbolicity};

fn main() {
    let domino = families::domino();
    let dm = DistanceMatrix::build(&domino).unwrap();
    let p = bow_profile(&dm);
    println!("domino profile:");
    for lambda in 0..=p.diam {
        println!(
            "  mu*({lambda}) = {}  witness {:?}",
            p.mu_star(lambda),
            p.witness(lambda)
        );
    }
    println!(
        "  satisfies (1,2): {}   satisfies (1,1): {}",
        p.satisfied(HalfInt::from_int(1), HalfInt::from_int(2)),
        p.satisfied(HalfInt::from_int(1), HalfInt::from_int(1)),
    );
    println!();

    println!("ladders (1 x n cells): alpha index vs 2*delta");
    for n in 2..=10 {
        let g = families::grid(1, n).unwrap();
        let dm = DistanceMatrix::build(&g).unwrap();
        let p = bow_profile(&dm);
        let fp = hyperbolicity(&dm);
        println!(
            "  n = {n:>2}: alpha = {:>2}, 2*delta = {}",
            p.alpha_index(),
            fp.two_delta
        );
    }
}
