//! Class recognition across the named families: which graphs are chordal,
//! AT-free, distance-hereditary, meshed, weakly modular, modular, median,
//! pseudo-modular, or have convex balls.
//!
//! Run with: cargo run --example classify_families

use bowtie::classes::{classify, Flag};
use bowtie::families;
use bowtie::graph::DistanceMatrix;
use bowtie::report::Caps;

fn mark(f: &Flag) -> &'static str {
    match f {
        Flag::True => "yes",
        Flag::False { .. } => " - ",
        Flag::Skipped { .. } => " ? ",
    }
}

fn main() {
    let specs = [
        "path:8",
        "cycle:5",
        "cycle:6",
        "grid:1,1",
        "domino",
        "complete:5",
        "biclique:3,3",
        "hypercube:3",
        "icosahedron",
        "chordal:14,4,3",
        "block:12,3",
        "tree:12,3",
    ];
    println!(
        "{:<14} {:>4} {:>7} {:>7} {:>4} {:>6} {:>6} {:>7} {:>6} {:>6} {:>6}",
        "graph", "bip", "chordal", "DH", "AT", "meshed", "w.mod", "modular", "median", "ps.mod", "CB"
    );
    let caps = Caps::default();
    for spec in specs {
        let g = families::generate(spec, 0).unwrap();
        let dm = DistanceMatrix::build(&g).unwrap();
        let c = classify(&g, &dm, &caps);
        println!(
            "{spec:<14} {:>4} {:>7} {:>7} {:>4} {:>6} {:>6} {:>7} {:>6} {:>6} {:>6}",
            mark(&c.bipartite),
            mark(&c.chordal),
            mark(&c.distance_hereditary),
            mark(&c.at_free),
            mark(&c.meshed),
            mark(&c.weakly_modular),
            mark(&c.modular),
            mark(&c.median),
            mark(&c.pseudo_modular),
            mark(&c.convex_balls),
        );
    }
    println!("\n(yes / - / ? = true / false / skipped by budget)");
}
