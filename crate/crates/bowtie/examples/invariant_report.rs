//! Full invariant report for a few graphs: the four-point value 2δ,
//! slimness, interval thinness, the bow profile, metric-triangle stats,
//! and class flags; every value exact, every witness replayable.
//!
//! Run with: cargo run --example invariant_report

use bowtie::families;
use bowtie::graph::DistanceMatrix;
use bowtie::report::{compute_report, Caps};

fn main() {
    let caps = Caps::default();
    for spec in ["domino", "grid:3,3", "icosahedron", "gnp:20,0.25,7"] {
        let g = families::generate(spec, 0).unwrap();
        let dm = DistanceMatrix::build(&g).unwrap();
        let r = compute_report(&g, &dm, &caps, false);
        println!("{spec}: n={} m={} diameter={}", r.n, r.m, r.diameter);
        println!("  2*delta = {} (witness {:?})", r.two_delta.two_delta, r.two_delta.witness);
        match r.slimness.value() {
            Some(s) => println!("  slimness = {} (witness {:?})", s.value, s.witness),
            None => println!("  slimness skipped by cap"),
        }
        println!("  thinness = {}  alpha index = {}", r.thinness.value, r.alpha_index);
        let mus: Vec<u32> = (0..=r.bow.diam).map(|l| r.bow.mu_star(l)).collect();
        println!("  bow profile mu*(0..=diam) = {mus:?}");
        println!(
            "  metric triangles: {} (q_max {}), ball quasiconvexity {}, balls isometric {}",
            r.triangles.count,
            r.triangles.q_max,
            r.ball_quasiconvexity.value,
            r.balls_isometric.isometric
        );
        println!(
            "  classes: bipartite {:?}, chordal {:?}, meshed {:?}, weakly modular {:?}",
            r.classes.bipartite.as_bool(),
            r.classes.chordal.as_bool(),
            r.classes.meshed.as_bool(),
            r.classes.weakly_modular.as_bool()
        );
        println!();
    }
}
