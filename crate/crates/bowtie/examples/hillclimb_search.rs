//! Mutation search: hill-climb over edge toggles looking for graphs that
//! satisfy a fixed (λ₀, μ₀) bow constraint yet score high on 2δ, metric
//! triangle size, and thinness, the shape a counterexample would have to
//! take. Every evaluated graph also runs the full check catalog; a FAIL
//! would surface immediately with witnesses.
//!
//! Run with: cargo run --example hillclimb_search

use bowtie::search::{search_mutate, SearchConfig};

fn main() {
    let config = SearchConfig {
        lambda0: 0,
        mu0: 1,
        n: 12,
        budget: 150,
        seed: 42,
        top_k: 5,
        ..SearchConfig::default()
    };
    let outcome = search_mutate(&config, None).unwrap();
    println!(
        "evaluated {} graphs ({} disconnected proposals skipped), {} check failures",
        outcome.evaluated,
        outcome.skipped_disconnected,
        outcome.failures.len()
    );
    println!("top candidates under the (0,1) bow constraint:");
    for c in &outcome.candidates {
        let [two_delta, q_max, thinness] = c.score.unwrap();
        println!(
            "  {}  2*delta={two_delta} q_max={q_max} thinness={thinness}  (n={}, m={})",
            c.graph6, c.report.n, c.report.m
        );
    }
    if let Some(best) = outcome.candidates.first() {
        println!(
            "\nbest 2*delta found: {} (graphs meeting (0,1) stay 1-hyperbolic)",
            best.score.unwrap()[0]
        );
    }
}
