//! The two supported file formats: the whitespace edge list and graph6
//! (short and long form), plus interval/slice/ball primitives on a parsed
//! graph.
//!
//! Run with: cargo run --example formats_io

use bowtie::formats;
use bowtie::graph::DistanceMatrix;

fn main() {
    let text = "\
# a 4-cycle with a pendant vertex
5
0 1
1 2
2 3
3 0
0 4
";
    let g = formats::parse_edge_list(text).unwrap();
    println!("edge list parsed: n = {}, m = {}", g.n(), g.m());

    let g6 = formats::serialize_graph6(&g).unwrap();
    println!("graph6 form: {g6}");
    assert_eq!(formats::parse_graph6(g6.as_bytes()).unwrap(), g);

    let dm = DistanceMatrix::build(&g).unwrap();
    println!("d(4, 2) = {}", dm.dist(4, 2));
    println!("interval I(1, 3) = {:?}", dm.interval(1, 3).to_vec());
    println!("slice S_1(1, 3)  = {:?}", dm.slice(1, 3, 1).unwrap().to_vec());
    println!("ball B(0, 1)     = {:?}", dm.ball(0, 1).to_vec());

    // the empty 5-vertex graph parses fine but has no distance matrix
    let lonely = formats::parse_graph6(b"D??").unwrap();
    println!(
        "\n'D??' parses to n = {}, m = {}; distances: {:?}",
        lonely.n(),
        lonely.m(),
        DistanceMatrix::build(&lonely).err().map(|e| e.to_string())
    );
}
