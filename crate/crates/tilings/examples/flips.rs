//! Walk the flip graph: local moves, connectivity, and the height-difference
//! distance formula.
//!
//! ```bash
//! cargo run --example flips
//! ```

use tilings::height::{max_tiling, min_tiling};
use tilings::tiling::{apply_flip, available_flips, distance, FlipGraph};
use tilings::generate;

fn main() {
    let region = generate::rectangle(2, 4);
    let graph = FlipGraph::build(&region, 10_000).unwrap();
    println!(
        "2x4 rectangle: {} tilings, {} flip edges, {} component(s)",
        graph.tilings().len(),
        graph.edges().len(),
        graph.components().len()
    );
    println!("edge list:\n{}", graph.edge_list_text());

    // Distances agree with BFS on every pair.
    for i in 0..graph.tilings().len() {
        for j in 0..graph.tilings().len() {
            let formula = distance(&graph.tilings()[i], &graph.tilings()[j]).unwrap();
            let bfs = graph.bfs_distance(i, j).unwrap();
            assert_eq!(formula, bfs);
        }
    }
    println!("distance formula = BFS distance on all pairs");

    // A flip is an involution at its location.
    let t = &graph.tilings()[0];
    let flips = available_flips(t);
    println!("tiling 0 admits {} flip(s)", flips.len());
    let once = apply_flip(t, &flips[0]).unwrap();
    let twice = apply_flip(&once, &flips[0]).unwrap();
    assert_eq!(&twice, t);
    println!("applying a flip twice returns the original tiling");

    // Min-to-max distance in the hexagon equals the box volume.
    let hexagon = generate::hexagon(2, 2, 2);
    let min = min_tiling(&hexagon).unwrap().tiling().unwrap().clone();
    let max = max_tiling(&hexagon).unwrap().tiling().unwrap().clone();
    println!(
        "hexagon(2,2,2): distance(min, max) = {} (= 2*2*2 cubes)",
        distance(&min, &max).unwrap()
    );
}
