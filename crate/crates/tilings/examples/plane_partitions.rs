//! Lozenge tilings of a hexagon are pictures of cube piles in a box: the
//! bijection with boxed plane partitions and its generating function.
//!
//! ```bash
//! cargo run --example plane_partitions
//! ```

use tilings::counting::hexagon_count;
use tilings::height::min_tiling;
use tilings::partitions::{
    enumerate_partitions, macmahon_series, partition_to_tiling, tiling_to_partition,
    PlanePartition,
};
use tilings::render::{render_tiling, RenderStyle};
use tilings::tiling::distance;
use tilings::generate;

fn main() {
    // A 66-cube pile in the 5x5x5 box, drawn as lozenges.
    let text = "5 5 5 5 3\n5 5 5 5 3\n5 5 1 1 0\n4 1 0 0 0\n3 0 0 0 0\n";
    let pile = PlanePartition::parse(text, 5).unwrap();
    println!("a pile of {} cubes in the 5x5x5 box:\n{}", pile.volume(), pile.to_text());
    let tiling = partition_to_tiling(&pile, 5, 5, 5).unwrap();
    println!("{}", render_tiling(&tiling, &RenderStyle::default()).unwrap());
    let back = tiling_to_partition(&tiling).unwrap();
    assert_eq!(back, pile);
    println!("tiling -> partition -> tiling is the identity\n");

    // Each flip adds or removes one cube, so flip distance from the empty
    // box equals the pile volume.
    let region = generate::hexagon(2, 2, 2);
    let empty = min_tiling(&region).unwrap().tiling().unwrap().clone();
    for t in tilings::enumerate_tilings(&region).iter().take(5) {
        let p = tiling_to_partition(t).unwrap();
        assert_eq!(distance(&empty, t).unwrap(), p.volume());
    }
    println!("flip distance from the empty box = cube count (hexagon(2,2,2))\n");

    // MacMahon's product generates the same counts as brute force.
    let series = macmahon_series(2, 2, 2);
    println!("partitions of the 2x2x2 box by volume: {:?}", series);
    assert_eq!(series, enumerate_partitions(2, 2, 2));
    let total: num_bigint::BigUint = series.iter().sum();
    assert_eq!(total, hexagon_count(2, 2, 2));
    println!("coefficients sum to hexagon_count(2,2,2) = {}", total);
}
