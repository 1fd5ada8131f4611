//! Count tilings three independent ways: signed adjacency determinant,
//! closed product formulas, and brute-force enumeration.
//!
//! ```bash
//! cargo run --example counting
//! ```

use tilings::counting::{count_tilings, det_unsigned, hexagon_count, rectangle_count, sign_classes};
use tilings::{enumerate_tilings, generate};

fn main() {
    println!("domino tilings of n x m rectangles");
    println!("{:>4} {:>4} {:>14} {:>14} {:>12}", "n", "m", "determinant", "formula", "enumerated");
    for (n, m) in [(2u32, 2u32), (4, 4), (6, 6), (8, 8), (10, 10)] {
        let det = count_tilings(&generate::rectangle(n, m));
        let formula = rectangle_count(n, m).unwrap();
        let enumerated = if n * m <= 36 {
            enumerate_tilings(&generate::rectangle(n, m)).len().to_string()
        } else {
            "-".to_string()
        };
        println!("{:>4} {:>4} {:>14} {:>14} {:>12}", n, m, det, formula, enumerated);
    }

    println!("\nlozenge tilings of hexagons with sides r, c, m");
    println!("{:>4} {:>4} {:>4} {:>14} {:>14}", "r", "c", "m", "determinant", "formula");
    for (r, c, m) in [(1u32, 1u32, 1u32), (2, 2, 2), (3, 3, 3), (4, 4, 4), (2, 3, 4)] {
        let det = count_tilings(&generate::hexagon(r, c, m));
        let formula = hexagon_count(r, c, m);
        println!("{:>4} {:>4} {:>4} {:>14} {:>14}", r, c, m, det, formula);
    }

    // The unsigned determinant splits tilings into two sign classes: nearly
    // balanced for dominoes, totally one-sided for lozenges.
    println!("\nsign classes (N+, N-) and |det B|");
    let square = generate::rectangle(4, 4);
    let (p, m) = sign_classes(&square);
    println!("  4x4 square:      ({p}, {m}), |det B| = {}", det_unsigned(&square));
    let hexagon = generate::hexagon(2, 2, 2);
    let (p, m) = sign_classes(&hexagon);
    println!("  hexagon(2,2,2):  ({p}, {m}), |det B| = {}", det_unsigned(&hexagon));
}
