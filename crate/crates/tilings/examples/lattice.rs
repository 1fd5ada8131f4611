//! The set of tilings of a simply connected region is a lattice under the
//! pointwise order on height functions: meet and join of two tilings are
//! again tilings.
//!
//! ```bash
//! cargo run --example lattice
//! ```

use tilings::height::{heights_from_tiling, min_tiling, tiling_from_heights};
use tilings::{enumerate_tilings, generate};

fn main() {
    let region = generate::rectangle(2, 4);
    let tilings = enumerate_tilings(&region);
    let heights: Vec<_> = tilings
        .iter()
        .map(|t| heights_from_tiling(t).unwrap())
        .collect();
    println!("2x4 rectangle has {} tilings", tilings.len());

    // meet = pointwise min, join = pointwise max; both are valid heights.
    let m = heights[0].meet(&heights[1]).unwrap();
    let j = heights[0].join(&heights[1]).unwrap();
    println!("meet of tilings 0 and 1 is tiling of its own: {}", tiling_from_heights(&m).is_ok());
    println!("join of tilings 0 and 1 is tiling of its own: {}", tiling_from_heights(&j).is_ok());

    // Lattice laws.
    let a = &heights[0];
    let b = &heights[2];
    let c = &heights[4];
    assert_eq!(a.meet(b).unwrap(), b.meet(a).unwrap());
    assert_eq!(a.meet(&a.join(b).unwrap()).unwrap(), *a);
    assert_eq!(
        a.meet(b).unwrap().meet(c).unwrap(),
        a.meet(&b.meet(c).unwrap()).unwrap()
    );
    println!("commutativity, absorption and associativity hold");

    // Folding meet over all tilings lands on the global minimum.
    let fold = heights
        .iter()
        .skip(1)
        .fold(heights[0].clone(), |acc, h| acc.meet(h).unwrap());
    let bottom = heights_from_tiling(min_tiling(&region).unwrap().tiling().unwrap()).unwrap();
    assert_eq!(fold, bottom);
    println!("meet over all tilings equals the minimal tiling's heights");
}
