//! Decide tileability with the height-function sweep and inspect the
//! minimal and maximal tilings.
//!
//! ```bash
//! cargo run --example tileability
//! ```

use tilings::height::{max_tiling, min_tiling, Tileability};
use tilings::render::{render_tiling, RenderStyle};
use tilings::{generate, Region};

fn report(name: &str, region: &Region) {
    match min_tiling(region).expect("simply connected input") {
        Tileability::Tileable(t) => {
            println!("{name}: tileable ({} tiles)", t.tile_count());
            println!("{}", render_tiling(&t, &RenderStyle::default()).unwrap());
        }
        Tileability::Untileable(reason) => println!("{name}: untileable {reason}\n"),
    }
}

fn main() {
    report("4x4 square", &generate::rectangle(4, 4));
    report("hexagon(2,2,2)", &generate::hexagon(2, 2, 2));

    // Balanced color counts are necessary but not sufficient: both pendant
    // cells below need the same partner, stranding the row ends.
    let trap = Region::parse("square\n.#..\n####\n..#.\n").unwrap();
    assert!(trap.is_balanced());
    report("pendant trap", &trap);

    // An odd cell count fails already at the color count.
    let odd = Region::parse("square\n#.\n##\n").unwrap();
    report("L-triomino", &odd);

    // The minimal and maximal tilings bound every tiling pointwise.
    let region = generate::rectangle(4, 4);
    let min = min_tiling(&region).unwrap();
    let max = max_tiling(&region).unwrap();
    let hmin = tilings::heights_from_tiling(min.tiling().unwrap()).unwrap();
    let hmax = tilings::heights_from_tiling(max.tiling().unwrap()).unwrap();
    println!("heights of the minimal tiling are pointwise at most the maximal:");
    println!("  min <= max: {}", hmin.le_pointwise(&hmax));
}
