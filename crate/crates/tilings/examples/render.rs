//! ASCII and SVG pictures.
//!
//! ```bash
//! cargo run --example render > pictures.txt
//! ```

use tilings::height::{max_tiling, min_tiling};
use tilings::render::{render_region, render_tiling, RenderFormat, RenderStyle};
use tilings::generate;

fn main() {
    let ascii = RenderStyle::default();

    let rect = generate::rectangle(4, 3);
    let t = min_tiling(&rect).unwrap().tiling().unwrap().clone();
    println!("a minimal tiling of the 4x3 rectangle:");
    println!("{}", render_tiling(&t, &ascii).unwrap());

    let hexagon = generate::hexagon(3, 3, 3);
    println!("empty box (minimal tiling of hexagon(3,3,3)):");
    let empty = min_tiling(&hexagon).unwrap().tiling().unwrap().clone();
    println!("{}", render_tiling(&empty, &ascii).unwrap());
    println!("full box (maximal tiling):");
    let full = max_tiling(&hexagon).unwrap().tiling().unwrap().clone();
    println!("{}", render_tiling(&full, &ascii).unwrap());

    println!("region outline with color classes:");
    let colored = RenderStyle { show_colors: true, ..ascii };
    println!("{}", render_region(&generate::rectangle(3, 2), &colored).unwrap());

    // SVG output is a standalone document, one polygon per tile.
    let svg = RenderStyle { format: RenderFormat::Svg, ..ascii };
    let doc = render_tiling(&empty, &svg).unwrap();
    println!("SVG for the empty box has {} polygons:", doc.matches("<polygon").count());
    println!("{}", doc);
}
