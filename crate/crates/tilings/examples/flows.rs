//! Multiply connected regions: cuts, flows, and the classification of
//! flip-graph components by flow signatures.
//!
//! ```bash
//! cargo run --example flows
//! ```

use tilings::tiling::{flow, flow_signature_with, FlipGraph};
use tilings::Region;

fn analyze(name: &str, region: &Region) {
    println!("{name}: {} cells, {} hole(s)", region.cell_count(), region.hole_count());
    let cuts = region.cuts_basis();
    for (i, cut) in cuts.iter().enumerate() {
        println!("  cut {}: {:?}", i, cut.vertices());
    }
    let graph = FlipGraph::build(region, 100_000).unwrap();
    println!("  {} tilings in {} component(s)", graph.tilings().len(), graph.components().len());
    for (i, members) in graph.components().iter().enumerate() {
        let sig = flow_signature_with(&graph.tilings()[members[0]], &cuts);
        println!("  component {} has size {} and signature {:?}", i, members.len(), sig);
        // Every member agrees: flows are flip invariants.
        for &m in members {
            assert_eq!(flow_signature_with(&graph.tilings()[m], &cuts), sig);
        }
    }
    println!();
}

fn main() {
    // The square ring: two tilings, no flips, flows 0 and -1.
    let ring = Region::parse("square\n###\n#.#\n###\n").unwrap();
    analyze("3x3 minus center", &ring);
    let cuts = ring.cuts_basis();
    for t in tilings::enumerate_tilings(&ring) {
        println!(
            "  ring tiling flow across the basis cut: {:+}",
            flow(&t, &cuts[0]).unwrap()
        );
    }
    println!();

    // A fatter annulus: several components, one signature each.
    let annulus = Region::parse("square\n####\n#..#\n####\n").unwrap();
    analyze("4x3 minus 2x1", &annulus);

    let big = Region::parse("square\n####\n#..#\n#..#\n####\n").unwrap();
    analyze("4x4 minus 2x2", &big);
}
