//! Property tests over randomly grown regions and arbitrary cell clouds.

use proptest::prelude::*;

use tilings::height::{heights_from_tiling, tiling_from_heights};
use tilings::region::{Cell, Lattice, Region};
use tilings::tiling::{apply_flip, available_flips, enumerate_tilings};
use tilings::generate;

fn arb_cells(lattice: Lattice) -> impl Strategy<Value = Vec<Cell>> {
    let cell = (0..5i32, 0..5i32, any::<bool>()).prop_map(move |(x, y, up)| match lattice {
        Lattice::Square => Cell::square(x, y),
        Lattice::Triangular => {
            if up {
                Cell::up(x, y)
            } else {
                Cell::down(x, y)
            }
        }
    });
    proptest::collection::vec(cell, 1..16)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    /// Writing any constructible region to the file format and parsing it
    /// back reproduces the cell set exactly.
    #[test]
    fn parse_serialize_roundtrip_square(cells in arb_cells(Lattice::Square)) {
        if let Ok(region) = Region::new(Lattice::Square, cells) {
            let text = region.to_text().unwrap();
            let back = Region::parse(&text).unwrap();
            prop_assert_eq!(region.cells(), back.cells());
        }
    }

    #[test]
    fn parse_serialize_roundtrip_triangular(cells in arb_cells(Lattice::Triangular)) {
        if let Ok(region) = Region::new(Lattice::Triangular, cells) {
            let text = region.to_text().unwrap();
            let back = Region::parse(&text).unwrap();
            prop_assert_eq!(region.cells(), back.cells());
        }
    }

    /// Tiling -> heights -> tiling is the identity, and every flip is an
    /// involution that preserves validity, on random simply connected
    /// regions of either lattice.
    #[test]
    fn heights_and_flips_on_random_regions(seed in 0u64..512, square in any::<bool>()) {
        let lattice = if square { Lattice::Square } else { Lattice::Triangular };
        let region = generate::random_balanced_simply_connected(lattice, 10, seed);
        for t in enumerate_tilings(&region).iter().take(6) {
            let h = heights_from_tiling(t).unwrap();
            prop_assert_eq!(&tiling_from_heights(&h).unwrap(), t);
            for f in available_flips(t) {
                let once = apply_flip(t, &f).unwrap();
                prop_assert_ne!(&once, t);
                prop_assert_eq!(&apply_flip(&once, &f).unwrap(), t);
            }
        }
    }

    /// meet and join of any two height functions of a region are valid
    /// height functions of tilings of the same region.
    #[test]
    fn lattice_operations_close(seed in 0u64..256) {
        let region = generate::random_balanced_simply_connected(Lattice::Square, 8, seed);
        let tilings = enumerate_tilings(&region);
        let heights: Vec<_> = tilings.iter().map(|t| heights_from_tiling(t).unwrap()).collect();
        for a in heights.iter().take(4) {
            for b in heights.iter().take(4) {
                let meet = a.meet(b).unwrap();
                let join = a.join(b).unwrap();
                prop_assert!(tiling_from_heights(&meet).is_ok());
                prop_assert!(tiling_from_heights(&join).is_ok());
                prop_assert!(meet.le_pointwise(a) && meet.le_pointwise(b));
                prop_assert!(a.le_pointwise(&join) && b.le_pointwise(&join));
            }
        }
    }
}
