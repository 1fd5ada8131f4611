//! Height functions for tilings of simply connected regions.
//!
//! Walking a border edge `u -> v` changes the height by +1 when the black
//! cell incident to the edge lies on the left (squares), or when the
//! up-triangle lies on the left (triangles); crossing a tile changes it by
//! the complementary amount of 4 resp. 3. Heights are normalized so the
//! lexicographically smallest `(y, x)` vertex of the outer boundary is 0.
//! The pointwise order on height functions makes the set of tilings a
//! lattice whose extremes are computed by a shortest-path sweep inward from
//! the boundary.

use std::cmp::Reverse;
use std::collections::{BinaryHeap, HashMap};
use std::fmt;
use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::region::{edge, left_cell, Color, Lattice, Region, Vertex};
use crate::tiling::Tiling;

/// Height step across an uncovered (border) edge `from -> from+dir`.
fn border_delta(lattice: Lattice, from: Vertex, dir: (i32, i32)) -> i32 {
    match lattice {
        Lattice::Triangular => match dir {
            (1, 0) | (-1, 1) | (0, -1) => 1,
            (-1, 0) | (1, -1) | (0, 1) => -1,
            _ => panic!("not a triangular direction: {:?}", dir),
        },
        Lattice::Square => match left_cell(lattice, from, dir).color() {
            Color::Black => 1,
            Color::White => -1,
        },
    }
}

/// Magnitude of the full height period: 3 for lozenges, 4 for dominoes.
pub fn height_period(lattice: Lattice) -> i32 {
    match lattice {
        Lattice::Triangular => 3,
        Lattice::Square => 4,
    }
}

/// Height step across an edge covered by a tile.
fn crossed_delta(lattice: Lattice, from: Vertex, dir: (i32, i32)) -> i32 {
    let b = border_delta(lattice, from, dir);
    b - b.signum() * height_period(lattice)
}

/// An integer height per region vertex, normalized to 0 at the base vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HeightFunction {
    region: Region,
    values: Vec<i32>,
}

impl HeightFunction {
    /// Wrap explicit values (aligned with `region.vertices()`), validating
    /// the characterization and the normalization.
    pub fn from_values(region: &Region, values: Vec<i32>) -> Result<HeightFunction> {
        if values.len() != region.vertices().len() {
            return Err(Error::InvalidHeights(
                "value list does not cover the vertex set".into(),
            ));
        }
        let h = HeightFunction { region: region.clone(), values };
        match check_heights(&h.region, &h.values) {
            Ok(()) => Ok(h),
            Err(msg) => Err(Error::InvalidHeights(msg)),
        }
    }

    pub fn region(&self) -> &Region {
        &self.region
    }

    /// Values in `region.vertices()` order.
    pub fn values(&self) -> &[i32] {
        &self.values
    }

    pub fn get(&self, v: Vertex) -> Option<i32> {
        self.region.vertex_position(v).map(|i| self.values[i])
    }

    /// Pointwise minimum; the height function of another tiling.
    pub fn meet(&self, other: &HeightFunction) -> Result<HeightFunction> {
        self.combine(other, i32::min)
    }

    /// Pointwise maximum; the height function of another tiling.
    pub fn join(&self, other: &HeightFunction) -> Result<HeightFunction> {
        self.combine(other, i32::max)
    }

    fn combine(&self, other: &HeightFunction, f: fn(i32, i32) -> i32) -> Result<HeightFunction> {
        if self.region != other.region {
            return Err(Error::DifferentRegions);
        }
        let values: Vec<i32> = self
            .values
            .iter()
            .zip(&other.values)
            .map(|(&a, &b)| f(a, b))
            .collect();
        debug_assert!(check_heights(&self.region, &values).is_ok());
        Ok(HeightFunction { region: self.region.clone(), values })
    }

    /// True when `self <= other` at every vertex.
    pub fn le_pointwise(&self, other: &HeightFunction) -> bool {
        self.region == other.region
            && self.values.iter().zip(&other.values).all(|(a, b)| a <= b)
    }

    /// One `x y h` line per vertex, in lexicographic vertex order.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for (v, h) in self.region.vertices().iter().zip(&self.values) {
            let _ = writeln!(out, "{} {} {}", v.0, v.1, h);
        }
        out
    }
}

impl fmt::Display for HeightFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

/// Check the local characterization plus normalization; `Err` carries the
/// first violation found.
fn check_heights(region: &Region, values: &[i32]) -> std::result::Result<(), String> {
    let lattice = region.lattice();
    let base = region.base_vertex();
    let at = |v: Vertex| values[region.vertex_position(v).unwrap()];
    if at(base) != 0 {
        return Err(format!("base vertex {:?} must have height 0", base));
    }
    for &(u, v) in region.edges() {
        let dir = (v.0 - u.0, v.1 - u.1);
        let d = at(v) - at(u);
        let b = border_delta(lattice, u, dir);
        if region.is_boundary_edge(&edge(u, v)) {
            if d != b {
                return Err(format!(
                    "boundary edge {:?}-{:?} changes by {} instead of {}",
                    u, v, d, b
                ));
            }
        } else if d != b && d != crossed_delta(lattice, u, dir) {
            return Err(format!(
                "edge {:?}-{:?} changes by {}, allowed {} or {}",
                u,
                v,
                d,
                b,
                crossed_delta(lattice, u, dir)
            ));
        }
    }
    Ok(())
}

/// Total predicate: does the map satisfy the height-function
/// characterization for this region (including normalization)?
pub fn is_valid_height(region: &Region, values: &HashMap<Vertex, i32>) -> bool {
    let ordered: Option<Vec<i32>> = region
        .vertices()
        .iter()
        .map(|v| values.get(v).copied())
        .collect();
    match ordered {
        Some(vals) => {
            vals.len() == values.len() && check_heights(region, &vals).is_ok()
        }
        None => false,
    }
}

/// Height function of a tiling of a simply connected region.
pub fn heights_from_tiling(t: &Tiling) -> Result<HeightFunction> {
    let region = t.region();
    if !region.is_simply_connected() {
        return Err(Error::NotSimplyConnected);
    }
    let n = region.vertices().len();
    let mut values = vec![i32::MIN; n];
    let base = region.base_vertex();
    let base_idx = region.vertex_position(base).unwrap();
    values[base_idx] = 0;
    let mut queue = std::collections::VecDeque::from([base]);
    while let Some(u) = queue.pop_front() {
        let hu = values[region.vertex_position(u).unwrap()];
        for v in region.vertex_neighbors(u) {
            let dir = (v.0 - u.0, v.1 - u.1);
            let e = edge(u, v);
            let delta = if t.covers_edge(&e) {
                crossed_delta(region.lattice(), u, dir)
            } else {
                border_delta(region.lattice(), u, dir)
            };
            let vi = region.vertex_position(v).unwrap();
            if values[vi] == i32::MIN {
                values[vi] = hu + delta;
                queue.push_back(v);
            } else if values[vi] != hu + delta {
                return Err(Error::InvalidTiling(
                    "height propagation is inconsistent".into(),
                ));
            }
        }
    }
    debug_assert!(check_heights(region, &values).is_ok());
    Ok(HeightFunction { region: region.clone(), values })
}

/// The unique tiling whose tile-crossing edges are exactly the edges where
/// the height changes by more than 1. Inverse of [`heights_from_tiling`].
pub fn tiling_from_heights(h: &HeightFunction) -> Result<Tiling> {
    let region = h.region();
    let period = height_period(region.lattice());
    let at = |v: Vertex| h.values[region.vertex_position(v).unwrap()];
    let mut pairs = Vec::new();
    for (i, cell) in region.cells().iter().enumerate() {
        let mut partner = None;
        for side in cell.sides() {
            let d = (at(side.1) - at(side.0)).abs();
            if d == period - 1 {
                let cells = region.edge_cell_indices(&side).unwrap();
                let other = cells.iter().copied().find(|&c| c != i).ok_or_else(|| {
                    Error::InvalidHeights("tile crosses a boundary edge".into())
                })?;
                if partner.replace(other).is_some() {
                    return Err(Error::InvalidHeights(format!(
                        "cell {} has two crossing sides",
                        cell
                    )));
                }
            }
        }
        let p = partner.ok_or_else(|| {
            Error::InvalidHeights(format!("cell {} has no crossing side", cell))
        })?;
        if i < p {
            pairs.push((*cell, region.cells()[p]));
        }
    }
    Tiling::new(region, pairs)
}

/// Why a simply connected region admits no tiling.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum UntileableReason {
    /// Different numbers of black and white cells.
    ColorImbalance,
    /// The boundary height walk does not close up.
    BoundaryWalk,
    /// Boundary heights are consistent but no interior assignment exists.
    InteriorContradiction,
}

impl fmt::Display for UntileableReason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            UntileableReason::ColorImbalance => "color-imbalance",
            UntileableReason::BoundaryWalk => "boundary-walk",
            UntileableReason::InteriorContradiction => "interior-contradiction",
        })
    }
}

/// Outcome of the tileability decision for a simply connected region.
#[derive(Clone, Debug)]
pub enum Tileability {
    Tileable(Tiling),
    Untileable(UntileableReason),
}

impl Tileability {
    pub fn tiling(&self) -> Option<&Tiling> {
        match self {
            Tileability::Tileable(t) => Some(t),
            Tileability::Untileable(_) => None,
        }
    }

    pub fn is_tileable(&self) -> bool {
        matches!(self, Tileability::Tileable(_))
    }
}

/// Heights fixed along the outer boundary by the border rule. `None` when
/// the walk fails to close (which for a simple cycle means color imbalance).
fn boundary_heights(region: &Region) -> Option<Vec<(Vertex, i64)>> {
    let cycle = &region.boundary_cycles()[0];
    let lattice = region.lattice();
    let mut fixed: HashMap<Vertex, i64> = HashMap::new();
    let mut out = Vec::new();
    let mut h = 0i64;
    for i in 0..cycle.len() {
        let u = cycle[i];
        let v = cycle[(i + 1) % cycle.len()];
        match fixed.get(&u) {
            Some(&prev) if prev != h => return None,
            Some(_) => {}
            None => {
                fixed.insert(u, h);
                out.push((u, h));
            }
        }
        h += border_delta(lattice, u, (v.0 - u.0, v.1 - u.1)) as i64;
    }
    if h != 0 {
        return None;
    }
    Some(out)
}

/// Multi-source shortest-path relaxation over the interior edges.
///
/// `reversed` relaxes along reversed edges, which turns the same sweep into
/// the computation of maximal admissible decreases.
fn relax(region: &Region, sources: &[(Vertex, i64)], reversed: bool) -> Vec<i64> {
    let n = region.vertices().len();
    let lattice = region.lattice();
    let period = height_period(lattice) as i64;
    let mut dist = vec![i64::MAX; n];
    let mut heap: BinaryHeap<Reverse<(i64, usize)>> = BinaryHeap::new();
    for &(v, h) in sources {
        let i = region.vertex_position(v).unwrap();
        if h < dist[i] {
            dist[i] = h;
            heap.push(Reverse((h, i)));
        }
    }
    while let Some(Reverse((d, i))) = heap.pop() {
        if d > dist[i] {
            continue;
        }
        let u = region.vertices()[i];
        for v in region.vertex_neighbors(u) {
            if !region.is_interior_edge(&edge(u, v)) {
                continue;
            }
            // Weight of the directed constraint being relaxed.
            let (from, dir) = if reversed {
                (v, (u.0 - v.0, u.1 - v.1))
            } else {
                (u, (v.0 - u.0, v.1 - u.1))
            };
            let w = if border_delta(lattice, from, dir) == 1 {
                1
            } else {
                period - 1
            };
            let j = region.vertex_position(v).unwrap();
            if d + w < dist[j] {
                dist[j] = d + w;
                heap.push(Reverse((d + w, j)));
            }
        }
    }
    dist
}

fn extremal_tiling(region: &Region, maximal: bool) -> Result<Tileability> {
    if !region.is_simply_connected() {
        return Err(Error::NotSimplyConnected);
    }
    if !region.is_balanced() {
        return Ok(Tileability::Untileable(UntileableReason::ColorImbalance));
    }
    let boundary = match boundary_heights(region) {
        Some(b) => b,
        None => return Ok(Tileability::Untileable(UntileableReason::BoundaryWalk)),
    };
    let sources: Vec<(Vertex, i64)> = if maximal {
        boundary.clone()
    } else {
        boundary.iter().map(|&(v, h)| (v, -h)).collect()
    };
    let dist = relax(region, &sources, !maximal);
    for &(v, h) in &boundary {
        let got = dist[region.vertex_position(v).unwrap()];
        let expect = if maximal { h } else { -h };
        if got != expect {
            return Ok(Tileability::Untileable(UntileableReason::InteriorContradiction));
        }
    }
    let values: Vec<i32> = dist
        .iter()
        .map(|&d| {
            debug_assert!(d != i64::MAX, "every vertex reaches the boundary");
            (if maximal { d } else { -d }) as i32
        })
        .collect();
    if check_heights(region, &values).is_err() {
        return Ok(Tileability::Untileable(UntileableReason::InteriorContradiction));
    }
    let h = HeightFunction { region: region.clone(), values };
    Ok(Tileability::Tileable(tiling_from_heights(&h)?))
}

/// Decide tileability of a simply connected region and return the tiling
/// whose height function is pointwise minimal. Polynomial in the cell count.
pub fn min_tiling(region: &Region) -> Result<Tileability> {
    extremal_tiling(region, false)
}

/// The tiling whose height function is pointwise maximal.
pub fn max_tiling(region: &Region) -> Result<Tileability> {
    extremal_tiling(region, true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate;
    use crate::tiling::{enumerate_tilings, first_tiling};

    fn two_by_two() -> Region {
        Region::parse("square\n##\n##\n").unwrap()
    }

    #[test]
    fn single_domino_heights() {
        let r = generate::rectangle(2, 1);
        let t = &enumerate_tilings(&r)[0];
        let h = heights_from_tiling(t).unwrap();
        assert_eq!(h.get((0, 0)), Some(0));
        // All six vertices are on the boundary; values follow the walk.
        assert_eq!(h.get((1, 0)), Some(1));
        assert_eq!(h.get((2, 0)), Some(0));
        assert_eq!(h.get((2, 1)), Some(-1));
        assert_eq!(h.get((1, 1)), Some(-2));
        assert_eq!(h.get((0, 1)), Some(-1));
    }

    #[test]
    fn two_by_two_center_differs_by_four() {
        let ts = enumerate_tilings(&two_by_two());
        let hs: Vec<HeightFunction> =
            ts.iter().map(|t| heights_from_tiling(t).unwrap()).collect();
        let c: Vec<i32> = hs.iter().map(|h| h.get((1, 1)).unwrap()).collect();
        assert_eq!((c[0] - c[1]).abs(), 4);
        // Boundary heights coincide.
        for v in two_by_two().vertices() {
            if *v != (1, 1) {
                assert_eq!(hs[0].get(*v), hs[1].get(*v));
            }
        }
    }

    #[test]
    fn unit_hexagon_center_differs_by_three() {
        let r = generate::hexagon(1, 1, 1);
        let ts = enumerate_tilings(&r);
        assert_eq!(ts.len(), 2);
        let c: Vec<i32> = ts
            .iter()
            .map(|t| heights_from_tiling(t).unwrap().get((1, 1)).unwrap())
            .collect();
        assert_eq!((c[0] - c[1]).abs(), 3);
    }

    #[test]
    fn roundtrip_all_tilings() {
        for region in [
            generate::rectangle(2, 6),
            generate::hexagon(1, 1, 1),
            generate::hexagon(2, 2, 2),
            Region::parse("square\n###\n###\n##.\n").unwrap(),
        ] {
            let ts = enumerate_tilings(&region);
            assert!(!ts.is_empty());
            for t in &ts {
                let h = heights_from_tiling(t).unwrap();
                assert_eq!(&tiling_from_heights(&h).unwrap(), t);
                let h2 = heights_from_tiling(&tiling_from_heights(&h).unwrap()).unwrap();
                assert_eq!(h2, h);
            }
        }
    }

    #[test]
    fn validity_predicate() {
        let r = two_by_two();
        let t = &enumerate_tilings(&r)[0];
        let h = heights_from_tiling(t).unwrap();
        let mut map: HashMap<Vertex, i32> = r
            .vertices()
            .iter()
            .zip(h.values())
            .map(|(v, h)| (*v, *h))
            .collect();
        assert!(is_valid_height(&r, &map));
        // Bump the interior vertex: breaks the mod classes.
        *map.get_mut(&(1, 1)).unwrap() += 1;
        assert!(!is_valid_height(&r, &map));
        // All-zero map: boundary edges must change by 1.
        let zero: HashMap<Vertex, i32> = r.vertices().iter().map(|v| (*v, 0)).collect();
        assert!(!is_valid_height(&r, &zero));
        // Missing vertex.
        let mut short = zero;
        short.remove(&(0, 0));
        assert!(!is_valid_height(&r, &short));
    }

    #[test]
    fn min_tiling_is_pointwise_minimal() {
        for region in [two_by_two(), generate::rectangle(2, 4), generate::hexagon(2, 2, 2)] {
            let min = min_tiling(&region).unwrap();
            let hmin = heights_from_tiling(min.tiling().unwrap()).unwrap();
            for t in enumerate_tilings(&region) {
                let h = heights_from_tiling(&t).unwrap();
                assert!(hmin.le_pointwise(&h));
            }
        }
    }

    #[test]
    fn max_tiling_is_pointwise_maximal() {
        for region in [two_by_two(), generate::hexagon(2, 2, 2)] {
            let max = max_tiling(&region).unwrap();
            let hmax = heights_from_tiling(max.tiling().unwrap()).unwrap();
            for t in enumerate_tilings(&region) {
                let h = heights_from_tiling(&t).unwrap();
                assert!(h.le_pointwise(&hmax));
            }
        }
    }

    #[test]
    fn untileable_trap_region() {
        let trap = Region::parse("square\n.#..\n####\n..#.\n").unwrap();
        assert!(trap.is_balanced());
        match min_tiling(&trap).unwrap() {
            Tileability::Untileable(UntileableReason::InteriorContradiction) => {}
            other => panic!("expected interior contradiction, got {:?}", other),
        }
        assert!(first_tiling(&trap).is_none());
    }

    #[test]
    fn untileable_imbalance() {
        let l = Region::parse("square\n#.\n##\n").unwrap();
        match min_tiling(&l).unwrap() {
            Tileability::Untileable(UntileableReason::ColorImbalance) => {}
            other => panic!("expected color imbalance, got {:?}", other),
        }
    }

    #[test]
    fn max_tiling_reports_the_same_stage() {
        let trap = Region::parse("square\n.#..\n####\n..#.\n").unwrap();
        match max_tiling(&trap).unwrap() {
            Tileability::Untileable(UntileableReason::InteriorContradiction) => {}
            other => panic!("expected interior contradiction, got {:?}", other),
        }
        let l = Region::parse("square\n#.\n##\n").unwrap();
        match max_tiling(&l).unwrap() {
            Tileability::Untileable(UntileableReason::ColorImbalance) => {}
            other => panic!("expected color imbalance, got {:?}", other),
        }
    }

    #[test]
    fn min_tiling_rejects_holes() {
        let ring = Region::parse("square\n###\n#.#\n###\n").unwrap();
        assert!(matches!(min_tiling(&ring), Err(Error::NotSimplyConnected)));
    }

    #[test]
    fn lattice_operations() {
        let region = generate::rectangle(2, 4);
        let ts = enumerate_tilings(&region);
        assert_eq!(ts.len(), 5);
        let hs: Vec<HeightFunction> =
            ts.iter().map(|t| heights_from_tiling(t).unwrap()).collect();
        // meet(h, h) = h.
        assert_eq!(hs[0].meet(&hs[0]).unwrap(), hs[0]);
        // Fold of meets equals the minimal height function.
        let fold = hs
            .iter()
            .skip(1)
            .fold(hs[0].clone(), |acc, h| acc.meet(h).unwrap());
        let hmin =
            heights_from_tiling(min_tiling(&region).unwrap().tiling().unwrap()).unwrap();
        assert_eq!(fold, hmin);
        // Absorption and commutativity; every combination is a tiling.
        for a in &hs {
            for b in &hs {
                let m = a.meet(b).unwrap();
                let j = a.join(b).unwrap();
                assert_eq!(a.meet(&j).unwrap(), *a);
                assert_eq!(m, b.meet(a).unwrap());
                assert!(tiling_from_heights(&m).is_ok());
                assert!(tiling_from_heights(&j).is_ok());
            }
        }
    }

    #[test]
    fn join_of_extremes_is_max() {
        let region = generate::hexagon(2, 2, 2);
        let hmin =
            heights_from_tiling(min_tiling(&region).unwrap().tiling().unwrap()).unwrap();
        let hmax =
            heights_from_tiling(max_tiling(&region).unwrap().tiling().unwrap()).unwrap();
        assert_eq!(hmin.join(&hmax).unwrap(), hmax);
        assert_eq!(hmin.meet(&hmax).unwrap(), hmin);
    }

    #[test]
    fn heights_serialize_in_vertex_order() {
        let r = generate::rectangle(2, 1);
        let t = &enumerate_tilings(&r)[0];
        let text = heights_from_tiling(t).unwrap().to_text();
        let first: Vec<&str> = text.lines().take(2).collect();
        assert_eq!(first[0], "0 0 0");
        assert_eq!(first[1], "0 1 -1");
    }
}
