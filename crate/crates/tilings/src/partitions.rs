//! Boxed plane partitions and their bijection with lozenge tilings of
//! center-symmetric hexagons.
//!
//! A tiling of `hexagon(r, c, m)` is the picture of a gravitationally stable
//! pile of unit cubes in an `r x c x m` box; `n[i][j]` counts the cubes above
//! the floor square in row `i` (x direction) and column `j` (y direction).
//! The generating function of the counts by volume is the MacMahon product.

use std::fmt::Write as _;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::generate;
use crate::height::heights_from_tiling;
use crate::region::{Cell, CellKind};
use crate::tiling::Tiling;

/// An `r x c` array of non-negative integers, weakly decreasing along rows
/// and columns, with entries bounded by `m`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PlanePartition {
    entries: Vec<Vec<u32>>,
    bound: u32,
}

impl PlanePartition {
    pub fn new(entries: Vec<Vec<u32>>, bound: u32) -> Result<PlanePartition> {
        if entries.is_empty() || entries[0].is_empty() {
            return Err(Error::InvalidPartition("array must be non-empty".into()));
        }
        let cols = entries[0].len();
        if entries.iter().any(|row| row.len() != cols) {
            return Err(Error::InvalidPartition("rows have unequal lengths".into()));
        }
        if entries[0][0] > bound {
            return Err(Error::InvalidPartition(format!(
                "entry {} exceeds the bound {}",
                entries[0][0], bound
            )));
        }
        for i in 0..entries.len() {
            for j in 0..cols {
                if i + 1 < entries.len() && entries[i][j] < entries[i + 1][j] {
                    return Err(Error::InvalidPartition(format!(
                        "rows must weakly decrease: n[{}][{}] < n[{}][{}]",
                        i + 1,
                        j + 1,
                        i + 2,
                        j + 1
                    )));
                }
                if j + 1 < cols && entries[i][j] < entries[i][j + 1] {
                    return Err(Error::InvalidPartition(format!(
                        "columns must weakly decrease: n[{}][{}] < n[{}][{}]",
                        i + 1,
                        j + 1,
                        i + 1,
                        j + 2
                    )));
                }
            }
        }
        Ok(PlanePartition { entries, bound })
    }

    pub fn rows(&self) -> usize {
        self.entries.len()
    }

    pub fn cols(&self) -> usize {
        self.entries[0].len()
    }

    pub fn bound(&self) -> u32 {
        self.bound
    }

    pub fn entries(&self) -> &[Vec<u32>] {
        &self.entries
    }

    pub fn entry(&self, i: usize, j: usize) -> u32 {
        self.entries[i][j]
    }

    /// Total number of cubes.
    pub fn volume(&self) -> u64 {
        self.entries.iter().flatten().map(|&e| e as u64).sum()
    }

    /// Whitespace-separated rows, one per line.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for row in &self.entries {
            let words: Vec<String> = row.iter().map(|e| e.to_string()).collect();
            let _ = writeln!(out, "{}", words.join(" "));
        }
        out
    }

    /// Parse whitespace-separated rows; `bound` is the box height.
    pub fn parse(text: &str, bound: u32) -> Result<PlanePartition> {
        let mut entries = Vec::new();
        for (lineno, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() {
                continue;
            }
            let row: std::result::Result<Vec<u32>, _> =
                line.split_whitespace().map(|w| w.parse::<u32>()).collect();
            entries.push(row.map_err(|_| Error::Parse {
                line: lineno + 1,
                message: "expected non-negative integers".into(),
            })?);
        }
        PlanePartition::new(entries, bound)
    }
}

/// Face bookkeeping shared by the two bijection directions: the lozenge that
/// the visible box-surface square `(axis, position)` projects to, in the
/// unshifted frame where lattice point `(x, y)` is the image of
/// `(X, Y, Z) = (x+y+t, y+t, t)`.
fn xy_face(i: i64, j: i64, z: i64) -> (Cell, Cell) {
    let (a, b) = ((i - j) as i32, (j - 1 - z) as i32);
    (Cell::up(a, b), Cell::down(a - 1, b))
}

fn yz_face(i: i64, j: i64, k: i64) -> (Cell, Cell) {
    let (a, b) = ((i - j) as i32, (j - k) as i32);
    (Cell::up(a, b), Cell::down(a, b - 1))
}

fn xz_face(i: i64, j: i64, k: i64) -> (Cell, Cell) {
    let (a, b) = ((i - 1 - j) as i32, (j - k) as i32);
    (Cell::up(a, b), Cell::down(a, b))
}

/// The lozenge tiling of `hexagon(r, c, m)` picturing the pile `p`.
///
/// The partition may be smaller than `r x c`; missing entries are zero.
pub fn partition_to_tiling(p: &PlanePartition, r: u32, c: u32, m: u32) -> Result<Tiling> {
    if p.rows() > r as usize || p.cols() > c as usize || p.entry(0, 0) > m {
        return Err(Error::InvalidPartition(format!(
            "partition does not fit in a {}x{}x{} box",
            r, c, m
        )));
    }
    let n = |i: i64, j: i64| -> i64 {
        // 1-based box row/column; zero outside the stored array.
        if i >= 1 && j >= 1 && (i as usize) <= p.rows() && (j as usize) <= p.cols() {
            p.entry(i as usize - 1, j as usize - 1) as i64
        } else {
            0
        }
    };
    let (ri, ci, mi) = (r as i64, c as i64, m as i64);
    let shift = |(u, d): (Cell, Cell)| {
        (
            Cell::up(u.x + ci as i32, u.y + mi as i32),
            Cell::down(d.x + ci as i32, d.y + mi as i32),
        )
    };
    let mut tiles = Vec::new();
    // Top of each cube column (or the floor).
    for i in 1..=ri {
        for j in 1..=ci {
            tiles.push(shift(xy_face(i, j, n(i, j))));
        }
    }
    // Steps in the x direction, with the box wall at X = 0.
    for j in 1..=ci {
        for i in 0..=ri {
            let high = if i == 0 { mi } else { n(i, j) };
            let low = if i == ri { 0 } else { n(i + 1, j) };
            for k in low + 1..=high {
                tiles.push(shift(yz_face(i, j, k)));
            }
        }
    }
    // Steps in the y direction, with the box wall at Y = 0.
    for i in 1..=ri {
        for j in 0..=ci {
            let high = if j == 0 { mi } else { n(i, j) };
            let low = if j == ci { 0 } else { n(i, j + 1) };
            for k in low + 1..=high {
                tiles.push(shift(xz_face(i, j, k)));
            }
        }
    }
    let region = generate::hexagon(r, c, m);
    Tiling::new(&region, tiles)
}

/// Count the cubes above each floor square of a hexagon tiling.
/// Inverse of [`partition_to_tiling`].
pub fn tiling_to_partition(t: &Tiling) -> Result<PlanePartition> {
    let region = t.region();
    let (r, c, m) = generate::recognize_hexagon(region).ok_or(Error::NotHexagon)?;
    let heights = heights_from_tiling(t)?;
    let (ci, mi) = (c as i64, m as i64);
    let mut entries = vec![vec![u32::MAX; c as usize]; r as usize];
    for (a1, b1) in t.tiles() {
        let (up, down) = if a1.kind == CellKind::Up { (a1, b1) } else { (b1, a1) };
        if (down.x, down.y) != (up.x - 1, up.y) {
            continue; // only the column-top faces locate cubes
        }
        // Unshift to the frame of the face formulas.
        let (a, b) = (up.x as i64 - ci, up.y as i64 - mi);
        let h_true = heights
            .get((up.x, up.y))
            .expect("tile corner is a region vertex") as i64
            + mi;
        let j = (h_true - a + b + 3) / 3;
        debug_assert_eq!((h_true - a + b + 3) % 3, 0);
        let i = a + j;
        let z = j - 1 - b;
        let valid = (1..=r as i64).contains(&i)
            && (1..=c as i64).contains(&j)
            && (0..=m as i64).contains(&z);
        if !valid {
            return Err(Error::InvalidTiling(format!(
                "face at up-cell ({}, {}) maps outside the box",
                up.x, up.y
            )));
        }
        let slot = &mut entries[i as usize - 1][j as usize - 1];
        if *slot != u32::MAX {
            return Err(Error::InvalidTiling(format!(
                "column ({}, {}) has two top faces",
                i, j
            )));
        }
        *slot = z as u32;
    }
    if entries.iter().flatten().any(|&e| e == u32::MAX) {
        return Err(Error::InvalidTiling("a column has no top face".into()));
    }
    PlanePartition::new(entries, m)
}

/// Coefficients of the MacMahon generating function: `series[n]` counts the
/// boxed plane partitions of volume `n`. Computed by exact polynomial
/// division of `prod (1 - x^(c+i+j-1)) / (1 - x^(i+j-1))`.
pub fn macmahon_series(r: u32, c: u32, m: u32) -> Vec<BigUint> {
    let mut poly = vec![BigInt::one()];
    for i in 1..=r as usize {
        for j in 1..=m as usize {
            poly = poly_mul_one_minus_power(&poly, c as usize + i + j - 1);
        }
    }
    for i in 1..=r as usize {
        for j in 1..=m as usize {
            poly = poly_div_one_minus_power(&poly, i + j - 1);
        }
    }
    debug_assert_eq!(poly.len(), (r * c * m + 1) as usize);
    poly.into_iter()
        .map(|x| {
            debug_assert!(x >= BigInt::zero());
            x.magnitude().clone()
        })
        .collect()
}

fn poly_mul_one_minus_power(poly: &[BigInt], b: usize) -> Vec<BigInt> {
    let mut out = vec![BigInt::zero(); poly.len() + b];
    for (k, coeff) in poly.iter().enumerate() {
        out[k] += coeff;
        out[k + b] -= coeff;
    }
    out
}

/// Exact division by `1 - x^b` via `q[k] = n[k] + q[k-b]`.
fn poly_div_one_minus_power(poly: &[BigInt], b: usize) -> Vec<BigInt> {
    let deg = poly.len() - 1;
    assert!(deg >= b, "quotient degree would be negative");
    let mut q = vec![BigInt::zero(); deg - b + 1];
    for k in 0..q.len() {
        let carry = if k >= b { q[k - b].clone() } else { BigInt::zero() };
        q[k] = &poly[k] + carry;
    }
    for k in q.len()..=deg {
        debug_assert_eq!(poly[k], -&q[k - b], "division must be exact");
    }
    q
}

/// Brute-force count of boxed plane partitions by volume; the independent
/// check for [`macmahon_series`].
pub fn enumerate_partitions(r: u32, c: u32, m: u32) -> Vec<BigUint> {
    let mut counts = vec![BigUint::zero(); (r * c * m + 1) as usize];
    let mut rows: Vec<Vec<u32>> = Vec::new();
    fn rec(
        rows: &mut Vec<Vec<u32>>,
        r: usize,
        c: usize,
        m: u32,
        volume: u64,
        counts: &mut [BigUint],
    ) {
        if rows.len() == r {
            counts[volume as usize] += BigUint::one();
            return;
        }
        let upper: Vec<u32> = match rows.last() {
            Some(prev) => prev.clone(),
            None => vec![m; c],
        };
        let mut row = vec![0u32; c];
        fn fill(
            row: &mut Vec<u32>,
            j: usize,
            upper: &[u32],
            rows: &mut Vec<Vec<u32>>,
            r: usize,
            c: usize,
            m: u32,
            volume: u64,
            counts: &mut [BigUint],
        ) {
            if j == c {
                rows.push(row.clone());
                rec(rows, r, c, m, volume, counts);
                rows.pop();
                return;
            }
            let cap = if j == 0 { upper[0] } else { upper[j].min(row[j - 1]) };
            for v in 0..=cap {
                row[j] = v;
                fill(row, j + 1, upper, rows, r, c, m, volume + v as u64, counts);
            }
            row[j] = 0;
        }
        fill(&mut row, 0, &upper, rows, r, c, m, volume, counts);
    }
    rec(&mut rows, r as usize, c as usize, m, 0, &mut counts);
    counts
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::counting::hexagon_count;
    use crate::height::{max_tiling, min_tiling};
    use crate::tiling::{distance, enumerate_tilings};

    #[test]
    fn extremal_tilings_are_empty_and_full_boxes() {
        let region = generate::hexagon(5, 5, 5);
        let min = min_tiling(&region).unwrap();
        let p = tiling_to_partition(min.tiling().unwrap()).unwrap();
        assert!(p.entries().iter().flatten().all(|&e| e == 0));

        let region = generate::hexagon(2, 2, 2);
        let max = max_tiling(&region).unwrap();
        let p = tiling_to_partition(max.tiling().unwrap()).unwrap();
        assert!(p.entries().iter().flatten().all(|&e| e == 2));
        assert_eq!(p.volume(), 8);
    }

    #[test]
    fn bijection_roundtrip_on_all_small_hexagons() {
        for (r, c, m) in [(1, 1, 1), (2, 2, 2), (2, 1, 2), (1, 3, 2)] {
            let region = generate::hexagon(r, c, m);
            for t in enumerate_tilings(&region) {
                let p = tiling_to_partition(&t).unwrap();
                let back = partition_to_tiling(&p, r, c, m).unwrap();
                assert_eq!(back, t);
            }
        }
    }

    #[test]
    fn single_cube_in_unit_box() {
        let p = PlanePartition::new(vec![vec![1]], 1).unwrap();
        let t = partition_to_tiling(&p, 1, 1, 1).unwrap();
        let back = tiling_to_partition(&t).unwrap();
        assert_eq!(back.entry(0, 0), 1);
        let zero = PlanePartition::new(vec![vec![0]], 1).unwrap();
        let tmin = partition_to_tiling(&zero, 1, 1, 1).unwrap();
        let region = generate::hexagon(1, 1, 1);
        assert_eq!(&tmin, min_tiling(&region).unwrap().tiling().unwrap());
    }

    #[test]
    fn flip_distance_equals_volume() {
        let region = generate::hexagon(2, 2, 2);
        let min = min_tiling(&region).unwrap().tiling().unwrap().clone();
        for t in enumerate_tilings(&region) {
            let p = tiling_to_partition(&t).unwrap();
            assert_eq!(distance(&min, &t).unwrap(), p.volume());
        }
    }

    #[test]
    fn partition_validation() {
        assert!(PlanePartition::new(vec![vec![1, 2]], 3).is_err());
        assert!(PlanePartition::new(vec![vec![1], vec![2]], 3).is_err());
        assert!(PlanePartition::new(vec![vec![4]], 3).is_err());
        assert!(PlanePartition::new(vec![vec![2, 1], vec![1, 1]], 2).is_ok());
    }

    #[test]
    fn macmahon_small_cases() {
        let s = macmahon_series(1, 1, 1);
        assert_eq!(s, vec![BigUint::one(), BigUint::one()]);
        for m in 1..=4u32 {
            let s = macmahon_series(1, 1, m);
            assert_eq!(s.len(), m as usize + 1);
            assert!(s.iter().all(|c| c.is_one()));
        }
    }

    #[test]
    fn macmahon_matches_enumeration_and_count() {
        for r in 1..=3u32 {
            for c in 1..=3u32 {
                for m in 1..=3u32 {
                    let series = macmahon_series(r, c, m);
                    assert_eq!(series, enumerate_partitions(r, c, m));
                    let total: BigUint = series.iter().sum();
                    assert_eq!(total, hexagon_count(r, c, m));
                    // Symmetry under volume complement.
                    let deg = series.len() - 1;
                    for k in 0..series.len() {
                        assert_eq!(series[k], series[deg - k]);
                    }
                }
            }
        }
    }

    #[test]
    fn partition_text_roundtrip() {
        let p = PlanePartition::new(vec![vec![3, 1], vec![1, 0]], 4).unwrap();
        let q = PlanePartition::parse(&p.to_text(), 4).unwrap();
        assert_eq!(p, q);
    }

    #[test]
    fn the_66_cube_pile_roundtrips() {
        let text = "5 5 5 5 3\n5 5 5 5 3\n5 5 1 1 0\n4 1 0 0 0\n3 0 0 0 0\n";
        let p = PlanePartition::parse(text, 5).unwrap();
        assert_eq!(p.volume(), 66);
        let t = partition_to_tiling(&p, 5, 5, 5).unwrap();
        let back = tiling_to_partition(&t).unwrap();
        assert_eq!(back, p);
        assert_eq!(back.to_text(), text);
    }
}
