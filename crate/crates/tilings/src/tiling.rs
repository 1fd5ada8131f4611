//! Tilings (perfect matchings of the cell-adjacency graph), exhaustive
//! enumeration, flips and the flip graph, flows across cuts, and the
//! orientation-count invariant of lozenge tilings.

use std::collections::HashMap;
use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::height;
use crate::region::{edge, left_cell, Cell, CellKind, Color, Cut, Edge, Lattice, Region, Vertex};

/// A tiling: a set of dominoes or lozenges covering every cell exactly once.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Tiling {
    region: Region,
    /// Tile list as sorted pairs of cell indices, sorted by first index.
    tiles: Vec<(usize, usize)>,
    /// Tile index covering each cell.
    tile_of: Vec<usize>,
}

impl std::hash::Hash for Tiling {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.tiles.hash(state);
    }
}

impl Tiling {
    /// Build a tiling from cell pairs, validating that the pairs form a
    /// perfect matching of adjacent cells.
    pub fn new(region: &Region, pairs: impl IntoIterator<Item = (Cell, Cell)>) -> Result<Tiling> {
        let mut index_pairs = Vec::new();
        for (a, b) in pairs {
            let ia = region
                .cell_position(&a)
                .ok_or_else(|| Error::InvalidTiling(format!("cell {} is not in the region", a)))?;
            let ib = region
                .cell_position(&b)
                .ok_or_else(|| Error::InvalidTiling(format!("cell {} is not in the region", b)))?;
            if a.shared_side(&b).is_none() {
                return Err(Error::InvalidTiling(format!(
                    "cells {} and {} are not adjacent",
                    a, b
                )));
            }
            index_pairs.push((ia.min(ib), ia.max(ib)));
        }
        Tiling::from_index_pairs(region, index_pairs)
    }

    fn from_index_pairs(region: &Region, mut pairs: Vec<(usize, usize)>) -> Result<Tiling> {
        pairs.sort();
        let n = region.cell_count();
        if pairs.len() * 2 != n {
            return Err(Error::InvalidTiling(format!(
                "{} tiles cannot cover {} cells",
                pairs.len(),
                n
            )));
        }
        let mut tile_of = vec![usize::MAX; n];
        for (t, &(a, b)) in pairs.iter().enumerate() {
            for c in [a, b] {
                if tile_of[c] != usize::MAX {
                    return Err(Error::InvalidTiling(format!(
                        "cell {} is covered twice",
                        region.cells()[c]
                    )));
                }
                tile_of[c] = t;
            }
        }
        Ok(Tiling { region: region.clone(), tiles: pairs, tile_of })
    }

    pub fn region(&self) -> &Region {
        &self.region
    }

    pub fn tile_count(&self) -> usize {
        self.tiles.len()
    }

    /// Tiles as cell pairs in canonical order.
    pub fn tiles(&self) -> impl Iterator<Item = (Cell, Cell)> + '_ {
        self.tiles
            .iter()
            .map(move |&(a, b)| (self.region.cells()[a], self.region.cells()[b]))
    }

    /// The cell paired with `cell`.
    pub fn partner(&self, cell: &Cell) -> Result<Cell> {
        let i = self.region.cell_position(cell).ok_or(Error::CellNotInRegion)?;
        let (a, b) = self.tiles[self.tile_of[i]];
        Ok(self.region.cells()[if a == i { b } else { a }])
    }

    /// True iff some tile of this tiling consists of the two cells adjacent
    /// along `e` (the tile "crosses" the edge).
    pub fn covers_edge(&self, e: &Edge) -> bool {
        match self.region.edge_cell_indices(e) {
            Some([a, b]) => self.tile_of[*a] == self.tile_of[*b],
            _ => false,
        }
    }

    /// Serialize as one line per tile: `x1 y1 [o1] x2 y2 [o2]`, lines sorted.
    pub fn to_text(&self) -> String {
        let key = |c: &Cell| (c.x, c.y, c.kind);
        let mut rows: Vec<(Cell, Cell)> = self
            .tiles()
            .map(|(a, b)| if key(&a) <= key(&b) { (a, b) } else { (b, a) })
            .collect();
        rows.sort_by_key(|(a, b)| (key(a), key(b)));
        let mut out = String::new();
        for (a, b) in rows {
            let _ = writeln!(out, "{} {}", fmt_cell(&a), fmt_cell(&b));
        }
        out
    }

    /// Parse the tile-list format produced by [`Tiling::to_text`].
    pub fn parse(region: &Region, text: &str) -> Result<Tiling> {
        let mut pairs = Vec::new();
        for (lineno, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() {
                continue;
            }
            let toks: Vec<&str> = line.split_whitespace().collect();
            let (a, b) = match region.lattice() {
                Lattice::Square if toks.len() == 4 => {
                    (parse_cell(&toks[0..2], None, lineno)?, parse_cell(&toks[2..4], None, lineno)?)
                }
                Lattice::Triangular if toks.len() == 6 => (
                    parse_cell(&toks[0..2], Some(toks[2]), lineno)?,
                    parse_cell(&toks[3..5], Some(toks[5]), lineno)?,
                ),
                _ => {
                    return Err(Error::Parse {
                        line: lineno + 1,
                        message: "malformed tile line".into(),
                    })
                }
            };
            pairs.push((a, b));
        }
        Tiling::new(region, pairs)
    }
}

fn fmt_cell(c: &Cell) -> String {
    match c.kind {
        CellKind::Square => format!("{} {}", c.x, c.y),
        CellKind::Up => format!("{} {} U", c.x, c.y),
        CellKind::Down => format!("{} {} D", c.x, c.y),
    }
}

fn parse_cell(xy: &[&str], orient: Option<&str>, lineno: usize) -> Result<Cell> {
    let bad = |message: String| Error::Parse { line: lineno + 1, message };
    let x: i32 = xy[0].parse().map_err(|_| bad(format!("bad coordinate `{}`", xy[0])))?;
    let y: i32 = xy[1].parse().map_err(|_| bad(format!("bad coordinate `{}`", xy[1])))?;
    match orient {
        None => Ok(Cell::square(x, y)),
        Some("U") => Ok(Cell::up(x, y)),
        Some("D") => Ok(Cell::down(x, y)),
        Some(o) => Err(bad(format!("bad orientation `{}`", o))),
    }
}

struct Matcher<'a> {
    region: &'a Region,
    adj: Vec<Vec<usize>>,
    matched: Vec<Option<usize>>,
    avail: Vec<usize>,
    /// Cells whose available-partner count dropped to 1 or 0; drained by
    /// `propagate`, empty at every branch point.
    pending: Vec<usize>,
    found: Vec<Tiling>,
    count: u64,
    collect: bool,
    max: u64,
}

enum Halt {
    LimitReached,
}

impl<'a> Matcher<'a> {
    fn new(region: &'a Region, max: u64, collect: bool) -> Matcher<'a> {
        let adj: Vec<Vec<usize>> = region
            .cells()
            .iter()
            .map(|c| {
                c.neighbors()
                    .into_iter()
                    .filter_map(|n| region.cell_position(&n))
                    .collect()
            })
            .collect();
        let avail: Vec<usize> = adj.iter().map(|v| v.len()).collect();
        let pending = (0..avail.len()).filter(|&i| avail[i] <= 1).collect();
        Matcher {
            region,
            matched: vec![None; region.cell_count()],
            adj,
            avail,
            pending,
            found: Vec::new(),
            count: 0,
            collect,
            max,
        }
    }

    fn bind(&mut self, i: usize, j: usize) {
        self.matched[i] = Some(j);
        self.matched[j] = Some(i);
        for c in [i, j] {
            for k in 0..self.adj[c].len() {
                let n = self.adj[c][k];
                if self.matched[n].is_none() {
                    self.avail[n] -= 1;
                    if self.avail[n] <= 1 {
                        self.pending.push(n);
                    }
                }
            }
        }
    }

    fn unbind(&mut self, i: usize, j: usize) {
        for c in [i, j] {
            for k in 0..self.adj[c].len() {
                let n = self.adj[c][k];
                if self.matched[n].is_none() {
                    self.avail[n] += 1;
                }
            }
        }
        self.matched[i] = None;
        self.matched[j] = None;
    }

    /// Match every cell whose only remaining partner is forced; reports a
    /// dead end when some cell has no partner left.
    fn propagate(&mut self, trail: &mut Vec<(usize, usize)>) -> bool {
        while let Some(c) = self.pending.pop() {
            if self.matched[c].is_some() {
                continue;
            }
            match self.avail[c] {
                0 => {
                    self.pending.clear();
                    return false;
                }
                1 => {
                    let j = self.adj[c]
                        .iter()
                        .copied()
                        .find(|&n| self.matched[n].is_none())
                        .expect("avail said one partner remains");
                    self.bind(c, j);
                    trail.push((c, j));
                }
                _ => {} // stale hint
            }
        }
        true
    }

    fn search(&mut self, cursor: usize) -> std::result::Result<(), Halt> {
        let mut trail = Vec::new();
        let viable = self.propagate(&mut trail);
        let mut result = Ok(());
        if viable {
            let mut cur = cursor;
            while cur < self.matched.len() && self.matched[cur].is_some() {
                cur += 1;
            }
            if cur == self.matched.len() {
                self.count += 1;
                if self.collect {
                    let pairs: Vec<(usize, usize)> = (0..self.matched.len())
                        .filter_map(|i| self.matched[i].map(|j| (i, j)))
                        .filter(|&(i, j)| i < j)
                        .collect();
                    let t = Tiling::from_index_pairs(self.region, pairs)
                        .expect("matcher produces perfect matchings");
                    self.found.push(t);
                }
                if self.count >= self.max {
                    result = Err(Halt::LimitReached);
                }
            } else {
                for k in 0..self.adj[cur].len() {
                    let j = self.adj[cur][k];
                    if self.matched[j].is_some() {
                        continue;
                    }
                    self.bind(cur, j);
                    let r = self.search(cur + 1);
                    self.unbind(cur, j);
                    if r.is_err() {
                        result = r;
                        break;
                    }
                }
            }
        }
        for &(i, j) in trail.iter().rev() {
            self.unbind(i, j);
        }
        result
    }
}

/// All tilings of the region, in deterministic backtracking order. The empty
/// list means the region is untileable.
pub fn enumerate_tilings(region: &Region) -> Vec<Tiling> {
    let mut m = Matcher::new(region, u64::MAX, true);
    let _ = m.search(0);
    m.found
}

/// Like [`enumerate_tilings`], but fails once more than `limit` tilings exist.
pub fn enumerate_tilings_capped(region: &Region, limit: usize) -> Result<Vec<Tiling>> {
    let mut m = Matcher::new(region, (limit as u64).saturating_add(1), true);
    let _ = m.search(0);
    if m.found.len() > limit {
        return Err(Error::EnumerationLimit(limit));
    }
    Ok(m.found)
}

/// Number of tilings by exhaustive search, without materializing them.
/// Fails once more than `limit` tilings exist.
pub fn enumeration_count(region: &Region, limit: usize) -> Result<u64> {
    let mut m = Matcher::new(region, (limit as u64).saturating_add(1), false);
    let _ = m.search(0);
    if m.count > limit as u64 {
        return Err(Error::EnumerationLimit(limit));
    }
    Ok(m.count)
}

/// Some tiling of the region, if one exists.
pub fn first_tiling(region: &Region) -> Option<Tiling> {
    let mut m = Matcher::new(region, 1, true);
    let _ = m.search(0);
    m.found.into_iter().next()
}

/// A flip location: the lowest-left cell coordinate of a 2x2 square of
/// dominoes, or the center vertex of a unit hexagon of lozenges.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Flip {
    pub location: Vertex,
}

/// The six triangles around a hexagon center, in cyclic adjacency order.
fn hexagon_ring(center: Vertex) -> [Cell; 6] {
    let (x, y) = center;
    [
        Cell::up(x, y),
        Cell::down(x - 1, y),
        Cell::up(x - 1, y),
        Cell::down(x - 1, y - 1),
        Cell::up(x, y - 1),
        Cell::down(x, y - 1),
    ]
}

fn domino_flip_config(t: &Tiling, loc: Vertex) -> Option<bool> {
    let (x, y) = loc;
    let quad = [
        Cell::square(x, y),
        Cell::square(x + 1, y),
        Cell::square(x, y + 1),
        Cell::square(x + 1, y + 1),
    ];
    if !quad.iter().all(|c| t.region().contains(c)) {
        return None;
    }
    let horizontal = t.partner(&quad[0]).ok()? == quad[1] && t.partner(&quad[2]).ok()? == quad[3];
    let vertical = t.partner(&quad[0]).ok()? == quad[2] && t.partner(&quad[1]).ok()? == quad[3];
    if horizontal {
        Some(true)
    } else if vertical {
        Some(false)
    } else {
        None
    }
}

fn lozenge_flip_config(t: &Tiling, center: Vertex) -> Option<bool> {
    let ring = hexagon_ring(center);
    if !ring.iter().all(|c| t.region().contains(c)) {
        return None;
    }
    let paired = |i: usize, j: usize| t.partner(&ring[i]).ok() == Some(ring[j]);
    if paired(0, 1) && paired(2, 3) && paired(4, 5) {
        Some(true)
    } else if paired(1, 2) && paired(3, 4) && paired(5, 0) {
        Some(false)
    } else {
        None
    }
}

/// All flips available in a tiling, sorted by location.
pub fn available_flips(t: &Tiling) -> Vec<Flip> {
    let region = t.region();
    let mut locations: Vec<Vertex> = match region.lattice() {
        Lattice::Square => region
            .cells()
            .iter()
            .map(|c| (c.x, c.y))
            .filter(|&loc| domino_flip_config(t, loc).is_some())
            .collect(),
        Lattice::Triangular => region
            .vertices()
            .iter()
            .copied()
            .filter(|&v| lozenge_flip_config(t, v).is_some())
            .collect(),
    };
    locations.sort();
    locations.dedup();
    locations.into_iter().map(|location| Flip { location }).collect()
}

/// Apply a flip, rotating the two dominoes or three lozenges in place.
pub fn apply_flip(t: &Tiling, f: &Flip) -> Result<Tiling> {
    let region = t.region();
    match region.lattice() {
        Lattice::Square => {
            let (x, y) = f.location;
            let cfg = domino_flip_config(t, f.location).ok_or(Error::FlipNotAvailable)?;
            let quad = [
                Cell::square(x, y),
                Cell::square(x + 1, y),
                Cell::square(x, y + 1),
                Cell::square(x + 1, y + 1),
            ];
            let gone: Vec<usize> = quad.iter().map(|c| region.cell_position(c).unwrap()).collect();
            let mut pairs: Vec<(Cell, Cell)> = t
                .tiles
                .iter()
                .filter(|&&(a, b)| !gone.contains(&a) && !gone.contains(&b))
                .map(|&(a, b)| (region.cells()[a], region.cells()[b]))
                .collect();
            if cfg {
                pairs.push((quad[0], quad[2]));
                pairs.push((quad[1], quad[3]));
            } else {
                pairs.push((quad[0], quad[1]));
                pairs.push((quad[2], quad[3]));
            }
            Tiling::new(region, pairs)
        }
        Lattice::Triangular => {
            let cfg = lozenge_flip_config(t, f.location).ok_or(Error::FlipNotAvailable)?;
            let ring = hexagon_ring(f.location);
            let gone: Vec<usize> = ring.iter().map(|c| region.cell_position(c).unwrap()).collect();
            let mut pairs: Vec<(Cell, Cell)> = t
                .tiles
                .iter()
                .filter(|&&(a, b)| !gone.contains(&a) && !gone.contains(&b))
                .map(|&(a, b)| (region.cells()[a], region.cells()[b]))
                .collect();
            let matches: [(usize, usize); 3] = if cfg {
                [(1, 2), (3, 4), (5, 0)]
            } else {
                [(0, 1), (2, 3), (4, 5)]
            };
            for (i, j) in matches {
                pairs.push((ring[i], ring[j]));
            }
            Tiling::new(region, pairs)
        }
    }
}

/// Flip distance between two tilings of the same simply connected region:
/// the sum of absolute height differences divided by 3 (lozenges) or
/// 4 (dominoes). Equals the BFS distance in the flip graph.
pub fn distance(t1: &Tiling, t2: &Tiling) -> Result<u64> {
    if t1.region() != t2.region() {
        return Err(Error::DifferentRegions);
    }
    if !t1.region().is_simply_connected() {
        return Err(Error::NotSimplyConnected);
    }
    let h1 = height::heights_from_tiling(t1)?;
    let h2 = height::heights_from_tiling(t2)?;
    let total: i64 = h1
        .values()
        .iter()
        .zip(h2.values())
        .map(|(a, b)| (*a as i64 - *b as i64).abs())
        .sum();
    let x = match t1.region().lattice() {
        Lattice::Triangular => 3,
        Lattice::Square => 4,
    };
    debug_assert_eq!(total % x, 0);
    Ok((total / x) as u64)
}

/// Signed number of tiles crossing a cut: each crossing counts +1 when the
/// cell on the left of the oriented cut edge is black, -1 when white.
pub fn flow(t: &Tiling, cut: &Cut) -> Result<i64> {
    if t.region() != cut.region() {
        return Err(Error::DifferentRegions);
    }
    let lattice = t.region().lattice();
    let mut total = 0i64;
    for (u, v) in cut.directed_edges() {
        let e = edge(u, v);
        if !t.covers_edge(&e) {
            continue;
        }
        let dir = (v.0 - u.0, v.1 - u.1);
        let left = left_cell(lattice, u, dir);
        total += match left.color() {
            Color::Black => 1,
            Color::White => -1,
        };
    }
    Ok(total)
}

/// Flow values across the region's cut basis, one entry per hole.
pub fn flow_signature(t: &Tiling) -> Vec<i64> {
    flow_signature_with(t, &t.region().cuts_basis())
}

/// Flow signature against a precomputed cut basis.
pub fn flow_signature_with(t: &Tiling, cuts: &[Cut]) -> Vec<i64> {
    cuts.iter()
        .map(|c| flow(t, c).expect("basis cuts belong to the tiling's region"))
        .collect()
}

/// Numbers of lozenges in each of the three orientations `(n_xy, n_xz, n_yz)`.
///
/// In the pile-of-cubes picture these are the tile counts of faces normal to
/// the z, y and x axes; they do not depend on the tiling.
pub fn orientation_counts(t: &Tiling) -> Result<(usize, usize, usize)> {
    if t.region().lattice() != Lattice::Triangular {
        return Err(Error::WrongLattice("triangulated"));
    }
    let (mut xy, mut xz, mut yz) = (0, 0, 0);
    for (a, b) in t.tiles() {
        let (up, down) = if a.kind == CellKind::Up { (a, b) } else { (b, a) };
        debug_assert_eq!(down.kind, CellKind::Down);
        if (down.x, down.y) == (up.x, up.y) {
            xz += 1;
        } else if (down.x, down.y) == (up.x - 1, up.y) {
            xy += 1;
        } else {
            debug_assert_eq!((down.x, down.y), (up.x, up.y - 1));
            yz += 1;
        }
    }
    Ok((xy, xz, yz))
}

/// The flip graph: vertices are the tilings of a region in enumeration
/// order, edges are single flips.
pub struct FlipGraph {
    tilings: Vec<Tiling>,
    adjacency: Vec<Vec<usize>>,
    edges: Vec<(usize, usize)>,
}

impl FlipGraph {
    /// Enumerate the region's tilings (failing beyond `limit`) and connect
    /// those that differ by one flip.
    pub fn build(region: &Region, limit: usize) -> Result<FlipGraph> {
        let tilings = enumerate_tilings_capped(region, limit)?;
        let index: HashMap<&Tiling, usize> =
            tilings.iter().enumerate().map(|(i, t)| (t, i)).collect();
        let mut edges = Vec::new();
        for (i, t) in tilings.iter().enumerate() {
            for f in available_flips(t) {
                let o = apply_flip(t, &f).expect("available flip applies");
                let j = *index.get(&o).expect("flip result is a tiling of the region");
                if i < j {
                    edges.push((i, j));
                }
            }
        }
        edges.sort();
        edges.dedup();
        let mut adjacency = vec![Vec::new(); tilings.len()];
        for &(i, j) in &edges {
            adjacency[i].push(j);
            adjacency[j].push(i);
        }
        Ok(FlipGraph { tilings, adjacency, edges })
    }

    pub fn tilings(&self) -> &[Tiling] {
        &self.tilings
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// Edge list as `i j` lines over tiling indices in enumeration order.
    pub fn edge_list_text(&self) -> String {
        let mut out = String::new();
        for &(i, j) in &self.edges {
            let _ = writeln!(out, "{} {}", i, j);
        }
        out
    }

    /// Connected components as sorted index lists, ordered by first tiling.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let n = self.tilings.len();
        let mut comp = vec![usize::MAX; n];
        let mut components = Vec::new();
        for start in 0..n {
            if comp[start] != usize::MAX {
                continue;
            }
            let id = components.len();
            let mut stack = vec![start];
            let mut members = Vec::new();
            comp[start] = id;
            while let Some(v) = stack.pop() {
                members.push(v);
                for &w in &self.adjacency[v] {
                    if comp[w] == usize::MAX {
                        comp[w] = id;
                        stack.push(w);
                    }
                }
            }
            members.sort();
            components.push(members);
        }
        components
    }

    /// BFS distance between two tilings, or `None` when they lie in
    /// different components.
    pub fn bfs_distance(&self, from: usize, to: usize) -> Option<u64> {
        if from == to {
            return Some(0);
        }
        let mut dist = vec![u64::MAX; self.tilings.len()];
        let mut queue = std::collections::VecDeque::from([from]);
        dist[from] = 0;
        while let Some(v) = queue.pop_front() {
            for &w in &self.adjacency[v] {
                if dist[w] == u64::MAX {
                    dist[w] = dist[v] + 1;
                    if w == to {
                        return Some(dist[w]);
                    }
                    queue.push_back(w);
                }
            }
        }
        None
    }

    pub fn position(&self, t: &Tiling) -> Option<usize> {
        self.tilings.iter().position(|x| x == t)
    }
}
