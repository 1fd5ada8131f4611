//! Regions on the square and triangular lattices.
//!
//! A region is a finite, edge-connected set of unit cells. Square cells live
//! on the quadriculated plane; up/down triangles live on the triangulated
//! plane, where lattice point `(x, y)` embeds at `x*(1,0) + y*(1/2, sqrt(3)/2)`.
//! Construction derives and caches the combinatorial structure used by every
//! other module: vertices, edges, boundary cycles, holes and the two-coloring.

use std::collections::{HashMap, HashSet, VecDeque};
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};

/// Lattice a region lives on.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Lattice {
    Square,
    Triangular,
}

/// Cell shape: a unit square, an upward triangle or a downward triangle.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CellKind {
    Square,
    Up,
    Down,
}

/// The proper 2-coloring of cells: square `(x, y)` is black iff `x + y` is
/// even; up-triangles are black, down-triangles white.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Color {
    Black,
    White,
}

/// Lattice vertex, ordered by `(x, y)`.
pub type Vertex = (i32, i32);

/// Undirected lattice edge stored with endpoints in sorted order.
pub type Edge = (Vertex, Vertex);

pub fn edge(a: Vertex, b: Vertex) -> Edge {
    if a <= b {
        (a, b)
    } else {
        (b, a)
    }
}

/// A single cell of a region.
///
/// A square cell `(x, y)` occupies `[x, x+1] x [y, y+1]`. An up-triangle
/// `(x, y)` has vertices `(x,y)`, `(x+1,y)`, `(x,y+1)`; the down-triangle
/// `(x, y)` has vertices `(x+1,y)`, `(x,y+1)`, `(x+1,y+1)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Cell {
    pub x: i32,
    pub y: i32,
    pub kind: CellKind,
}

impl Cell {
    pub fn square(x: i32, y: i32) -> Cell {
        Cell { x, y, kind: CellKind::Square }
    }

    pub fn up(x: i32, y: i32) -> Cell {
        Cell { x, y, kind: CellKind::Up }
    }

    pub fn down(x: i32, y: i32) -> Cell {
        Cell { x, y, kind: CellKind::Down }
    }

    pub fn lattice(&self) -> Lattice {
        match self.kind {
            CellKind::Square => Lattice::Square,
            _ => Lattice::Triangular,
        }
    }

    pub fn color(&self) -> Color {
        match self.kind {
            CellKind::Square => {
                if (self.x + self.y).rem_euclid(2) == 0 {
                    Color::Black
                } else {
                    Color::White
                }
            }
            CellKind::Up => Color::Black,
            CellKind::Down => Color::White,
        }
    }

    /// Corner vertices in counterclockwise order.
    pub fn corners(&self) -> Vec<Vertex> {
        let (x, y) = (self.x, self.y);
        match self.kind {
            CellKind::Square => vec![(x, y), (x + 1, y), (x + 1, y + 1), (x, y + 1)],
            CellKind::Up => vec![(x, y), (x + 1, y), (x, y + 1)],
            CellKind::Down => vec![(x + 1, y), (x + 1, y + 1), (x, y + 1)],
        }
    }

    /// Sides as undirected edges.
    pub fn sides(&self) -> Vec<Edge> {
        let cs = self.corners();
        (0..cs.len())
            .map(|i| edge(cs[i], cs[(i + 1) % cs.len()]))
            .collect()
    }

    /// Lattice neighbors sharing a side, in a fixed order.
    ///
    /// Squares: east, north, west, south. Up-triangles: the down-cells across
    /// the NE, W and S sides. Down-triangles: the up-cells across the N, SW
    /// and SE sides.
    pub fn neighbors(&self) -> Vec<Cell> {
        let (x, y) = (self.x, self.y);
        match self.kind {
            CellKind::Square => vec![
                Cell::square(x + 1, y),
                Cell::square(x, y + 1),
                Cell::square(x - 1, y),
                Cell::square(x, y - 1),
            ],
            CellKind::Up => vec![Cell::down(x, y), Cell::down(x - 1, y), Cell::down(x, y - 1)],
            CellKind::Down => vec![Cell::up(x, y + 1), Cell::up(x, y), Cell::up(x + 1, y)],
        }
    }

    /// The side shared with an adjacent cell, if any.
    pub fn shared_side(&self, other: &Cell) -> Option<Edge> {
        if !self.neighbors().contains(other) {
            return None;
        }
        let mine: HashSet<Edge> = self.sides().into_iter().collect();
        other.sides().into_iter().find(|e| mine.contains(e))
    }

    fn canonical_key(&self) -> (i32, i32, CellKind) {
        (self.y, self.x, self.kind)
    }
}

impl PartialOrd for Cell {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Cell {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.canonical_key().cmp(&other.canonical_key())
    }
}

impl fmt::Display for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            CellKind::Square => write!(f, "{} {}", self.x, self.y),
            CellKind::Up => write!(f, "{} {} U", self.x, self.y),
            CellKind::Down => write!(f, "{} {} D", self.x, self.y),
        }
    }
}

/// Directions around a vertex in counterclockwise order.
pub fn directions(lattice: Lattice) -> &'static [(i32, i32)] {
    match lattice {
        Lattice::Square => &[(1, 0), (0, 1), (-1, 0), (0, -1)],
        Lattice::Triangular => &[(1, 0), (0, 1), (-1, 1), (-1, 0), (0, -1), (1, -1)],
    }
}

/// Cell to the left of the directed lattice edge `from -> from+dir`, in the
/// full lattice (the cell need not belong to any particular region).
pub fn left_cell(lattice: Lattice, from: Vertex, dir: (i32, i32)) -> Cell {
    let (x, y) = from;
    match lattice {
        Lattice::Square => match dir {
            (1, 0) => Cell::square(x, y),
            (0, 1) => Cell::square(x - 1, y),
            (-1, 0) => Cell::square(x - 1, y - 1),
            (0, -1) => Cell::square(x, y - 1),
            _ => panic!("not a square lattice direction: {:?}", dir),
        },
        Lattice::Triangular => match dir {
            (1, 0) => Cell::up(x, y),
            (0, 1) => Cell::down(x - 1, y),
            (-1, 1) => Cell::up(x - 1, y),
            (-1, 0) => Cell::down(x - 1, y - 1),
            (0, -1) => Cell::up(x, y - 1),
            (1, -1) => Cell::down(x, y - 1),
            _ => panic!("not a triangular lattice direction: {:?}", dir),
        },
    }
}

/// Cell to the right of the directed lattice edge `from -> from+dir`.
pub fn right_cell(lattice: Lattice, from: Vertex, dir: (i32, i32)) -> Cell {
    let to = (from.0 + dir.0, from.1 + dir.1);
    left_cell(lattice, to, (-dir.0, -dir.1))
}

#[derive(Debug)]
struct RegionData {
    lattice: Lattice,
    cells: Vec<Cell>,
    cell_index: HashMap<Cell, usize>,
    vertices: Vec<Vertex>,
    vertex_index: HashMap<Vertex, usize>,
    /// Region cells incident to each lattice edge of the region (1 or 2).
    edge_cells: HashMap<Edge, Vec<usize>>,
    edges: Vec<Edge>,
    /// First cycle is the outer boundary (counterclockwise, region on the
    /// left); the rest are hole cycles (clockwise, region on the left).
    boundary: Vec<Vec<Vertex>>,
    boundary_vertex: HashSet<Vertex>,
    black: Vec<usize>,
    white: Vec<usize>,
}

/// An immutable region: a finite edge-connected cell set with cached
/// combinatorial structure. Cheap to clone and safe to share across threads.
#[derive(Clone)]
pub struct Region {
    data: Arc<RegionData>,
}

impl fmt::Debug for Region {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "Region({:?}, {} cells, {} holes)",
            self.lattice(),
            self.cell_count(),
            self.hole_count()
        )
    }
}

impl PartialEq for Region {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.data, &other.data)
            || (self.lattice() == other.lattice() && self.cells() == other.cells())
    }
}

impl Eq for Region {}

impl Region {
    pub fn new(lattice: Lattice, cells: impl IntoIterator<Item = Cell>) -> Result<Region> {
        let mut cells: Vec<Cell> = cells.into_iter().collect();
        cells.sort();
        cells.dedup();
        if cells.is_empty() {
            return Err(Error::EmptyRegion);
        }
        for c in &cells {
            if c.lattice() != lattice {
                return Err(Error::InvalidArguments(format!(
                    "cell {} does not belong to the {:?} lattice",
                    c, lattice
                )));
            }
        }
        let cell_index: HashMap<Cell, usize> =
            cells.iter().enumerate().map(|(i, c)| (*c, i)).collect();

        // Edge-connectivity over shared sides.
        let mut seen = vec![false; cells.len()];
        let mut queue = VecDeque::from([0usize]);
        seen[0] = true;
        let mut reached = 1usize;
        while let Some(i) = queue.pop_front() {
            for n in cells[i].neighbors() {
                if let Some(&j) = cell_index.get(&n) {
                    if !seen[j] {
                        seen[j] = true;
                        reached += 1;
                        queue.push_back(j);
                    }
                }
            }
        }
        if reached != cells.len() {
            return Err(Error::DisconnectedRegion);
        }

        let mut edge_cells: HashMap<Edge, Vec<usize>> = HashMap::new();
        let mut vertex_set: HashSet<Vertex> = HashSet::new();
        for (i, c) in cells.iter().enumerate() {
            for v in c.corners() {
                vertex_set.insert(v);
            }
            for e in c.sides() {
                edge_cells.entry(e).or_default().push(i);
            }
        }
        let mut vertices: Vec<Vertex> = vertex_set.into_iter().collect();
        vertices.sort();
        let vertex_index: HashMap<Vertex, usize> =
            vertices.iter().enumerate().map(|(i, v)| (*v, i)).collect();
        let mut edges: Vec<Edge> = edge_cells.keys().copied().collect();
        edges.sort();

        let boundary = boundary_cycles_by_face_walk(lattice, &cells, &edge_cells)?;
        let mut boundary_vertex = HashSet::new();
        for cyc in &boundary {
            for &v in cyc {
                boundary_vertex.insert(v);
            }
        }

        let mut black = Vec::new();
        let mut white = Vec::new();
        for (i, c) in cells.iter().enumerate() {
            match c.color() {
                Color::Black => black.push(i),
                Color::White => white.push(i),
            }
        }

        Ok(Region {
            data: Arc::new(RegionData {
                lattice,
                cells,
                cell_index,
                vertices,
                vertex_index,
                edge_cells,
                edges,
                boundary,
                boundary_vertex,
                black,
                white,
            }),
        })
    }

    /// Parse the text region format.
    ///
    /// Line 1 is `square` or `triangle`; the remaining lines are rows from
    /// top (highest y) to bottom. In square files `#` marks a cell and `.`
    /// its absence. In triangle files position `2k` of a row is the up-cell
    /// `(k, y)` and position `2k+1` the down-cell `(k, y)`. Trailing dots may
    /// be omitted; an empty row is all dots.
    pub fn parse(text: &str) -> Result<Region> {
        let mut lines = text.lines().enumerate();
        let (_, header) = lines.next().ok_or(Error::EmptyRegion)?;
        let lattice = match header.trim() {
            "square" => Lattice::Square,
            "triangle" => Lattice::Triangular,
            other => {
                return Err(Error::Parse {
                    line: 1,
                    message: format!("expected `square` or `triangle`, found `{}`", other),
                })
            }
        };
        let rows: Vec<(usize, &str)> = lines.map(|(i, l)| (i + 1, l.trim_end_matches('\r'))).collect();
        let height = rows.len();
        let mut cells = Vec::new();
        for (row_idx, (line_no, row)) in rows.iter().enumerate() {
            let y = (height - 1 - row_idx) as i32;
            for (pos, ch) in row.chars().enumerate() {
                match ch {
                    '.' => {}
                    '#' => match lattice {
                        Lattice::Square => cells.push(Cell::square(pos as i32, y)),
                        Lattice::Triangular => {
                            let x = (pos / 2) as i32;
                            if pos % 2 == 0 {
                                cells.push(Cell::up(x, y));
                            } else {
                                cells.push(Cell::down(x, y));
                            }
                        }
                    },
                    other => {
                        return Err(Error::Parse {
                            line: *line_no,
                            message: format!("unexpected character `{}`", other),
                        })
                    }
                }
            }
        }
        if cells.is_empty() {
            return Err(Error::EmptyRegion);
        }
        Region::new(lattice, cells)
    }

    /// Write the region in the text format parsed by [`Region::parse`].
    ///
    /// Rows run from the highest y down to y = 0 so that parsing the output
    /// reproduces the cell set exactly. Regions with negative coordinates
    /// cannot be expressed in the format.
    pub fn to_text(&self) -> Result<String> {
        let cells = self.cells();
        let min_x = cells.iter().map(|c| c.x).min().unwrap();
        let min_y = cells.iter().map(|c| c.y).min().unwrap();
        if min_x < 0 || min_y < 0 {
            return Err(Error::NegativeCoordinates);
        }
        let max_y = cells.iter().map(|c| c.y).max().unwrap();
        let mut out = String::new();
        out.push_str(match self.lattice() {
            Lattice::Square => "square",
            Lattice::Triangular => "triangle",
        });
        out.push('\n');
        for y in (0..=max_y).rev() {
            let mut row = String::new();
            for c in cells.iter().filter(|c| c.y == y) {
                let pos = match c.kind {
                    CellKind::Square => c.x as usize,
                    CellKind::Up => 2 * c.x as usize,
                    CellKind::Down => 2 * c.x as usize + 1,
                };
                if row.len() <= pos {
                    row.extend(std::iter::repeat('.').take(pos + 1 - row.len()));
                }
                row.replace_range(pos..pos + 1, "#");
            }
            out.push_str(row.trim_end_matches('.'));
            out.push('\n');
        }
        Ok(out)
    }

    pub fn lattice(&self) -> Lattice {
        self.data.lattice
    }

    /// Cells in canonical order (sorted by `(y, x, kind)`).
    pub fn cells(&self) -> &[Cell] {
        &self.data.cells
    }

    pub fn cell_count(&self) -> usize {
        self.data.cells.len()
    }

    pub fn contains(&self, cell: &Cell) -> bool {
        self.data.cell_index.contains_key(cell)
    }

    pub fn cell_position(&self, cell: &Cell) -> Option<usize> {
        self.data.cell_index.get(cell).copied()
    }

    /// Color of a cell of this region.
    pub fn color(&self, cell: &Cell) -> Result<Color> {
        if !self.contains(cell) {
            return Err(Error::CellNotInRegion);
        }
        Ok(cell.color())
    }

    pub fn black_count(&self) -> usize {
        self.data.black.len()
    }

    pub fn white_count(&self) -> usize {
        self.data.white.len()
    }

    /// Indices (into `cells`) of the black cells, in canonical order.
    pub fn black_cells(&self) -> &[usize] {
        &self.data.black
    }

    pub fn white_cells(&self) -> &[usize] {
        &self.data.white
    }

    pub fn is_balanced(&self) -> bool {
        self.black_count() == self.white_count()
    }

    /// Vertices in lexicographic `(x, y)` order.
    pub fn vertices(&self) -> &[Vertex] {
        &self.data.vertices
    }

    pub fn vertex_position(&self, v: Vertex) -> Option<usize> {
        self.data.vertex_index.get(&v).copied()
    }

    /// Undirected lattice edges of the region, sorted.
    pub fn edges(&self) -> &[Edge] {
        &self.data.edges
    }

    pub fn has_edge(&self, e: &Edge) -> bool {
        self.data.edge_cells.contains_key(e)
    }

    /// Indices of the region cells incident to an edge (1 = boundary edge,
    /// 2 = interior edge).
    pub fn edge_cell_indices(&self, e: &Edge) -> Option<&[usize]> {
        self.data.edge_cells.get(e).map(|v| v.as_slice())
    }

    pub fn is_boundary_edge(&self, e: &Edge) -> bool {
        self.data.edge_cells.get(e).map(|v| v.len()) == Some(1)
    }

    pub fn is_interior_edge(&self, e: &Edge) -> bool {
        self.data.edge_cells.get(e).map(|v| v.len()) == Some(2)
    }

    /// Oriented boundary cycles: the outer cycle first (positively oriented,
    /// region on the left), then one negatively oriented cycle per hole.
    pub fn boundary_cycles(&self) -> &[Vec<Vertex>] {
        &self.data.boundary
    }

    pub fn hole_count(&self) -> usize {
        self.data.boundary.len() - 1
    }

    pub fn is_simply_connected(&self) -> bool {
        self.hole_count() == 0
    }

    pub fn is_boundary_vertex(&self, v: Vertex) -> bool {
        self.data.boundary_vertex.contains(&v)
    }

    pub fn is_interior_vertex(&self, v: Vertex) -> bool {
        self.data.vertex_index.contains_key(&v) && !self.is_boundary_vertex(v)
    }

    /// Base vertex used to normalize height functions: the lexicographically
    /// smallest `(y, x)` vertex of the outer boundary.
    pub fn base_vertex(&self) -> Vertex {
        *self.data.boundary[0]
            .iter()
            .min_by_key(|(x, y)| (*y, *x))
            .unwrap()
    }

    /// Neighbor vertices reachable along region edges, in ccw direction order.
    pub fn vertex_neighbors(&self, v: Vertex) -> Vec<Vertex> {
        directions(self.lattice())
            .iter()
            .map(|d| (v.0 + d.0, v.1 + d.1))
            .filter(|w| self.has_edge(&edge(v, *w)))
            .collect()
    }

    /// One cut per hole, each an oriented simple lattice path from that
    /// hole's boundary to the outer boundary.
    ///
    /// Construction walks from a canonical vertex of the hole cycle in the +x
    /// direction, perturbing around obstructions with a deterministic
    /// leftmost-first rule. Simply connected regions get an empty list.
    pub fn cuts_basis(&self) -> Vec<Cut> {
        let mut cuts = Vec::new();
        for hole_idx in 1..self.data.boundary.len() {
            cuts.push(self.cut_for_hole(hole_idx));
        }
        cuts
    }

    fn cut_for_hole(&self, hole_idx: usize) -> Cut {
        let hole: &[Vertex] = &self.data.boundary[hole_idx];
        let outer: HashSet<Vertex> = self.data.boundary[0].iter().copied().collect();
        let hole_set: HashSet<Vertex> = hole.iter().copied().collect();
        // Start candidates: rightmost hole vertices first, then the rest.
        let mut starts: Vec<Vertex> = hole.to_vec();
        starts.sort_by_key(|(x, y)| (-x, *y));
        // Intermediate vertices must avoid every boundary; allow a relaxed
        // second pass through non-hole boundary vertices if the strict walk
        // has no route (tightly packed holes leave no interior vertices).
        for strict in [true, false] {
            for &s in &starts {
                if let Some(path) = self.walk_cut(s, &outer, &hole_set, strict) {
                    return Cut { region: self.clone(), vertices: path };
                }
            }
        }
        unreachable!("a connected region always admits a cut from each hole");
    }

    fn walk_cut(
        &self,
        start: Vertex,
        outer: &HashSet<Vertex>,
        own_hole: &HashSet<Vertex>,
        strict: bool,
    ) -> Option<Vec<Vertex>> {
        let dirs = directions(self.lattice());
        let ndir = dirs.len();
        let dir_index = |d: (i32, i32)| dirs.iter().position(|&x| x == d).unwrap();
        // Preference from current direction: straight, then alternating
        // leftward/rightward turns of increasing sharpness.
        let preference = |cur: usize| -> Vec<usize> {
            let mut order = vec![cur];
            for step in 1..=(ndir / 2) {
                order.push((cur + step) % ndir);
                if step != ndir - step {
                    order.push((cur + ndir - step) % ndir);
                }
            }
            order
        };
        let mut path = vec![start];
        let mut on_path: HashSet<Vertex> = HashSet::from([start]);
        fn dfs(
            region: &Region,
            dirs: &[(i32, i32)],
            preference: &dyn Fn(usize) -> Vec<usize>,
            outer: &HashSet<Vertex>,
            own_hole: &HashSet<Vertex>,
            strict: bool,
            path: &mut Vec<Vertex>,
            on_path: &mut HashSet<Vertex>,
            cur_dir: usize,
        ) -> bool {
            let v = *path.last().unwrap();
            for di in preference(cur_dir) {
                let d = dirs[di];
                let w = (v.0 + d.0, v.1 + d.1);
                if !region.has_edge(&edge(v, w)) || on_path.contains(&w) {
                    continue;
                }
                if outer.contains(&w) {
                    path.push(w);
                    return true;
                }
                let passable = if strict {
                    region.is_interior_vertex(w)
                } else {
                    !own_hole.contains(&w) && !outer.contains(&w)
                };
                if !passable {
                    continue;
                }
                path.push(w);
                on_path.insert(w);
                if dfs(region, dirs, preference, outer, own_hole, strict, path, on_path, di) {
                    return true;
                }
                path.pop();
                on_path.remove(&w);
            }
            false
        }
        let plus_x = dir_index((1, 0));
        if dfs(
            self,
            dirs,
            &preference,
            outer,
            own_hole,
            strict,
            &mut path,
            &mut on_path,
            plus_x,
        ) {
            Some(path)
        } else {
            None
        }
    }
}

/// An oriented simple path of lattice edges joining two distinct boundary
/// components of a region.
#[derive(Clone, Debug)]
pub struct Cut {
    region: Region,
    vertices: Vec<Vertex>,
}

impl Cut {
    /// Build a cut from its vertex path, validating the invariants.
    pub fn new(region: &Region, vertices: Vec<Vertex>) -> Result<Cut> {
        if vertices.len() < 2 {
            return Err(Error::InvalidCut("a cut needs at least one edge".into()));
        }
        let mut seen = HashSet::new();
        for &v in &vertices {
            if !seen.insert(v) {
                return Err(Error::InvalidCut("path repeats a vertex".into()));
            }
        }
        for w in vertices.windows(2) {
            if !region.has_edge(&edge(w[0], w[1])) {
                return Err(Error::InvalidCut(format!(
                    "edge {:?}-{:?} is not a region edge",
                    w[0], w[1]
                )));
            }
        }
        let comp = |v: Vertex| {
            region
                .boundary_cycles()
                .iter()
                .position(|cyc| cyc.contains(&v))
        };
        let (a, b) = (comp(vertices[0]), comp(*vertices.last().unwrap()));
        match (a, b) {
            (Some(i), Some(j)) if i != j => {}
            _ => {
                return Err(Error::InvalidCut(
                    "endpoints must lie on two distinct boundary components".into(),
                ))
            }
        }
        Ok(Cut { region: region.clone(), vertices })
    }

    pub fn region(&self) -> &Region {
        &self.region
    }

    /// Path vertices in orientation order.
    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    /// Directed edges of the cut.
    pub fn directed_edges(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        self.vertices.windows(2).map(|w| (w[0], w[1]))
    }

    /// The same cut traversed backwards.
    pub fn reversed(&self) -> Cut {
        let mut vertices = self.vertices.clone();
        vertices.reverse();
        Cut { region: self.region.clone(), vertices }
    }
}

/// Face walk of the region's lattice graph. Returns the boundary cycles:
/// outer first (ccw), then holes (cw), each rotated to start at its
/// lexicographically smallest `(y, x)` vertex.
fn boundary_cycles_by_face_walk(
    lattice: Lattice,
    cells: &[Cell],
    edge_cells: &HashMap<Edge, Vec<usize>>,
) -> Result<Vec<Vec<Vertex>>> {
    let dirs = directions(lattice);
    let ndir = dirs.len();
    let has_edge = |a: Vertex, b: Vertex| edge_cells.contains_key(&edge(a, b));
    let dir_index = |d: (i32, i32)| dirs.iter().position(|&x| x == d).unwrap();

    // Corner sets of actual cells, to recognize the unit faces.
    let mut cell_faces: HashSet<Vec<Vertex>> = HashSet::new();
    for c in cells {
        let mut cs = c.corners();
        cs.sort();
        cell_faces.insert(cs);
    }

    let mut directed: Vec<(Vertex, Vertex)> = Vec::new();
    for e in edge_cells.keys() {
        directed.push((e.0, e.1));
        directed.push((e.1, e.0));
    }
    directed.sort();

    let mut visited: HashSet<(Vertex, Vertex)> = HashSet::new();
    let mut outer: Option<Vec<Vertex>> = None;
    let mut holes: Vec<Vec<Vertex>> = Vec::new();

    for &start in &directed {
        if visited.contains(&start) {
            continue;
        }
        // Trace the face with the region kept to the left of each edge.
        let mut walk: Vec<(Vertex, Vertex)> = Vec::new();
        let mut cur = start;
        loop {
            visited.insert(cur);
            walk.push(cur);
            let (u, v) = cur;
            let back = (u.0 - v.0, u.1 - v.1);
            let mut k = dir_index(back);
            let next_dir = loop {
                k = (k + ndir - 1) % ndir;
                let d = dirs[k];
                if has_edge(v, (v.0 + d.0, v.1 + d.1)) {
                    break d;
                }
            };
            cur = (v, (v.0 + next_dir.0, v.1 + next_dir.1));
            if cur == start {
                break;
            }
        }
        let cycle: Vec<Vertex> = walk.iter().map(|&(u, _)| u).collect();
        let area2: i64 = cycle
            .iter()
            .zip(cycle.iter().cycle().skip(1))
            .map(|(a, b)| a.0 as i64 * b.1 as i64 - b.0 as i64 * a.1 as i64)
            .sum();
        let mut sorted = cycle.clone();
        sorted.sort();
        sorted.dedup();
        if area2 > 0 && cell_faces.contains(&sorted) && cycle.len() == sorted.len() {
            continue; // a unit cell face, traversed counterclockwise
        }
        // Reverse so the region lies on the left when traversing the cycle.
        let reversed: Vec<Vertex> = cycle.into_iter().rev().collect();
        if area2 < 0 {
            if outer.is_some() {
                return Err(Error::DisconnectedRegion);
            }
            outer = Some(reversed);
        } else {
            holes.push(reversed);
        }
    }

    let rotate_min = |cyc: Vec<Vertex>| -> Vec<Vertex> {
        let pos = cyc
            .iter()
            .enumerate()
            .min_by_key(|(_, (x, y))| (*y, *x))
            .map(|(i, _)| i)
            .unwrap();
        let mut out = cyc[pos..].to_vec();
        out.extend_from_slice(&cyc[..pos]);
        out
    };
    let mut result = vec![rotate_min(outer.expect("region has an outer boundary"))];
    let mut holes: Vec<Vec<Vertex>> = holes.into_iter().map(rotate_min).collect();
    holes.sort_by_key(|cyc| {
        let (x, y) = cyc[0];
        (y, x)
    });
    result.extend(holes);
    Ok(result)
}
