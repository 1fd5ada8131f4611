//! The bipartite cell-adjacency graph of a region, with the planar rotation
//! system induced by the lattice embedding and the face traversal it defines.

use std::collections::{HashMap, HashSet};

use crate::region::{Cell, CellKind, Region};

/// Bipartite adjacency graph: vertices are the region's cells split by
/// color, edges are shared sides. Black and white vertices are listed in
/// canonical `(y, x, orientation)` order, which fixes the matrix labeling.
pub struct BipartiteGraph {
    region: Region,
    black: Vec<Cell>,
    white: Vec<Cell>,
    white_pos: HashMap<Cell, usize>,
    black_pos: HashMap<Cell, usize>,
    /// Edges as `(black index, white index)`, sorted.
    edges: Vec<(usize, usize)>,
    edge_id: HashMap<(usize, usize), usize>,
}

/// A face of the embedded graph: the undirected edge ids traversed by its
/// boundary walk (with multiplicity) and the walk's signed area.
pub struct Face {
    pub edge_ids: Vec<usize>,
    pub area2: i64,
}

impl BipartiteGraph {
    pub fn new(region: &Region) -> BipartiteGraph {
        let cells = region.cells();
        let black: Vec<Cell> = region.black_cells().iter().map(|&i| cells[i]).collect();
        let white: Vec<Cell> = region.white_cells().iter().map(|&i| cells[i]).collect();
        let black_pos: HashMap<Cell, usize> =
            black.iter().enumerate().map(|(i, c)| (*c, i)).collect();
        let white_pos: HashMap<Cell, usize> =
            white.iter().enumerate().map(|(i, c)| (*c, i)).collect();
        let mut edges = Vec::new();
        for (bi, b) in black.iter().enumerate() {
            for n in b.neighbors() {
                if let Some(&wi) = white_pos.get(&n) {
                    edges.push((bi, wi));
                }
            }
        }
        edges.sort();
        let edge_id: HashMap<(usize, usize), usize> =
            edges.iter().enumerate().map(|(i, e)| (*e, i)).collect();
        BipartiteGraph { region: region.clone(), black, white, black_pos, white_pos, edges, edge_id }
    }

    pub fn region(&self) -> &Region {
        &self.region
    }

    pub fn black(&self) -> &[Cell] {
        &self.black
    }

    pub fn white(&self) -> &[Cell] {
        &self.white
    }

    pub fn black_position(&self, c: &Cell) -> Option<usize> {
        self.black_pos.get(c).copied()
    }

    pub fn white_position(&self, c: &Cell) -> Option<usize> {
        self.white_pos.get(c).copied()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn edge_index(&self, black: usize, white: usize) -> Option<usize> {
        self.edge_id.get(&(black, white)).copied()
    }

    /// Adjacent cells in counterclockwise rotation order around `c`,
    /// restricted to the region.
    fn rotation(&self, c: &Cell) -> Vec<Cell> {
        c.neighbors()
            .into_iter()
            .filter(|n| self.region.contains(n))
            .collect()
    }

    /// Traverse every face of the embedding. Returns `(faces, outer)` where
    /// `outer` indexes the unique face of negative area.
    pub fn faces(&self) -> (Vec<Face>, usize) {
        // Cell centroids scaled by 6 keep the area computation in integers.
        let centroid = |c: &Cell| -> (i64, i64) {
            let (x, y) = (c.x as i64, c.y as i64);
            match c.kind {
                CellKind::Square => (6 * x + 3, 6 * y + 3),
                CellKind::Up => (6 * x + 2, 6 * y + 2),
                CellKind::Down => (6 * x + 4, 6 * y + 4),
            }
        };
        let mut directed: Vec<(Cell, Cell)> = Vec::new();
        for &(bi, wi) in &self.edges {
            directed.push((self.black[bi], self.white[wi]));
            directed.push((self.white[wi], self.black[bi]));
        }
        directed.sort();
        if directed.is_empty() {
            // A single cell: one empty outer face.
            return (vec![Face { edge_ids: Vec::new(), area2: 0 }], 0);
        }
        let mut visited: HashSet<(Cell, Cell)> = HashSet::new();
        let mut faces = Vec::new();
        for &start in &directed {
            if visited.contains(&start) {
                continue;
            }
            let mut walk = Vec::new();
            let mut cur = start;
            loop {
                visited.insert(cur);
                walk.push(cur);
                let (u, v) = cur;
                let rot = self.rotation(&v);
                let idx = rot
                    .iter()
                    .position(|c| *c == u)
                    .expect("incoming edge appears in rotation");
                let next = rot[(idx + rot.len() - 1) % rot.len()];
                cur = (v, next);
                if cur == start {
                    break;
                }
            }
            let area2: i64 = walk
                .iter()
                .map(|(u, v)| {
                    let a = centroid(u);
                    let b = centroid(v);
                    a.0 * b.1 - b.0 * a.1
                })
                .sum();
            let edge_ids = walk
                .iter()
                .map(|(u, v)| {
                    let (b, w) = if u.color() == crate::region::Color::Black {
                        (u, v)
                    } else {
                        (v, u)
                    };
                    self.edge_id[&(self.black_pos[b], self.white_pos[w])]
                })
                .collect();
            faces.push(Face { edge_ids, area2 });
        }
        // The outer face has negative area, or zero when the graph is a
        // tree (every edge walked twice); bounded faces enclose area.
        let outer = faces
            .iter()
            .enumerate()
            .min_by_key(|(_, f)| f.area2)
            .map(|(i, _)| i)
            .expect("embedding has at least one face");
        debug_assert!(faces[outer].area2 <= 0);
        debug_assert!(faces.iter().enumerate().all(|(i, f)| i == outer || f.area2 > 0));
        (faces, outer)
    }
}
