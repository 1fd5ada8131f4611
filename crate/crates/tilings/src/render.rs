//! ASCII and SVG pictures of regions, tilings and height functions.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::height::heights_from_tiling;
use crate::region::{Cell, CellKind, Color, Lattice, Region};
use crate::tiling::Tiling;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RenderFormat {
    Ascii,
    Svg,
}

#[derive(Clone, Copy, Debug)]
pub struct RenderStyle {
    pub format: RenderFormat,
    /// Pixels per lattice unit in SVG output.
    pub scale: u32,
    pub show_heights: bool,
    pub show_colors: bool,
}

impl Default for RenderStyle {
    fn default() -> Self {
        RenderStyle { format: RenderFormat::Ascii, scale: 24, show_heights: false, show_colors: false }
    }
}

pub fn render_region(region: &Region, style: &RenderStyle) -> Result<String> {
    render(region, None, style)
}

pub fn render_tiling(tiling: &Tiling, style: &RenderStyle) -> Result<String> {
    render(tiling.region(), Some(tiling), style)
}

fn render(region: &Region, tiling: Option<&Tiling>, style: &RenderStyle) -> Result<String> {
    if style.scale == 0 {
        return Err(Error::InvalidArguments("scale must be positive".into()));
    }
    if style.show_heights && tiling.is_none() {
        return Err(Error::InvalidArguments(
            "height labels need a tiling to derive heights from".into(),
        ));
    }
    match style.format {
        RenderFormat::Ascii => ascii(region, tiling, style),
        RenderFormat::Svg => svg(region, tiling, style),
    }
}

/// Edges drawn in a picture: everything except the sides interior to tiles.
fn drawn_edges(region: &Region, tiling: Option<&Tiling>) -> Vec<(i32, i32, i32, i32)> {
    region
        .edges()
        .iter()
        .filter(|e| tiling.map_or(true, |t| !t.covers_edge(e)))
        .map(|&((x1, y1), (x2, y2))| (x1, y1, x2, y2))
        .collect()
}

fn ascii(region: &Region, tiling: Option<&Tiling>, style: &RenderStyle) -> Result<String> {
    let mut art = match region.lattice() {
        Lattice::Square => ascii_square(region, tiling, style),
        Lattice::Triangular => ascii_triangular(region, tiling),
    };
    if style.show_heights {
        let heights = heights_from_tiling(tiling.expect("checked by render"))?;
        art.push('\n');
        art.push_str(&heights.to_text());
    }
    Ok(art)
}

fn ascii_square(region: &Region, tiling: Option<&Tiling>, style: &RenderStyle) -> String {
    let vs = region.vertices();
    let (min_x, max_x) = (vs.iter().map(|v| v.0).min().unwrap(), vs.iter().map(|v| v.0).max().unwrap());
    let (min_y, max_y) = (vs.iter().map(|v| v.1).min().unwrap(), vs.iter().map(|v| v.1).max().unwrap());
    let cols = (2 * (max_x - min_x) + 1) as usize;
    let rows = (2 * (max_y - min_y) + 1) as usize;
    let mut canvas = vec![vec![' '; cols]; rows];
    let pos = |x: i32, y: i32| ((2 * (max_y - y)) as usize, (2 * (x - min_x)) as usize);
    for (x1, y1, x2, y2) in drawn_edges(region, tiling) {
        let (r1, c1) = pos(x1, y1);
        let (r2, c2) = pos(x2, y2);
        if r1 == r2 {
            canvas[r1][c1.min(c2) + 1] = '─';
        } else {
            canvas[r1.min(r2) + 1][c1] = '│';
        }
    }
    // Corner glyphs from the strokes around each vertex position.
    for v in vs {
        let (r, c) = pos(v.0, v.1);
        let up = r > 0 && canvas[r - 1][c] == '│';
        let down = r + 1 < rows && canvas[r + 1][c] == '│';
        let left = c > 0 && canvas[r][c - 1] == '─';
        let right = c + 1 < cols && canvas[r][c + 1] == '─';
        canvas[r][c] = match (up, down, left, right) {
            (false, false, false, false) => ' ',
            (false, false, false, true) => '╶',
            (false, false, true, false) => '╴',
            (false, false, true, true) => '─',
            (false, true, false, false) => '╷',
            (false, true, false, true) => '┌',
            (false, true, true, false) => '┐',
            (false, true, true, true) => '┬',
            (true, false, false, false) => '╵',
            (true, false, false, true) => '└',
            (true, false, true, false) => '┘',
            (true, false, true, true) => '┴',
            (true, true, false, false) => '│',
            (true, true, false, true) => '├',
            (true, true, true, false) => '┤',
            (true, true, true, true) => '┼',
        };
    }
    if style.show_colors {
        for cell in region.cells() {
            let (r, c) = pos(cell.x, cell.y + 1);
            let ch = if cell.color() == Color::Black { 'B' } else { 'W' };
            canvas[r + 1][c + 1] = ch;
        }
    }
    canvas_to_string(canvas)
}

fn ascii_triangular(region: &Region, tiling: Option<&Tiling>) -> String {
    let vs = region.vertices();
    let (min_y, max_y) = (vs.iter().map(|v| v.1).min().unwrap(), vs.iter().map(|v| v.1).max().unwrap());
    // Character cells: up(x, y) sits at column 2x+y, down(x, y) at 2x+y+1,
    // in the row of the strip [y, y+1). Underscores for the level-y edges
    // share that row; diagonals win collisions.
    let mut marks: Vec<(i64, i64, char)> = Vec::new();
    for (x1, y1, x2, y2) in drawn_edges(region, tiling) {
        let ((x1, y1), (x2, y2)) = if (y1, x1) <= (y2, x2) { ((x1, y1), (x2, y2)) } else { ((x2, y2), (x1, y1)) };
        let (x1, y1, x2, y2) = (x1 as i64, y1 as i64, x2 as i64, y2 as i64);
        let row_of = |y: i64| max_y as i64 - y;
        if y1 == y2 {
            // horizontal edge at level y1
            marks.push((row_of(y1), 2 * x1 + y1, '_'));
            marks.push((row_of(y1), 2 * x1 + y1 + 1, '_'));
        } else if x1 == x2 {
            // rising edge (x, y) -> (x, y+1), drawn in the strip above level y
            marks.push((row_of(y1), 2 * x1 + y1, '/'));
        } else {
            // falling edge (x+1, y) -> (x, y+1)
            marks.push((row_of(y1), 2 * x2 + y1 + 1, '\\'));
        }
    }
    let min_col = marks.iter().map(|m| m.1).min().unwrap_or(0);
    let max_col = marks.iter().map(|m| m.1).max().unwrap_or(0);
    let rows = (max_y - min_y + 1) as usize;
    let cols = (max_col - min_col + 1) as usize;
    let mut canvas = vec![vec![' '; cols]; rows];
    marks.sort_by_key(|&(_, _, ch)| ch == '_'); // draw underscores first
    for &(r, c, ch) in marks.iter().rev() {
        canvas[r as usize][(c - min_col) as usize] = ch;
    }
    canvas_to_string(canvas)
}

fn canvas_to_string(canvas: Vec<Vec<char>>) -> String {
    let mut out = String::new();
    for row in canvas {
        let line: String = row.into_iter().collect();
        out.push_str(line.trim_end());
        out.push('\n');
    }
    out
}

/// Embedded plane position of a lattice vertex.
fn embed(lattice: Lattice, v: (i32, i32)) -> (f64, f64) {
    match lattice {
        Lattice::Square => (v.0 as f64, v.1 as f64),
        Lattice::Triangular => (
            v.0 as f64 + v.1 as f64 / 2.0,
            v.1 as f64 * 3f64.sqrt() / 2.0,
        ),
    }
}

fn tile_fill(a: &Cell, b: &Cell) -> &'static str {
    match a.kind {
        CellKind::Square => {
            if a.y == b.y {
                "#9ecae1" // horizontal domino
            } else {
                "#fdae6b" // vertical domino
            }
        }
        _ => {
            let (up, down) = if a.kind == CellKind::Up { (a, b) } else { (b, a) };
            if (down.x, down.y) == (up.x, up.y) {
                "#a1d99b"
            } else if (down.x, down.y) == (up.x - 1, up.y) {
                "#bcbddc"
            } else {
                "#fdd0a2"
            }
        }
    }
}

fn svg(region: &Region, tiling: Option<&Tiling>, style: &RenderStyle) -> Result<String> {
    let s = style.scale as f64;
    let lattice = region.lattice();
    let points: Vec<(f64, f64)> = region.vertices().iter().map(|&v| embed(lattice, v)).collect();
    let min_x = points.iter().map(|p| p.0).fold(f64::INFINITY, f64::min);
    let max_x = points.iter().map(|p| p.0).fold(f64::NEG_INFINITY, f64::max);
    let min_y = points.iter().map(|p| p.1).fold(f64::INFINITY, f64::min);
    let max_y = points.iter().map(|p| p.1).fold(f64::NEG_INFINITY, f64::max);
    let pad = 0.25;
    let width = (max_x - min_x + 2.0 * pad) * s;
    let height = (max_y - min_y + 2.0 * pad) * s;
    let place = |v: (i32, i32)| -> (f64, f64) {
        let (ex, ey) = embed(lattice, v);
        ((ex - min_x + pad) * s, (max_y - ey + pad) * s)
    };
    let fmt_points = |corners: &[(i32, i32)]| -> String {
        corners
            .iter()
            .map(|&v| {
                let (px, py) = place(v);
                format!("{:.2},{:.2}", px, py)
            })
            .collect::<Vec<_>>()
            .join(" ")
    };

    let mut out = String::new();
    out.push_str("<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n");
    let _ = writeln!(
        out,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{:.0}\" height=\"{:.0}\" viewBox=\"0 0 {:.0} {:.0}\">",
        width, height, width, height
    );
    match tiling {
        None => {
            for cell in region.cells() {
                let fill = if style.show_colors {
                    match cell.color() {
                        Color::Black => "#bbbbbb",
                        Color::White => "#f5f5f5",
                    }
                } else {
                    "#ffffff"
                };
                let _ = writeln!(
                    out,
                    "  <polygon points=\"{}\" fill=\"{}\" stroke=\"#333333\" stroke-width=\"1\"/>",
                    fmt_points(&cell.corners()),
                    fill
                );
            }
        }
        Some(t) => {
            for (a, b) in t.tiles() {
                let outline = tile_outline(&a, &b);
                let _ = writeln!(
                    out,
                    "  <polygon points=\"{}\" fill=\"{}\" stroke=\"#333333\" stroke-width=\"1.5\"/>",
                    fmt_points(&outline),
                    tile_fill(&a, &b)
                );
            }
        }
    }
    if style.show_heights {
        let heights = heights_from_tiling(tiling.expect("checked by render"))?;
        for (v, h) in region.vertices().iter().zip(heights.values()) {
            let (px, py) = place(*v);
            let _ = writeln!(
                out,
                "  <text x=\"{:.2}\" y=\"{:.2}\" font-size=\"{:.1}\" text-anchor=\"middle\" fill=\"#cc0000\">{}</text>",
                px,
                py,
                s * 0.35,
                h
            );
        }
    }
    out.push_str("</svg>\n");
    Ok(out)
}

/// Outline of the union of a tile's two cells: the distinct corners ordered
/// around the centroid. Dominoes give a rectangle walk through 6 lattice
/// points, lozenges a rhombus through 4.
fn tile_outline(a: &Cell, b: &Cell) -> Vec<(i32, i32)> {
    let mut outline: Vec<(i32, i32)> = a
        .corners()
        .into_iter()
        .chain(b.corners())
        .collect::<std::collections::BTreeSet<_>>()
        .into_iter()
        .collect();
    let lattice = a.lattice();
    let cx = outline.iter().map(|&v| embed(lattice, v).0).sum::<f64>() / outline.len() as f64;
    let cy = outline.iter().map(|&v| embed(lattice, v).1).sum::<f64>() / outline.len() as f64;
    outline.sort_by(|&p, &q| {
        let (px, py) = embed(lattice, p);
        let (qx, qy) = embed(lattice, q);
        (py - cy)
            .atan2(px - cx)
            .partial_cmp(&(qy - cy).atan2(qx - cx))
            .unwrap()
    });
    outline
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate;
    use crate::height::min_tiling;
    use crate::tiling::enumerate_tilings;

    fn style(format: RenderFormat) -> RenderStyle {
        RenderStyle { format, ..Default::default() }
    }

    #[test]
    fn ascii_two_by_two_horizontal() {
        let r = Region::parse("square\n##\n##\n").unwrap();
        let ts = enumerate_tilings(&r);
        let horizontal = ts
            .iter()
            .find(|t| {
                t.partner(&crate::region::Cell::square(0, 0)).unwrap()
                    == crate::region::Cell::square(1, 0)
            })
            .unwrap();
        let art = render_tiling(horizontal, &style(RenderFormat::Ascii)).unwrap();
        assert_eq!(art, "┌───┐\n│   │\n├───┤\n│   │\n└───┘\n");
    }

    #[test]
    fn ascii_unit_hexagon_tilings() {
        let r = generate::hexagon(1, 1, 1);
        let min = min_tiling(&r).unwrap();
        let art = render_tiling(min.tiling().unwrap(), &style(RenderFormat::Ascii)).unwrap();
        assert_eq!(art, " __\n/\\_\\\n\\/_/\n");
    }

    #[test]
    fn ascii_region_only() {
        let r = Region::parse("square\n##\n##\n").unwrap();
        let art = render_region(&r, &style(RenderFormat::Ascii)).unwrap();
        assert_eq!(art, "┌─┬─┐\n│ │ │\n├─┼─┤\n│ │ │\n└─┴─┘\n");
    }

    #[test]
    fn svg_is_deterministic_and_balanced() {
        let r = generate::hexagon(2, 2, 2);
        let t = min_tiling(&r).unwrap().tiling().unwrap().clone();
        let s1 = render_tiling(&t, &style(RenderFormat::Svg)).unwrap();
        let s2 = render_tiling(&t, &style(RenderFormat::Svg)).unwrap();
        assert_eq!(s1, s2);
        assert_eq!(s1.matches("<polygon").count(), 12);
        assert!(s1.starts_with("<?xml"));
        assert!(s1.trim_end().ends_with("</svg>"));
    }

    #[test]
    fn svg_height_labels() {
        let r = Region::parse("square\n##\n##\n").unwrap();
        let t = min_tiling(&r).unwrap().tiling().unwrap().clone();
        let mut st = style(RenderFormat::Svg);
        st.show_heights = true;
        let s = render_tiling(&t, &st).unwrap();
        assert_eq!(s.matches("<text").count(), r.vertices().len());
        // Region-only height labels are rejected.
        assert!(render_region(&r, &st).is_err());
    }
}
