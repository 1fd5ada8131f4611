//! Command implementations behind the `tilings` binary.
//!
//! Each command returns its stdout, stderr and exit code so the binary stays
//! a thin argument parser and the contract can be tested directly. Exit
//! codes: 0 success, 1 untileable, 2 input error, 3 cross-check mismatch.

use std::fmt::Write as _;
use std::path::Path;

use num_bigint::BigUint;
use num_traits::Zero;

use crate::counting::{count_tilings, hexagon_count, rectangle_count};
use crate::error::{Error, Result};
use crate::generate;
use crate::height::{heights_from_tiling, min_tiling, Tileability};
use crate::partitions::{partition_to_tiling, tiling_to_partition, PlanePartition};
use crate::region::{Lattice, Region};
use crate::render::{render_region, render_tiling, RenderStyle};
use crate::tiling::{
    distance, enumeration_count, first_tiling, flow_signature_with, FlipGraph, Tiling,
};

/// Result of running a command: text for both streams plus the exit code.
#[derive(Debug, Default)]
pub struct CmdOutput {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

impl CmdOutput {
    fn ok(stdout: String) -> CmdOutput {
        CmdOutput { stdout, stderr: String::new(), code: 0 }
    }

    fn fail(code: i32, message: String) -> CmdOutput {
        CmdOutput { stdout: String::new(), stderr: message, code }
    }
}

fn input_error(e: &Error) -> CmdOutput {
    CmdOutput::fail(2, format!("error: {}\n", e))
}

fn read_to_string(path: &Path) -> std::result::Result<String, CmdOutput> {
    std::fs::read_to_string(path)
        .map_err(|e| CmdOutput::fail(2, format!("error: {}: {}\n", path.display(), e)))
}

fn load_region(path: &Path) -> std::result::Result<Region, CmdOutput> {
    let text = read_to_string(path)?;
    Region::parse(&text).map_err(|e| input_error(&e))
}

fn load_tiling(region: &Region, path: &Path) -> std::result::Result<Tiling, CmdOutput> {
    let text = read_to_string(path)?;
    Tiling::parse(region, &text).map_err(|e| input_error(&e))
}

/// `check`: decide tileability. Simply connected regions go through the
/// height-function sweep and report the failure stage; multiply connected
/// regions fall back to matching existence.
pub fn cmd_check(region_file: &Path, dump_heights: bool) -> CmdOutput {
    let region = match load_region(region_file) {
        Ok(r) => r,
        Err(e) => return e,
    };
    if region.is_simply_connected() {
        match min_tiling(&region) {
            Ok(Tileability::Tileable(t)) => {
                let mut out = String::from("tileable\n");
                if dump_heights {
                    let h = heights_from_tiling(&t).expect("minimal tiling has heights");
                    out.push_str(&h.to_text());
                }
                CmdOutput::ok(out)
            }
            Ok(Tileability::Untileable(reason)) => CmdOutput {
                stdout: format!("untileable {}\n", reason),
                stderr: String::new(),
                code: 1,
            },
            Err(e) => input_error(&e),
        }
    } else if !region.is_balanced() {
        CmdOutput { stdout: "untileable color-imbalance\n".into(), stderr: String::new(), code: 1 }
    } else {
        match first_tiling(&region) {
            Some(_) => {
                let stderr = if dump_heights {
                    "note: heights are only defined for simply connected regions\n".to_string()
                } else {
                    String::new()
                };
                CmdOutput { stdout: "tileable\n".into(), stderr, code: 0 }
            }
            None => CmdOutput {
                stdout: "untileable no-perfect-matching\n".into(),
                stderr: String::new(),
                code: 1,
            },
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CountMethod {
    Determinant,
    Formula,
    Enumerate,
    All,
}

/// Closed-formula count for recognized rectangle or hexagon templates.
fn formula_count(region: &Region) -> Result<BigUint> {
    if let Some((n, m)) = generate::recognize_rectangle(region) {
        return if m % 2 == 0 {
            rectangle_count(n, m)
        } else if n % 2 == 0 {
            rectangle_count(m, n)
        } else {
            Ok(BigUint::zero())
        };
    }
    if let Some((r, c, m)) = generate::recognize_hexagon(region) {
        return Ok(hexagon_count(r, c, m));
    }
    Err(Error::InvalidArguments(
        "formula method needs a recognized rectangle or hexagon".into(),
    ))
}

/// `count`: exact number of tilings by the requested method; `all` compares
/// every applicable method and fails with exit 3 on disagreement.
pub fn cmd_count(region_file: &Path, method: CountMethod, limit: usize) -> CmdOutput {
    let region = match load_region(region_file) {
        Ok(r) => r,
        Err(e) => return e,
    };
    match method {
        CountMethod::Determinant => CmdOutput::ok(format!("{}\n", count_tilings(&region))),
        CountMethod::Formula => match formula_count(&region) {
            Ok(n) => CmdOutput::ok(format!("{}\n", n)),
            Err(e) => input_error(&e),
        },
        CountMethod::Enumerate => match enumeration_count(&region, limit) {
            Ok(n) => CmdOutput::ok(format!("{}\n", n)),
            Err(e) => input_error(&e),
        },
        CountMethod::All => {
            let mut values: Vec<(&str, BigUint)> = Vec::new();
            let mut stderr = String::new();
            values.push(("determinant", count_tilings(&region)));
            match formula_count(&region) {
                Ok(n) => values.push(("formula", n)),
                Err(_) => {
                    stderr.push_str("note: no closed formula for this region shape\n");
                }
            }
            match enumeration_count(&region, limit) {
                Ok(n) => values.push(("enumeration", BigUint::from(n))),
                Err(e) => {
                    let _ = writeln!(stderr, "note: enumeration skipped: {}", e);
                }
            }
            let mut stdout = String::new();
            for (name, v) in &values {
                let _ = writeln!(stdout, "{} {}", name, v);
            }
            let agree = values.iter().all(|(_, v)| *v == values[0].1);
            if agree {
                CmdOutput { stdout, stderr, code: 0 }
            } else {
                stderr.push_str("error: methods disagree\n");
                CmdOutput { stdout, stderr, code: 3 }
            }
        }
    }
}

/// `distance`: flip distance between two tilings. Multiply connected regions
/// fall back to BFS over the flip graph and report `unreachable` across
/// components.
pub fn cmd_distance(
    region_file: &Path,
    tiling_file_1: &Path,
    tiling_file_2: &Path,
    limit: usize,
) -> CmdOutput {
    let region = match load_region(region_file) {
        Ok(r) => r,
        Err(e) => return e,
    };
    let t1 = match load_tiling(&region, tiling_file_1) {
        Ok(t) => t,
        Err(e) => return e,
    };
    let t2 = match load_tiling(&region, tiling_file_2) {
        Ok(t) => t,
        Err(e) => return e,
    };
    if region.is_simply_connected() {
        match distance(&t1, &t2) {
            Ok(d) => CmdOutput::ok(format!("{}\n", d)),
            Err(e) => input_error(&e),
        }
    } else {
        let graph = match FlipGraph::build(&region, limit) {
            Ok(g) => g,
            Err(e) => return input_error(&e),
        };
        let i = graph.position(&t1).expect("valid tiling is enumerated");
        let j = graph.position(&t2).expect("valid tiling is enumerated");
        match graph.bfs_distance(i, j) {
            Some(d) => CmdOutput::ok(format!("{}\n", d)),
            None => CmdOutput::ok("unreachable\n".into()),
        }
    }
}

/// `components`: flip-graph components with sizes and flow signatures. For
/// quadriculated regions the signature/component bijection is verified and
/// a violation exits 3.
pub fn cmd_components(region_file: &Path, limit: usize, show_edges: bool) -> CmdOutput {
    let region = match load_region(region_file) {
        Ok(r) => r,
        Err(e) => return e,
    };
    let graph = match FlipGraph::build(&region, limit) {
        Ok(g) => g,
        Err(e) => return input_error(&e),
    };
    let cuts = region.cuts_basis();
    let components = graph.components();
    let mut stdout = String::new();
    let _ = writeln!(stdout, "components {}", components.len());
    let mut signatures = Vec::new();
    for (i, members) in components.iter().enumerate() {
        let sig = flow_signature_with(&graph.tilings()[members[0]], &cuts);
        let body: Vec<String> = sig.iter().map(|v| v.to_string()).collect();
        let _ = writeln!(
            stdout,
            "component {} size {} signature [{}]",
            i,
            members.len(),
            body.join(", ")
        );
        signatures.push(sig);
    }
    if show_edges {
        stdout.push_str(&graph.edge_list_text());
    }
    if region.lattice() == Lattice::Square {
        // Every tiling's signature must match its component representative,
        // and distinct components must carry distinct signatures.
        let mut consistent = true;
        for (ci, members) in components.iter().enumerate() {
            for &m in members {
                if flow_signature_with(&graph.tilings()[m], &cuts) != signatures[ci] {
                    consistent = false;
                }
            }
        }
        let mut dedup = signatures.clone();
        dedup.sort();
        dedup.dedup();
        if dedup.len() != signatures.len() {
            consistent = false;
        }
        if !consistent {
            return CmdOutput {
                stdout,
                stderr: "error: flow signatures do not classify components\n".into(),
                code: 3,
            };
        }
    }
    CmdOutput::ok(stdout)
}

/// `render`: picture of the region (or of a tiling of it).
pub fn cmd_render(region_file: &Path, tiling_file: Option<&Path>, style: &RenderStyle) -> CmdOutput {
    let region = match load_region(region_file) {
        Ok(r) => r,
        Err(e) => return e,
    };
    let result = match tiling_file {
        None => render_region(&region, style),
        Some(path) => {
            let t = match load_tiling(&region, path) {
                Ok(t) => t,
                Err(e) => return e,
            };
            render_tiling(&t, style)
        }
    };
    match result {
        Ok(text) => CmdOutput::ok(text),
        Err(e) => input_error(&e),
    }
}

/// `partition`: convert between hexagon tiling files and plane-partition
/// arrays.
pub fn cmd_partition(
    region_file: &Path,
    tiling_file: Option<&Path>,
    array_file: Option<&Path>,
) -> CmdOutput {
    let region = match load_region(region_file) {
        Ok(r) => r,
        Err(e) => return e,
    };
    let (r, c, m) = match generate::recognize_hexagon(&region) {
        Some(dims) => dims,
        None => return input_error(&Error::NotHexagon),
    };
    match (tiling_file, array_file) {
        (Some(tf), None) => {
            let t = match load_tiling(&region, tf) {
                Ok(t) => t,
                Err(e) => return e,
            };
            match tiling_to_partition(&t) {
                Ok(p) => CmdOutput::ok(p.to_text()),
                Err(e) => input_error(&e),
            }
        }
        (None, Some(af)) => {
            let text = match read_to_string(af) {
                Ok(t) => t,
                Err(e) => return e,
            };
            let p = match PlanePartition::parse(&text, m) {
                Ok(p) => p,
                Err(e) => return input_error(&e),
            };
            match partition_to_tiling(&p, r, c, m) {
                Ok(t) => CmdOutput::ok(t.to_text()),
                Err(e) => input_error(&e),
            }
        }
        _ => CmdOutput::fail(
            2,
            "error: pass exactly one of --tiling <file> or --array <file>\n".into(),
        ),
    }
}

/// Shapes the `gen` command can emit.
#[derive(Clone, Debug)]
pub enum GenSpec {
    Rect { n: u32, m: u32 },
    Hex { r: u32, c: u32, m: u32 },
    Tri { n: u32 },
    Random { lattice: Lattice, cells: usize },
}

/// `gen`: write a template region in the text format.
pub fn cmd_gen(spec: &GenSpec, seed: u64) -> CmdOutput {
    let region = match spec {
        GenSpec::Rect { n, m } => {
            if *n == 0 || *m == 0 {
                return CmdOutput::fail(2, "error: rectangle sides must be positive\n".into());
            }
            generate::rectangle(*n, *m)
        }
        GenSpec::Hex { r, c, m } => {
            if *r == 0 || *c == 0 || *m == 0 {
                return CmdOutput::fail(2, "error: hexagon sides must be positive\n".into());
            }
            generate::hexagon(*r, *c, *m)
        }
        GenSpec::Tri { n } => {
            if *n == 0 {
                return CmdOutput::fail(2, "error: triangle side must be positive\n".into());
            }
            generate::triangle(*n)
        }
        GenSpec::Random { lattice, cells } => {
            if *cells == 0 {
                return CmdOutput::fail(2, "error: cell count must be positive\n".into());
            }
            generate::random_region(*lattice, *cells, seed)
        }
    };
    match region.to_text() {
        Ok(text) => CmdOutput::ok(text),
        Err(e) => input_error(&e),
    }
}

/// `dump-heights`: height function of a given tiling, or of the minimal
/// tiling when no tiling file is passed.
pub fn cmd_dump_heights(region_file: &Path, tiling_file: Option<&Path>) -> CmdOutput {
    let region = match load_region(region_file) {
        Ok(r) => r,
        Err(e) => return e,
    };
    let tiling = match tiling_file {
        Some(path) => match load_tiling(&region, path) {
            Ok(t) => t,
            Err(e) => return e,
        },
        None => match min_tiling(&region) {
            Ok(Tileability::Tileable(t)) => t,
            Ok(Tileability::Untileable(reason)) => {
                return CmdOutput {
                    stdout: format!("untileable {}\n", reason),
                    stderr: String::new(),
                    code: 1,
                }
            }
            Err(e) => return input_error(&e),
        },
    };
    match heights_from_tiling(&tiling) {
        Ok(h) => CmdOutput::ok(h.to_text()),
        Err(e) => input_error(&e),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::io::Write;

    fn temp(content: &str) -> tempfile::NamedTempFile {
        let mut f = tempfile::NamedTempFile::new().unwrap();
        f.write_all(content.as_bytes()).unwrap();
        f
    }

    #[test]
    fn check_exit_codes() {
        let good = temp("square\n##\n##\n");
        assert_eq!(cmd_check(good.path(), false).code, 0);
        let trap = temp("square\n.#..\n####\n..#.\n");
        let out = cmd_check(trap.path(), false);
        assert_eq!(out.code, 1);
        assert_eq!(out.stdout, "untileable interior-contradiction\n");
        let odd = temp("square\n#.\n##\n");
        let out = cmd_check(odd.path(), false);
        assert_eq!(out.code, 1);
        assert_eq!(out.stdout, "untileable color-imbalance\n");
        let bad = temp("square\n#?\n");
        assert_eq!(cmd_check(bad.path(), false).code, 2);
        let missing = Path::new("/nonexistent/region.txt");
        assert_eq!(cmd_check(missing, false).code, 2);
    }

    #[test]
    fn check_ring_falls_back_to_matching() {
        let ring = temp("square\n###\n#.#\n###\n");
        assert_eq!(cmd_check(ring.path(), false).code, 0);
    }

    #[test]
    fn count_methods_agree() {
        let rect = temp(&generate::rectangle(4, 4).to_text().unwrap());
        let det = cmd_count(rect.path(), CountMethod::Determinant, 1_000_000);
        assert_eq!(det.stdout, "36\n");
        let all = cmd_count(rect.path(), CountMethod::All, 1_000_000);
        assert_eq!(all.code, 0);
        assert_eq!(all.stdout, "determinant 36\nformula 36\nenumeration 36\n");
        // Formula on an unrecognized shape is an input error.
        let l = temp("square\n##.\n###\n##.\n");
        assert_eq!(cmd_count(l.path(), CountMethod::Formula, 1_000_000).code, 2);
    }

    #[test]
    fn count_untileable_is_zero() {
        let trap = temp("square\n.#..\n####\n..#.\n");
        let out = cmd_count(trap.path(), CountMethod::Determinant, 1_000_000);
        assert_eq!(out.stdout, "0\n");
        assert_eq!(out.code, 0);
    }

    #[test]
    fn distance_same_and_unreachable() {
        let region = Region::parse("square\n##\n##\n").unwrap();
        let ts = crate::tiling::enumerate_tilings(&region);
        let rf = temp("square\n##\n##\n");
        let t0 = temp(&ts[0].to_text());
        let t1 = temp(&ts[1].to_text());
        assert_eq!(cmd_distance(rf.path(), t0.path(), t0.path(), 1000).stdout, "0\n");
        assert_eq!(cmd_distance(rf.path(), t0.path(), t1.path(), 1000).stdout, "1\n");

        let ring = Region::parse("square\n###\n#.#\n###\n").unwrap();
        let rts = crate::tiling::enumerate_tilings(&ring);
        let rr = temp(&ring.to_text().unwrap());
        let a = temp(&rts[0].to_text());
        let b = temp(&rts[1].to_text());
        let out = cmd_distance(rr.path(), a.path(), b.path(), 1000);
        assert_eq!(out.stdout, "unreachable\n");
        assert_eq!(out.code, 0);
    }

    #[test]
    fn components_reports() {
        let rect = temp(&generate::rectangle(2, 4).to_text().unwrap());
        let out = cmd_components(rect.path(), 1000, false);
        assert!(out.stdout.starts_with("components 1\ncomponent 0 size 5 signature []"));
        let ring = temp("square\n###\n#.#\n###\n");
        let out = cmd_components(ring.path(), 1000, false);
        assert_eq!(out.code, 0);
        assert!(out.stdout.starts_with("components 2\n"));
        // Limit errors exit 2.
        let out = cmd_components(rect.path(), 2, false);
        assert_eq!(out.code, 2);
    }

    #[test]
    fn gen_and_partition_pipeline() {
        let hex = cmd_gen(&GenSpec::Hex { r: 2, c: 2, m: 2 }, 0);
        assert_eq!(hex.code, 0);
        let region_file = temp(&hex.stdout);
        let region = Region::parse(&hex.stdout).unwrap();
        let t = crate::height::max_tiling(&region)
            .unwrap()
            .tiling()
            .unwrap()
            .clone();
        let tiling_file = temp(&t.to_text());
        let arr = cmd_partition(region_file.path(), Some(tiling_file.path()), None);
        assert_eq!(arr.stdout, "2 2\n2 2\n");
        let array_file = temp(&arr.stdout);
        let back = cmd_partition(region_file.path(), None, Some(array_file.path()));
        assert_eq!(back.code, 0);
        assert_eq!(back.stdout, t.to_text());
        // Exactly one input must be given.
        assert_eq!(cmd_partition(region_file.path(), None, None).code, 2);
    }

    #[test]
    fn dump_heights_of_min_tiling() {
        let rf = temp("square\n##\n##\n");
        let out = cmd_dump_heights(rf.path(), None);
        assert_eq!(out.code, 0);
        assert!(out.stdout.contains("0 0 0"));
        let trap = temp("square\n.#..\n####\n..#.\n");
        assert_eq!(cmd_dump_heights(trap.path(), None).code, 1);
    }
}
