//! Exact tiling counts: sign selection on the bipartite adjacency matrix,
//! fraction-free integer determinants, sign-class analysis, and the closed
//! product formulas for rectangles and center-symmetric hexagons.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::graph::BipartiteGraph;
use crate::region::{Cell, Region};
use crate::tiling::{enumerate_tilings, Tiling};

/// The black-by-white adjacency matrix with entries in {-1, 0, +1}.
///
/// Around every bounded face of size 4n the number of negated entries is
/// odd; around faces of size 4n+2 it is even. All matching monomials of the
/// determinant then share one sign, so the tiling count is `|det|`.
pub struct SignedBipartiteMatrix {
    black: Vec<Cell>,
    white: Vec<Cell>,
    entries: Vec<Vec<i8>>,
}

impl SignedBipartiteMatrix {
    pub fn black(&self) -> &[Cell] {
        &self.black
    }

    pub fn white(&self) -> &[Cell] {
        &self.white
    }

    pub fn entries(&self) -> &[Vec<i8>] {
        &self.entries
    }

    pub fn entry(&self, black: usize, white: usize) -> i8 {
        self.entries[black][white]
    }

    /// Exact determinant by fraction-free elimination. Zero for non-square.
    pub fn determinant(&self) -> BigInt {
        if self.black.len() != self.white.len() {
            return BigInt::zero();
        }
        let m: Vec<Vec<BigInt>> = self
            .entries
            .iter()
            .map(|row| row.iter().map(|&e| BigInt::from(e)).collect())
            .collect();
        bareiss_determinant(m)
    }

    /// Sign of the matching monomial of a tiling in this matrix's
    /// determinant expansion: permutation parity times the entry signs.
    pub fn matching_sign(&self, t: &Tiling) -> i8 {
        let mut perm = vec![usize::MAX; self.black.len()];
        let mut entry_sign = 1i8;
        for (a, b) in t.tiles() {
            let (black, white) = if a.color() == crate::region::Color::Black {
                (a, b)
            } else {
                (b, a)
            };
            let bi = self.black.iter().position(|c| *c == black).unwrap();
            let wi = self.white.iter().position(|c| *c == white).unwrap();
            perm[bi] = wi;
            entry_sign *= self.entries[bi][wi];
        }
        permutation_sign(&perm) * entry_sign
    }
}

fn permutation_sign(perm: &[usize]) -> i8 {
    let mut seen = vec![false; perm.len()];
    let mut sign = 1i8;
    for start in 0..perm.len() {
        if seen[start] {
            continue;
        }
        let mut len = 0;
        let mut i = start;
        while !seen[i] {
            seen[i] = true;
            i = perm[i];
            len += 1;
        }
        if len % 2 == 0 {
            sign = -sign;
        }
    }
    sign
}

/// Fraction-free (Bareiss) determinant of an integer matrix.
fn bareiss_determinant(mut m: Vec<Vec<BigInt>>) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut sign = 1i8;
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&r| !m[r][k].is_zero()) {
                Some(r) => {
                    m.swap(k, r);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &m[i][j] * &m[k][k] - &m[i][k] * &m[k][j];
                m[i][j] = num / &prev;
            }
            m[i][k] = BigInt::zero();
        }
        prev = m[k][k].clone();
    }
    if sign < 0 {
        -m[n - 1][n - 1].clone()
    } else {
        m[n - 1][n - 1].clone()
    }
}

/// Choose edge signs so that every bounded face of the embedding satisfies
/// the parity condition.
///
/// All entries start positive; a spanning tree of the face-adjacency (dual)
/// graph rooted at the outer face is processed leaf-to-root, each bounded
/// face fixing its parity by flipping the one edge shared with its parent.
/// Simply connected triangulated regions need no flips, so the all-positive
/// matrix is returned unchanged for them.
pub fn kasteleyn_sign(g: &BipartiteGraph) -> SignedBipartiteMatrix {
    let nb = g.black().len();
    let nw = g.white().len();
    let mut entries = vec![vec![0i8; nw]; nb];
    for &(bi, wi) in g.edges() {
        entries[bi][wi] = 1;
    }

    let (faces, outer) = g.faces();
    // Dual adjacency: for each undirected edge, the faces it borders.
    let mut edge_faces: Vec<Vec<usize>> = vec![Vec::new(); g.edges().len()];
    for (fi, face) in faces.iter().enumerate() {
        for &e in &face.edge_ids {
            edge_faces[e].push(fi);
        }
    }
    let mut parent_edge: Vec<Option<usize>> = vec![None; faces.len()];
    let mut order = Vec::new();
    let mut visited = vec![false; faces.len()];
    visited[outer] = true;
    let mut queue = std::collections::VecDeque::from([outer]);
    while let Some(f) = queue.pop_front() {
        for &e in &faces[f].edge_ids {
            for &f2 in &edge_faces[e] {
                if !visited[f2] {
                    visited[f2] = true;
                    parent_edge[f2] = Some(e);
                    order.push(f2);
                    queue.push_back(f2);
                }
            }
        }
    }
    debug_assert!(visited.iter().all(|&v| v), "dual graph is connected");

    // Children first: walking `order` backwards visits each face after all
    // faces that hang below it in the tree.
    for &f in order.iter().rev() {
        let face = &faces[f];
        debug_assert_eq!(face.edge_ids.len() % 2, 0);
        let want_odd = face.edge_ids.len() % 4 == 0;
        let negated = face
            .edge_ids
            .iter()
            .filter(|&&e| {
                let (bi, wi) = g.edges()[e];
                entries[bi][wi] < 0
            })
            .count();
        if (negated % 2 == 1) != want_odd {
            let (bi, wi) = g.edges()[parent_edge[f].expect("bounded face has a parent")];
            entries[bi][wi] = -entries[bi][wi];
        }
    }

    SignedBipartiteMatrix {
        black: g.black().to_vec(),
        white: g.white().to_vec(),
        entries,
    }
}

/// Exact number of tilings via the signed determinant. Color-imbalanced
/// regions have no tilings and return zero immediately.
pub fn count_tilings(region: &Region) -> BigUint {
    if !region.is_balanced() {
        return BigUint::zero();
    }
    let g = BipartiteGraph::new(region);
    kasteleyn_sign(&g).determinant().magnitude().clone()
}

/// `|det B|` for the unsigned adjacency matrix: at most 1 for simply
/// connected quadriculated regions, equal to the tiling count for
/// triangulated ones.
pub fn det_unsigned(region: &Region) -> BigUint {
    if !region.is_balanced() {
        return BigUint::zero();
    }
    let g = BipartiteGraph::new(region);
    let nb = g.black().len();
    let m: Vec<Vec<BigInt>> = (0..nb)
        .map(|bi| {
            (0..g.white().len())
                .map(|wi| {
                    if g.edge_index(bi, wi).is_some() {
                        BigInt::one()
                    } else {
                        BigInt::zero()
                    }
                })
                .collect()
        })
        .collect();
    bareiss_determinant(m).magnitude().clone()
}

/// Split the tilings into the two sign classes of their matching monomials
/// in `det B`, under the canonical vertex labeling. Only the difference
/// `|N+ - N-|` is labeling-invariant; it equals [`det_unsigned`].
pub fn sign_classes(region: &Region) -> (BigUint, BigUint) {
    let g = BipartiteGraph::new(region);
    let mut plus = BigUint::zero();
    let mut minus = BigUint::zero();
    for t in enumerate_tilings(region) {
        let mut perm = vec![usize::MAX; g.black().len()];
        for (a, b) in t.tiles() {
            let (black, white) = if a.color() == crate::region::Color::Black {
                (a, b)
            } else {
                (b, a)
            };
            perm[g.black_position(&black).unwrap()] = g.white_position(&white).unwrap();
        }
        if permutation_sign(&perm) > 0 {
            plus += 1u32;
        } else {
            minus += 1u32;
        }
    }
    (plus, minus)
}

/// Number of domino tilings of the `n x m` rectangle via the eigenvalue
/// product, evaluated in fixed-point arithmetic with at least `2nm` bits and
/// rounded to the nearest integer after an integrality check.
pub fn rectangle_count(n: u32, m: u32) -> Result<BigUint> {
    if m % 2 != 0 {
        return Err(Error::OddRectangleRows);
    }
    if n == 0 || m == 0 {
        return Ok(BigUint::one());
    }
    let prec = (2 * n as u64 * m as u64 + 64).max(128);
    let pi = fixed::pi(prec);
    let cos2_m: Vec<BigInt> = (1..=m / 2)
        .map(|k| fixed::cos_sq(k as u64, (m + 1) as u64, &pi, prec))
        .collect();
    let cos2_n: Vec<BigInt> = (1..=n)
        .map(|l| fixed::cos_sq(l as u64, (n + 1) as u64, &pi, prec))
        .collect();
    let mut acc = fixed::one(prec);
    for ck in &cos2_m {
        for cl in &cos2_n {
            let factor = fixed::sqrt(&(ck + cl), prec) << 1;
            acc = fixed::mul(&acc, &factor, prec);
        }
    }
    fixed::to_integer_checked(&acc, prec).ok_or(Error::PrecisionLoss)
}

/// Number of lozenge tilings of the hexagon with sides `r`, `c`, `m`:
/// the product of `(c+i+j-1)/(i+j-1)` over `1<=i<=r`, `1<=j<=m`,
/// evaluated exactly.
pub fn hexagon_count(r: u32, c: u32, m: u32) -> BigUint {
    let mut num = BigUint::one();
    let mut den = BigUint::one();
    for i in 1..=r as u64 {
        for j in 1..=m as u64 {
            num *= BigUint::from(c as u64 + i + j - 1);
            den *= BigUint::from(i + j - 1);
        }
    }
    let (q, rem) = num.div_rem(&den);
    debug_assert!(rem.is_zero(), "the hexagon product is an integer");
    q
}

/// Fixed-point arithmetic on `BigInt` mantissas scaled by `2^prec`.
mod fixed {
    use num_bigint::BigInt;
    use num_bigint::BigUint;
    use num_traits::{One, Signed, Zero};

    pub fn one(prec: u64) -> BigInt {
        BigInt::one() << prec
    }

    pub fn mul(a: &BigInt, b: &BigInt, prec: u64) -> BigInt {
        (a * b) >> prec
    }

    /// Square root of a non-negative fixed-point value.
    pub fn sqrt(a: &BigInt, prec: u64) -> BigInt {
        debug_assert!(!a.is_negative());
        (a << prec).sqrt()
    }

    /// arctan(1/q) by the alternating power series.
    fn atan_inv(q: u64, prec: u64) -> BigInt {
        let q2 = BigInt::from(q) * BigInt::from(q);
        let mut power = one(prec) / BigInt::from(q);
        let mut total = BigInt::zero();
        let mut k = 0u64;
        while !power.is_zero() {
            let term = &power / BigInt::from(2 * k + 1);
            if k % 2 == 0 {
                total += term;
            } else {
                total -= term;
            }
            power = power / &q2;
            k += 1;
        }
        total
    }

    /// pi = 16 atan(1/5) - 4 atan(1/239).
    pub fn pi(prec: u64) -> BigInt {
        let guard = prec + 16;
        let v = (atan_inv(5, guard) << 4) - (atan_inv(239, guard) << 2);
        v >> 16
    }

    fn cos_series(x: &BigInt, prec: u64) -> BigInt {
        let x2 = mul(x, x, prec);
        let mut term = one(prec);
        let mut total = term.clone();
        let mut k = 0u64;
        while !term.is_zero() {
            term = mul(&term, &x2, prec) / BigInt::from((2 * k + 1) * (2 * k + 2));
            if k % 2 == 0 {
                total -= &term;
            } else {
                total += &term;
            }
            k += 1;
        }
        total
    }

    fn sin_series(x: &BigInt, prec: u64) -> BigInt {
        let x2 = mul(x, x, prec);
        let mut term = x.clone();
        let mut total = term.clone();
        let mut k = 0u64;
        while !term.is_zero() {
            term = mul(&term, &x2, prec) / BigInt::from((2 * k + 2) * (2 * k + 3));
            if k % 2 == 0 {
                total -= &term;
            } else {
                total += &term;
            }
            k += 1;
        }
        total
    }

    /// cos^2(num*pi/den) for 0 < num/den < 1.
    pub fn cos_sq(num: u64, den: u64, pi: &BigInt, prec: u64) -> BigInt {
        let mut theta = (pi * BigInt::from(num)) / BigInt::from(den);
        let half_pi = pi >> 1;
        if theta > half_pi {
            theta = pi - theta; // cos^2 is symmetric about pi/2
        }
        let quarter_pi = pi >> 2;
        let c = if theta <= quarter_pi {
            cos_series(&theta, prec)
        } else {
            sin_series(&(half_pi - theta), prec)
        };
        mul(&c, &c, prec)
    }

    /// Round to the nearest integer, failing when the fractional part is not
    /// within 1e-6 of an integer.
    pub fn to_integer_checked(a: &BigInt, prec: u64) -> Option<BigUint> {
        debug_assert!(!a.is_negative());
        let unit = one(prec);
        let frac = a & (&unit - BigInt::one());
        let near_zero = &frac * BigInt::from(1_000_000u64) < unit;
        let near_one = (&unit - &frac) * BigInt::from(1_000_000u64) < unit;
        if !near_zero && !near_one {
            return None;
        }
        let rounded = (a + (BigInt::one() << (prec - 1))) >> prec;
        Some(rounded.magnitude().clone())
    }
}
