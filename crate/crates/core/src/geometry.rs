//! Convex polygon combinatorics: diagonals, crossings, dissections and the
//! cells a dissection cuts the polygon into.
//!
//! Vertices are labelled `1..=n` in cyclic order.

use std::collections::BTreeSet;
use std::fmt;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GeometryError {
    #[error("a polygon needs at least 3 vertices, got {0}")]
    TooFewVertices(usize),
    #[error("vertex {vertex} is not a vertex of the {n}-gon")]
    InvalidVertex { vertex: usize, n: usize },
    #[error("a diagonal needs two distinct vertices, got {{{0},{0}}}")]
    Degenerate(usize),
    #[error("{0} is not an internal diagonal")]
    NotInternal(Diagonal),
    #[error("diagonals {0} and {1} cross")]
    Crossing(Diagonal, Diagonal),
}

/// Unordered pair of distinct vertices, stored with `a < b`.
///
/// Boundary edges are diagonals too; see [`is_internal`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Diagonal {
    a: usize,
    b: usize,
}

impl Diagonal {
    /// Panics on `i == j`; use [`Diagonal::try_new`] for input data.
    pub fn new(i: usize, j: usize) -> Self {
        Self::try_new(i, j).expect("diagonal endpoints must differ")
    }

    pub fn try_new(i: usize, j: usize) -> Result<Self, GeometryError> {
        if i == j {
            return Err(GeometryError::Degenerate(i));
        }
        Ok(Self {
            a: i.min(j),
            b: i.max(j),
        })
    }

    pub fn a(&self) -> usize {
        self.a
    }

    pub fn b(&self) -> usize {
        self.b
    }

    pub fn endpoints(&self) -> (usize, usize) {
        (self.a, self.b)
    }

    pub fn has_endpoint(&self, v: usize) -> bool {
        self.a == v || self.b == v
    }

    pub fn check(&self, n: usize) -> Result<(), GeometryError> {
        if self.a == 0 || self.b > n {
            let vertex = if self.a == 0 { 0 } else { self.b };
            return Err(GeometryError::InvalidVertex { vertex, n });
        }
        Ok(())
    }

    /// Image under `v ↦ v + k (mod n)`.
    pub fn rotate(&self, k: usize, n: usize) -> Self {
        let r = |v: usize| (v - 1 + k) % n + 1;
        Self::new(r(self.a), r(self.b))
    }

    /// Image under `v ↦ n + 1 - v`.
    pub fn reflect(&self, n: usize) -> Self {
        Self::new(n + 1 - self.a, n + 1 - self.b)
    }

    /// Index of this diagonal in [`all_diagonals`] order for an `n`-gon.
    pub(crate) fn index(&self, n: usize) -> usize {
        let a = self.a - 1;
        a * (2 * n - a - 1) / 2 + (self.b - self.a - 1)
    }
}

impl fmt::Display for Diagonal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{},{}}}", self.a, self.b)
    }
}

fn check_n(n: usize) -> Result<(), GeometryError> {
    if n < 3 {
        Err(GeometryError::TooFewVertices(n))
    } else {
        Ok(())
    }
}

/// All `n(n-1)/2` diagonals of the `n`-gon, boundary edges included, in
/// lexicographic order.
pub fn all_diagonals(n: usize) -> Vec<Diagonal> {
    (1..=n)
        .flat_map(|a| (a + 1..=n).map(move |b| Diagonal { a, b }))
        .collect()
}

pub fn internal_diagonals(n: usize) -> Vec<Diagonal> {
    all_diagonals(n).into_iter().filter(|d| internal(d, n)).collect()
}

/// The `n` boundary edges `{1,2}, …, {n-1,n}, {1,n}`.
pub fn boundary_edges(n: usize) -> Vec<Diagonal> {
    (1..=n).map(|i| Diagonal::new(i, i % n + 1)).collect()
}

fn internal(d: &Diagonal, n: usize) -> bool {
    d.b - d.a != 1 && !(d.a == 1 && d.b == n)
}

fn crosses(d1: &Diagonal, d2: &Diagonal) -> bool {
    let (i, j) = (d1.a, d1.b);
    let (k, l) = (d2.a, d2.b);
    (i < k && k < j && j < l) || (k < i && i < l && l < j)
}

/// Whether `d` joins two vertices that are not cyclic neighbours.
pub fn is_internal(d: &Diagonal, n: usize) -> Result<bool, GeometryError> {
    d.check(n)?;
    Ok(internal(d, n))
}

/// Whether the endpoints of the two diagonals interleave in the cyclic order.
/// Diagonals sharing a vertex never cross.
pub fn crossing(d1: &Diagonal, d2: &Diagonal, n: usize) -> Result<bool, GeometryError> {
    d1.check(n)?;
    d2.check(n)?;
    Ok(crosses(d1, d2))
}

/// A set of pairwise non-crossing internal diagonals of an `n`-gon.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Dissection {
    n: usize,
    diagonals: BTreeSet<Diagonal>,
}

impl Dissection {
    pub fn empty(n: usize) -> Result<Self, GeometryError> {
        check_n(n)?;
        Ok(Self {
            n,
            diagonals: BTreeSet::new(),
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.diagonals.len()
    }

    pub fn is_empty(&self) -> bool {
        self.diagonals.is_empty()
    }

    pub fn contains(&self, d: &Diagonal) -> bool {
        self.diagonals.contains(d)
    }

    pub fn iter(&self) -> impl Iterator<Item = &Diagonal> + '_ {
        self.diagonals.iter()
    }

    pub fn diagonals(&self) -> &BTreeSet<Diagonal> {
        &self.diagonals
    }

    pub fn is_triangulation(&self) -> bool {
        self.diagonals.len() + 3 == self.n
    }

    pub fn union(&self, other: &Dissection) -> Result<Dissection, GeometryError> {
        validate_dissection(self.n, self.iter().chain(other.iter()).copied())
    }

    pub fn rotate(&self, k: usize) -> Dissection {
        Dissection {
            n: self.n,
            diagonals: self.iter().map(|d| d.rotate(k, self.n)).collect(),
        }
    }

    pub fn reflect(&self) -> Dissection {
        Dissection {
            n: self.n,
            diagonals: self.iter().map(|d| d.reflect(self.n)).collect(),
        }
    }
}

/// Checks that every diagonal is internal and no two of them cross.
pub fn validate_dissection(n: usize, ds: impl IntoIterator<Item = Diagonal>) -> Result<Dissection, GeometryError> {
    check_n(n)?;
    let diagonals: BTreeSet<Diagonal> = ds.into_iter().collect();
    for d in &diagonals {
        if !is_internal(d, n)? {
            return Err(GeometryError::NotInternal(*d));
        }
    }
    for d1 in &diagonals {
        for d2 in diagonals.range(d1..).skip(1) {
            if crosses(d1, d2) {
                return Err(GeometryError::Crossing(*d1, *d2));
            }
        }
    }
    Ok(Dissection { n, diagonals })
}

/// One piece of a dissected polygon. Vertices are stored in increasing
/// order, which is their cyclic order read from the smallest label.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Cell {
    vertices: Vec<usize>,
}

impl Cell {
    /// Builds a cell from any cyclically ordered vertex list of at least
    /// three distinct vertices.
    pub fn new(vertices: impl IntoIterator<Item = usize>) -> Option<Self> {
        let mut vertices: Vec<usize> = vertices.into_iter().collect();
        let len = vertices.len();
        let start = (0..len).min_by_key(|&k| vertices[k])?;
        vertices.rotate_left(start);
        let increasing = vertices.windows(2).all(|w| w[0] < w[1]);
        (len >= 3 && increasing).then_some(Self { vertices })
    }

    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn contains_vertex(&self, v: usize) -> bool {
        self.vertices.binary_search(&v).is_ok()
    }

    /// Whether both endpoints are vertices of this cell.
    pub fn contains(&self, d: &Diagonal) -> bool {
        self.contains_vertex(d.a) && self.contains_vertex(d.b)
    }

    /// 1-based position of `v` in the cell, if present.
    pub fn local_label(&self, v: usize) -> Option<usize> {
        self.vertices.binary_search(&v).ok().map(|k| k + 1)
    }

    /// Polygon vertex carrying local label `k` (1-based).
    pub fn global_label(&self, k: usize) -> usize {
        self.vertices[k - 1]
    }

    /// Converts a diagonal between two cell vertices to cell-local labels.
    pub fn to_local(&self, d: &Diagonal) -> Option<Diagonal> {
        Some(Diagonal::new(self.local_label(d.a)?, self.local_label(d.b)?))
    }

    pub fn to_global(&self, d: &Diagonal) -> Diagonal {
        Diagonal::new(self.global_label(d.a), self.global_label(d.b))
    }

    /// The sides of the cell in polygon labels.
    pub fn sides(&self) -> Vec<Diagonal> {
        let m = self.vertices.len();
        (0..m)
            .map(|k| Diagonal::new(self.vertices[k], self.vertices[(k + 1) % m]))
            .collect()
    }

    /// Every pair of cell vertices, in polygon labels.
    pub fn diagonals(&self) -> Vec<Diagonal> {
        all_diagonals(self.len()).iter().map(|d| self.to_global(d)).collect()
    }
}

impl fmt::Display for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let vs: Vec<String> = self.vertices.iter().map(|v| v.to_string()).collect();
        write!(f, "[{}]", vs.join(","))
    }
}

/// Cuts the polygon along every diagonal of `diss`.
///
/// Returns `|D| + 1` cells sorted by smallest vertex (ties broken
/// lexicographically).
pub fn split_polygon(diss: &Dissection) -> Vec<Cell> {
    let mut cells = Vec::with_capacity(diss.len() + 1);
    let mut stack = vec![(1..=diss.n).collect::<Vec<usize>>()];
    while let Some(vs) = stack.pop() {
        let m = vs.len();
        let cut = diss
            .iter()
            .find(|d| match (vs.binary_search(&d.a), vs.binary_search(&d.b)) {
                (Ok(i), Ok(j)) => j - i != 1 && !(i == 0 && j == m - 1),
                _ => false,
            });
        match cut {
            None => cells.push(Cell { vertices: vs }),
            Some(d) => {
                let inner: Vec<usize> = vs.iter().copied().filter(|&v| d.a <= v && v <= d.b).collect();
                let outer: Vec<usize> = vs.iter().copied().filter(|&v| v <= d.a || d.b <= v).collect();
                stack.push(inner);
                stack.push(outer);
            }
        }
    }
    cells.sort();
    cells
}

/// The diagonals of `diss` that cross `d`, ordered along `d` starting from
/// its endpoint `d.a()`.
pub fn crossed_by(d: &Diagonal, diss: &Dissection) -> Vec<Diagonal> {
    let n = diss.n;
    // distances measured from d.a forwards (inside arc) and backwards (outside arc)
    let fwd = |v: usize| (v + n - d.a) % n;
    let bwd = |v: usize| (d.a + n - v) % n;
    let mut hits: Vec<(usize, usize, Diagonal)> = diss
        .iter()
        .filter(|e| crosses(d, e))
        .map(|e| {
            let (inside, outside) = if d.a < e.a && e.a < d.b { (e.a, e.b) } else { (e.b, e.a) };
            (fwd(inside), bwd(outside), *e)
        })
        .collect();
    hits.sort();
    hits.into_iter().map(|(_, _, e)| e).collect()
}

/// Every dissection of the `n`-gon, including the empty one.
pub fn all_dissections(n: usize) -> Result<Vec<Dissection>, GeometryError> {
    check_n(n)?;
    let candidates = internal_diagonals(n);
    let mut out = Vec::new();
    let mut chosen: Vec<Diagonal> = Vec::new();
    fn extend(n: usize, from: usize, candidates: &[Diagonal], chosen: &mut Vec<Diagonal>, out: &mut Vec<Dissection>) {
        out.push(Dissection {
            n,
            diagonals: chosen.iter().copied().collect(),
        });
        for k in from..candidates.len() {
            let d = candidates[k];
            if chosen.iter().all(|c| !crosses(c, &d)) {
                chosen.push(d);
                extend(n, k + 1, candidates, chosen, out);
                chosen.pop();
            }
        }
    }
    extend(n, 0, &candidates, &mut chosen, &mut out);
    Ok(out)
}

/// Every triangulation of the `n`-gon, by the Catalan recursion on the apex
/// of the triangle over the edge `{1, n}`.
pub fn all_triangulations(n: usize) -> Result<Vec<Dissection>, GeometryError> {
    check_n(n)?;
    fn tri(lo: usize, hi: usize) -> Vec<Vec<Diagonal>> {
        // triangulations of the sub-polygon lo, lo+1, ..., hi
        if hi - lo < 2 {
            return vec![Vec::new()];
        }
        let mut out = Vec::new();
        for apex in lo + 1..hi {
            let left = tri(lo, apex);
            let right = tri(apex, hi);
            for l in &left {
                for r in &right {
                    let mut ds = l.clone();
                    ds.extend(r.iter().copied());
                    if apex - lo > 1 {
                        ds.push(Diagonal::new(lo, apex));
                    }
                    if hi - apex > 1 {
                        ds.push(Diagonal::new(apex, hi));
                    }
                    out.push(ds);
                }
            }
        }
        out
    }
    Ok(tri(1, n)
        .into_iter()
        .map(|ds| Dissection {
            n,
            diagonals: ds.into_iter().collect(),
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn dg(a: usize, b: usize) -> Diagonal {
        Diagonal::new(a, b)
    }

    /// Definition-level crossing: walk the cycle from i and record the order
    /// in which the other three endpoints appear.
    fn crossing_by_walk(d1: Diagonal, d2: Diagonal, n: usize) -> bool {
        let (i, j) = d1.endpoints();
        let (k, l) = d2.endpoints();
        if [k, l].contains(&i) || [k, l].contains(&j) {
            return false;
        }
        let order: Vec<usize> = (0..n)
            .map(|t| (i - 1 + t) % n + 1)
            .filter(|v| [j, k, l].contains(v))
            .collect();
        order[1] == j
    }

    #[test]
    fn internal_examples() {
        assert_eq!(is_internal(&dg(1, 5), 8), Ok(true));
        assert_eq!(is_internal(&dg(8, 1), 8), Ok(false));
        for d in all_diagonals(3) {
            assert_eq!(is_internal(&d, 3), Ok(false));
        }
        assert_eq!(
            is_internal(&dg(2, 9), 8),
            Err(GeometryError::InvalidVertex { vertex: 9, n: 8 })
        );
        assert_eq!(Diagonal::try_new(3, 3), Err(GeometryError::Degenerate(3)));
    }

    #[test]
    fn crossing_examples() {
        assert_eq!(crossing(&dg(1, 3), &dg(2, 4), 4), Ok(true));
        assert_eq!(crossing(&dg(1, 2), &dg(2, 4), 6), Ok(false));
        assert_eq!(crossing(&dg(1, 4), &dg(2, 6), 6), Ok(true));
    }

    #[test]
    fn crossing_matches_cyclic_walk_exhaustively() {
        for n in 3..=9 {
            let ds = all_diagonals(n);
            for d1 in &ds {
                for d2 in &ds {
                    assert_eq!(
                        crossing(d1, d2, n).unwrap(),
                        crossing_by_walk(*d1, *d2, n),
                        "{d1} {d2} n={n}"
                    );
                }
            }
        }
    }

    #[test]
    fn crossing_symmetry_and_dihedral_invariance() {
        let n = 9;
        let ds = all_diagonals(n);
        for d1 in &ds {
            assert!(!crosses(d1, d1));
            for d2 in &ds {
                let c = crosses(d1, d2);
                assert_eq!(c, crosses(d2, d1));
                assert_eq!(c, crosses(&d1.reflect(n), &d2.reflect(n)));
                for k in 0..n {
                    assert_eq!(c, crosses(&d1.rotate(k, n), &d2.rotate(k, n)));
                }
            }
        }
    }

    #[test]
    fn validate_examples() {
        assert!(validate_dissection(8, [dg(1, 4), dg(5, 8)]).is_ok());
        assert_eq!(
            validate_dissection(8, [dg(1, 4), dg(2, 6)]),
            Err(GeometryError::Crossing(dg(1, 4), dg(2, 6)))
        );
        assert!(validate_dissection(5, []).unwrap().is_empty());
        assert_eq!(
            validate_dissection(5, [dg(1, 2)]),
            Err(GeometryError::NotInternal(dg(1, 2)))
        );
        assert_eq!(validate_dissection(2, []), Err(GeometryError::TooFewVertices(2)));
    }

    #[test]
    fn split_examples() {
        let d = validate_dissection(8, [dg(1, 4), dg(5, 8)]).unwrap();
        let cells = split_polygon(&d);
        let expect = [vec![1, 2, 3, 4], vec![4, 5, 8, 1], vec![5, 6, 7, 8]];
        assert_eq!(cells, expect.map(|v| Cell::new(v).unwrap()).to_vec());

        let d = validate_dissection(4, [dg(1, 3)]).unwrap();
        assert_eq!(
            split_polygon(&d),
            vec![Cell::new([1, 2, 3]).unwrap(), Cell::new([1, 3, 4]).unwrap()]
        );
        let d = Dissection::empty(6).unwrap();
        assert_eq!(split_polygon(&d), vec![Cell::new(1..=6).unwrap()]);
    }

    #[test]
    fn split_tiles_every_dissection() {
        for n in 3..=8 {
            for d in all_dissections(n).unwrap() {
                let cells = split_polygon(&d);
                assert_eq!(cells.len(), d.len() + 1);
                assert_eq!(cells.iter().map(Cell::len).sum::<usize>(), n + 2 * d.len());
                for e in boundary_edges(n) {
                    assert_eq!(cells.iter().filter(|c| c.sides().contains(&e)).count(), 1);
                }
                for g in d.iter() {
                    assert_eq!(cells.iter().filter(|c| c.sides().contains(g)).count(), 2);
                }
                assert!(d.len() <= n - 3);
                assert_eq!(d.len() == n - 3, cells.iter().all(|c| c.len() == 3));
            }
        }
    }

    #[test]
    fn crossed_by_examples() {
        let d = validate_dissection(8, [dg(1, 4), dg(5, 8)]).unwrap();
        assert_eq!(crossed_by(&dg(2, 6), &d), vec![dg(1, 4), dg(5, 8)]);
        assert!(crossed_by(&dg(1, 4), &d).is_empty());
        assert!(crossed_by(&dg(2, 4), &d).is_empty());
        // walked from the other side the order flips
        assert_eq!(crossed_by(&dg(3, 7), &d), vec![dg(1, 4), dg(5, 8)]);
        let fan = validate_dissection(7, [dg(1, 3), dg(1, 4), dg(1, 5), dg(1, 6)]).unwrap();
        assert_eq!(
            crossed_by(&dg(2, 7), &fan),
            vec![dg(1, 3), dg(1, 4), dg(1, 5), dg(1, 6)]
        );
        assert_eq!(crossed_by(&dg(2, 5), &fan), vec![dg(1, 3), dg(1, 4)]);
    }

    #[test]
    fn enumeration_counts() {
        // little Schröder numbers and Catalan numbers
        let schroeder = [1, 3, 11, 45, 197, 903];
        let catalan = [1, 2, 5, 14, 42, 132, 429];
        for (k, &c) in schroeder.iter().enumerate() {
            let all = all_dissections(k + 3).unwrap();
            assert_eq!(all.len(), c);
            let distinct: BTreeSet<Vec<Diagonal>> = all.iter().map(|d| d.iter().copied().collect()).collect();
            assert_eq!(distinct.len(), c);
        }
        for (k, &c) in catalan.iter().enumerate() {
            let ts = all_triangulations(k + 3).unwrap();
            assert_eq!(ts.len(), c);
            for t in &ts {
                assert!(t.is_triangulation());
                assert!(validate_dissection(t.n(), t.iter().copied()).is_ok());
            }
        }
    }

    #[test]
    fn diagonal_index_is_position_in_enumeration() {
        for n in 3..=10 {
            for (k, d) in all_diagonals(n).iter().enumerate() {
                assert_eq!(d.index(n), k);
            }
        }
    }
}
