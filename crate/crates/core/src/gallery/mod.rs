//! Families of friezes with known determinants, and seeded generators.
//!
//! * constant friezes and friezes glued from constant-1 pieces, whose
//!   determinant is `(-1)^(n-1) Π (d_i - 1)` over the cell sizes `d_i`;
//! * Conway–Coxeter friezes of triangulations, determinant `-(-2)^(n-2)`;
//! * the symbolic frieze of cluster variables of a triangulation, determinant
//!   `-(-2)^(n-2)` times the product of the boundary edge values;
//! * frieze matrices with coefficients satisfying the generalized diamond rule.

mod random;

use thiserror::Error;

use crate::frieze::{glue, Piece, WeakFrieze};
use crate::geometry::{boundary_edges, split_polygon, validate_dissection, Diagonal, Dissection, GeometryError};
use crate::matrix::{frieze_matrix, FriezeMatrix};
use crate::scalar::{Rational, Scalar, ScalarKind};

pub use random::{random_dissection, random_evaluation, random_nonzero_rational, random_weak_frieze, DissectionMode};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GalleryError {
    #[error("cell sizes {cells:?} do not tile an {n}-gon")]
    SizeMismatch { n: usize, cells: Vec<usize> },
    #[error("the dissection is not a triangulation")]
    NotTriangulation,
    #[error("entry ({0},{1}) is zero off the diagonal")]
    ZeroOffDiagonal(usize, usize),
    #[error("the generalized diamond rule fails in {0} place(s)")]
    DiamondRuleViolated(usize),
    #[error(transparent)]
    Geometry(#[from] GeometryError),
}

/// Every diagonal of the `n`-gon carries `v`; the dissection is empty.
pub fn constant_frieze(n: usize, v: Scalar) -> Result<WeakFrieze, GalleryError> {
    let empty = Dissection::empty(n)?;
    Ok(WeakFrieze::from_fn(empty, |_| v.clone()).expect("one value per diagonal"))
}

/// The weak frieze glued from constant-1 friezes on the cells of `d`. For a
/// triangulation this is its Conway–Coxeter frieze.
pub fn dissection_frieze(d: &Dissection) -> WeakFrieze {
    let pieces: Vec<Piece> = split_polygon(d)
        .into_iter()
        .map(|c| {
            let f =
                constant_frieze(c.len(), Scalar::one(ScalarKind::Rational)).expect("cells have at least 3 vertices");
            Piece::new(c, f).expect("sizes agree")
        })
        .collect();
    glue(d, &pieces).expect("constant-1 pieces glue")
}

/// Vertex counts of the cells of `d`, in cell order.
pub fn cell_sizes(d: &Dissection) -> Vec<usize> {
    split_polygon(d).iter().map(|c| c.len()).collect()
}

/// `(-1)^(n-1) · Π (d_i - 1)` for a polygon glued from cells with `d_i`
/// vertices.
pub fn bhj_det_formula(n: usize, cells: &[usize]) -> Result<Scalar, GalleryError> {
    let mismatch = || GalleryError::SizeMismatch {
        n,
        cells: cells.to_vec(),
    };
    if cells.is_empty() || cells.iter().any(|&d| d < 3) {
        return Err(mismatch());
    }
    if cells.iter().sum::<usize>() != n + 2 * (cells.len() - 1) {
        return Err(mismatch());
    }
    let prod: i64 = cells.iter().map(|&d| d as i64 - 1).product();
    let sign = if n % 2 == 1 { 1 } else { -1 };
    Ok(Scalar::from_int(ScalarKind::Rational, sign * prod))
}

/// A dissection whose cells have the given sizes, in a fan around vertex 1:
/// cell `k` is glued to cell `k-1` along a diagonal from vertex 1.
pub fn chain_dissection(cells: &[usize]) -> Result<Dissection, GalleryError> {
    let n = (cells.iter().sum::<usize>() + 2).saturating_sub(2 * cells.len());
    bhj_det_formula(n, cells)?;
    let mut diagonals = Vec::new();
    let mut last = 1 + cells[0] - 1;
    for &d in &cells[1..] {
        diagonals.push(Diagonal::new(1, last));
        last += d - 2;
    }
    Ok(validate_dissection(n, diagonals)?)
}

/// Name of the indeterminate on `{i, j}` in [`baur_marsh_frieze`].
pub fn bm_variable(d: &Diagonal) -> String {
    format!("x_{}_{}", d.a(), d.b())
}

/// The indeterminates of [`baur_marsh_frieze`] for `t`: boundary edges and
/// the diagonals of `t`, sorted by name.
pub fn bm_variables(t: &Dissection) -> Vec<String> {
    let mut names: Vec<String> = boundary_edges(t.n()).iter().chain(t.iter()).map(bm_variable).collect();
    names.sort();
    names
}

/// The frieze of cluster variables of a triangulation: one indeterminate
/// `x_i_j` per boundary edge and per diagonal of `t`; all other values follow
/// by gluing the triangles.
pub fn baur_marsh_frieze(t: &Dissection) -> Result<WeakFrieze, GalleryError> {
    if !t.is_triangulation() {
        return Err(GalleryError::NotTriangulation);
    }
    let pieces: Vec<Piece> = split_polygon(t)
        .into_iter()
        .map(|c| {
            let tri = Dissection::empty(3).expect("triangle");
            let f = WeakFrieze::from_fn(tri, |d| Scalar::var(&bm_variable(&c.to_global(&d)))).expect("three values");
            Piece::new(c, f).expect("sizes agree")
        })
        .collect();
    Ok(glue(t, &pieces).expect("indeterminates are nonzero"))
}

/// `-(-2)^(n-2)` times the product of `f` over the boundary edges.
pub fn bm_det_formula(f: &WeakFrieze) -> Scalar {
    let n = f.n();
    let mut out = Scalar::from_int(f.kind(), -(-2i64).pow(n as u32 - 2));
    for e in boundary_edges(n) {
        out = &out * f.get(&e);
    }
    out
}

/// A frieze matrix whose off-diagonal entries are all nonzero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MaldonadoMatrix(FriezeMatrix);

impl MaldonadoMatrix {
    pub fn new(m: FriezeMatrix) -> Result<Self, GalleryError> {
        let n = m.size();
        for i in 1..=n {
            for j in i + 1..=n {
                if m.entry(i, j).is_zero() {
                    return Err(GalleryError::ZeroOffDiagonal(i, j));
                }
            }
        }
        Ok(Self(m))
    }

    pub fn from_frieze(f: &WeakFrieze) -> Result<Self, GalleryError> {
        Self::new(frieze_matrix(f))
    }

    pub fn matrix(&self) -> &FriezeMatrix {
        &self.0
    }

    pub fn size(&self) -> usize {
        self.0.size()
    }

    /// `c(i,j)`, 1-based.
    pub fn c(&self, i: usize, j: usize) -> &Scalar {
        self.0.entry(i, j)
    }
}

/// A failure of `c(i,j)c(i+1,j+1) - c(i+1,j)c(i,j+1) = c(i,i+1)c(j,j+1)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DiamondViolation {
    pub i: usize,
    pub j: usize,
    pub lhs: Scalar,
    pub rhs: Scalar,
}

/// The generalized diamond rule for `1 <= i < j <= n-1`. The last column is
/// not part of the rule.
pub fn maldonado_check(m: &MaldonadoMatrix) -> Vec<DiamondViolation> {
    let n = m.size();
    let c = |i, j| m.c(i, j);
    let mut out = Vec::new();
    for i in 1..n.saturating_sub(1) {
        for j in i + 1..n {
            let lhs = c(i, j) * c(i + 1, j + 1) - c(i + 1, j) * c(i, j + 1);
            let rhs = c(i, i + 1) * c(j, j + 1);
            if lhs != rhs {
                out.push(DiamondViolation { i, j, lhs, rhs });
            }
        }
    }
    out
}

/// `-(-2)^(n-2) · c(1,n) · Π c(i,i+1)`, once the diamond rule is known to hold.
pub fn maldonado_det_formula(m: &MaldonadoMatrix) -> Result<Scalar, GalleryError> {
    let bad = maldonado_check(m);
    if !bad.is_empty() {
        return Err(GalleryError::DiamondRuleViolated(bad.len()));
    }
    let n = m.size();
    let kind = m.matrix().matrix().kind();
    let mut out = Scalar::from_int(kind, -(-2i64).pow(n as u32 - 2)) * m.c(1, n);
    for i in 1..n {
        out = &out * m.c(i, i + 1);
    }
    Ok(out)
}

/// A failure of `c(i,n)c(1,i+1) - c(i+1,n)c(1,i) = c(i,i+1)c(1,n)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OverlapFailure {
    pub i: usize,
    pub lhs: Scalar,
    pub rhs: Scalar,
}

/// The 2×2 determinants across the overlap of the last column and first row,
/// for `1 <= i <= n-1`.
pub fn overlap_identity_check(m: &MaldonadoMatrix) -> Vec<OverlapFailure> {
    let n = m.size();
    let c = |i, j| m.c(i, j);
    (1..n)
        .filter_map(|i| {
            let lhs = c(i, n) * c(1, i + 1) - c(i + 1, n) * c(1, i);
            let rhs = c(i, i + 1) * c(1, n);
            (lhs != rhs).then_some(OverlapFailure { i, lhs, rhs })
        })
        .collect()
}

/// Substitutes rationals for the indeterminates of every value of `f`.
/// `None` if some denominator vanishes or a name has no value.
pub fn evaluate_frieze(f: &WeakFrieze, point: &dyn Fn(&str) -> Option<Rational>) -> Option<WeakFrieze> {
    let values: Option<Vec<Scalar>> = f.iter().map(|(_, v)| v.evaluate(point)).collect();
    WeakFrieze::new(f.dissection().clone(), values?).ok()
}
