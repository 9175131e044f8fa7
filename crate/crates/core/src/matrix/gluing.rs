//! Determinant factorization along one gluing diagonal.
//!
//! For a weak frieze `f` with respect to `{d}` on a polygon split by `d` into
//! cells `P` and `Q`,
//!
//! ```text
//! det(M_f) = -f(d)^-2 · det(M_fP) · det(M_fQ).
//! ```
//!
//! [`structured_reduction`] carries out the row reduction behind that identity
//! and checks that the expected zeros appear.

use crate::frieze::{restrict, WeakFrieze};
use crate::geometry::{split_polygon, validate_dissection, Diagonal, GeometryError};
use crate::scalar::Scalar;

use super::{frieze_matrix, FriezeMatrix, MatrixError, SquareMatrix};

/// Both sides of the factorization identity for one diagonal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GlueDetCheck {
    pub lhs: Scalar,
    pub rhs: Scalar,
    pub pass: bool,
    /// `f(d)`.
    pub c: Scalar,
    pub det_p: Scalar,
    pub det_q: Scalar,
}

/// Cells `(P, Q)` of the split along `d`, `P` being the side with `a < v < b`.
fn split(f: &WeakFrieze, d: &Diagonal) -> Result<(WeakFrieze, WeakFrieze), MatrixError> {
    let n = f.n();
    d.check(n)?;
    let cells = split_polygon(&validate_dissection(n, [*d])?);
    let (p, q) = if cells[0].contains_vertex(d.a() + 1) {
        (&cells[0], &cells[1])
    } else {
        (&cells[1], &cells[0])
    };
    Ok((restrict(f, p)?, restrict(f, q)?))
}

fn gluing_value(f: &WeakFrieze, d: &Diagonal) -> Result<Scalar, MatrixError> {
    let c = f.get(d).clone();
    if c.is_zero() {
        return Err(MatrixError::ZeroGluingValue(*d));
    }
    Ok(c)
}

/// Compares `det(M_f)` with `-f(d)^-2 · det(M_fP) · det(M_fQ)`.
///
/// `f` is not required to be a weak frieze with respect to `{d}`; when it is
/// not, the check usually reports `pass == false`.
pub fn glue_det_check(f: &WeakFrieze, d: &Diagonal) -> Result<GlueDetCheck, MatrixError> {
    let (fp, fq) = split(f, d)?;
    let c = gluing_value(f, d)?;
    let lhs = frieze_matrix(f).det();
    let det_p = frieze_matrix(&fp).det();
    let det_q = frieze_matrix(&fq).det();
    let rhs = -(&(&det_p * &det_q) / &(&c * &c));
    Ok(GlueDetCheck {
        pass: lhs == rhs,
        lhs,
        rhs,
        c,
        det_p,
        det_q,
    })
}

/// The frieze matrix after the gluing row operations.
///
/// Rows and columns are listed in the order of [`order`](Self::order): first
/// the `r - 2` vertices strictly inside `P`, then the endpoints `b` and `a`
/// of the gluing diagonal, then the vertices strictly inside `Q` in cyclic
/// order. In this order `M_f` has `M_fP` as its leading `r × r` block and
/// `M_fQ` as its trailing block, overlapping in the two endpoint rows.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StructuredReduction {
    order: Vec<usize>,
    original: SquareMatrix,
    reduced: SquareMatrix,
    r: usize,
    c: Scalar,
}

impl StructuredReduction {
    /// Position `k` holds the original (1-based) label of row/column `k`.
    pub fn order(&self) -> &[usize] {
        &self.order
    }

    /// `M_f` with rows and columns permuted into [`order`](Self::order).
    pub fn permuted(&self) -> &SquareMatrix {
        &self.original
    }

    /// The reduced matrix, in the permuted order.
    pub fn reduced(&self) -> &SquareMatrix {
        &self.reduced
    }

    /// Number of vertices of `P`.
    pub fn r(&self) -> usize {
        self.r
    }

    pub fn c(&self) -> &Scalar {
        &self.c
    }

    /// The leading `(r-2) × (r-2)` block of the reduced matrix.
    pub fn m_prime(&self) -> SquareMatrix {
        let idx: Vec<usize> = (0..self.r - 2).collect();
        self.reduced.select(&idx, &idx)
    }

    /// The leading `r × r` block of the reduced matrix, obtained from `M_fP`
    /// by row operations.
    pub fn reduced_p(&self) -> SquareMatrix {
        let idx: Vec<usize> = (0..self.r).collect();
        self.reduced.select(&idx, &idx)
    }

    /// The trailing block, equal to `M_fQ` up to relabeling.
    pub fn q_block(&self) -> SquareMatrix {
        let idx: Vec<usize> = (self.r - 2..self.order.len()).collect();
        self.reduced.select(&idx, &idx)
    }

    /// `det(M̃') · det(M_fQ)`, which equals `det(M_f)`.
    pub fn block_det(&self) -> Scalar {
        self.m_prime().det() * self.q_block().det()
    }

    /// `det(M̃') · (-c²)`, which equals `det(M_fP)`.
    pub fn p_det(&self) -> Scalar {
        -(self.m_prime().det() * &self.c * &self.c)
    }
}

/// Replaces each row `i` inside `P` by
/// `x_i - (x_{i,b}/c)·x_a - (x_{i,a}/c)·x_b` and checks that the result
/// vanishes on columns `a`, `b` and every column inside `Q`.
///
/// The first nonzero entry found is reported as
/// [`MatrixError::ClaimViolated`] with original vertex labels; this happens
/// exactly when `f` breaks a Ptolemy relation for a diagonal crossing `d`.
pub fn structured_reduction(f: &WeakFrieze, d: &Diagonal) -> Result<StructuredReduction, MatrixError> {
    let n = f.n();
    if !matches!(crate::geometry::is_internal(d, n), Ok(true)) {
        d.check(n)?;
        return Err(GeometryError::NotInternal(*d).into());
    }
    let c = gluing_value(f, d)?;
    let (a, b) = d.endpoints();
    let order: Vec<usize> = (a + 1..b).chain([b, a]).chain(b + 1..=n).chain(1..a).collect();
    let r = b - a + 1;
    let m: &FriezeMatrix = &frieze_matrix(f);
    let original = m.matrix().select(
        &order.iter().map(|v| v - 1).collect::<Vec<_>>(),
        &order.iter().map(|v| v - 1).collect::<Vec<_>>(),
    );

    // in permuted positions: b sits at r-2, a at r-1
    let (pb, pa) = (r - 2, r - 1);
    let mut rows: Vec<Vec<Scalar>> = (0..n).map(|i| original.row(i).to_vec()).collect();
    for i in 0..r - 2 {
        let alpha = original.get(i, pb) / &c;
        let beta = original.get(i, pa) / &c;
        rows[i] = (0..n)
            .map(|j| original.get(i, j) - &(&alpha * original.get(pa, j)) - &beta * original.get(pb, j))
            .collect();
        if let Some(j) = (r - 2..n).find(|&j| !rows[i][j].is_zero()) {
            return Err(MatrixError::ClaimViolated {
                row: order[i],
                col: order[j],
            });
        }
    }
    let reduced = SquareMatrix::from_rows(original.kind(), rows).expect("same shape and kind");
    Ok(StructuredReduction {
        order,
        original,
        reduced,
        r,
        c,
    })
}
