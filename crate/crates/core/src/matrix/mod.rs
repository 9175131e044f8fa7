//! Weak frieze matrices and their determinants.
//!
//! Matrices are indexed from 0; row/column `k` of a frieze matrix belongs to
//! polygon vertex `k + 1`.

mod det;
mod gluing;

use std::fmt;

use thiserror::Error;

use crate::frieze::{FriezeError, WeakFrieze};
use crate::geometry::{Diagonal, GeometryError};
use crate::scalar::{Scalar, ScalarKind};

pub use det::{det_bareiss, det_leibniz, LEIBNIZ_MAX};
pub use gluing::{glue_det_check, structured_reduction, GlueDetCheck, StructuredReduction};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MatrixError {
    #[error("Leibniz expansion is limited to {LEIBNIZ_MAX}x{LEIBNIZ_MAX}, got {0}x{0}")]
    TooLarge(usize),
    #[error("expected {expected} entries, got {got}")]
    Shape { expected: usize, got: usize },
    #[error("entries mix rational and symbolic scalars")]
    MixedKinds,
    #[error("entry ({0},{1}) differs from entry ({1},{0})")]
    NotSymmetric(usize, usize),
    #[error("diagonal entry ({0},{0}) is not zero")]
    NonzeroDiagonal(usize),
    #[error("gluing diagonal {0} carries the value zero")]
    ZeroGluingValue(Diagonal),
    #[error("reduced entry at row {row}, column {col} is not zero")]
    ClaimViolated { row: usize, col: usize },
    #[error(transparent)]
    Geometry(#[from] GeometryError),
    #[error(transparent)]
    Frieze(#[from] FriezeError),
}

/// Dense square matrix of scalars of one kind, row-major.
#[derive(Clone, PartialEq, Eq)]
pub struct SquareMatrix {
    n: usize,
    kind: ScalarKind,
    entries: Vec<Scalar>,
}

impl SquareMatrix {
    pub fn new(kind: ScalarKind, n: usize, entries: Vec<Scalar>) -> Result<Self, MatrixError> {
        if entries.len() != n * n {
            return Err(MatrixError::Shape {
                expected: n * n,
                got: entries.len(),
            });
        }
        if entries.iter().any(|e| e.kind() != kind) {
            return Err(MatrixError::MixedKinds);
        }
        Ok(Self { n, kind, entries })
    }

    pub fn from_fn(kind: ScalarKind, n: usize, mut f: impl FnMut(usize, usize) -> Scalar) -> Result<Self, MatrixError> {
        let entries = (0..n * n).map(|k| f(k / n, k % n)).collect();
        Self::new(kind, n, entries)
    }

    pub fn from_rows(kind: ScalarKind, rows: Vec<Vec<Scalar>>) -> Result<Self, MatrixError> {
        let n = rows.len();
        let entries: Vec<Scalar> = rows.into_iter().flatten().collect();
        Self::new(kind, n, entries)
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn kind(&self) -> ScalarKind {
        self.kind
    }

    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        &self.entries[i * self.n + j]
    }

    pub fn row(&self, i: usize) -> &[Scalar] {
        &self.entries[i * self.n..(i + 1) * self.n]
    }

    /// The submatrix on the given rows and columns, in the given order.
    pub fn select(&self, rows: &[usize], cols: &[usize]) -> SquareMatrix {
        assert_eq!(rows.len(), cols.len(), "select needs a square block");
        let entries = rows
            .iter()
            .flat_map(|&i| cols.iter().map(move |&j| self.get(i, j).clone()))
            .collect();
        SquareMatrix {
            n: rows.len(),
            kind: self.kind,
            entries,
        }
    }

    pub fn det(&self) -> Scalar {
        det_bareiss(self)
    }
}

impl fmt::Debug for SquareMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Rows on separate lines, entries right-aligned in columns.
impl fmt::Display for SquareMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cells: Vec<String> = self.entries.iter().map(|e| e.to_string()).collect();
        let width = cells.iter().map(|s| s.chars().count()).max().unwrap_or(1);
        for row in cells.chunks(self.n.max(1)) {
            let line: Vec<String> = row.iter().map(|s| format!("{s:>width$}")).collect();
            writeln!(f, "{}", line.join(" "))?;
        }
        Ok(())
    }
}

/// Symmetric matrix with zero diagonal.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FriezeMatrix(SquareMatrix);

impl FriezeMatrix {
    pub fn try_from_matrix(m: SquareMatrix) -> Result<Self, MatrixError> {
        for i in 0..m.n {
            if !m.get(i, i).is_zero() {
                return Err(MatrixError::NonzeroDiagonal(i));
            }
            for j in i + 1..m.n {
                if m.get(i, j) != m.get(j, i) {
                    return Err(MatrixError::NotSymmetric(i, j));
                }
            }
        }
        Ok(Self(m))
    }

    pub fn matrix(&self) -> &SquareMatrix {
        &self.0
    }

    pub fn into_matrix(self) -> SquareMatrix {
        self.0
    }

    pub fn size(&self) -> usize {
        self.0.n
    }

    /// Entry `(i, j)` with 1-based vertex labels.
    pub fn entry(&self, i: usize, j: usize) -> &Scalar {
        self.0.get(i - 1, j - 1)
    }

    pub fn det(&self) -> Scalar {
        det_bareiss(&self.0)
    }
}

/// `m(i,j) = f(i,j)` off the diagonal and `0` on it.
pub fn frieze_matrix(f: &WeakFrieze) -> FriezeMatrix {
    let n = f.n();
    let kind = f.kind();
    let m = SquareMatrix::from_fn(kind, n, |i, j| {
        if i == j {
            Scalar::zero(kind)
        } else {
            f.value(i + 1, j + 1).clone()
        }
    })
    .expect("frieze values share one kind");
    FriezeMatrix(m)
}
