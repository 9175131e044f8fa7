//! Weak friezes on dissected polygons: gluing along diagonals, frieze
//! patterns, and exact determinants of frieze matrices.
//!
//! Values are exact [`Scalar`]s, either rationals or rational functions in
//! named indeterminates. Polygon vertices are labelled `1..=n`.

pub mod frieze;
pub mod gallery;
pub mod geometry;
pub mod matrix;
#[cfg(feature = "oracle")]
pub mod oracle;
pub mod scalar;

pub use frieze::{
    check_frieze, check_local_rule, check_weak_frieze, glue, pattern_entry, render_pattern, restrict, FriezeError,
    Piece, PtolemyViolation, WeakFrieze,
};
pub use geometry::{split_polygon, validate_dissection, Cell, Diagonal, Dissection, GeometryError};
pub use matrix::{
    det_bareiss, det_leibniz, frieze_matrix, glue_det_check, structured_reduction, FriezeMatrix, MatrixError,
    SquareMatrix,
};
pub use scalar::{format_scalar, parse_scalar, Rational, Scalar, ScalarError, ScalarKind, Universe};
