//! Weak friezes on dissected polygons.
//!
//! A [`WeakFrieze`] assigns a [`Scalar`] to every diagonal of an `n`-gon,
//! boundary edges included, together with a dissection `D`. It is a weak
//! frieze with respect to `D` when every Ptolemy relation involving a diagonal
//! of `D` holds, and a frieze when all Ptolemy relations hold.

mod glue;
mod pattern;

use std::fmt;

use thiserror::Error;

use crate::geometry::{all_diagonals, crossed_by, Cell, Diagonal, Dissection, GeometryError};
use crate::scalar::{Scalar, ScalarKind};

pub use glue::{glue, glue_via, Piece, Pivot};
pub use pattern::{check_local_rule, pattern_entry, render_pattern, LocalRuleViolation, PatternWindow};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FriezeError {
    #[error("gluing diagonal {0} carries the value zero")]
    ZeroGluingValue(Diagonal),
    #[error("pieces disagree on the value of {0}")]
    ValueMismatch(Diagonal),
    #[error("pieces do not match the cells of the gluing dissection: {0}")]
    PieceMismatch(String),
    #[error("invalid cell: {0}")]
    InvalidCell(String),
    #[error("expected {expected} values, got {got}")]
    WrongValueCount { expected: usize, got: usize },
    #[error("values mix rational and symbolic scalars")]
    MixedKinds,
    #[error(transparent)]
    Geometry(#[from] GeometryError),
}

/// Values on all diagonals of an `n`-gon, with a designated dissection.
#[derive(Clone, PartialEq, Eq)]
pub struct WeakFrieze {
    dissection: Dissection,
    values: Vec<Scalar>,
}

impl WeakFrieze {
    /// `values` are listed in [`all_diagonals`] order.
    pub fn new(dissection: Dissection, values: Vec<Scalar>) -> Result<Self, FriezeError> {
        let n = dissection.n();
        let expected = n * (n - 1) / 2;
        if values.len() != expected {
            return Err(FriezeError::WrongValueCount {
                expected,
                got: values.len(),
            });
        }
        let kind = values[0].kind();
        if values.iter().any(|v| v.kind() != kind) {
            return Err(FriezeError::MixedKinds);
        }
        Ok(Self { dissection, values })
    }

    pub fn from_fn(dissection: Dissection, mut f: impl FnMut(Diagonal) -> Scalar) -> Result<Self, FriezeError> {
        let values = all_diagonals(dissection.n()).into_iter().map(&mut f).collect();
        Self::new(dissection, values)
    }

    pub fn n(&self) -> usize {
        self.dissection.n()
    }

    pub fn dissection(&self) -> &Dissection {
        &self.dissection
    }

    pub fn kind(&self) -> ScalarKind {
        self.values[0].kind()
    }

    pub fn get(&self, d: &Diagonal) -> &Scalar {
        &self.values[d.index(self.n())]
    }

    /// `f(i, j)` for distinct vertices `i`, `j`.
    pub fn value(&self, i: usize, j: usize) -> &Scalar {
        self.get(&Diagonal::new(i, j))
    }

    /// `(diagonal, value)` pairs in lexicographic diagonal order.
    pub fn iter(&self) -> impl Iterator<Item = (Diagonal, &Scalar)> + '_ {
        all_diagonals(self.n()).into_iter().zip(self.values.iter())
    }

    /// Copy with one value replaced.
    pub fn with_value(&self, d: &Diagonal, v: Scalar) -> Self {
        let mut out = self.clone();
        out.values[d.index(self.n())] = v;
        out
    }

    /// Same values, different designated dissection.
    pub fn with_dissection(&self, dissection: Dissection) -> Result<Self, FriezeError> {
        Self::new(dissection, self.values.clone())
    }

    pub fn map_values(&self, f: impl FnMut(&Scalar) -> Scalar) -> Result<Self, FriezeError> {
        Self::new(self.dissection.clone(), self.values.iter().map(f).collect())
    }

    /// Relabels every vertex `v ↦ v + k (mod n)`.
    pub fn rotate(&self, k: usize) -> Self {
        let n = self.n();
        let mut values = self.values.clone();
        for (d, v) in self.iter() {
            values[d.rotate(k, n).index(n)] = v.clone();
        }
        Self {
            dissection: self.dissection.rotate(k),
            values,
        }
    }

    /// Relabels every vertex `v ↦ n + 1 - v`.
    pub fn reflect(&self) -> Self {
        let n = self.n();
        let mut values = self.values.clone();
        for (d, v) in self.iter() {
            values[d.reflect(n).index(n)] = v.clone();
        }
        Self {
            dissection: self.dissection.reflect(),
            values,
        }
    }
}

impl fmt::Debug for WeakFrieze {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut m = f.debug_map();
        for (d, v) in self.iter() {
            m.entry(&d.to_string(), v);
        }
        m.finish()
    }
}

/// A Ptolemy relation `f(d)·f(e) = f(a,k)·f(b,l) + f(a,l)·f(b,k)` that fails,
/// with `d = {a,b}` and `e = {k,l}` crossing.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PtolemyViolation {
    pub d: Diagonal,
    pub e: Diagonal,
    pub lhs: Scalar,
    pub rhs: Scalar,
}

impl fmt::Display for PtolemyViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} x {}: {} != {}", self.d, self.e, self.lhs, self.rhs)
    }
}

/// Both sides of the Ptolemy relation for the crossing pair `d`, `e`.
pub fn ptolemy_sides(f: &WeakFrieze, d: &Diagonal, e: &Diagonal) -> (Scalar, Scalar) {
    let (a, b) = d.endpoints();
    let (k, l) = e.endpoints();
    let lhs = f.get(d) * f.get(e);
    let rhs = f.value(a, k) * f.value(b, l) + f.value(a, l) * f.value(b, k);
    (lhs, rhs)
}

fn violation(f: &WeakFrieze, d: &Diagonal, e: &Diagonal) -> Option<PtolemyViolation> {
    let (lhs, rhs) = ptolemy_sides(f, d, e);
    (lhs != rhs).then_some(PtolemyViolation { d: *d, e: *e, lhs, rhs })
}

/// Ptolemy relations for crossings with a diagonal of `f`'s dissection.
/// An empty report means `f` is a weak frieze.
pub fn check_weak_frieze(f: &WeakFrieze) -> Vec<PtolemyViolation> {
    let n = f.n();
    let diss = f.dissection();
    let mut out = Vec::new();
    for d in diss.iter() {
        for e in all_diagonals(n) {
            if crate::geometry::crossing(d, &e, n).unwrap_or(false) {
                out.extend(violation(f, d, &e));
            }
        }
    }
    out
}

/// All Ptolemy relations. An empty report means `f` is a frieze.
pub fn check_frieze(f: &WeakFrieze) -> Vec<PtolemyViolation> {
    let n = f.n();
    let ds = all_diagonals(n);
    let mut out = Vec::new();
    for (k, d) in ds.iter().enumerate() {
        for e in &ds[k + 1..] {
            if crate::geometry::crossing(d, e, n).unwrap_or(false) {
                out.extend(violation(f, d, e));
            }
        }
    }
    out
}

/// The frieze on `cell`, relabelled `1..=|cell|` in cyclic order, with the
/// dissection induced by `f`'s.
pub fn restrict(f: &WeakFrieze, cell: &Cell) -> Result<WeakFrieze, FriezeError> {
    let n = f.n();
    if let Some(&v) = cell.vertices().iter().find(|&&v| v == 0 || v > n) {
        return Err(FriezeError::InvalidCell(format!("vertex {v} is not in the {n}-gon")));
    }
    let m = cell.len();
    let induced = f
        .dissection()
        .iter()
        .filter_map(|d| cell.to_local(d))
        .filter(|d| crate::geometry::is_internal(d, m).unwrap_or(false));
    let dissection = crate::geometry::validate_dissection(m, induced)?;
    WeakFrieze::from_fn(dissection, |d| f.get(&cell.to_global(&d)).clone())
}

/// Number of diagonals of `diss` crossing `d`.
pub fn crossing_count(d: &Diagonal, diss: &Dissection) -> usize {
    crossed_by(d, diss).len()
}
