//! Gluing weak friezes on the cells of a dissection into one weak frieze on
//! the whole polygon.

use crate::geometry::{all_diagonals, crossed_by, split_polygon, validate_dissection, Cell, Diagonal, Dissection};
use crate::scalar::Scalar;

use super::{FriezeError, WeakFrieze};

/// A cell of the gluing dissection with its own weak frieze, in cell-local
/// labels `1..=cell.len()`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Piece {
    pub cell: Cell,
    pub frieze: WeakFrieze,
}

impl Piece {
    pub fn new(cell: Cell, frieze: WeakFrieze) -> Result<Self, FriezeError> {
        if frieze.n() != cell.len() {
            return Err(FriezeError::PieceMismatch(format!(
                "cell {cell} has {} vertices but its frieze lives on a {}-gon",
                cell.len(),
                frieze.n()
            )));
        }
        Ok(Self { cell, frieze })
    }
}

/// Which crossed gluing diagonal a Ptolemy resolution goes through.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Pivot {
    /// The one nearest to the smaller endpoint of the diagonal being resolved.
    #[default]
    First,
    /// The one nearest to the larger endpoint.
    Last,
}

/// The unique weak frieze on the whole polygon restricting to every piece.
///
/// Values on diagonals inside a cell are copied from its piece. Every other
/// diagonal `{k,l}` crosses some gluing diagonal `{a,b}` and is resolved by
/// `f(k,l) = (f(k,a)·f(b,l) + f(k,b)·f(a,l)) / f(a,b)`, in increasing number
/// of crossed gluing diagonals. The result's dissection is the gluing
/// diagonals together with every piece's own dissection.
pub fn glue(gluing: &Dissection, pieces: &[Piece]) -> Result<WeakFrieze, FriezeError> {
    glue_via(gluing, pieces, Pivot::First)
}

pub fn glue_via(gluing: &Dissection, pieces: &[Piece], pivot: Pivot) -> Result<WeakFrieze, FriezeError> {
    let n = gluing.n();
    let mut cells: Vec<&Cell> = pieces.iter().map(|p| &p.cell).collect();
    cells.sort();
    let expected = split_polygon(gluing);
    if cells.len() != expected.len() || cells.iter().zip(&expected).any(|(a, b)| *a != b) {
        let got: Vec<String> = cells.iter().map(|c| c.to_string()).collect();
        let want: Vec<String> = expected.iter().map(|c| c.to_string()).collect();
        return Err(FriezeError::PieceMismatch(format!(
            "got cells {} but the dissection has {}",
            got.join(" "),
            want.join(" ")
        )));
    }

    let kind = pieces[0].frieze.kind();
    let mut values: Vec<Option<Scalar>> = vec![None; n * (n - 1) / 2];
    let mut inner = Vec::new();
    for p in pieces {
        if p.frieze.n() != p.cell.len() {
            return Err(FriezeError::PieceMismatch(format!(
                "frieze size differs from cell {}",
                p.cell
            )));
        }
        if p.frieze.kind() != kind {
            return Err(FriezeError::MixedKinds);
        }
        for (d, v) in p.frieze.iter() {
            let g = p.cell.to_global(&d);
            let slot = &mut values[g.index(n)];
            match slot {
                Some(old) if old != v => return Err(FriezeError::ValueMismatch(g)),
                Some(_) => {}
                None => *slot = Some(v.clone()),
            }
        }
        inner.extend(p.frieze.dissection().iter().map(|d| p.cell.to_global(d)));
    }
    for g in gluing.iter() {
        if values[g.index(n)].as_ref().is_none_or(Scalar::is_zero) {
            return Err(FriezeError::ZeroGluingValue(*g));
        }
    }

    let mut pending: Vec<(usize, Diagonal, Diagonal)> = all_diagonals(n)
        .into_iter()
        .filter(|d| values[d.index(n)].is_none())
        .map(|d| {
            let crossed = crossed_by(&d, gluing);
            let via = match pivot {
                Pivot::First => crossed[0],
                Pivot::Last => crossed[crossed.len() - 1],
            };
            (crossed.len(), d, via)
        })
        .collect();
    pending.sort();
    for (_, d, via) in pending {
        let (k, l) = d.endpoints();
        let (a, b) = via.endpoints();
        let f = |i: usize, j: usize| {
            values[Diagonal::new(i, j).index(n)]
                .as_ref()
                .expect("sides of a resolution cross fewer gluing diagonals")
        };
        let v = (f(k, a) * f(b, l) + f(k, b) * f(a, l)) / f(a, b);
        values[d.index(n)] = Some(v);
    }

    let dissection = validate_dissection(n, gluing.iter().copied().chain(inner))?;
    WeakFrieze::new(
        dissection,
        values.into_iter().map(|v| v.expect("all resolved")).collect(),
    )
}
