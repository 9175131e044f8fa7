//! Brute-force reference implementations for tests.
//!
//! Nothing here calls the fast paths it is meant to check: crossings are
//! decided by walking around the polygon, and gluing resolves each value by
//! plain recursion in a caller-chosen diagonal order.

use std::collections::HashMap;

use thiserror::Error;

use crate::frieze::{FriezeError, Piece, PtolemyViolation, WeakFrieze};
use crate::geometry::{all_diagonals, validate_dissection, Diagonal, Dissection};
use crate::scalar::Scalar;

/// Largest polygon [`exhaustive_ptolemy`] accepts.
pub const EXHAUSTIVE_MAX: usize = 12;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("exhaustive Ptolemy check is limited to {EXHAUSTIVE_MAX}-gons, got {0}")]
    TooLarge(usize),
}

/// Whether exactly one of `k`, `l` is met strictly between `i` and `j` when
/// walking `i → i+1 → …` around the `n`-gon.
fn separated(n: usize, (i, j): (usize, usize), (k, l): (usize, usize)) -> bool {
    if [i, j].contains(&k) || [i, j].contains(&l) {
        return false;
    }
    let mut v = i;
    let mut hits = 0;
    loop {
        v = v % n + 1;
        if v == j {
            break;
        }
        if v == k || v == l {
            hits += 1;
        }
    }
    hits == 1
}

/// Every failing Ptolemy relation of `f`, pairs listed as in
/// [`crate::frieze::check_frieze`].
pub fn exhaustive_ptolemy(f: &WeakFrieze) -> Result<Vec<PtolemyViolation>, OracleError> {
    let n = f.n();
    if n > EXHAUSTIVE_MAX {
        return Err(OracleError::TooLarge(n));
    }
    let ds = all_diagonals(n);
    let mut out = Vec::new();
    for (x, d) in ds.iter().enumerate() {
        for e in &ds[x + 1..] {
            let (i, j) = d.endpoints();
            let (k, l) = e.endpoints();
            if !separated(n, (i, j), (k, l)) {
                continue;
            }
            let v = |p: usize, q: usize| f.get(&Diagonal::new(p, q)).clone();
            let lhs = v(i, j) * v(k, l);
            let rhs = v(i, k) * v(j, l) + v(i, l) * v(j, k);
            if lhs != rhs {
                out.push(PtolemyViolation { d: *d, e: *e, lhs, rhs });
            }
        }
    }
    Ok(out)
}

/// Gluing by memoised recursion: an unknown value `f(k,l)` is resolved
/// through the first diagonal in `order` that crosses `{k,l}`.
///
/// `order` must list every diagonal of `gluing` exactly once.
pub fn glue_permuted(gluing: &Dissection, pieces: &[Piece], order: &[Diagonal]) -> Result<WeakFrieze, FriezeError> {
    let n = gluing.n();
    let mut sorted = order.to_vec();
    sorted.sort();
    if sorted != gluing.iter().copied().collect::<Vec<_>>() {
        return Err(FriezeError::PieceMismatch(
            "order is not a permutation of the gluing diagonals".into(),
        ));
    }
    let mut known: HashMap<Diagonal, Scalar> = HashMap::new();
    let mut inner = Vec::new();
    for p in pieces {
        for (d, v) in p.frieze.iter() {
            let g = p.cell.to_global(&d);
            if let Some(old) = known.insert(g, v.clone()) {
                if old != *v {
                    return Err(FriezeError::ValueMismatch(g));
                }
            }
        }
        inner.extend(p.frieze.dissection().iter().map(|d| p.cell.to_global(d)));
    }
    for g in order {
        if known.get(g).is_none_or(Scalar::is_zero) {
            return Err(FriezeError::ZeroGluingValue(*g));
        }
    }

    fn resolve(n: usize, d: Diagonal, order: &[Diagonal], known: &mut HashMap<Diagonal, Scalar>) -> Scalar {
        if let Some(v) = known.get(&d) {
            return v.clone();
        }
        let (k, l) = d.endpoints();
        let g = order
            .iter()
            .find(|g| separated(n, g.endpoints(), (k, l)))
            .expect("a diagonal outside every cell crosses the gluing set");
        let (a, b) = g.endpoints();
        let mut v = |p, q| resolve(n, Diagonal::new(p, q), order, known);
        let value = (v(k, a) * v(b, l) + v(k, b) * v(a, l)) / v(a, b);
        known.insert(d, value.clone());
        value
    }

    let values = all_diagonals(n)
        .into_iter()
        .map(|d| resolve(n, d, order, &mut known))
        .collect();
    let dissection = validate_dissection(n, gluing.iter().copied().chain(inner))?;
    WeakFrieze::new(dissection, values)
}
