//! Seeded generators. Every function here is a pure function of its inputs
//! and the seed.

use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::frieze::{glue, Piece, WeakFrieze};
use crate::geometry::{split_polygon, validate_dissection, Diagonal, Dissection, GeometryError};
use crate::scalar::{Rational, Scalar, ScalarKind};

use super::evaluate_frieze;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DissectionMode {
    Any,
    Triangulation,
}

/// `±p/q` with `p, q` uniform in `1..=20`.
pub fn random_nonzero_rational(rng: &mut impl Rng) -> Rational {
    let p: i64 = rng.random_range(1..=20);
    let q: i64 = rng.random_range(1..=20);
    let s = if rng.random_bool(0.5) { -1 } else { 1 };
    Rational::new(BigInt::from(s * p), BigInt::from(q))
}

/// Cuts the polygon by a random chord, then recurses into both sides. In
/// [`DissectionMode::Any`] each cell with four or more vertices is left
/// uncut with probability 1/3. The distribution is not uniform.
pub fn random_dissection(n: usize, seed: u64, mode: DissectionMode) -> Result<Dissection, GeometryError> {
    Dissection::empty(n)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::new();
    let mut stack = vec![(1..=n).collect::<Vec<usize>>()];
    while let Some(cell) = stack.pop() {
        let m = cell.len();
        if m <= 3 || (mode == DissectionMode::Any && rng.random_range(0..3) == 0) {
            continue;
        }
        // chord between local positions i < j that are not neighbours
        let i = rng.random_range(0..m);
        let span = rng.random_range(2..=m - 2);
        let j = (i + span) % m;
        let (i, j) = (i.min(j), i.max(j));
        out.push(Diagonal::new(cell[i], cell[j]));
        stack.push(cell[i..=j].to_vec());
        stack.push(cell[j..].iter().chain(&cell[..=i]).copied().collect());
    }
    validate_dissection(n, out)
}

/// A weak frieze with respect to `d`: every value on a side or inner
/// diagonal of a cell is a random nonzero rational, and the cells are glued.
pub fn random_weak_frieze(d: &Dissection, seed: u64) -> WeakFrieze {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n = d.n();
    // gluing values first so that adjacent pieces agree
    let shared: Vec<(Diagonal, Rational)> = d.iter().map(|g| (*g, random_nonzero_rational(&mut rng))).collect();
    let pieces: Vec<Piece> = split_polygon(d)
        .into_iter()
        .map(|c| {
            let empty = Dissection::empty(c.len()).expect("cell");
            let f = WeakFrieze::from_fn(empty, |local| {
                let g = c.to_global(&local);
                let q = match shared.iter().find(|(s, _)| *s == g) {
                    Some((_, q)) => q.clone(),
                    None => random_nonzero_rational(&mut rng),
                };
                Scalar::from_rational(ScalarKind::Rational, q)
            })
            .expect("one value per diagonal");
            Piece::new(c, f).expect("sizes agree")
        })
        .collect();
    debug_assert_eq!(pieces.iter().map(|p| p.cell.len()).sum::<usize>(), n + 2 * d.len());
    glue(d, &pieces).expect("gluing values are nonzero")
}

/// `f` evaluated at a random point with nonzero rational coordinates. Tries
/// further points from the same stream if a denominator vanishes; `None`
/// after 100 misses.
pub fn random_evaluation(f: &WeakFrieze, seed: u64) -> Option<WeakFrieze> {
    let mut names: Vec<String> = f
        .iter()
        .filter_map(|(_, v)| v.as_ratfunc().map(|r| r.variables()))
        .flatten()
        .collect();
    names.sort();
    names.dedup();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..100 {
        let point: Vec<(String, Rational)> = names
            .iter()
            .map(|x| (x.clone(), random_nonzero_rational(&mut rng)))
            .collect();
        let lookup = |x: &str| point.iter().find(|(y, _)| y == x).map(|(_, q)| q.clone());
        if let Some(g) = evaluate_frieze(f, &lookup) {
            return Some(g);
        }
    }
    None
}
