//! The infinite array of a weak frieze.
//!
//! Row `i` holds `c(i,j)` for `i <= j <= i+n`, with zeros at both ends. The
//! triangle `1 <= i < j <= n` is a copy of the frieze values; every other
//! entry follows from the translation `c(i,j) = c(i+n, j+n)` and the glide
//! reflection `c(i,j) = c(j, n+i)`.

use std::fmt;

use crate::scalar::Scalar;

use super::WeakFrieze;

/// `c(i,j)` for `i <= j <= i + n`.
///
/// Panics if `j` is outside that range.
pub fn pattern_entry(f: &WeakFrieze, i: i64, j: i64) -> Scalar {
    let n = f.n() as i64;
    assert!(i <= j && j <= i + n, "c({i},{j}) is outside the pattern");
    let i0 = (i - 1).rem_euclid(n) + 1;
    let j0 = j - (i - i0);
    if j0 == i0 || j0 == i0 + n {
        Scalar::zero(f.kind())
    } else if j0 <= n {
        f.value(i0 as usize, j0 as usize).clone()
    } else {
        // glide: c(i0, j0) = c(j0 - n, i0) with 1 <= j0 - n < i0
        f.value((j0 - n) as usize, i0 as usize).clone()
    }
}

/// A finite band of consecutive rows of the array.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PatternWindow {
    n: usize,
    first_row: i64,
    rows: Vec<Vec<Scalar>>,
}

impl PatternWindow {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn first_row(&self) -> i64 {
        self.first_row
    }

    pub fn last_row(&self) -> i64 {
        self.first_row + self.rows.len() as i64 - 1
    }

    /// Row `i`, i.e. `c(i,i), …, c(i,i+n)`.
    pub fn row(&self, i: i64) -> Option<&[Scalar]> {
        let k = usize::try_from(i - self.first_row).ok()?;
        self.rows.get(k).map(Vec::as_slice)
    }

    pub fn entry(&self, i: i64, j: i64) -> Option<&Scalar> {
        let row = self.row(i)?;
        row.get(usize::try_from(j - i).ok()?)
    }

    pub fn rows(&self) -> impl Iterator<Item = (i64, &[Scalar])> + '_ {
        self.rows
            .iter()
            .enumerate()
            .map(|(k, r)| (self.first_row + k as i64, r.as_slice()))
    }
}

/// Staggered text layout: row `i` is shifted right by one column per row
/// below the first, so equal `j` line up vertically.
impl fmt::Display for PatternWindow {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cells: Vec<Vec<String>> = self
            .rows
            .iter()
            .map(|r| r.iter().map(|v| v.to_string()).collect())
            .collect();
        let width = cells.iter().flatten().map(|s| s.chars().count()).max().unwrap_or(1);
        for (k, row) in cells.iter().enumerate() {
            let line: Vec<String> = row.iter().map(|s| format!("{s:>width$}")).collect();
            writeln!(f, "{}{}", " ".repeat(k * (width + 1)), line.join(" "))?;
        }
        Ok(())
    }
}

/// Rows `first_row..=last_row` of `f`'s array.
pub fn render_pattern(f: &WeakFrieze, first_row: i64, last_row: i64) -> PatternWindow {
    let n = f.n() as i64;
    let rows = (first_row..=last_row)
        .map(|i| (i..=i + n).map(|j| pattern_entry(f, i, j)).collect())
        .collect();
    PatternWindow {
        n: f.n(),
        first_row,
        rows,
    }
}

/// A complete adjacent 2×2 block whose determinant differs from
/// `c(i+1, n+i)·c(j, j+1)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LocalRuleViolation {
    pub i: i64,
    pub j: i64,
    pub lhs: Scalar,
    pub rhs: Scalar,
}

impl fmt::Display for LocalRuleViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "block ({}, {}): {} != {}", self.i, self.j, self.lhs, self.rhs)
    }
}

/// Checks `c(i,j)c(i+1,j+1) - c(i,j+1)c(i+1,j) = c(i+1,n+i)·c(j,j+1)` on every
/// complete adjacent 2×2 block of the window.
pub fn check_local_rule(w: &PatternWindow, f: &WeakFrieze) -> Vec<LocalRuleViolation> {
    let n = w.n as i64;
    let mut out = Vec::new();
    for i in w.first_row..w.last_row() {
        for j in i + 1..n + i {
            let c = |r: i64, s: i64| w.entry(r, s).expect("block inside window");
            let lhs = c(i, j) * c(i + 1, j + 1) - c(i, j + 1) * c(i + 1, j);
            let rhs = pattern_entry(f, i + 1, n + i) * pattern_entry(f, j, j + 1);
            if lhs != rhs {
                out.push(LocalRuleViolation { i, j, lhs, rhs });
            }
        }
    }
    out
}
