//! Exact determinants.
//!
//! [`det_bareiss`] clears denominators row by row and runs fraction-free
//! Bareiss elimination over ℤ (rational input) or ℚ[x⃗] (symbolic input),
//! where every division is exact. [`det_leibniz`] is the permutation
//! expansion, kept as an independent check.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::scalar::{MultiPoly, RatFunc, Rational, Scalar, ScalarKind};

use super::{MatrixError, SquareMatrix};

/// Largest size [`det_leibniz`] accepts.
pub const LEIBNIZ_MAX: usize = 9;

/// Integral domain with exact division, as needed by Bareiss elimination.
trait ExactDomain: Clone {
    fn unit() -> Self;
    fn is_nil(&self) -> bool;
    fn mul(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    /// `self / other`, known to be exact.
    fn div_exact(&self, other: &Self) -> Self;
}

impl ExactDomain for BigInt {
    fn unit() -> Self {
        One::one()
    }
    fn is_nil(&self) -> bool {
        self.is_zero()
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn div_exact(&self, other: &Self) -> Self {
        debug_assert!((self % other).is_zero());
        self / other
    }
}

impl ExactDomain for MultiPoly {
    fn unit() -> Self {
        MultiPoly::one()
    }
    fn is_nil(&self) -> bool {
        self.is_zero()
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn div_exact(&self, other: &Self) -> Self {
        self.exact_div(other)
            .expect("Bareiss quotients are exact in the polynomial ring")
    }
}

/// Fraction-free elimination; consumes the row-major entries.
fn bareiss<T: ExactDomain>(n: usize, mut a: Vec<T>) -> T {
    if n == 0 {
        return T::unit();
    }
    let mut negate = false;
    let mut prev = T::unit();
    for k in 0..n - 1 {
        if a[k * n + k].is_nil() {
            let Some(p) = (k + 1..n).find(|&i| !a[i * n + k].is_nil()) else {
                return zero_like(&prev);
            };
            for j in 0..n {
                a.swap(k * n + j, p * n + j);
            }
            negate = !negate;
        }
        let pivot = a[k * n + k].clone();
        for i in k + 1..n {
            let aik = a[i * n + k].clone();
            for j in k + 1..n {
                let v = pivot.mul(&a[i * n + j]).sub(&aik.mul(&a[k * n + j]));
                a[i * n + j] = v.div_exact(&prev);
            }
        }
        prev = pivot;
    }
    let d = a[n * n - 1].clone();
    if negate {
        d.neg()
    } else {
        d
    }
}

fn zero_like<T: ExactDomain>(x: &T) -> T {
    x.sub(x)
}

fn det_rational(m: &SquareMatrix) -> Rational {
    let n = m.size();
    let mut entries = Vec::with_capacity(n * n);
    let mut scale = BigInt::one();
    for i in 0..n {
        let row: Vec<&Rational> = m
            .row(i)
            .iter()
            .map(|s| s.as_rational().expect("rational matrix"))
            .collect();
        let l = row.iter().fold(BigInt::one(), |l, q| l.lcm(q.denom()));
        entries.extend(row.iter().map(|q| q.numer() * (&l / q.denom())));
        scale *= l;
    }
    Rational::new(bareiss(n, entries), scale)
}

fn det_symbolic(m: &SquareMatrix) -> RatFunc {
    let n = m.size();
    let mut entries = Vec::with_capacity(n * n);
    let mut scale = MultiPoly::one();
    for i in 0..n {
        let row: Vec<&RatFunc> = m
            .row(i)
            .iter()
            .map(|s| s.as_ratfunc().expect("symbolic matrix"))
            .collect();
        let mut l = MultiPoly::one();
        for r in &row {
            let q = r.denom();
            if q.is_one() || l.exact_div(q).is_some() {
                continue;
            }
            l = match (l.as_monomial(), q.as_monomial()) {
                (Some((lm, _)), Some((qm, _))) => MultiPoly::term(Rational::one(), lm.lcm(qm)),
                _ => &l * q,
            };
        }
        entries.extend(row.iter().map(|r| {
            let cofactor = l.exact_div(r.denom()).expect("row multiplier is a common multiple");
            r.numer() * &cofactor
        }));
        scale = &scale * &l;
    }
    RatFunc::new(bareiss(n, entries), scale)
}

/// Exact determinant by fraction-free elimination. The empty matrix has
/// determinant one.
pub fn det_bareiss(m: &SquareMatrix) -> Scalar {
    match m.kind() {
        ScalarKind::Rational => Scalar::Rational(det_rational(m)),
        ScalarKind::Symbolic => Scalar::RatFunc(det_symbolic(m)),
    }
}

/// Determinant as the signed sum over all permutations.
pub fn det_leibniz(m: &SquareMatrix) -> Result<Scalar, MatrixError> {
    let n = m.size();
    if n > LEIBNIZ_MAX {
        return Err(MatrixError::TooLarge(n));
    }
    let kind = m.kind();
    let mut total = Scalar::zero(kind);
    let mut perm = Vec::with_capacity(n);
    expand(m, &mut perm, Scalar::one(kind), &mut total);
    Ok(total)
}

/// Extends the partial permutation `perm` (rows `0..perm.len()`) by one row.
fn expand(m: &SquareMatrix, perm: &mut Vec<usize>, product: Scalar, total: &mut Scalar) {
    let n = m.size();
    let row = perm.len();
    if row == n {
        let inversions = (0..n)
            .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
            .filter(|&(i, j)| perm[i] > perm[j])
            .count();
        *total = if inversions % 2 == 0 {
            &*total + &product
        } else {
            &*total - &product
        };
        return;
    }
    for col in 0..n {
        if perm.contains(&col) {
            continue;
        }
        let e = m.get(row, col);
        if e.is_zero() {
            continue;
        }
        perm.push(col);
        expand(m, perm, &product * e, total);
        perm.pop();
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::frieze::WeakFrieze;
    use crate::geometry::{validate_dissection, Diagonal, Dissection};
    use crate::matrix::frieze_matrix;

    fn rat_matrix(rows: &[&[i64]]) -> SquareMatrix {
        SquareMatrix::from_rows(
            ScalarKind::Rational,
            rows.iter()
                .map(|r| r.iter().map(|&v| Scalar::ratio(v, 1)).collect())
                .collect(),
        )
        .unwrap()
    }

    fn ones_off_diagonal(n: usize) -> SquareMatrix {
        let k = ScalarKind::Rational;
        SquareMatrix::from_fn(k, n, |i, j| Scalar::from_int(k, (i != j) as i64)).unwrap()
    }

    #[test]
    fn all_ones_closed_form() {
        for n in 1..=9 {
            let want = Scalar::from_int(ScalarKind::Rational, if n % 2 == 1 { 1 } else { -1 } * (n as i64 - 1));
            assert_eq!(det_bareiss(&ones_off_diagonal(n)), want, "n={n}");
            assert_eq!(det_leibniz(&ones_off_diagonal(n)).unwrap(), want, "n={n}");
        }
        assert_eq!(det_bareiss(&ones_off_diagonal(5)), Scalar::ratio(4, 1));
    }

    #[test]
    fn triangle_symbolic() {
        let f = WeakFrieze::from_fn(Dissection::empty(3).unwrap(), |d| match d.endpoints() {
            (1, 2) => Scalar::var("a"),
            (2, 3) => Scalar::var("b"),
            _ => Scalar::var("c"),
        })
        .unwrap();
        let m = frieze_matrix(&f);
        let want = Scalar::from_int(ScalarKind::Symbolic, 2) * Scalar::var("a") * Scalar::var("b") * Scalar::var("c");
        assert_eq!(m.det(), want);
        assert_eq!(det_leibniz(m.matrix()).unwrap(), want);
    }

    #[test]
    fn small_cases() {
        assert_eq!(
            det_bareiss(&rat_matrix(&[&[2, 0, 0], &[0, 3, 0], &[0, 0, 5]])),
            Scalar::ratio(30, 1)
        );
        assert_eq!(det_leibniz(&rat_matrix(&[&[0]])).unwrap(), Scalar::ratio(0, 1));
        assert_eq!(det_bareiss(&rat_matrix(&[&[0]])), Scalar::ratio(0, 1));
        let empty = SquareMatrix::new(ScalarKind::Rational, 0, vec![]).unwrap();
        assert_eq!(det_bareiss(&empty), Scalar::ratio(1, 1));
        assert_eq!(det_leibniz(&empty).unwrap(), Scalar::ratio(1, 1));
        // pivoting with a sign change
        assert_eq!(det_bareiss(&rat_matrix(&[&[0, 1], &[1, 0]])), Scalar::ratio(-1, 1));
        // singular
        assert_eq!(
            det_bareiss(&rat_matrix(&[&[1, 2, 3], &[2, 4, 6], &[0, 1, 1]])),
            Scalar::ratio(0, 1)
        );
        assert_eq!(det_bareiss(&rat_matrix(&[&[0, 0], &[0, 0]])), Scalar::ratio(0, 1));
        assert_eq!(det_leibniz(&ones_off_diagonal(10)), Err(MatrixError::TooLarge(10)));
    }

    #[test]
    fn glued_square_is_minus_four() {
        // edges 1, f(1,3) = 1, f(2,4) = 2; cofactor expansion by hand gives -4
        let f = WeakFrieze::from_fn(validate_dissection(4, [Diagonal::new(1, 3)]).unwrap(), |d| {
            Scalar::ratio(if d == Diagonal::new(2, 4) { 2 } else { 1 }, 1)
        })
        .unwrap();
        let m = frieze_matrix(&f);
        assert_eq!(det_leibniz(m.matrix()).unwrap(), Scalar::ratio(-4, 1));
        assert_eq!(m.det(), Scalar::ratio(-4, 1));
    }

    #[test]
    fn fractional_entries() {
        let k = ScalarKind::Rational;
        let m = SquareMatrix::from_fn(k, 4, |i, j| {
            Scalar::ratio((i * 4 + j) as i64 % 7 - 3, (i + 2 * j + 1) as i64)
        })
        .unwrap();
        assert_eq!(det_bareiss(&m), det_leibniz(&m).unwrap());
    }

    #[test]
    fn symbolic_with_rational_function_entries() {
        let x = Scalar::var("x");
        let y = Scalar::var("y");
        let one = Scalar::one(ScalarKind::Symbolic);
        let rows = vec![vec![x.clone(), &one / &(&x + &y)], vec![&y / &x, &x - &one]];
        let m = SquareMatrix::from_rows(ScalarKind::Symbolic, rows).unwrap();
        assert_eq!(det_bareiss(&m), det_leibniz(&m).unwrap());
    }
}
