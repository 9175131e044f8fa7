//! Exact field elements: arbitrary-precision rationals and rational functions
//! in named indeterminates.

mod parse;
mod poly;
mod ratfunc;

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Zero};
use thiserror::Error;

pub use parse::{parse_scalar, Universe};
pub use poly::{Monomial, MultiPoly};
pub use ratfunc::RatFunc;

/// Arbitrary-precision rational, always stored in lowest terms with a
/// positive denominator.
pub type Rational = num_rational::BigRational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ScalarError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("cannot combine a {0} scalar with a {1} scalar")]
    VariantMismatch(ScalarKind, ScalarKind),
    #[error("parse error at position {position}: {message}")]
    Parse { position: usize, message: String },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ScalarKind {
    Rational,
    Symbolic,
}

impl fmt::Display for ScalarKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ScalarKind::Rational => "rational",
            ScalarKind::Symbolic => "symbolic",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
    Div,
}

/// An element of either ℚ or ℚ(x₁, …, x_m).
///
/// The binary operators panic when the two operands have different kinds or
/// on division by zero, like integer division does; use [`Scalar::apply`] for
/// the checked form.
#[derive(Clone, PartialEq, Eq)]
pub enum Scalar {
    Rational(Rational),
    RatFunc(RatFunc),
}

impl Scalar {
    pub fn zero(kind: ScalarKind) -> Self {
        Self::from_int(kind, 0)
    }

    pub fn one(kind: ScalarKind) -> Self {
        Self::from_int(kind, 1)
    }

    pub fn from_int(kind: ScalarKind, v: i64) -> Self {
        Self::from_rational(kind, Rational::from_integer(BigInt::from(v)))
    }

    pub fn from_rational(kind: ScalarKind, q: Rational) -> Self {
        match kind {
            ScalarKind::Rational => Scalar::Rational(q),
            ScalarKind::Symbolic => Scalar::RatFunc(RatFunc::constant(q)),
        }
    }

    pub fn ratio(num: i64, den: i64) -> Self {
        Scalar::Rational(Rational::new(num.into(), den.into()))
    }

    pub fn var(name: &str) -> Self {
        Scalar::RatFunc(RatFunc::var(name))
    }

    pub fn kind(&self) -> ScalarKind {
        match self {
            Scalar::Rational(_) => ScalarKind::Rational,
            Scalar::RatFunc(_) => ScalarKind::Symbolic,
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rational(q) => q.is_zero(),
            Scalar::RatFunc(r) => r.is_zero(),
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Rational(q) => q.is_one(),
            Scalar::RatFunc(r) => r.as_constant().is_some_and(|c| c.is_one()),
        }
    }

    pub fn as_rational(&self) -> Option<&Rational> {
        match self {
            Scalar::Rational(q) => Some(q),
            Scalar::RatFunc(_) => None,
        }
    }

    pub fn as_ratfunc(&self) -> Option<&RatFunc> {
        match self {
            Scalar::RatFunc(r) => Some(r),
            Scalar::Rational(_) => None,
        }
    }

    /// Checked field arithmetic.
    pub fn apply(&self, op: ArithOp, rhs: &Scalar) -> Result<Scalar, ScalarError> {
        match (self, rhs) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Ok(Scalar::Rational(match op {
                ArithOp::Add => a + b,
                ArithOp::Sub => a - b,
                ArithOp::Mul => a * b,
                ArithOp::Div => {
                    if b.is_zero() {
                        return Err(ScalarError::DivisionByZero);
                    }
                    a / b
                }
            })),
            (Scalar::RatFunc(a), Scalar::RatFunc(b)) => Ok(Scalar::RatFunc(match op {
                ArithOp::Add => a.add(b),
                ArithOp::Sub => a.sub(b),
                ArithOp::Mul => a.mul(b),
                ArithOp::Div => a.div(b).ok_or(ScalarError::DivisionByZero)?,
            })),
            _ => Err(ScalarError::VariantMismatch(self.kind(), rhs.kind())),
        }
    }

    pub fn inv(&self) -> Result<Scalar, ScalarError> {
        Scalar::one(self.kind()).apply(ArithOp::Div, self)
    }

    pub fn pow(&self, k: u32) -> Scalar {
        match self {
            Scalar::Rational(q) => Scalar::Rational(num_traits::pow(q.clone(), k as usize)),
            Scalar::RatFunc(r) => Scalar::RatFunc(r.pow(k)),
        }
    }

    /// Substitutes rationals for the indeterminates of a symbolic scalar.
    /// Rational scalars are returned unchanged.
    pub fn evaluate(&self, point: &dyn Fn(&str) -> Option<Rational>) -> Option<Scalar> {
        match self {
            Scalar::Rational(q) => Some(Scalar::Rational(q.clone())),
            Scalar::RatFunc(r) => r.evaluate(point).map(Scalar::Rational),
        }
    }
}

fn unwrap_arith(r: Result<Scalar, ScalarError>) -> Scalar {
    r.unwrap_or_else(|e| panic!("scalar arithmetic: {e}"))
}

/// Canonical text form, readable back by [`parse_scalar`].
pub fn format_scalar(a: &Scalar) -> String {
    a.to_string()
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rational(q) => write!(f, "{q}"),
            Scalar::RatFunc(r) => write!(f, "{r}"),
        }
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

macro_rules! forward_binop {
    ($tr:ident, $method:ident, $op:expr) => {
        impl $tr<&Scalar> for &Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &Scalar) -> Scalar {
                unwrap_arith(self.apply($op, rhs))
            }
        }
        impl $tr<Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                unwrap_arith(self.apply($op, &rhs))
            }
        }
        impl $tr<&Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &Scalar) -> Scalar {
                unwrap_arith(self.apply($op, rhs))
            }
        }
    };
}

forward_binop!(Add, add, ArithOp::Add);
forward_binop!(Sub, sub, ArithOp::Sub);
forward_binop!(Mul, mul, ArithOp::Mul);
forward_binop!(Div, div, ArithOp::Div);

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match self {
            Scalar::Rational(q) => Scalar::Rational(-q),
            Scalar::RatFunc(r) => Scalar::RatFunc(r.neg()),
        }
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}
