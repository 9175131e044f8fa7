//! Rational functions over the rationals.
//!
//! Reduction is best-effort: common monomial factors are cancelled, exact
//! divisibility by the non-monomial part of the denominator is tried, and a
//! Euclidean gcd is taken when both sides are univariate in one variable.
//! Equality never depends on reduction; it is decided by cross-multiplication.

use std::fmt;

use num_traits::{One, Zero};

use super::poly::{Monomial, MultiPoly};
use super::Rational;

#[derive(Clone)]
pub struct RatFunc {
    num: MultiPoly,
    den: MultiPoly,
}

impl RatFunc {
    /// Builds `num / den` in reduced form. Panics if `den` is zero.
    pub fn new(num: MultiPoly, den: MultiPoly) -> Self {
        assert!(!den.is_zero(), "rational function with zero denominator");
        Self::reduce(num, den)
    }

    pub fn from_poly(p: MultiPoly) -> Self {
        Self {
            num: p,
            den: MultiPoly::one(),
        }
    }

    pub fn constant(c: Rational) -> Self {
        Self::from_poly(MultiPoly::constant(c))
    }

    pub fn var(name: &str) -> Self {
        Self::from_poly(MultiPoly::var(name))
    }

    pub fn zero() -> Self {
        Self::from_poly(MultiPoly::zero())
    }

    pub fn one() -> Self {
        Self::from_poly(MultiPoly::one())
    }

    pub fn numer(&self) -> &MultiPoly {
        &self.num
    }

    pub fn denom(&self) -> &MultiPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    /// The constant value, when this function does not depend on any variable.
    pub fn as_constant(&self) -> Option<Rational> {
        Some(self.num.as_constant()? / self.den.as_constant()?)
    }

    fn reduce(num: MultiPoly, den: MultiPoly) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        let (mut num, mut den) = (num, den);
        if den.as_constant().is_none() {
            // cancel common monomial factors
            let g = num.monomial_content().gcd(&den.monomial_content());
            if !g.is_one() {
                num = num.div_monomial(&g).expect("content divides");
                den = den.div_monomial(&g).expect("content divides");
            }
            // cancel the polynomial part of the denominator if it divides
            if den.as_monomial().is_none() {
                let dm = den.monomial_content();
                let core = den.div_monomial(&dm).expect("content divides");
                if let Some(q) = num.exact_div(&core) {
                    num = q;
                    den = MultiPoly::term(Rational::one(), dm);
                    let g = num.monomial_content().gcd(&den.monomial_content());
                    num = num.div_monomial(&g).expect("content divides");
                    den = den.div_monomial(&g).expect("content divides");
                } else if let (Some(u), Some(v)) = (num.sole_variable(), den.sole_variable()) {
                    if u == v {
                        let g = num.gcd_univariate(&den, &u);
                        if g.as_constant().is_none() {
                            num = num.exact_div(&g).expect("gcd divides");
                            den = den.exact_div(&g).expect("gcd divides");
                        }
                    }
                }
            }
        }
        let (_, lc) = den.leading_term().expect("nonzero denominator");
        if !lc.is_one() {
            let s = lc.recip();
            num = num.scale(&s);
            den = den.scale(&s);
        }
        Self { num, den }
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        Some(Self::reduce(self.den.clone(), self.num.clone()))
    }

    pub fn add(&self, other: &Self) -> Self {
        self.combine(other, |a, b| a + b)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.combine(other, |a, b| a - b)
    }

    fn combine(&self, other: &Self, op: impl Fn(&MultiPoly, &MultiPoly) -> MultiPoly) -> Self {
        if self.den == other.den {
            return Self::reduce(op(&self.num, &other.num), self.den.clone());
        }
        if let (Some((m1, c1)), Some((m2, c2))) = (self.den.as_monomial(), other.den.as_monomial()) {
            // monomial denominators: bring both over the lcm
            let l = m1.lcm(m2);
            let a = self.num.mul_term(&c1.recip(), &l.div(m1).expect("lcm"));
            let b = other.num.mul_term(&c2.recip(), &l.div(m2).expect("lcm"));
            return Self::reduce(op(&a, &b), MultiPoly::term(Rational::one(), l));
        }
        let a = &self.num * &other.den;
        let b = &other.num * &self.den;
        Self::reduce(op(&a, &b), &self.den * &other.den)
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        if self.den.is_one() && other.den.is_one() {
            return Self::from_poly(&self.num * &other.num);
        }
        Self::reduce(&self.num * &other.num, &self.den * &other.den)
    }

    /// `None` when dividing by zero.
    pub fn div(&self, other: &Self) -> Option<Self> {
        if other.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(Self::zero());
        }
        Some(Self::reduce(&self.num * &other.den, &self.den * &other.num))
    }

    pub fn neg(&self) -> Self {
        Self {
            num: -&self.num,
            den: self.den.clone(),
        }
    }

    pub fn pow(&self, k: u32) -> Self {
        Self {
            num: self.num.pow(k),
            den: self.den.pow(k),
        }
    }

    pub fn variables(&self) -> Vec<String> {
        let mut v = self.num.variables();
        v.extend(self.den.variables());
        v.sort();
        v.dedup();
        v
    }

    /// Evaluates at a rational point; `None` if a variable is unassigned or
    /// the denominator vanishes there.
    pub fn evaluate(&self, point: &dyn Fn(&str) -> Option<Rational>) -> Option<Rational> {
        let d = self.den.evaluate(point)?;
        if d.is_zero() {
            return None;
        }
        Some(self.num.evaluate(point)? / d)
    }

    /// True when the denominator is a single term, i.e. this is a Laurent polynomial.
    pub fn is_laurent(&self) -> bool {
        self.den.as_monomial().is_some()
    }

    /// Denominator monomial of a Laurent polynomial.
    pub fn laurent_denominator(&self) -> Option<&Monomial> {
        self.den.as_monomial().map(|(m, _)| m)
    }
}

impl PartialEq for RatFunc {
    fn eq(&self, other: &Self) -> bool {
        if self.den == other.den {
            return self.num == other.num;
        }
        &self.num * &other.den == &other.num * &self.den
    }
}

impl Eq for RatFunc {}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

impl fmt::Debug for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
