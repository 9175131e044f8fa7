//! Text reader for scalars.
//!
//! Accepts sums, products, quotients and non-negative integer powers of
//! integer literals and indeterminates, with parentheses. This covers every
//! string [`super::format_scalar`] emits. Both `-` and the Unicode minus
//! sign `−` are accepted.

use num_bigint::BigInt;

use super::{ArithOp, RatFunc, Rational, Scalar, ScalarError, ScalarKind};

/// The indeterminates a parsed scalar may mention.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Universe {
    /// Plain rationals; any name is an error.
    Rational,
    /// Rational functions in the listed names.
    Symbolic(Vec<String>),
}

impl Universe {
    pub fn kind(&self) -> ScalarKind {
        match self {
            Universe::Rational => ScalarKind::Rational,
            Universe::Symbolic(_) => ScalarKind::Symbolic,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Num(BigInt),
    Name(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
}

fn err(position: usize, message: impl Into<String>) -> ScalarError {
    ScalarError::Parse {
        position,
        message: message.into(),
    }
}

fn tokenize(s: &str) -> Result<Vec<(usize, Tok)>, ScalarError> {
    let chars: Vec<(usize, char)> = s.char_indices().collect();
    let mut out = Vec::new();
    let mut k = 0;
    while k < chars.len() {
        let (pos, c) = chars[k];
        match c {
            c if c.is_whitespace() => k += 1,
            '0'..='9' => {
                let start = k;
                while k < chars.len() && chars[k].1.is_ascii_digit() {
                    k += 1;
                }
                let digits: String = chars[start..k].iter().map(|(_, c)| c).collect();
                out.push((pos, Tok::Num(digits.parse().expect("ascii digits"))));
            }
            c if c.is_ascii_alphabetic() || c == '_' => {
                let start = k;
                while k < chars.len() && (chars[k].1.is_ascii_alphanumeric() || chars[k].1 == '_') {
                    k += 1;
                }
                out.push((pos, Tok::Name(chars[start..k].iter().map(|(_, c)| c).collect())));
            }
            _ => {
                let t = match c {
                    '+' => Tok::Plus,
                    '-' | '\u{2212}' => Tok::Minus,
                    '*' => Tok::Star,
                    '/' => Tok::Slash,
                    '^' => Tok::Caret,
                    '(' => Tok::LParen,
                    ')' => Tok::RParen,
                    other => return Err(err(pos, format!("unexpected character '{other}'"))),
                };
                out.push((pos, t));
                k += 1;
            }
        }
    }
    Ok(out)
}

struct Parser<'a> {
    toks: Vec<(usize, Tok)>,
    at: usize,
    end: usize,
    universe: &'a Universe,
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.at).map(|(_, t)| t)
    }

    fn pos(&self) -> usize {
        self.toks.get(self.at).map_or(self.end, |(p, _)| *p)
    }

    fn arith(&self, pos: usize, a: &Scalar, op: ArithOp, b: &Scalar) -> Result<Scalar, ScalarError> {
        a.apply(op, b).map_err(|e| err(pos, e.to_string()))
    }

    fn expr(&mut self) -> Result<Scalar, ScalarError> {
        let negate = if self.peek() == Some(&Tok::Minus) {
            self.at += 1;
            true
        } else {
            false
        };
        let mut acc = self.term()?;
        if negate {
            acc = -acc;
        }
        loop {
            let op = match self.peek() {
                Some(Tok::Plus) => ArithOp::Add,
                Some(Tok::Minus) => ArithOp::Sub,
                _ => return Ok(acc),
            };
            let pos = self.pos();
            self.at += 1;
            let rhs = self.term()?;
            acc = self.arith(pos, &acc, op, &rhs)?;
        }
    }

    fn term(&mut self) -> Result<Scalar, ScalarError> {
        let mut acc = self.factor()?;
        loop {
            let op = match self.peek() {
                Some(Tok::Star) => ArithOp::Mul,
                Some(Tok::Slash) => ArithOp::Div,
                _ => return Ok(acc),
            };
            let pos = self.pos();
            self.at += 1;
            let rhs = self.factor()?;
            acc = self.arith(pos, &acc, op, &rhs)?;
        }
    }

    fn factor(&mut self) -> Result<Scalar, ScalarError> {
        let base = self.atom()?;
        if self.peek() != Some(&Tok::Caret) {
            return Ok(base);
        }
        self.at += 1;
        let pos = self.pos();
        match self.toks.get(self.at) {
            Some((_, Tok::Num(e))) => {
                let e = u32::try_from(e).map_err(|_| err(pos, "exponent too large"))?;
                self.at += 1;
                Ok(base.pow(e))
            }
            _ => Err(err(pos, "expected a non-negative integer exponent")),
        }
    }

    fn atom(&mut self) -> Result<Scalar, ScalarError> {
        let pos = self.pos();
        let tok = self.toks.get(self.at).map(|(_, t)| t.clone());
        match tok {
            Some(Tok::Num(n)) => {
                self.at += 1;
                Ok(Scalar::from_rational(self.universe.kind(), Rational::from_integer(n)))
            }
            Some(Tok::Name(name)) => {
                self.at += 1;
                match self.universe {
                    Universe::Rational => Err(err(pos, format!("indeterminate '{name}' in a rational scalar"))),
                    Universe::Symbolic(names) if !names.contains(&name) => {
                        Err(err(pos, format!("unknown indeterminate '{name}'")))
                    }
                    Universe::Symbolic(_) => Ok(Scalar::RatFunc(RatFunc::var(&name))),
                }
            }
            Some(Tok::LParen) => {
                self.at += 1;
                let inner = self.expr()?;
                if self.peek() != Some(&Tok::RParen) {
                    return Err(err(self.pos(), "expected ')'"));
                }
                self.at += 1;
                Ok(inner)
            }
            Some(_) => Err(err(pos, "expected a number, name or '('")),
            None => Err(err(pos, "unexpected end of input")),
        }
    }
}

/// Parses `s` as a scalar of the universe's kind.
pub fn parse_scalar(s: &str, universe: &Universe) -> Result<Scalar, ScalarError> {
    let toks = tokenize(s)?;
    if toks.is_empty() {
        return Err(err(0, "empty scalar"));
    }
    let mut p = Parser {
        toks,
        at: 0,
        end: s.len(),
        universe,
    };
    let v = p.expr()?;
    if p.at != p.toks.len() {
        return Err(err(p.pos(), "trailing input"));
    }
    Ok(v)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sym(names: &[&str]) -> Universe {
        Universe::Symbolic(names.iter().map(|s| s.to_string()).collect())
    }

    #[test]
    fn rationals() {
        assert_eq!(
            parse_scalar("\u{2212}3/4", &Universe::Rational),
            Ok(Scalar::ratio(-3, 4))
        );
        assert_eq!(parse_scalar("-3/4", &Universe::Rational), Ok(Scalar::ratio(-3, 4)));
        assert_eq!(parse_scalar(" 12 ", &Universe::Rational), Ok(Scalar::ratio(12, 1)));
        assert_eq!(parse_scalar("6/4", &Universe::Rational), Ok(Scalar::ratio(3, 2)));
    }

    #[test]
    fn polynomial_with_two_terms() {
        let s = parse_scalar("2*a^2*b \u{2212} 1/2", &sym(&["a", "b"])).unwrap();
        let r = s.as_ratfunc().unwrap();
        assert!(r.is_polynomial());
        assert_eq!(r.numer().len(), 2);
        assert_eq!(s.to_string(), "2*a^2*b - 1/2");
    }

    #[test]
    fn quotient_is_a_rational_function() {
        let s = parse_scalar("(a+b)/c", &sym(&["a", "b", "c"])).unwrap();
        assert!(!s.as_ratfunc().unwrap().is_polynomial());
        assert_eq!(s.to_string(), "(a + b)/(c)");
        assert_eq!(parse_scalar("(a + b)/(c)", &sym(&["a", "b", "c"])), Ok(s));
    }

    #[test]
    fn errors_carry_positions() {
        let e = parse_scalar("1 + x", &Universe::Rational).unwrap_err();
        assert!(matches!(e, ScalarError::Parse { position: 4, .. }));
        let e = parse_scalar("a + z", &sym(&["a"])).unwrap_err();
        assert!(matches!(e, ScalarError::Parse { position: 4, .. }));
        let e = parse_scalar("1/0", &Universe::Rational).unwrap_err();
        assert!(matches!(e, ScalarError::Parse { position: 1, .. }));
        assert!(parse_scalar("", &Universe::Rational).is_err());
        assert!(parse_scalar("(1", &Universe::Rational).is_err());
        assert!(parse_scalar("1 2", &Universe::Rational).is_err());
        assert!(parse_scalar("2 $", &Universe::Rational).is_err());
    }
}
