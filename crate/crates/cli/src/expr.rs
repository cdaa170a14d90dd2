//! Parser and evaluator for the small q-series expression language used by
//! the `series` subcommand.
//!
//! Grammar (whitespace insignificant):
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := factor (('*' | '/') factor)*
//! factor := atom ('^' int)?
//! atom   := int | 'q' | 'theta' | 'thetaN' | 'P' '(' int ',' int ')'
//!         | '(' expr ')' | '-' atom
//! ```
//!
//! `P(a,m)` is the infinite Pochhammer product (q^a; q^m), `theta` the plain
//! cubic theta sum and `thetaN` its n-weighted variant. Integer literals and
//! all arithmetic are exact; division requires the divisor's leading
//! coefficient to be invertible, which over the rationals means nonzero.

use std::fmt;

use qcrank::{
    pochhammer, theta_plain, theta_weighted, RatRing, Ring, SeriesError, TruncatedSeries,
};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Expr {
    Int(i64),
    Q,
    Theta,
    ThetaN,
    Poch(u32, u32),
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Div(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, i64),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub pos: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "parse error at position {}: {}", self.pos, self.message)
    }
}

impl std::error::Error for ParseError {}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn new(src: &'a str) -> Self {
        Parser {
            src: src.as_bytes(),
            pos: 0,
        }
    }

    fn error(&self, message: impl Into<String>) -> ParseError {
        ParseError {
            pos: self.pos,
            message: message.into(),
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn expect(&mut self, want: u8) -> Result<(), ParseError> {
        match self.peek() {
            Some(c) if c == want => {
                self.pos += 1;
                Ok(())
            }
            Some(c) => Err(self.error(format!(
                "expected '{}', found '{}'",
                want as char, c as char
            ))),
            None => Err(self.error(format!("expected '{}', found end of input", want as char))),
        }
    }

    /// Consumes `word` if the input continues with it at a word boundary.
    fn eat_word(&mut self, word: &str) -> bool {
        self.skip_ws();
        let bytes = word.as_bytes();
        if self.src[self.pos..].starts_with(bytes) {
            let after = self.pos + bytes.len();
            let boundary = match self.src.get(after) {
                Some(c) => !c.is_ascii_alphanumeric(),
                None => true,
            };
            if boundary {
                self.pos = after;
                return true;
            }
        }
        false
    }

    fn parse_uint(&mut self, what: &str) -> Result<u64, ParseError> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if self.pos == start {
            return Err(self.error(format!("expected {what}")));
        }
        let text = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
        text.parse::<u64>()
            .map_err(|_| self.error(format!("{what} out of range: {text}")))
    }

    fn parse_int(&mut self, what: &str) -> Result<i64, ParseError> {
        self.skip_ws();
        let negative = if self.peek() == Some(b'-') {
            self.pos += 1;
            true
        } else {
            false
        };
        let magnitude = self.parse_uint(what)?;
        let value = i64::try_from(magnitude)
            .map_err(|_| self.error(format!("{what} out of range: {magnitude}")))?;
        Ok(if negative { -value } else { value })
    }

    fn parse_expr(&mut self) -> Result<Expr, ParseError> {
        let mut lhs = self.parse_term()?;
        loop {
            match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    let rhs = self.parse_term()?;
                    lhs = Expr::Add(Box::new(lhs), Box::new(rhs));
                }
                Some(b'-') => {
                    self.pos += 1;
                    let rhs = self.parse_term()?;
                    lhs = Expr::Sub(Box::new(lhs), Box::new(rhs));
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn parse_term(&mut self) -> Result<Expr, ParseError> {
        let mut lhs = self.parse_factor()?;
        loop {
            match self.peek() {
                Some(b'*') => {
                    self.pos += 1;
                    let rhs = self.parse_factor()?;
                    lhs = Expr::Mul(Box::new(lhs), Box::new(rhs));
                }
                Some(b'/') => {
                    self.pos += 1;
                    let rhs = self.parse_factor()?;
                    lhs = Expr::Div(Box::new(lhs), Box::new(rhs));
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn parse_factor(&mut self) -> Result<Expr, ParseError> {
        let base = self.parse_atom()?;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            let exponent = self.parse_int("exponent")?;
            return Ok(Expr::Pow(Box::new(base), exponent));
        }
        Ok(base)
    }

    fn parse_atom(&mut self) -> Result<Expr, ParseError> {
        match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                let inner = self.parse_atom()?;
                Ok(Expr::Neg(Box::new(inner)))
            }
            Some(b'(') => {
                self.pos += 1;
                let inner = self.parse_expr()?;
                self.expect(b')')?;
                Ok(inner)
            }
            Some(c) if c.is_ascii_digit() => {
                let value = self.parse_int("integer")?;
                Ok(Expr::Int(value))
            }
            Some(b'P') => {
                self.pos += 1;
                self.expect(b'(')?;
                let a = self.parse_uint("offset")?;
                self.expect(b',')?;
                let m = self.parse_uint("step")?;
                self.expect(b')')?;
                let a = u32::try_from(a).map_err(|_| self.error("offset out of range"))?;
                let m = u32::try_from(m).map_err(|_| self.error("step out of range"))?;
                if a == 0 || m == 0 {
                    return Err(self.error("P(a,m) requires a >= 1 and m >= 1"));
                }
                Ok(Expr::Poch(a, m))
            }
            Some(b't') => {
                if self.eat_word("thetaN") {
                    Ok(Expr::ThetaN)
                } else if self.eat_word("theta") {
                    Ok(Expr::Theta)
                } else {
                    Err(self.error("expected 'theta' or 'thetaN'"))
                }
            }
            Some(b'q') => {
                // Reject identifiers like `qq` that merely start with q.
                if self.eat_word("q") {
                    Ok(Expr::Q)
                } else {
                    Err(self.error("unexpected identifier"))
                }
            }
            Some(c) => Err(self.error(format!("unexpected character '{}'", c as char))),
            None => Err(self.error("unexpected end of input")),
        }
    }
}

pub fn parse(input: &str) -> Result<Expr, ParseError> {
    let mut parser = Parser::new(input);
    let expr = parser.parse_expr()?;
    if let Some(c) = parser.peek() {
        return Err(parser.error(format!("unexpected trailing character '{}'", c as char)));
    }
    Ok(expr)
}

#[derive(Debug)]
pub enum EvalError {
    Series(SeriesError),
}

impl fmt::Display for EvalError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EvalError::Series(e) => write!(f, "evaluation failed: {e}"),
        }
    }
}

impl std::error::Error for EvalError {}

impl From<SeriesError> for EvalError {
    fn from(e: SeriesError) -> Self {
        EvalError::Series(e)
    }
}

/// Evaluates `expr` as a truncated series with rational coefficients, exact
/// through exponent `order - 1` for expressions built from valuation >= 0
/// atoms. Laurent shifts from division or negative powers narrow the window
/// honestly rather than padding with unverified zeros.
pub fn eval(expr: &Expr, order: i64) -> Result<TruncatedSeries<RatRing>, EvalError> {
    let ring = RatRing;
    match expr {
        Expr::Int(c) => {
            if *c == 0 {
                Ok(TruncatedSeries::zero(ring, order))
            } else {
                Ok(TruncatedSeries::monomial(ring.from_i64(*c), ring, 0, order))
            }
        }
        Expr::Q => Ok(TruncatedSeries::monomial(ring.one(), ring, 1, order)),
        Expr::Theta => Ok(theta_plain(order).to_rational()),
        Expr::ThetaN => Ok(theta_weighted(order).to_rational()),
        Expr::Poch(a, m) => Ok(pochhammer(*a, *m, order).to_rational()),
        Expr::Neg(inner) => Ok(-&eval(inner, order)?),
        Expr::Add(lhs, rhs) => Ok(&eval(lhs, order)? + &eval(rhs, order)?),
        Expr::Sub(lhs, rhs) => Ok(&eval(lhs, order)? - &eval(rhs, order)?),
        Expr::Mul(lhs, rhs) => Ok(&eval(lhs, order)? * &eval(rhs, order)?),
        Expr::Div(lhs, rhs) => {
            let divisor = eval(rhs, order)?.invert()?;
            Ok(&eval(lhs, order)? * &divisor)
        }
        Expr::Pow(base, exponent) => Ok(eval(base, order)?.pow(*exponent)?),
    }
}
