//! Text syntax for polynomials.
//!
//! Grammar (whitespace is insignificant):
//!
//! ```text
//! expr     := term (('+' | '-') term)*
//! term     := factor ('*'? factor)*
//! factor   := base ('^' uint)?
//! base     := 'x' | 'y' | rational | '(' expr ')' | '-' factor
//! rational := int ('/' uint)?
//! ```
//!
//! A factor juxtaposed without `*` may not start with `-`, so `x -y` is a
//! difference rather than the product `x * (-y)`.
//!
//! [`format_poly`] prints terms in descending graded-lex order with explicit
//! `*`, e.g. `3/2*x*y^2 + 1`, and always parses back to the same polynomial.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::poly::{Poly, Rat};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ExprAst {
    Literal(Rat),
    X,
    Y,
    Neg(Box<ExprAst>),
    Sum(Box<ExprAst>, Box<ExprAst>),
    Difference(Box<ExprAst>, Box<ExprAst>),
    Product(Box<ExprAst>, Box<ExprAst>),
    Power(Box<ExprAst>, u32),
}

impl ExprAst {
    pub fn expand(&self) -> Poly {
        match self {
            ExprAst::Literal(c) => Poly::constant(c.clone()),
            ExprAst::X => Poly::x(),
            ExprAst::Y => Poly::y(),
            ExprAst::Neg(a) => -a.expand(),
            ExprAst::Sum(a, b) => a.expand() + b.expand(),
            ExprAst::Difference(a, b) => a.expand() - b.expand(),
            ExprAst::Product(a, b) => a.expand() * b.expand(),
            ExprAst::Power(a, e) => a.expand().pow(*e),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub struct ParseError {
    /// Byte offset into the input.
    pub position: usize,
    pub expected: Vec<&'static str>,
    pub found: Option<char>,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.found {
            Some(c) => write!(f, "unexpected '{c}' at position {}", self.position)?,
            None => write!(f, "unexpected end of input at position {}", self.position)?,
        }
        write!(f, "; expected one of: {}", self.expected.join(", "))
    }
}

struct Parser<'a> {
    src: &'a str,
    pos: usize,
}

const BASE_START: &[&str] = &["x", "y", "number", "'('", "'-'"];

impl<'a> Parser<'a> {
    fn skip_ws(&mut self) {
        while let Some(c) = self.src[self.pos..].chars().next() {
            if c.is_whitespace() {
                self.pos += c.len_utf8();
            } else {
                break;
            }
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.src[self.pos..].chars().next()
    }

    fn bump(&mut self) {
        if let Some(c) = self.src[self.pos..].chars().next() {
            self.pos += c.len_utf8();
        }
    }

    fn error(&mut self, expected: &[&'static str]) -> ParseError {
        let found = self.peek();
        ParseError {
            position: self.pos,
            expected: expected.to_vec(),
            found,
        }
    }

    fn expr(&mut self) -> Result<ExprAst, ParseError> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Some('+') => {
                    self.bump();
                    acc = ExprAst::Sum(Box::new(acc), Box::new(self.term()?));
                }
                Some('-') => {
                    self.bump();
                    acc = ExprAst::Difference(Box::new(acc), Box::new(self.term()?));
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<ExprAst, ParseError> {
        let mut acc = self.factor()?;
        loop {
            match self.peek() {
                Some('*') => {
                    self.bump();
                    acc = ExprAst::Product(Box::new(acc), Box::new(self.factor()?));
                }
                Some(c) if c == 'x' || c == 'y' || c == '(' || c.is_ascii_digit() => {
                    acc = ExprAst::Product(Box::new(acc), Box::new(self.factor()?));
                }
                _ => return Ok(acc),
            }
        }
    }

    fn factor(&mut self) -> Result<ExprAst, ParseError> {
        let base = self.base()?;
        if self.peek() == Some('^') {
            self.bump();
            let e = self.uint(&["exponent"])?;
            let e = u32::try_from(&e).map_err(|_| ParseError {
                position: self.pos,
                expected: vec!["exponent fitting in 32 bits"],
                found: None,
            })?;
            return Ok(ExprAst::Power(Box::new(base), e));
        }
        Ok(base)
    }

    fn base(&mut self) -> Result<ExprAst, ParseError> {
        match self.peek() {
            Some('x') => {
                self.bump();
                Ok(ExprAst::X)
            }
            Some('y') => {
                self.bump();
                Ok(ExprAst::Y)
            }
            Some('(') => {
                self.bump();
                let inner = self.expr()?;
                if self.peek() != Some(')') {
                    return Err(self.error(&["'+'", "'-'", "'*'", "')'"]));
                }
                self.bump();
                Ok(inner)
            }
            Some('-') => {
                self.bump();
                Ok(ExprAst::Neg(Box::new(self.factor()?)))
            }
            Some(c) if c.is_ascii_digit() => {
                let num = self.uint(&["number"])?;
                if self.peek() == Some('/') {
                    self.bump();
                    let start = self.pos;
                    let den = self.uint(&["denominator"])?;
                    if den.is_zero() {
                        return Err(ParseError {
                            position: start,
                            expected: vec!["nonzero denominator"],
                            found: Some('0'),
                        });
                    }
                    return Ok(ExprAst::Literal(Rat::new(num, den)));
                }
                Ok(ExprAst::Literal(Rat::from_integer(num)))
            }
            _ => Err(self.error(BASE_START)),
        }
    }

    fn uint(&mut self, expected: &[&'static str]) -> Result<BigInt, ParseError> {
        self.skip_ws();
        let start = self.pos;
        let digits: usize = self.src[start..]
            .chars()
            .take_while(|c| c.is_ascii_digit())
            .count();
        if digits == 0 {
            return Err(self.error(expected));
        }
        self.pos += digits;
        Ok(self.src[start..self.pos].parse().expect("ascii digits"))
    }
}

pub fn parse_expr(src: &str) -> Result<ExprAst, ParseError> {
    let mut p = Parser { src, pos: 0 };
    let ast = p.expr()?;
    if p.peek().is_some() {
        return Err(p.error(&["'+'", "'-'", "'*'", "'^'", "end of input"]));
    }
    Ok(ast)
}

pub fn parse_poly(src: &str) -> Result<Poly, ParseError> {
    Ok(parse_expr(src)?.expand())
}

pub fn format_rat(c: &Rat) -> String {
    if c.is_integer() {
        c.numer().to_string()
    } else {
        format!("{}/{}", c.numer(), c.denom())
    }
}

pub fn format_poly(p: &Poly) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (i, (m, c)) in p.terms().rev().enumerate() {
        let negative = c.is_negative();
        match (i, negative) {
            (0, true) => out.push('-'),
            (0, false) => {}
            (_, true) => out.push_str(" - "),
            (_, false) => out.push_str(" + "),
        }
        let abs = c.abs();
        let mut factors: Vec<String> = Vec::new();
        if !abs.is_one() || *m == crate::poly::Monomial::ONE {
            factors.push(format_rat(&abs));
        }
        for (name, e) in [("x", m.x), ("y", m.y)] {
            match e {
                0 => {}
                1 => factors.push(name.to_string()),
                _ => factors.push(format!("{name}^{e}")),
            }
        }
        out.push_str(&factors.join("*"));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::rat;

    fn x() -> Poly {
        Poly::x()
    }
    fn y() -> Poly {
        Poly::y()
    }

    #[test]
    fn parses_difference_of_squares() {
        let d = x().pow(2) - y().pow(2);
        assert_eq!(parse_poly("x^2 - y^2").unwrap(), d);
        assert_eq!(parse_poly("(x+y)(x-y)").unwrap(), d);
    }

    #[test]
    fn rational_coefficient_with_implicit_product() {
        let p = parse_poly("3/2 x y^2").unwrap();
        assert_eq!(p, Poly::monomial(rat(3, 2), 1, 2));
    }

    #[test]
    fn minus_binds_as_binary_between_juxtaposed_terms() {
        assert_eq!(parse_poly("x -y").unwrap(), x() - y());
        assert_eq!(parse_poly("x*-y").unwrap(), -(x() * y()));
        assert_eq!(parse_poly("-x^2").unwrap(), -x().pow(2));
        assert_eq!(parse_poly("--x").unwrap(), x());
        assert_eq!(
            parse_poly("2(x+1)^2").unwrap(),
            Poly::int(2) * (x() + Poly::one()).pow(2)
        );
    }

    #[test]
    fn formats_canonically() {
        assert_eq!(format_poly(&(x().pow(2) - y().pow(2))), "x^2 - y^2");
        assert_eq!(format_poly(&Poly::zero()), "0");
        let p = Poly::monomial(rat(3, 2), 1, 2) + Poly::one();
        assert_eq!(format_poly(&p), "3/2*x*y^2 + 1");
        assert_eq!(format_poly(&-y()), "-y");
        assert_eq!(format_poly(&Poly::monomial(rat(-2, 1), 1, 1)), "-2*x*y");
        assert_eq!(format_poly(&Poly::constant(rat(-1, 3))), "-1/3");
    }

    #[test]
    fn rejects_malformed_input() {
        for bad in [
            "", "x +", "x^", "x^-1", "(x", "x)", "1/0", "z", "x/2", "2/y", "x^y", "3 // 2", "x**2",
        ] {
            let err = parse_poly(bad).unwrap_err();
            assert!(!err.expected.is_empty(), "{bad}");
        }
        let err = parse_poly("x + )").unwrap_err();
        assert_eq!(err.position, 4);
        assert_eq!(err.found, Some(')'));
    }
}
