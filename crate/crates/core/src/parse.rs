//! Parser for polynomial expressions in the variables `x, y, z`.
//!
//! Accepts both the factored style used in the reference tables
//! (`2(x + 1)y^2`, `-(z^2 - 1)x`, juxtaposition means multiplication) and
//! the expanded canonical rendering (`2*x*y + 2*x`).

use crate::error::ParseError;
use crate::form::axis_index;
use crate::poly::Polynomial;
use crate::scalar::ExactScalar;

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    n: usize,
}

impl<'a> Parser<'a> {
    fn new(src: &'a str, n: usize) -> Self {
        Parser {
            src: src.as_bytes(),
            pos: 0,
            n,
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

    fn bump(&mut self) -> Option<u8> {
        let c = self.peek()?;
        self.pos += 1;
        Some(c)
    }

    fn parse_uint(&mut self) -> Result<u64, ParseError> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if self.pos == start {
            return Err(ParseError::Expected {
                expected: "integer",
                at: start,
            });
        }
        std::str::from_utf8(&self.src[start..self.pos])
            .expect("digits are utf8")
            .parse()
            .map_err(|_| ParseError::ExponentTooLarge)
    }

    fn parse_exponent(&mut self) -> Result<u32, ParseError> {
        if self.peek() == Some(b'^') {
            self.bump();
            let e = self.parse_uint()?;
            u32::try_from(e).map_err(|_| ParseError::ExponentTooLarge)
        } else {
            Ok(1)
        }
    }

    // expr := term (('+' | '-') term)*
    fn parse_expr(&mut self) -> Result<Polynomial, ParseError> {
        let mut acc = self.parse_term()?;
        while let Some(c) = self.peek() {
            match c {
                b'+' => {
                    self.bump();
                    acc = &acc + &self.parse_term()?;
                }
                b'-' => {
                    self.bump();
                    acc = &acc - &self.parse_term()?;
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    // term := ['-'] factor (['*'] factor)*
    fn parse_term(&mut self) -> Result<Polynomial, ParseError> {
        let mut sign = 1i64;
        while self.peek() == Some(b'-') {
            self.bump();
            sign = -sign;
        }
        let mut acc = self.parse_factor()?;
        loop {
            match self.peek() {
                Some(b'*') => {
                    self.bump();
                    acc = &acc * &self.parse_factor()?;
                }
                Some(c) if c == b'(' || c.is_ascii_digit() || axis_index(c as char).is_some() => {
                    acc = &acc * &self.parse_factor()?;
                }
                _ => break,
            }
        }
        if sign < 0 {
            acc = -&acc;
        }
        Ok(acc)
    }

    // factor := INT ('/' INT)? | VAR ('^' INT)? | '(' expr ')' ('^' INT)?
    fn parse_factor(&mut self) -> Result<Polynomial, ParseError> {
        match self.peek() {
            None => Err(ParseError::UnexpectedEnd),
            Some(b'(') => {
                self.bump();
                let inner = self.parse_expr()?;
                if self.bump() != Some(b')') {
                    return Err(ParseError::Expected {
                        expected: "closing parenthesis",
                        at: self.pos,
                    });
                }
                let e = self.parse_exponent()?;
                Ok(if e == 1 { inner } else { inner.pow(e) })
            }
            Some(c) if c.is_ascii_digit() => {
                let num = self.parse_uint()?;
                let scalar = if self.peek() == Some(b'/') {
                    self.bump();
                    let den = self.parse_uint()?;
                    ExactScalar::ratio(num as i64, den as i64)
                } else {
                    ExactScalar::from_int(num as i64)
                };
                Ok(Polynomial::constant(self.n, scalar))
            }
            Some(c) => {
                let axis =
                    axis_index(c as char).ok_or(ParseError::UnexpectedChar(c as char, self.pos))?;
                if axis >= self.n {
                    return Err(ParseError::UnknownVariable(c as char, self.n));
                }
                self.bump();
                let e = self.parse_exponent()?;
                Ok(Polynomial::variable(self.n, axis).pow(e))
            }
        }
    }
}

/// Parses a polynomial expression over `n` variables.
pub fn parse_polynomial(src: &str, n: usize) -> Result<Polynomial, ParseError> {
    let mut p = Parser::new(src, n);
    let poly = p.parse_expr()?;
    p.skip_ws();
    if p.pos != p.src.len() {
        return Err(ParseError::UnexpectedChar(p.src[p.pos] as char, p.pos));
    }
    Ok(poly)
}
