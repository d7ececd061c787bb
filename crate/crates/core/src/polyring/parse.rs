//! Recursive-descent parser for polynomial expressions in `x, y, z`.
//!
//! ```text
//! expr   := ['-'] term (('+' | '-') term)*
//! term   := factor (('*' factor) | ('/' integer))*
//! factor := atom ['^' nat]
//! atom   := integer | 'x' | 'y' | 'z' | '(' expr ')'
//! ```
//!
//! Whitespace is ignored and multiplication must be explicit. Division is
//! only allowed by an integer literal, which keeps rational coefficients
//! printable and re-readable.

use alloc::string::ToString;
use alloc::vec::Vec;

use num_bigint::BigInt;

use super::field::Field;
use super::monomial::{Monomial, VAR_NAMES};
use super::polynomial::{PolyRing, Polynomial};
use crate::error::{Error, Result};

/// Parses `text` into a polynomial of `k[x,y,z]`.
pub fn parse_polynomial(text: &str, field: Field) -> Result<Polynomial> {
    let mut p = Parser {
        chars: text.chars().collect(),
        pos: 0,
        ring: PolyRing::projective(field),
    };
    p.skip_ws();
    if p.at_end() {
        return Err(p.error("empty expression"));
    }
    let e = p.expr()?;
    p.skip_ws();
    if !p.at_end() {
        return Err(p.error("unexpected trailing input"));
    }
    Ok(e)
}

struct Parser {
    chars: Vec<char>,
    pos: usize,
    ring: PolyRing,
}

impl Parser {
    fn at_end(&self) -> bool {
        self.pos >= self.chars.len()
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn skip_ws(&mut self) {
        while self.peek().is_some_and(char::is_whitespace) {
            self.pos += 1;
        }
    }

    fn error(&self, message: &str) -> Error {
        Error::Syntax {
            position: self.pos,
            message: message.to_string(),
        }
    }

    fn eat(&mut self, c: char) -> bool {
        self.skip_ws();
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<Polynomial> {
        let negate = self.eat('-');
        let mut acc = self.term()?;
        if negate {
            acc = -&acc;
        }
        loop {
            if self.eat('+') {
                acc = &acc + &self.term()?;
            } else if self.eat('-') {
                acc = &acc - &self.term()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<Polynomial> {
        let mut acc = self.factor()?;
        loop {
            if self.eat('*') {
                acc = &acc * &self.factor()?;
            } else if self.eat('/') {
                self.skip_ws();
                let at = self.pos;
                let d = self.integer()?;
                let inv = self.ring.field.from_bigint(&d).inv().ok_or(Error::Syntax {
                    position: at,
                    message: "division by zero".to_string(),
                })?;
                acc = acc.scale(&inv);
            } else {
                return Ok(acc);
            }
        }
    }

    fn factor(&mut self) -> Result<Polynomial> {
        let base = self.atom()?;
        if self.eat('^') {
            self.skip_ws();
            let at = self.pos;
            let n = self.integer()?;
            let n = u32::try_from(n).map_err(|_| Error::Syntax {
                position: at,
                message: "exponent too large".to_string(),
            })?;
            return Ok(base.pow(n));
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Polynomial> {
        self.skip_ws();
        match self.peek() {
            None => Err(self.error("expected a factor")),
            Some('(') => {
                self.pos += 1;
                let inner = self.expr()?;
                if !self.eat(')') {
                    return Err(self.error("expected ')'"));
                }
                Ok(inner)
            }
            Some(c) if c.is_ascii_digit() => {
                let n = self.integer()?;
                Ok(Polynomial::constant(
                    self.ring,
                    self.ring.field.from_bigint(&n),
                ))
            }
            Some(c) if c.is_alphabetic() => {
                let at = self.pos;
                self.pos += 1;
                match VAR_NAMES.iter().position(|&v| v == c) {
                    Some(var) => Ok(Polynomial::monomial(
                        self.ring,
                        Monomial::var(var, 1),
                        self.ring.field.one(),
                    )),
                    None => Err(Error::UnknownVariable {
                        position: at,
                        name: c,
                    }),
                }
            }
            Some(_) => Err(self.error("expected a factor")),
        }
    }

    fn integer(&mut self) -> Result<BigInt> {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected an integer"));
        }
        let digits: alloc::string::String = self.chars[start..self.pos].iter().collect();
        Ok(digits.parse().expect("ascii digits"))
    }
}
