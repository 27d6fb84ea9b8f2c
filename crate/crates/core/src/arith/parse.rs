//! Recursive-descent parser for polynomial expressions.
//!
//! Grammar: sums and differences of products, `^` with a non-negative integer
//! exponent, integer and `a/b` rational literals, parentheses and variable
//! names from the ring. Division is only accepted by nonzero constants.

use alloc::string::{String, ToString};
use alloc::sync::Arc;

use num_bigint::BigInt;

use super::poly::Poly;
use super::rat::Rat;
use super::ring::Ring;
use crate::error::{Error, Result};

/// Parses `text` as a polynomial in `ring`. Columns in errors are 1-based
/// character positions.
pub fn parse_poly(ring: &Arc<Ring>, text: &str) -> Result<Poly> {
    let mut p = Parser { chars: text.chars().collect(), pos: 0, ring };
    p.skip_ws();
    if p.peek().is_none() {
        return Err(p.err("empty expression"));
    }
    let v = p.expr()?;
    p.skip_ws();
    if let Some(c) = p.peek() {
        return Err(p.err(&alloc::format!("unexpected `{}`", c)));
    }
    Ok(v)
}

struct Parser<'a> {
    chars: alloc::vec::Vec<char>,
    pos: usize,
    ring: &'a Arc<Ring>,
}

impl Parser<'_> {
    fn err(&self, msg: &str) -> Error {
        Error::Parse { column: self.pos + 1, message: msg.to_string() }
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn skip_ws(&mut self) {
        while matches!(self.peek(), Some(c) if c.is_whitespace()) {
            self.pos += 1;
        }
    }

    fn expr(&mut self) -> Result<Poly> {
        let mut acc = self.term()?;
        loop {
            self.skip_ws();
            match self.peek() {
                Some('+') => {
                    self.pos += 1;
                    let t = self.term()?;
                    acc = &acc + &t;
                }
                Some('-') => {
                    self.pos += 1;
                    let t = self.term()?;
                    acc = &acc - &t;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Poly> {
        let mut acc = self.unary()?;
        loop {
            self.skip_ws();
            match self.peek() {
                Some('*') => {
                    self.pos += 1;
                    let f = self.unary()?;
                    acc = &acc * &f;
                }
                Some('/') => {
                    self.pos += 1;
                    self.skip_ws();
                    let at = self.pos;
                    let f = self.unary()?;
                    if !f.is_constant() {
                        self.pos = at;
                        return Err(self.err("division by a non-constant"));
                    }
                    let c = f.constant_term();
                    if c.is_zero() {
                        self.pos = at;
                        return Err(self.err("division by zero"));
                    }
                    acc = acc.scale(&c.inv());
                }
                _ => return Ok(acc),
            }
        }
    }

    fn unary(&mut self) -> Result<Poly> {
        self.skip_ws();
        match self.peek() {
            Some('-') => {
                self.pos += 1;
                Ok(self.unary()?.neg())
            }
            Some('+') => {
                self.pos += 1;
                self.unary()
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> Result<Poly> {
        let base = self.atom()?;
        self.skip_ws();
        if self.peek() == Some('^') {
            self.pos += 1;
            self.skip_ws();
            let start = self.pos;
            while matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
                self.pos += 1;
            }
            if start == self.pos {
                return Err(self.err("expected a non-negative integer exponent"));
            }
            let digits: String = self.chars[start..self.pos].iter().collect();
            let e: u32 = digits.parse().map_err(|_| {
                Error::Parse { column: start + 1, message: "exponent too large".into() }
            })?;
            if e > 4096 {
                return Err(Error::Parse { column: start + 1, message: "exponent too large".into() });
            }
            return Ok(base.pow(e));
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Poly> {
        self.skip_ws();
        let start = self.pos;
        match self.peek() {
            Some('(') => {
                self.pos += 1;
                let v = self.expr()?;
                self.skip_ws();
                if self.peek() != Some(')') {
                    return Err(self.err("expected `)`"));
                }
                self.pos += 1;
                Ok(v)
            }
            Some(c) if c.is_ascii_digit() => {
                while matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
                    self.pos += 1;
                }
                if matches!(self.peek(), Some('.') | Some('e') | Some('E')) {
                    return Err(Error::NonRational {
                        column: start + 1,
                        message: "floating-point literals are not accepted; write fractions as a/b".into(),
                    });
                }
                let digits: String = self.chars[start..self.pos].iter().collect();
                let n: BigInt = digits.parse().map_err(|_| self.err("bad integer literal"))?;
                Ok(Poly::constant(self.ring, Rat::from_bigint(n)))
            }
            Some(c) if c.is_alphabetic() || c == '_' => {
                while matches!(self.peek(), Some(c) if c.is_alphanumeric() || c == '_' || c == '\'') {
                    self.pos += 1;
                }
                let name: String = self.chars[start..self.pos].iter().collect();
                self.skip_ws();
                if self.peek() == Some('(') {
                    return Err(Error::NonRational {
                        column: start + 1,
                        message: alloc::format!("function `{}` is not a polynomial operation", name),
                    });
                }
                match self.ring.var_index(&name) {
                    Some(i) => Ok(Poly::var(self.ring, i)),
                    None => Err(Error::UnknownVariable(name)),
                }
            }
            Some(c) => Err(self.err(&alloc::format!("unexpected `{}`", c))),
            None => Err(self.err("unexpected end of expression")),
        }
    }
}
