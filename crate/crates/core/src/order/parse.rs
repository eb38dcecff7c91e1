//! Textual grammar for order terms and points.
//!
//! Term grammar (whitespace insignificant):
//!
//! ```text
//! term := "n:" <k>            finite chain, k >= 1
//!       | "w" | "w*" | "z" | "eta"
//!       | "sum(" term ("," term)* ")"
//!       | "rep(" term "," term ")"
//!       | "X" | "f(" term ")" | "g(" term ")"    expanding macros
//! ```
//!
//! Points are parsed against a term, so the pair syntax `(a,b)` is
//! unambiguous: a sum point is `(part index, sub point)`, a replacement
//! point is `(major point, minor point)`.

use super::{OrderTerm, Point};
use num::BigRational;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("syntax error at byte {position}: {message}")]
pub struct ParseError {
    pub position: usize,
    pub message: String,
}

struct Cursor<'a> {
    text: &'a str,
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn new(text: &'a str) -> Self {
        Cursor { text, pos: 0 }
    }

    fn err<T>(&self, message: impl Into<String>) -> Result<T, ParseError> {
        Err(ParseError {
            position: self.pos,
            message: message.into(),
        })
    }

    fn skip_ws(&mut self) {
        while self.pos < self.text.len()
            && self.text.as_bytes()[self.pos].is_ascii_whitespace()
        {
            self.pos += 1;
        }
    }

    fn eat(&mut self, token: &str) -> bool {
        self.skip_ws();
        if self.text[self.pos..].starts_with(token) {
            self.pos += token.len();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, token: &str) -> Result<(), ParseError> {
        if self.eat(token) {
            Ok(())
        } else {
            self.err(format!("expected `{token}`"))
        }
    }

    fn uint(&mut self) -> Result<u64, ParseError> {
        self.skip_ws();
        let start = self.pos;
        while self
            .text
            .as_bytes()
            .get(self.pos)
            .is_some_and(|b| b.is_ascii_digit())
        {
            self.pos += 1;
        }
        if start == self.pos {
            return self.err("expected a number");
        }
        self.text[start..self.pos]
            .parse()
            .or_else(|_| self.err("number out of range"))
    }

    fn int(&mut self) -> Result<i64, ParseError> {
        let neg = self.eat("-");
        let n = self.uint()?;
        let n = i64::try_from(n).or_else(|_| self.err("number out of range"))?;
        Ok(if neg { -n } else { n })
    }

    fn done(&mut self) -> Result<(), ParseError> {
        self.skip_ws();
        if self.pos == self.text.len() {
            Ok(())
        } else {
            self.err("trailing input")
        }
    }
}

/// Parse a term. Round-trips with the canonical printer.
pub fn parse_term(text: &str) -> Result<OrderTerm, ParseError> {
    let mut c = Cursor::new(text);
    let t = term(&mut c)?;
    c.done()?;
    Ok(t)
}

fn term(c: &mut Cursor) -> Result<OrderTerm, ParseError> {
    if c.eat("n:") {
        let at = c.pos;
        let k = c.uint()?;
        if k == 0 {
            return Err(ParseError {
                position: at,
                message: "finite order requires k >= 1".into(),
            });
        }
        let k = u32::try_from(k).map_err(|_| ParseError {
            position: at,
            message: "finite width out of range".into(),
        })?;
        return Ok(OrderTerm::Finite(k));
    }
    if c.eat("w*") {
        return Ok(OrderTerm::OmegaStar);
    }
    if c.eat("w") {
        return Ok(OrderTerm::Omega);
    }
    if c.eat("z") {
        return Ok(OrderTerm::Zeta);
    }
    if c.eat("eta") {
        return Ok(OrderTerm::Eta);
    }
    if c.eat("sum(") {
        let mut parts = vec![term(c)?];
        while c.eat(",") {
            parts.push(term(c)?);
        }
        c.expect(")")?;
        return Ok(OrderTerm::sum(parts));
    }
    if c.eat("rep(") {
        let major = term(c)?;
        c.expect(",")?;
        let minor = term(c)?;
        c.expect(")")?;
        return Ok(OrderTerm::replace(major, minor));
    }
    if c.eat("X") {
        return Ok(crate::reduce::make_x());
    }
    if c.eat("f(") {
        let inner = term(c)?;
        c.expect(")")?;
        return Ok(crate::reduce::apply_f(&inner));
    }
    if c.eat("g(") {
        let inner = term(c)?;
        c.expect(")")?;
        return Ok(crate::reduce::apply_g(&inner));
    }
    c.err("expected a term")
}

/// Parse a point address against the shape of `term`.
pub fn parse_point(term: &OrderTerm, text: &str) -> Result<Point, ParseError> {
    let mut c = Cursor::new(text);
    let p = point(&mut c, term)?;
    c.done()?;
    if !p.is_valid_for(term) {
        return Err(ParseError {
            position: 0,
            message: "point is out of range for the term".into(),
        });
    }
    Ok(p)
}

fn point(c: &mut Cursor, term: &OrderTerm) -> Result<Point, ParseError> {
    match term {
        OrderTerm::Finite(_) => {
            let at = c.pos;
            let i = c.uint()?;
            u32::try_from(i)
                .map(Point::Index)
                .map_err(|_| ParseError {
                    position: at,
                    message: "index out of range".into(),
                })
        }
        OrderTerm::Omega | OrderTerm::OmegaStar => Ok(Point::Nat(c.uint()?)),
        OrderTerm::Zeta => Ok(Point::Int(c.int()?)),
        OrderTerm::Eta => {
            let num = c.int()?;
            c.expect("/")?;
            let den = c.int()?;
            if den == 0 {
                return c.err("zero denominator");
            }
            Ok(Point::Rat(BigRational::new(num.into(), den.into())))
        }
        OrderTerm::Sum(parts) => {
            c.expect("(")?;
            let at = c.pos;
            let j = c.uint()? as usize;
            if j >= parts.len() {
                return Err(ParseError {
                    position: at,
                    message: format!("sum has only {} parts", parts.len()),
                });
            }
            c.expect(",")?;
            let sub = point(c, &parts[j])?;
            c.expect(")")?;
            Ok(Point::in_sum(j, sub))
        }
        OrderTerm::Replace(major, minor) => {
            c.expect("(")?;
            let a = point(c, major)?;
            c.expect(",")?;
            let b = point(c, minor)?;
            c.expect(")")?;
            Ok(Point::in_replace(a, b))
        }
    }
}
