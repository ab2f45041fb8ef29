//! Tiny expression language for user-defined surfaces and blend functions.
//!
//! ```text
//! expr  := term (('+' | '-') term)*
//! term  := unary ('*' unary)*
//! unary := '-' unary | power
//! power := atom ('^' INTEGER)?
//! atom  := NUMBER | 'u' | 'v' | 'pi' | ('sin' | 'cos') '(' expr ')' | '(' expr ')'
//! ```
//!
//! There is no division: every expression stays a polynomial in `u`, `v`
//! and `sin`/`cos` terms, which the jet arithmetic differentiates exactly.

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::jet::Jet;
use crate::ring::Arith;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum ExprError {
    #[error("malformed expression at byte {pos}: {msg}")]
    Malformed { pos: usize, msg: String },
    #[error("unsupported function `{0}` (only sin and cos are available)")]
    UnsupportedFunction(String),
    #[error("unknown identifier `{0}`")]
    UnknownIdentifier(String),
}

#[derive(Debug, Clone, PartialEq)]
enum Node {
    Num(f64),
    U,
    V,
    Add(Box<Node>, Box<Node>),
    Sub(Box<Node>, Box<Node>),
    Mul(Box<Node>, Box<Node>),
    Neg(Box<Node>),
    Pow(Box<Node>, u32),
    Sin(Box<Node>),
    Cos(Box<Node>),
}

/// A parsed expression in `u` and `v`; serializes as its source text.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub struct Expression {
    source: String,
    root: Node,
}

impl Expression {
    pub fn parse(source: &str) -> Result<Self, ExprError> {
        let mut p = Parser {
            src: source.as_bytes(),
            pos: 0,
        };
        let root = p.expr()?;
        p.skip_ws();
        if p.pos != p.src.len() {
            return Err(p.err("unexpected trailing input"));
        }
        Ok(Self {
            source: source.to_string(),
            root,
        })
    }

    pub fn source(&self) -> &str {
        &self.source
    }

    pub fn eval(&self, u: f64, v: f64) -> f64 {
        eval_f64(&self.root, u, v)
    }

    /// Jet of the expression given jets of the coordinates.
    pub fn eval_jet(&self, u: &Jet<f64>, v: &Jet<f64>) -> Jet<f64> {
        eval_jet(&self.root, u, v)
    }
}

impl fmt::Display for Expression {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.source)
    }
}

impl TryFrom<String> for Expression {
    type Error = ExprError;
    fn try_from(s: String) -> Result<Self, Self::Error> {
        Expression::parse(&s)
    }
}

impl From<Expression> for String {
    fn from(e: Expression) -> Self {
        e.source
    }
}

fn eval_f64(n: &Node, u: f64, v: f64) -> f64 {
    match n {
        Node::Num(c) => *c,
        Node::U => u,
        Node::V => v,
        Node::Add(a, b) => eval_f64(a, u, v) + eval_f64(b, u, v),
        Node::Sub(a, b) => eval_f64(a, u, v) - eval_f64(b, u, v),
        Node::Mul(a, b) => eval_f64(a, u, v) * eval_f64(b, u, v),
        Node::Neg(a) => -eval_f64(a, u, v),
        Node::Pow(a, k) => eval_f64(a, u, v).powi(*k as i32),
        Node::Sin(a) => eval_f64(a, u, v).sin(),
        Node::Cos(a) => eval_f64(a, u, v).cos(),
    }
}

fn eval_jet(n: &Node, u: &Jet<f64>, v: &Jet<f64>) -> Jet<f64> {
    let k = u.order();
    match n {
        Node::Num(c) => Jet::constant(*c, k),
        Node::U => u.clone(),
        Node::V => v.clone(),
        Node::Add(a, b) => eval_jet(a, u, v).add(&eval_jet(b, u, v)),
        Node::Sub(a, b) => eval_jet(a, u, v).sub(&eval_jet(b, u, v)),
        Node::Mul(a, b) => eval_jet(a, u, v).mul(&eval_jet(b, u, v)),
        Node::Neg(a) => eval_jet(a, u, v).neg(),
        Node::Pow(a, e) => eval_jet(a, u, v).powi(*e),
        Node::Sin(a) => eval_jet(a, u, v).sin(),
        Node::Cos(a) => eval_jet(a, u, v).cos(),
    }
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn err(&self, msg: &str) -> ExprError {
        ExprError::Malformed {
            pos: self.pos,
            msg: msg.to_string(),
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

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<Node, ExprError> {
        let mut lhs = self.term()?;
        loop {
            if self.eat(b'+') {
                lhs = Node::Add(Box::new(lhs), Box::new(self.term()?));
            } else if self.eat(b'-') {
                lhs = Node::Sub(Box::new(lhs), Box::new(self.term()?));
            } else {
                return Ok(lhs);
            }
        }
    }

    fn term(&mut self) -> Result<Node, ExprError> {
        let mut lhs = self.unary()?;
        loop {
            if self.eat(b'*') {
                lhs = Node::Mul(Box::new(lhs), Box::new(self.unary()?));
            } else if self.peek() == Some(b'/') {
                return Err(self.err("division is not supported"));
            } else {
                return Ok(lhs);
            }
        }
    }

    fn unary(&mut self) -> Result<Node, ExprError> {
        if self.eat(b'-') {
            return Ok(Node::Neg(Box::new(self.unary()?)));
        }
        self.power()
    }

    fn power(&mut self) -> Result<Node, ExprError> {
        let base = self.atom()?;
        if self.eat(b'^') {
            self.skip_ws();
            let start = self.pos;
            while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
                self.pos += 1;
            }
            let digits = std::str::from_utf8(&self.src[start..self.pos]).unwrap_or("");
            let e: u32 = digits
                .parse()
                .map_err(|_| self.err("exponent must be a non-negative integer"))?;
            return Ok(Node::Pow(Box::new(base), e));
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Node, ExprError> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let e = self.expr()?;
                if !self.eat(b')') {
                    return Err(self.err("expected `)`"));
                }
                Ok(e)
            }
            Some(c) if c.is_ascii_digit() || c == b'.' => self.number(),
            Some(c) if c.is_ascii_alphabetic() => {
                let start = self.pos;
                while self.pos < self.src.len() && self.src[self.pos].is_ascii_alphanumeric() {
                    self.pos += 1;
                }
                let name = std::str::from_utf8(&self.src[start..self.pos]).unwrap_or("");
                match name {
                    "u" => Ok(Node::U),
                    "v" => Ok(Node::V),
                    "pi" => Ok(Node::Num(std::f64::consts::PI)),
                    "sin" | "cos" => {
                        if !self.eat(b'(') {
                            return Err(self.err("expected `(` after function name"));
                        }
                        let arg = self.expr()?;
                        if !self.eat(b')') {
                            return Err(self.err("expected `)`"));
                        }
                        Ok(if name == "sin" {
                            Node::Sin(Box::new(arg))
                        } else {
                            Node::Cos(Box::new(arg))
                        })
                    }
                    _ if self.peek() == Some(b'(') => {
                        Err(ExprError::UnsupportedFunction(name.to_string()))
                    }
                    _ => Err(ExprError::UnknownIdentifier(name.to_string())),
                }
            }
            Some(_) => Err(self.err("unexpected character")),
            None => Err(self.err("unexpected end of input")),
        }
    }

    fn number(&mut self) -> Result<Node, ExprError> {
        let start = self.pos;
        let s = self.src;
        while self.pos < s.len() && (s[self.pos].is_ascii_digit() || s[self.pos] == b'.') {
            self.pos += 1;
        }
        if self.pos < s.len() && (s[self.pos] == b'e' || s[self.pos] == b'E') {
            let save = self.pos;
            self.pos += 1;
            if self.pos < s.len() && (s[self.pos] == b'+' || s[self.pos] == b'-') {
                self.pos += 1;
            }
            let digits = self.pos;
            while self.pos < s.len() && s[self.pos].is_ascii_digit() {
                self.pos += 1;
            }
            if digits == self.pos {
                self.pos = save;
            }
        }
        let text = std::str::from_utf8(&s[start..self.pos]).unwrap_or("");
        text.parse()
            .map(Node::Num)
            .map_err(|_| ExprError::Malformed {
                pos: start,
                msg: format!("bad number `{text}`"),
            })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::jet::Var;

    #[test]
    fn evaluates_hump() {
        let e = Expression::parse("16*u*v*(1-u)*(1-v)").unwrap();
        assert_eq!(e.eval(0.5, 0.5), 1.0);
        let e = Expression::parse("16 * u*v * (1 - u) * (1 - v)").unwrap();
        assert_eq!(e.eval(0.25, 0.5), 16.0 * 0.25 * 0.5 * 0.75 * 0.5);
    }

    #[test]
    fn precedence_and_powers() {
        let e = Expression::parse("-u^2 + 2*v - 3").unwrap();
        assert_eq!(e.eval(3.0, 1.0), -9.0 + 2.0 - 3.0);
        let e = Expression::parse("(u+v)^3").unwrap();
        assert_eq!(e.eval(1.0, 1.0), 8.0);
        let e = Expression::parse("1.5e1 * sin(pi/1)").err().unwrap();
        assert!(matches!(e, ExprError::Malformed { .. }));
        let e = Expression::parse("v*(pi - v)").unwrap();
        assert_eq!(e.eval(0.0, std::f64::consts::PI), 0.0);
        assert_eq!(Expression::parse("2.5e-1").unwrap().eval(0.0, 0.0), 0.25);
    }

    #[test]
    fn jets_match_values() {
        let e = Expression::parse("sin(u)*cos(v) + u^3*v").unwrap();
        let (u, v) = (0.4, 1.3);
        let j = e.eval_jet(&Jet::seed(Var::U, u, 3), &Jet::seed(Var::V, v, 3));
        assert!((j.value() - e.eval(u, v)).abs() < 1e-14);
        let du = u.cos() * v.cos() + 3.0 * u * u * v;
        assert!((j.extract(1, 0).unwrap() - du).abs() < 1e-14);
    }

    #[test]
    fn rejects_bad_input() {
        assert_eq!(
            Expression::parse("exp(u)"),
            Err(ExprError::UnsupportedFunction("exp".into()))
        );
        assert_eq!(Expression::parse("w + 1"), Err(ExprError::UnknownIdentifier("w".into())));
        assert!(Expression::parse("u +").is_err());
        assert!(Expression::parse("(u").is_err());
        assert!(Expression::parse("u / 2").is_err());
        assert!(Expression::parse("u^-1").is_err());
        assert!(Expression::parse("u v").is_err());
    }

    #[test]
    fn serializes_as_source() {
        let e = Expression::parse("u*(1-u)").unwrap();
        let s = serde_json::to_string(&e).unwrap();
        assert_eq!(s, "\"u*(1-u)\"");
        let back: Expression = serde_json::from_str(&s).unwrap();
        assert_eq!(back, e);
        assert!(serde_json::from_str::<Expression>("\"u/\"").is_err());
    }
}
