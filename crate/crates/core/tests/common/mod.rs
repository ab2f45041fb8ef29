#![allow(dead_code)]

pub mod closed_forms;

use minsurf::catalog::{get_entry, CatalogEntry, HMode, Params};
use num_rational::BigRational;
use num_traits::{One, ToPrimitive};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

pub fn entry(name: &str) -> CatalogEntry {
    get_entry(name, &Params::new()).unwrap()
}

pub fn hemi(mode: HMode) -> CatalogEntry {
    entry("hemiellipsoid").with_h_mode(mode)
}

pub fn rng(seed: u64) -> StdRng {
    StdRng::seed_from_u64(seed)
}

/// `n` random interior points of `[lo, hi]^2`.
pub fn random_points(rng: &mut StdRng, n: usize, lo: f64, hi: f64) -> Vec<(f64, f64)> {
    (0..n)
        .map(|_| (rng.random_range(lo..hi), rng.random_range(lo..hi)))
        .collect()
}

pub fn rel_err(got: f64, want: f64) -> f64 {
    (got - want).abs() / want.abs().max(1e-300)
}

/// Relative error with a floor, for values that may pass through zero.
pub fn scaled_err(got: f64, want: f64, scale: f64) -> f64 {
    (got - want).abs() / want.abs().max(scale)
}

/// Evaluator for `+ - ^`, parentheses, numbers, `u v t`, and multiplication
/// by juxtaposition.
#[derive(Debug, Clone)]
pub struct Formula {
    root: Node,
}

#[derive(Debug, Clone)]
enum Node {
    Num(f64),
    Var(usize),
    Add(Box<Node>, Box<Node>),
    Sub(Box<Node>, Box<Node>),
    Mul(Box<Node>, Box<Node>),
    Neg(Box<Node>),
    Pow(Box<Node>, i32),
}

impl Formula {
    pub fn parse(src: &str) -> Self {
        let mut p = P {
            s: src.as_bytes(),
            i: 0,
        };
        let root = p.expr();
        p.ws();
        assert_eq!(p.i, p.s.len(), "trailing input at {} in {src}", p.i);
        Self { root }
    }

    pub fn eval(&self, u: f64, v: f64, t: f64) -> f64 {
        ev(&self.root, [u, v, t])
    }

    /// Exact value at binary fractions, rounded once at the end.
    pub fn eval_exact(&self, u: f64, v: f64, t: f64) -> f64 {
        let x = [u, v, t].map(|a| BigRational::from_float(a).expect("finite"));
        ev_exact(&self.root, &x).to_f64().expect("representable")
    }
}

fn ev_exact(n: &Node, x: &[BigRational; 3]) -> BigRational {
    match n {
        Node::Num(c) => BigRational::from_float(*c).expect("finite"),
        Node::Var(i) => x[*i].clone(),
        Node::Add(a, b) => ev_exact(a, x) + ev_exact(b, x),
        Node::Sub(a, b) => ev_exact(a, x) - ev_exact(b, x),
        Node::Mul(a, b) => ev_exact(a, x) * ev_exact(b, x),
        Node::Neg(a) => -ev_exact(a, x),
        Node::Pow(a, k) => {
            let base = ev_exact(a, x);
            let mut acc = BigRational::one();
            for _ in 0..*k {
                acc *= &base;
            }
            acc
        }
    }
}

fn ev(n: &Node, x: [f64; 3]) -> f64 {
    match n {
        Node::Num(c) => *c,
        Node::Var(i) => x[*i],
        Node::Add(a, b) => ev(a, x) + ev(b, x),
        Node::Sub(a, b) => ev(a, x) - ev(b, x),
        Node::Mul(a, b) => ev(a, x) * ev(b, x),
        Node::Neg(a) => -ev(a, x),
        Node::Pow(a, k) => ev(a, x).powi(*k),
    }
}

struct P<'a> {
    s: &'a [u8],
    i: usize,
}

impl P<'_> {
    fn ws(&mut self) {
        while self.i < self.s.len() && self.s[self.i].is_ascii_whitespace() {
            self.i += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.ws();
        self.s.get(self.i).copied()
    }

    fn expr(&mut self) -> Node {
        let mut lhs = self.term();
        loop {
            match self.peek() {
                Some(b'+') => {
                    self.i += 1;
                    lhs = Node::Add(Box::new(lhs), Box::new(self.term()));
                }
                Some(b'-') => {
                    self.i += 1;
                    lhs = Node::Sub(Box::new(lhs), Box::new(self.term()));
                }
                _ => return lhs,
            }
        }
    }

    fn term(&mut self) -> Node {
        let mut lhs = self.unary();
        loop {
            match self.peek() {
                Some(b'*') => {
                    self.i += 1;
                    lhs = Node::Mul(Box::new(lhs), Box::new(self.unary()));
                }
                Some(c) if c == b'(' || c.is_ascii_alphanumeric() || c == b'.' => {
                    lhs = Node::Mul(Box::new(lhs), Box::new(self.power()));
                }
                _ => return lhs,
            }
        }
    }

    fn unary(&mut self) -> Node {
        if self.peek() == Some(b'-') {
            self.i += 1;
            return Node::Neg(Box::new(self.unary()));
        }
        if self.peek() == Some(b'+') {
            self.i += 1;
        }
        self.power()
    }

    fn power(&mut self) -> Node {
        let base = self.atom();
        if self.peek() == Some(b'^') {
            self.i += 1;
            let paren = self.peek() == Some(b'(');
            if paren {
                self.i += 1;
            }
            self.ws();
            let start = self.i;
            while self.i < self.s.len() && self.s[self.i].is_ascii_digit() {
                self.i += 1;
            }
            let k: i32 = std::str::from_utf8(&self.s[start..self.i]).unwrap().parse().unwrap();
            if paren {
                assert_eq!(self.peek(), Some(b')'));
                self.i += 1;
            }
            return Node::Pow(Box::new(base), k);
        }
        base
    }

    fn atom(&mut self) -> Node {
        match self.peek() {
            Some(b'(') => {
                self.i += 1;
                let e = self.expr();
                assert_eq!(self.peek(), Some(b')'), "unbalanced at {}", self.i);
                self.i += 1;
                e
            }
            Some(b'u') => {
                self.i += 1;
                Node::Var(0)
            }
            Some(b'v') => {
                self.i += 1;
                Node::Var(1)
            }
            Some(b't') => {
                self.i += 1;
                Node::Var(2)
            }
            Some(c) if c.is_ascii_digit() || c == b'.' => {
                let start = self.i;
                while self.i < self.s.len()
                    && (self.s[self.i].is_ascii_digit() || self.s[self.i] == b'.')
                {
                    self.i += 1;
                }
                Node::Num(std::str::from_utf8(&self.s[start..self.i]).unwrap().parse().unwrap())
            }
            other => panic!("unexpected {:?} at {}", other.map(|c| c as char), self.i),
        }
    }
}
