//! Builders for the named graph families used throughout the crate, and a
//! small descriptor language for naming graphs on the command line.
//!
//! Descriptor grammar:
//!
//! ```text
//! expr    := term ('+' term)*          join, left to right
//! term    := 'co' atom | atom          'co' takes the complement
//! atom    := 'K' n | 'K' a ',' b | 'C' n | 'P' n | t 'K1'
//!          | 'KC' d                    K_{2d} minus a Hamiltonian cycle
//!          | 'Petersen' | 'g6:' graph6 | '(' expr ')'
//!          | atom 'u' atom             disjoint union
//! ```
//!
//! For example `K6+4K1` is the join of `K6` with four isolated vertices.

use crate::error::{Error, Result};
use crate::formats::graph6;
use crate::graph::Graph;

pub fn complete(n: usize) -> Graph {
    let edges = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
    Graph::from_edges(n, edges).expect("valid").with_name(format!("K{n}"))
}

pub fn cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::InvalidParameter(format!("cycle needs n >= 3, got {n}")));
    }
    let g = Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n)))?;
    Ok(g.with_name(format!("C{n}")))
}

pub fn path(n: usize) -> Result<Graph> {
    if n == 0 {
        return Err(Error::InvalidParameter("path needs n >= 1".into()));
    }
    let g = Graph::from_edges(n, (1..n).map(|i| (i - 1, i)))?;
    Ok(g.with_name(format!("P{n}")))
}

pub fn complete_bipartite(a: usize, b: usize) -> Graph {
    let edges = (0..a).flat_map(|u| (a..a + b).map(move |v| (u, v)));
    Graph::from_edges(a + b, edges)
        .expect("valid")
        .with_name(format!("K{a},{b}"))
}

/// `t` isolated vertices.
pub fn independent(t: usize) -> Graph {
    Graph::empty(t).with_name(format!("{t}K1"))
}

/// `K_m + tK_1`: a clique joined to an independent set.
pub fn clique_join_independent(m: usize, t: usize) -> Graph {
    complete(m)
        .join(&Graph::empty(t))
        .with_name(format!("K{m}+{t}K1"))
}

/// `K_{2d}` minus the edges of the Hamiltonian cycle `0-1-..-(2d-1)-0`.
pub fn complete_minus_cycle(d: usize) -> Result<Graph> {
    if d < 2 {
        return Err(Error::InvalidParameter(format!("K_2d minus C_2d needs d >= 2, got {d}")));
    }
    Ok(cycle(2 * d)?.complement().with_name(format!("K{}-C{}", 2 * d, 2 * d)))
}

pub fn petersen() -> Graph {
    let outer = (0..5).map(|i| (i, (i + 1) % 5));
    let spokes = (0..5).map(|i| (i, i + 5));
    let inner = (0..5).map(|i| (5 + i, 5 + (i + 2) % 5));
    Graph::from_edges(10, outer.chain(spokes).chain(inner))
        .expect("valid")
        .with_name("Petersen")
}

/// Parses a graph descriptor such as `K5`, `C5`, `K4,4`, `K6+4K1`, `coC6` or `g6:A_`.
pub fn parse_descriptor(text: &str) -> Result<Graph> {
    let mut parser = Parser { text, pos: 0 };
    let g = parser.expr()?;
    if parser.pos != text.len() {
        return Err(parser.error("unexpected trailing input"));
    }
    Ok(g.with_name(text))
}

struct Parser<'a> {
    text: &'a str,
    pos: usize,
}

impl Parser<'_> {
    fn error(&self, reason: &str) -> Error {
        Error::Descriptor {
            descriptor: self.text.to_string(),
            reason: format!("{reason} at position {}", self.pos),
        }
    }

    fn rest(&self) -> &str {
        &self.text[self.pos..]
    }

    fn eat(&mut self, prefix: &str) -> bool {
        if self.rest().starts_with(prefix) {
            self.pos += prefix.len();
            true
        } else {
            false
        }
    }

    fn number(&mut self) -> Result<usize> {
        let digits = self.rest().bytes().take_while(u8::is_ascii_digit).count();
        if digits == 0 {
            return Err(self.error("expected a number"));
        }
        let value = self.rest()[..digits]
            .parse()
            .map_err(|_| self.error("number too large"))?;
        self.pos += digits;
        Ok(value)
    }

    fn expr(&mut self) -> Result<Graph> {
        let mut g = self.term()?;
        while self.eat("+") {
            g = g.join(&self.term()?);
        }
        Ok(g)
    }

    fn term(&mut self) -> Result<Graph> {
        let mut g = if self.eat("co") {
            self.atom()?.complement()
        } else {
            self.atom()?
        };
        while self.eat("u") {
            g = g.disjoint_union(&self.atom()?);
        }
        Ok(g)
    }

    fn atom(&mut self) -> Result<Graph> {
        if self.eat("(") {
            let g = self.expr()?;
            if !self.eat(")") {
                return Err(self.error("expected `)`"));
            }
            return Ok(g);
        }
        if self.eat("g6:") {
            let end = self.rest().find([')', '+']).unwrap_or(self.rest().len());
            let code = &self.rest()[..end];
            let g = graph6::parse_graph6(code)?;
            self.pos += end;
            return Ok(g);
        }
        if self.eat("Petersen") {
            return Ok(petersen());
        }
        if self.eat("KC") {
            let d = self.number()?;
            return complete_minus_cycle(d);
        }
        if self.eat("K") {
            let a = self.number()?;
            if self.eat(",") {
                let b = self.number()?;
                return Ok(complete_bipartite(a, b));
            }
            return Ok(complete(a));
        }
        if self.eat("C") {
            return cycle(self.number()?);
        }
        if self.eat("P") {
            return path(self.number()?);
        }
        let t = self.number()?;
        if self.eat("K1") {
            return Ok(independent(t));
        }
        Err(self.error("expected `K1` after a count"))
    }
}
