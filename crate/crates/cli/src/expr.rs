//! Text syntax for elements of `S`.
//!
//! An element is a sum of products of factors, for example
//! `2*y*x^[1] - (1,0)*x^g`. A factor is a scalar (`3`, `-1/2`), a basis
//! name of the coefficient algebra, a coordinate tuple `(c_1,…,c_d)`, a power
//! `x^a` with `a` a monoid element (`x^[2,0]`, `x^g`) or a parenthesized
//! element.

use orelab_core::{BaseRing, OreElem, OreRing};

use crate::CliError;

pub fn parse_element<B: BaseRing>(ring: &OreRing<B>, text: &str) -> Result<OreElem<B::Elem>, CliError> {
    let mut names: Vec<(String, usize)> = ring
        .algebra()
        .basis_names()
        .map(|ns| ns.iter().cloned().enumerate().map(|(i, n)| (n, i)).collect())
        .unwrap_or_default();
    names.sort_by(|a, b| b.0.len().cmp(&a.0.len()).then(a.0.cmp(&b.0)));
    let mut p = Parser { ring, text, pos: 0, names };
    let value = p.expr()?;
    p.skip_ws();
    if p.pos != text.len() {
        return Err(p.error("unexpected input"));
    }
    Ok(value)
}

struct Parser<'a, B: BaseRing> {
    ring: &'a OreRing<B>,
    text: &'a str,
    pos: usize,
    names: Vec<(String, usize)>,
}

fn is_word(c: char) -> bool {
    c.is_ascii_alphanumeric() || c == '_'
}

impl<B: BaseRing> Parser<'_, B> {
    fn rest(&self) -> &str {
        &self.text[self.pos..]
    }

    fn skip_ws(&mut self) {
        let trimmed = self.rest().trim_start();
        self.pos = self.text.len() - trimmed.len();
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.rest().chars().next()
    }

    fn error(&self, what: &str) -> CliError {
        CliError::Parse(format!("{what} at position {} in {:?}", self.pos, self.text))
    }

    fn expr(&mut self) -> Result<OreElem<B::Elem>, CliError> {
        let mut acc = if self.peek() == Some('-') {
            self.pos += 1;
            let t = self.term()?;
            self.ring.neg(&t)
        } else {
            self.term()?
        };
        loop {
            match self.peek() {
                Some('+') => {
                    self.pos += 1;
                    acc = self.ring.add(&acc, &self.term()?);
                }
                Some('-') => {
                    self.pos += 1;
                    acc = self.ring.sub(&acc, &self.term()?);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<OreElem<B::Elem>, CliError> {
        let mut acc = self.factor()?;
        while self.peek() == Some('*') {
            self.pos += 1;
            acc = self.ring.mul(&acc, &self.factor()?);
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<OreElem<B::Elem>, CliError> {
        let ring = self.ring;
        let alg = ring.algebra();
        let base = ring.base();
        match self.peek() {
            None => Err(self.error("expected a factor")),
            Some('(') => {
                let close = self.matching_paren()?;
                let inner = &self.text[self.pos + 1..close];
                let value = if top_level_comma(inner) {
                    let coords = inner
                        .split(',')
                        .map(|c| base.parse(c.trim()))
                        .collect::<Result<Vec<_>, _>>()
                        .map_err(|e| self.error(&e.to_string()))?;
                    ring.constant(&alg.element(coords)?)
                } else {
                    let sub = Parser { ring, text: inner, pos: 0, names: self.names.clone() };
                    let mut sub = sub;
                    let v = sub.expr()?;
                    sub.skip_ws();
                    if sub.pos != inner.len() {
                        return Err(self.error("unexpected input inside parentheses"));
                    }
                    v
                };
                self.pos = close + 1;
                Ok(value)
            }
            Some(c) if c.is_ascii_digit() => {
                let len = self.rest().find(|c: char| !(c.is_ascii_digit() || c == '/')).unwrap_or(self.rest().len());
                let token = &self.rest()[..len];
                let c = base.parse(token).map_err(|e| self.error(&e.to_string()))?;
                self.pos += len;
                Ok(ring.constant(&alg.scalar(&c)))
            }
            Some(_) => {
                if let Some((name, i)) = self.names.iter().find(|(n, _)| self.at_word(n)).cloned() {
                    self.pos += name.len();
                    return Ok(ring.constant(&alg.basis(i)));
                }
                if let Some(after) = self.rest().strip_prefix("x^") {
                    let len = if after.starts_with('[') {
                        after.find(']').map(|k| k + 1).ok_or_else(|| self.error("unclosed exponent"))?
                    } else {
                        after.find(|c: char| !is_word(c)).unwrap_or(after.len())
                    };
                    let a = ring.monoid().parse_elem(&after[..len]).map_err(|e| self.error(&e.to_string()))?;
                    self.pos += 2 + len;
                    return Ok(ring.x(&a));
                }
                Err(self.error("unknown symbol"))
            }
        }
    }

    fn at_word(&self, name: &str) -> bool {
        let rest = self.rest();
        rest.starts_with(name) && !rest[name.len()..].starts_with(|c: char| is_word(c) || c == '^' || c == '/')
    }

    fn matching_paren(&self) -> Result<usize, CliError> {
        let mut depth = 0usize;
        for (k, c) in self.rest().char_indices() {
            match c {
                '(' => depth += 1,
                ')' => {
                    depth -= 1;
                    if depth == 0 {
                        return Ok(self.pos + k);
                    }
                }
                _ => {}
            }
        }
        Err(self.error("unclosed parenthesis"))
    }
}

fn top_level_comma(s: &str) -> bool {
    let mut depth = 0i32;
    for c in s.chars() {
        match c {
            '(' | '[' => depth += 1,
            ')' | ']' => depth -= 1,
            ',' if depth == 0 => return true,
            _ => {}
        }
    }
    false
}
