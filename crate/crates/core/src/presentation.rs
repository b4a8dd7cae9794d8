//! Finite group presentations.
//!
//! Words are sequences of signed, 1-based generator indices: `k` is the
//! `k`-th generator and `-k` its inverse.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::ParseError;

pub type Letter = i32;
pub type Word = Vec<Letter>;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Presentation {
    pub generators: Vec<String>,
    pub relators: Vec<Word>,
    /// Name of the fibre generator `h`, when the presentation comes from a symbol.
    pub distinguished: Option<String>,
}

#[inline]
pub fn gen_index(l: Letter) -> usize {
    (l.unsigned_abs() - 1) as usize
}

pub fn inverse(w: &[Letter]) -> Word {
    w.iter().rev().map(|&l| -l).collect()
}

/// Cancels adjacent inverse pairs.
pub fn free_reduce(w: &[Letter]) -> Word {
    let mut out: Word = Vec::with_capacity(w.len());
    for &l in w {
        if out.last() == Some(&-l) {
            out.pop();
        } else {
            out.push(l);
        }
    }
    out
}

/// Free reduction followed by cancellation between the two ends.
pub fn cyclic_reduce(w: &[Letter]) -> Word {
    let w = free_reduce(w);
    let mut lo = 0;
    let mut hi = w.len();
    while hi - lo >= 2 && w[lo] == -w[hi - 1] {
        lo += 1;
        hi -= 1;
    }
    w[lo..hi].to_vec()
}

/// `x^n` as a word.
pub fn power(x: &[Letter], n: i64) -> Word {
    let base = if n < 0 { inverse(x) } else { x.to_vec() };
    base.iter().copied().cycle().take(base.len() * n.unsigned_abs() as usize).collect()
}

/// `[x, y] = x y x⁻¹ y⁻¹`
pub fn commutator(x: &[Letter], y: &[Letter]) -> Word {
    let mut w = x.to_vec();
    w.extend_from_slice(y);
    w.extend(inverse(x));
    w.extend(inverse(y));
    w
}

impl Presentation {
    pub fn new(generators: Vec<String>, relators: Vec<Word>) -> Self {
        Presentation { generators, relators, distinguished: None }
    }

    pub fn num_generators(&self) -> usize {
        self.generators.len()
    }

    /// Every relator letter refers to a listed generator.
    pub fn is_valid(&self) -> bool {
        let n = self.generators.len();
        self.relators.iter().flatten().all(|&l| l != 0 && gen_index(l) < n)
    }

    /// Rows are relators, columns generators; entries are exponent sums.
    pub fn exponent_matrix(&self) -> Vec<Vec<i64>> {
        self.relators
            .iter()
            .map(|r| {
                let mut row = vec![0i64; self.generators.len()];
                for &l in r {
                    row[gen_index(l)] += l.signum() as i64;
                }
                row
            })
            .collect()
    }

    pub fn with_relator(mut self, r: Word) -> Self {
        self.relators.push(r);
        self
    }

    pub fn render_word(&self, w: &[Letter]) -> String {
        if w.is_empty() {
            return "1".to_string();
        }
        let mut parts: Vec<String> = Vec::new();
        let mut i = 0;
        while i < w.len() {
            let mut j = i;
            while j < w.len() && w[j] == w[i] {
                j += 1;
            }
            let name = &self.generators[gen_index(w[i])];
            let exp = (j - i) as i64 * w[i].signum() as i64;
            parts.push(if exp == 1 { name.clone() } else { format!("{name}^{exp}") });
            i = j;
        }
        parts.join(" ")
    }
}

impl fmt::Display for Presentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rels: Vec<String> = self.relators.iter().map(|r| self.render_word(r)).collect();
        write!(f, "<{} | {}>", self.generators.join(", "), rels.join(", "))
    }
}

/// Parses `<a, b | a^2, [a,b], (a b)^3 b^-1>`.
///
/// Factors are generator names, commutators `[u,v]` and parenthesised
/// words, each with an optional integer exponent. Juxtaposition or `*`
/// multiplies.
impl FromStr for Presentation {
    type Err = ParseError;

    fn from_str(text: &str) -> Result<Self, ParseError> {
        let mut p = WordParser { src: text.as_bytes(), pos: 0, gens: Vec::new() };
        p.skip_ws();
        p.eat(b'<')?;
        loop {
            p.skip_ws();
            if p.peek() == Some(b'|') || p.peek() == Some(b'>') {
                break;
            }
            let start = p.pos;
            let name = p.ident()?;
            if p.gens.contains(&name) {
                return Err(ParseError::syntax(start, format!("duplicate generator {name:?}")));
            }
            p.gens.push(name);
            p.skip_ws();
            if p.peek() == Some(b',') {
                p.pos += 1;
            }
        }
        let mut relators = Vec::new();
        if p.peek() == Some(b'|') {
            p.pos += 1;
            loop {
                p.skip_ws();
                if p.peek() == Some(b'>') {
                    break;
                }
                relators.push(p.word(b",>")?);
                p.skip_ws();
                if p.peek() == Some(b',') {
                    p.pos += 1;
                }
            }
        }
        p.eat(b'>')?;
        p.skip_ws();
        if p.pos != p.src.len() {
            return Err(ParseError::syntax(p.pos, "trailing input"));
        }
        Ok(Presentation::new(p.gens, relators))
    }
}

struct WordParser<'a> {
    src: &'a [u8],
    pos: usize,
    gens: Vec<String>,
}

impl WordParser<'_> {
    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && (self.src[self.pos].is_ascii_whitespace() || self.src[self.pos] == b'*') {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<u8> {
        self.src.get(self.pos).copied()
    }

    fn eat(&mut self, c: u8) -> Result<(), ParseError> {
        self.skip_ws();
        if self.peek() == Some(c) {
            self.pos += 1;
            Ok(())
        } else {
            Err(ParseError::syntax(self.pos, format!("expected '{}'", c as char)))
        }
    }

    fn ident(&mut self) -> Result<String, ParseError> {
        let start = self.pos;
        while self.pos < self.src.len() && (self.src[self.pos].is_ascii_alphanumeric() || self.src[self.pos] == b'_') {
            self.pos += 1;
        }
        if start == self.pos || self.src[start].is_ascii_digit() {
            return Err(ParseError::syntax(start, "expected generator name"));
        }
        Ok(String::from_utf8_lossy(&self.src[start..self.pos]).into_owned())
    }

    fn exponent(&mut self) -> Result<i64, ParseError> {
        self.skip_ws();
        if self.peek() != Some(b'^') {
            return Ok(1);
        }
        self.pos += 1;
        self.skip_ws();
        let start = self.pos;
        if matches!(self.peek(), Some(b'-') | Some(b'+')) {
            self.pos += 1;
        }
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        std::str::from_utf8(&self.src[start..self.pos])
            .ok()
            .and_then(|s| s.parse().ok())
            .ok_or_else(|| ParseError::syntax(start, "expected integer exponent"))
    }

    fn word(&mut self, terminators: &[u8]) -> Result<Word, ParseError> {
        let mut w = Word::new();
        loop {
            self.skip_ws();
            match self.peek() {
                None => return Err(ParseError::syntax(self.pos, "unterminated word")),
                Some(c) if terminators.contains(&c) => return Ok(w),
                Some(b'1') => {
                    self.pos += 1;
                }
                Some(b'[') => {
                    self.pos += 1;
                    let x = self.word(b",")?;
                    self.eat(b',')?;
                    let y = self.word(b"]")?;
                    self.eat(b']')?;
                    let e = self.exponent()?;
                    w.extend(power(&commutator(&x, &y), e));
                }
                Some(b'(') => {
                    self.pos += 1;
                    let x = self.word(b")")?;
                    self.eat(b')')?;
                    let e = self.exponent()?;
                    w.extend(power(&x, e));
                }
                Some(_) => {
                    let start = self.pos;
                    let name = self.ident()?;
                    let idx = self
                        .gens
                        .iter()
                        .position(|g| *g == name)
                        .ok_or_else(|| ParseError::syntax(start, format!("unknown generator {name:?}")))?;
                    let e = self.exponent()?;
                    w.extend(power(&[idx as Letter + 1], e));
                }
            }
        }
    }
}
