//! Text forms of symbols and orbifolds.
//!
//! ```text
//! SFS[b; o|n genus (; bd m)?; (alpha,beta)(alpha,beta)...]
//! ORB[o|n genus (; bd m)?; p,q,...]
//! ```
//!
//! Whitespace between tokens is ignored. Rendering is the exact inverse of
//! parsing on valid values.

use std::fmt::Write;

use crate::error::ParseError;
use crate::symbol::{BaseSurface, FibrePair, OrbifoldData, SeifertSymbol};

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Word(String),
    Int(i64),
    Punct(char),
    End,
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::Word(w) => format!("{w:?}"),
            Tok::Int(n) => format!("integer {n}"),
            Tok::Punct(c) => format!("'{c}'"),
            Tok::End => "end of input".to_string(),
        }
    }
}

struct Lexer<'a> {
    src: &'a str,
    pos: usize,
    peeked: Option<(usize, Tok)>,
}

impl<'a> Lexer<'a> {
    fn new(src: &'a str) -> Self {
        Lexer { src, pos: 0, peeked: None }
    }

    fn lex(&mut self) -> Result<(usize, Tok), ParseError> {
        let bytes = self.src.as_bytes();
        while self.pos < bytes.len() && bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
        let start = self.pos;
        let Some(&c) = bytes.get(self.pos) else {
            return Ok((start, Tok::End));
        };
        if c.is_ascii_alphabetic() {
            while self.pos < bytes.len() && bytes[self.pos].is_ascii_alphabetic() {
                self.pos += 1;
            }
            return Ok((start, Tok::Word(self.src[start..self.pos].to_string())));
        }
        if c.is_ascii_digit() || c == b'-' || c == b'+' {
            self.pos += 1;
            let digits = self.pos;
            while self.pos < bytes.len() && bytes[self.pos].is_ascii_digit() {
                self.pos += 1;
            }
            if self.pos == digits && !c.is_ascii_digit() {
                return Err(ParseError::syntax(start, "sign not followed by digits"));
            }
            return self.src[start..self.pos]
                .parse::<i64>()
                .map(|n| (start, Tok::Int(n)))
                .map_err(|_| ParseError::syntax(start, "integer out of range"));
        }
        if b"[];(),".contains(&c) {
            self.pos += 1;
            return Ok((start, Tok::Punct(c as char)));
        }
        let ch = self.src[start..].chars().next().unwrap_or('?');
        Err(ParseError::syntax(start, format!("unexpected character {ch:?}")))
    }

    fn peek(&mut self) -> Result<&(usize, Tok), ParseError> {
        if self.peeked.is_none() {
            self.peeked = Some(self.lex()?);
        }
        Ok(self.peeked.as_ref().unwrap())
    }

    fn next(&mut self) -> Result<(usize, Tok), ParseError> {
        match self.peeked.take() {
            Some(t) => Ok(t),
            None => self.lex(),
        }
    }

    fn expect_punct(&mut self, want: char) -> Result<(), ParseError> {
        match self.next()? {
            (_, Tok::Punct(c)) if c == want => Ok(()),
            (pos, t) => Err(ParseError::syntax(pos, format!("expected '{want}', found {}", t.describe()))),
        }
    }

    fn expect_word(&mut self, want: &str) -> Result<(), ParseError> {
        match self.next()? {
            (_, Tok::Word(w)) if w == want => Ok(()),
            (pos, t) => Err(ParseError::syntax(pos, format!("expected {want:?}, found {}", t.describe()))),
        }
    }

    fn int(&mut self) -> Result<(usize, i64), ParseError> {
        match self.next()? {
            (pos, Tok::Int(n)) => Ok((pos, n)),
            (pos, t) => Err(ParseError::syntax(pos, format!("expected integer, found {}", t.describe()))),
        }
    }

    fn count(&mut self, what: &str) -> Result<u32, ParseError> {
        let (pos, n) = self.int()?;
        u32::try_from(n).map_err(|_| ParseError::syntax(pos, format!("{what} must be a non-negative integer")))
    }

    fn peek_is_punct(&mut self, c: char) -> Result<bool, ParseError> {
        Ok(matches!(self.peek()?, (_, Tok::Punct(p)) if *p == c))
    }

    fn finish(&mut self) -> Result<(), ParseError> {
        match self.next()? {
            (_, Tok::End) => Ok(()),
            (pos, t) => Err(ParseError::syntax(pos, format!("trailing input: {}", t.describe()))),
        }
    }

    /// `("o"|"n") genus (";" "bd" m)? ";"`
    fn surface(&mut self) -> Result<BaseSurface, ParseError> {
        let orientable = match self.next()? {
            (_, Tok::Word(w)) if w == "o" => true,
            (_, Tok::Word(w)) if w == "n" => false,
            (pos, t) => {
                return Err(ParseError::syntax(pos, format!("expected 'o' or 'n', found {}", t.describe())))
            }
        };
        let genus = self.count("genus")?;
        self.expect_punct(';')?;
        let mut boundary_components = 0;
        if matches!(self.peek()?, (_, Tok::Word(w)) if w == "bd") {
            self.next()?;
            boundary_components = self.count("boundary count")?;
            self.expect_punct(';')?;
        }
        let surface = BaseSurface { genus, orientable, boundary_components };
        surface.validate()?;
        Ok(surface)
    }
}

pub fn parse_symbol(text: &str) -> Result<SeifertSymbol, ParseError> {
    let s = parse_symbol_unchecked(text)?;
    s.validate()?;
    Ok(s)
}

/// Reads the symbol grammar without checking the fibre-pair invariants.
pub fn parse_symbol_unchecked(text: &str) -> Result<SeifertSymbol, ParseError> {
    let mut lx = Lexer::new(text);
    lx.expect_word("SFS")?;
    lx.expect_punct('[')?;
    let (_, b) = lx.int()?;
    lx.expect_punct(';')?;
    let base = lx.surface()?;
    let mut fibres = Vec::new();
    while lx.peek_is_punct('(')? {
        lx.next()?;
        let (_, alpha) = lx.int()?;
        lx.expect_punct(',')?;
        let (_, beta) = lx.int()?;
        lx.expect_punct(')')?;
        fibres.push(FibrePair::new(alpha, beta));
    }
    lx.expect_punct(']')?;
    lx.finish()?;
    Ok(SeifertSymbol { b, base, fibres })
}

pub fn parse_orbifold(text: &str) -> Result<OrbifoldData, ParseError> {
    let mut lx = Lexer::new(text);
    lx.expect_word("ORB")?;
    lx.expect_punct('[')?;
    let surface = lx.surface()?;
    let mut cones = Vec::new();
    if !lx.peek_is_punct(']')? {
        loop {
            let (pos, p) = lx.int()?;
            if p < 2 {
                return Err(ParseError::ConeOrder(p));
            }
            cones.push(u32::try_from(p).map_err(|_| ParseError::syntax(pos, "cone order out of range"))?);
            if !lx.peek_is_punct(',')? {
                break;
            }
            lx.next()?;
        }
    }
    lx.expect_punct(']')?;
    lx.finish()?;
    Ok(OrbifoldData::new(surface, cones))
}

fn render_surface(out: &mut String, s: &BaseSurface) {
    let tag = if s.orientable { 'o' } else { 'n' };
    write!(out, "{tag} {}", s.genus).unwrap();
    if s.boundary_components > 0 {
        write!(out, "; bd {}", s.boundary_components).unwrap();
    }
    out.push(';');
}

pub fn render_symbol(s: &SeifertSymbol) -> String {
    let mut out = format!("SFS[{}; ", s.b);
    render_surface(&mut out, &s.base);
    if !s.fibres.is_empty() {
        out.push(' ');
        for f in &s.fibres {
            write!(out, "({},{})", f.alpha, f.beta).unwrap();
        }
    }
    out.push(']');
    out
}

pub fn render_orbifold(o: &OrbifoldData) -> String {
    let mut out = String::from("ORB[");
    render_surface(&mut out, &o.surface);
    if !o.cone_orders.is_empty() {
        out.push(' ');
        let cones: Vec<String> = o.cone_orders.iter().map(u32::to_string).collect();
        out.push_str(&cones.join(","));
    }
    out.push(']');
    out
}
