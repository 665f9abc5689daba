//! Finite presentations and their text format
//! `gens: x, y; rels: x^3, y^4, (x*y)^2`.

use core::fmt;
use core::str::FromStr;

use alloc::string::{String, ToString};
use alloc::vec::Vec;

use super::free_word::{letter, FreeWord};
use super::GroupError;
use crate::words::Word;

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Presentation {
    generators: Vec<String>,
    relators: Vec<FreeWord>,
}

impl Presentation {
    /// Relators are cyclically reduced; empty ones are dropped.
    pub fn new(generators: Vec<String>, relators: Vec<FreeWord>) -> Self {
        let relators = relators
            .into_iter()
            .map(|r| r.cyclic_reduce())
            .filter(|r| !r.is_empty())
            .collect();
        Presentation { generators, relators }
    }

    pub fn generators(&self) -> &[String] {
        &self.generators
    }

    pub fn ngens(&self) -> usize {
        self.generators.len()
    }

    pub fn relators(&self) -> &[FreeWord] {
        &self.relators
    }

    pub fn with_relators(&self, relators: Vec<FreeWord>) -> Self {
        Presentation::new(self.generators.clone(), relators)
    }

    /// Same group, relators permuted.
    pub fn permute_relators(&self, order: &[usize]) -> Self {
        Presentation {
            generators: self.generators.clone(),
            relators: order.iter().map(|&i| self.relators[i].clone()).collect(),
        }
    }

    pub fn generator_index(&self, name: &str) -> Option<usize> {
        self.generators.iter().position(|g| g == name)
    }

    /// Parses a word over this presentation's generators.
    pub fn parse_word(&self, text: &str) -> Result<FreeWord, GroupError> {
        let mut p = Parser { src: text.as_bytes(), pos: 0, gens: &self.generators };
        let w = p.expr()?;
        p.skip_ws();
        if p.pos != p.src.len() {
            return Err(p.error("trailing input"));
        }
        Ok(w)
    }

    /// ⟨x, y | x³, y⁴, w²⟩ for a relator word w.
    pub fn triangle(w: &Word) -> Self {
        Self::generalized_triangle(w, 4)
    }

    /// ⟨x, y | x³, y^m, w²⟩
    pub fn generalized_triangle(w: &Word, y_order: i64) -> Self {
        let x = FreeWord::generator(0);
        let y = FreeWord::generator(1);
        let mut ww = Vec::new();
        for (g, e) in w.letters() {
            for _ in 0..e {
                ww.push(letter(g as usize, false));
            }
        }
        let ww = FreeWord(ww);
        Presentation::new(
            alloc::vec![String::from("x"), String::from("y")],
            alloc::vec![x.pow(3), y.pow(y_order), ww.pow(2)],
        )
    }
}

impl fmt::Display for Presentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "gens: {}; rels: ", self.generators.join(", "))?;
        for (i, r) in self.relators.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{}", r.display(&self.generators))?;
        }
        Ok(())
    }
}

impl FromStr for Presentation {
    type Err = GroupError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        let body = s
            .strip_prefix("gens:")
            .ok_or_else(|| GroupError::Parse(String::from("presentation must start with 'gens:'")))?;
        let (gens_part, rels_part) = match body.find("rels:") {
            Some(i) => {
                let g = body[..i].trim().trim_end_matches(';');
                (g, &body[i + 5..])
            }
            None => (body.trim().trim_end_matches(';'), ""),
        };
        let generators: Vec<String> = gens_part
            .split(',')
            .map(|g| g.trim())
            .filter(|g| !g.is_empty())
            .map(|g| {
                if is_identifier(g) {
                    Ok(g.to_string())
                } else {
                    Err(GroupError::Parse(alloc::format!("invalid generator name {:?}", g)))
                }
            })
            .collect::<Result<_, _>>()?;
        for (i, g) in generators.iter().enumerate() {
            if generators[..i].contains(g) {
                return Err(GroupError::Parse(alloc::format!("duplicate generator {:?}", g)));
            }
        }
        let proto = Presentation { generators, relators: Vec::new() };
        let rels_part = rels_part.trim().trim_end_matches(';');
        let mut relators = Vec::new();
        for piece in split_top_level(rels_part) {
            let piece = piece.trim();
            if piece.is_empty() {
                continue;
            }
            relators.push(proto.parse_word(piece)?);
        }
        Ok(Presentation::new(proto.generators, relators))
    }
}

fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic() || c == '_')
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

/// Splits on commas outside parentheses.
fn split_top_level(s: &str) -> Vec<&str> {
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut start = 0;
    for (i, c) in s.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => depth -= 1,
            ',' if depth == 0 => {
                out.push(&s[start..i]);
                start = i + 1;
            }
            _ => {}
        }
    }
    out.push(&s[start..]);
    out
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    gens: &'a [String],
}

impl Parser<'_> {
    fn error(&self, msg: &str) -> GroupError {
        GroupError::Parse(alloc::format!("{} at position {}", msg, self.pos))
    }

    fn skip_ws(&mut self) {
        while self.src.get(self.pos).is_some_and(u8::is_ascii_whitespace) {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn expr(&mut self) -> Result<FreeWord, GroupError> {
        let mut w = self.term()?;
        while self.peek() == Some(b'*') {
            self.pos += 1;
            w = w.concat(&self.term()?);
        }
        Ok(w)
    }

    fn term(&mut self) -> Result<FreeWord, GroupError> {
        let mut w = self.atom()?;
        while self.peek() == Some(b'^') {
            self.pos += 1;
            let n = self.integer()?;
            w = w.pow(n);
        }
        Ok(w)
    }

    fn integer(&mut self) -> Result<i64, GroupError> {
        self.skip_ws();
        let start = self.pos;
        if self.src.get(self.pos) == Some(&b'-') {
            self.pos += 1;
        }
        while self.src.get(self.pos).is_some_and(u8::is_ascii_digit) {
            self.pos += 1;
        }
        core::str::from_utf8(&self.src[start..self.pos])
            .ok()
            .and_then(|s| s.parse().ok())
            .ok_or_else(|| self.error("expected integer exponent"))
    }

    fn atom(&mut self) -> Result<FreeWord, GroupError> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let w = self.expr()?;
                if self.peek() != Some(b')') {
                    return Err(self.error("expected ')'"));
                }
                self.pos += 1;
                Ok(w)
            }
            Some(b'1') => {
                self.pos += 1;
                Ok(FreeWord::empty())
            }
            Some(c) if c.is_ascii_alphabetic() || c == b'_' => {
                let start = self.pos;
                while self
                    .src
                    .get(self.pos)
                    .is_some_and(|c| c.is_ascii_alphanumeric() || *c == b'_')
                {
                    self.pos += 1;
                }
                let name = core::str::from_utf8(&self.src[start..self.pos]).unwrap_or_default();
                let g = self
                    .gens
                    .iter()
                    .position(|x| x == name)
                    .ok_or_else(|| GroupError::Parse(alloc::format!("unknown generator {:?}", name)))?;
                Ok(FreeWord::generator(g))
            }
            _ => Err(self.error("expected generator or '('")),
        }
    }
}
