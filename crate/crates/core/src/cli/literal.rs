//! Set literals: an atom name, or `{` literal { `,` literal } `}`.

use thiserror::Error;

use crate::set::{SetId, Universe};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LiteralError {
    #[error("at {0}: expected an atom name or `{{`")]
    Expected(usize),
    #[error("at {0}: empty braces (there is no empty set)")]
    Empty(usize),
    #[error("at {0}: expected `,` or `}}`")]
    Unclosed(usize),
    #[error("unknown atom `{0}`")]
    UnknownAtom(String),
    #[error("`{0}` is not a set of this universe")]
    NotInUniverse(String),
    #[error("at {0}: trailing input")]
    Trailing(usize),
}

/// Resolves a literal to the id of an existing set; singletons of atoms collapse.
pub fn parse_literal(universe: &Universe, text: &str) -> Result<SetId, LiteralError> {
    let mut p = LiteralParser {
        text,
        pos: 0,
        universe,
    };
    let id = p.literal()?;
    p.skip_ws();
    if p.pos < text.len() {
        return Err(LiteralError::Trailing(p.pos));
    }
    Ok(id)
}

struct LiteralParser<'a> {
    text: &'a str,
    pos: usize,
    universe: &'a Universe,
}

impl LiteralParser<'_> {
    fn skip_ws(&mut self) {
        let rest = &self.text[self.pos..];
        self.pos += rest.len() - rest.trim_start().len();
    }

    fn peek(&self) -> Option<u8> {
        self.text.as_bytes().get(self.pos).copied()
    }

    fn literal(&mut self) -> Result<SetId, LiteralError> {
        self.skip_ws();
        let start = self.pos;
        match self.peek() {
            Some(b'{') => {
                self.pos += 1;
                self.skip_ws();
                if self.peek() == Some(b'}') {
                    return Err(LiteralError::Empty(start));
                }
                let mut members = vec![self.literal()?];
                loop {
                    self.skip_ws();
                    match self.peek() {
                        Some(b',') => {
                            self.pos += 1;
                            members.push(self.literal()?);
                        }
                        Some(b'}') => {
                            self.pos += 1;
                            break;
                        }
                        _ => return Err(LiteralError::Unclosed(self.pos)),
                    }
                }
                self.universe.find(members).ok_or_else(|| {
                    LiteralError::NotInUniverse(self.text[start..self.pos].trim().to_string())
                })
            }
            Some(c) if c.is_ascii_alphabetic() => {
                let len = self.text[start..]
                    .find(|c: char| !(c.is_ascii_alphanumeric() || c == '_'))
                    .unwrap_or(self.text.len() - start);
                self.pos += len;
                let name = &self.text[start..self.pos];
                self.universe
                    .atom_named(name)
                    .ok_or_else(|| LiteralError::UnknownAtom(name.to_string()))
            }
            _ => Err(LiteralError::Expected(start)),
        }
    }
}
