use std::fmt;

use thiserror::Error;

use super::Formula;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("syntax error at {pos}: {kind}")]
pub struct ParseError {
    /// Byte offset into the input.
    pub pos: usize,
    pub kind: ParseErrorKind,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ParseErrorKind {
    UnexpectedChar(char),
    UnexpectedEnd,
    UnexpectedToken { found: String, expected: &'static str },
    /// A keyword used where a variable name was expected.
    ReservedWord(String),
    /// A binary operator with no left operand.
    UnboundOperator(String),
}

impl fmt::Display for ParseErrorKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ParseErrorKind::UnexpectedChar(c) => write!(f, "unexpected character `{c}`"),
            ParseErrorKind::UnexpectedEnd => write!(f, "unexpected end of input"),
            ParseErrorKind::UnexpectedToken { found, expected } => {
                write!(f, "expected {expected}, found `{found}`")
            }
            ParseErrorKind::ReservedWord(w) => write!(f, "`{w}` is a reserved word"),
            ParseErrorKind::UnboundOperator(op) => write!(f, "operator `{op}` has no left operand"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Ident(String),
    Forall,
    Exists,
    In,
    NotIn,
    Eq,
    Neq,
    Bang,
    And,
    Or,
    Arrow,
    DoubleArrow,
    LParen,
    RParen,
    Dot,
}

impl Tok {
    fn text(&self) -> &str {
        match self {
            Tok::Ident(s) => s,
            Tok::Forall => "forall",
            Tok::Exists => "exists",
            Tok::In => "in",
            Tok::NotIn => "notin",
            Tok::Eq => "=",
            Tok::Neq => "!=",
            Tok::Bang => "!",
            Tok::And => "&",
            Tok::Or => "|",
            Tok::Arrow => "->",
            Tok::DoubleArrow => "<->",
            Tok::LParen => "(",
            Tok::RParen => ")",
            Tok::Dot => ".",
        }
    }
}

/// Words that cannot be used as variable names.
pub const KEYWORDS: [&str; 4] = ["forall", "exists", "in", "notin"];

fn lex(text: &str) -> Result<Vec<(usize, Tok)>, ParseError> {
    let bytes = text.as_bytes();
    let mut toks = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        let start = i;
        let tok = match c {
            b' ' | b'\t' | b'\n' | b'\r' => {
                i += 1;
                continue;
            }
            b'(' => Tok::LParen,
            b')' => Tok::RParen,
            b'.' => Tok::Dot,
            b'&' => Tok::And,
            b'|' => Tok::Or,
            b'=' => Tok::Eq,
            b'!' if bytes.get(i + 1) == Some(&b'=') => Tok::Neq,
            b'!' => Tok::Bang,
            b'-' if bytes.get(i + 1) == Some(&b'>') => Tok::Arrow,
            b'<' if bytes[i + 1..].starts_with(b"->") => Tok::DoubleArrow,
            c if c.is_ascii_alphabetic() => {
                let end = bytes[i..]
                    .iter()
                    .position(|b| !(b.is_ascii_alphanumeric() || *b == b'_'))
                    .map_or(bytes.len(), |n| i + n);
                let word = &text[i..end];
                i = end;
                toks.push((
                    start,
                    match word {
                        "forall" => Tok::Forall,
                        "exists" => Tok::Exists,
                        "in" => Tok::In,
                        "notin" => Tok::NotIn,
                        _ => Tok::Ident(word.to_string()),
                    },
                ));
                continue;
            }
            _ => {
                let ch = text[i..].chars().next().unwrap();
                return Err(ParseError {
                    pos: i,
                    kind: ParseErrorKind::UnexpectedChar(ch),
                });
            }
        };
        i += tok.text().len();
        toks.push((start, tok));
    }
    Ok(toks)
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    pos: usize,
    end: usize,
}

/// Parses the surface syntax, e.g. `exists s. forall u. (u in s <-> u notin u)`.
///
/// Precedence from tightest: `!`, `&`, `|`, `->` (right associative), `<->`.
/// A quantifier body is a single unary formula, so `forall x. p & q` reads as
/// `(forall x. p) & q`.
pub fn parse(text: &str) -> Result<Formula, ParseError> {
    let mut parser = Parser {
        toks: lex(text)?,
        pos: 0,
        end: text.len(),
    };
    let f = parser.formula()?;
    match parser.peek() {
        None => Ok(f),
        Some(_) => Err(parser.unexpected("end of input")),
    }
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(_, t)| t)
    }

    fn here(&self) -> usize {
        self.toks.get(self.pos).map_or(self.end, |(p, _)| *p)
    }

    fn eat(&mut self, tok: &Tok) -> bool {
        if self.peek() == Some(tok) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn unexpected(&self, expected: &'static str) -> ParseError {
        let kind = match self.peek() {
            None => ParseErrorKind::UnexpectedEnd,
            Some(t) => ParseErrorKind::UnexpectedToken {
                found: t.text().to_string(),
                expected,
            },
        };
        ParseError {
            pos: self.here(),
            kind,
        }
    }

    fn expect(&mut self, tok: Tok, expected: &'static str) -> Result<(), ParseError> {
        if self.eat(&tok) {
            Ok(())
        } else {
            Err(self.unexpected(expected))
        }
    }

    fn formula(&mut self) -> Result<Formula, ParseError> {
        let mut lhs = self.implication()?;
        while self.eat(&Tok::DoubleArrow) {
            let rhs = self.implication()?;
            lhs = Formula::iff(lhs, rhs);
        }
        Ok(lhs)
    }

    fn implication(&mut self) -> Result<Formula, ParseError> {
        let lhs = self.disjunction()?;
        if self.eat(&Tok::Arrow) {
            let rhs = self.implication()?;
            return Ok(Formula::implies(lhs, rhs));
        }
        Ok(lhs)
    }

    fn disjunction(&mut self) -> Result<Formula, ParseError> {
        let mut lhs = self.conjunction()?;
        while self.eat(&Tok::Or) {
            let rhs = self.conjunction()?;
            lhs = Formula::or(lhs, rhs);
        }
        Ok(lhs)
    }

    fn conjunction(&mut self) -> Result<Formula, ParseError> {
        let mut lhs = self.unary()?;
        while self.eat(&Tok::And) {
            let rhs = self.unary()?;
            lhs = Formula::and(lhs, rhs);
        }
        Ok(lhs)
    }

    fn unary(&mut self) -> Result<Formula, ParseError> {
        match self.peek() {
            Some(Tok::Bang) => {
                self.pos += 1;
                Ok(Formula::not(self.unary()?))
            }
            Some(Tok::Forall) | Some(Tok::Exists) => {
                let universal = self.peek() == Some(&Tok::Forall);
                self.pos += 1;
                let var = self.ident()?;
                self.expect(Tok::Dot, "`.`")?;
                let body = self.unary()?;
                Ok(if universal {
                    Formula::forall(var, body)
                } else {
                    Formula::exists(var, body)
                })
            }
            _ => self.atom(),
        }
    }

    fn atom(&mut self) -> Result<Formula, ParseError> {
        match self.peek() {
            Some(Tok::LParen) => {
                self.pos += 1;
                let f = self.formula()?;
                self.expect(Tok::RParen, "`)`")?;
                Ok(f)
            }
            Some(
                t @ (Tok::And
                | Tok::Or
                | Tok::Arrow
                | Tok::DoubleArrow
                | Tok::In
                | Tok::NotIn
                | Tok::Eq
                | Tok::Neq),
            ) => Err(ParseError {
                pos: self.here(),
                kind: ParseErrorKind::UnboundOperator(t.text().to_string()),
            }),
            _ => {
                let lhs = self.ident()?;
                let op = self.peek().cloned();
                match op {
                    Some(Tok::In | Tok::NotIn | Tok::Eq | Tok::Neq) => self.pos += 1,
                    _ => return Err(self.unexpected("`in`, `notin`, `=` or `!=`")),
                }
                let rhs = self.ident()?;
                Ok(match op.unwrap() {
                    Tok::In => Formula::member(lhs, rhs),
                    Tok::NotIn => Formula::not(Formula::member(lhs, rhs)),
                    Tok::Eq => Formula::equal(lhs, rhs),
                    _ => Formula::not(Formula::equal(lhs, rhs)),
                })
            }
        }
    }

    fn ident(&mut self) -> Result<String, ParseError> {
        match self.peek() {
            Some(Tok::Ident(name)) => {
                let name = name.clone();
                self.pos += 1;
                Ok(name)
            }
            Some(t @ (Tok::Forall | Tok::Exists | Tok::In | Tok::NotIn)) => Err(ParseError {
                pos: self.here(),
                kind: ParseErrorKind::ReservedWord(t.text().to_string()),
            }),
            _ => Err(self.unexpected("a variable")),
        }
    }
}
