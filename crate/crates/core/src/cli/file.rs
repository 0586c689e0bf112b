//! Line-oriented text format for persisted universes.
//!
//! ```text
//! quine-sets universe v1
//! atoms u v
//! depth 2
//! max_sets 100000
//! composites 5
//! 0 1
//! 2
//! ...
//! ```
//!
//! Atoms take ids `0..k` in header order. Each body line lists the sorted
//! member ids of the next composite; members always precede their set.

use std::fmt::Write as _;

use thiserror::Error;

use crate::set::{SetId, SetNode, Universe};

pub const MAGIC: &str = "quine-sets universe v1";

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}: {message}")]
pub struct FormatError {
    pub line: usize,
    pub message: String,
}

pub fn save(universe: &Universe) -> String {
    let mut out = String::new();
    let composites = universe.len() - universe.atoms().len();
    writeln!(out, "{MAGIC}").unwrap();
    let mut atoms = String::from("atoms");
    for name in universe.atom_names() {
        atoms.push(' ');
        atoms.push_str(name);
    }
    writeln!(out, "{atoms}").unwrap();
    match universe.depth() {
        Some(d) => writeln!(out, "depth {d}").unwrap(),
        None => writeln!(out, "depth -").unwrap(),
    }
    writeln!(out, "max_sets {}", universe.max_sets()).unwrap();
    writeln!(out, "composites {composites}").unwrap();
    for id in universe.ids() {
        if let Ok(SetNode::Composite { members }) = universe.node(id) {
            let line: Vec<String> = members.iter().map(|m| m.index().to_string()).collect();
            writeln!(out, "{}", line.join(" ")).unwrap();
        }
    }
    out
}

struct Lines<'a> {
    inner: std::iter::Enumerate<std::str::Lines<'a>>,
    last: usize,
}

impl<'a> Lines<'a> {
    fn next(&mut self) -> Result<(usize, &'a str), FormatError> {
        match self.inner.next() {
            Some((i, line)) => {
                self.last = i + 1;
                Ok((i + 1, line))
            }
            None => Err(FormatError {
                line: self.last + 1,
                message: "unexpected end of file".into(),
            }),
        }
    }

    fn field(&mut self, key: &str) -> Result<(usize, &'a str), FormatError> {
        let (n, line) = self.next()?;
        match line.strip_prefix(key) {
            Some(rest) if rest.is_empty() || rest.starts_with(' ') => Ok((n, rest.trim_start())),
            _ => Err(err(n, format!("expected `{key}` header"))),
        }
    }
}

fn err(line: usize, message: impl Into<String>) -> FormatError {
    FormatError {
        line,
        message: message.into(),
    }
}

fn number<T: std::str::FromStr>(line: usize, text: &str) -> Result<T, FormatError> {
    text.parse()
        .map_err(|_| err(line, format!("`{text}` is not a valid number")))
}

pub fn load(text: &str) -> Result<Universe, FormatError> {
    let mut lines = Lines {
        inner: text.lines().enumerate(),
        last: 0,
    };
    let (n, magic) = lines.next()?;
    if magic != MAGIC {
        return Err(err(n, format!("expected `{MAGIC}`")));
    }
    let (n, atoms) = lines.field("atoms")?;
    let names: Vec<&str> = atoms.split_whitespace().collect();
    let mut universe = Universe::new(&names).map_err(|e| err(n, e.to_string()))?;
    let (n, depth) = lines.field("depth")?;
    universe.set_depth(match depth {
        "-" => None,
        d => Some(number(n, d)?),
    });
    let (n, max_sets) = lines.field("max_sets")?;
    universe.set_max_sets(number(n, max_sets)?);
    let (n, count) = lines.field("composites")?;
    let count: usize = number(n, count)?;

    for _ in 0..count {
        let (n, line) = lines.next()?;
        let expected = universe.len();
        let mut members = Vec::new();
        for field in line.split_whitespace() {
            let m: usize = number(n, field)?;
            if m >= expected {
                return Err(err(n, format!("member {m} does not precede set {expected}")));
            }
            if members.last().is_some_and(|&prev: &SetId| prev.index() >= m) {
                return Err(err(n, "member ids must be strictly increasing"));
            }
            members.push(SetId::from_index(m));
        }
        let id = universe
            .intern_sorted(members)
            .map_err(|e| err(n, e.to_string()))?;
        if id.index() != expected {
            return Err(err(n, format!("record duplicates set {}", id.index())));
        }
    }
    if let Some((i, line)) = lines.inner.find(|(_, l)| !l.trim().is_empty()) {
        return Err(err(i + 1, format!("trailing content `{line}`")));
    }
    Ok(universe)
}
