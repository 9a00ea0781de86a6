//! Plain-text table formats.
//!
//! `algtab 1` stores an implication table:
//!
//! ```text
//! algtab 1
//! n 4
//! elems 0 a a* 1
//! one 1
//! zero 0
//! 1  1  1  1     # row a gives a -> b for every column b, in elems order
//! a* 1  a* 1
//! a  a  1  1
//! 0  a  a* 1
//! ```
//!
//! `ortlat 1` shares the header and follows it with a `meet` section of n
//! rows, an optional `join` section of n rows and an `ortho` line of n names.
//! `#` starts a comment anywhere; blank lines are ignored.

use std::fmt::Write as _;
use std::path::Path;

use crate::algebra::{Elem, FiniteAlgebra};
use crate::error::{Error, Result};
use crate::term::{parse_statement, Statement};
use crate::transform::OrthoLattice;

struct Line<'a> {
    number: usize,
    words: Vec<&'a str>,
}

fn lines(text: &str) -> Vec<Line<'_>> {
    text.lines()
        .enumerate()
        .filter_map(|(i, raw)| {
            let body = raw.split('#').next().unwrap_or("");
            let words: Vec<&str> = body.split_whitespace().collect();
            (!words.is_empty()).then_some(Line {
                number: i + 1,
                words,
            })
        })
        .collect()
}

fn err(line: usize, msg: impl Into<String>) -> Error {
    Error::Format {
        line,
        msg: msg.into(),
    }
}

struct Header {
    names: Vec<String>,
    one: Elem,
    zero: Elem,
}

struct Cursor<'a> {
    lines: Vec<Line<'a>>,
    pos: usize,
    last_line: usize,
}

impl<'a> Cursor<'a> {
    fn new(text: &'a str) -> Self {
        let last_line = text.lines().count().max(1);
        Self {
            lines: lines(text),
            pos: 0,
            last_line,
        }
    }

    fn peek(&self) -> Option<&Line<'a>> {
        self.lines.get(self.pos)
    }

    fn next(&mut self, what: &str) -> Result<&Line<'a>> {
        let last = self.last_line;
        let line = self
            .lines
            .get(self.pos)
            .ok_or_else(|| err(last, format!("unexpected end of input, expected {what}")))?;
        self.pos += 1;
        Ok(line)
    }

    fn keyword(&mut self, key: &str) -> Result<(usize, Vec<&'a str>)> {
        let line = self.next(&format!("`{key}` line"))?;
        if line.words[0] != key {
            return Err(err(
                line.number,
                format!("missing `{key}` field (found `{}`)", line.words[0]),
            ));
        }
        Ok((line.number, line.words[1..].to_vec()))
    }

    fn header(&mut self, magic: &str) -> Result<Header> {
        let first = self.next(&format!("`{magic} 1` header"))?;
        if first.words != [magic, "1"] {
            return Err(err(first.number, format!("expected header `{magic} 1`")));
        }
        let (ln, words) = self.keyword("n")?;
        let n: usize = match words.as_slice() {
            [w] => w
                .parse()
                .map_err(|_| err(ln, format!("invalid size `{w}`")))?,
            _ => return Err(err(ln, "`n` takes exactly one value")),
        };
        if n == 0 {
            return Err(err(ln, "size must be positive"));
        }
        let (ln, words) = self.keyword("elems")?;
        if words.len() != n {
            return Err(err(
                ln,
                format!("expected {n} element names, found {}", words.len()),
            ));
        }
        let names: Vec<String> = words.iter().map(|s| s.to_string()).collect();
        for (i, name) in names.iter().enumerate() {
            if names[..i].contains(name) {
                return Err(err(ln, format!("duplicate element name `{name}`")));
            }
        }
        let mut constant = |key: &str| -> Result<Elem> {
            let (ln, words) = self.keyword(key)?;
            match words.as_slice() {
                [w] => lookup(&names, w, ln),
                _ => Err(err(ln, format!("`{key}` takes exactly one element name"))),
            }
        };
        let one = constant("one")?;
        let zero = constant("zero")?;
        Ok(Header { names, one, zero })
    }

    fn row(&mut self, names: &[String], what: &str) -> Result<Vec<Elem>> {
        let line = self.next(what)?;
        if line.words.len() != names.len() {
            return Err(err(
                line.number,
                format!(
                    "expected {} entries, found {}",
                    names.len(),
                    line.words.len()
                ),
            ));
        }
        line.words
            .iter()
            .map(|w| lookup(names, w, line.number))
            .collect()
    }

    fn table(&mut self, names: &[String], what: &str) -> Result<Vec<Vec<Elem>>> {
        (0..names.len())
            .map(|i| self.row(names, &format!("{what} row {}", i + 1)))
            .collect()
    }

    fn finish(&self) -> Result<()> {
        match self.peek() {
            Some(line) => Err(err(line.number, "unexpected extra line")),
            None => Ok(()),
        }
    }
}

fn lookup(names: &[String], w: &str, line: usize) -> Result<Elem> {
    names
        .iter()
        .position(|n| n == w)
        .ok_or_else(|| err(line, format!("unknown element `{w}`")))
}

pub fn parse_algtab(text: &str) -> Result<FiniteAlgebra> {
    let mut c = Cursor::new(text);
    let h = c.header("algtab")?;
    let table = c.table(&h.names, "table")?;
    c.finish()?;
    FiniteAlgebra::new(h.names, table, h.one, h.zero)
}

pub fn parse_ortlat(text: &str) -> Result<OrthoLattice> {
    let mut c = Cursor::new(text);
    let h = c.header("ortlat")?;
    let (ln, rest) = c.keyword("meet")?;
    if !rest.is_empty() {
        return Err(err(ln, "`meet` takes no values"));
    }
    let meet = c.table(&h.names, "meet")?;
    let join = if c.peek().is_some_and(|l| l.words[0] == "join") {
        c.keyword("join")?;
        Some(c.table(&h.names, "join")?)
    } else {
        None
    };
    let (ln, words) = c.keyword("ortho")?;
    if words.len() != h.names.len() {
        return Err(err(
            ln,
            format!("expected {} entries, found {}", h.names.len(), words.len()),
        ));
    }
    let ortho = words
        .iter()
        .map(|w| lookup(&h.names, w, ln))
        .collect::<Result<Vec<_>>>()?;
    c.finish()?;
    OrthoLattice::new(h.names, meet, join, ortho, h.one, h.zero)
}

pub fn read_algtab(path: impl AsRef<Path>) -> Result<FiniteAlgebra> {
    parse_algtab(&std::fs::read_to_string(path)?)
}

pub fn read_ortlat(path: impl AsRef<Path>) -> Result<OrthoLattice> {
    parse_ortlat(&std::fs::read_to_string(path)?)
}

fn header(out: &mut String, magic: &str, names: &[String], one: Elem, zero: Elem) {
    let _ = writeln!(out, "{magic} 1");
    let _ = writeln!(out, "n {}", names.len());
    let _ = writeln!(out, "elems {}", names.join(" "));
    let _ = writeln!(out, "one {}", names[one]);
    let _ = writeln!(out, "zero {}", names[zero]);
}

fn rows(out: &mut String, names: &[String], cell: impl Fn(Elem, Elem) -> Elem) {
    let width = names.iter().map(String::len).max().unwrap_or(1);
    let n = names.len();
    for a in 0..n {
        let row: Vec<String> = (0..n)
            .map(|b| format!("{:<width$}", names[cell(a, b)]))
            .collect();
        let _ = writeln!(out, "{}", row.join(" ").trim_end());
    }
}

pub fn write_algtab(a: &FiniteAlgebra) -> String {
    let mut out = String::new();
    header(&mut out, "algtab", a.names(), a.one(), a.zero());
    rows(&mut out, a.names(), |x, y| a.imp(x, y));
    out
}

pub fn write_ortlat(l: &OrthoLattice) -> String {
    let mut out = String::new();
    header(&mut out, "ortlat", l.names(), l.one(), l.zero());
    out.push_str("meet\n");
    rows(&mut out, l.names(), |x, y| l.meet(x, y));
    out.push_str("join\n");
    rows(&mut out, l.names(), |x, y| l.join(x, y));
    let ortho: Vec<&str> = (0..l.size())
        .map(|x| l.names()[l.ortho(x)].as_str())
        .collect();
    let _ = writeln!(out, "ortho {}", ortho.join(" "));
    out
}

/// One entry of a statement file.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StatementLine {
    pub line: usize,
    pub label: Option<String>,
    pub statement: Statement,
}

/// Statement files hold one statement per line, optionally prefixed by a
/// label and a colon (`P6.3: x' -> (x & y') = x' -> (x & y)`). `#` starts
/// a comment.
pub fn parse_statement_file(text: &str) -> Result<Vec<StatementLine>> {
    lines(text)
        .into_iter()
        .map(|l| {
            let raw = text.lines().nth(l.number - 1).unwrap_or("");
            let body = raw.split('#').next().unwrap_or("").trim();
            let (label, stmt) = match body.split_once(':') {
                Some((label, rest)) => {
                    let label = label.trim();
                    if label.is_empty() || label.contains(char::is_whitespace) {
                        return Err(err(l.number, format!("invalid label `{label}`")));
                    }
                    (Some(label.to_string()), rest.trim())
                }
                None => (None, body),
            };
            let statement = parse_statement(stmt).map_err(|e| err(l.number, e.to_string()))?;
            Ok(StatementLine {
                line: l.number,
                label,
                statement,
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn round_trips() {
        for (_, alg) in fixtures::all() {
            assert_eq!(parse_algtab(&write_algtab(&alg)).unwrap(), alg);
        }
        let l = fixtures::mo2_lattice();
        assert_eq!(parse_ortlat(&write_ortlat(&l)).unwrap(), l);
    }

    #[test]
    fn comments_and_blank_lines() {
        let text = "# two elements\nalgtab 1\n\nn 2   # size\nelems 0 1\none 1\nzero 0\n1 1\n0 1\n";
        let a = parse_algtab(text).unwrap();
        assert_eq!(a, fixtures::b2());
    }

    fn line_of(e: Error) -> (usize, String) {
        match e {
            Error::Format { line, msg } => (line, msg),
            other => panic!("expected format error, got {other}"),
        }
    }

    #[test]
    fn rejects_malformed_input() {
        let dup = "algtab 1\nn 2\nelems a a\none a\nzero a\na a\na a\n";
        assert_eq!(line_of(parse_algtab(dup).unwrap_err()).0, 3);
        let short_row = "algtab 1\nn 2\nelems 0 1\none 1\nzero 0\n1 1\n0\n";
        assert_eq!(line_of(parse_algtab(short_row).unwrap_err()).0, 7);
        let unknown = "algtab 1\nn 2\nelems 0 1\none 1\nzero 0\n1 1\n0 q\n";
        let (line, msg) = line_of(parse_algtab(unknown).unwrap_err());
        assert_eq!(line, 7);
        assert!(msg.contains("unknown element `q`"));
        let missing_zero = "algtab 1\nn 2\nelems 0 1\none 1\n1 1\n0 1\n";
        let (line, msg) = line_of(parse_algtab(missing_zero).unwrap_err());
        assert_eq!(line, 5);
        assert!(msg.contains("zero"));
        let missing_row = "algtab 1\nn 2\nelems 0 1\none 1\nzero 0\n1 1\n";
        assert!(line_of(parse_algtab(missing_row).unwrap_err())
            .1
            .contains("end of input"));
        let extra = "algtab 1\nn 2\nelems 0 1\none 1\nzero 0\n1 1\n0 1\n1 1\n";
        assert_eq!(line_of(parse_algtab(extra).unwrap_err()).0, 8);
        assert!(parse_algtab("ortlat 1\n").is_err());
    }

    #[test]
    fn statement_files() {
        let text = "# header\nx -> x = 1\n\nBE2: x -> 1 = 1   # labelled\nx <=q y |- x <= y\n";
        let parsed = parse_statement_file(text).unwrap();
        assert_eq!(parsed.len(), 3);
        assert_eq!(parsed[0].label, None);
        assert_eq!(parsed[1].label.as_deref(), Some("BE2"));
        assert_eq!(parsed[1].line, 4);
        assert_eq!(
            parsed[2].statement.to_string(),
            parse_statement("x <=q y |- x <= y").unwrap().to_string()
        );
        let (line, msg) = line_of(parse_statement_file("x = x\nx -> = 1\n").unwrap_err());
        assert_eq!(line, 2);
        assert!(msg.contains("syntax error"));
        assert_eq!(
            line_of(parse_statement_file("a b: x = x\n").unwrap_err()).0,
            1
        );
    }

    #[test]
    fn ortlat_without_join() {
        let text = "ortlat 1\nn 4\nelems 0 a b 1\none 1\nzero 0\nmeet\n0 0 0 0\n0 a 0 a\n0 0 b b\n0 a b 1\northo 1 b a 0\n";
        let l = parse_ortlat(text).unwrap();
        let a = crate::transform::from_ortholattice(&l).unwrap();
        assert_eq!(
            crate::structure::canonical_form(&a),
            crate::structure::canonical_form(&fixtures::b4())
        );
    }
}
