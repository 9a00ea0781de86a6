use thiserror::Error;

use super::{Atom, Equation, QuasiIdentity, Statement, Term};
use crate::algebra::RelationKind;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("syntax error at byte {offset}: {message}")]
pub struct ParseError {
    pub offset: usize,
    pub message: String,
}

/// Result of [`parse`]: whichever syntactic category the whole input forms.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Parsed {
    Term(Term),
    Equation(Equation),
    Quasi(QuasiIdentity),
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Ident(String),
    Zero,
    One,
    Prime,
    Amp,
    Bar,
    Arrow,
    LParen,
    RParen,
    Eq,
    Comma,
    Turnstile,
    Rel(RelationKind),
    Eof,
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::Ident(s) => format!("identifier `{s}`"),
            Tok::Zero => "`0`".into(),
            Tok::One => "`1`".into(),
            Tok::Prime => "`'`".into(),
            Tok::Amp => "`&`".into(),
            Tok::Bar => "`|`".into(),
            Tok::Arrow => "`->`".into(),
            Tok::LParen => "`(`".into(),
            Tok::RParen => "`)`".into(),
            Tok::Eq => "`=`".into(),
            Tok::Comma => "`,`".into(),
            Tok::Turnstile => "`|-`".into(),
            Tok::Rel(k) => format!("`{}`", k.symbol()),
            Tok::Eof => "end of input".into(),
        }
    }
}

fn is_ident_char(c: u8) -> bool {
    c.is_ascii_alphanumeric() || c == b'_'
}

fn lex(text: &str) -> Result<Vec<(usize, Tok)>, ParseError> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    let err = |offset: usize, message: String| ParseError { offset, message };
    while i < bytes.len() {
        let c = bytes[i];
        let start = i;
        let tok = match c {
            b' ' | b'\t' | b'\r' | b'\n' => {
                i += 1;
                continue;
            }
            b'\'' => Tok::Prime,
            b'&' => Tok::Amp,
            b'(' => Tok::LParen,
            b')' => Tok::RParen,
            b'=' => Tok::Eq,
            b',' => Tok::Comma,
            b'|' if bytes.get(i + 1) == Some(&b'-') => {
                i += 1;
                Tok::Turnstile
            }
            b'|' => Tok::Bar,
            b'-' if bytes.get(i + 1) == Some(&b'>') => {
                i += 1;
                Tok::Arrow
            }
            b'<' if bytes.get(i + 1) == Some(&b'=') => {
                i += 1;
                let suffix = bytes.get(i + 1).copied();
                let standalone = !bytes.get(i + 2).copied().is_some_and(is_ident_char);
                match suffix {
                    Some(b'q') if standalone => {
                        i += 1;
                        Tok::Rel(RelationKind::LeQ)
                    }
                    Some(b'l') if standalone => {
                        i += 1;
                        Tok::Rel(RelationKind::LeL)
                    }
                    _ => Tok::Rel(RelationKind::Le),
                }
            }
            c if c.is_ascii_digit() => {
                while i + 1 < bytes.len() && is_ident_char(bytes[i + 1]) {
                    i += 1;
                }
                match &text[start..=i] {
                    "0" => Tok::Zero,
                    "1" => Tok::One,
                    other => return Err(err(start, format!("invalid constant `{other}`"))),
                }
            }
            c if c.is_ascii_alphabetic() || c == b'_' => {
                while i + 1 < bytes.len() && is_ident_char(bytes[i + 1]) {
                    i += 1;
                }
                Tok::Ident(text[start..=i].to_string())
            }
            _ => {
                let ch = text[start..].chars().next().unwrap_or('?');
                return Err(err(start, format!("unexpected character {ch:?}")));
            }
        };
        out.push((start, tok));
        i += 1;
    }
    out.push((text.len(), Tok::Eof));
    Ok(out)
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    pos: usize,
}

impl Parser {
    fn new(text: &str) -> Result<Self, ParseError> {
        Ok(Self {
            toks: lex(text)?,
            pos: 0,
        })
    }

    fn peek(&self) -> &Tok {
        &self.toks[self.pos].1
    }

    fn offset(&self) -> usize {
        self.toks[self.pos].0
    }

    fn bump(&mut self) -> Tok {
        let t = self.toks[self.pos].1.clone();
        if t != Tok::Eof {
            self.pos += 1;
        }
        t
    }

    fn error<T>(&self, message: impl Into<String>) -> Result<T, ParseError> {
        Err(ParseError {
            offset: self.offset(),
            message: message.into(),
        })
    }

    fn unexpected<T>(&self, expected: &str) -> Result<T, ParseError> {
        self.error(format!(
            "expected {expected}, found {}",
            self.peek().describe()
        ))
    }

    fn expect_eof(&self) -> Result<(), ParseError> {
        match self.peek() {
            Tok::Eof => Ok(()),
            _ => self.unexpected("end of input"),
        }
    }

    /// term := lattice ('->' term)?
    fn term(&mut self) -> Result<Term, ParseError> {
        let lhs = self.lattice()?;
        if *self.peek() == Tok::Arrow {
            self.bump();
            let rhs = self.term()?;
            Ok(Term::imp(lhs, rhs))
        } else {
            Ok(lhs)
        }
    }

    /// lattice := postfix (op postfix)*, with a single op per chain
    fn lattice(&mut self) -> Result<Term, ParseError> {
        let mut acc = self.postfix()?;
        let mut chain_op: Option<Tok> = None;
        while matches!(self.peek(), Tok::Amp | Tok::Bar) {
            let op = self.peek().clone();
            if chain_op.as_ref().is_some_and(|prev| *prev != op) {
                return self.error("mixing `&` and `|` requires parentheses");
            }
            self.bump();
            let rhs = self.postfix()?;
            acc = if op == Tok::Amp {
                Term::cap(acc, rhs)
            } else {
                Term::cup(acc, rhs)
            };
            chain_op = Some(op);
        }
        Ok(acc)
    }

    fn postfix(&mut self) -> Result<Term, ParseError> {
        let mut t = self.primary()?;
        while *self.peek() == Tok::Prime {
            self.bump();
            t = Term::neg(t);
        }
        Ok(t)
    }

    fn primary(&mut self) -> Result<Term, ParseError> {
        match self.peek().clone() {
            Tok::Ident(name) => {
                self.bump();
                Ok(Term::Var(name))
            }
            Tok::Zero => {
                self.bump();
                Ok(Term::Zero)
            }
            Tok::One => {
                self.bump();
                Ok(Term::One)
            }
            Tok::LParen => {
                self.bump();
                let t = self.term()?;
                if *self.peek() != Tok::RParen {
                    return self.unexpected("`)`");
                }
                self.bump();
                Ok(t)
            }
            _ => self.unexpected("a term"),
        }
    }

    /// Completes an atom whose left term has been parsed.
    fn finish_atom(&mut self, lhs: Term) -> Result<Atom, ParseError> {
        match self.peek().clone() {
            Tok::Eq => {
                self.bump();
                Ok(Atom::Eq(lhs, self.term()?))
            }
            Tok::Rel(kind) => {
                self.bump();
                Ok(Atom::Rel(kind, lhs, self.term()?))
            }
            Tok::Ident(name) if name == "C" => {
                self.bump();
                Ok(Atom::Rel(RelationKind::Commutes, lhs, self.term()?))
            }
            _ => self.unexpected("`=` or a relation"),
        }
    }

    fn atom(&mut self) -> Result<Atom, ParseError> {
        let lhs = self.term()?;
        self.finish_atom(lhs)
    }

    fn any(&mut self) -> Result<Parsed, ParseError> {
        if *self.peek() == Tok::Turnstile {
            self.bump();
            let conclusion = self.atom()?;
            self.expect_eof()?;
            return Ok(Parsed::Quasi(QuasiIdentity::new(Vec::new(), conclusion)));
        }
        let first = self.term()?;
        if *self.peek() == Tok::Eof {
            return Ok(Parsed::Term(first));
        }
        let mut atoms = vec![self.finish_atom(first)?];
        while *self.peek() == Tok::Comma {
            self.bump();
            atoms.push(self.atom()?);
        }
        if *self.peek() == Tok::Turnstile {
            self.bump();
            let conclusion = self.atom()?;
            self.expect_eof()?;
            return Ok(Parsed::Quasi(QuasiIdentity::new(atoms, conclusion)));
        }
        if atoms.len() > 1 {
            return self.unexpected("`|-`");
        }
        self.expect_eof()?;
        Ok(match atoms.pop().unwrap() {
            Atom::Eq(lhs, rhs) => Parsed::Equation(Equation::new(lhs, rhs)),
            rel => Parsed::Quasi(QuasiIdentity::new(Vec::new(), rel)),
        })
    }
}

/// Parses a term, an equation or a quasi-identity.
pub fn parse(text: &str) -> Result<Parsed, ParseError> {
    Parser::new(text)?.any()
}

pub fn parse_term(text: &str) -> Result<Term, ParseError> {
    let mut p = Parser::new(text)?;
    let t = p.term()?;
    p.expect_eof()?;
    Ok(t)
}

/// Parses an equation or quasi-identity; a bare term is rejected.
pub fn parse_statement(text: &str) -> Result<Statement, ParseError> {
    match parse(text)? {
        Parsed::Equation(e) => Ok(Statement::Equation(e)),
        Parsed::Quasi(q) => Ok(Statement::Quasi(q)),
        Parsed::Term(_) => Err(ParseError {
            offset: text.len(),
            message: "expected `=` or a relation".into(),
        }),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn v(n: &str) -> Term {
        Term::var(n)
    }

    #[test]
    fn implication_is_right_associative() {
        assert_eq!(
            parse_term("x -> (y -> x)").unwrap(),
            Term::imp(v("x"), Term::imp(v("y"), v("x")))
        );
        assert_eq!(
            parse_term("x -> y -> x").unwrap(),
            parse_term("x -> (y -> x)").unwrap()
        );
    }

    #[test]
    fn prime_binds_tightest() {
        assert_eq!(
            parse_term("x' & y -> z").unwrap(),
            Term::imp(Term::cap(Term::neg(v("x")), v("y")), v("z"))
        );
        assert_eq!(
            parse_term("(x -> y)''").unwrap(),
            Term::neg(Term::neg(Term::imp(v("x"), v("y"))))
        );
    }

    #[test]
    fn lattice_ops_are_left_associative() {
        assert_eq!(
            parse_term("x & y & z").unwrap(),
            Term::cap(Term::cap(v("x"), v("y")), v("z"))
        );
    }

    #[test]
    fn mixing_lattice_ops_is_rejected() {
        let err = parse_term("x & y | z").unwrap_err();
        assert_eq!(err.offset, 6);
        assert!(parse_term("(x & y) | z").is_ok());
    }

    #[test]
    fn distributivity_equation() {
        let Parsed::Equation(e) = parse("((x' -> y) -> z')' = (x -> z') -> (y -> z')'").unwrap()
        else {
            panic!("expected equation");
        };
        assert_eq!(e.vars, ["x", "y", "z"]);
        let xp = Term::neg(v("x"));
        let zp = Term::neg(v("z"));
        assert_eq!(
            e.lhs,
            Term::neg(Term::imp(Term::imp(xp, v("y")), zp.clone()))
        );
        assert_eq!(
            e.rhs,
            Term::imp(
                Term::imp(v("x"), zp.clone()),
                Term::neg(Term::imp(v("y"), zp))
            )
        );
    }

    #[test]
    fn quasi_identity_with_relations() {
        let Parsed::Quasi(q) = parse("x <=l y |- x <=q y").unwrap() else {
            panic!()
        };
        assert_eq!(
            q.hypotheses,
            vec![Atom::Rel(RelationKind::LeL, v("x"), v("y"))]
        );
        assert_eq!(q.conclusion, Atom::Rel(RelationKind::LeQ, v("x"), v("y")));
        let Parsed::Quasi(q) = parse("x C z, y C z |- (x -> y) C z").unwrap() else {
            panic!()
        };
        assert_eq!(q.hypotheses.len(), 2);
        assert_eq!(q.vars, ["x", "z", "y"]);
    }

    #[test]
    fn bare_relation_is_a_quasi_identity() {
        let Parsed::Quasi(q) = parse("x <= (x -> y) -> y").unwrap() else {
            panic!()
        };
        assert!(q.hypotheses.is_empty());
        assert_eq!(parse("|- x <= (x -> y) -> y").unwrap(), Parsed::Quasi(q));
    }

    #[test]
    fn le_followed_by_identifier() {
        // `<=q1` is `<=` applied to the variable `q1`
        let Parsed::Quasi(q) = parse("x <=q1").unwrap() else {
            panic!()
        };
        assert_eq!(q.conclusion, Atom::Rel(RelationKind::Le, v("x"), v("q1")));
    }

    #[test]
    fn errors_carry_offsets() {
        assert_eq!(parse("x -> ").unwrap_err().offset, 5);
        assert_eq!(parse("x # y").unwrap_err().offset, 2);
        assert_eq!(parse("x = 2").unwrap_err().offset, 4);
        assert!(parse("x = y, y = x").is_err());
        assert!(parse_statement("x -> y").is_err());
        assert!(parse("(x").is_err());
    }

    fn arb_term() -> impl Strategy<Value = Term> {
        let leaf = prop_oneof![
            Just(Term::Zero),
            Just(Term::One),
            "[a-z][a-z0-9]{0,2}"
                .prop_filter("relation keyword", |s| s != "C")
                .prop_map(Term::Var),
        ];
        leaf.prop_recursive(5, 40, 2, |inner| {
            prop_oneof![
                inner.clone().prop_map(Term::neg),
                (inner.clone(), inner.clone()).prop_map(|(a, b)| Term::imp(a, b)),
                (inner.clone(), inner.clone()).prop_map(|(a, b)| Term::cap(a, b)),
                (inner.clone(), inner).prop_map(|(a, b)| Term::cup(a, b)),
            ]
        })
    }

    fn arb_atom() -> impl Strategy<Value = Atom> {
        let kinds = prop_oneof![
            Just(RelationKind::Le),
            Just(RelationKind::LeQ),
            Just(RelationKind::LeL),
            Just(RelationKind::Commutes)
        ];
        prop_oneof![
            (arb_term(), arb_term()).prop_map(|(a, b)| Atom::Eq(a, b)),
            (kinds, arb_term(), arb_term()).prop_map(|(k, a, b)| Atom::Rel(k, a, b)),
        ]
    }

    proptest! {
        #[test]
        fn print_then_parse_is_identity(t in arb_term()) {
            prop_assert_eq!(parse_term(&t.to_string()).unwrap(), t);
        }

        #[test]
        fn statements_round_trip(hyps in proptest::collection::vec(arb_atom(), 0..3), concl in arb_atom()) {
            let q = QuasiIdentity::new(hyps, concl);
            prop_assert_eq!(parse(&q.to_string()).unwrap(), Parsed::Quasi(q));
        }

        #[test]
        fn equations_round_trip(a in arb_term(), b in arb_term()) {
            let e = Equation::new(a, b);
            prop_assert_eq!(parse(&e.to_string()).unwrap(), Parsed::Equation(e));
        }
    }
}
