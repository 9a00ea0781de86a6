//! Terms, equations and quasi-identities over `→`, `*`, `⊓`, `⊔`, 0 and 1.
//!
//! Surface syntax (ASCII):
//!
//! | notation | syntax   | binding                                  |
//! |----------|----------|------------------------------------------|
//! | `x*`     | `x'`     | postfix, tightest                        |
//! | `x ⊓ y`  | `x & y`  | left-assoc; cannot mix with `|` unparenthesized |
//! | `x ⊔ y`  | `x \| y` | same level as `&`                        |
//! | `x → y`  | `x -> y` | right-assoc, loosest                     |
//!
//! Statements are `lhs = rhs`, a bare relation atom such as `x <=q y`, or a
//! quasi-identity `H1, H2 |- C` whose atoms are equations or the infix
//! relations `<=`, `<=q`, `<=l` and `C`.

mod eval;
mod parser;

use std::fmt;

pub use eval::{evaluate, holds, Assignment, Compiled, Verdict};
pub use parser::{parse, parse_statement, parse_term, ParseError, Parsed};

use crate::algebra::RelationKind;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Term {
    Var(String),
    Zero,
    One,
    Neg(Box<Term>),
    Imp(Box<Term>, Box<Term>),
    Cap(Box<Term>, Box<Term>),
    Cup(Box<Term>, Box<Term>),
}

impl Term {
    pub fn var(name: &str) -> Term {
        Term::Var(name.to_string())
    }

    #[allow(clippy::should_implement_trait)]
    pub fn neg(t: Term) -> Term {
        Term::Neg(Box::new(t))
    }

    pub fn imp(a: Term, b: Term) -> Term {
        Term::Imp(Box::new(a), Box::new(b))
    }

    pub fn cap(a: Term, b: Term) -> Term {
        Term::Cap(Box::new(a), Box::new(b))
    }

    pub fn cup(a: Term, b: Term) -> Term {
        Term::Cup(Box::new(a), Box::new(b))
    }

    /// Appends free variables in order of first occurrence.
    pub fn collect_vars(&self, out: &mut Vec<String>) {
        match self {
            Term::Var(v) => {
                if !out.contains(v) {
                    out.push(v.clone());
                }
            }
            Term::Zero | Term::One => {}
            Term::Neg(t) => t.collect_vars(out),
            Term::Imp(a, b) | Term::Cap(a, b) | Term::Cup(a, b) => {
                a.collect_vars(out);
                b.collect_vars(out);
            }
        }
    }
}

impl fmt::Display for Term {
    /// Canonical form: every binary node parenthesized.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Term::Var(v) => f.write_str(v),
            Term::Zero => f.write_str("0"),
            Term::One => f.write_str("1"),
            Term::Neg(t) => write!(f, "{t}'"),
            Term::Imp(a, b) => write!(f, "({a} -> {b})"),
            Term::Cap(a, b) => write!(f, "({a} & {b})"),
            Term::Cup(a, b) => write!(f, "({a} | {b})"),
        }
    }
}

/// One side of a quasi-identity: an equation or a relation between terms.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Atom {
    Eq(Term, Term),
    Rel(RelationKind, Term, Term),
}

impl Atom {
    fn collect_vars(&self, out: &mut Vec<String>) {
        match self {
            Atom::Eq(a, b) | Atom::Rel(_, a, b) => {
                a.collect_vars(out);
                b.collect_vars(out);
            }
        }
    }
}

impl fmt::Display for Atom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Atom::Eq(a, b) => write!(f, "{a} = {b}"),
            Atom::Rel(kind, a, b) => write!(f, "{a} {} {b}", kind.symbol()),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Equation {
    pub lhs: Term,
    pub rhs: Term,
    /// Universally quantified variables, in quantification order.
    pub vars: Vec<String>,
}

impl Equation {
    /// Builds an equation quantifying over its free variables in order of
    /// first occurrence.
    pub fn new(lhs: Term, rhs: Term) -> Self {
        let mut vars = Vec::new();
        lhs.collect_vars(&mut vars);
        rhs.collect_vars(&mut vars);
        Self { lhs, rhs, vars }
    }
}

impl fmt::Display for Equation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} = {}", self.lhs, self.rhs)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QuasiIdentity {
    pub hypotheses: Vec<Atom>,
    pub conclusion: Atom,
    pub vars: Vec<String>,
}

impl QuasiIdentity {
    pub fn new(hypotheses: Vec<Atom>, conclusion: Atom) -> Self {
        let mut vars = Vec::new();
        for h in &hypotheses {
            h.collect_vars(&mut vars);
        }
        conclusion.collect_vars(&mut vars);
        Self {
            hypotheses,
            conclusion,
            vars,
        }
    }
}

impl fmt::Display for QuasiIdentity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let hyps: Vec<String> = self.hypotheses.iter().map(ToString::to_string).collect();
        if hyps.is_empty() {
            write!(f, "|- {}", self.conclusion)
        } else {
            write!(f, "{} |- {}", hyps.join(", "), self.conclusion)
        }
    }
}

/// Anything that can be checked for validity on an algebra.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Statement {
    Equation(Equation),
    Quasi(QuasiIdentity),
}

impl Statement {
    pub fn vars(&self) -> &[String] {
        match self {
            Statement::Equation(e) => &e.vars,
            Statement::Quasi(q) => &q.vars,
        }
    }
}

impl fmt::Display for Statement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Statement::Equation(e) => e.fmt(f),
            Statement::Quasi(q) => q.fmt(f),
        }
    }
}

impl From<Equation> for Statement {
    fn from(e: Equation) -> Self {
        Statement::Equation(e)
    }
}

impl From<QuasiIdentity> for Statement {
    fn from(q: QuasiIdentity) -> Self {
        Statement::Quasi(q)
    }
}
