use std::collections::HashMap;

use super::{Atom, Statement, Term};
use crate::algebra::{Elem, FiniteAlgebra, RelationKind};
use crate::error::{Error, Result};

/// Variable bindings in quantification order.
pub type Assignment = Vec<(String, Elem)>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Verdict {
    pub holds: bool,
    /// First failing assignment in lexicographic order, when `holds` is false.
    pub witness: Option<Assignment>,
}

impl Verdict {
    /// Renders the witness as `x=a y=b` using the algebra's element names.
    pub fn describe(&self, a: &FiniteAlgebra) -> String {
        match &self.witness {
            None => String::new(),
            Some(w) => w
                .iter()
                .map(|(v, e)| format!("{v}={}", a.name(*e)))
                .collect::<Vec<_>>()
                .join(" "),
        }
    }
}

/// Evaluates a term under an assignment of its variables.
pub fn evaluate(t: &Term, a: &FiniteAlgebra, assignment: &HashMap<String, Elem>) -> Result<Elem> {
    Ok(match t {
        Term::Var(v) => {
            let e = *assignment
                .get(v)
                .ok_or_else(|| Error::UnboundVariable(v.clone()))?;
            if e >= a.size() {
                return Err(Error::IndexOutOfRange {
                    index: e,
                    size: a.size(),
                });
            }
            e
        }
        Term::Zero => a.zero(),
        Term::One => a.one(),
        Term::Neg(s) => a.neg(evaluate(s, a, assignment)?),
        Term::Imp(l, r) => a.imp(evaluate(l, a, assignment)?, evaluate(r, a, assignment)?),
        Term::Cap(l, r) => a.cap(evaluate(l, a, assignment)?, evaluate(r, a, assignment)?),
        Term::Cup(l, r) => a.cup(evaluate(l, a, assignment)?, evaluate(r, a, assignment)?),
    })
}

/// Checks a statement under every assignment of its variables.
pub fn holds(statement: &Statement, a: &FiniteAlgebra) -> Verdict {
    let compiled = Compiled::new(statement).expect("statement variables are declared");
    let witness = compiled
        .first_failure(a)
        .map(|vals| compiled.assignment(&vals));
    Verdict {
        holds: witness.is_none(),
        witness,
    }
}

#[derive(Clone, Debug)]
enum Node {
    Var(usize),
    Zero,
    One,
    Neg(Box<Node>),
    Imp(Box<Node>, Box<Node>),
    Cap(Box<Node>, Box<Node>),
    Cup(Box<Node>, Box<Node>),
}

impl Node {
    fn compile(t: &Term, vars: &[String]) -> Result<Node> {
        let bin = |l: &Term, r: &Term| -> Result<(Box<Node>, Box<Node>)> {
            Ok((
                Box::new(Node::compile(l, vars)?),
                Box::new(Node::compile(r, vars)?),
            ))
        };
        Ok(match t {
            Term::Var(v) => Node::Var(
                vars.iter()
                    .position(|x| x == v)
                    .ok_or_else(|| Error::UnboundVariable(v.clone()))?,
            ),
            Term::Zero => Node::Zero,
            Term::One => Node::One,
            Term::Neg(s) => Node::Neg(Box::new(Node::compile(s, vars)?)),
            Term::Imp(l, r) => {
                let (l, r) = bin(l, r)?;
                Node::Imp(l, r)
            }
            Term::Cap(l, r) => {
                let (l, r) = bin(l, r)?;
                Node::Cap(l, r)
            }
            Term::Cup(l, r) => {
                let (l, r) = bin(l, r)?;
                Node::Cup(l, r)
            }
        })
    }

    fn eval(&self, a: &FiniteAlgebra, env: &[Elem]) -> Elem {
        match self {
            Node::Var(i) => env[*i],
            Node::Zero => a.zero(),
            Node::One => a.one(),
            Node::Neg(s) => a.neg(s.eval(a, env)),
            Node::Imp(l, r) => a.imp(l.eval(a, env), r.eval(a, env)),
            Node::Cap(l, r) => a.cap(l.eval(a, env), r.eval(a, env)),
            Node::Cup(l, r) => a.cup(l.eval(a, env), r.eval(a, env)),
        }
    }
}

#[derive(Clone, Debug)]
enum CompiledAtom {
    Eq(Node, Node),
    Rel(RelationKind, Node, Node),
}

impl CompiledAtom {
    fn compile(atom: &Atom, vars: &[String]) -> Result<Self> {
        Ok(match atom {
            Atom::Eq(l, r) => CompiledAtom::Eq(Node::compile(l, vars)?, Node::compile(r, vars)?),
            Atom::Rel(k, l, r) => {
                CompiledAtom::Rel(*k, Node::compile(l, vars)?, Node::compile(r, vars)?)
            }
        })
    }

    fn eval(&self, a: &FiniteAlgebra, env: &[Elem]) -> bool {
        match self {
            CompiledAtom::Eq(l, r) => l.eval(a, env) == r.eval(a, env),
            CompiledAtom::Rel(k, l, r) => a.relation(*k, l.eval(a, env), r.eval(a, env)),
        }
    }
}

/// A statement with variables resolved to positions, ready for repeated
/// evaluation over many algebras.
#[derive(Clone, Debug)]
pub struct Compiled {
    vars: Vec<String>,
    hypotheses: Vec<CompiledAtom>,
    conclusion: CompiledAtom,
}

impl Compiled {
    pub fn new(statement: &Statement) -> Result<Self> {
        match statement {
            Statement::Equation(e) => Ok(Self {
                vars: e.vars.clone(),
                hypotheses: Vec::new(),
                conclusion: CompiledAtom::Eq(
                    Node::compile(&e.lhs, &e.vars)?,
                    Node::compile(&e.rhs, &e.vars)?,
                ),
            }),
            Statement::Quasi(q) => Ok(Self {
                vars: q.vars.clone(),
                hypotheses: q
                    .hypotheses
                    .iter()
                    .map(|h| CompiledAtom::compile(h, &q.vars))
                    .collect::<Result<_>>()?,
                conclusion: CompiledAtom::compile(&q.conclusion, &q.vars)?,
            }),
        }
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    /// Whether the statement holds at one assignment (values in `vars` order).
    pub fn holds_at(&self, a: &FiniteAlgebra, env: &[Elem]) -> bool {
        !self.hypotheses.iter().all(|h| h.eval(a, env)) || self.conclusion.eval(a, env)
    }

    /// Whether every hypothesis holds at the assignment (vacuously true when
    /// there are none).
    pub fn premises_hold_at(&self, a: &FiniteAlgebra, env: &[Elem]) -> bool {
        self.hypotheses.iter().all(|h| h.eval(a, env))
    }

    /// First failing assignment, enumerating with the first variable most
    /// significant and elements by index.
    pub fn first_failure(&self, a: &FiniteAlgebra) -> Option<Vec<Elem>> {
        let n = a.size();
        let k = self.vars.len();
        let mut env = vec![0; k];
        loop {
            if !self.holds_at(a, &env) {
                return Some(env);
            }
            let mut i = k;
            loop {
                if i == 0 {
                    return None;
                }
                i -= 1;
                env[i] += 1;
                if env[i] < n {
                    break;
                }
                env[i] = 0;
            }
        }
    }

    pub fn check(&self, a: &FiniteAlgebra) -> Verdict {
        let witness = self.first_failure(a).map(|vals| self.assignment(&vals));
        Verdict {
            holds: witness.is_none(),
            witness,
        }
    }

    pub fn assignment(&self, values: &[Elem]) -> Assignment {
        self.vars
            .iter()
            .cloned()
            .zip(values.iter().copied())
            .collect()
    }
}
