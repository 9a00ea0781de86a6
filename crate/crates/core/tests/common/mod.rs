//! Independent oracles for the integration tests. Everything here works on
//! raw implication tables and the defining formulas, never on the library's
//! derived operations, compiled statements or search engine.
#![allow(dead_code)]

use std::collections::BTreeSet;

use iomlab::term::{Atom, Statement, Term};
use iomlab::{AlgebraClass, FiniteAlgebra, RelationKind};

/// A bare table with designated 0 and 1.
#[derive(Clone, Debug)]
pub struct Raw {
    pub n: usize,
    pub t: Vec<usize>,
    pub zero: usize,
    pub one: usize,
}

impl Raw {
    pub fn of(a: &FiniteAlgebra) -> Self {
        Raw {
            n: a.size(),
            t: a.table().to_vec(),
            zero: a.zero(),
            one: a.one(),
        }
    }

    pub fn imp(&self, x: usize, y: usize) -> usize {
        self.t[x * self.n + y]
    }

    pub fn neg(&self, x: usize) -> usize {
        self.imp(x, self.zero)
    }

    pub fn join(&self, x: usize, y: usize) -> usize {
        self.imp(self.imp(x, y), y)
    }

    pub fn meet(&self, x: usize, y: usize) -> usize {
        let ny = self.neg(y);
        self.neg(self.imp(self.imp(self.neg(x), ny), ny))
    }

    pub fn le(&self, x: usize, y: usize) -> bool {
        self.imp(x, y) == self.one
    }

    pub fn le_q(&self, x: usize, y: usize) -> bool {
        x == self.meet(x, y)
    }

    pub fn le_l(&self, x: usize, y: usize) -> bool {
        x == self.neg(self.imp(x, self.neg(y)))
    }

    pub fn commutes(&self, x: usize, y: usize) -> bool {
        x == self.imp(self.imp(x, self.neg(y)), self.neg(self.imp(x, y)))
    }

    pub fn elems(&self) -> std::ops::Range<usize> {
        0..self.n
    }

    /// `((x* -> y) -> z*)* = (x -> z*) -> (y -> z*)*`
    pub fn idis1(&self, x: usize, y: usize, z: usize) -> bool {
        let nz = self.neg(z);
        self.neg(self.imp(self.imp(self.neg(x), y), nz))
            == self.imp(self.imp(x, nz), self.neg(self.imp(y, nz)))
    }

    /// `((x -> y*) -> z)* = (z* -> x) -> (z* -> y)*`
    pub fn idis2(&self, x: usize, y: usize, z: usize) -> bool {
        let nz = self.neg(z);
        self.neg(self.imp(self.imp(x, self.neg(y)), z))
            == self.imp(self.imp(nz, x), self.neg(self.imp(nz, y)))
    }

    /// All twelve equations: both laws for each of the six orderings.
    pub fn distributive(&self, x: usize, y: usize, z: usize) -> bool {
        [
            (x, y, z),
            (x, z, y),
            (y, x, z),
            (y, z, x),
            (z, x, y),
            (z, y, x),
        ]
        .iter()
        .all(|&(p, q, r)| self.idis1(p, q, r) && self.idis2(p, q, r))
    }

    pub fn complements(&self, x: usize) -> Vec<usize> {
        self.elems()
            .filter(|&z| self.le(x, self.neg(z)) && self.le(self.neg(x), z))
            .collect()
    }

    pub fn center(&self) -> Vec<usize> {
        self.elems()
            .filter(|&x| self.elems().all(|y| self.commutes(x, y)))
            .collect()
    }

    /// `(z -> (z -> x*)*) -> (z* -> x)*`
    pub fn x_z(&self, x: usize, z: usize) -> usize {
        let left = self.imp(z, self.neg(self.imp(z, self.neg(x))));
        self.imp(left, self.neg(self.imp(self.neg(z), x)))
    }

    fn all_pairs(&self, f: impl Fn(usize, usize) -> bool) -> bool {
        self.elems().all(|x| self.elems().all(|y| f(x, y)))
    }

    pub fn is_be(&self) -> bool {
        self.all_pairs(|x, _| self.imp(x, x) == self.one)
            && self.all_pairs(|x, _| self.imp(x, self.one) == self.one)
            && self.all_pairs(|x, _| self.imp(self.one, x) == x)
            && self.be4()
    }

    fn be4(&self) -> bool {
        for x in self.elems() {
            for y in x + 1..self.n {
                for z in self.elems() {
                    if self.imp(x, self.imp(y, z)) != self.imp(y, self.imp(x, z)) {
                        return false;
                    }
                }
            }
        }
        true
    }

    pub fn in_class(&self, class: AlgebraClass) -> bool {
        if !self.is_be() {
            return false;
        }
        if class == AlgebraClass::Be {
            return true;
        }
        if !self.elems().all(|x| self.imp(self.zero, x) == self.one) {
            return false;
        }
        if class == AlgebraClass::BoundedBe {
            return true;
        }
        if !self.elems().all(|x| self.neg(self.neg(x)) == x) {
            return false;
        }
        if class == AlgebraClass::InvolutiveBe {
            return true;
        }
        if !self.all_pairs(|x, y| self.imp(self.imp(x, y), x) == x) {
            return false;
        }
        match class {
            AlgebraClass::Ioml => self.all_pairs(|x, y| self.meet(x, self.imp(y, x)) == x),
            AlgebraClass::ImplicativeBoolean => self.all_pairs(|x, y| {
                self.imp(x, self.neg(self.imp(x, y))) == self.imp(x, self.neg(y))
            }),
            _ => true,
        }
    }

    /// Lexicographically least relabelled table, found by trying every
    /// permutation that fixes 1 (and 0 when `pin_zero`).
    pub fn canonical(&self, pin_zero: bool) -> Vec<usize> {
        let n = self.n;
        let movable: Vec<usize> = self
            .elems()
            .filter(|&e| e != self.one && !(pin_zero && e == self.zero))
            .collect();
        let mut best: Option<Vec<usize>> = None;
        for order in permutations(&movable) {
            // order lists the old elements placed at the free new positions
            let mut q = Vec::with_capacity(n);
            if pin_zero {
                q.push(self.zero);
            }
            q.extend(order);
            q.push(self.one);
            let mut p = vec![0; n];
            for (i, &old) in q.iter().enumerate() {
                p[old] = i;
            }
            let table: Vec<usize> = (0..n * n)
                .map(|c| p[self.imp(q[c / n], q[c % n])])
                .collect();
            if best.as_ref().is_none_or(|b| table < *b) {
                best = Some(table);
            }
        }
        best.expect("at least one permutation")
    }
}

pub fn permutations(items: &[usize]) -> Vec<Vec<usize>> {
    if items.is_empty() {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for i in 0..items.len() {
        let mut rest = items.to_vec();
        let head = rest.remove(i);
        for mut tail in permutations(&rest) {
            tail.insert(0, head);
            out.push(tail);
        }
    }
    out
}

/// Every model of `class` on `{0..n-1}` with 0 first and 1 last, up to
/// isomorphism, by generate-and-test. Also returns the number of labelled
/// models found. Only the cells that BE1–BE3 (and the
/// bound axiom, for bounded classes) fix outright are pre-filled.
pub fn oracle_models(n: usize, class: AlgebraClass) -> (usize, BTreeSet<Vec<usize>>) {
    let one = n - 1;
    let bounded = class != AlgebraClass::Be;
    let mut t = vec![usize::MAX; n * n];
    for a in 0..n {
        t[a * n + a] = one;
        t[a * n + one] = one;
        t[one * n + a] = a;
        if bounded {
            t[a] = one;
        }
    }
    let free: Vec<usize> = (0..n * n).filter(|&c| t[c] == usize::MAX).collect();
    for &c in &free {
        t[c] = 0;
    }
    let mut raw = Raw { n, t, zero: 0, one };
    let mut found = BTreeSet::new();
    let mut labelled = 0;
    loop {
        if raw.be4() && raw.in_class(class) {
            labelled += 1;
            found.insert(raw.canonical(bounded));
        }
        // odometer over the free cells
        let mut k = 0;
        loop {
            if k == free.len() {
                return (labelled, found);
            }
            let c = free[k];
            raw.t[c] += 1;
            if raw.t[c] < n {
                break;
            }
            raw.t[c] = 0;
            k += 1;
        }
    }
}

fn collect_vars(t: &Term, out: &mut Vec<String>) {
    match t {
        Term::Var(v) => {
            if !out.contains(v) {
                out.push(v.clone())
            }
        }
        Term::Zero | Term::One => {}
        Term::Neg(a) => collect_vars(a, out),
        Term::Imp(a, b) | Term::Cap(a, b) | Term::Cup(a, b) => {
            collect_vars(a, out);
            collect_vars(b, out);
        }
    }
}

fn atom_terms(a: &Atom) -> (&Term, &Term) {
    match a {
        Atom::Eq(l, r) | Atom::Rel(_, l, r) => (l, r),
    }
}

/// Variables in order of first occurrence, premises before conclusion.
pub fn statement_vars(s: &Statement) -> Vec<String> {
    let mut out = Vec::new();
    match s {
        Statement::Equation(e) => {
            collect_vars(&e.lhs, &mut out);
            collect_vars(&e.rhs, &mut out);
        }
        Statement::Quasi(q) => {
            for atom in q.hypotheses.iter().chain(std::iter::once(&q.conclusion)) {
                let (l, r) = atom_terms(atom);
                collect_vars(l, &mut out);
                collect_vars(r, &mut out);
            }
        }
    }
    out
}

pub fn eval(raw: &Raw, t: &Term, vars: &[String], env: &[usize]) -> usize {
    match t {
        Term::Var(v) => env[vars.iter().position(|w| w == v).expect("bound variable")],
        Term::Zero => raw.zero,
        Term::One => raw.one,
        Term::Neg(a) => raw.neg(eval(raw, a, vars, env)),
        Term::Imp(a, b) => raw.imp(eval(raw, a, vars, env), eval(raw, b, vars, env)),
        Term::Cap(a, b) => raw.meet(eval(raw, a, vars, env), eval(raw, b, vars, env)),
        Term::Cup(a, b) => raw.join(eval(raw, a, vars, env), eval(raw, b, vars, env)),
    }
}

fn atom_holds(raw: &Raw, a: &Atom, vars: &[String], env: &[usize]) -> bool {
    match a {
        Atom::Eq(l, r) => eval(raw, l, vars, env) == eval(raw, r, vars, env),
        Atom::Rel(kind, l, r) => {
            let (x, y) = (eval(raw, l, vars, env), eval(raw, r, vars, env));
            match kind {
                RelationKind::Le => raw.le(x, y),
                RelationKind::LeQ => raw.le_q(x, y),
                RelationKind::LeL => raw.le_l(x, y),
                RelationKind::Commutes => raw.commutes(x, y),
            }
        }
    }
}

/// First failing assignment in lexicographic order, or `None` if the
/// statement holds.
pub fn brute_failure(a: &FiniteAlgebra, s: &Statement) -> Option<Vec<usize>> {
    let raw = Raw::of(a);
    let vars = statement_vars(s);
    let mut env = vec![0; vars.len()];
    loop {
        let ok = match s {
            Statement::Equation(e) => {
                eval(&raw, &e.lhs, &vars, &env) == eval(&raw, &e.rhs, &vars, &env)
            }
            Statement::Quasi(q) => {
                !q.hypotheses
                    .iter()
                    .all(|h| atom_holds(&raw, h, &vars, &env))
                    || atom_holds(&raw, &q.conclusion, &vars, &env)
            }
        };
        if !ok {
            return Some(env);
        }
        // most significant variable first
        let mut k = vars.len();
        loop {
            if k == 0 {
                return None;
            }
            k -= 1;
            env[k] += 1;
            if env[k] < raw.n {
                break;
            }
            env[k] = 0;
        }
    }
}
