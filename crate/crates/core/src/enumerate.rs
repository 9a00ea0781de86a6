//! Exhaustive model search by backtracking over implication-table cells.
//!
//! Zero sits at index 0 and one at index n−1. For involutive classes the
//! negation column is fixed up front by choosing an involution, then the
//! remaining cells are filled in a fixed order. Each assignment is pushed
//! through a propagation queue that applies:
//!
//! * contraposition `a → b = b* → a*` (involutive classes),
//! * `(a → b) → a = a` (implicative classes),
//! * exchange `x → (y → z) = y → (x → z)` whenever three of the four cells
//!   of an instance are known.
//!
//! Every complete table is re-checked against the full class definition
//! before it is emitted, so propagation only has to be sound, not complete.

use std::collections::BTreeSet;
use std::ops::ControlFlow;

use rayon::prelude::*;

use crate::algebra::{Elem, FiniteAlgebra};
use crate::axioms::{in_class, AlgebraClass};
use crate::error::{Error, Result};
use crate::structure::{canonical_table, generic_names};
use crate::term::{Assignment, Compiled, Statement};

pub const DEFAULT_MAX_SIZE: usize = 8;

/// Order in which free cells are branched on.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum CellOrder {
    #[default]
    RowMajor,
    ColumnMajor,
}

#[derive(Clone, Debug)]
pub struct EnumerationTask {
    pub size: usize,
    pub class: AlgebraClass,
    pub modulo_iso: bool,
    /// When set, only models on which this statement fails are emitted.
    pub refute: Option<Statement>,
    pub order: CellOrder,
    pub max_size: usize,
}

impl EnumerationTask {
    pub fn new(size: usize, class: AlgebraClass) -> Self {
        Self {
            size,
            class,
            modulo_iso: false,
            refute: None,
            order: CellOrder::default(),
            max_size: DEFAULT_MAX_SIZE,
        }
    }

    pub fn modulo_iso(mut self, on: bool) -> Self {
        self.modulo_iso = on;
        self
    }

    pub fn refuting(mut self, statement: Statement) -> Self {
        self.refute = Some(statement);
        self
    }

    pub fn order(mut self, order: CellOrder) -> Self {
        self.order = order;
        self
    }

    pub fn max_size(mut self, max: usize) -> Self {
        self.max_size = max;
        self
    }

    pub fn validate(&self) -> Result<()> {
        if self.size < 2 || self.size > self.max_size {
            return Err(Error::SizeLimit {
                size: self.size,
                max: self.max_size,
            });
        }
        Ok(())
    }
}

const UNSET: u8 = u8::MAX;

struct Search<'a> {
    n: usize,
    class: AlgebraClass,
    neg: Vec<u8>,
    cells: Vec<usize>,
    table: Vec<u8>,
    trail: Vec<usize>,
    queue: Vec<usize>,
    refute: Option<&'a Compiled>,
    /// Emit only tables that are already their own canonical form.
    orderly: bool,
    sink: &'a mut dyn FnMut(FiniteAlgebra) -> ControlFlow<()>,
    stopped: bool,
}

impl Search<'_> {
    fn get(&self, a: usize, b: usize) -> u8 {
        self.table[a * self.n + b]
    }

    fn set(&mut self, cell: usize, v: u8) -> bool {
        match self.table[cell] {
            UNSET => {
                self.table[cell] = v;
                self.trail.push(cell);
                self.queue.push(cell);
                true
            }
            w => w == v,
        }
    }

    fn unify(&mut self, c1: usize, c2: usize) -> bool {
        match (self.table[c1], self.table[c2]) {
            (UNSET, UNSET) => true,
            (UNSET, v) => self.set(c1, v),
            (v, UNSET) => self.set(c2, v),
            (v, w) => v == w,
        }
    }

    fn propagate(&mut self) -> bool {
        let n = self.n;
        while let Some(cell) = self.queue.pop() {
            let (a, b) = (cell / n, cell % n);
            let v = self.table[cell];
            let vi = v as usize;
            if self.class.is_involutive() {
                let (na, nb) = (self.neg[a] as usize, self.neg[b] as usize);
                if !self.set(nb * n + na, v) {
                    return false;
                }
            }
            if self.class.is_implicative() && !self.set(vi * n + a, a as u8) {
                return false;
            }
            // (a, b) as the inner cell y → z: x → v = a → (x → b)
            for x in 0..n {
                let w = self.get(x, b);
                if w != UNSET && !self.unify(x * n + vi, a * n + w as usize) {
                    return false;
                }
            }
            // (a, b) as the outer cell x → (y → z) with y → z = b
            for y in 0..n {
                for z in 0..n {
                    if self.get(y, z) as usize == b {
                        let w = self.get(a, z);
                        if w != UNSET && !self.set(y * n + w as usize, v) {
                            return false;
                        }
                    }
                }
            }
        }
        true
    }

    fn undo(&mut self, mark: usize) {
        for cell in self.trail.drain(mark..) {
            self.table[cell] = UNSET;
        }
        self.queue.clear();
    }

    fn assign_all(&mut self, forced: &[(usize, u8)]) -> bool {
        forced.iter().all(|&(c, v)| self.set(c, v)) && self.propagate()
    }

    fn run(&mut self, depth: usize) {
        if self.stopped {
            return;
        }
        let Some(pos) = (depth..self.cells.len()).find(|&i| self.table[self.cells[i]] == UNSET)
        else {
            self.leaf();
            return;
        };
        let cell = self.cells[pos];
        for v in 0..self.n as u8 {
            let mark = self.trail.len();
            if self.set(cell, v) && self.propagate() {
                self.run(pos + 1);
            }
            self.undo(mark);
        }
    }

    fn leaf(&mut self) {
        let n = self.n;
        if self.orderly && !is_canonical(&self.table, n, self.class != AlgebraClass::Be) {
            return;
        }
        let imp = self.table.iter().map(|&v| v as Elem).collect();
        let alg =
            FiniteAlgebra::from_flat(generic_names(n), imp, n - 1, 0).expect("complete table");
        if !in_class(&alg, self.class) {
            return;
        }
        if let Some(stmt) = self.refute {
            if stmt.first_failure(&alg).is_none() {
                return;
            }
        }
        self.stopped = (self.sink)(alg).is_break();
    }
}

/// True when no relabelling fixing 1 (and 0, with `pin_zero`) gives a
/// lexicographically smaller table. Bails out at the first smaller one.
fn is_canonical(table: &[u8], n: usize, pin_zero: bool) -> bool {
    fn rec(table: &[u8], n: usize, q: &mut [usize], p: &mut [usize], lo: usize, hi: usize) -> bool {
        if lo + 1 >= hi {
            for (i, &old) in q.iter().enumerate() {
                p[old] = i;
            }
            for i in 0..n {
                for j in 0..n {
                    let v = p[table[q[i] * n + q[j]] as usize] as u8;
                    let w = table[i * n + j];
                    if v != w {
                        return v > w;
                    }
                }
            }
            return true;
        }
        for i in lo..hi {
            q.swap(lo, i);
            let ok = rec(table, n, q, p, lo + 1, hi);
            q.swap(lo, i);
            if !ok {
                return false;
            }
        }
        true
    }
    let mut q: Vec<usize> = (0..n).collect();
    let mut p = vec![0; n];
    rec(table, n, &mut q, &mut p, usize::from(pin_zero), n - 1)
}

/// Involutions of `{0, .., n-1}` swapping 0 and n−1. With `standard_only`
/// just one representative per cycle type: fixed points first, then
/// adjacent pairs.
fn involutions(n: usize, standard_only: bool) -> Vec<Vec<u8>> {
    let inner: Vec<usize> = (1..n - 1).collect();
    let m = inner.len();
    let mut out = Vec::new();
    if standard_only {
        for fixed in (m % 2..=m).step_by(2) {
            let mut neg: Vec<u8> = (0..n as u8).collect();
            neg[0] = (n - 1) as u8;
            neg[n - 1] = 0;
            let mut i = 1 + fixed;
            while i + 1 < n - 1 {
                neg[i] = (i + 1) as u8;
                neg[i + 1] = i as u8;
                i += 2;
            }
            out.push(neg);
        }
        return out;
    }
    fn rec(rest: &[usize], neg: &mut Vec<u8>, out: &mut Vec<Vec<u8>>) {
        let Some((&first, tail)) = rest.split_first() else {
            out.push(neg.clone());
            return;
        };
        neg[first] = first as u8;
        rec(tail, neg, out);
        for (k, &partner) in tail.iter().enumerate() {
            neg[first] = partner as u8;
            neg[partner] = first as u8;
            let remaining: Vec<usize> = tail
                .iter()
                .enumerate()
                .filter(|&(j, _)| j != k)
                .map(|(_, &e)| e)
                .collect();
            rec(&remaining, neg, out);
            neg[partner] = partner as u8;
        }
        neg[first] = first as u8;
    }
    let mut neg: Vec<u8> = (0..n as u8).collect();
    neg[0] = (n - 1) as u8;
    neg[n - 1] = 0;
    rec(&inner, &mut neg, &mut out);
    out
}

fn cell_order(n: usize, order: CellOrder) -> Vec<usize> {
    let mut cells: Vec<usize> = (0..n * n).collect();
    if order == CellOrder::ColumnMajor {
        cells.sort_by_key(|&c| (c % n, c / n));
    }
    cells
}

fn search_branch(
    task: &EnumerationTask,
    neg: Option<&[u8]>,
    refute: Option<&Compiled>,
    orderly: bool,
    sink: &mut dyn FnMut(FiniteAlgebra) -> ControlFlow<()>,
) -> ControlFlow<()> {
    let n = task.size;
    let one = (n - 1) as u8;
    let mut s = Search {
        n,
        class: task.class,
        neg: neg.map(<[u8]>::to_vec).unwrap_or_default(),
        cells: cell_order(n, task.order),
        table: vec![UNSET; n * n],
        trail: Vec::new(),
        queue: Vec::new(),
        refute,
        orderly,
        sink,
        stopped: false,
    };
    let mut forced = Vec::new();
    for a in 0..n {
        forced.push(((n - 1) * n + a, a as u8)); // 1 → a = a
        forced.push((a * n + n - 1, one)); // a → 1 = 1
        forced.push((a * n + a, one)); // a → a = 1
        if task.class != AlgebraClass::Be {
            forced.push((a, one)); // 0 → a = 1
        }
        if let Some(neg) = neg {
            forced.push((a * n, neg[a]));
        }
    }
    if s.assign_all(&forced) {
        s.run(0);
    }
    if s.stopped {
        ControlFlow::Break(())
    } else {
        ControlFlow::Continue(())
    }
}

fn branches(task: &EnumerationTask) -> Vec<Option<Vec<u8>>> {
    if task.class.is_involutive() {
        involutions(task.size, task.modulo_iso)
            .into_iter()
            .map(Some)
            .collect()
    } else {
        vec![None]
    }
}

/// Orderly generation needs every labelling of a model to be reachable,
/// which fails when only standard involutions are searched.
fn orderly(task: &EnumerationTask) -> bool {
    task.modulo_iso && !task.class.is_involutive()
}

/// All models of the requested class and size, sorted by canonical form.
pub fn enumerate_models(task: &EnumerationTask) -> Result<Vec<FiniteAlgebra>> {
    task.validate()?;
    let refute = task.refute.as_ref().map(Compiled::new).transpose()?;
    let found: Vec<FiniteAlgebra> = branches(task)
        .par_iter()
        .flat_map_iter(|neg| {
            let mut out = Vec::new();
            let _ = search_branch(
                task,
                neg.as_deref(),
                refute.as_ref(),
                orderly(task),
                &mut |a| {
                    out.push(a);
                    ControlFlow::Continue(())
                },
            );
            out
        })
        .collect();
    if orderly(task) {
        let mut found = found;
        found.sort_by(|x, y| x.table().cmp(y.table()));
        return Ok(found);
    }
    let pin_zero = task.class != AlgebraClass::Be;
    let mut keyed: Vec<(Vec<Elem>, FiniteAlgebra)> = found
        .into_par_iter()
        .map(|a| (canonical_table(&a, pin_zero), a))
        .collect();
    if task.modulo_iso {
        let n = task.size;
        let unique: BTreeSet<Vec<Elem>> = keyed.into_iter().map(|(k, _)| k).collect();
        return Ok(unique
            .into_iter()
            .map(|t| {
                FiniteAlgebra::from_flat(generic_names(n), t, n - 1, 0).expect("canonical table")
            })
            .collect());
    }
    keyed.sort_by(|x, y| (&x.0, x.1.table()).cmp(&(&y.0, y.1.table())));
    Ok(keyed.into_iter().map(|(_, a)| a).collect())
}

/// Streams the models of `task` to `visit` without collecting them, until
/// `visit` breaks. Modulo isomorphism with row-major order, models arrive
/// in the same order `enumerate_models` returns them.
pub fn for_each_model(
    task: &EnumerationTask,
    mut visit: impl FnMut(FiniteAlgebra) -> ControlFlow<()>,
) -> Result<()> {
    if task.modulo_iso && !orderly(task) {
        for a in enumerate_models(task)? {
            if visit(a).is_break() {
                break;
            }
        }
        return Ok(());
    }
    task.validate()?;
    let refute = task.refute.as_ref().map(Compiled::new).transpose()?;
    for neg in branches(task) {
        if search_branch(
            task,
            neg.as_deref(),
            refute.as_ref(),
            orderly(task),
            &mut visit,
        )
        .is_break()
        {
            break;
        }
    }
    Ok(())
}

pub fn count_models(size: usize, class: AlgebraClass, modulo_iso: bool) -> Result<usize> {
    Ok(enumerate_models(&EnumerationTask::new(size, class).modulo_iso(modulo_iso))?.len())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Counterexample {
    pub algebra: FiniteAlgebra,
    pub witness: Assignment,
}

/// The first model, by size then canonical order, of `class` on which
/// `statement` fails. Sizes run from 2 to `max_size`.
pub fn find_counterexample(
    statement: &Statement,
    class: AlgebraClass,
    max_size: usize,
) -> Result<Option<Counterexample>> {
    let compiled = Compiled::new(statement)?;
    for n in 2..=max_size {
        let task = EnumerationTask::new(n, class)
            .modulo_iso(true)
            .refuting(statement.clone())
            .max_size(max_size);
        if let Some(algebra) = enumerate_models(&task)?.into_iter().next() {
            let values = compiled
                .first_failure(&algebra)
                .expect("model was selected as failing");
            return Ok(Some(Counterexample {
                witness: compiled.assignment(&values),
                algebra,
            }));
        }
    }
    Ok(None)
}
