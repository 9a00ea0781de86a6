//! Finite algebras of signature (→, *, 0, 1) given by an implication table.
//!
//! Every derived operation (negation, the join-like `⊔`, the meet-like `⊓`)
//! and every relation (`≤`, `≤_Q`, `≤_L`, commutation) is computed on demand
//! from the table. Only [`RelationMatrix`] materializes results.

use std::fmt;

use crate::error::{Error, Result};

/// An element of a finite algebra, identified by its carrier index.
pub type Elem = usize;

/// A finite algebra with carrier `0..n`, an implication table and the
/// designated constants 1 and 0.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FiniteAlgebra {
    names: Vec<String>,
    imp: Vec<Elem>,
    one: Elem,
    zero: Elem,
}

impl FiniteAlgebra {
    /// Builds an algebra from display names and an `n×n` table of indices.
    pub fn new(names: Vec<String>, table: Vec<Vec<Elem>>, one: Elem, zero: Elem) -> Result<Self> {
        let n = names.len();
        if n == 0 {
            return Err(Error::InvalidAlgebra("carrier must be nonempty".into()));
        }
        if table.len() != n || table.iter().any(|row| row.len() != n) {
            return Err(Error::InvalidAlgebra(format!("table must be {n}x{n}")));
        }
        let flat: Vec<Elem> = table.into_iter().flatten().collect();
        Self::from_flat(names, flat, one, zero)
    }

    /// Builds an algebra from a row-major table.
    pub fn from_flat(names: Vec<String>, imp: Vec<Elem>, one: Elem, zero: Elem) -> Result<Self> {
        let n = names.len();
        if n == 0 {
            return Err(Error::InvalidAlgebra("carrier must be nonempty".into()));
        }
        if imp.len() != n * n {
            return Err(Error::InvalidAlgebra(format!(
                "table must have {} entries",
                n * n
            )));
        }
        for (i, name) in names.iter().enumerate() {
            if name.is_empty() || name.chars().any(char::is_whitespace) {
                return Err(Error::InvalidAlgebra(format!(
                    "invalid element name {name:?}"
                )));
            }
            if names[..i].contains(name) {
                return Err(Error::InvalidAlgebra(format!(
                    "duplicate element name `{name}`"
                )));
            }
        }
        for &index in imp.iter().chain([&one, &zero]) {
            if index >= n {
                return Err(Error::IndexOutOfRange { index, size: n });
            }
        }
        if n >= 2 && one == zero {
            return Err(Error::InvalidAlgebra("one and zero must differ".into()));
        }
        Ok(Self {
            names,
            imp,
            one,
            zero,
        })
    }

    /// Builds an algebra from a closure, naming elements `e0, e1, ...`.
    pub fn from_fn(
        n: usize,
        one: Elem,
        zero: Elem,
        f: impl Fn(Elem, Elem) -> Elem,
    ) -> Result<Self> {
        let names = (0..n).map(|i| format!("e{i}")).collect();
        let imp = (0..n)
            .flat_map(|a| (0..n).map(move |b| (a, b)))
            .map(|(a, b)| f(a, b))
            .collect();
        Self::from_flat(names, imp, one, zero)
    }

    pub fn size(&self) -> usize {
        self.names.len()
    }

    pub fn one(&self) -> Elem {
        self.one
    }

    pub fn zero(&self) -> Elem {
        self.zero
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, a: Elem) -> &str {
        &self.names[a]
    }

    /// Looks up an element by its display name.
    pub fn element(&self, name: &str) -> Result<Elem> {
        self.names
            .iter()
            .position(|n| n == name)
            .ok_or_else(|| Error::UnknownElement(name.to_string()))
    }

    pub fn elements(&self) -> std::ops::Range<Elem> {
        0..self.size()
    }

    /// The one-element algebra, where 0 = 1.
    pub fn is_degenerate(&self) -> bool {
        self.size() == 1
    }

    /// Row-major implication table.
    pub fn table(&self) -> &[Elem] {
        &self.imp
    }

    pub fn with_names(mut self, names: Vec<String>) -> Result<Self> {
        if names.len() != self.size() {
            return Err(Error::InvalidAlgebra(
                "name count does not match size".into(),
            ));
        }
        self.names = names;
        Self::from_flat(self.names, self.imp, self.one, self.zero)
    }

    fn check(&self, a: Elem) -> Result<Elem> {
        if a < self.size() {
            Ok(a)
        } else {
            Err(Error::IndexOutOfRange {
                index: a,
                size: self.size(),
            })
        }
    }

    /// `a → b`. Panics if either index is out of range; see [`Self::checked_imp`].
    #[inline]
    pub fn imp(&self, a: Elem, b: Elem) -> Elem {
        assert!(
            a < self.size() && b < self.size(),
            "element index out of range"
        );
        self.imp[a * self.size() + b]
    }

    pub fn checked_imp(&self, a: Elem, b: Elem) -> Result<Elem> {
        Ok(self.imp(self.check(a)?, self.check(b)?))
    }

    /// `a* = a → 0`.
    #[inline]
    pub fn neg(&self, a: Elem) -> Elem {
        self.imp(a, self.zero)
    }

    pub fn checked_neg(&self, a: Elem) -> Result<Elem> {
        Ok(self.neg(self.check(a)?))
    }

    /// `a ⊔ b = (a → b) → b`.
    #[inline]
    pub fn cup(&self, a: Elem, b: Elem) -> Elem {
        self.imp(self.imp(a, b), b)
    }

    /// `a ⊓ b = ((a* → b*) → b*)*`.
    #[inline]
    pub fn cap(&self, a: Elem, b: Elem) -> Elem {
        let nb = self.neg(b);
        self.neg(self.imp(self.imp(self.neg(a), nb), nb))
    }

    /// `a ≤ b` iff `a → b = 1`. Not assumed to be transitive.
    #[inline]
    pub fn le(&self, a: Elem, b: Elem) -> bool {
        self.imp(a, b) == self.one
    }

    /// `a ≤_Q b` iff `a = a ⊓ b`.
    #[inline]
    pub fn le_q(&self, a: Elem, b: Elem) -> bool {
        self.cap(a, b) == a
    }

    /// `a ≤_L b` iff `a = (a → b*)*`.
    #[inline]
    pub fn le_l(&self, a: Elem, b: Elem) -> bool {
        self.neg(self.imp(a, self.neg(b))) == a
    }

    /// `a C b` iff `a = (a → b*) → (a → b)*`.
    #[inline]
    pub fn commutes(&self, a: Elem, b: Elem) -> bool {
        self.imp(self.imp(a, self.neg(b)), self.neg(self.imp(a, b))) == a
    }

    pub fn relation(&self, kind: RelationKind, a: Elem, b: Elem) -> bool {
        match kind {
            RelationKind::Le => self.le(a, b),
            RelationKind::LeQ => self.le_q(a, b),
            RelationKind::LeL => self.le_l(a, b),
            RelationKind::Commutes => self.commutes(a, b),
        }
    }

    pub fn relation_matrix(&self, kind: RelationKind) -> RelationMatrix {
        let n = self.size();
        let bits = (0..n)
            .flat_map(|a| (0..n).map(move |b| (a, b)))
            .map(|(a, b)| self.relation(kind, a, b))
            .collect();
        RelationMatrix {
            kind,
            size: n,
            bits,
        }
    }

    /// Renumbers the carrier: element `a` of `self` becomes element `perm[a]`.
    pub fn relabel(&self, perm: &[Elem]) -> Result<Self> {
        let n = self.size();
        let mut inverse = vec![usize::MAX; n];
        if perm.len() != n {
            return Err(Error::InvalidAlgebra("permutation has wrong length".into()));
        }
        for (a, &p) in perm.iter().enumerate() {
            if p >= n || inverse[p] != usize::MAX {
                return Err(Error::InvalidAlgebra("not a permutation".into()));
            }
            inverse[p] = a;
        }
        let names = inverse.iter().map(|&a| self.names[a].clone()).collect();
        let mut imp = vec![0; n * n];
        for a in 0..n {
            for b in 0..n {
                imp[perm[a] * n + perm[b]] = perm[self.imp(a, b)];
            }
        }
        Self::from_flat(names, imp, perm[self.one], perm[self.zero])
    }

    /// True when `members` contains 0 and 1 and is closed under →.
    pub fn is_closed(&self, members: &[Elem]) -> bool {
        let mut inside = vec![false; self.size()];
        for &m in members {
            inside[m] = true;
        }
        inside[self.one]
            && inside[self.zero]
            && members
                .iter()
                .all(|&a| members.iter().all(|&b| inside[self.imp(a, b)]))
    }

    /// The subalgebra on `members` (taken in ascending order), which must be
    /// closed under → and contain both constants.
    pub fn restrict(&self, members: &[Elem]) -> Result<Self> {
        let mut sorted: Vec<Elem> = members.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        for &m in &sorted {
            self.check(m)?;
        }
        if !self.is_closed(&sorted) {
            return Err(Error::InvalidAlgebra("subset is not a subalgebra".into()));
        }
        let pos = |e: Elem| sorted.binary_search(&e).expect("closed subset");
        let names = sorted.iter().map(|&a| self.names[a].clone()).collect();
        let imp = sorted
            .iter()
            .flat_map(|&a| sorted.iter().map(move |&b| (a, b)))
            .map(|(a, b)| pos(self.imp(a, b)))
            .collect();
        Self::from_flat(names, imp, pos(self.one), pos(self.zero))
    }
}

/// Identifiers of the derived operations and relations, each with its
/// defining expression in the term language.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum DerivedOp {
    Neg,
    Cup,
    Cap,
    Le,
    LeQ,
    LeL,
    Commutes,
}

impl DerivedOp {
    pub const ALL: [DerivedOp; 7] = [
        DerivedOp::Neg,
        DerivedOp::Cup,
        DerivedOp::Cap,
        DerivedOp::Le,
        DerivedOp::LeQ,
        DerivedOp::LeL,
        DerivedOp::Commutes,
    ];

    pub fn defining_expression(self) -> &'static str {
        match self {
            DerivedOp::Neg => "x -> 0",
            DerivedOp::Cup => "(x -> y) -> y",
            DerivedOp::Cap => "((x' -> y') -> y')'",
            DerivedOp::Le => "x -> y = 1",
            DerivedOp::LeQ => "x = ((x' -> y') -> y')'",
            DerivedOp::LeL => "x = (x -> y')'",
            DerivedOp::Commutes => "x = (x -> y') -> (x -> y)'",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum RelationKind {
    Le,
    LeQ,
    LeL,
    Commutes,
}

impl RelationKind {
    pub const ALL: [RelationKind; 4] = [
        RelationKind::Le,
        RelationKind::LeQ,
        RelationKind::LeL,
        RelationKind::Commutes,
    ];

    /// Infix symbol in the term language.
    pub fn symbol(self) -> &'static str {
        match self {
            RelationKind::Le => "<=",
            RelationKind::LeQ => "<=q",
            RelationKind::LeL => "<=l",
            RelationKind::Commutes => "C",
        }
    }
}

impl fmt::Display for RelationKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            RelationKind::Le => "LE",
            RelationKind::LeQ => "LE_Q",
            RelationKind::LeL => "LE_L",
            RelationKind::Commutes => "COMMUTES",
        })
    }
}

/// A binary relation on the carrier, materialized as an `n×n` bit table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RelationMatrix {
    kind: RelationKind,
    size: usize,
    bits: Vec<bool>,
}

impl RelationMatrix {
    pub fn kind(&self) -> RelationKind {
        self.kind
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn get(&self, a: Elem, b: Elem) -> bool {
        self.bits[a * self.size + b]
    }

    fn pairs(&self) -> impl Iterator<Item = (Elem, Elem)> + '_ {
        (0..self.size).flat_map(move |a| (0..self.size).map(move |b| (a, b)))
    }

    pub fn is_reflexive(&self) -> bool {
        (0..self.size).all(|a| self.get(a, a))
    }

    /// First pair `(a, b)` with `a R b` but not `b R a`.
    pub fn asymmetric_pair(&self) -> Option<(Elem, Elem)> {
        self.pairs()
            .find(|&(a, b)| self.get(a, b) && !self.get(b, a))
    }

    pub fn is_symmetric(&self) -> bool {
        self.asymmetric_pair().is_none()
    }

    pub fn is_antisymmetric(&self) -> bool {
        self.pairs()
            .all(|(a, b)| a == b || !(self.get(a, b) && self.get(b, a)))
    }

    /// First triple with `a R b`, `b R c` but not `a R c`.
    pub fn intransitive_triple(&self) -> Option<(Elem, Elem, Elem)> {
        let n = self.size;
        for a in 0..n {
            for b in 0..n {
                if !self.get(a, b) {
                    continue;
                }
                for c in 0..n {
                    if self.get(b, c) && !self.get(a, c) {
                        return Some((a, b, c));
                    }
                }
            }
        }
        None
    }

    pub fn is_transitive(&self) -> bool {
        self.intransitive_triple().is_none()
    }

    pub fn is_partial_order(&self) -> bool {
        self.is_reflexive() && self.is_antisymmetric() && self.is_transitive()
    }

    /// Covering pairs `(a, b)`: `a R b`, `a ≠ b`, and no `c` distinct from both
    /// with `a R c R b`.
    pub fn covering_pairs(&self) -> Vec<(Elem, Elem)> {
        let n = self.size;
        self.pairs()
            .filter(|&(a, b)| a != b && self.get(a, b))
            .filter(|&(a, b)| !(0..n).any(|c| c != a && c != b && self.get(a, c) && self.get(c, b)))
            .collect()
    }
}
