//! Axiom families and class membership.
//!
//! Every axiom is stored as a term-language statement and checked by the
//! same evaluator as the theorem bank. Global distributivity (`IDIS`) is the
//! exception in form only: it is checked triple by triple through the two
//! distributivity statements under all six permutations.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use crate::algebra::{Elem, FiniteAlgebra};
use crate::term::{parse_statement, Assignment, Compiled, Statement, Verdict};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum AxiomId {
    Be1,
    Be2,
    Be3,
    Be4,
    Bounded,
    Involutive,
    Impl,
    Ig,
    IabsI,
    Pimpl,
    Iom,
    IomP,
    IomPp,
    Qw,
    Qw1,
    Qw2,
    Idiv,
    Idis,
}

pub const IDIS1: &str = "((x' -> y) -> z')' = (x -> z') -> (y -> z')'";
pub const IDIS2: &str = "((x -> y') -> z)' = (z' -> x) -> (z' -> y)'";

impl AxiomId {
    pub const ALL: [AxiomId; 18] = [
        AxiomId::Be1,
        AxiomId::Be2,
        AxiomId::Be3,
        AxiomId::Be4,
        AxiomId::Bounded,
        AxiomId::Involutive,
        AxiomId::Impl,
        AxiomId::Ig,
        AxiomId::IabsI,
        AxiomId::Pimpl,
        AxiomId::Iom,
        AxiomId::IomP,
        AxiomId::IomPp,
        AxiomId::Qw,
        AxiomId::Qw1,
        AxiomId::Qw2,
        AxiomId::Idiv,
        AxiomId::Idis,
    ];

    pub fn name(self) -> &'static str {
        match self {
            AxiomId::Be1 => "BE1",
            AxiomId::Be2 => "BE2",
            AxiomId::Be3 => "BE3",
            AxiomId::Be4 => "BE4",
            AxiomId::Bounded => "BOUNDED",
            AxiomId::Involutive => "INVOLUTIVE",
            AxiomId::Impl => "IMPL",
            AxiomId::Ig => "IG",
            AxiomId::IabsI => "IABS_I",
            AxiomId::Pimpl => "PIMPL",
            AxiomId::Iom => "IOM",
            AxiomId::IomP => "IOM_P",
            AxiomId::IomPp => "IOM_PP",
            AxiomId::Qw => "QW",
            AxiomId::Qw1 => "QW1",
            AxiomId::Qw2 => "QW2",
            AxiomId::Idiv => "IDIV",
            AxiomId::Idis => "IDIS",
        }
    }

    /// The defining statements. Every id has exactly one, except `IDIS`,
    /// which is the conjunction of the two distributivity laws.
    pub fn statement_texts(self) -> &'static [&'static str] {
        match self {
            AxiomId::Be1 => &["x -> x = 1"],
            AxiomId::Be2 => &["x -> 1 = 1"],
            AxiomId::Be3 => &["1 -> x = x"],
            AxiomId::Be4 => &["x -> (y -> z) = y -> (x -> z)"],
            AxiomId::Bounded => &["0 -> x = 1"],
            AxiomId::Involutive => &["x'' = x"],
            AxiomId::Impl => &["(x -> y) -> x = x"],
            AxiomId::Ig => &["x' -> x = x"],
            AxiomId::IabsI => &["(x -> (x -> y)) -> x = x"],
            AxiomId::Pimpl => &["x -> (x -> y) = x -> y"],
            AxiomId::Iom => &["x & (y -> x) = x"],
            AxiomId::IomP => &["x & (x' -> y) = x"],
            AxiomId::IomPp => &["x | (x -> y)' = x"],
            AxiomId::Qw => &["x -> ((x & y) & (z & x)) = (x -> y) & (x -> z)"],
            AxiomId::Qw1 => &["x -> (x & y) = x -> y"],
            AxiomId::Qw2 => &["x -> (y & (z & x)) = (x -> y) & (x -> z)"],
            AxiomId::Idiv => &["x -> (x -> y)' = x -> y'"],
            AxiomId::Idis => &[IDIS1, IDIS2],
        }
    }

    pub fn statements(self) -> Vec<Statement> {
        self.statement_texts()
            .iter()
            .map(|s| parse_statement(s).expect("built-in axiom parses"))
            .collect()
    }
}

impl fmt::Display for AxiomId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for AxiomId {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let key = s.trim().to_ascii_uppercase().replace(['-', '\''], "_");
        AxiomId::ALL
            .into_iter()
            .find(|id| id.name() == key)
            .ok_or_else(|| format!("unknown axiom `{s}`"))
    }
}

fn compiled(id: AxiomId) -> &'static [Compiled] {
    static TABLE: OnceLock<BTreeMap<AxiomId, Vec<Compiled>>> = OnceLock::new();
    TABLE.get_or_init(|| {
        AxiomId::ALL
            .into_iter()
            .map(|id| {
                let c = id
                    .statements()
                    .iter()
                    .map(|s| Compiled::new(s).expect("compiles"))
                    .collect();
                (id, c)
            })
            .collect()
    })[&id]
        .as_slice()
}

/// Whether global distributivity is checked directly or through its
/// equivalence with divisibility on implicative-orthomodular lattices.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum CheckMode {
    #[default]
    Full,
    Fast,
}

pub fn check_axiom(a: &FiniteAlgebra, id: AxiomId) -> Verdict {
    check_axiom_with(a, id, CheckMode::Full)
}

pub fn check_axiom_with(a: &FiniteAlgebra, id: AxiomId, mode: CheckMode) -> Verdict {
    match id {
        AxiomId::Idis if mode == CheckMode::Fast && in_class(a, AlgebraClass::Ioml) => {
            let v = check_axiom(a, AxiomId::Idiv);
            Verdict {
                holds: v.holds,
                witness: v.witness.map(|w| {
                    let mut w = w;
                    w.push(("z".into(), a.zero()));
                    w
                }),
            }
        }
        AxiomId::Idis => {
            let witness = triples(a)
                .find(|&(x, y, z)| !distributive_triple(a, x, y, z))
                .map(|(x, y, z)| {
                    let w: Assignment = vec![("x".into(), x), ("y".into(), y), ("z".into(), z)];
                    w
                });
            Verdict {
                holds: witness.is_none(),
                witness,
            }
        }
        _ => {
            let stmt = &compiled(id)[0];
            stmt.check(a)
        }
    }
}

fn triples(a: &FiniteAlgebra) -> impl Iterator<Item = (Elem, Elem, Elem)> + '_ {
    a.elements().flat_map(move |x| {
        a.elements()
            .flat_map(move |y| a.elements().map(move |z| (x, y, z)))
    })
}

/// `(x, y) Idiv`: `x → (x → y)* = x → y*`.
pub fn idiv_pair(a: &FiniteAlgebra, x: Elem, y: Elem) -> bool {
    compiled(AxiomId::Idiv)[0].holds_at(a, &[x, y])
}

pub fn idis1_triple(a: &FiniteAlgebra, x: Elem, y: Elem, z: Elem) -> bool {
    compiled(AxiomId::Idis)[0].holds_at(a, &[x, y, z])
}

pub fn idis2_triple(a: &FiniteAlgebra, x: Elem, y: Elem, z: Elem) -> bool {
    compiled(AxiomId::Idis)[1].holds_at(a, &[x, y, z])
}

/// Both distributivity laws hold for all six orderings of the triple.
pub fn distributive_triple(a: &FiniteAlgebra, x: Elem, y: Elem, z: Elem) -> bool {
    [
        (x, y, z),
        (x, z, y),
        (y, x, z),
        (y, z, x),
        (z, x, y),
        (z, y, x),
    ]
    .into_iter()
    .all(|(p, q, r)| idis1_triple(a, p, q, r) && idis2_triple(a, p, q, r))
}

/// The classes of algebras the crate distinguishes, from weakest to
/// strongest along each chain.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum AlgebraClass {
    Be,
    BoundedBe,
    InvolutiveBe,
    ImplicativeInvolutiveBe,
    Ioml,
    ImplicativeBoolean,
}

impl AlgebraClass {
    pub const ALL: [AlgebraClass; 6] = [
        AlgebraClass::Be,
        AlgebraClass::BoundedBe,
        AlgebraClass::InvolutiveBe,
        AlgebraClass::ImplicativeInvolutiveBe,
        AlgebraClass::Ioml,
        AlgebraClass::ImplicativeBoolean,
    ];

    pub fn label(self) -> &'static str {
        match self {
            AlgebraClass::Be => "BE",
            AlgebraClass::BoundedBe => "BOUNDED_BE",
            AlgebraClass::InvolutiveBe => "INVOLUTIVE_BE",
            AlgebraClass::ImplicativeInvolutiveBe => "IMPLICATIVE_INVOLUTIVE_BE",
            AlgebraClass::Ioml => "IOML",
            AlgebraClass::ImplicativeBoolean => "IMPLICATIVE_BOOLEAN",
        }
    }

    /// Short name used on the command line and in emitted file names.
    pub fn short_name(self) -> &'static str {
        match self {
            AlgebraClass::Be => "be",
            AlgebraClass::BoundedBe => "bbe",
            AlgebraClass::InvolutiveBe => "invbe",
            AlgebraClass::ImplicativeInvolutiveBe => "implinvbe",
            AlgebraClass::Ioml => "ioml",
            AlgebraClass::ImplicativeBoolean => "iboolean",
        }
    }

    /// Axioms whose conjunction defines the class.
    pub fn axioms(self) -> &'static [AxiomId] {
        use AxiomId::*;
        match self {
            AlgebraClass::Be => &[Be1, Be2, Be3, Be4],
            AlgebraClass::BoundedBe => &[Be1, Be2, Be3, Be4, Bounded],
            AlgebraClass::InvolutiveBe => &[Be1, Be2, Be3, Be4, Bounded, Involutive],
            AlgebraClass::ImplicativeInvolutiveBe => {
                &[Be1, Be2, Be3, Be4, Bounded, Involutive, Impl]
            }
            AlgebraClass::Ioml => &[Be1, Be2, Be3, Be4, Bounded, Involutive, Impl, Iom],
            AlgebraClass::ImplicativeBoolean => {
                &[Be1, Be2, Be3, Be4, Bounded, Involutive, Impl, Idiv]
            }
        }
    }

    pub fn is_involutive(self) -> bool {
        !matches!(self, AlgebraClass::Be | AlgebraClass::BoundedBe)
    }

    pub fn is_implicative(self) -> bool {
        matches!(
            self,
            AlgebraClass::ImplicativeInvolutiveBe
                | AlgebraClass::Ioml
                | AlgebraClass::ImplicativeBoolean
        )
    }
}

impl fmt::Display for AlgebraClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

impl FromStr for AlgebraClass {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let key = s.trim().to_ascii_lowercase();
        AlgebraClass::ALL
            .into_iter()
            .find(|c| c.short_name() == key || c.label().eq_ignore_ascii_case(&key))
            .ok_or_else(|| {
                format!(
                    "unknown class `{s}` (expected be, bbe, invbe, implinvbe, ioml or iboolean)"
                )
            })
    }
}

/// Membership test evaluating only the axioms the class needs.
pub fn in_class(a: &FiniteAlgebra, class: AlgebraClass) -> bool {
    class.axioms().iter().all(|&id| check_axiom(a, id).holds)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassificationReport {
    pub results: BTreeMap<AxiomId, Verdict>,
    pub degenerate: bool,
}

impl ClassificationReport {
    pub fn passes(&self, id: AxiomId) -> bool {
        self.results[&id].holds
    }

    pub fn is(&self, class: AlgebraClass) -> bool {
        class.axioms().iter().all(|&id| self.passes(id))
    }

    pub fn labels(&self) -> Vec<AlgebraClass> {
        AlgebraClass::ALL
            .into_iter()
            .filter(|&c| self.is(c))
            .collect()
    }

    /// The most specific class label that applies, if any.
    pub fn strongest(&self) -> Option<AlgebraClass> {
        if self.is(AlgebraClass::ImplicativeBoolean) {
            return Some(AlgebraClass::ImplicativeBoolean);
        }
        self.labels()
            .into_iter()
            .rfind(|&c| c != AlgebraClass::ImplicativeBoolean)
    }

    /// Renders one `<id> PASS|FAIL [witness]` line per axiom.
    pub fn lines(&self, a: &FiniteAlgebra) -> Vec<String> {
        self.results
            .iter()
            .map(|(id, v)| {
                if v.holds {
                    format!("{id} PASS")
                } else {
                    format!("{id} FAIL {}", v.describe(a))
                        .trim_end()
                        .to_string()
                }
            })
            .collect()
    }
}

pub fn classify(a: &FiniteAlgebra) -> ClassificationReport {
    classify_with(a, CheckMode::Full)
}

pub fn classify_with(a: &FiniteAlgebra, mode: CheckMode) -> ClassificationReport {
    let results = AxiomId::ALL
        .into_iter()
        .map(|id| (id, check_axiom_with(a, id, mode)))
        .collect();
    ClassificationReport {
        results,
        degenerate: a.is_degenerate(),
    }
}
