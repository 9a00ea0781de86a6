mod common;

use std::sync::OnceLock;

use common::{brute_failure, Raw};
use iomlab::axioms::classify;
use iomlab::enumerate::{enumerate_models, EnumerationTask};
use iomlab::structure::{canonical_form, center, complements, is_isomorphic};
use iomlab::term::{holds, parse_statement, Atom, Equation, QuasiIdentity, Statement, Term};
use iomlab::{fixtures, AlgebraClass, FiniteAlgebra, RelationKind};
use proptest::prelude::*;
use proptest::sample::select;

/// Fixtures plus every bounded BE algebra up to size 4 and every involutive
/// one of size 5 and 6.
fn pool() -> &'static [FiniteAlgebra] {
    static POOL: OnceLock<Vec<FiniteAlgebra>> = OnceLock::new();
    POOL.get_or_init(|| {
        let mut v: Vec<FiniteAlgebra> = fixtures::all().into_iter().map(|(_, a)| a).collect();
        for (n, class) in [
            (2, AlgebraClass::BoundedBe),
            (3, AlgebraClass::BoundedBe),
            (4, AlgebraClass::BoundedBe),
            (5, AlgebraClass::InvolutiveBe),
            (6, AlgebraClass::InvolutiveBe),
        ] {
            v.extend(enumerate_models(&EnumerationTask::new(n, class).modulo_iso(true)).unwrap());
        }
        v
    })
}

fn arb_model() -> impl Strategy<Value = FiniteAlgebra> {
    (0..pool().len()).prop_map(|i| pool()[i].clone())
}

fn arb_relabelled() -> impl Strategy<Value = (FiniteAlgebra, Vec<usize>)> {
    arb_model().prop_flat_map(|a| {
        let perm = Just((0..a.size()).collect::<Vec<_>>()).prop_shuffle();
        (Just(a), perm)
    })
}

fn arb_term() -> impl Strategy<Value = Term> {
    let leaf = prop_oneof![
        4 => select(vec!["x", "y", "z"]).prop_map(Term::var),
        1 => Just(Term::Zero),
        1 => Just(Term::One),
    ];
    leaf.prop_recursive(4, 24, 2, |inner| {
        prop_oneof![
            inner.clone().prop_map(Term::neg),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Term::imp(a, b)),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Term::cap(a, b)),
            (inner.clone(), inner).prop_map(|(a, b)| Term::cup(a, b)),
        ]
    })
}

fn arb_atom() -> impl Strategy<Value = Atom> {
    let kind = select(RelationKind::ALL.to_vec());
    prop_oneof![
        (arb_term(), arb_term()).prop_map(|(a, b)| Atom::Eq(a, b)),
        (kind, arb_term(), arb_term()).prop_map(|(k, a, b)| Atom::Rel(k, a, b)),
    ]
}

fn arb_statement() -> impl Strategy<Value = Statement> {
    prop_oneof![
        (arb_term(), arb_term()).prop_map(|(a, b)| Statement::Equation(Equation::new(a, b))),
        (proptest::collection::vec(arb_atom(), 0..3), arb_atom())
            .prop_map(|(h, c)| Statement::Quasi(QuasiIdentity::new(h, c))),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn classification_ignores_labels((a, perm) in arb_relabelled()) {
        let b = a.relabel(&perm).unwrap();
        let (ra, rb) = (classify(&a), classify(&b));
        prop_assert_eq!(ra.labels(), rb.labels());
        for (id, v) in &ra.results {
            prop_assert_eq!(v.holds, rb.results[id].holds, "{}", id);
        }
    }

    #[test]
    fn canonical_form_ignores_labels((a, perm) in arb_relabelled()) {
        let b = a.relabel(&perm).unwrap();
        let (ca, cb) = (canonical_form(&a), canonical_form(&b));
        prop_assert_eq!(ca.table(), cb.table());
        prop_assert_eq!(ca.table().to_vec(), Raw::of(&b).canonical(true));
        let map = is_isomorphic(&a, &b).expect("relabelling is an isomorphism");
        for x in a.elements() {
            for y in a.elements() {
                prop_assert_eq!(map[a.imp(x, y)], b.imp(map[x], map[y]));
            }
        }
    }

    #[test]
    fn structure_follows_relabelling((a, perm) in arb_relabelled()) {
        let b = a.relabel(&perm).unwrap();
        let mut moved: Vec<usize> = center(&a).elems().iter().map(|&e| perm[e]).collect();
        moved.sort();
        prop_assert_eq!(moved, center(&b).elems());
        for x in a.elements() {
            let mut moved: Vec<usize> = complements(&a, x).elems().iter().map(|&e| perm[e]).collect();
            moved.sort();
            prop_assert_eq!(moved, complements(&b, perm[x]).elems());
        }
    }

    #[test]
    fn holds_agrees_with_brute_force(s in arb_statement(), a in arb_model()) {
        let v = holds(&s, &a);
        let brute = brute_failure(&a, &s);
        prop_assert_eq!(v.holds, brute.is_none());
        let got = v.witness.map(|w| w.into_iter().map(|(_, e)| e).collect::<Vec<_>>());
        prop_assert_eq!(got, brute);
    }

    #[test]
    fn printed_statements_reparse(s in arb_statement()) {
        let printed = s.to_string();
        let again = parse_statement(&printed).unwrap();
        prop_assert_eq!(&again, &s);
        prop_assert_eq!(again.vars().to_vec(), common::statement_vars(&s));
    }

    #[test]
    fn derived_operations_match_their_definitions(a in arb_model(), x in 0usize..8, y in 0usize..8) {
        let raw = Raw::of(&a);
        let (x, y) = (x % a.size(), y % a.size());
        prop_assert_eq!(a.cup(x, y), raw.join(x, y));
        prop_assert_eq!(a.cap(x, y), raw.meet(x, y));
        prop_assert_eq!(a.le_q(x, y), raw.le_q(x, y));
        prop_assert_eq!(a.le_l(x, y), raw.le_l(x, y));
        prop_assert_eq!(a.commutes(x, y), raw.commutes(x, y));
    }
}

#[test]
fn labelled_and_unlabelled_enumeration_agree() {
    for n in 2..=4 {
        for class in AlgebraClass::ALL {
            let bounded = class != AlgebraClass::Be;
            let iso: std::collections::BTreeSet<Vec<usize>> =
                enumerate_models(&EnumerationTask::new(n, class).modulo_iso(true))
                    .unwrap()
                    .iter()
                    .map(|a| a.table().to_vec())
                    .collect();
            let labelled: std::collections::BTreeSet<Vec<usize>> =
                enumerate_models(&EnumerationTask::new(n, class))
                    .unwrap()
                    .iter()
                    .map(|a| Raw::of(a).canonical(bounded))
                    .collect();
            assert_eq!(iso, labelled, "n={n} {class}");
        }
    }
}
