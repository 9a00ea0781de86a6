//! Small named algebras and ortholattices used throughout the crate and its
//! tests.
//!
//! | name       | kind                                      |
//! |------------|-------------------------------------------|
//! | `b2`       | two-element Boolean algebra               |
//! | `b4`, `b8` | Boolean algebras with 2 and 3 atoms       |
//! | `mo2`      | the six-element "Chinese lantern" OML      |
//! | `o6`       | the six-element benzene ring, not an OML  |
//! | `chain4`   | four-element Łukasiewicz chain            |

use crate::algebra::{Elem, FiniteAlgebra};
use crate::transform::{from_ortholattice, OrthoLattice};

fn strings(names: &[&str]) -> Vec<String> {
    names.iter().map(|s| s.to_string()).collect()
}

/// The benzene-ring algebra, transcribed entry by entry.
pub const O6_TABLE: [[&str; 6]; 6] = [
    ["1", "1", "1", "1", "1", "1"],
    ["x*", "1", "1", "x*", "x*", "1"],
    ["y*", "1", "1", "x*", "y*", "1"],
    ["x", "x", "y", "1", "1", "1"],
    ["y", "y", "y", "1", "1", "1"],
    ["0", "x", "y", "x*", "y*", "1"],
];

pub const O6_NAMES: [&str; 6] = ["0", "x", "y", "x*", "y*", "1"];

pub fn o6() -> FiniteAlgebra {
    let idx = |s: &str| O6_NAMES.iter().position(|n| *n == s).unwrap();
    let table = O6_TABLE
        .iter()
        .map(|row| row.iter().map(|s| idx(s)).collect())
        .collect();
    FiniteAlgebra::new(strings(&O6_NAMES), table, 5, 0).expect("valid O6 table")
}

/// Builds an ortholattice from an order relation by computing greatest
/// lower bounds.
fn lattice_from_order(
    names: &[&str],
    leq: impl Fn(Elem, Elem) -> bool,
    ortho: Vec<Elem>,
) -> OrthoLattice {
    let n = names.len();
    let meet = (0..n)
        .map(|a| {
            (0..n)
                .map(|b| {
                    let lower: Vec<Elem> = (0..n).filter(|&c| leq(c, a) && leq(c, b)).collect();
                    *lower
                        .iter()
                        .find(|&&c| lower.iter().all(|&d| leq(d, c)))
                        .expect("order is a lattice")
                })
                .collect()
        })
        .collect();
    let one = (0..n).find(|&a| (0..n).all(|b| leq(b, a))).unwrap();
    let zero = (0..n).find(|&a| (0..n).all(|b| leq(a, b))).unwrap();
    OrthoLattice::new(strings(names), meet, None, ortho, one, zero).expect("valid ortholattice")
}

/// Hexagon `0 < x < y < 1`, `0 < y* < x* < 1`.
pub fn benzene_lattice() -> OrthoLattice {
    // covering chains by index: 0 < 1 < 2 < 5 and 0 < 4 < 3 < 5
    let chains: [&[Elem]; 2] = [&[0, 1, 2, 5], &[0, 4, 3, 5]];
    let leq = |a: Elem, b: Elem| {
        a == b
            || a == 0
            || b == 5
            || chains.iter().any(|c| {
                let pa = c.iter().position(|&e| e == a);
                let pb = c.iter().position(|&e| e == b);
                matches!((pa, pb), (Some(i), Some(j)) if i <= j)
            })
    };
    lattice_from_order(&O6_NAMES, leq, vec![5, 3, 4, 1, 2, 0])
}

/// Two blocks `{0, a, a*, 1}` and `{0, b, b*, 1}` glued at the bounds.
pub fn mo2_lattice() -> OrthoLattice {
    let names = ["0", "a", "a*", "b", "b*", "1"];
    lattice_from_order(
        &names,
        |a, b| a == b || a == 0 || b == 5,
        vec![5, 2, 1, 4, 3, 0],
    )
}

/// The Boolean lattice with `atoms` atoms, for 1 to 3 atoms.
pub fn boolean_lattice(atoms: usize) -> OrthoLattice {
    let layout: &[(u8, &str)] = match atoms {
        1 => &[(0, "0"), (1, "1")],
        2 => &[(0, "0"), (1, "a"), (2, "a*"), (3, "1")],
        3 => &[
            (0, "0"),
            (1, "a"),
            (2, "b"),
            (4, "c"),
            (6, "a*"),
            (5, "b*"),
            (3, "c*"),
            (7, "1"),
        ],
        _ => panic!("boolean_lattice supports 1 to 3 atoms"),
    };
    let full = (1u8 << atoms) - 1;
    let pos = |m: u8| layout.iter().position(|&(k, _)| k == m).unwrap();
    let names: Vec<&str> = layout.iter().map(|&(_, s)| s).collect();
    let ortho = layout.iter().map(|&(m, _)| pos(full & !m)).collect();
    lattice_from_order(&names, |a, b| layout[a].0 & !layout[b].0 == 0, ortho)
}

pub fn b2() -> FiniteAlgebra {
    from_ortholattice(&boolean_lattice(1)).unwrap()
}

pub fn b4() -> FiniteAlgebra {
    from_ortholattice(&boolean_lattice(2)).unwrap()
}

pub fn b8() -> FiniteAlgebra {
    from_ortholattice(&boolean_lattice(3)).unwrap()
}

pub fn mo2() -> FiniteAlgebra {
    from_ortholattice(&mo2_lattice()).unwrap()
}

/// Łukasiewicz chain `0 < t1 < t2 < 1` with `a → b = min(1, 1 − a + b)`.
/// Involutive but not implicative.
pub fn chain4() -> FiniteAlgebra {
    let names = strings(&["0", "t1", "t2", "1"]);
    let imp = (0..4usize)
        .flat_map(|a| (0..4usize).map(move |b| (3 + b).saturating_sub(a).min(3)))
        .collect();
    FiniteAlgebra::from_flat(names, imp, 3, 0).unwrap()
}

/// All named algebra fixtures.
pub fn all() -> Vec<(&'static str, FiniteAlgebra)> {
    vec![
        ("b2", b2()),
        ("b4", b4()),
        ("b8", b8()),
        ("mo2", mo2()),
        ("o6", o6()),
        ("chain4", chain4()),
    ]
}
