//! Conversion between ortholattices `(∧, ∨, ′, 0, 1)` and implication
//! algebras.
//!
//! The two directions are
//!
//! * lattice → algebra: `a → b := (a ∧ b′)′`
//! * algebra → lattice: `a ∧ b := (a → b*)*`, `a ∨ b := a* → b`, `a′ := a*`
//!
//! and they are mutually inverse on ortholattices and implicative involutive
//! BE algebras.

use crate::algebra::{Elem, FiniteAlgebra};
use crate::axioms::{in_class, AlgebraClass};
use crate::error::{Error, Result};

/// A finite ortholattice. Construction validates every ortholattice law,
/// so a value of this type always satisfies them.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrthoLattice {
    names: Vec<String>,
    meet: Vec<Elem>,
    join: Vec<Elem>,
    ortho: Vec<Elem>,
    one: Elem,
    zero: Elem,
}

impl OrthoLattice {
    /// Validates and builds an ortholattice. When `join` is `None` it is
    /// derived from `meet` and `ortho` by De Morgan.
    pub fn new(
        names: Vec<String>,
        meet: Vec<Vec<Elem>>,
        join: Option<Vec<Vec<Elem>>>,
        ortho: Vec<Elem>,
        one: Elem,
        zero: Elem,
    ) -> Result<Self> {
        let n = names.len();
        let square = |t: &Vec<Vec<Elem>>| t.len() == n && t.iter().all(|r| r.len() == n);
        if n == 0 || !square(&meet) || join.as_ref().is_some_and(|j| !square(j)) || ortho.len() != n
        {
            return Err(Error::InvalidAlgebra(
                "ortholattice tables have wrong shape".into(),
            ));
        }
        for (i, name) in names.iter().enumerate() {
            if name.is_empty() || name.chars().any(char::is_whitespace) || names[..i].contains(name)
            {
                return Err(Error::InvalidAlgebra(format!(
                    "invalid or duplicate name {name:?}"
                )));
            }
        }
        let meet: Vec<Elem> = meet.into_iter().flatten().collect();
        let tables_in_range = meet
            .iter()
            .chain(ortho.iter())
            .chain(join.iter().flatten().flatten())
            .chain([&one, &zero])
            .all(|&i| i < n);
        if !tables_in_range {
            return Err(Error::InvalidAlgebra(
                "ortholattice entry out of range".into(),
            ));
        }
        let join = match join {
            Some(j) => j.into_iter().flatten().collect(),
            None => (0..n * n)
                .map(|i| ortho[meet[ortho[i / n] * n + ortho[i % n]]])
                .collect(),
        };
        let lattice = Self {
            names,
            meet,
            join,
            ortho,
            one,
            zero,
        };
        lattice.validate()?;
        Ok(lattice)
    }

    pub fn size(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn one(&self) -> Elem {
        self.one
    }

    pub fn zero(&self) -> Elem {
        self.zero
    }

    pub fn meet(&self, a: Elem, b: Elem) -> Elem {
        self.meet[a * self.size() + b]
    }

    pub fn join(&self, a: Elem, b: Elem) -> Elem {
        self.join[a * self.size() + b]
    }

    pub fn ortho(&self, a: Elem) -> Elem {
        self.ortho[a]
    }

    /// Lattice order: `a ≤ b` iff `a ∧ b = a`.
    pub fn le(&self, a: Elem, b: Elem) -> bool {
        self.meet(a, b) == a
    }

    fn violation(&self, law: &'static str, elems: &[Elem]) -> Error {
        let witness = ["x", "y", "z"]
            .iter()
            .zip(elems)
            .map(|(v, &e)| format!("{v}={}", self.names[e]))
            .collect::<Vec<_>>()
            .join(" ");
        Error::LatticeLaw { law, witness }
    }

    fn validate(&self) -> Result<()> {
        let n = self.size();
        if n >= 2 && self.one == self.zero {
            return Err(Error::InvalidAlgebra("one and zero must differ".into()));
        }
        type Unary<'a> = (&'static str, Box<dyn Fn(Elem) -> bool + 'a>);
        type Binary<'a> = (&'static str, Box<dyn Fn(Elem, Elem) -> bool + 'a>);
        type Ternary<'a> = (&'static str, Box<dyn Fn(Elem, Elem, Elem) -> bool + 'a>);
        let unary: Vec<Unary> = vec![
            (
                "ortho involution",
                Box::new(|a| self.ortho(self.ortho(a)) == a),
            ),
            (
                "x ∧ x′ = 0",
                Box::new(|a| self.meet(a, self.ortho(a)) == self.zero),
            ),
            (
                "x ∨ x′ = 1",
                Box::new(|a| self.join(a, self.ortho(a)) == self.one),
            ),
            ("x ∧ 1 = x", Box::new(|a| self.meet(a, self.one) == a)),
            ("x ∨ 0 = x", Box::new(|a| self.join(a, self.zero) == a)),
        ];
        let binary: Vec<Binary> = vec![
            (
                "meet commutative",
                Box::new(|a, b| self.meet(a, b) == self.meet(b, a)),
            ),
            (
                "join commutative",
                Box::new(|a, b| self.join(a, b) == self.join(b, a)),
            ),
            (
                "meet absorption",
                Box::new(|a, b| self.meet(a, self.join(a, b)) == a),
            ),
            (
                "join absorption",
                Box::new(|a, b| self.join(a, self.meet(a, b)) == a),
            ),
            (
                "ortho order-reversing",
                Box::new(|a, b| !self.le(a, b) || self.le(self.ortho(b), self.ortho(a))),
            ),
        ];
        let ternary: Vec<Ternary> = vec![
            (
                "meet associative",
                Box::new(|a, b, c| self.meet(self.meet(a, b), c) == self.meet(a, self.meet(b, c))),
            ),
            (
                "join associative",
                Box::new(|a, b, c| self.join(self.join(a, b), c) == self.join(a, self.join(b, c))),
            ),
        ];
        for (law, f) in &unary {
            if let Some(a) = (0..n).find(|&a| !f(a)) {
                return Err(self.violation(law, &[a]));
            }
        }
        for (law, f) in &binary {
            for a in 0..n {
                if let Some(b) = (0..n).find(|&b| !f(a, b)) {
                    return Err(self.violation(law, &[a, b]));
                }
            }
        }
        for (law, f) in &ternary {
            for a in 0..n {
                for b in 0..n {
                    if let Some(c) = (0..n).find(|&c| !f(a, b, c)) {
                        return Err(self.violation(law, &[a, b, c]));
                    }
                }
            }
        }
        Ok(())
    }
}

/// Outcome of one law check: `None` when it holds, otherwise the first
/// failing assignment.
pub type LawVerdict = Option<Vec<Elem>>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OmReport {
    /// `(x ∧ y) ∨ ((x ∧ y)′ ∧ x) = x`
    pub om: LawVerdict,
    /// `x ≤ y ⟹ x ∨ (x′ ∧ y) = y`
    pub om_prime: LawVerdict,
}

impl OmReport {
    pub fn passes(&self) -> bool {
        self.om.is_none() && self.om_prime.is_none()
    }

    pub fn consistent(&self) -> bool {
        self.om.is_none() == self.om_prime.is_none()
    }
}

/// Evaluates both forms of the orthomodular law exhaustively.
pub fn check_om_law(l: &OrthoLattice) -> OmReport {
    let n = l.size();
    let pairs = || (0..n).flat_map(|a| (0..n).map(move |b| (a, b)));
    let om = pairs()
        .find(|&(x, y)| {
            let m = l.meet(x, y);
            l.join(m, l.meet(l.ortho(m), x)) != x
        })
        .map(|(x, y)| vec![x, y]);
    let om_prime = pairs()
        .find(|&(x, y)| l.le(x, y) && l.join(x, l.meet(l.ortho(x), y)) != y)
        .map(|(x, y)| vec![x, y]);
    OmReport { om, om_prime }
}

/// Lattice → algebra: `a → b = (a ∧ b′)′`.
pub fn from_ortholattice(l: &OrthoLattice) -> Result<FiniteAlgebra> {
    let n = l.size();
    let imp = (0..n)
        .flat_map(|a| (0..n).map(move |b| (a, b)))
        .map(|(a, b)| l.ortho(l.meet(a, l.ortho(b))))
        .collect();
    FiniteAlgebra::from_flat(l.names.clone(), imp, l.one, l.zero)
}

/// Algebra → lattice. The input must be an implicative involutive BE
/// algebra.
pub fn to_ortholattice(a: &FiniteAlgebra) -> Result<OrthoLattice> {
    if !in_class(a, AlgebraClass::ImplicativeInvolutiveBe) {
        return Err(Error::WrongClass(
            AlgebraClass::ImplicativeInvolutiveBe.label(),
        ));
    }
    let n = a.size();
    let table = |f: &dyn Fn(Elem, Elem) -> Elem| -> Vec<Vec<Elem>> {
        (0..n).map(|x| (0..n).map(|y| f(x, y)).collect()).collect()
    };
    let meet = table(&|x, y| a.neg(a.imp(x, a.neg(y))));
    let join = table(&|x, y| a.imp(a.neg(x), y));
    let ortho = (0..n).map(|x| a.neg(x)).collect();
    OrthoLattice::new(
        a.names().to_vec(),
        meet,
        Some(join),
        ortho,
        a.one(),
        a.zero(),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn benzene_maps_to_o6_table() {
        let alg = from_ortholattice(&fixtures::benzene_lattice()).unwrap();
        assert_eq!(alg, fixtures::o6());
    }

    #[test]
    fn mo2_lattice_maps_to_an_ioml() {
        let alg = from_ortholattice(&fixtures::mo2_lattice()).unwrap();
        assert_eq!(alg, fixtures::mo2());
        assert!(in_class(&alg, AlgebraClass::Ioml));
    }

    #[test]
    fn b2_lattice_maps_to_b2() {
        assert_eq!(
            from_ortholattice(&fixtures::boolean_lattice(1)).unwrap(),
            fixtures::b2()
        );
    }

    #[test]
    fn om_law_verdicts() {
        assert!(check_om_law(&fixtures::mo2_lattice()).passes());
        assert!(check_om_law(&fixtures::boolean_lattice(3)).passes());
        let benzene = check_om_law(&fixtures::benzene_lattice());
        assert!(!benzene.passes());
        assert!(benzene.consistent());
    }

    #[test]
    fn to_ortholattice_results() {
        let mo2 = to_ortholattice(&fixtures::mo2()).unwrap();
        assert!(check_om_law(&mo2).passes());
        let o6 = to_ortholattice(&fixtures::o6()).unwrap();
        let report = check_om_law(&o6);
        assert!(report.om.is_some() && report.om_prime.is_some());
        assert!(matches!(
            to_ortholattice(&fixtures::chain4()),
            Err(Error::WrongClass(_))
        ));
    }

    #[test]
    fn round_trips() {
        for alg in [
            fixtures::b2(),
            fixtures::b4(),
            fixtures::b8(),
            fixtures::mo2(),
            fixtures::o6(),
        ] {
            assert_eq!(
                from_ortholattice(&to_ortholattice(&alg).unwrap()).unwrap(),
                alg
            );
        }
        for lat in [
            fixtures::mo2_lattice(),
            fixtures::benzene_lattice(),
            fixtures::boolean_lattice(2),
        ] {
            assert_eq!(
                to_ortholattice(&from_ortholattice(&lat).unwrap()).unwrap(),
                lat
            );
        }
    }

    #[test]
    fn validation_names_the_law() {
        let names = vec!["0".to_string(), "a".into(), "1".into()];
        // three-element chain: the middle element has no orthocomplement
        let meet = vec![vec![0, 0, 0], vec![0, 1, 1], vec![0, 1, 2]];
        let err = OrthoLattice::new(names, meet, None, vec![2, 1, 0], 2, 0).unwrap_err();
        match err {
            Error::LatticeLaw { law, witness } => {
                assert_eq!(law, "x ∧ x′ = 0");
                assert_eq!(witness, "x=a");
            }
            other => panic!("unexpected {other:?}"),
        }
    }
}
