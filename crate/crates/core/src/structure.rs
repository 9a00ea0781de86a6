//! Center, commutors, complements, subalgebras and isomorphism.
//!
//! The center and commutor are defined on any involutive algebra, so they
//! are computed without a class check; results are only meaningful in the
//! orthomodular case and callers that care should test membership first.

use std::fmt;

use crate::algebra::{Elem, FiniteAlgebra};
use crate::error::{Error, Result};
use crate::fixtures;

/// A set of elements of one algebra, kept as a membership mask.
#[derive(Clone, PartialEq, Eq)]
pub struct ElementSubset<'a> {
    alg: &'a FiniteAlgebra,
    mask: Vec<bool>,
}

impl<'a> ElementSubset<'a> {
    pub fn empty(alg: &'a FiniteAlgebra) -> Self {
        Self {
            alg,
            mask: vec![false; alg.size()],
        }
    }

    pub fn full(alg: &'a FiniteAlgebra) -> Self {
        Self {
            alg,
            mask: vec![true; alg.size()],
        }
    }

    pub fn from_elems(
        alg: &'a FiniteAlgebra,
        elems: impl IntoIterator<Item = Elem>,
    ) -> Result<Self> {
        let mut s = Self::empty(alg);
        for e in elems {
            if e >= alg.size() {
                return Err(Error::IndexOutOfRange {
                    index: e,
                    size: alg.size(),
                });
            }
            s.mask[e] = true;
        }
        Ok(s)
    }

    pub fn from_names<S: AsRef<str>>(alg: &'a FiniteAlgebra, names: &[S]) -> Result<Self> {
        let elems = names
            .iter()
            .map(|n| alg.element(n.as_ref()))
            .collect::<Result<Vec<_>>>()?;
        Self::from_elems(alg, elems)
    }

    fn from_predicate(alg: &'a FiniteAlgebra, f: impl Fn(Elem) -> bool) -> Self {
        Self {
            alg,
            mask: alg.elements().map(f).collect(),
        }
    }

    pub fn algebra(&self) -> &'a FiniteAlgebra {
        self.alg
    }

    pub fn contains(&self, e: Elem) -> bool {
        self.mask.get(e).copied().unwrap_or(false)
    }

    pub fn insert(&mut self, e: Elem) {
        self.mask[e] = true;
    }

    /// Members in carrier order.
    pub fn elems(&self) -> Vec<Elem> {
        self.alg.elements().filter(|&e| self.mask[e]).collect()
    }

    pub fn names(&self) -> Vec<&'a str> {
        self.elems().into_iter().map(|e| self.alg.name(e)).collect()
    }

    pub fn len(&self) -> usize {
        self.mask.iter().filter(|&&b| b).count()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn is_subset(&self, other: &ElementSubset<'_>) -> bool {
        self.mask.iter().zip(&other.mask).all(|(&a, &b)| !a || b)
    }

    /// Closed under `→` and containing 0 and 1.
    pub fn is_subalgebra(&self) -> bool {
        self.contains(self.alg.zero())
            && self.contains(self.alg.one())
            && self.alg.is_closed(&self.elems())
    }

    pub fn to_algebra(&self) -> Result<FiniteAlgebra> {
        self.alg.restrict(&self.elems())
    }
}

impl fmt::Debug for ElementSubset<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.names()).finish()
    }
}

impl fmt::Display for ElementSubset<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}}}", self.names().join(", "))
    }
}

/// Elements commuting with every element.
pub fn center(a: &FiniteAlgebra) -> ElementSubset<'_> {
    ElementSubset::from_predicate(a, |x| a.elements().all(|y| a.commutes(x, y)))
}

/// Elements commuting with every member of `y`.
pub fn commutor<'a>(a: &'a FiniteAlgebra, y: &ElementSubset<'_>) -> Result<ElementSubset<'a>> {
    if y.is_empty() {
        return Err(Error::EmptySubset);
    }
    let ys = y.elems();
    Ok(ElementSubset::from_predicate(a, |x| {
        ys.iter().all(|&b| a.commutes(x, b))
    }))
}

/// `K(x)`: the `z` with `x → z* = 1` and `x* → z = 1`.
pub fn complements(a: &FiniteAlgebra, x: Elem) -> ElementSubset<'_> {
    let nx = a.neg(x);
    ElementSubset::from_predicate(a, |z| {
        a.imp(x, a.neg(z)) == a.one() && a.imp(nx, z) == a.one()
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ComplementWitness {
    pub x: Elem,
    pub z: Elem,
    pub value: Elem,
}

/// `x_z = (z → (z → x*)*) → (z* → x)*`.
pub fn x_z(a: &FiniteAlgebra, x: Elem, z: Elem) -> Elem {
    let left = a.imp(z, a.neg(a.imp(z, a.neg(x))));
    a.imp(left, a.neg(a.imp(a.neg(z), x)))
}

/// Computes `x_z` and confirms it is a complement of `x`.
pub fn complement_witness(a: &FiniteAlgebra, x: Elem, z: Elem) -> Result<ComplementWitness> {
    for e in [x, z] {
        if e >= a.size() {
            return Err(Error::IndexOutOfRange {
                index: e,
                size: a.size(),
            });
        }
    }
    let value = x_z(a, x, z);
    if !complements(a, x).contains(value) {
        return Err(Error::Consistency(format!(
            "x_z = {} is not a complement of {} (z = {})",
            a.name(value),
            a.name(x),
            a.name(z)
        )));
    }
    Ok(ComplementWitness { x, z, value })
}

/// Least subalgebra containing `seed`, 0 and 1.
pub fn generate_subalgebra<'a>(
    a: &'a FiniteAlgebra,
    seed: &ElementSubset<'_>,
) -> ElementSubset<'a> {
    let mut s = ElementSubset::from_elems(a, seed.elems()).expect("same carrier");
    s.insert(a.zero());
    s.insert(a.one());
    let mut frontier = s.elems();
    while !frontier.is_empty() {
        let members = s.elems();
        let mut fresh = Vec::new();
        for &p in &frontier {
            for &q in &members {
                for v in [a.imp(p, q), a.imp(q, p)] {
                    if !s.contains(v) {
                        s.insert(v);
                        fresh.push(v);
                    }
                }
            }
        }
        frontier = fresh;
    }
    s
}

/// A subalgebra isomorphic to the benzene ring. `map[i]` is the image of
/// the i-th fixture element.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct O6Embedding {
    pub members: Vec<Elem>,
    pub map: Vec<Elem>,
}

/// Scans six-element subsets containing 0 and 1 for a closed copy of O6.
pub fn find_o6_subalgebra(a: &FiniteAlgebra) -> Option<O6Embedding> {
    let o6 = fixtures::o6();
    let inner: Vec<Elem> = a
        .elements()
        .filter(|&e| e != a.zero() && e != a.one())
        .collect();
    if inner.len() < 4 {
        return None;
    }
    let k = inner.len();
    for i in 0..k {
        for j in i + 1..k {
            for l in j + 1..k {
                for m in l + 1..k {
                    let mut members =
                        vec![a.zero(), a.one(), inner[i], inner[j], inner[l], inner[m]];
                    members.sort_unstable();
                    if !a.is_closed(&members) {
                        continue;
                    }
                    let sub = a.restrict(&members).expect("closed");
                    if let Some(iso) = is_isomorphic(&o6, &sub) {
                        let map = iso.iter().map(|&s| members[s]).collect();
                        return Some(O6Embedding { members, map });
                    }
                }
            }
        }
    }
    None
}

fn invariant(a: &FiniteAlgebra, x: Elem) -> [usize; 6] {
    let one = a.one();
    [
        usize::from(x == a.one()) + 2 * usize::from(x == a.zero()),
        a.elements().filter(|&y| a.imp(x, y) == one).count(),
        a.elements().filter(|&y| a.imp(y, x) == one).count(),
        a.elements().filter(|&y| a.imp(x, y) == x).count(),
        a.elements().filter(|&y| a.commutes(x, y)).count(),
        usize::from(a.neg(x) == x),
    ]
}

/// An isomorphism `a → b` as a vector of images, if one exists.
pub fn is_isomorphic(a: &FiniteAlgebra, b: &FiniteAlgebra) -> Option<Vec<Elem>> {
    let n = a.size();
    if n != b.size() {
        return None;
    }
    let inv_a: Vec<_> = a.elements().map(|x| invariant(a, x)).collect();
    let inv_b: Vec<_> = b.elements().map(|x| invariant(b, x)).collect();
    let mut sa = inv_a.clone();
    let mut sb = inv_b.clone();
    sa.sort_unstable();
    sb.sort_unstable();
    if sa != sb {
        return None;
    }
    let mut map = vec![usize::MAX; n];
    let mut used = vec![false; n];
    let mut order: Vec<Elem> = vec![a.one(), a.zero()];
    order.extend(a.elements().filter(|&x| x != a.one() && x != a.zero()));
    order.dedup();

    // Every product of mapped elements must agree with the partial map. All
    // pairs are rechecked, since a product left unmapped earlier may have
    // just been assigned.
    fn consistent(
        a: &FiniteAlgebra,
        b: &FiniteAlgebra,
        map: &[Elem],
        used: &[bool],
        assigned: &[Elem],
    ) -> bool {
        assigned.iter().all(|&p| {
            assigned.iter().all(|&q| {
                let v = a.imp(p, q);
                let w = b.imp(map[p], map[q]);
                if map[v] == usize::MAX {
                    !used[w]
                } else {
                    map[v] == w
                }
            })
        })
    }

    #[allow(clippy::too_many_arguments)]
    fn search(
        a: &FiniteAlgebra,
        b: &FiniteAlgebra,
        order: &[Elem],
        depth: usize,
        inv_a: &[[usize; 6]],
        inv_b: &[[usize; 6]],
        map: &mut Vec<Elem>,
        used: &mut Vec<bool>,
    ) -> bool {
        if depth == order.len() {
            return true;
        }
        let x = order[depth];
        for y in b.elements() {
            if used[y] || inv_a[x] != inv_b[y] {
                continue;
            }
            if x == a.one() && y != b.one() || x == a.zero() && y != b.zero() {
                continue;
            }
            map[x] = y;
            used[y] = true;
            if consistent(a, b, map, used, &order[..=depth])
                && search(a, b, order, depth + 1, inv_a, inv_b, map, used)
            {
                return true;
            }
            map[x] = usize::MAX;
            used[y] = false;
        }
        false
    }

    if search(a, b, &order, 0, &inv_a, &inv_b, &mut map, &mut used) {
        debug_assert!(a.elements().all(|p| a
            .elements()
            .all(|q| map[a.imp(p, q)] == b.imp(map[p], map[q]))));
        Some(map)
    } else {
        None
    }
}

/// Names used for canonical representatives: `0`, `a1`, ..., `1`.
pub fn generic_names(n: usize) -> Vec<String> {
    match n {
        1 => vec!["0".into()],
        _ => (0..n)
            .map(|i| match i {
                0 => "0".to_string(),
                i if i == n - 1 => "1".to_string(),
                i => format!("a{i}"),
            })
            .collect(),
    }
}

/// The lexicographically least relabelling with 0 first and 1 last.
pub fn canonical_form(a: &FiniteAlgebra) -> FiniteAlgebra {
    let n = a.size();
    if n == 1 {
        return a.clone().with_names(generic_names(1)).expect("one name");
    }
    FiniteAlgebra::from_flat(generic_names(n), canonical_table(a, true), n - 1, 0)
        .expect("relabelling preserves validity")
}

/// Least relabelled table with 1 placed last. With `pin_zero` the constant
/// 0 is placed first; otherwise 0 is treated as an ordinary element, which
/// is the right notion of isomorphism for algebras without a bottom.
pub fn canonical_table(a: &FiniteAlgebra, pin_zero: bool) -> Vec<Elem> {
    let n = a.size();
    // q[i] = old element placed at new position i
    let mut q: Vec<Elem> = Vec::with_capacity(n);
    if pin_zero && n > 1 {
        q.push(a.zero());
    }
    q.extend(
        a.elements()
            .filter(|&e| e != a.one() && (!pin_zero || e != a.zero())),
    );
    q.push(a.one());
    let lo = usize::from(pin_zero && n > 1);
    let mut best: Vec<Elem> = Vec::new();
    let mut p = vec![0; n];
    let mut scratch = vec![0; n * n];
    permute_inner(&mut q, lo, n - 1, &mut |q| {
        for (i, &old) in q.iter().enumerate() {
            p[old] = i;
        }
        let mut smaller = best.is_empty();
        for i in 0..n {
            for j in 0..n {
                let v = p[a.imp(q[i], q[j])];
                if !smaller {
                    let w = best[i * n + j];
                    if v > w {
                        return;
                    }
                    smaller = v < w;
                }
                scratch[i * n + j] = v;
            }
        }
        if smaller {
            best.clone_from(&scratch);
        }
    });
    best
}

/// Visits every ordering of `q[lo..hi]`.
fn permute_inner(q: &mut [Elem], lo: usize, hi: usize, visit: &mut impl FnMut(&[Elem])) {
    if hi <= lo + 1 {
        visit(q);
        return;
    }
    for i in lo..hi {
        q.swap(lo, i);
        permute_inner(q, lo + 1, hi, visit);
        q.swap(lo, i);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::axioms::{check_axiom, AxiomId};

    fn names<'a>(s: &ElementSubset<'a>) -> Vec<&'a str> {
        s.names()
    }

    #[test]
    fn centers() {
        let b4 = fixtures::b4();
        assert_eq!(center(&b4).len(), 4);
        let mo2 = fixtures::mo2();
        assert_eq!(names(&center(&mo2)), ["0", "1"]);
    }

    #[test]
    fn commutor_of_atom() {
        let mo2 = fixtures::mo2();
        let y = ElementSubset::from_names(&mo2, &["a"]).unwrap();
        assert_eq!(names(&commutor(&mo2, &y).unwrap()), ["0", "a", "a*", "1"]);
        assert!(matches!(
            commutor(&mo2, &ElementSubset::empty(&mo2)),
            Err(Error::EmptySubset)
        ));
        let full = ElementSubset::full(&mo2);
        assert_eq!(commutor(&mo2, &full).unwrap(), center(&mo2));
    }

    #[test]
    fn complement_sets() {
        let b4 = fixtures::b4();
        let a = b4.element("a").unwrap();
        assert_eq!(names(&complements(&b4, a)), ["a*"]);
        let mo2 = fixtures::mo2();
        let a = mo2.element("a").unwrap();
        assert_eq!(names(&complements(&mo2, a)), ["a*", "b", "b*"]);
        for z in mo2.elements() {
            let w = complement_witness(&mo2, a, z).unwrap();
            assert!(complements(&mo2, a).contains(w.value));
            assert_eq!(w.value == mo2.neg(a), mo2.commutes(a, z));
        }
        for y in complements(&mo2, a).elems() {
            assert_eq!(x_z(&mo2, a, y), y);
        }
    }

    #[test]
    fn complement_witness_flags_broken_algebra() {
        // involutive but not implicative; x_z escapes K(x) at x = z = a1
        let t = vec![3, 3, 3, 3, 2, 3, 2, 3, 1, 3, 3, 3, 0, 1, 2, 3];
        let alg = FiniteAlgebra::from_flat(generic_names(4), t, 3, 0).unwrap();
        assert!(matches!(
            complement_witness(&alg, 1, 1),
            Err(Error::Consistency(_))
        ));
        assert!(complement_witness(&alg, 1, 0).is_ok());
        let o6 = fixtures::o6();
        assert!(o6
            .elements()
            .all(|x| o6.elements().all(|z| complement_witness(&o6, x, z).is_ok())));
    }

    #[test]
    fn generated_subalgebras() {
        let o6 = fixtures::o6();
        let x = ElementSubset::from_names(&o6, &["x"]).unwrap();
        assert_eq!(names(&generate_subalgebra(&o6, &x)), ["0", "x", "x*", "1"]);
        assert_eq!(
            names(&generate_subalgebra(&o6, &ElementSubset::empty(&o6))),
            ["0", "1"]
        );
        let mo2 = fixtures::mo2();
        let ab = ElementSubset::from_names(&mo2, &["a", "b"]).unwrap();
        assert_eq!(generate_subalgebra(&mo2, &ab).len(), 6);
        assert!(generate_subalgebra(&mo2, &ab).is_subalgebra());
    }

    #[test]
    fn o6_detection() {
        let o6 = fixtures::o6();
        let found = find_o6_subalgebra(&o6).unwrap();
        assert_eq!(found.members, vec![0, 1, 2, 3, 4, 5]);
        assert_eq!(found.map, vec![0, 1, 2, 3, 4, 5]);
        for alg in [fixtures::b8(), fixtures::mo2(), fixtures::b4()] {
            assert!(find_o6_subalgebra(&alg).is_none());
        }
    }

    #[test]
    fn isomorphism() {
        let o6 = fixtures::o6();
        assert_eq!(is_isomorphic(&o6, &o6), Some((0..6).collect()));
        let shuffled = o6.relabel(&[0, 4, 1, 2, 3, 5]).unwrap();
        let iso = is_isomorphic(&o6, &shuffled).unwrap();
        for p in o6.elements() {
            for q in o6.elements() {
                assert_eq!(iso[o6.imp(p, q)], shuffled.imp(iso[p], iso[q]));
            }
        }
        assert!(is_isomorphic(&o6, &fixtures::mo2()).is_none());
        assert!(is_isomorphic(&fixtures::b4(), &fixtures::chain4()).is_none());
    }

    #[test]
    fn canonical_forms() {
        let o6 = fixtures::o6();
        let c = canonical_form(&o6);
        assert_eq!(canonical_form(&c), c);
        let shuffled = o6.relabel(&[0, 3, 1, 4, 2, 5]).unwrap();
        assert_eq!(canonical_form(&shuffled), c);
        assert_ne!(
            canonical_form(&fixtures::b4()),
            canonical_form(&fixtures::chain4())
        );
        assert_ne!(c, canonical_form(&fixtures::mo2()));
        assert!(check_axiom(&c, AxiomId::Impl).holds);
    }

    // brute-force minimum over all (n-2)! relabellings
    fn slow_canonical(a: &FiniteAlgebra) -> Vec<Elem> {
        let n = a.size();
        let inner: Vec<Elem> = a
            .elements()
            .filter(|&e| e != a.zero() && e != a.one())
            .collect();
        let mut best: Option<Vec<Elem>> = None;
        let mut q: Vec<Elem> = std::iter::once(a.zero())
            .chain(inner)
            .chain(std::iter::once(a.one()))
            .collect();
        permute_inner(&mut q, 1, n - 1, &mut |q| {
            let mut p = vec![0; n];
            for (i, &o) in q.iter().enumerate() {
                p[o] = i;
            }
            let t: Vec<Elem> = (0..n * n).map(|k| p[a.imp(q[k / n], q[k % n])]).collect();
            if best.as_ref().is_none_or(|b| t < *b) {
                best = Some(t);
            }
        });
        best.unwrap()
    }

    #[test]
    fn canonical_form_is_the_lexicographic_minimum() {
        for (_, alg) in fixtures::all() {
            assert_eq!(
                canonical_form(&alg).table(),
                slow_canonical(&alg).as_slice()
            );
        }
    }
}
