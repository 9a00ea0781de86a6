use std::path::PathBuf;

use iomlab::format::{parse_algtab, read_algtab, read_ortlat, write_algtab, write_ortlat};
use iomlab::transform::{from_ortholattice, OrthoLattice};
use iomlab::{fixtures, FiniteAlgebra};

fn path(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../../fixtures")
        .join(name)
}

fn lattices() -> Vec<(&'static str, OrthoLattice)> {
    vec![
        ("b2", fixtures::boolean_lattice(1)),
        ("b4", fixtures::boolean_lattice(2)),
        ("b8", fixtures::boolean_lattice(3)),
        ("mo2", fixtures::mo2_lattice()),
        ("o6", fixtures::benzene_lattice()),
    ]
}

#[test]
fn algebra_files_match_builtins() {
    let builtin: Vec<(&str, FiniteAlgebra)> = vec![
        ("b2", fixtures::b2()),
        ("b4", fixtures::b4()),
        ("b8", fixtures::b8()),
        ("mo2", fixtures::mo2()),
        ("o6", fixtures::o6()),
    ];
    for (name, a) in builtin {
        let file = path(&format!("{name}.alg"));
        assert_eq!(read_algtab(&file).unwrap(), a, "{name}");
        assert_eq!(
            std::fs::read_to_string(&file).unwrap(),
            write_algtab(&a),
            "{name}"
        );
    }
}

#[test]
fn lattice_files_match_builtins() {
    for (name, l) in lattices() {
        let file = path(&format!("{name}.ort"));
        assert_eq!(read_ortlat(&file).unwrap(), l, "{name}");
        assert_eq!(
            std::fs::read_to_string(&file).unwrap(),
            write_ortlat(&l),
            "{name}"
        );
        let alg = read_algtab(path(&format!("{name}.alg"))).unwrap();
        assert_eq!(
            from_ortholattice(&l).unwrap().table(),
            alg.table(),
            "{name}"
        );
    }
}

// Typed in by hand, independently of the fixture module.
const O6_BY_HAND: &str = "\
algtab 1
n 6
elems 0 x y x* y* 1
one 1
zero 0
1  1  1  1  1  1
x* 1  1  x* x* 1
y* 1  1  x* y* 1
x  x  y  1  1  1
y  y  y  1  1  1
0  x  y  x* y* 1
";

#[test]
fn o6_file_is_the_benzene_table() {
    let typed = parse_algtab(O6_BY_HAND).unwrap();
    assert_eq!(read_algtab(path("o6.alg")).unwrap(), typed);
    assert_eq!(fixtures::o6(), typed);
}
