//! Prints the theorem-bank report for each built-in fixture.

use iomlab::bank::run_bank;
use iomlab::fixtures;

fn main() {
    for (name, alg) in fixtures::all() {
        println!("== {name}");
        print!("{}", run_bank(&alg).render());
    }
}
