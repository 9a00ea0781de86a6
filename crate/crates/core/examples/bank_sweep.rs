//! Runs the theorem bank over every model of a class up to a size bound.
//!
//! `cargo run --release --example bank_sweep -- ioml 8`
//! With a third argument `own`, only entries whose required class is
//! exactly the enumerated class are run.

use std::time::Instant;

use iomlab::bank::run_entries_enumerated;
use iomlab::AlgebraClass;

fn main() {
    let mut args = std::env::args().skip(1);
    let class: AlgebraClass = args
        .next()
        .as_deref()
        .unwrap_or("ioml")
        .parse()
        .expect("class name");
    let max: usize = args.next().map_or(6, |s| s.parse().expect("size"));
    let own = args.next().as_deref() == Some("own");
    let start = Instant::now();
    let report =
        run_entries_enumerated(class, max, |e| !own || e.class == class).expect("enumeration");
    print!("{}", report.render());
    eprintln!("{:?}", start.elapsed());
}
