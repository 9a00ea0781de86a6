//! Prints the theorem bank as a statement file.
//!
//! `cargo run --example bank_listing > crates/core/data/bank.stmt`

fn main() {
    print!("{}", iomlab::bank::statement_listing());
}
