//! Runs the theorem catalog over fixtures and prints the report table.
//!
//! `cargo run --example suite_table -- z6 paper-example`

use std::sync::Arc;

use hyperideal::harness::{fixture, render_table, run_suite, suite_outcome, DEFAULT_SUITE};
use hyperideal::ideals::Mode;

fn main() -> hyperideal::Result<()> {
    let names: Vec<String> = std::env::args().skip(1).collect();
    let names: Vec<&str> = if names.is_empty() {
        DEFAULT_SUITE.to_vec()
    } else {
        names.iter().map(String::as_str).collect()
    };
    let rings = names
        .iter()
        .map(|n| fixture(n).map(Arc::new))
        .collect::<hyperideal::Result<Vec<_>>>()?;
    let reports = run_suite(&rings, Mode::Lenient, None)?;
    print!("{}", render_table(&reports));
    println!("outcome: {}", suite_outcome(&reports).as_str());
    Ok(())
}
