//! Loads a ring document and prints the per-axiom report.
//!
//! `cargo run --example verify_document -- examples/data/paper-example.json`

use hyperideal::{check_axioms, parse_spec, Distributivity};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let path = std::env::args()
        .nth(1)
        .unwrap_or_else(|| concat!(env!("CARGO_MANIFEST_DIR"), "/examples/data/paper-example.json").into());
    let spec = parse_spec(&std::fs::read_to_string(&path)?)?;
    for law in [Distributivity::Equal, Distributivity::Includes] {
        let report = check_axioms(&spec, law)?;
        println!("law {law}: {}", if report.all_pass() { "accepted" } else { "rejected" });
        print!("{}", report.render(&spec));
    }
    Ok(())
}
