//! Z/6 modulo {0,3}, and a quotient that does not exist.

use std::sync::Arc;

use hyperideal::constructions::quotient_ring;
use hyperideal::harness::fixture;
use hyperideal::ideals::Mode;

fn main() -> hyperideal::Result<()> {
    let z6 = Arc::new(fixture("z6")?);
    let q = quotient_ring(&z6, &z6.parse_subset("0,3")?, Mode::Strict)?;
    for c in &q.cosets {
        println!("coset {}", z6.format_subset(c));
    }
    println!("{} has order {}", q.quotient.name(), q.quotient.order());

    let ex = Arc::new(fixture("paper-example")?);
    match quotient_ring(&ex, &ex.parse_subset("0,2")?, Mode::Lenient) {
        Ok(_) => println!("unexpected quotient"),
        Err(e) => println!("paper-example/{{0,2}}: {e}"),
    }
    Ok(())
}
