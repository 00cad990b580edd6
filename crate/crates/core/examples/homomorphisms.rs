//! Homomorphisms Z/4 → Z/2, their kernels, and ideal transport.

use std::sync::Arc;

use hyperideal::constructions::{homomorphisms, transport_ideal, Direction};
use hyperideal::harness::fixture;
use hyperideal::ideals::Mode;

fn main() -> hyperideal::Result<()> {
    let z4 = Arc::new(fixture("z4")?);
    let z2 = Arc::new(fixture("z2")?);
    let homs = homomorphisms(&z4, &z2, 1 << 16).expect("small search");
    for h in &homs {
        let images: Vec<&str> = h.images().into_iter().map(|e| z2.name_of(e)).collect();
        println!("map {:?}, kernel {}", images, z4.format_subset(&h.kernel()));
        let zero = z2.parse_subset("0")?;
        let pre = transport_ideal(h, Direction::Preimage, &zero, Mode::Lenient)?;
        println!("  preimage of {{0}}: {}", z4.format_subset(&pre));
    }
    // x ↦ 1 preserves f and g on the (3,3) example and on ternary Z/2
    let ex = Arc::new(fixture("paper-example")?);
    let t = Arc::new(fixture("z2-as-33")?);
    let degenerate = homomorphisms(&ex, &t, 1 << 16)
        .expect("small search")
        .into_iter()
        .filter(|h| h.apply(ex.zero()) != t.zero())
        .count();
    println!("homomorphisms paper-example → z2-as-33 moving 0: {degenerate}");
    Ok(())
}
