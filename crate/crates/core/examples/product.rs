//! Z/2 × Z/3 and how its S-hyperideals split into components.

use hyperideal::constructions::{product_coordinates, product_ring};
use hyperideal::harness::fixture;
use hyperideal::ideals::{enumerate_hyperideals, Mode};

fn main() -> hyperideal::Result<()> {
    let (a, b) = (fixture("z2")?, fixture("z3")?);
    let p = product_ring(&[&a, &b])?;
    println!("{} has order {} and law {}", p.name(), p.order(), p.distributivity());
    for e in p.elements() {
        let c = product_coordinates(&[a.order(), b.order()], e);
        println!("  {} = ({}, {})", p.name_of(e), a.name_of(c[0]), b.name_of(c[1]));
    }
    for i in enumerate_hyperideals(&p, Mode::Lenient)? {
        println!("  hyperideal {}", p.format_subset(&i));
    }
    Ok(())
}
