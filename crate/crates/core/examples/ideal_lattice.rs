//! Hyperideals of a fixture with their prime and maximal flags, radicals
//! and the special sets.
//!
//! `cargo run --example ideal_lattice -- z12`

use hyperideal::harness::fixture;
use hyperideal::ideals::{IdealLattice, Mode};

fn main() -> hyperideal::Result<()> {
    let name = std::env::args().nth(1).unwrap_or_else(|| "z12".into());
    let ring = fixture(&name)?;
    for mode in [Mode::Lenient, Mode::Strict] {
        let lat = IdealLattice::new(&ring, mode)?;
        println!("{} in {mode} mode:", ring.name());
        for p in lat.proper() {
            let prof = lat.classify(&p)?;
            println!(
                "  {:<16} r = {:<16} prime {:<5} primary {:<5} maximal {}",
                ring.format_subset(&p),
                ring.format_subset(&prof.radical),
                prof.prime.holds(),
                prof.primary.holds(),
                prof.maximal.holds()
            );
        }
        let sp = lat.special_sets();
        println!("  units {}  jacobson {}", ring.format_subset(&sp.units), ring.format_subset(&sp.jacobson));
    }
    Ok(())
}
