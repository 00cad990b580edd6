//! Decomposes an S-hyperideal along minimal primes.

use hyperideal::harness::fixture;
use hyperideal::ideals::{special_sets, Mode};
use hyperideal::multiplicative::primary_decomposition;

fn main() -> hyperideal::Result<()> {
    for (name, ideal) in [("z6", "0"), ("z12", "0")] {
        let ring = fixture(name)?;
        let p = ring.parse_subset(ideal)?;
        let mins = special_sets(&ring, Mode::Lenient)?.min_primes;
        let parts = primary_decomposition(&ring, &p, &mins, Mode::Lenient)?;
        let shown: Vec<String> = parts.iter().map(|c| ring.format_subset(c)).collect();
        println!("{name}: {} = {}", ring.format_subset(&p), shown.join(" ∩ "));
    }
    Ok(())
}
