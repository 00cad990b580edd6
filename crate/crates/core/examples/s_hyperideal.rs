//! The worked example: {0,2} is not an S-hyperideal for S = {2}, while
//! {0} is, and the largest S that {0} tolerates.

use hyperideal::harness::fixture;
use hyperideal::ideals::Mode;
use hyperideal::multiplicative::{is_s_hyperideal, maximal_ms_for, MulSet};

fn main() -> hyperideal::Result<()> {
    let ring = fixture("paper-example")?;
    let s = MulSet::new(&ring, ring.parse_subset("2")?)?;
    for ideal in ["0,2", "0"] {
        let p = ring.parse_subset(ideal)?;
        let c = is_s_hyperideal(&ring, &p, &s, Mode::Lenient)?;
        print!("{} with S = {}: {}", ring.format_subset(&p), ring.format_subset(&s.subset()), c.verdict.as_str());
        match &c.witness {
            Some(w) => println!(" ({})", w.describe(&ring)),
            None => println!(),
        }
    }
    let zero = ring.parse_subset("0")?;
    let star = maximal_ms_for(&ring, &zero, Mode::Lenient)?;
    println!("largest S for {{0}}: {}", ring.format_subset(&star.subset()));
    Ok(())
}
