//! Residuals P_t and saturations Q^S in Z/12, and the three equivalent
//! forms of the S-condition.

use hyperideal::harness::{fixture, tri_equivalence};
use hyperideal::ideals::{enumerate_hyperideals, Mode};
use hyperideal::multiplicative::{enumerate_multiplicative_sets, residual, saturation, MulSet};

fn main() -> hyperideal::Result<()> {
    let ring = fixture("z12")?;
    let p = ring.parse_subset("0,4,8")?;
    for t in ["2", "3", "5"] {
        let x = ring.parse_subset(t)?;
        println!("P_{t} = {}", ring.format_subset(&residual(&ring, &p, &x, Mode::Lenient)?));
    }
    let s = MulSet::new(&ring, ring.parse_subset("1,3,9")?)?;
    let sat = saturation(&ring, &p, &s, Mode::Lenient)?;
    println!("P^S = {} (vacuous: {})", ring.format_subset(&sat.set), sat.vacuous);

    let mut agree = 0;
    for q in enumerate_hyperideals(&ring, Mode::Lenient)? {
        if q == ring.all() {
            continue;
        }
        for ms in enumerate_multiplicative_sets(&ring)? {
            let v = tri_equivalence(&ring, &q, &ms.subset())?;
            assert!(v[0] == v[1] && v[1] == v[2]);
            agree += 1;
        }
    }
    println!("{agree} (P, S) pairs, all three tests agree");
    Ok(())
}
