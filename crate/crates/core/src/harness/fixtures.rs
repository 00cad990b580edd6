//! Named rings used by tests, examples and the theorem suite.

use std::sync::Arc;

use crate::constructions::{integers_mod, product_ring, quotient_ring};
use crate::error::{Error, Result};
use crate::ideals::Mode;
use crate::kernel::{verify_axioms, verify_axioms_with, Distributivity, HyperRing, HyperRingSpec};

/// Every registered fixture name.
pub const FIXTURES: [&str; 10] = [
    "paper-example",
    "z2",
    "z3",
    "z4",
    "z6",
    "z8",
    "z12",
    "z2xz3",
    "z6-mod-3",
    "z2-as-33",
];

/// The fixtures the full suite runs over by default.
pub const DEFAULT_SUITE: [&str; 8] = [
    "paper-example",
    "z2",
    "z4",
    "z6",
    "z8",
    "z12",
    "z2xz3",
    "z6-mod-3",
];

/// The (3,3)-hyperring on {0,1,2}: `f` is a hypersum that returns the
/// whole carrier on {1,1,2}, {1,2,2} and {0,1,2}, and `g` is 0 when some
/// factor is 0, else 2 when some factor is 2, else 1.
///
/// Its tables satisfy `f(g(..)) ⊆ g(.., f, ..)` but not equality, so the
/// spec is verified with [`Distributivity::Includes`].
pub fn paper_example_spec() -> HyperRingSpec {
    let elements = vec!["0".to_string(), "1".to_string(), "2".to_string()];
    HyperRingSpec::from_operations(
        "paper-example",
        3,
        3,
        elements,
        0,
        1,
        |k| match k {
            [0, 0, x] => vec![*x],
            [0, 1, 1] | [1, 1, 1] => vec![1],
            [0, 2, 2] | [2, 2, 2] => vec![2],
            _ => vec![0, 1, 2],
        },
        |k| {
            if k.contains(&0) {
                0
            } else if k.contains(&2) {
                2
            } else {
                1
            }
        },
    )
    .expect("static tables")
}

/// Z/2 with ternary sum and ternary product.
pub fn z2_as_33_spec() -> HyperRingSpec {
    HyperRingSpec::from_operations(
        "z2-as-33",
        3,
        3,
        vec!["0".to_string(), "1".to_string()],
        0,
        1,
        |k| vec![k.iter().sum::<usize>() % 2],
        |k| k.iter().product::<usize>() % 2,
    )
    .expect("static tables")
}

fn renamed(ring: &HyperRing, name: &str) -> Result<HyperRing> {
    let mut spec = ring.spec().clone();
    spec.name = name.to_string();
    verify_axioms_with(spec, ring.distributivity())
}

/// Builds and verifies a fixture by name.
pub fn fixture(name: &str) -> Result<HyperRing> {
    match name {
        "paper-example" => verify_axioms_with(paper_example_spec(), Distributivity::Includes),
        "z2" | "z3" | "z4" | "z6" | "z8" | "z12" => {
            let k = name[1..].parse().expect("numeric suffix");
            verify_axioms(integers_mod(k)?)
        }
        "z2xz3" => {
            let p = product_ring(&[&fixture("z2")?, &fixture("z3")?])?;
            renamed(&p, name)
        }
        "z6-mod-3" => {
            let z6 = Arc::new(fixture("z6")?);
            let p = z6.parse_subset("0,3")?;
            let q = quotient_ring(&z6, &p, Mode::Strict)?;
            renamed(&q.quotient, name)
        }
        "z2-as-33" => verify_axioms(z2_as_33_spec()),
        other => Err(Error::UnknownFixture(other.to_string())),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_fixture_builds() {
        for name in FIXTURES {
            let r = fixture(name).unwrap();
            assert_eq!(r.name(), name);
        }
        assert!(matches!(fixture("z5"), Err(Error::UnknownFixture(_))));
    }

    #[test]
    fn worked_example_tables() {
        let r = fixture("paper-example").unwrap();
        assert_eq!((r.order(), r.m(), r.n()), (3, 3, 3));
        let e = |i| crate::Element::new(i);
        assert_eq!(r.eval_f(&[e(1), e(1), e(2)]).unwrap(), r.all());
        assert_eq!(r.eval_g(&[e(1), e(1), e(2)]).unwrap(), e(2));
        assert_eq!(r.negate(e(2)), e(1));
        assert_eq!(r.power(e(2), 2), e(2));
        let s02 = r.parse_subset("0,2").unwrap();
        let s2 = r.parse_subset("2").unwrap();
        assert_eq!(r.eval_f_sets(&[s02, s02, s2]).unwrap(), s2);
        // exact distributivity fails on these tables
        assert!(verify_axioms(paper_example_spec()).is_err());
    }

    #[test]
    fn quotient_fixture_is_z3_like() {
        let q = fixture("z6-mod-3").unwrap();
        assert_eq!(q.order(), 3);
        assert_eq!(q.elements().map(|e| q.name_of(e).to_string()).collect::<Vec<_>>(), ["[0;3]", "[1;4]", "[2;5]"]);
    }
}
