//! Invariants over random fixtures, subsets and documents.

use std::sync::{Arc, OnceLock};

use hyperideal::constructions::{integers_mod, product_ring, quotient_ring};
use hyperideal::harness::{fixture, tri_equivalence, FIXTURES};
use hyperideal::ideals::{
    enumerate_hyperideals, generated_hyperideal, is_hyperideal, radical, IdealLattice, Mode,
};
use hyperideal::multiplicative::{
    enumerate_multiplicative_sets, is_multiplicative_set, is_s_hyperideal, residual, saturation,
};
use hyperideal::{parse_spec, serialize_spec, verify_axioms, HyperRing, SubsetMask};
use proptest::prelude::*;

fn rings() -> &'static [Arc<HyperRing>] {
    static RINGS: OnceLock<Vec<Arc<HyperRing>>> = OnceLock::new();
    RINGS.get_or_init(|| FIXTURES.iter().map(|n| Arc::new(fixture(n).unwrap())).collect())
}

fn subset(r: &HyperRing, bits: u64) -> SubsetMask {
    r.subset(r.elements().filter(|e| bits >> e.index() & 1 == 1))
}

fn mode() -> impl Strategy<Value = Mode> {
    prop_oneof![Just(Mode::Lenient), Just(Mode::Strict)]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn generated_is_least_hyperideal(ri in 0usize..10, bits in any::<u64>(), m in mode()) {
        let r = &rings()[ri];
        let x = subset(r, bits);
        prop_assume!(!x.is_empty());
        let g = generated_hyperideal(r, &x, m).unwrap();
        prop_assert!(is_hyperideal(r, &g, m).unwrap().holds());
        prop_assert!(x.is_subset(&g));
        for i in enumerate_hyperideals(r, m).unwrap() {
            if x.is_subset(&i) {
                prop_assert!(g.is_subset(&i));
            }
        }
        prop_assert_eq!(generated_hyperideal(r, &g, m).unwrap(), g);
    }

    #[test]
    fn radical_is_idempotent_and_above(ri in 0usize..10, pick in any::<prop::sample::Index>(), m in mode()) {
        let r = &rings()[ri];
        let all = enumerate_hyperideals(r, m).unwrap();
        let p = all[pick.index(all.len())];
        let rad = radical(r, &p, m).unwrap();
        prop_assert!(p.is_subset(&rad));
        prop_assert_eq!(radical(r, &rad, m).unwrap(), rad);
    }

    #[test]
    fn s_hyperideals_avoid_s(ri in 0usize..10, pi in any::<prop::sample::Index>(), si in any::<prop::sample::Index>()) {
        let r = &rings()[ri];
        let lat = IdealLattice::new(r, Mode::Lenient).unwrap();
        let proper = lat.proper();
        let sets = enumerate_multiplicative_sets(r).unwrap();
        let p = proper[pi.index(proper.len())];
        let s = &sets[si.index(sets.len())];
        let c = is_s_hyperideal(r, &p, s, Mode::Lenient).unwrap();
        if c.is_s_hyperideal() {
            prop_assert!(p.try_intersection(&s.subset()).unwrap().is_empty());
        }
        // the three formulations agree
        let v = tri_equivalence(r, &p, &s.subset()).unwrap();
        prop_assert_eq!(v, [c.is_s_hyperideal(); 3]);
    }

    #[test]
    fn residual_contains_ideal(ri in 0usize..10, pi in any::<prop::sample::Index>(), bits in 1u64..) {
        let r = &rings()[ri];
        let all = enumerate_hyperideals(r, Mode::Lenient).unwrap();
        let p = all[pi.index(all.len())];
        let x = subset(r, bits);
        prop_assume!(!x.is_empty());
        let res = residual(r, &p, &x, Mode::Lenient).unwrap();
        prop_assert!(p.is_subset(&res));
    }

    #[test]
    fn saturation_contains_ideal_when_one_in_s(ri in 0usize..10, pi in any::<prop::sample::Index>(), si in any::<prop::sample::Index>()) {
        let r = &rings()[ri];
        let all = enumerate_hyperideals(r, Mode::Lenient).unwrap();
        let sets = enumerate_multiplicative_sets(r).unwrap();
        let q = all[pi.index(all.len())];
        let s = &sets[si.index(sets.len())];
        let sat = saturation(r, &q, s, Mode::Lenient).unwrap();
        if s.contains_one() {
            prop_assert!(q.is_subset(&sat.set));
        }
        prop_assert_eq!(sat.vacuous, sat.set == r.all());
    }

    #[test]
    fn mul_set_closure(ri in 0usize..10, bits in 1u64..) {
        let r = &rings()[ri];
        let s = subset(r, bits);
        prop_assume!(!s.is_empty());
        let listed = enumerate_multiplicative_sets(r).unwrap().iter().any(|m| m.subset() == s);
        prop_assert_eq!(is_multiplicative_set(r, &s).unwrap().holds(), listed);
    }

    #[test]
    fn integers_round_trip(k in 2usize..=16) {
        let spec = integers_mod(k).unwrap();
        let text = serialize_spec(&spec);
        let back = parse_spec(&text).unwrap();
        prop_assert_eq!(&back, &spec);
        prop_assert_eq!(serialize_spec(&back), text);
        prop_assert!(verify_axioms(back).is_ok());
    }

    #[test]
    fn product_ideal_count_multiplies(a in 2usize..=4, b in 2usize..=4) {
        let ra = verify_axioms(integers_mod(a).unwrap()).unwrap();
        let rb = verify_axioms(integers_mod(b).unwrap()).unwrap();
        let p = product_ring(&[&ra, &rb]).unwrap();
        let count = |r: &HyperRing| enumerate_hyperideals(r, Mode::Lenient).unwrap().len();
        prop_assert_eq!(count(&p), count(&ra) * count(&rb));
    }

    #[test]
    fn quotient_projection_preimages(ri in 0usize..10, pi in any::<prop::sample::Index>()) {
        let r = &rings()[ri];
        let lat = IdealLattice::new(r, Mode::Strict).unwrap();
        let proper = lat.proper();
        let p = proper[pi.index(proper.len())];
        if let Ok(q) = quotient_ring(r, &p, Mode::Strict) {
            prop_assert_eq!(q.projection.kernel(), p);
            prop_assert!(q.projection.is_surjective());
            let covered = q.cosets.iter().fold(r.empty(), |acc, c| acc | *c);
            prop_assert_eq!(covered, r.all());
        }
    }
}
