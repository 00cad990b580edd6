//! Z/k viewed as a (2,2)-hyperring against plain integer arithmetic.
//! Every expected value here is recomputed from `a*b mod k` and `a+b mod k`
//! by brute force over all subsets, sharing no code with the library.

use hyperideal::constructions::integers_mod;
use hyperideal::ideals::{enumerate_hyperideals, radical, IdealLattice, Mode};
use hyperideal::multiplicative::{
    enumerate_multiplicative_sets, is_s_hyperideal, residual, saturation, MulSet,
};
use hyperideal::{verify_axioms, HyperRing, SubsetMask};

const MODULI: [usize; 7] = [2, 3, 4, 6, 8, 9, 12];

fn ring(k: usize) -> HyperRing {
    verify_axioms(integers_mod(k).unwrap()).unwrap()
}

fn members(bits: u32, k: usize) -> Vec<usize> {
    (0..k).filter(|x| bits >> x & 1 == 1).collect()
}

fn mask(r: &HyperRing, xs: &[usize]) -> SubsetMask {
    let names: Vec<String> = xs.iter().map(|x| x.to_string()).collect();
    if names.is_empty() {
        return r.empty();
    }
    r.parse_subset(&names.join(",")).unwrap()
}

fn is_ideal(bits: u32, k: usize) -> bool {
    let xs = members(bits, k);
    bits & 1 == 1
        && xs.iter().all(|&a| {
            xs.iter().all(|&b| bits >> ((a + b) % k) & 1 == 1)
                && (0..k).all(|r| bits >> (a * r % k) & 1 == 1)
        })
}

fn ideals(k: usize) -> Vec<u32> {
    (0..1u32 << k).filter(|&b| is_ideal(b, k)).collect()
}

fn is_prime(bits: u32, k: usize) -> bool {
    bits != (1 << k) - 1
        && (0..k).all(|a| (0..k).all(|b| bits >> (a * b % k) & 1 == 0 || bits >> a & 1 == 1 || bits >> b & 1 == 1))
}

fn mul_sets(k: usize) -> Vec<u32> {
    (1..1u32 << k)
        .filter(|&b| {
            let xs = members(b, k);
            xs.iter().all(|&a| xs.iter().all(|&c| b >> (a * c % k) & 1 == 1))
        })
        .collect()
}

fn is_s(p: u32, s: u32, k: usize) -> bool {
    members(s, k)
        .into_iter()
        .all(|t| (0..k).all(|b| p >> (t * b % k) & 1 == 0 || p >> b & 1 == 1))
}

fn to_bits(s: &SubsetMask, k: usize) -> u32 {
    (0..k).filter(|&x| s.contains_index(x)).fold(0, |acc, x| acc | 1 << x)
}

#[test]
fn hyperideals_are_the_additive_subgroups() {
    for k in MODULI {
        let r = ring(k);
        let got: Vec<u32> = enumerate_hyperideals(&r, Mode::Lenient)
            .unwrap()
            .iter()
            .map(|s| to_bits(s, k))
            .collect();
        let mut want = ideals(k);
        let mut got_sorted = got.clone();
        got_sorted.sort();
        want.sort();
        assert_eq!(got_sorted, want, "Z/{k}");
        // the number of divisors of k
        assert_eq!(got.len(), (1..=k).filter(|d| k % d == 0).count());
        assert_eq!(
            enumerate_hyperideals(&r, Mode::Strict).unwrap().len(),
            got.len(),
            "negation closure is automatic in Z/{k}"
        );
    }
}

#[test]
fn primes_and_radicals() {
    for k in MODULI {
        let r = ring(k);
        let lat = IdealLattice::new(&r, Mode::Lenient).unwrap();
        let mut got: Vec<u32> = lat.primes().iter().map(|s| to_bits(s, k)).collect();
        got.sort();
        let mut want: Vec<u32> = ideals(k).into_iter().filter(|&b| is_prime(b, k)).collect();
        want.sort();
        assert_eq!(got, want, "Z/{k}");
        for p in ideals(k) {
            let rad = (0..k)
                .filter(|&x| (1..=k).any(|e| p >> (x.pow(e as u32) % k) & 1 == 1))
                .fold(0u32, |acc, x| acc | 1 << x);
            let got = radical(&r, &mask(&r, &members(p, k)), Mode::Lenient).unwrap();
            assert_eq!(to_bits(&got, k), rad, "r of {:?} in Z/{k}", members(p, k));
        }
    }
}

#[test]
fn multiplicative_sets_match_power_set_filter() {
    for k in MODULI {
        let r = ring(k);
        let mut got: Vec<u32> = enumerate_multiplicative_sets(&r)
            .unwrap()
            .iter()
            .map(|m| to_bits(&m.subset(), k))
            .collect();
        got.sort();
        assert_eq!(got, mul_sets(k), "Z/{k}");
    }
}

#[test]
fn s_condition_matches_classical_definition() {
    for k in MODULI {
        let r = ring(k);
        let full = (1u32 << k) - 1;
        for p in ideals(k).into_iter().filter(|&p| p != full) {
            let pm = mask(&r, &members(p, k));
            for s in mul_sets(k) {
                let ms = MulSet::new(&r, mask(&r, &members(s, k))).unwrap();
                let c = is_s_hyperideal(&r, &pm, &ms, Mode::Lenient).unwrap();
                assert_eq!(c.is_s_hyperideal(), is_s(p, s, k), "Z/{k} P={p:b} S={s:b}");
            }
        }
    }
}

#[test]
fn residual_and_saturation_match_definitions() {
    for k in [6, 8, 12] {
        let r = ring(k);
        for p in ideals(k) {
            let pm = mask(&r, &members(p, k));
            for x in 1..1u32 << k {
                if x.count_ones() > 2 {
                    continue;
                }
                let want = (0..k)
                    .filter(|&a| members(x, k).iter().all(|&b| p >> (a * b % k) & 1 == 1))
                    .fold(0u32, |acc, a| acc | 1 << a);
                let got = residual(&r, &pm, &mask(&r, &members(x, k)), Mode::Lenient).unwrap();
                assert_eq!(to_bits(&got, k), want);
            }
            for s in mul_sets(k) {
                let want = (0..k)
                    .filter(|&a| members(s, k).iter().any(|&t| p >> (a * t % k) & 1 == 1))
                    .fold(0u32, |acc, a| acc | 1 << a);
                let ms = MulSet::new(&r, mask(&r, &members(s, k))).unwrap();
                let got = saturation(&r, &pm, &ms, Mode::Lenient).unwrap();
                assert_eq!(to_bits(&got.set, k), want);
                assert_eq!(got.missing_one, s & 2 == 0);
            }
        }
    }
}

#[test]
fn frozen_counts() {
    let counts: Vec<usize> = [2, 4, 6, 8, 12].iter().map(|&k| mul_sets(k).len()).collect();
    assert_eq!(counts, [3, 8, 26, 29, 168]);
    let ideal_counts: Vec<usize> = [2, 4, 6, 8, 12].iter().map(|&k| ideals(k).len()).collect();
    assert_eq!(ideal_counts, [2, 3, 4, 4, 6]);
}
