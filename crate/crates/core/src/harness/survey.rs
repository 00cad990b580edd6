//! Everything the checkers quantify over, computed once per (ring, mode).

use std::sync::Arc;

use crate::error::Result;
use crate::ideals::{substitution_failure, IdealLattice, Mode};
use crate::kernel::HyperRing;
use crate::multiplicative::{is_s_bits, mul_set_bits};

/// Hyperideals, primes, multiplicative sets and the S-condition matrix of
/// one ring under one mode.
#[derive(Debug)]
pub struct Survey {
    pub ring: Arc<HyperRing>,
    pub mode: Mode,
    pub whole: u64,
    /// All hyperideals, ascending, the whole ring last.
    pub ideals: Vec<u64>,
    pub proper: Vec<u64>,
    pub primes: Vec<u64>,
    pub maximals: Vec<u64>,
    pub min_primes: Vec<u64>,
    /// `radicals[i]` is `r(proper[i])`.
    pub radicals: Vec<u64>,
    pub mul_sets: Vec<u64>,
    /// `s_table[i][j]`: `proper[i]` is a `mul_sets[j]`-hyperideal.
    pub s_table: Vec<Vec<bool>>,
    pub units: u64,
    pub jacobson: u64,
}

impl Survey {
    pub fn new(ring: Arc<HyperRing>, mode: Mode) -> Result<Self> {
        let lat = IdealLattice::new(&ring, mode)?;
        let ideals = lat.bits().to_vec();
        let primes = lat.prime_bits().to_vec();
        let whole = ring.all().bits();
        let proper: Vec<u64> = ideals.iter().copied().filter(|&b| b != whole).collect();
        let radicals = proper.iter().map(|&p| lat.radical_bits(p)).collect();
        let special = lat.special_sets();
        let maximals = lat.maximals().iter().map(|s| s.bits()).collect();
        let min_primes = special.min_primes.iter().map(|s| s.bits()).collect();
        let mul_sets = mul_set_bits(&ring);
        let s_table = proper
            .iter()
            .map(|&p| mul_sets.iter().map(|&s| is_s_bits(&ring, p, s)).collect())
            .collect();
        let units = special.units.bits();
        let jacobson = special.jacobson.bits();
        drop(lat);
        Ok(Survey {
            ring,
            mode,
            whole,
            ideals,
            proper,
            primes,
            maximals,
            min_primes,
            radicals,
            mul_sets,
            s_table,
            units,
            jacobson,
        })
    }

    pub fn one_bit(&self) -> u64 {
        1 << self.ring.one().index()
    }

    pub fn zero_bit(&self) -> u64 {
        1 << self.ring.zero().index()
    }

    pub fn show(&self, bits: u64) -> String {
        self.ring.format_subset(&self.ring.mask(bits))
    }

    pub fn proper_index(&self, p: u64) -> Option<usize> {
        self.proper.binary_search(&p).ok()
    }

    pub fn ms_index(&self, s: u64) -> Option<usize> {
        self.mul_sets.binary_search(&s).ok()
    }

    pub fn radical_of(&self, p: u64) -> u64 {
        self.primes
            .iter()
            .filter(|&&q| p & !q == 0)
            .fold(self.whole, |acc, &q| acc & q)
    }

    pub fn is_prime(&self, p: u64) -> bool {
        self.primes.binary_search(&p).is_ok()
    }

    /// The S-condition for a proper hyperideal `p` and any subset `s`.
    pub fn is_s(&self, p: u64, s: u64) -> bool {
        match (self.proper_index(p), self.ms_index(s)) {
            (Some(i), Some(j)) => self.s_table[i][j],
            _ => is_s_bits(&self.ring, p, s),
        }
    }

    pub fn is_primary(&self, p: u64) -> bool {
        let r = self.radical_of(p);
        substitution_failure(&self.ring, p, |x| p >> x & 1 == 0, r).is_none()
    }

    pub fn is_ideal(&self, p: u64) -> bool {
        self.ideals.binary_search(&p).is_ok()
    }

    /// Proper hyperideals that are S-hyperideals for `mul_sets[j]`.
    pub fn s_hyperideals(&self, j: usize) -> Vec<u64> {
        self.proper
            .iter()
            .enumerate()
            .filter(|(i, _)| self.s_table[*i][j])
            .map(|(_, &p)| p)
            .collect()
    }
}
