//! Dense lookup tables shared by the axiom checker and validated rings.

use super::spec::HyperRingSpec;
use super::tuples::{flat_index, for_each_tuple};
use crate::error::{Error, Result};

/// Largest dense table (entries) we are willing to materialize.
const MAX_DENSE: usize = 1 << 22;

/// Ordered-tuple tables over element indices. `f` values are bitmasks.
#[derive(Clone, Debug)]
pub(crate) struct Tables {
    pub order: usize,
    pub m: usize,
    pub n: usize,
    pub zero: usize,
    pub one: usize,
    pub f: Vec<u64>,
    pub g: Vec<u8>,
}

fn dense_len(order: usize, arity: usize) -> Result<usize> {
    let mut len: usize = 1;
    for _ in 0..arity {
        len = len.saturating_mul(order);
    }
    if len > MAX_DENSE {
        return Err(Error::OrderLimitExceeded {
            order,
            limit: (MAX_DENSE as f64).powf(1.0 / arity as f64) as usize,
        });
    }
    Ok(len)
}

impl Tables {
    pub fn from_spec(spec: &HyperRingSpec) -> Result<Self> {
        spec.validate()?;
        let order = spec.order();
        let (m, n) = (spec.m, spec.n);
        let mut f = vec![0u64; dense_len(order, m)?];
        let mut g = vec![0u8; dense_len(order, n)?];
        let mut key = Vec::with_capacity(m.max(n));
        for_each_tuple(order, m, |t| {
            key.clear();
            key.extend_from_slice(t);
            key.sort_unstable();
            f[flat_index(order, t)] = spec.f[&key].iter().fold(0, |acc, &x| acc | 1 << x);
            true
        });
        for_each_tuple(order, n, |t| {
            key.clear();
            key.extend_from_slice(t);
            key.sort_unstable();
            g[flat_index(order, t)] = spec.g[&key] as u8;
            true
        });
        Ok(Tables {
            order,
            m,
            n,
            zero: spec.zero,
            one: spec.one,
            f,
            g,
        })
    }

    #[inline]
    pub fn f(&self, args: &[usize]) -> u64 {
        self.f[flat_index(self.order, args)]
    }

    #[inline]
    pub fn g(&self, args: &[usize]) -> usize {
        self.g[flat_index(self.order, args)] as usize
    }

    /// Union of `f` over every choice tuple drawn from the argument sets.
    pub fn f_sets(&self, sets: &[u64]) -> u64 {
        let mut buf = vec![0usize; sets.len()];
        let mut acc = 0;
        self.f_sets_rec(sets, 0, &mut buf, &mut acc);
        acc
    }

    fn f_sets_rec(&self, sets: &[u64], k: usize, buf: &mut [usize], acc: &mut u64) {
        if k == sets.len() {
            *acc |= self.f(buf);
            return;
        }
        let mut bits = sets[k];
        while bits != 0 {
            buf[k] = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            self.f_sets_rec(sets, k + 1, buf, acc);
        }
    }

    /// Set of all `g` outcomes over choice tuples drawn from the argument sets.
    pub fn g_sets(&self, sets: &[u64]) -> u64 {
        let mut buf = vec![0usize; sets.len()];
        let mut acc = 0;
        self.g_sets_rec(sets, 0, &mut buf, &mut acc);
        acc
    }

    fn g_sets_rec(&self, sets: &[u64], k: usize, buf: &mut [usize], acc: &mut u64) {
        if k == sets.len() {
            *acc |= 1 << self.g(buf);
            return;
        }
        let mut bits = sets[k];
        while bits != 0 {
            buf[k] = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            self.g_sets_rec(sets, k + 1, buf, acc);
        }
    }
}
