//! Multiplicative sets and the S-machinery: the S-condition, residuals,
//! saturation, the largest multiplicative set for a hyperideal, S-maximal
//! hyperideals and the decomposition over minimal primes.

use crate::closure::closed_sets;
use crate::error::{Error, Result};
use crate::ideals::{
    check_order, require_ideal, require_proper_ideal, substitution_failure, IdealLattice, Mode,
    ProductWitness, Verdict,
};
use crate::kernel::tuples::{for_each_multiset, for_each_tuple};
use crate::kernel::HyperRing;
use crate::subset::{bit_indices, Element, SubsetMask};

/// A non-empty subset closed under `g`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MulSet {
    subset: SubsetMask,
    contains_one: bool,
}

impl MulSet {
    /// Fails with [`Error::NotMultiplicative`] naming the first product that
    /// leaves `s`.
    pub fn new(ring: &HyperRing, s: SubsetMask) -> Result<Self> {
        match is_multiplicative_set(ring, &s)? {
            Verdict::Holds => Ok(MulSet::trusted(ring, s)),
            Verdict::Fails(w) => Err(Error::NotMultiplicative {
                subset: ring.format_subset(&s),
                reason: w.describe(ring),
            }),
        }
    }

    pub(crate) fn trusted(ring: &HyperRing, subset: SubsetMask) -> Self {
        MulSet {
            subset,
            contains_one: subset.contains(ring.one()),
        }
    }

    pub fn subset(&self) -> SubsetMask {
        self.subset
    }

    pub fn contains_one(&self) -> bool {
        self.contains_one
    }

    pub fn contains(&self, e: Element) -> bool {
        self.subset.contains(e)
    }
}

fn mul_failure(ring: &HyperRing, s: u64) -> Option<ProductWitness> {
    let members: Vec<usize> = bit_indices(s).collect();
    let mut args = vec![0usize; ring.n()];
    let mut w = None;
    for_each_multiset(members.len(), ring.n(), |t| {
        for (a, &k) in args.iter_mut().zip(t) {
            *a = members[k];
        }
        let v = ring.g_raw(&args);
        if s >> v & 1 == 0 {
            w = Some(ProductWitness::new(&args, None, v, None));
            return false;
        }
        true
    });
    w
}

/// Scans the size-`n` multisets of `s`; the witness is a product leaving `s`.
pub fn is_multiplicative_set(ring: &HyperRing, s: &SubsetMask) -> Result<Verdict<ProductWitness>> {
    ring.check_mask(s)?;
    if s.is_empty() {
        return Err(Error::EmptySubset);
    }
    Ok(Verdict::from_option(mul_failure(ring, s.bits())))
}

/// Least `g`-closed superset.
pub(crate) fn close_mul(ring: &HyperRing, s: u64) -> u64 {
    let mut cur = s;
    let mut args = vec![0usize; ring.n()];
    loop {
        let members: Vec<usize> = bit_indices(cur).collect();
        let mut next = cur;
        for_each_multiset(members.len(), ring.n(), |t| {
            for (a, &k) in args.iter_mut().zip(t) {
                *a = members[k];
            }
            next |= 1 << ring.g_raw(&args);
            true
        });
        if next == cur {
            return cur;
        }
        cur = next;
    }
}

/// Every multiplicative set, ascending by mask.
pub fn enumerate_multiplicative_sets(ring: &HyperRing) -> Result<Vec<MulSet>> {
    check_order(ring)?;
    Ok(mul_set_bits(ring)
        .into_iter()
        .map(|b| MulSet::trusted(ring, ring.mask(b)))
        .collect())
}

pub(crate) fn mul_set_bits(ring: &HyperRing) -> Vec<u64> {
    let mut v = closed_sets(ring.all().bits(), |s| close_mul(ring, s));
    v.retain(|&b| b != 0);
    v
}

/// Which of the two S-conditions a proper hyperideal meets.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SVerdict {
    SHyperideal,
    /// Fails the S-condition but meets it with `r(P)` as the target.
    SrOnly,
    Neither,
}

impl SVerdict {
    pub fn as_str(self) -> &'static str {
        match self {
            SVerdict::SHyperideal => "s-hyperideal",
            SVerdict::SrOnly => "sr-only",
            SVerdict::Neither => "neither",
        }
    }
}

/// Verdict for a pair (P, S). `witness` is the first failure of the
/// S-condition, `sr_witness` the first failure with `r(P)` as target.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SClassification {
    pub verdict: SVerdict,
    pub witness: Option<ProductWitness>,
    pub sr_witness: Option<ProductWitness>,
    pub mode: Mode,
}

impl SClassification {
    pub fn is_s_hyperideal(&self) -> bool {
        self.verdict == SVerdict::SHyperideal
    }

    pub fn is_sr_hyperideal(&self) -> bool {
        self.verdict != SVerdict::Neither
    }
}

/// First (tuple, position) with `g(tuple) ∈ p`, the factor in `s`, and
/// the product with that factor replaced by `1` outside `target`.
pub(crate) fn s_failure(ring: &HyperRing, p: u64, s: u64, target: u64) -> Option<ProductWitness> {
    substitution_failure(ring, p, |x| s >> x & 1 == 1, target)
}

/// Boolean S-condition. Position 1 suffices by commutativity of `g`.
pub(crate) fn is_s_bits(ring: &HyperRing, p: u64, s: u64) -> bool {
    let one = ring.one().index();
    let mut ok = true;
    let mut args = vec![0usize; ring.n()];
    for x in bit_indices(s) {
        for_each_tuple(ring.order(), ring.n() - 1, |rest| {
            args[0] = x;
            args[1..].copy_from_slice(rest);
            if p >> ring.g_raw(&args) & 1 == 1 {
                args[0] = one;
                if p >> ring.g_raw(&args) & 1 == 0 {
                    ok = false;
                }
            }
            ok
        });
        if !ok {
            return false;
        }
    }
    true
}

pub(crate) fn classify_pair(lat: &IdealLattice<'_>, p: u64, s: u64) -> SClassification {
    let ring = lat.ring();
    let witness = s_failure(ring, p, s, p);
    let (verdict, sr_witness) = match witness {
        None => (SVerdict::SHyperideal, None),
        Some(_) => {
            let r = lat.radical_bits(p);
            match s_failure(ring, p, s, r) {
                None => (SVerdict::SrOnly, None),
                Some(w) => (SVerdict::Neither, Some(w)),
            }
        }
    };
    SClassification {
        verdict,
        witness,
        sr_witness,
        mode: lat.mode(),
    }
}

/// Decides the S-condition (and, when it fails, the S_r-condition) for a
/// proper hyperideal `p`.
pub fn is_s_hyperideal(ring: &HyperRing, p: &SubsetMask, s: &MulSet, mode: Mode) -> Result<SClassification> {
    require_proper_ideal(ring, p, mode)?;
    ring.check_mask(&s.subset)?;
    let lat = IdealLattice::new(ring, mode)?;
    Ok(classify_pair(&lat, p.bits(), s.subset.bits()))
}

/// The S-condition with membership tested against `r(P)`.
pub fn is_sr_hyperideal(ring: &HyperRing, p: &SubsetMask, s: &MulSet, mode: Mode) -> Result<Verdict<ProductWitness>> {
    require_proper_ideal(ring, p, mode)?;
    ring.check_mask(&s.subset)?;
    let lat = IdealLattice::new(ring, mode)?;
    let r = lat.radical_bits(p.bits());
    Ok(Verdict::from_option(s_failure(ring, p.bits(), s.subset.bits(), r)))
}

pub(crate) fn residual_bits(ring: &HyperRing, p: u64, x: u64) -> u64 {
    let mut out = 0;
    for a in 0..ring.order() {
        if bit_indices(x).all(|t| p >> ring.mul_raw(a, t) & 1 == 1) {
            out |= 1 << a;
        }
    }
    out
}

/// `{a : g(a, x, 1^(n-2)) ∈ P for every x ∈ X}`.
pub fn residual(ring: &HyperRing, p: &SubsetMask, x: &SubsetMask, mode: Mode) -> Result<SubsetMask> {
    require_ideal(ring, p, mode)?;
    ring.check_mask(x)?;
    if x.is_empty() {
        return Err(Error::EmptySubset);
    }
    Ok(ring.mask(residual_bits(ring, p.bits(), x.bits())))
}

pub(crate) fn saturation_bits(ring: &HyperRing, q: u64, s: u64) -> u64 {
    let mut out = 0;
    for x in 0..ring.order() {
        if bit_indices(s).any(|t| q >> ring.mul_raw(t, x) & 1 == 1) {
            out |= 1 << x;
        }
    }
    out
}

/// `Q^S` with the flags a caller needs before leaning on minimality.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Saturation {
    pub set: SubsetMask,
    /// `1 ∉ S`: the minimality guarantee does not apply.
    pub missing_one: bool,
    /// `Q^S` is the whole ring, so there is no S-hyperideal above `Q`.
    pub vacuous: bool,
}

/// `{x : g(t, x, 1^(n-2)) ∈ Q for some t ∈ S}`.
pub fn saturation(ring: &HyperRing, q: &SubsetMask, s: &MulSet, mode: Mode) -> Result<Saturation> {
    require_ideal(ring, q, mode)?;
    ring.check_mask(&s.subset)?;
    let set = ring.mask(saturation_bits(ring, q.bits(), s.subset.bits()));
    Ok(Saturation {
        set,
        missing_one: !s.contains_one,
        vacuous: set == ring.all(),
    })
}

pub(crate) fn maximal_ms_bits(ring: &HyperRing, p: u64) -> u64 {
    let mut out = 0;
    for x in 0..ring.order() {
        if is_s_bits(ring, p, 1 << x) {
            out |= 1 << x;
        }
    }
    out
}

/// The largest multiplicative set `S` for which `p` is an S-hyperideal:
/// every `x` whose replacement by `1` never pushes a product out of `p`.
pub fn maximal_ms_for(ring: &HyperRing, p: &SubsetMask, mode: Mode) -> Result<MulSet> {
    require_proper_ideal(ring, p, mode)?;
    let s = maximal_ms_bits(ring, p.bits());
    if let Some(w) = mul_failure(ring, s) {
        return Err(Error::InternalContradiction(format!(
            "{} is not multiplicative: {}",
            ring.format_subset(&ring.mask(s)),
            w.describe(ring)
        )));
    }
    Ok(MulSet::trusted(ring, ring.mask(s)))
}

pub(crate) fn s_hyperideal_bits(lat: &IdealLattice<'_>, s: u64) -> Vec<u64> {
    let ring = lat.ring();
    let whole = ring.all().bits();
    lat.bits()
        .iter()
        .copied()
        .filter(|&p| p != whole && is_s_bits(ring, p, s))
        .collect()
}

/// Inclusion-maximal S-hyperideals.
pub fn s_maximal_hyperideals(ring: &HyperRing, s: &MulSet, mode: Mode) -> Result<Vec<SubsetMask>> {
    ring.check_mask(&s.subset)?;
    let lat = IdealLattice::new(ring, mode)?;
    let all = s_hyperideal_bits(&lat, s.subset.bits());
    Ok(all
        .iter()
        .copied()
        .filter(|&p| !all.iter().any(|&q| q != p && p & !q == 0))
        .map(|p| ring.mask(p))
        .collect())
}

/// Components `P_j = P^(A \ Q_j)` for minimal primes `Q_j`, provided `P`
/// is an S-hyperideal for `S = A \ ∪ Q_j`.
pub fn primary_decomposition(
    ring: &HyperRing,
    p: &SubsetMask,
    primes: &[SubsetMask],
    mode: Mode,
) -> Result<Vec<SubsetMask>> {
    require_proper_ideal(ring, p, mode)?;
    if primes.is_empty() {
        return Err(Error::HypothesisViolation("no minimal primes given".into()));
    }
    let lat = IdealLattice::new(ring, mode)?;
    let min: Vec<SubsetMask> = lat.special_sets().min_primes;
    for q in primes {
        ring.check_mask(q)?;
        if !min.contains(q) {
            return Err(Error::HypothesisViolation(format!(
                "{} is not a minimal prime",
                ring.format_subset(q)
            )));
        }
    }
    let whole = ring.all().bits();
    let s = primes.iter().fold(whole, |acc, q| acc & !q.bits());
    if s == 0 {
        return Err(Error::HypothesisViolation(
            "the complement of the union of the primes is empty".into(),
        ));
    }
    if mul_failure(ring, s).is_some() {
        return Err(Error::HypothesisViolation(format!(
            "{} is not multiplicative",
            ring.format_subset(&ring.mask(s))
        )));
    }
    if let Some(w) = s_failure(ring, p.bits(), s, p.bits()) {
        return Err(Error::HypothesisViolation(format!(
            "{} is not an S-hyperideal for S = {}: {}",
            ring.format_subset(p),
            ring.format_subset(&ring.mask(s)),
            w.describe(ring)
        )));
    }
    Ok(primes
        .iter()
        .map(|q| ring.mask(saturation_bits(ring, p.bits(), whole & !q.bits())))
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::harness::fixture;

    fn set(ring: &HyperRing, s: &str) -> SubsetMask {
        ring.parse_subset(s).unwrap()
    }

    fn ms(ring: &HyperRing, s: &str) -> MulSet {
        MulSet::new(ring, set(ring, s)).unwrap()
    }

    #[test]
    fn the_worked_example() {
        let r = fixture("paper-example").unwrap();
        let c = is_s_hyperideal(&r, &set(&r, "0,2"), &ms(&r, "2"), Mode::Lenient).unwrap();
        assert_eq!(c.verdict, SVerdict::Neither);
        let w = c.witness.unwrap();
        assert_eq!(r.format_tuple(&w.tuple), "(1,1,2)");
        assert_eq!(w.position, Some(3));
        assert_eq!(w.product, Element::new(2));
        assert_eq!(w.substituted, Some(Element::new(1)));
        let c = is_s_hyperideal(&r, &set(&r, "0"), &ms(&r, "2"), Mode::Lenient).unwrap();
        assert!(c.is_s_hyperideal());
    }

    #[test]
    fn multiplicative_sets() {
        let r = fixture("paper-example").unwrap();
        assert!(is_multiplicative_set(&r, &set(&r, "1,2")).unwrap().holds());
        assert!(MulSet::new(&r, set(&r, "0,1")).is_ok());
        let z6 = fixture("z6").unwrap();
        let w = is_multiplicative_set(&z6, &set(&z6, "2,3")).unwrap();
        assert_eq!(w.witness().unwrap().product, Element::new(4));
        let counts: Vec<usize> = ["z2", "z4", "z6", "z8", "z12"]
            .iter()
            .map(|f| enumerate_multiplicative_sets(&fixture(f).unwrap()).unwrap().len())
            .collect();
        assert_eq!(counts, [3, 8, 26, 29, 168]);
    }

    #[test]
    fn residuals_and_saturation() {
        let r = fixture("paper-example").unwrap();
        assert_eq!(residual(&r, &set(&r, "0"), &set(&r, "2"), Mode::Lenient).unwrap(), set(&r, "0"));
        let sat = saturation(&r, &set(&r, "0"), &ms(&r, "1,2"), Mode::Lenient).unwrap();
        assert_eq!(sat.set, set(&r, "0"));
        assert!(!sat.missing_one && !sat.vacuous);
        let z6 = fixture("z6").unwrap();
        assert_eq!(residual(&z6, &set(&z6, "0"), &set(&z6, "3"), Mode::Lenient).unwrap(), set(&z6, "0,2,4"));
        let sat = saturation(&z6, &set(&z6, "0"), &ms(&z6, "1,3"), Mode::Lenient).unwrap();
        assert_eq!(sat.set, set(&z6, "0,2,4"));
        let sat = saturation(&z6, &set(&z6, "0,3"), &ms(&z6, "0,1"), Mode::Lenient).unwrap();
        assert!(sat.vacuous);
    }

    #[test]
    fn largest_multiplicative_set() {
        let r = fixture("paper-example").unwrap();
        assert_eq!(maximal_ms_for(&r, &set(&r, "0"), Mode::Lenient).unwrap().subset(), set(&r, "1,2"));
        let z6 = fixture("z6").unwrap();
        assert_eq!(
            maximal_ms_for(&z6, &set(&z6, "0,2,4"), Mode::Lenient).unwrap().subset(),
            set(&z6, "1,3,5")
        );
    }

    #[test]
    fn s_maximal() {
        let r = fixture("paper-example").unwrap();
        assert_eq!(s_maximal_hyperideals(&r, &ms(&r, "1,2"), Mode::Lenient).unwrap(), vec![set(&r, "0")]);
        let z6 = fixture("z6").unwrap();
        assert_eq!(
            s_maximal_hyperideals(&z6, &ms(&z6, "1"), Mode::Lenient).unwrap(),
            vec![set(&z6, "0,3"), set(&z6, "0,2,4")]
        );
    }

    #[test]
    fn decomposition_over_minimal_primes() {
        let z6 = fixture("z6").unwrap();
        let primes = [set(&z6, "0,2,4"), set(&z6, "0,3")];
        let parts = primary_decomposition(&z6, &set(&z6, "0"), &primes, Mode::Lenient).unwrap();
        assert_eq!(parts, primes.to_vec());
        let r = fixture("paper-example").unwrap();
        let parts = primary_decomposition(&r, &set(&r, "0"), &[set(&r, "0")], Mode::Lenient).unwrap();
        assert_eq!(parts, vec![set(&r, "0")]);
        assert!(matches!(
            primary_decomposition(&r, &set(&r, "0"), &[set(&r, "0,2")], Mode::Lenient),
            Err(Error::HypothesisViolation(_))
        ));
    }
}
