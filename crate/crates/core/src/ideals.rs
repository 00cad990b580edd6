//! Hyperideals: recognition, generation, enumeration and the classical
//! classification layer (prime, primary, semiprime, maximal, radical).

use std::fmt;
use std::str::FromStr;

use crate::closure::closed_sets;
use crate::error::{Error, Result};
use crate::kernel::tuples::{for_each_multiset, for_each_tuple};
use crate::kernel::HyperRing;
use crate::subset::{bit_indices, Element, SubsetMask};

/// Default cap on the carrier size for enumeration.
pub const DEFAULT_ORDER_LIMIT: usize = 20;

/// Environment variable overriding [`DEFAULT_ORDER_LIMIT`].
pub const ORDER_LIMIT_VAR: &str = "HYPERIDEAL_ORDER_LIMIT";

/// The enumeration cap currently in force.
pub fn order_limit() -> usize {
    std::env::var(ORDER_LIMIT_VAR)
        .ok()
        .and_then(|v| v.trim().parse().ok())
        .unwrap_or(DEFAULT_ORDER_LIMIT)
}

pub(crate) fn check_order(ring: &HyperRing) -> Result<()> {
    let limit = order_limit();
    if ring.order() > limit {
        return Err(Error::OrderLimitExceeded {
            order: ring.order(),
            limit,
        });
    }
    Ok(())
}

/// How the additive part of a hyperideal is read.
///
/// `Lenient` asks for `0 ∈ P` and closure under `f`; `Strict` also asks
/// for closure under negation, making `(P, f)` a canonical subhypergroup.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Mode {
    Strict,
    #[default]
    Lenient,
}

impl Mode {
    pub fn as_str(self) -> &'static str {
        match self {
            Mode::Strict => "strict",
            Mode::Lenient => "lenient",
        }
    }
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl serde::Serialize for Mode {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.as_str())
    }
}

impl FromStr for Mode {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "strict" => Ok(Mode::Strict),
            "lenient" => Ok(Mode::Lenient),
            other => Err(Error::Usage(format!(
                "unknown mode \"{other}\" (expected strict or lenient)"
            ))),
        }
    }
}

/// Outcome of a property check; failures carry a witness.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict<W> {
    Holds,
    Fails(W),
}

impl<W> Verdict<W> {
    pub fn holds(&self) -> bool {
        matches!(self, Verdict::Holds)
    }

    pub fn witness(&self) -> Option<&W> {
        match self {
            Verdict::Holds => None,
            Verdict::Fails(w) => Some(w),
        }
    }

    pub(crate) fn from_option(w: Option<W>) -> Self {
        w.map_or(Verdict::Holds, Verdict::Fails)
    }
}

/// The clause of the hyperideal definition that a subset breaks.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum IdealFailure {
    MissingZero,
    /// `f(args)` leaves the subset; `outside` is its smallest stray element.
    NotClosedUnderF { args: Vec<Element>, outside: Element },
    NotClosedUnderNegation { element: Element, negation: Element },
    /// `args[0]` lies in the subset but `g(args)` does not.
    NotAbsorbing { args: Vec<Element>, product: Element },
}

impl IdealFailure {
    pub fn describe(&self, ring: &HyperRing) -> String {
        match self {
            IdealFailure::MissingZero => format!("{} is missing", ring.name_of(ring.zero())),
            IdealFailure::NotClosedUnderF { args, outside } => format!(
                "f{} contains {}",
                ring.format_tuple(args),
                ring.name_of(*outside)
            ),
            IdealFailure::NotClosedUnderNegation { element, negation } => format!(
                "-{} = {} is missing",
                ring.name_of(*element),
                ring.name_of(*negation)
            ),
            IdealFailure::NotAbsorbing { args, product } => format!(
                "g{} = {} is missing",
                ring.format_tuple(args),
                ring.name_of(*product)
            ),
        }
    }
}

/// A product `g(tuple)` singled out by a check. `position` is 1-based;
/// `substituted` is the product with that factor replaced by `1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProductWitness {
    pub tuple: Vec<Element>,
    pub position: Option<usize>,
    pub product: Element,
    pub substituted: Option<Element>,
}

impl ProductWitness {
    pub(crate) fn new(tuple: &[usize], position: Option<usize>, product: usize, substituted: Option<usize>) -> Self {
        ProductWitness {
            tuple: tuple.iter().map(|&i| Element::new(i)).collect(),
            position,
            product: Element::new(product),
            substituted: substituted.map(Element::new),
        }
    }

    pub fn describe(&self, ring: &HyperRing) -> String {
        let mut s = format!(
            "g{} = {}",
            ring.format_tuple(&self.tuple),
            ring.name_of(self.product)
        );
        if let (Some(i), Some(sub)) = (self.position, self.substituted) {
            s.push_str(&format!(
                "; with 1 at position {i} the product is {}",
                ring.name_of(sub)
            ));
        }
        s
    }
}

pub(crate) fn ideal_failure(ring: &HyperRing, p: u64, mode: Mode) -> Option<IdealFailure> {
    let zero = ring.zero().index();
    if p >> zero & 1 == 0 {
        return Some(IdealFailure::MissingZero);
    }
    let members: Vec<usize> = bit_indices(p).collect();
    let mut failure = None;
    let mut args = vec![0usize; ring.m()];
    for_each_multiset(members.len(), ring.m(), |t| {
        for (a, &k) in args.iter_mut().zip(t) {
            *a = members[k];
        }
        let stray = ring.f_raw(&args) & !p;
        if stray != 0 {
            failure = Some(IdealFailure::NotClosedUnderF {
                args: args.iter().map(|&i| Element::new(i)).collect(),
                outside: Element::new(stray.trailing_zeros() as usize),
            });
            return false;
        }
        true
    });
    if failure.is_some() {
        return failure;
    }
    if mode == Mode::Strict {
        for &x in &members {
            let y = ring.negate(Element::new(x));
            if p >> y.index() & 1 == 0 {
                return Some(IdealFailure::NotClosedUnderNegation {
                    element: Element::new(x),
                    negation: y,
                });
            }
        }
    }
    for &x in &members {
        if ring.absorb_raw(x) & !p == 0 {
            continue;
        }
        let mut found = None;
        for_each_tuple(ring.order(), ring.n() - 1, |rest| {
            let mut t = Vec::with_capacity(ring.n());
            t.push(x);
            t.extend_from_slice(rest);
            let v = ring.g_raw(&t);
            if p >> v & 1 == 0 {
                found = Some(IdealFailure::NotAbsorbing {
                    args: t.iter().map(|&i| Element::new(i)).collect(),
                    product: Element::new(v),
                });
                return false;
            }
            true
        });
        return found;
    }
    None
}

pub(crate) fn is_ideal_bits(ring: &HyperRing, p: u64, mode: Mode) -> bool {
    ideal_failure(ring, p, mode).is_none()
}

/// Least hyperideal containing `seed`.
pub(crate) fn close_ideal(ring: &HyperRing, seed: u64, mode: Mode) -> u64 {
    let mut cur = seed | 1 << ring.zero().index();
    loop {
        let mut next = cur | ring.f_sets_raw(&vec![cur; ring.m()]);
        for x in bit_indices(cur) {
            next |= ring.absorb_raw(x);
            if mode == Mode::Strict {
                next |= 1 << ring.negate(Element::new(x)).index();
            }
        }
        if next == cur {
            return cur;
        }
        cur = next;
    }
}

fn non_empty(ring: &HyperRing, s: &SubsetMask) -> Result<()> {
    ring.check_mask(s)?;
    if s.is_empty() {
        return Err(Error::EmptySubset);
    }
    Ok(())
}

pub(crate) fn require_ideal(ring: &HyperRing, p: &SubsetMask, mode: Mode) -> Result<()> {
    non_empty(ring, p)?;
    match ideal_failure(ring, p.bits(), mode) {
        None => Ok(()),
        Some(f) => Err(Error::NotAHyperideal {
            subset: ring.format_subset(p),
            reason: format!("{} ({mode} mode)", f.describe(ring)),
        }),
    }
}

pub(crate) fn require_proper_ideal(ring: &HyperRing, p: &SubsetMask, mode: Mode) -> Result<()> {
    require_ideal(ring, p, mode)?;
    if *p == ring.all() {
        return Err(Error::ImproperIdeal(ring.format_subset(p)));
    }
    Ok(())
}

/// Checks every clause of the hyperideal definition under `mode`.
pub fn is_hyperideal(ring: &HyperRing, p: &SubsetMask, mode: Mode) -> Result<Verdict<IdealFailure>> {
    non_empty(ring, p)?;
    Ok(Verdict::from_option(ideal_failure(ring, p.bits(), mode)))
}

/// The least hyperideal containing `x`: start from all products
/// `g(r, x, 1^(n-2))` and close under `f`, absorption and (strict mode)
/// negation.
pub fn generated_hyperideal(ring: &HyperRing, x: &SubsetMask, mode: Mode) -> Result<SubsetMask> {
    non_empty(ring, x)?;
    let mut seed = 0u64;
    for t in bit_indices(x.bits()) {
        for r in 0..ring.order() {
            seed |= 1 << ring.mul_raw(r, t);
        }
    }
    Ok(ring.mask(close_ideal(ring, seed, mode)))
}

/// Every hyperideal, the whole ring included, in ascending mask order.
pub fn enumerate_hyperideals(ring: &HyperRing, mode: Mode) -> Result<Vec<SubsetMask>> {
    check_order(ring)?;
    Ok(hyperideal_bits(ring, mode)
        .into_iter()
        .map(|b| ring.mask(b))
        .collect())
}

pub(crate) fn hyperideal_bits(ring: &HyperRing, mode: Mode) -> Vec<u64> {
    closed_sets(ring.all().bits(), |s| close_ideal(ring, s, mode))
}

/// First ordered tuple whose product lies in `p` although no factor does.
pub(crate) fn prime_failure(ring: &HyperRing, p: u64) -> Option<ProductWitness> {
    let mut w = None;
    ring.for_each_product(|t, v| {
        if p >> v & 1 == 1 && t.iter().all(|&x| p >> x & 1 == 0) {
            w = Some(ProductWitness::new(t, None, v, None));
            return false;
        }
        true
    });
    w
}

/// First (tuple, position) with `g(tuple) ∈ p`, the factor outside `p`, and
/// the product with that factor replaced by `1` outside `target`.
pub(crate) fn substitution_failure(
    ring: &HyperRing,
    p: u64,
    factor_ok: impl Fn(usize) -> bool,
    target: u64,
) -> Option<ProductWitness> {
    let one = ring.one().index();
    let mut w = None;
    let mut buf = vec![0usize; ring.n()];
    ring.for_each_product(|t, v| {
        if p >> v & 1 == 0 {
            return true;
        }
        for i in 0..t.len() {
            if !factor_ok(t[i]) {
                continue;
            }
            buf.copy_from_slice(t);
            buf[i] = one;
            let sub = ring.g_raw(&buf);
            if target >> sub & 1 == 0 {
                w = Some(ProductWitness::new(t, Some(i + 1), v, Some(sub)));
                return false;
            }
        }
        true
    });
    w
}

fn semiprime_failure(ring: &HyperRing, p: u64) -> Option<Element> {
    ring.elements().find(|&x| {
        let sq = ring.power(x, ring.n()).index();
        p >> sq & 1 == 1 && p >> x.index() & 1 == 0
    })
}

fn is_subset_bits(a: u64, b: u64) -> bool {
    a & !b == 0
}

/// The hyperideals of a ring under one mode, with the primes and maximal
/// ones picked out. Computed once and queried many times.
#[derive(Clone, Debug)]
pub struct IdealLattice<'r> {
    ring: &'r HyperRing,
    mode: Mode,
    all: Vec<u64>,
    primes: Vec<u64>,
    maximals: Vec<u64>,
}

impl<'r> IdealLattice<'r> {
    pub fn new(ring: &'r HyperRing, mode: Mode) -> Result<Self> {
        check_order(ring)?;
        let all = hyperideal_bits(ring, mode);
        let whole = ring.all().bits();
        let proper: Vec<u64> = all.iter().copied().filter(|&b| b != whole).collect();
        let primes = proper
            .iter()
            .copied()
            .filter(|&b| prime_failure(ring, b).is_none())
            .collect();
        let maximals = proper
            .iter()
            .copied()
            .filter(|&b| !proper.iter().any(|&q| q != b && is_subset_bits(b, q)))
            .collect();
        Ok(IdealLattice {
            ring,
            mode,
            all,
            primes,
            maximals,
        })
    }

    pub fn ring(&self) -> &'r HyperRing {
        self.ring
    }

    pub fn mode(&self) -> Mode {
        self.mode
    }

    fn masks(&self, v: &[u64]) -> Vec<SubsetMask> {
        v.iter().map(|&b| self.ring.mask(b)).collect()
    }

    /// All hyperideals including the whole ring, ascending.
    pub fn hyperideals(&self) -> Vec<SubsetMask> {
        self.masks(&self.all)
    }

    pub fn proper(&self) -> Vec<SubsetMask> {
        let whole = self.ring.all().bits();
        self.all
            .iter()
            .filter(|&&b| b != whole)
            .map(|&b| self.ring.mask(b))
            .collect()
    }

    pub fn primes(&self) -> Vec<SubsetMask> {
        self.masks(&self.primes)
    }

    pub fn maximals(&self) -> Vec<SubsetMask> {
        self.masks(&self.maximals)
    }

    pub fn contains(&self, p: &SubsetMask) -> bool {
        self.all.binary_search(&p.bits()).is_ok()
    }

    pub(crate) fn bits(&self) -> &[u64] {
        &self.all
    }

    pub(crate) fn prime_bits(&self) -> &[u64] {
        &self.primes
    }

    pub(crate) fn radical_bits(&self, p: u64) -> u64 {
        self.primes
            .iter()
            .filter(|&&q| is_subset_bits(p, q))
            .fold(self.ring.all().bits(), |acc, &q| acc & q)
    }

    /// Intersection of the primes containing `p`; the whole ring if none.
    pub fn radical(&self, p: &SubsetMask) -> Result<SubsetMask> {
        self.require(p)?;
        Ok(self.ring.mask(self.radical_bits(p.bits())))
    }

    fn require(&self, p: &SubsetMask) -> Result<()> {
        require_ideal(self.ring, p, self.mode)
    }

    pub(crate) fn minimal_primes_over_bits(&self, p: u64) -> Vec<u64> {
        let over: Vec<u64> = self
            .primes
            .iter()
            .copied()
            .filter(|&q| is_subset_bits(p, q))
            .collect();
        over.iter()
            .copied()
            .filter(|&q| !over.iter().any(|&r| r != q && is_subset_bits(r, q)))
            .collect()
    }

    /// Inclusion-minimal primes containing `p`.
    pub fn minimal_primes_over(&self, p: &SubsetMask) -> Result<Vec<SubsetMask>> {
        require_proper_ideal(self.ring, p, self.mode)?;
        Ok(self.masks(&self.minimal_primes_over_bits(p.bits())))
    }

    pub fn classify(&self, p: &SubsetMask) -> Result<IdealProfile> {
        require_proper_ideal(self.ring, p, self.mode)?;
        let ring = self.ring;
        let bits = p.bits();
        let radical = self.radical_bits(bits);
        let whole = ring.all().bits();
        let maximal = self
            .all
            .iter()
            .copied()
            .find(|&q| q != bits && q != whole && is_subset_bits(bits, q))
            .map(|q| ring.mask(q));
        Ok(IdealProfile {
            subset: *p,
            mode: self.mode,
            is_hyperideal: Verdict::Holds,
            proper: true,
            prime: Verdict::from_option(prime_failure(ring, bits)),
            primary: Verdict::from_option(substitution_failure(
                ring,
                bits,
                |x| bits >> x & 1 == 0,
                radical,
            )),
            semiprime: Verdict::from_option(semiprime_failure(ring, bits)),
            maximal: Verdict::from_option(maximal),
            radical: ring.mask(radical),
        })
    }

    pub fn special_sets(&self) -> SpecialSets {
        let ring = self.ring;
        let one = ring.one().index();
        let units = ring.subset(ring.elements().filter(|&p| {
            (0..ring.order()).any(|q| ring.mul_raw(p.index(), q) == one)
        }));
        let regulars = ring.subset(ring.elements().filter(|&p| {
            let x = ring.power(p, ring.n()).index();
            ring.absorb_raw(x) >> p.index() & 1 == 1
        }));
        let jacobson = self
            .maximals
            .iter()
            .fold(ring.all().bits(), |acc, &m| acc & m);
        let min_primes = self
            .primes
            .iter()
            .copied()
            .filter(|&q| !self.primes.iter().any(|&r| r != q && is_subset_bits(r, q)))
            .map(|q| ring.mask(q))
            .collect();
        SpecialSets {
            units,
            regulars,
            jacobson: ring.mask(jacobson),
            min_primes,
        }
    }
}

/// Classification of one proper hyperideal. Negative verdicts carry the
/// first witness in lexicographic order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdealProfile {
    pub subset: SubsetMask,
    pub mode: Mode,
    pub is_hyperideal: Verdict<IdealFailure>,
    pub proper: bool,
    /// Elementwise: a product in P needs a factor in P.
    pub prime: Verdict<ProductWitness>,
    /// For a product in P, each factor outside P may be replaced by 1 with
    /// the result still in r(P).
    pub primary: Verdict<ProductWitness>,
    /// The witness is an element outside P whose n-th power lies in P.
    pub semiprime: Verdict<Element>,
    /// The witness is a proper hyperideal strictly above P.
    pub maximal: Verdict<SubsetMask>,
    pub radical: SubsetMask,
}

/// Units, regular elements, the Jacobson radical and the minimal primes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpecialSets {
    pub units: SubsetMask,
    pub regulars: SubsetMask,
    pub jacobson: SubsetMask,
    pub min_primes: Vec<SubsetMask>,
}

/// Classifies a proper hyperideal.
pub fn classify_ideal(ring: &HyperRing, p: &SubsetMask, mode: Mode) -> Result<IdealProfile> {
    require_proper_ideal(ring, p, mode)?;
    IdealLattice::new(ring, mode)?.classify(p)
}

/// `r(P)`: intersection of all primes containing `P`, or the whole ring.
pub fn radical(ring: &HyperRing, p: &SubsetMask, mode: Mode) -> Result<SubsetMask> {
    require_ideal(ring, p, mode)?;
    IdealLattice::new(ring, mode)?.radical(p)
}

pub fn special_sets(ring: &HyperRing, mode: Mode) -> Result<SpecialSets> {
    Ok(IdealLattice::new(ring, mode)?.special_sets())
}

pub fn minimal_primes_over(ring: &HyperRing, p: &SubsetMask, mode: Mode) -> Result<Vec<SubsetMask>> {
    require_proper_ideal(ring, p, mode)?;
    IdealLattice::new(ring, mode)?.minimal_primes_over(p)
}

/// Comparison of `p ∈ r(P)` with the powers of `p`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PowerDiagnostic {
    pub element: Element,
    pub in_radical: bool,
    /// Smallest `w` with `power(p, w) ∈ P`.
    pub first_power_in_ideal: Option<usize>,
    /// Number of exponents tried before the power sequence repeated.
    pub exponents_tried: usize,
}

impl PowerDiagnostic {
    /// False when `p ∈ r(P)` but no power of `p` lands in `P`.
    pub fn consistent(&self) -> bool {
        !self.in_radical || self.first_power_in_ideal.is_some()
    }
}

/// Walks `power(p, 1), power(p, 2), …` until a value repeats.
pub fn radical_power_diagnostic(
    ring: &HyperRing,
    p: &SubsetMask,
    x: Element,
    mode: Mode,
) -> Result<PowerDiagnostic> {
    let r = radical(ring, p, mode)?;
    Ok(power_diagnostic(ring, p.bits(), r.bits(), x))
}

pub(crate) fn power_diagnostic(ring: &HyperRing, p: u64, radical: u64, x: Element) -> PowerDiagnostic {
    let mut seen = 0u64;
    let mut first = None;
    let mut w = 0;
    loop {
        w += 1;
        let v = ring.power(x, w).index();
        if seen >> v & 1 == 1 {
            w -= 1;
            break;
        }
        seen |= 1 << v;
        if first.is_none() && p >> v & 1 == 1 {
            first = Some(w);
        }
    }
    PowerDiagnostic {
        element: x,
        in_radical: radical >> x.index() & 1 == 1,
        first_power_in_ideal: first,
        exponents_tried: w,
    }
}
