use std::collections::hash_map::DefaultHasher;
use std::fmt;
use std::hash::{Hash, Hasher};

use super::axioms::{check_axioms, AxiomReport, Distributivity};
use super::spec::{serialize_spec, HyperRingSpec};
use super::tables::Tables;
use super::tuples::for_each_tuple;
use crate::error::{Error, Result};
use crate::subset::{Element, RingId, SubsetMask};

/// A finite commutative Krasner (m,n)-hyperring whose axioms have been
/// verified. Immutable; all queries are pure table lookups.
#[derive(Clone)]
pub struct HyperRing {
    spec: HyperRingSpec,
    id: RingId,
    tables: Tables,
    neg: Vec<u8>,
    mul: Vec<u8>,
    absorb: Vec<u64>,
    report: AxiomReport,
}

impl fmt::Debug for HyperRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("HyperRing")
            .field("name", &self.spec.name)
            .field("m", &self.tables.m)
            .field("n", &self.tables.n)
            .field("order", &self.tables.order)
            .field("law", &self.report.law)
            .finish()
    }
}

/// Verifies every axiom with exact distributivity.
pub fn verify_axioms(spec: HyperRingSpec) -> Result<HyperRing> {
    verify_axioms_with(spec, Distributivity::Equal)
}

/// Verifies every axiom, judging distributivity by `law`. On failure the
/// full report is returned inside [`Error::Axioms`].
pub fn verify_axioms_with(spec: HyperRingSpec, law: Distributivity) -> Result<HyperRing> {
    let report = check_axioms(&spec, law)?;
    if !report.all_pass() {
        return Err(Error::Axioms(Box::new(report)));
    }
    let tables = Tables::from_spec(&spec)?;
    let order = tables.order;
    let mut neg = vec![0u8; order];
    let mut args = vec![tables.zero; tables.m];
    for (x, slot) in neg.iter_mut().enumerate() {
        args[0] = x;
        for y in 0..order {
            args[1] = y;
            if tables.f(&args) >> tables.zero & 1 == 1 {
                *slot = y as u8;
                break;
            }
        }
    }
    let mut mul = vec![0u8; order * order];
    let mut gargs = vec![tables.one; tables.n];
    for a in 0..order {
        for b in 0..order {
            gargs[0] = a;
            gargs[1] = b;
            mul[a * order + b] = tables.g(&gargs) as u8;
        }
    }
    // absorb[x] = { g(x, r_2..r_n) : r ∈ A^(n-1) }
    let mut absorb = vec![0u64; order];
    for_each_tuple(order, tables.n, |t| {
        absorb[t[0]] |= 1 << tables.g(t);
        true
    });
    let mut hasher = DefaultHasher::new();
    serialize_spec(&spec).hash(&mut hasher);
    law.hash(&mut hasher);
    Ok(HyperRing {
        id: RingId(hasher.finish()),
        spec,
        tables,
        neg,
        mul,
        absorb,
        report,
    })
}

impl HyperRing {
    pub fn name(&self) -> &str {
        &self.spec.name
    }

    pub fn spec(&self) -> &HyperRingSpec {
        &self.spec
    }

    pub fn id(&self) -> RingId {
        self.id
    }

    pub fn order(&self) -> usize {
        self.tables.order
    }

    /// Arity of the hyperaddition.
    pub fn m(&self) -> usize {
        self.tables.m
    }

    /// Arity of the multiplication.
    pub fn n(&self) -> usize {
        self.tables.n
    }

    pub fn zero(&self) -> Element {
        Element(self.tables.zero as u8)
    }

    pub fn one(&self) -> Element {
        Element(self.tables.one as u8)
    }

    pub fn axiom_report(&self) -> &AxiomReport {
        &self.report
    }

    pub fn distributivity(&self) -> Distributivity {
        self.report.law
    }

    pub fn elements(&self) -> impl Iterator<Item = Element> {
        (0..self.order() as u8).map(Element)
    }

    pub fn element(&self, name: &str) -> Result<Element> {
        self.spec.index_of(name).map(Element::new)
    }

    pub fn name_of(&self, e: Element) -> &str {
        &self.spec.elements[e.index()]
    }

    pub fn all(&self) -> SubsetMask {
        let bits = if self.order() == 64 {
            u64::MAX
        } else {
            (1u64 << self.order()) - 1
        };
        SubsetMask::from_bits(self.id, bits)
    }

    pub fn empty(&self) -> SubsetMask {
        SubsetMask::empty(self.id)
    }

    pub fn singleton(&self, e: Element) -> SubsetMask {
        self.empty().with(e)
    }

    pub fn subset<I: IntoIterator<Item = Element>>(&self, items: I) -> SubsetMask {
        items.into_iter().fold(self.empty(), |acc, e| acc.with(e))
    }

    pub(crate) fn mask(&self, bits: u64) -> SubsetMask {
        SubsetMask::from_bits(self.id, bits & self.all().bits())
    }

    /// Comma-joined element names (no whitespace), e.g. `0,2`.
    pub fn parse_subset(&self, text: &str) -> Result<SubsetMask> {
        if text.chars().any(char::is_whitespace) {
            return Err(Error::Usage(format!(
                "subset \"{text}\" contains whitespace; use comma-joined names"
            )));
        }
        if text.is_empty() {
            return Err(Error::EmptySubset);
        }
        text.split(',')
            .map(|name| self.element(name))
            .collect::<Result<Vec<_>>>()
            .map(|v| self.subset(v))
    }

    /// Parses a comma-joined element tuple, keeping order and repeats.
    pub fn parse_tuple(&self, text: &str) -> Result<Vec<Element>> {
        text.split(',').map(|name| self.element(name)).collect()
    }

    /// `{a,b}` with element names.
    pub fn format_subset(&self, s: &SubsetMask) -> String {
        let names: Vec<&str> = s.iter().map(|e| self.name_of(e)).collect();
        format!("{{{}}}", names.join(","))
    }

    /// `(a,b,c)` with element names.
    pub fn format_tuple(&self, t: &[Element]) -> String {
        let names: Vec<&str> = t.iter().map(|&e| self.name_of(e)).collect();
        format!("({})", names.join(","))
    }

    pub fn check_mask(&self, s: &SubsetMask) -> Result<()> {
        if s.ring_id() == self.id {
            Ok(())
        } else {
            Err(Error::RingMismatch)
        }
    }

    fn check_arity(&self, expected: usize, got: usize) -> Result<()> {
        if expected == got {
            Ok(())
        } else {
            Err(Error::ArityMismatch { expected, got })
        }
    }

    /// Table value of the hyperaddition on `m` elements.
    pub fn eval_f(&self, args: &[Element]) -> Result<SubsetMask> {
        self.check_arity(self.m(), args.len())?;
        let ix: Vec<usize> = args.iter().map(|e| e.index()).collect();
        Ok(self.mask(self.tables.f(&ix)))
    }

    /// Union of the hyperaddition over all choice tuples from `m` subsets.
    pub fn eval_f_sets(&self, args: &[SubsetMask]) -> Result<SubsetMask> {
        self.check_arity(self.m(), args.len())?;
        for a in args {
            self.check_mask(a)?;
        }
        let bits: Vec<u64> = args.iter().map(SubsetMask::bits).collect();
        Ok(self.mask(self.tables.f_sets(&bits)))
    }

    pub fn eval_g(&self, args: &[Element]) -> Result<Element> {
        self.check_arity(self.n(), args.len())?;
        let ix: Vec<usize> = args.iter().map(|e| e.index()).collect();
        Ok(Element(self.tables.g(&ix) as u8))
    }

    /// All products of choice tuples from `n` subsets.
    pub fn eval_g_sets(&self, args: &[SubsetMask]) -> Result<SubsetMask> {
        self.check_arity(self.n(), args.len())?;
        for a in args {
            self.check_mask(a)?;
        }
        let bits: Vec<u64> = args.iter().map(SubsetMask::bits).collect();
        Ok(self.mask(self.tables.g_sets(&bits)))
    }

    /// Raw index-level hyperaddition; `args.len()` must be `m`.
    #[inline]
    pub(crate) fn f_raw(&self, args: &[usize]) -> u64 {
        self.tables.f(args)
    }

    /// Raw index-level multiplication; `args.len()` must be `n`.
    #[inline]
    pub(crate) fn g_raw(&self, args: &[usize]) -> usize {
        self.tables.g(args)
    }

    pub(crate) fn f_sets_raw(&self, sets: &[u64]) -> u64 {
        self.tables.f_sets(sets)
    }

    /// `g(a, b, 1^(n-2))`.
    #[inline]
    pub fn mul(&self, a: Element, b: Element) -> Element {
        Element(self.mul[a.index() * self.order() + b.index()])
    }

    #[inline]
    pub(crate) fn mul_raw(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.order() + b] as usize
    }

    /// Every product with `x` as one factor.
    #[inline]
    pub(crate) fn absorb_raw(&self, x: usize) -> u64 {
        self.absorb[x]
    }

    /// The unique `y` with `0 ∈ f(x, y, 0^(m-2))`.
    pub fn negate(&self, x: Element) -> Element {
        Element(self.neg[x.index()])
    }

    /// `g(p^(w), 1^(n-w))` for `w ≤ n`; beyond that the iterated product
    /// `g_(l)` over `p^(w)` padded with `1` to length `l(n-1)+1`.
    ///
    /// # Panics
    /// If `w == 0`.
    pub fn power(&self, p: Element, w: usize) -> Element {
        assert!(w >= 1, "powers start at 1");
        let n = self.n();
        let one = self.tables.one;
        let p = p.index();
        let mut args = vec![one; n];
        if w <= n {
            args[..w].fill(p);
            return Element(self.tables.g(&args) as u8);
        }
        let l = (w - 1).div_ceil(n - 1);
        let len = l * (n - 1) + 1;
        let item = |k: usize| if k < w { p } else { one };
        for (k, a) in args.iter_mut().enumerate() {
            *a = item(k);
        }
        let mut acc = self.tables.g(&args);
        let mut k = n;
        while k < len {
            args[0] = acc;
            for a in args.iter_mut().skip(1) {
                *a = item(k);
                k += 1;
            }
            acc = self.tables.g(&args);
        }
        Element(acc as u8)
    }

    /// Every ordered `n`-tuple with its product, in lexicographic order.
    pub(crate) fn for_each_product(&self, mut visit: impl FnMut(&[usize], usize) -> bool) {
        for_each_tuple(self.order(), self.n(), |t| visit(t, self.tables.g(t)));
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::ring_from_ring_table;

    fn zmod(k: usize) -> HyperRing {
        let add: Vec<Vec<usize>> = (0..k).map(|a| (0..k).map(|b| (a + b) % k).collect()).collect();
        let mul: Vec<Vec<usize>> = (0..k).map(|a| (0..k).map(|b| (a * b) % k).collect()).collect();
        let spec = ring_from_ring_table(&format!("z{k}"), &add, &mul, 0, 1).unwrap();
        verify_axioms(spec).unwrap()
    }

    #[test]
    fn powers_in_z6() {
        let z6 = zmod(6);
        assert_eq!(z6.power(Element(2), 3), Element(2));
        assert_eq!(z6.power(Element(5), 1), Element(5));
        assert_eq!(z6.power(Element(5), 2), Element(1));
    }

    #[test]
    fn negation_in_z6() {
        let z6 = zmod(6);
        assert_eq!(z6.negate(Element(2)), Element(4));
        assert_eq!(z6.negate(Element(0)), Element(0));
    }

    #[test]
    fn arity_is_checked() {
        let z6 = zmod(6);
        assert!(matches!(
            z6.eval_g(&[Element(1)]),
            Err(Error::ArityMismatch { expected: 2, got: 1 })
        ));
        assert!(z6.eval_f(&[Element(1), Element(2), Element(3)]).is_err());
    }

    #[test]
    fn subset_parsing_rejects_whitespace() {
        let z6 = zmod(6);
        assert!(z6.parse_subset("0, 3").is_err());
        assert!(matches!(z6.parse_subset("0,9"), Err(Error::UnknownElement(e)) if e == "9"));
        assert_eq!(z6.format_subset(&z6.parse_subset("3,0").unwrap()), "{0,3}");
    }
}
