//! Classical rings as hyperrings, finite products, quotients by a
//! hyperideal, homomorphisms and the transport of subsets along them.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::ideals::{require_ideal, require_proper_ideal, Mode};
use crate::kernel::tuples::{for_each_multiset, for_each_tuple};
use crate::kernel::{check_axioms, verify_axioms_with, Distributivity, HyperRing, HyperRingSpec};
use crate::subset::{bit_indices, Element, SubsetMask, MAX_ORDER};

/// A classical commutative unital ring given by full addition and
/// multiplication tables, presented as a (2,2)-hyperring with singleton sums.
/// Element names are the decimal indices.
pub fn ring_from_ring_table(
    name: &str,
    add: &[Vec<usize>],
    mul: &[Vec<usize>],
    zero: usize,
    one: usize,
) -> Result<HyperRingSpec> {
    let order = add.len();
    for (table, rows) in [("addition", add), ("multiplication", mul)] {
        if rows.len() != order || rows.iter().any(|r| r.len() != order) {
            return Err(Error::Usage(format!("{table} table must be {order}x{order}")));
        }
        for (a, row) in rows.iter().enumerate() {
            for (b, cell) in row.iter().enumerate().skip(a + 1) {
                if *cell != rows[b][a] {
                    return Err(Error::NotCommutative { table, a, b });
                }
            }
        }
    }
    let elements = (0..order).map(|i| i.to_string()).collect();
    let spec = HyperRingSpec::from_operations(
        name,
        2,
        2,
        elements,
        zero,
        one,
        |k| vec![add[k[0]][k[1]]],
        |k| mul[k[0]][k[1]],
    )?;
    let report = check_axioms(&spec, Distributivity::Equal)?;
    if !report.all_pass() {
        return Err(Error::NotARing(Box::new(report)));
    }
    Ok(spec)
}

/// `Z/k` as a (2,2)-hyperring.
pub fn integers_mod(k: usize) -> Result<HyperRingSpec> {
    let add: Vec<Vec<usize>> = (0..k).map(|a| (0..k).map(|b| (a + b) % k).collect()).collect();
    let mul: Vec<Vec<usize>> = (0..k).map(|a| (0..k).map(|b| (a * b) % k).collect()).collect();
    ring_from_ring_table(&format!("z{k}"), &add, &mul, 0, 1 % k.max(1))
}

/// Mixed-radix coordinates, first factor most significant.
fn decode(orders: &[usize], mut x: usize, out: &mut [usize]) {
    for j in (0..orders.len()).rev() {
        out[j] = x % orders[j];
        x /= orders[j];
    }
}

fn encode(orders: &[usize], coords: &[usize]) -> usize {
    coords.iter().zip(orders).fold(0, |acc, (&c, &o)| acc * o + c)
}

/// Componentwise product. Element names join the factor names with `|`;
/// distributivity is judged by the weakest law among the factors.
pub fn product_ring(rings: &[&HyperRing]) -> Result<HyperRing> {
    let first = rings
        .first()
        .ok_or_else(|| Error::Usage("a product needs at least one factor".into()))?;
    let (m, n) = (first.m(), first.n());
    for r in rings {
        if r.m() != m {
            return Err(Error::ArityMismatch { expected: m, got: r.m() });
        }
        if r.n() != n {
            return Err(Error::ArityMismatch { expected: n, got: r.n() });
        }
    }
    let orders: Vec<usize> = rings.iter().map(|r| r.order()).collect();
    let order = orders
        .iter()
        .try_fold(1usize, |acc, &o| acc.checked_mul(o).filter(|&v| v <= MAX_ORDER))
        .ok_or(Error::OrderLimitExceeded {
            order: orders.iter().product(),
            limit: MAX_ORDER,
        })?;
    let k = rings.len();
    let mut coords = vec![0usize; k];
    let elements = (0..order)
        .map(|x| {
            decode(&orders, x, &mut coords);
            let names: Vec<&str> = rings
                .iter()
                .zip(&coords)
                .map(|(r, &c)| r.name_of(Element::new(c)))
                .collect();
            names.join("|")
        })
        .collect();
    let zero = encode(&orders, &rings.iter().map(|r| r.zero().index()).collect::<Vec<_>>());
    let one = encode(&orders, &rings.iter().map(|r| r.one().index()).collect::<Vec<_>>());
    let name = rings.iter().map(|r| r.name()).collect::<Vec<_>>().join("x");
    let law = rings
        .iter()
        .fold(Distributivity::Equal, |acc, r| acc.meet(r.distributivity()));

    let split = |key: &[usize]| -> Vec<Vec<usize>> {
        let mut cols = vec![vec![0usize; key.len()]; k];
        let mut c = vec![0usize; k];
        for (i, &x) in key.iter().enumerate() {
            decode(&orders, x, &mut c);
            for j in 0..k {
                cols[j][i] = c[j];
            }
        }
        cols
    };
    let f = |key: &[usize]| {
        let cols = split(key);
        let parts: Vec<Vec<usize>> = rings
            .iter()
            .zip(&cols)
            .map(|(r, col)| bit_indices(r.f_raw(col)).collect())
            .collect();
        let mut out = Vec::new();
        let mut idx = vec![0usize; k];
        loop {
            let c: Vec<usize> = (0..k).map(|j| parts[j][idx[j]]).collect();
            out.push(encode(&orders, &c));
            let mut j = k;
            loop {
                if j == 0 {
                    return out;
                }
                j -= 1;
                idx[j] += 1;
                if idx[j] < parts[j].len() {
                    break;
                }
                idx[j] = 0;
            }
        }
    };
    let g = |key: &[usize]| {
        let cols = split(key);
        let c: Vec<usize> = rings.iter().zip(&cols).map(|(r, col)| r.g_raw(col)).collect();
        encode(&orders, &c)
    };
    let spec = HyperRingSpec::from_operations(name, m, n, elements, zero, one, f, g)?;
    verify_axioms_with(spec, law)
}

/// Coordinates of a product-ring element.
pub fn product_coordinates(orders: &[usize], x: Element) -> Vec<Element> {
    let mut c = vec![0usize; orders.len()];
    decode(orders, x.index(), &mut c);
    c.into_iter().map(Element::new).collect()
}

/// The product-ring element with the given coordinates.
pub fn product_element(orders: &[usize], coords: &[Element]) -> Element {
    let c: Vec<usize> = coords.iter().map(|e| e.index()).collect();
    Element::new(encode(orders, &c))
}

/// The first clause of the homomorphism definition that a map breaks.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum HomViolation {
    /// `ψ(1) ≠ 1`.
    One { image: Element },
    /// `ψ(f(args)) ≠ f(ψ(args))`.
    Addition { args: Vec<Element> },
    /// `ψ(g(args)) ≠ g(ψ(args))`.
    Multiplication { args: Vec<Element> },
}

impl HomViolation {
    pub fn describe(&self, source: &HyperRing) -> String {
        match self {
            HomViolation::One { .. } => "the identity is not sent to the identity".to_string(),
            HomViolation::Addition { args } => {
                format!("f{} is not preserved", source.format_tuple(args))
            }
            HomViolation::Multiplication { args } => {
                format!("g{} is not preserved", source.format_tuple(args))
            }
        }
    }
}

/// A verified homomorphism between two hyperrings of the same arities.
#[derive(Clone, Debug)]
pub struct HyperRingHom {
    source: Arc<HyperRing>,
    target: Arc<HyperRing>,
    map: Vec<u8>,
}

fn hom_violation(source: &HyperRing, target: &HyperRing, map: &[u8]) -> Option<HomViolation> {
    let psi = |x: usize| map[x] as usize;
    let image = psi(source.one().index());
    if image != target.one().index() {
        return Some(HomViolation::One {
            image: Element::new(image),
        });
    }
    let mut found = None;
    let mut mapped = vec![0usize; source.m()];
    for_each_multiset(source.order(), source.m(), |t| {
        let lhs = bit_indices(source.f_raw(t)).fold(0u64, |acc, x| acc | 1 << psi(x));
        for (a, &x) in mapped.iter_mut().zip(t) {
            *a = psi(x);
        }
        if lhs != target.f_raw(&mapped) {
            found = Some(HomViolation::Addition {
                args: t.iter().map(|&x| Element::new(x)).collect(),
            });
            return false;
        }
        true
    });
    if found.is_some() {
        return found;
    }
    let mut mapped = vec![0usize; source.n()];
    for_each_multiset(source.order(), source.n(), |t| {
        for (a, &x) in mapped.iter_mut().zip(t) {
            *a = psi(x);
        }
        if psi(source.g_raw(t)) != target.g_raw(&mapped) {
            found = Some(HomViolation::Multiplication {
                args: t.iter().map(|&x| Element::new(x)).collect(),
            });
            return false;
        }
        true
    });
    found
}

/// Verifies `ψ(1) = 1`, then `ψ(f(u)) = f(ψ(u))` as sets, then
/// `ψ(g(v)) = g(ψ(v))`, over all multisets of the source.
pub fn check_homomorphism(
    source: &Arc<HyperRing>,
    target: &Arc<HyperRing>,
    map: &[Element],
) -> Result<std::result::Result<HyperRingHom, HomViolation>> {
    if source.m() != target.m() {
        return Err(Error::ArityMismatch {
            expected: source.m(),
            got: target.m(),
        });
    }
    if source.n() != target.n() {
        return Err(Error::ArityMismatch {
            expected: source.n(),
            got: target.n(),
        });
    }
    if map.len() != source.order() {
        return Err(Error::Usage(format!(
            "a map from {} needs {} images, got {}",
            source.name(),
            source.order(),
            map.len()
        )));
    }
    if let Some(bad) = map.iter().find(|e| e.index() >= target.order()) {
        return Err(Error::UnknownElement(format!("#{}", bad.index())));
    }
    let raw: Vec<u8> = map.iter().map(|e| e.index() as u8).collect();
    Ok(match hom_violation(source, target, &raw) {
        None => Ok(HyperRingHom {
            source: Arc::clone(source),
            target: Arc::clone(target),
            map: raw,
        }),
        Some(v) => Err(v),
    })
}

/// Every homomorphism `source → target`, in lexicographic order of the
/// image tuple. Gives up (returns `None`) beyond `max_maps` candidate maps.
pub fn homomorphisms(
    source: &Arc<HyperRing>,
    target: &Arc<HyperRing>,
    max_maps: usize,
) -> Option<Vec<HyperRingHom>> {
    if source.m() != target.m() || source.n() != target.n() {
        return Some(Vec::new());
    }
    let count = (0..source.order()).try_fold(1usize, |acc, _| acc.checked_mul(target.order()))?;
    if count > max_maps {
        return None;
    }
    let mut out = Vec::new();
    let one = source.one().index();
    let target_one = target.one().index();
    for_each_tuple(target.order(), source.order(), |t| {
        if t[one] == target_one {
            let raw: Vec<u8> = t.iter().map(|&x| x as u8).collect();
            if hom_violation(source, target, &raw).is_none() {
                out.push(HyperRingHom {
                    source: Arc::clone(source),
                    target: Arc::clone(target),
                    map: raw,
                });
            }
        }
        true
    });
    Some(out)
}

impl HyperRingHom {
    pub fn source(&self) -> &Arc<HyperRing> {
        &self.source
    }

    pub fn target(&self) -> &Arc<HyperRing> {
        &self.target
    }

    pub fn apply(&self, x: Element) -> Element {
        Element::new(self.map[x.index()] as usize)
    }

    pub fn images(&self) -> Vec<Element> {
        self.map.iter().map(|&y| Element::new(y as usize)).collect()
    }

    pub fn image(&self, p: &SubsetMask) -> Result<SubsetMask> {
        self.source.check_mask(p)?;
        Ok(self.target.mask(self.image_bits(p.bits())))
    }

    pub fn preimage(&self, q: &SubsetMask) -> Result<SubsetMask> {
        self.target.check_mask(q)?;
        Ok(self.source.mask(self.preimage_bits(q.bits())))
    }

    pub(crate) fn image_bits(&self, p: u64) -> u64 {
        bit_indices(p).fold(0, |acc, x| acc | 1 << self.map[x])
    }

    pub(crate) fn preimage_bits(&self, q: u64) -> u64 {
        (0..self.map.len())
            .filter(|&x| q >> self.map[x] & 1 == 1)
            .fold(0, |acc, x| acc | 1 << x)
    }

    /// Preimage of the target's zero.
    pub fn kernel(&self) -> SubsetMask {
        self.source
            .mask(self.preimage_bits(1 << self.target.zero().index()))
    }

    pub fn is_surjective(&self) -> bool {
        self.image_bits(self.source.all().bits()) == self.target.all().bits()
    }

    /// `other ∘ self`.
    pub fn then(&self, other: &HyperRingHom) -> Result<HyperRingHom> {
        if self.target.id() != other.source.id() {
            return Err(Error::RingMismatch);
        }
        Ok(HyperRingHom {
            source: Arc::clone(&self.source),
            target: Arc::clone(&other.target),
            map: self.map.iter().map(|&y| other.map[y as usize]).collect(),
        })
    }
}

/// Which way a subset travels along a homomorphism.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Direction {
    Image,
    Preimage,
}

/// Moves a hyperideal along `hom`. Images need a surjective map whose
/// kernel lies inside the ideal.
pub fn transport_ideal(hom: &HyperRingHom, direction: Direction, p: &SubsetMask, mode: Mode) -> Result<SubsetMask> {
    match direction {
        Direction::Preimage => {
            require_ideal(&hom.target, p, mode)?;
            hom.preimage(p)
        }
        Direction::Image => {
            require_ideal(&hom.source, p, mode)?;
            if !hom.is_surjective() {
                return Err(Error::HypothesisViolation(format!(
                    "{} -> {} is not surjective",
                    hom.source.name(),
                    hom.target.name()
                )));
            }
            let ker = hom.kernel();
            if !ker.is_subset(p) {
                return Err(Error::HypothesisViolation(format!(
                    "the kernel {} is not contained in {}",
                    hom.source.format_subset(&ker),
                    hom.source.format_subset(p)
                )));
            }
            hom.image(p)
        }
    }
}

/// `A/P` with its cosets and the projection `x ↦ f(x, P, 0^(m-2))`.
#[derive(Clone, Debug)]
pub struct QuotientRing {
    pub base: Arc<HyperRing>,
    pub modulus: SubsetMask,
    /// Distinct cosets, ordered by their smallest member.
    pub cosets: Vec<SubsetMask>,
    pub quotient: Arc<HyperRing>,
    pub projection: HyperRingHom,
}

fn coset_bits(ring: &HyperRing, x: usize, p: u64) -> u64 {
    let mut sets = vec![1u64 << ring.zero().index(); ring.m()];
    sets[0] = 1 << x;
    sets[1] = p;
    ring.f_sets_raw(&sets)
}

/// Builds the quotient after checking that the cosets partition the ring
/// and that the induced `f` and `g` do not depend on representatives.
pub fn quotient_ring(base: &Arc<HyperRing>, p: &SubsetMask, mode: Mode) -> Result<QuotientRing> {
    let ring: &HyperRing = base;
    require_proper_ideal(ring, p, mode)?;
    let order = ring.order();
    let of: Vec<u64> = (0..order).map(|x| coset_bits(ring, x, p.bits())).collect();
    for x in 0..order {
        for y in x + 1..order {
            if of[x] != of[y] && of[x] & of[y] != 0 {
                return Err(Error::CosetsNotPartition {
                    first: ring.format_subset(&ring.mask(of[x])),
                    second: ring.format_subset(&ring.mask(of[y])),
                });
            }
        }
    }
    let mut cosets: Vec<u64> = Vec::new();
    let mut label = vec![0usize; order];
    for x in 0..order {
        let pos = match cosets.iter().position(|&c| c == of[x]) {
            Some(i) => i,
            None => {
                cosets.push(of[x]);
                cosets.len() - 1
            }
        };
        label[x] = pos;
    }
    let labels_of = |bits: u64| bit_indices(bits).fold(0u64, |acc, x| acc | 1 << label[x]);

    // induced f on labels, checked against every choice of representatives
    let mut f_of = std::collections::HashMap::new();
    let mut failure = None;
    let mut lab = vec![0usize; ring.m()];
    for_each_tuple(order, ring.m(), |t| {
        for (l, &x) in lab.iter_mut().zip(t) {
            *l = label[x];
        }
        lab.sort_unstable();
        let v = labels_of(ring.f_raw(t));
        match f_of.entry(lab.clone()) {
            std::collections::hash_map::Entry::Vacant(e) => {
                e.insert(v);
            }
            std::collections::hash_map::Entry::Occupied(e) if *e.get() != v => {
                failure = Some(format!("f depends on the representatives at {}", ring.format_tuple(
                    &t.iter().map(|&x| Element::new(x)).collect::<Vec<_>>()
                )));
                return false;
            }
            _ => {}
        }
        true
    });
    if let Some(msg) = failure {
        return Err(Error::InducedOpIllDefined(msg));
    }
    let mut g_of = std::collections::HashMap::new();
    let mut lab = vec![0usize; ring.n()];
    for_each_tuple(order, ring.n(), |t| {
        for (l, &x) in lab.iter_mut().zip(t) {
            *l = label[x];
        }
        lab.sort_unstable();
        let v = label[ring.g_raw(t)];
        match g_of.entry(lab.clone()) {
            std::collections::hash_map::Entry::Vacant(e) => {
                e.insert(v);
            }
            std::collections::hash_map::Entry::Occupied(e) if *e.get() != v => {
                failure = Some(format!("g depends on the representatives at {}", ring.format_tuple(
                    &t.iter().map(|&x| Element::new(x)).collect::<Vec<_>>()
                )));
                return false;
            }
            _ => {}
        }
        true
    });
    if let Some(msg) = failure {
        return Err(Error::InducedOpIllDefined(msg));
    }

    let names: Vec<String> = cosets
        .iter()
        .map(|&c| {
            let members: Vec<&str> = bit_indices(c).map(|x| ring.name_of(Element::new(x))).collect();
            format!("[{}]", members.join(";"))
        })
        .collect();
    let zero = label[ring.zero().index()];
    let one = label[ring.one().index()];
    if zero == one {
        return Err(Error::ImproperIdeal(ring.format_subset(p)));
    }
    let spec = HyperRingSpec::from_operations(
        format!("{}/{}", ring.name(), ring.format_subset(p)),
        ring.m(),
        ring.n(),
        names,
        zero,
        one,
        |key| bit_indices(f_of[key]).collect(),
        |key| g_of[key],
    )?;
    let quotient = Arc::new(verify_axioms_with(spec, ring.distributivity())?);
    let map: Vec<Element> = label.iter().map(|&l| Element::new(l)).collect();
    let projection = match check_homomorphism(base, &quotient, &map)? {
        Ok(h) => h,
        Err(v) => {
            return Err(Error::InternalContradiction(format!(
                "the projection is not a homomorphism: {}",
                v.describe(ring)
            )))
        }
    };
    Ok(QuotientRing {
        base: Arc::clone(base),
        modulus: *p,
        cosets: cosets.iter().map(|&c| ring.mask(c)).collect(),
        quotient,
        projection,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::harness::fixture;
    use crate::ideals::enumerate_hyperideals;
    use crate::kernel::verify_axioms;

    fn arc(name: &str) -> Arc<HyperRing> {
        Arc::new(fixture(name).unwrap())
    }

    #[test]
    fn non_associative_multiplication_is_rejected() {
        let add: Vec<Vec<usize>> = (0..3).map(|a| (0..3).map(|b| (a + b) % 3).collect()).collect();
        let mut mul: Vec<Vec<usize>> = (0..3).map(|a| (0..3).map(|b| (a * b) % 3).collect()).collect();
        mul[2][2] = 2;
        let err = ring_from_ring_table("bad", &add, &mul, 0, 1).unwrap_err();
        assert!(matches!(err, Error::NotARing(_)));
    }

    #[test]
    fn crt_product_has_four_ideals() {
        let (z2, z3) = (fixture("z2").unwrap(), fixture("z3").unwrap());
        let p = product_ring(&[&z2, &z3]).unwrap();
        assert_eq!(p.order(), 6);
        assert_eq!(p.name_of(Element::new(4)), "1|1");
        assert_eq!(enumerate_hyperideals(&p, Mode::Lenient).unwrap().len(), 4);
        let single = product_ring(&[&z2]).unwrap();
        assert_eq!(single.spec().f, z2.spec().f);
        assert_eq!(single.spec().g, z2.spec().g);
    }

    #[test]
    fn product_with_the_worked_example() {
        let a = fixture("paper-example").unwrap();
        let z2 = fixture("z2").unwrap();
        assert!(matches!(product_ring(&[&a, &z2]), Err(Error::ArityMismatch { .. })));
        let b = fixture("z2-as-33").unwrap();
        let p = product_ring(&[&a, &b]).unwrap();
        assert_eq!(p.order(), 6);
        assert_eq!(p.distributivity(), Distributivity::Includes);
    }

    #[test]
    fn quotient_of_z6() {
        let z6 = arc("z6");
        let q = quotient_ring(&z6, &z6.parse_subset("0,3").unwrap(), Mode::Lenient).unwrap();
        assert_eq!(q.quotient.order(), 3);
        assert_eq!(q.quotient.name_of(Element::new(1)), "[1;4]");
        assert_eq!(enumerate_hyperideals(&q.quotient, Mode::Lenient).unwrap().len(), 2);
        assert!(q.projection.is_surjective());
        assert_eq!(q.projection.kernel(), q.modulus);
        let img = transport_ideal(&q.projection, Direction::Image, &q.modulus, Mode::Lenient).unwrap();
        assert_eq!(img, q.quotient.singleton(q.quotient.zero()));
        let zero = q.quotient.singleton(q.quotient.zero());
        assert_eq!(transport_ideal(&q.projection, Direction::Preimage, &zero, Mode::Lenient).unwrap(), q.modulus);
        let q0 = quotient_ring(&z6, &z6.singleton(z6.zero()), Mode::Lenient).unwrap();
        assert_eq!(q0.quotient.order(), 6);
    }

    #[test]
    fn lenient_quotient_can_fail() {
        let a = arc("paper-example");
        let err = quotient_ring(&a, &a.parse_subset("0,2").unwrap(), Mode::Lenient).unwrap_err();
        assert!(matches!(err, Error::CosetsNotPartition { .. }));
    }

    #[test]
    fn homomorphism_clauses() {
        let z2 = arc("z2");
        let id = check_homomorphism(&z2, &z2, &[Element::new(0), Element::new(1)]).unwrap();
        assert!(id.is_ok());
        let swap = check_homomorphism(&z2, &z2, &[Element::new(1), Element::new(0)]).unwrap();
        assert_eq!(swap.unwrap_err(), HomViolation::One { image: Element::new(0) });
        let z4 = arc("z4");
        let homs = homomorphisms(&z4, &z2, 1 << 16).unwrap();
        assert_eq!(homs.len(), 1);
        assert_eq!(homs[0].kernel(), z4.parse_subset("0,2").unwrap());
        let z6 = arc("z6");
        let q = quotient_ring(&z6, &z6.parse_subset("0,3").unwrap(), Mode::Lenient).unwrap();
        let id6 = check_homomorphism(&z6, &z6, &z6.elements().collect::<Vec<_>>()).unwrap().unwrap();
        let comp = id6.then(&q.projection).unwrap();
        assert_eq!(comp.images(), q.projection.images());
        assert!(verify_axioms(z6.spec().clone()).is_ok());
    }
}
