//! One checker per catalog entry. Each walks every instance of its
//! hypotheses on a surveyed ring and records counterexamples.

use std::sync::Arc;

use serde_json::{json, Value};

use super::fixtures::fixture;
use super::survey::Survey;
use super::TheoremId;
use crate::constructions::{homomorphisms, product_ring, quotient_ring, HyperRingHom};
use crate::error::{Error, Result};
use crate::ideals::{close_ideal, is_ideal_bits, prime_failure};
use crate::kernel::HyperRing;
use crate::multiplicative::{
    maximal_ms_bits, residual_bits, s_failure, saturation_bits,
};
use crate::subset::bit_indices;

/// Counterexamples kept per report.
pub const MAX_COUNTEREXAMPLES: usize = 5;

/// Configurations examined by the avoidance search before truncating.
pub const AVOIDANCE_BUDGET: u64 = 1_000_000;

/// Candidate maps examined when enumerating homomorphisms.
const MAX_MAPS: usize = 1 << 16;

#[derive(Debug, Default)]
pub(crate) struct Tally {
    pub instances: u64,
    pub met: u64,
    pub failures: u64,
    pub examples: Vec<Value>,
    pub notes: Vec<String>,
    pub truncated: bool,
}

impl Tally {
    fn fail(&mut self, v: Value) {
        self.failures += 1;
        if self.examples.len() < MAX_COUNTEREXAMPLES {
            self.examples.push(v);
        }
    }

    fn note(&mut self, s: String) {
        if !self.notes.contains(&s) {
            self.notes.push(s);
        }
    }

    /// Counts one instance whose hypotheses hold and checks `ok`.
    fn check(&mut self, ok: bool, witness: impl FnOnce() -> Value) {
        self.instances += 1;
        self.met += 1;
        if !ok {
            self.fail(witness());
        }
    }

    fn skip(&mut self) {
        self.instances += 1;
    }
}

fn subset_of(a: u64, b: u64) -> bool {
    a & !b == 0
}

pub(crate) fn run(id: TheoremId, sv: &Survey) -> Result<Tally> {
    let mut t = Tally::default();
    match id {
        TheoremId::T1_1 => t1_1(sv, &mut t),
        TheoremId::T1_2 => t1_2(sv, &mut t),
        TheoremId::T1_3 => t1_3(sv, &mut t),
        TheoremId::P2 => p2(sv, &mut t),
        TheoremId::T7 => t7(sv, &mut t),
        TheoremId::T6 => t6(sv, &mut t),
        TheoremId::T3 => t3(sv, &mut t),
        TheoremId::T4 => t4(sv, &mut t),
        TheoremId::T5 => t5(sv, &mut t),
        TheoremId::TPrimaryEq => primary_eq(sv, &mut t),
        TheoremId::TDecomp => decomp(sv, &mut t),
        TheoremId::PInt => pint(sv, &mut t),
        TheoremId::P8 => p8(sv, &mut t),
        TheoremId::T9Fwd => t9_fwd(sv, &mut t),
        TheoremId::T10 => t10(sv, &mut t),
        TheoremId::T12 => t12(sv, &mut t),
        TheoremId::TAvoid => avoid(sv, &mut t),
        TheoremId::ThomPre => hom_pre(sv, &mut t)?,
        TheoremId::ThomImg => hom_img(sv, &mut t)?,
        TheoremId::TQuot => quot(sv, &mut t)?,
        TheoremId::TProd => prod(sv, &mut t)?,
        TheoremId::FwSr => fw_sr(sv, &mut t),
    }
    Ok(t)
}

/// Every (P, S) with P an S-hyperideal.
fn s_pairs(sv: &Survey) -> impl Iterator<Item = (u64, u64)> + '_ {
    sv.proper.iter().enumerate().flat_map(move |(i, &p)| {
        sv.mul_sets
            .iter()
            .enumerate()
            .filter(move |(j, _)| sv.s_table[i][*j])
            .map(move |(_, &s)| (p, s))
    })
}

fn pairs_total(sv: &Survey) -> u64 {
    (sv.proper.len() * sv.mul_sets.len()) as u64
}

fn t1_1(sv: &Survey, t: &mut Tally) {
    t.instances = pairs_total(sv);
    for (p, s) in s_pairs(sv) {
        t.met += 1;
        if p & s != 0 {
            t.fail(json!({"P": sv.show(p), "S": sv.show(s), "common": sv.show(p & s)}));
        }
    }
}

fn t1_2(sv: &Survey, t: &mut Tally) {
    t.instances = pairs_total(sv);
    for (p, s) in s_pairs(sv) {
        let r = sv.radical_of(p);
        if r == sv.whole {
            t.note(format!("r({}) is the whole ring; pair skipped", sv.show(p)));
            continue;
        }
        t.met += 1;
        if !sv.is_s(r, s) {
            let w = s_failure(&sv.ring, r, s, r).map(|w| w.describe(&sv.ring));
            t.fail(json!({"P": sv.show(p), "S": sv.show(s), "radical": sv.show(r), "witness": w}));
        }
    }
}

fn t1_3(sv: &Survey, t: &mut Tally) {
    let ring = &sv.ring;
    for (i, &p) in sv.proper.iter().enumerate() {
        let rest = sv.whole & !p;
        let singles: Vec<u64> = (0..ring.order())
            .map(|q| if rest >> q & 1 == 1 { residual_bits(ring, p, 1 << q) } else { 0 })
            .collect();
        // distinct residuals P_Q over non-empty Q ⊆ A \ P, with multiplicity
        let mut residuals: Vec<(u64, u64, u64)> = Vec::new();
        let mut q = rest;
        while q != 0 {
            let r = bit_indices(q).fold(sv.whole, |acc, x| acc & singles[x]);
            match residuals.iter_mut().find(|e| e.0 == r) {
                Some(e) => e.1 += 1,
                None => residuals.push((r, 1, q)),
            }
            q = (q - 1) & rest;
        }
        let total: u64 = residuals.iter().map(|e| e.1).sum();
        for (j, &s) in sv.mul_sets.iter().enumerate() {
            t.instances += total;
            if !sv.s_table[i][j] {
                continue;
            }
            t.met += total;
            for &(r, mult, q) in &residuals {
                let ok = r != sv.whole && is_ideal_bits(ring, r, sv.mode) && sv.is_s(r, s);
                if !ok {
                    for _ in 1..mult {
                        t.failures += 1;
                    }
                    t.fail(json!({
                        "P": sv.show(p), "S": sv.show(s), "Q": sv.show(q), "residual": sv.show(r),
                        "residual_is_hyperideal": is_ideal_bits(ring, r, sv.mode),
                    }));
                }
            }
        }
    }
}

fn p2(sv: &Survey, t: &mut Tally) {
    for &s in &sv.mul_sets {
        for &p in &sv.primes {
            if p & s != 0 {
                t.skip();
                continue;
            }
            t.check(sv.is_s(p, s), || json!({"clause": 1, "P": sv.show(p), "S": sv.show(s)}));
        }
        for &q in &sv.proper {
            if q & s != 0 {
                t.skip();
                continue;
            }
            let found = sv
                .primes
                .iter()
                .any(|&p| subset_of(q, p) && p & s == 0 && sv.is_s(p, s));
            t.check(found, || json!({"clause": 2, "Q": sv.show(q), "S": sv.show(s)}));
        }
    }
}

fn maximal_among(family: &[u64]) -> Vec<u64> {
    family
        .iter()
        .copied()
        .filter(|&p| !family.iter().any(|&q| q != p && subset_of(p, q)))
        .collect()
}

fn t7(sv: &Survey, t: &mut Tally) {
    for (j, &s) in sv.mul_sets.iter().enumerate() {
        let family = sv.s_hyperideals(j);
        if s & sv.one_bit() == 0 {
            t.instances += family.len() as u64;
            continue;
        }
        for p in maximal_among(&family) {
            t.check(sv.is_prime(p), || {
                let w = prime_failure(&sv.ring, p).map(|w| w.describe(&sv.ring));
                json!({"P": sv.show(p), "S": sv.show(s), "witness": w})
            });
        }
        t.instances += (family.len() - maximal_among(&family).len()) as u64;
    }
}

fn minimal_primes_over(sv: &Survey, p: u64) -> Vec<u64> {
    let over: Vec<u64> = sv.primes.iter().copied().filter(|&q| subset_of(p, q)).collect();
    over.iter()
        .copied()
        .filter(|&q| !over.iter().any(|&r| r != q && subset_of(r, q)))
        .collect()
}

fn t6(sv: &Survey, t: &mut Tally) {
    for (p, s) in s_pairs(sv) {
        if s & sv.one_bit() == 0 {
            t.skip();
            continue;
        }
        let mins = minimal_primes_over(sv, p);
        if mins.is_empty() {
            t.skip();
        }
        for q in mins {
            t.check(sv.is_s(q, s), || json!({"P": sv.show(p), "S": sv.show(s), "Q": sv.show(q)}));
        }
    }
}

fn t3(sv: &Survey, t: &mut Tally) {
    let ring = &sv.ring;
    for (i, &p) in sv.proper.iter().enumerate() {
        let star = maximal_ms_bits(ring, p);
        let is_ms = star != 0 && sv.ms_index(star).is_some();
        let holds = is_ms && sv.is_s(p, star);
        t.check(holds, || json!({"P": sv.show(p), "S": sv.show(star), "multiplicative": is_ms}));
        for (j, &s) in sv.mul_sets.iter().enumerate() {
            if !sv.s_table[i][j] {
                t.skip();
                continue;
            }
            t.check(subset_of(s, star), || {
                json!({"P": sv.show(p), "S": sv.show(s), "largest": sv.show(star)})
            });
        }
    }
}

fn t4(sv: &Survey, t: &mut Tally) {
    let ring = &sv.ring;
    for &q in &sv.ideals {
        for (j, &s) in sv.mul_sets.iter().enumerate() {
            if s & sv.one_bit() == 0 {
                t.skip();
                continue;
            }
            let sat = saturation_bits(ring, q, s);
            if sat == sv.whole {
                t.skip();
                t.note("pairs with Q^S equal to the whole ring are vacuous".into());
                continue;
            }
            let is_ideal = is_ideal_bits(ring, sat, sv.mode);
            let contains = subset_of(q, sat);
            let is_s = is_ideal && sv.is_s(sat, s);
            let idempotent = saturation_bits(ring, sat, s) == sat;
            let above: Vec<u64> = sv
                .s_hyperideals(j)
                .into_iter()
                .filter(|&p| subset_of(q, p))
                .collect();
            let minimum = above.iter().all(|&p| subset_of(sat, p));
            t.check(is_ideal && contains && is_s && idempotent && minimum, || {
                let below: Vec<String> = above
                    .iter()
                    .filter(|&&p| !subset_of(sat, p))
                    .map(|&p| sv.show(p))
                    .collect();
                json!({
                    "Q": sv.show(q), "S": sv.show(s), "saturation": sv.show(sat),
                    "hyperideal": is_ideal, "contains_Q": contains, "s_hyperideal": is_s,
                    "idempotent": idempotent, "smaller_s_hyperideals": below,
                })
            });
        }
    }
}

/// The three characterizations of the S-condition, computed independently.
pub(crate) fn tri_equivalence(ring: &HyperRing, p: u64, s: u64) -> [bool; 3] {
    let direct = s_failure(ring, p, s, p).is_none();
    let by_residual = bit_indices(s).all(|x| residual_bits(ring, p, 1 << x) == p);
    let by_saturation = saturation_bits(ring, p, s) == p;
    [direct, by_residual, by_saturation]
}

fn t5(sv: &Survey, t: &mut Tally) {
    for &p in &sv.proper {
        for &s in &sv.mul_sets {
            let v = tri_equivalence(&sv.ring, p, s);
            t.check(v[0] == v[1] && v[1] == v[2], || {
                json!({"P": sv.show(p), "S": sv.show(s), "direct": v[0], "residual": v[1], "saturation": v[2]})
            });
        }
    }
}

fn primary_eq(sv: &Survey, t: &mut Tally) {
    for &q in &sv.min_primes {
        let s = sv.whole & !q;
        if s == 0 || sv.ms_index(s).is_none() {
            t.instances += sv.proper.len() as u64;
            t.note(format!("complement of {} is not multiplicative", sv.show(q)));
            continue;
        }
        for &p in &sv.proper {
            let lhs = sv.is_s(p, s);
            let rhs = sv.is_primary(p) && sv.radical_of(p) == q;
            t.check(lhs == rhs, || {
                json!({"P": sv.show(p), "Q": sv.show(q), "s_hyperideal": lhs, "q_primary": rhs})
            });
        }
    }
}

fn decomp(sv: &Survey, t: &mut Tally) {
    let mins = &sv.min_primes;
    let k = mins.len();
    for choice in 1u64..(1 << k) {
        let chosen: Vec<u64> = bit_indices(choice).map(|i| mins[i]).collect();
        let union = chosen.iter().fold(0, |acc, &q| acc | q);
        let s = sv.whole & !union;
        if s == 0 || sv.ms_index(s).is_none() {
            t.instances += sv.proper.len() as u64;
            continue;
        }
        for &p in &sv.proper {
            if !sv.is_s(p, s) {
                t.skip();
                continue;
            }
            let parts: Vec<u64> = chosen
                .iter()
                .map(|&q| saturation_bits(&sv.ring, p, sv.whole & !q))
                .collect();
            let meet = parts.iter().fold(sv.whole, |acc, &x| acc & x);
            let mut bad_parts = Vec::new();
            for (&q, &part) in chosen.iter().zip(&parts) {
                if part == sv.whole {
                    t.note(format!(
                        "component of {} for {} is the whole ring; its primary claim is vacuous",
                        sv.show(p),
                        sv.show(q)
                    ));
                } else if !(sv.is_ideal(part) && sv.is_primary(part) && sv.radical_of(part) == q) {
                    bad_parts.push(json!({"Q": sv.show(q), "component": sv.show(part)}));
                }
            }
            t.check(meet == p && bad_parts.is_empty(), || {
                json!({
                    "P": sv.show(p),
                    "primes": chosen.iter().map(|&q| sv.show(q)).collect::<Vec<_>>(),
                    "components": parts.iter().map(|&x| sv.show(x)).collect::<Vec<_>>(),
                    "intersection": sv.show(meet),
                    "non_primary_components": bad_parts,
                })
            });
        }
    }
}

fn pint(sv: &Survey, t: &mut Tally) {
    for (j, &s) in sv.mul_sets.iter().enumerate() {
        let fam = sv.s_hyperideals(j);
        let ok = |x: u64| sv.is_ideal(x) && x != sv.whole && sv.is_s(x, s);
        for a in 0..fam.len() {
            t.check(ok(fam[a]), || json!({"S": sv.show(s), "family": [sv.show(fam[a])]}));
            for b in a + 1..fam.len() {
                let x = fam[a] & fam[b];
                t.check(ok(x), || {
                    json!({"S": sv.show(s), "family": [sv.show(fam[a]), sv.show(fam[b])]})
                });
                for c in b + 1..fam.len() {
                    let y = x & fam[c];
                    t.check(ok(y), || {
                        json!({"S": sv.show(s), "family": [sv.show(fam[a]), sv.show(fam[b]), sv.show(fam[c])]})
                    });
                }
            }
        }
    }
}

fn p8(sv: &Survey, t: &mut Tally) {
    for (j, &s) in sv.mul_sets.iter().enumerate() {
        if s & sv.one_bit() == 0 {
            t.skip();
            continue;
        }
        let every = (0..sv.proper.len()).all(|i| sv.s_table[i][j]);
        let units = subset_of(s, sv.units);
        t.check(every == units, || {
            json!({"S": sv.show(s), "every_proper_is_s": every, "inside_units": units})
        });
    }
}

fn is_domain(sv: &Survey) -> bool {
    prime_failure(&sv.ring, sv.zero_bit()).is_none()
}

fn t9_fwd(sv: &Survey, t: &mut Tally) {
    let s = sv.whole & !sv.zero_bit();
    if !is_domain(sv) {
        t.skip();
        t.note("not an integral domain".into());
        return;
    }
    let Some(j) = sv.ms_index(s) else {
        t.skip();
        return;
    };
    let gen0 = close_ideal(&sv.ring, sv.zero_bit(), sv.mode);
    let found = sv.s_hyperideals(j);
    t.check(found == vec![gen0], || {
        json!({
            "S": sv.show(s),
            "s_hyperideals": found.iter().map(|&p| sv.show(p)).collect::<Vec<_>>(),
        })
    });
}

fn t10(sv: &Survey, t: &mut Tally) {
    let ring = &sv.ring;
    let mut sets = vec![sv.zero_bit(); ring.m()];
    for &q in &sv.proper {
        sets[0] = q;
        sets[1] = sv.one_bit();
        let s = ring.f_sets_raw(&sets);
        if sv.ms_index(s).is_none() {
            t.skip();
            t.note(format!(
                "f({},1,0..) = {} is not multiplicative",
                sv.show(q),
                sv.show(s)
            ));
            continue;
        }
        for &p in &sv.proper {
            if !subset_of(q, p) {
                t.skip();
                continue;
            }
            t.check(sv.is_s(p, s), || {
                json!({"clause": 1, "Q": sv.show(q), "S": sv.show(s), "P": sv.show(p)})
            });
        }
        if subset_of(q, sv.jacobson) {
            let j = sv.ms_index(s).expect("checked above");
            for p in maximal_among(&sv.s_hyperideals(j)) {
                t.check(subset_of(q, p), || {
                    json!({"clause": 2, "Q": sv.show(q), "S": sv.show(s), "P": sv.show(p)})
                });
            }
        }
    }
}

fn t12(sv: &Survey, t: &mut Tally) {
    let union = sv.min_primes.iter().fold(0, |acc, &q| acc | q);
    let s = sv.whole & !union;
    if s == 0 || sv.ms_index(s).is_none() {
        t.instances += sv.proper.len() as u64;
        t.note("the complement of the minimal primes is not multiplicative".into());
        return;
    }
    for &p in &sv.proper {
        let hyp = bit_indices(p).all(|x| {
            let meet = sv
                .min_primes
                .iter()
                .filter(|&&q| q >> x & 1 == 1)
                .fold(sv.whole, |acc, &q| acc & q);
            subset_of(meet, p)
        });
        if !hyp {
            t.skip();
            continue;
        }
        t.check(sv.is_s(p, s), || json!({"P": sv.show(p), "S": sv.show(s)}));
    }
}

/// n-element combinations of `0..len`, lexicographic.
fn combinations(len: usize, k: usize, mut visit: impl FnMut(&[usize]) -> bool) {
    if k > len {
        return;
    }
    let mut c: Vec<usize> = (0..k).collect();
    loop {
        if !visit(&c) {
            return;
        }
        let mut i = k;
        loop {
            if i == 0 {
                return;
            }
            i -= 1;
            if c[i] < len - k + i {
                break;
            }
        }
        c[i] += 1;
        for j in i + 1..k {
            c[j] = c[j - 1] + 1;
        }
    }
}

fn avoid(sv: &Survey, t: &mut Tally) {
    let n = sv.ring.n();
    let ideals = &sv.ideals;
    let with_one: Vec<u64> = sv
        .mul_sets
        .iter()
        .copied()
        .filter(|&s| s & sv.one_bit() != 0)
        .collect();
    let mut budget = AVOIDANCE_BUDGET;
    let mut covered = 0u64;
    let mut irredundant = 0u64;
    combinations(ideals.len(), n, |c| {
        let fam: Vec<u64> = c.iter().map(|&i| ideals[i]).collect();
        let union = fam.iter().fold(0, |acc, &x| acc | x);
        for &p in ideals {
            if budget == 0 {
                t.truncated = true;
                return false;
            }
            budget -= 1;
            t.instances += 1;
            if !subset_of(p, union) {
                continue;
            }
            covered += 1;
            let needed = (0..n).all(|j| {
                let rest = fam
                    .iter()
                    .enumerate()
                    .filter(|&(i, _)| i != j)
                    .fold(0, |acc, (_, &x)| acc | x);
                !subset_of(p, rest)
            });
            if !needed {
                continue;
            }
            irredundant += 1;
            for &s in &with_one {
                for tt in 0..n {
                    let pt = fam[tt];
                    if pt == sv.whole || !sv.is_s(pt, s) {
                        continue;
                    }
                    if (0..n).any(|i| i != tt && fam[i] & s == 0) {
                        continue;
                    }
                    t.met += 1;
                    if !subset_of(p, pt) {
                        t.fail(json!({
                            "P": sv.show(p),
                            "family": fam.iter().map(|&x| sv.show(x)).collect::<Vec<_>>(),
                            "t": tt + 1,
                            "S": sv.show(s),
                        }));
                    }
                }
            }
        }
        true
    });
    t.note(format!(
        "{covered} covered configurations, {irredundant} with no omittable member"
    ));
}

fn fw_sr(sv: &Survey, t: &mut Tally) {
    t.instances = pairs_total(sv);
    for (p, s) in s_pairs(sv) {
        t.met += 1;
        let r = sv.radical_of(p);
        if let Some(w) = s_failure(&sv.ring, p, s, r) {
            t.fail(json!({"P": sv.show(p), "S": sv.show(s), "witness": w.describe(&sv.ring)}));
        }
    }
}

/// The second ring for homomorphism and product checks: Z/2 with the
/// same arities, when one is registered.
fn companion(ring: &HyperRing) -> Result<Option<HyperRing>> {
    match (ring.m(), ring.n()) {
        (2, 2) => fixture("z2").map(Some),
        (3, 3) => fixture("z2-as-33").map(Some),
        _ => Ok(None),
    }
}

/// Identity, endomorphisms (small rings), maps onto the companion, and
/// the projections onto every quotient that can be built.
fn hom_family(sv: &Survey, t: &mut Tally) -> Result<Vec<HyperRingHom>> {
    let src = &sv.ring;
    let mut homs = Vec::new();
    match homomorphisms(src, src, MAX_MAPS) {
        Some(h) => homs.extend(h),
        None => {
            let id: Vec<crate::Element> = src.elements().collect();
            let h = crate::constructions::check_homomorphism(src, src, &id)?
                .map_err(|v| Error::InternalContradiction(v.describe(src)))?;
            homs.push(h);
        }
    }
    if let Some(c) = companion(src)? {
        if let Some(h) = homomorphisms(src, &Arc::new(c), MAX_MAPS) {
            homs.extend(h);
        }
    }
    for &p in &sv.proper {
        match quotient_ring(src, &src.mask(p), sv.mode) {
            Ok(q) => homs.push(q.projection),
            Err(e) => t.note(format!("quotient by {} unavailable: {e}", sv.show(p))),
        }
    }
    Ok(homs)
}

fn hom_pre(sv: &Survey, t: &mut Tally) -> Result<()> {
    for hom in hom_family(sv, t)? {
        let target = Survey::new(Arc::clone(hom.target()), sv.mode)?;
        for &s in &sv.mul_sets {
            let image = hom.image_bits(s);
            for &q in &target.proper {
                if !target.is_s(q, image) {
                    t.skip();
                    continue;
                }
                let pre = hom.preimage_bits(q);
                let ok = pre != sv.whole && sv.is_ideal(pre) && sv.is_s(pre, s);
                t.check(ok, || {
                    json!({
                        "map": hom.images().iter().map(|&e| target.ring.name_of(e).to_string()).collect::<Vec<_>>(),
                        "target": target.ring.name(), "S": sv.show(s), "Q": target.show(q),
                        "preimage": sv.show(pre),
                    })
                });
            }
        }
    }
    Ok(())
}

fn hom_img(sv: &Survey, t: &mut Tally) -> Result<()> {
    for hom in hom_family(sv, t)? {
        if !hom.is_surjective() {
            continue;
        }
        let target = Survey::new(Arc::clone(hom.target()), sv.mode)?;
        let ker = hom.kernel().bits();
        for (p, s) in s_pairs(sv) {
            if !subset_of(ker, p) {
                t.skip();
                continue;
            }
            let img = hom.image_bits(p);
            let img_s = hom.image_bits(s);
            let ok = img != target.whole && target.is_ideal(img) && target.is_s(img, img_s);
            t.check(ok, || {
                json!({
                    "map": hom.images().iter().map(|&e| target.ring.name_of(e).to_string()).collect::<Vec<_>>(),
                    "target": target.ring.name(), "P": sv.show(p), "S": sv.show(s),
                    "image": target.show(img), "image_of_S": target.show(img_s),
                })
            });
        }
    }
    Ok(())
}

fn quot(sv: &Survey, t: &mut Tally) -> Result<()> {
    for &p in &sv.proper {
        let q = match quotient_ring(&sv.ring, &sv.ring.mask(p), sv.mode) {
            Ok(q) => q,
            Err(e) => {
                t.note(format!("quotient by {} unavailable: {e}", sv.show(p)));
                continue;
            }
        };
        let target = Survey::new(Arc::clone(&q.quotient), sv.mode)?;
        let pi = &q.projection;
        for &big in &sv.proper {
            if !subset_of(p, big) {
                continue;
            }
            let image = pi.image_bits(big);
            for &s in &sv.mul_sets {
                let tee = pi.image_bits(s);
                if target.ms_index(tee).is_none() {
                    t.skip();
                    t.note(format!("image of {} is not multiplicative in the quotient", sv.show(s)));
                    continue;
                }
                let lhs = sv.is_s(big, s);
                let proper_image = image != target.whole && target.is_ideal(image);
                let rhs = proper_image && target.is_s(image, tee);
                t.check(lhs == rhs, || {
                    json!({
                        "P": sv.show(p), "Q": sv.show(big), "S": sv.show(s),
                        "Q_mod_P": target.show(image), "T": target.show(tee),
                        "s_hyperideal": lhs, "t_hyperideal": rhs,
                    })
                });
            }
        }
    }
    Ok(())
}

/// Products checked for a factor: R×R and R×Z2, plus R×R×Z2 up to
/// order 8.
fn product_families(ring: &HyperRing) -> Result<Vec<Vec<HyperRing>>> {
    if ring.order() > 4 {
        return Ok(Vec::new());
    }
    let mut out = vec![vec![ring.clone(), ring.clone()]];
    if let Some(c) = companion(ring)? {
        if ring.order() * ring.order() * c.order() <= 8 {
            out.push(vec![ring.clone(), ring.clone(), c.clone()]);
        }
        out.push(vec![ring.clone(), c]);
    }
    Ok(out)
}

fn prod(sv: &Survey, t: &mut Tally) -> Result<()> {
    let families = product_families(&sv.ring)?;
    if families.is_empty() {
        t.note("factor order above 4".into());
        t.skip();
        return Ok(());
    }
    for factors in families {
        let refs: Vec<&HyperRing> = factors.iter().collect();
        let product = product_ring(&refs)?;
        let surveys = factors
            .iter()
            .map(|f| Survey::new(Arc::new(f.clone()), sv.mode))
            .collect::<Result<Vec<_>>>()?;
        let orders: Vec<usize> = factors.iter().map(|f| f.order()).collect();
        let lift = |parts: &[u64]| -> u64 {
            let mut bits = 0u64;
            for x in 0..product.order() {
                let c = crate::constructions::product_coordinates(&orders, crate::Element::new(x));
                if c.iter().zip(parts).all(|(e, &b)| b >> e.index() & 1 == 1) {
                    bits |= 1 << x;
                }
            }
            bits
        };
        let k = factors.len();
        let mut idx = vec![(0usize, 0usize); k];
        'outer: loop {
            let ps: Vec<u64> = (0..k).map(|j| surveys[j].proper[idx[j].0]).collect();
            let ss: Vec<u64> = (0..k).map(|j| surveys[j].mul_sets[idx[j].1]).collect();
            let componentwise = (0..k).all(|j| surveys[j].s_table[idx[j].0][idx[j].1]);
            let (pp, spp) = (lift(&ps), lift(&ss));
            let direct = s_failure(&product, pp, spp, pp).is_none();
            t.check(componentwise == direct, || {
                json!({
                    "product": product.name(),
                    "P": (0..k).map(|j| surveys[j].show(ps[j])).collect::<Vec<_>>(),
                    "S": (0..k).map(|j| surveys[j].show(ss[j])).collect::<Vec<_>>(),
                    "componentwise": componentwise, "direct": direct,
                })
            });
            let mut j = k;
            loop {
                if j == 0 {
                    break 'outer;
                }
                j -= 1;
                idx[j].1 += 1;
                if idx[j].1 < surveys[j].mul_sets.len() {
                    break;
                }
                idx[j].1 = 0;
                idx[j].0 += 1;
                if idx[j].0 < surveys[j].proper.len() {
                    break;
                }
                idx[j].0 = 0;
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn combinations_are_lexicographic() {
        let mut seen = Vec::new();
        combinations(4, 2, |c| {
            seen.push(c.to_vec());
            true
        });
        assert_eq!(seen.len(), 6);
        assert_eq!(seen[0], vec![0, 1]);
        assert_eq!(seen[5], vec![2, 3]);
    }
}
