//! Exhaustive axiom verification.
//!
//! The hyperaddition must form a canonical m-ary hypergroup: associative,
//! with a scalar neutral `0`, unique inverses and reversibility. The
//! multiplication must be associative, absorb `0`, have `1` as scalar
//! identity and distribute over the hyperaddition. Commutativity of both
//! operations is built into the multiset-keyed tables.
//!
//! Every failure carries the lexicographically first witness tuple.

use std::fmt;

use serde::{Deserialize, Serialize};

use super::spec::HyperRingSpec;
use super::tables::Tables;
use super::tuples::for_each_tuple;
use crate::error::Result;

/// How distributivity of `g` over `f` is judged.
///
/// `Equal` is the textbook law: `g(.., f(q_1..q_m), ..)` equals
/// `f(g(.., q_1, ..), .., g(.., q_m, ..))` as sets. `Includes` only asks
/// for the second set to be contained in the first, which is what the
/// (3,3) example ring shipped as the `paper-example` fixture satisfies.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize, Default)]
#[serde(rename_all = "kebab-case")]
pub enum Distributivity {
    #[default]
    Equal,
    Includes,
}

impl Distributivity {
    /// The weaker of two laws.
    pub fn meet(self, other: Distributivity) -> Distributivity {
        if self == Distributivity::Includes || other == Distributivity::Includes {
            Distributivity::Includes
        } else {
            Distributivity::Equal
        }
    }
}

impl fmt::Display for Distributivity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Distributivity::Equal => "equal",
            Distributivity::Includes => "includes",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Axiom {
    FAssociativity,
    NeutralElement,
    UniqueInverses,
    Reversibility,
    GAssociativity,
    /// `f(g(..q_j..)) ⊆ g(.., f(q), ..)`
    DistributivityInclusion,
    /// Set equality of both sides.
    Distributivity,
    ZeroAbsorption,
    GCommutativity,
    ScalarIdentity,
}

impl Axiom {
    pub const ALL: [Axiom; 10] = [
        Axiom::FAssociativity,
        Axiom::NeutralElement,
        Axiom::UniqueInverses,
        Axiom::Reversibility,
        Axiom::GAssociativity,
        Axiom::DistributivityInclusion,
        Axiom::Distributivity,
        Axiom::ZeroAbsorption,
        Axiom::GCommutativity,
        Axiom::ScalarIdentity,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Axiom::FAssociativity => "f-associativity",
            Axiom::NeutralElement => "neutral-element",
            Axiom::UniqueInverses => "unique-inverses",
            Axiom::Reversibility => "reversibility",
            Axiom::GAssociativity => "g-associativity",
            Axiom::DistributivityInclusion => "distributivity-inclusion",
            Axiom::Distributivity => "distributivity",
            Axiom::ZeroAbsorption => "zero-absorption",
            Axiom::GCommutativity => "g-commutativity",
            Axiom::ScalarIdentity => "scalar-identity",
        }
    }

    /// Whether a ring accepted under `law` must pass this check.
    pub fn required_under(self, law: Distributivity) -> bool {
        !(self == Axiom::Distributivity && law == Distributivity::Includes)
    }
}

/// A concrete counterexample to an axiom, in element indices.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AxiomWitness {
    pub tuple: Vec<usize>,
    /// 1-based argument position, where the axiom quantifies over one.
    pub position: Option<usize>,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case", tag = "status")]
pub enum AxiomStatus {
    Pass,
    Fail { witness: AxiomWitness },
    Skipped { reason: String },
}

impl AxiomStatus {
    pub fn is_pass(&self) -> bool {
        matches!(self, AxiomStatus::Pass)
    }

    pub fn witness(&self) -> Option<&AxiomWitness> {
        match self {
            AxiomStatus::Fail { witness } => Some(witness),
            _ => None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AxiomCheck {
    pub axiom: Axiom,
    #[serde(flatten)]
    pub status: AxiomStatus,
}

/// Per-axiom outcome for one ring document.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AxiomReport {
    pub ring: String,
    pub law: Distributivity,
    pub checks: Vec<AxiomCheck>,
}

impl AxiomReport {
    pub fn status(&self, axiom: Axiom) -> &AxiomStatus {
        &self
            .checks
            .iter()
            .find(|c| c.axiom == axiom)
            .expect("every axiom is reported")
            .status
    }

    /// All checks required under the report's law pass.
    pub fn all_pass(&self) -> bool {
        self.checks
            .iter()
            .all(|c| c.status.is_pass() || !c.axiom.required_under(self.law))
    }

    pub fn failures(&self) -> impl Iterator<Item = &AxiomCheck> {
        self.checks
            .iter()
            .filter(|c| !c.status.is_pass() && c.axiom.required_under(self.law))
    }

    /// Human-readable table with element names.
    pub fn render(&self, spec: &HyperRingSpec) -> String {
        let mut out = String::new();
        for c in &self.checks {
            let line = match &c.status {
                AxiomStatus::Pass => "pass".to_string(),
                AxiomStatus::Skipped { reason } => format!("skipped ({reason})"),
                AxiomStatus::Fail { witness } => {
                    let tuple = spec.key_string(&witness.tuple);
                    let pos = witness
                        .position
                        .map(|p| format!(" at position {p}"))
                        .unwrap_or_default();
                    let tolerated = if c.axiom.required_under(self.law) {
                        ""
                    } else {
                        " [tolerated under inclusion law]"
                    };
                    format!("FAIL witness ({tuple}){pos}: {}{tolerated}", witness.detail)
                }
            };
            out.push_str(&format!("  {:<26}{line}\n", c.axiom.name()));
        }
        out
    }
}

impl fmt::Display for AxiomReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            match &c.status {
                AxiomStatus::Pass => writeln!(f, "  {}: pass", c.axiom.name())?,
                AxiomStatus::Skipped { reason } => {
                    writeln!(f, "  {}: skipped ({reason})", c.axiom.name())?
                }
                AxiomStatus::Fail { witness } => writeln!(
                    f,
                    "  {}: FAIL witness {:?}{}: {}",
                    c.axiom.name(),
                    witness.tuple,
                    witness
                        .position
                        .map(|p| format!(" at position {p}"))
                        .unwrap_or_default(),
                    witness.detail
                )?,
            }
        }
        Ok(())
    }
}

fn fmt_set(bits: u64) -> String {
    let items: Vec<String> = (0..64)
        .filter(|i| bits >> i & 1 == 1)
        .map(|i: usize| i.to_string())
        .collect();
    format!("{{{}}}", items.join(","))
}

fn fail(tuple: &[usize], position: Option<usize>, detail: String) -> AxiomStatus {
    AxiomStatus::Fail {
        witness: AxiomWitness {
            tuple: tuple.to_vec(),
            position,
            detail,
        },
    }
}

/// Runs every axiom check on a structurally valid spec.
pub fn check_axioms(spec: &HyperRingSpec, law: Distributivity) -> Result<AxiomReport> {
    let t = Tables::from_spec(spec)?;
    let inverses = inverse_table(&t);
    let (dist_incl, dist_eq) = distributivity(&t);
    let checks = vec![
        AxiomCheck {
            axiom: Axiom::FAssociativity,
            status: f_associativity(&t),
        },
        AxiomCheck {
            axiom: Axiom::NeutralElement,
            status: neutral(&t),
        },
        AxiomCheck {
            axiom: Axiom::UniqueInverses,
            status: inverses.as_ref().map_or_else(|s| s.clone(), |_| AxiomStatus::Pass),
        },
        AxiomCheck {
            axiom: Axiom::Reversibility,
            status: match &inverses {
                Ok(neg) => reversibility(&t, neg),
                Err(_) => AxiomStatus::Skipped {
                    reason: "inverses are not unique".into(),
                },
            },
        },
        AxiomCheck {
            axiom: Axiom::GAssociativity,
            status: g_associativity(&t),
        },
        AxiomCheck {
            axiom: Axiom::DistributivityInclusion,
            status: dist_incl,
        },
        AxiomCheck {
            axiom: Axiom::Distributivity,
            status: dist_eq,
        },
        AxiomCheck {
            axiom: Axiom::ZeroAbsorption,
            status: zero_absorption(&t),
        },
        AxiomCheck {
            axiom: Axiom::GCommutativity,
            status: AxiomStatus::Pass,
        },
        AxiomCheck {
            axiom: Axiom::ScalarIdentity,
            status: scalar_identity(&t),
        },
    ];
    Ok(AxiomReport {
        ring: spec.name.clone(),
        law,
        checks,
    })
}

/// Compares every bracketing of a `(2k-1)`-tuple against the leftmost one.
fn f_associativity(t: &Tables) -> AxiomStatus {
    let m = t.m;
    let mut status = AxiomStatus::Pass;
    let mut sets = vec![0u64; m];
    for_each_tuple(t.order, 2 * m - 1, |x| {
        let bracket = |i: usize, sets: &mut Vec<u64>| {
            for (k, s) in sets.iter_mut().enumerate() {
                *s = match k.cmp(&i) {
                    std::cmp::Ordering::Less => 1 << x[k],
                    std::cmp::Ordering::Equal => t.f(&x[i..i + m]),
                    std::cmp::Ordering::Greater => 1 << x[k + m - 1],
                };
            }
            t.f_sets(sets)
        };
        let base = bracket(0, &mut sets);
        for i in 1..m {
            let other = bracket(i, &mut sets);
            if other != base {
                status = fail(
                    x,
                    Some(i + 1),
                    format!(
                        "inner f at position 1 gives {} but at position {} gives {}",
                        fmt_set(base),
                        i + 1,
                        fmt_set(other)
                    ),
                );
                return false;
            }
        }
        true
    });
    status
}

fn neutral(t: &Tables) -> AxiomStatus {
    let mut args = vec![t.zero; t.m];
    for x in 0..t.order {
        args[0] = x;
        let v = t.f(&args);
        if v != 1 << x {
            return fail(&args, None, format!("f = {} instead of {{{x}}}", fmt_set(v)));
        }
    }
    AxiomStatus::Pass
}

/// The unique `y` with `0 ∈ f(x, y, 0^(m-2))`, or the first offending `x`.
fn inverse_table(t: &Tables) -> std::result::Result<Vec<usize>, AxiomStatus> {
    let mut neg = Vec::with_capacity(t.order);
    let mut args = vec![t.zero; t.m];
    for x in 0..t.order {
        args[0] = x;
        let mut found = Vec::new();
        for y in 0..t.order {
            args[1] = y;
            if t.f(&args) >> t.zero & 1 == 1 {
                found.push(y);
            }
        }
        if found.len() != 1 {
            return Err(fail(
                &[x],
                None,
                format!("elements y with 0 in f(x,y,0..): {found:?}"),
            ));
        }
        neg.push(found[0]);
    }
    Ok(neg)
}

/// `z ∈ f(x_1..x_m)` implies `x_i ∈ f(z, -x_j for j ≠ i)`.
fn reversibility(t: &Tables, neg: &[usize]) -> AxiomStatus {
    let m = t.m;
    let mut status = AxiomStatus::Pass;
    let mut args = vec![0usize; m];
    for_each_tuple(t.order, m, |x| {
        let mut outs = t.f(x);
        while outs != 0 {
            let z = outs.trailing_zeros() as usize;
            outs &= outs - 1;
            for i in 0..m {
                args[0] = z;
                let mut k = 1;
                for (j, &xj) in x.iter().enumerate() {
                    if j != i {
                        args[k] = neg[xj];
                        k += 1;
                    }
                }
                if t.f(&args) >> x[i] & 1 == 0 {
                    let mut w = x.to_vec();
                    w.push(z);
                    status = fail(
                        &w,
                        Some(i + 1),
                        format!(
                            "{z} in f{x:?} but {} not in f{args:?} = {}",
                            x[i],
                            fmt_set(t.f(&args))
                        ),
                    );
                    return false;
                }
            }
        }
        true
    });
    status
}

fn g_associativity(t: &Tables) -> AxiomStatus {
    let n = t.n;
    let mut status = AxiomStatus::Pass;
    let mut args = vec![0usize; n];
    for_each_tuple(t.order, 2 * n - 1, |x| {
        let mut bracket = |i: usize| {
            for k in 0..n {
                args[k] = match k.cmp(&i) {
                    std::cmp::Ordering::Less => x[k],
                    std::cmp::Ordering::Equal => t.g(&x[i..i + n]),
                    std::cmp::Ordering::Greater => x[k + n - 1],
                };
            }
            t.g(&args)
        };
        let base = bracket(0);
        for i in 1..n {
            let other = bracket(i);
            if other != base {
                status = fail(
                    x,
                    Some(i + 1),
                    format!(
                        "inner g at position 1 gives {base} but at position {} gives {other}",
                        i + 1
                    ),
                );
                return false;
            }
        }
        true
    });
    status
}

/// Returns (inclusion status, equality status). The witness tuple lists the
/// `n-1` outer arguments followed by the `m` summands.
fn distributivity(t: &Tables) -> (AxiomStatus, AxiomStatus) {
    let (m, n) = (t.m, t.n);
    let mut incl = AxiomStatus::Pass;
    let mut eq = AxiomStatus::Pass;
    let mut gargs = vec![0usize; n];
    let mut terms = vec![0u64; m];
    for_each_tuple(t.order, n - 1 + m, |x| {
        let (outer, q) = x.split_at(n - 1);
        let sum = t.f(q);
        for i in 0..n {
            let mut lhs = 0u64;
            let mut bits = sum;
            while bits != 0 {
                let z = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                fill(&mut gargs, outer, i, z);
                lhs |= 1 << t.g(&gargs);
            }
            for (j, &qj) in q.iter().enumerate() {
                fill(&mut gargs, outer, i, qj);
                terms[j] = 1 << t.g(&gargs);
            }
            let rhs = t.f_sets(&terms);
            let detail = || {
                format!(
                    "g with f{q:?} inserted at position {} gives {} but f of the products gives {}",
                    i + 1,
                    fmt_set(lhs),
                    fmt_set(rhs)
                )
            };
            if rhs & !lhs != 0 && incl.is_pass() {
                incl = fail(x, Some(i + 1), detail());
            }
            if rhs != lhs && eq.is_pass() {
                eq = fail(x, Some(i + 1), detail());
            }
            if !incl.is_pass() && !eq.is_pass() {
                return false;
            }
        }
        true
    });
    (incl, eq)
}

/// `outer` with `slot` inserted at position `i`.
fn fill(gargs: &mut [usize], outer: &[usize], i: usize, slot: usize) {
    let mut k = 0;
    for (j, a) in gargs.iter_mut().enumerate() {
        if j == i {
            *a = slot;
        } else {
            *a = outer[k];
            k += 1;
        }
    }
}

fn zero_absorption(t: &Tables) -> AxiomStatus {
    let mut status = AxiomStatus::Pass;
    let mut args = vec![t.zero; t.n];
    for_each_tuple(t.order, t.n - 1, |rest| {
        args[1..].copy_from_slice(rest);
        let v = t.g(&args);
        if v != t.zero {
            status = fail(&args, None, format!("g = {v} instead of {}", t.zero));
            return false;
        }
        true
    });
    status
}

fn scalar_identity(t: &Tables) -> AxiomStatus {
    let mut args = vec![t.one; t.n];
    for x in 0..t.order {
        args[0] = x;
        let v = t.g(&args);
        if v != x {
            return fail(&args, None, format!("g = {v} instead of {x}"));
        }
    }
    AxiomStatus::Pass
}
