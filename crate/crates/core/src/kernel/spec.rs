//! The ring document: tables keyed by sorted multisets, read from and
//! written to a canonical JSON form.

use std::collections::{BTreeMap, BTreeSet, HashMap};

use indexmap::IndexMap;
use serde::{Deserialize, Serialize};

use super::tuples::{binomial, for_each_multiset};
use crate::error::{Error, Result};
use crate::subset::MAX_ORDER;

/// Largest supported arity for either operation.
pub const MAX_ARITY: usize = 8;

/// Upper bound on the number of multiset keys a single table may have.
const MAX_KEYS: usize = 1 << 20;

/// Unvalidated (but structurally complete) description of a commutative
/// Krasner (m,n)-hyperring.
///
/// Tables are keyed by sorted index multisets, so commutativity of both
/// operations holds by construction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HyperRingSpec {
    pub name: String,
    /// Arity of the hyperaddition `f`.
    pub m: usize,
    /// Arity of the multiplication `g`.
    pub n: usize,
    pub elements: Vec<String>,
    pub zero: usize,
    pub one: usize,
    /// Sorted multiset of size `m` to a sorted, non-empty set of indices.
    pub f: BTreeMap<Vec<usize>, Vec<usize>>,
    /// Sorted multiset of size `n` to a single index.
    pub g: BTreeMap<Vec<usize>, usize>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RingDocument {
    name: String,
    m: usize,
    n: usize,
    elements: Vec<String>,
    zero: String,
    one: String,
    f: IndexMap<String, Vec<String>>,
    g: IndexMap<String, String>,
}

fn check_name(name: &str) -> Result<()> {
    if name.is_empty() || name.contains(',') || name.chars().any(char::is_whitespace) {
        return Err(Error::InvalidName(name.to_string()));
    }
    Ok(())
}

fn check_arity(which: &'static str, value: usize) -> Result<()> {
    if !(2..=MAX_ARITY).contains(&value) {
        return Err(Error::ArityOutOfRange {
            which,
            value,
            max: MAX_ARITY,
        });
    }
    Ok(())
}

fn check_carrier(elements: &[String]) -> Result<HashMap<&str, usize>> {
    if elements.len() > MAX_ORDER {
        return Err(Error::OrderLimitExceeded {
            order: elements.len(),
            limit: MAX_ORDER,
        });
    }
    let mut index = HashMap::new();
    for (i, name) in elements.iter().enumerate() {
        check_name(name)?;
        if index.insert(name.as_str(), i).is_some() {
            return Err(Error::DuplicateElement(name.clone()));
        }
    }
    Ok(index)
}

fn check_table_size(order: usize, arity: usize) -> Result<()> {
    if binomial(order + arity - 1, arity) > MAX_KEYS {
        return Err(Error::OrderLimitExceeded {
            order,
            limit: MAX_ORDER,
        });
    }
    Ok(())
}

impl HyperRingSpec {
    /// Builds a spec by evaluating `f` and `g` on every sorted multiset key.
    /// `f` values are sorted and deduplicated.
    #[allow(clippy::too_many_arguments)]
    pub fn from_operations(
        name: impl Into<String>,
        m: usize,
        n: usize,
        elements: Vec<String>,
        zero: usize,
        one: usize,
        mut f: impl FnMut(&[usize]) -> Vec<usize>,
        mut g: impl FnMut(&[usize]) -> usize,
    ) -> Result<Self> {
        check_arity("m", m)?;
        check_arity("n", n)?;
        check_carrier(&elements)?;
        let order = elements.len();
        check_table_size(order, m)?;
        check_table_size(order, n)?;
        for &e in &[zero, one] {
            if e >= order {
                return Err(Error::UnknownElement(format!("#{e}")));
            }
        }
        if zero == one {
            return Err(Error::ZeroEqualsOne(elements[zero].clone()));
        }
        let mut f_table = BTreeMap::new();
        let mut failure = None;
        for_each_multiset(order, m, |key| {
            let mut v = f(key);
            v.sort_unstable();
            v.dedup();
            if v.is_empty() {
                failure = Some(Error::EmptyHyperValue(key_string(&elements, key)));
                return false;
            }
            if let Some(&bad) = v.iter().find(|&&x| x >= order) {
                failure = Some(Error::UnknownElement(format!("#{bad}")));
                return false;
            }
            f_table.insert(key.to_vec(), v);
            true
        });
        if let Some(e) = failure {
            return Err(e);
        }
        let mut g_table = BTreeMap::new();
        for_each_multiset(order, n, |key| {
            let v = g(key);
            if v >= order {
                failure = Some(Error::UnknownElement(format!("#{v}")));
                return false;
            }
            g_table.insert(key.to_vec(), v);
            true
        });
        if let Some(e) = failure {
            return Err(e);
        }
        Ok(HyperRingSpec {
            name: name.into(),
            m,
            n,
            elements,
            zero,
            one,
            f: f_table,
            g: g_table,
        })
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    /// Comma-joined element names of a key.
    pub fn key_string(&self, key: &[usize]) -> String {
        key_string(&self.elements, key)
    }

    /// Index of a named element.
    pub fn index_of(&self, name: &str) -> Result<usize> {
        self.elements
            .iter()
            .position(|e| e == name)
            .ok_or_else(|| Error::UnknownElement(name.to_string()))
    }

    /// Structural checks: arities, names, completeness of both tables,
    /// value ranges. Axioms are not checked here.
    pub fn validate(&self) -> Result<()> {
        check_arity("m", self.m)?;
        check_arity("n", self.n)?;
        check_carrier(&self.elements)?;
        let order = self.order();
        check_table_size(order, self.m)?;
        check_table_size(order, self.n)?;
        for &e in &[self.zero, self.one] {
            if e >= order {
                return Err(Error::UnknownElement(format!("#{e}")));
            }
        }
        if self.zero == self.one {
            return Err(Error::ZeroEqualsOne(self.elements[self.zero].clone()));
        }
        for (key, value) in &self.f {
            self.check_key(key, self.m)?;
            if value.is_empty() {
                return Err(Error::EmptyHyperValue(self.key_string(key)));
            }
            if let Some(&bad) = value.iter().find(|&&x| x >= order) {
                return Err(Error::UnknownElement(format!("#{bad}")));
            }
            if value.windows(2).any(|w| w[0] >= w[1]) {
                return Err(Error::DuplicateEntry(self.key_string(key)));
            }
        }
        for (key, &value) in &self.g {
            self.check_key(key, self.n)?;
            if value >= order {
                return Err(Error::UnknownElement(format!("#{value}")));
            }
        }
        let mut missing = None;
        for_each_multiset(order, self.m, |key| {
            if !self.f.contains_key(key) {
                missing = Some(self.key_string(key));
            }
            missing.is_none()
        });
        if missing.is_none() {
            for_each_multiset(order, self.n, |key| {
                if !self.g.contains_key(key) {
                    missing = Some(self.key_string(key));
                }
                missing.is_none()
            });
        }
        match missing {
            Some(key) => Err(Error::MissingEntry(key)),
            None => Ok(()),
        }
    }

    fn check_key(&self, key: &[usize], arity: usize) -> Result<()> {
        if key.len() != arity {
            return Err(Error::MalformedKey {
                key: self.key_string(key),
                expected: arity,
                got: key.len(),
            });
        }
        if key.windows(2).any(|w| w[0] > w[1]) || key.iter().any(|&x| x >= self.order()) {
            return Err(Error::MalformedKey {
                key: format!("{key:?}"),
                expected: arity,
                got: key.len(),
            });
        }
        Ok(())
    }
}

fn key_string(elements: &[String], key: &[usize]) -> String {
    key.iter()
        .map(|&i| elements.get(i).map(String::as_str).unwrap_or("?"))
        .collect::<Vec<_>>()
        .join(",")
}

fn parse_key(
    raw: &str,
    arity: usize,
    index: &HashMap<&str, usize>,
) -> Result<Vec<usize>> {
    let parts: Vec<&str> = raw.split(',').collect();
    if parts.len() != arity {
        return Err(Error::MalformedKey {
            key: raw.to_string(),
            expected: arity,
            got: parts.len(),
        });
    }
    let mut key = parts
        .iter()
        .map(|p| {
            index
                .get(p)
                .copied()
                .ok_or_else(|| Error::UnknownElement(p.to_string()))
        })
        .collect::<Result<Vec<_>>>()?;
    key.sort_unstable();
    Ok(key)
}

/// Parses a ring document. Keys may list their components in any order;
/// they are canonicalized to ascending element index.
pub fn parse_spec(document: &str) -> Result<HyperRingSpec> {
    let doc: RingDocument = serde_json::from_str(document)?;
    check_arity("m", doc.m)?;
    check_arity("n", doc.n)?;
    let index = check_carrier(&doc.elements)?;
    let lookup = |name: &str| {
        index
            .get(name)
            .copied()
            .ok_or_else(|| Error::UnknownElement(name.to_string()))
    };
    let zero = lookup(&doc.zero)?;
    let one = lookup(&doc.one)?;
    if zero == one {
        return Err(Error::ZeroEqualsOne(doc.zero));
    }
    let order = doc.elements.len();
    check_table_size(order, doc.m)?;
    check_table_size(order, doc.n)?;

    let mut f = BTreeMap::new();
    for (raw, values) in &doc.f {
        let key = parse_key(raw, doc.m, &index)?;
        if values.is_empty() {
            return Err(Error::EmptyHyperValue(raw.clone()));
        }
        let value: BTreeSet<usize> = values
            .iter()
            .map(|v| lookup(v))
            .collect::<Result<_>>()?;
        if f.insert(key.clone(), value.into_iter().collect()).is_some() {
            return Err(Error::DuplicateEntry(key_string(&doc.elements, &key)));
        }
    }
    let mut g = BTreeMap::new();
    for (raw, value) in &doc.g {
        let key = parse_key(raw, doc.n, &index)?;
        if g.insert(key.clone(), lookup(value)?).is_some() {
            return Err(Error::DuplicateEntry(key_string(&doc.elements, &key)));
        }
    }
    let spec = HyperRingSpec {
        name: doc.name,
        m: doc.m,
        n: doc.n,
        elements: doc.elements,
        zero,
        one,
        f,
        g,
    };
    spec.validate()?;
    Ok(spec)
}

/// Canonical document: keys in lexicographic order of index tuples, `f`
/// values in ascending index order, two-space indentation, trailing newline.
pub fn serialize_spec(spec: &HyperRingSpec) -> String {
    let names = |ix: &[usize]| -> Vec<String> {
        ix.iter().map(|&i| spec.elements[i].clone()).collect()
    };
    let doc = RingDocument {
        name: spec.name.clone(),
        m: spec.m,
        n: spec.n,
        elements: spec.elements.clone(),
        zero: spec.elements[spec.zero].clone(),
        one: spec.elements[spec.one].clone(),
        f: spec
            .f
            .iter()
            .map(|(k, v)| (spec.key_string(k), names(v)))
            .collect(),
        g: spec
            .g
            .iter()
            .map(|(k, &v)| (spec.key_string(k), spec.elements[v].clone()))
            .collect(),
    };
    let mut out = serde_json::to_string_pretty(&doc).expect("ring documents always serialize");
    out.push('\n');
    out
}
