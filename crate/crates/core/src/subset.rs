//! Elements and subsets of a finite carrier.
//!
//! Carriers hold at most [`MAX_ORDER`] elements so that a subset fits in a
//! single `u64`. Every mask remembers the [`RingId`] of the ring it was made
//! for; combining masks of different rings is rejected.

use std::fmt;
use std::ops::{BitAnd, BitOr, Not, Sub};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest supported carrier.
pub const MAX_ORDER: usize = 64;

/// An element of a finite carrier, identified by its index in the
/// element list. Names are metadata kept by the ring.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Element(pub(crate) u8);

impl Element {
    pub fn new(index: usize) -> Self {
        assert!(index < MAX_ORDER, "element index {index} out of range");
        Element(index as u8)
    }

    #[inline]
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Set bit positions of `bits`, ascending.
#[inline]
pub(crate) fn bit_indices(mut bits: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        (bits != 0).then(|| {
            let i = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            i
        })
    })
}

/// Fingerprint of a validated ring's canonical tables.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RingId(pub(crate) u64);

/// A subset of a ring's carrier.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct SubsetMask {
    bits: u64,
    ring: RingId,
}

impl SubsetMask {
    pub(crate) fn from_bits(ring: RingId, bits: u64) -> Self {
        SubsetMask { bits, ring }
    }

    pub(crate) fn empty(ring: RingId) -> Self {
        SubsetMask { bits: 0, ring }
    }

    pub fn bits(&self) -> u64 {
        self.bits
    }

    pub fn ring_id(&self) -> RingId {
        self.ring
    }

    #[inline]
    pub fn contains(&self, e: Element) -> bool {
        self.bits >> e.0 & 1 == 1
    }

    #[inline]
    pub fn contains_index(&self, i: usize) -> bool {
        self.bits >> i & 1 == 1
    }

    pub fn insert(&mut self, e: Element) {
        self.bits |= 1 << e.0;
    }

    pub fn with(mut self, e: Element) -> Self {
        self.insert(e);
        self
    }

    pub fn len(&self) -> usize {
        self.bits.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.bits == 0
    }

    /// Elements in ascending index order.
    pub fn iter(&self) -> impl Iterator<Item = Element> + '_ {
        let bits = self.bits;
        (0..MAX_ORDER as u8)
            .filter(move |i| bits >> i & 1 == 1)
            .map(Element)
    }

    pub fn elements(&self) -> Vec<Element> {
        self.iter().collect()
    }

    /// Smallest element, if any.
    pub fn first(&self) -> Option<Element> {
        (self.bits != 0).then(|| Element(self.bits.trailing_zeros() as u8))
    }

    fn same_ring(&self, other: &SubsetMask) -> Result<()> {
        if self.ring == other.ring {
            Ok(())
        } else {
            Err(Error::RingMismatch)
        }
    }

    pub fn try_union(&self, other: &SubsetMask) -> Result<SubsetMask> {
        self.same_ring(other)?;
        Ok(SubsetMask::from_bits(self.ring, self.bits | other.bits))
    }

    pub fn try_intersection(&self, other: &SubsetMask) -> Result<SubsetMask> {
        self.same_ring(other)?;
        Ok(SubsetMask::from_bits(self.ring, self.bits & other.bits))
    }

    pub fn try_is_subset(&self, other: &SubsetMask) -> Result<bool> {
        self.same_ring(other)?;
        Ok(self.bits & !other.bits == 0)
    }

    /// Panics when the masks belong to different rings; see
    /// [`SubsetMask::try_is_subset`] for the fallible form.
    pub fn is_subset(&self, other: &SubsetMask) -> bool {
        self.try_is_subset(other).expect("subset masks of different rings")
    }

    pub fn is_disjoint(&self, other: &SubsetMask) -> bool {
        (*self & *other).is_empty()
    }
}

impl BitOr for SubsetMask {
    type Output = SubsetMask;
    fn bitor(self, rhs: SubsetMask) -> SubsetMask {
        self.try_union(&rhs).expect("subset masks of different rings")
    }
}

impl BitAnd for SubsetMask {
    type Output = SubsetMask;
    fn bitand(self, rhs: SubsetMask) -> SubsetMask {
        self.try_intersection(&rhs)
            .expect("subset masks of different rings")
    }
}

impl Sub for SubsetMask {
    type Output = SubsetMask;
    fn sub(self, rhs: SubsetMask) -> SubsetMask {
        assert_eq!(self.ring, rhs.ring, "subset masks of different rings");
        SubsetMask::from_bits(self.ring, self.bits & !rhs.bits)
    }
}

impl Not for SubsetMask {
    type Output = SubsetMask;
    /// Complement within the 64-slot universe; callers intersect with the
    /// carrier (`ring.all() - mask` is usually what you want).
    fn not(self) -> SubsetMask {
        SubsetMask::from_bits(self.ring, !self.bits)
    }
}

impl PartialOrd for SubsetMask {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

/// Ascending mask order (numeric value of the bit pattern).
impl Ord for SubsetMask {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        (self.ring, self.bits).cmp(&(other.ring, other.bits))
    }
}

impl fmt::Debug for SubsetMask {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Index form, e.g. `{0,2}`. Use `HyperRing::format_subset` for names.
impl fmt::Display for SubsetMask {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (k, e) in self.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{e}")?;
        }
        f.write_str("}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn different_rings_are_rejected() {
        let a = SubsetMask::from_bits(RingId(1), 0b011);
        let b = SubsetMask::from_bits(RingId(2), 0b110);
        assert!(matches!(a.try_union(&b), Err(Error::RingMismatch)));
        assert!(matches!(a.try_intersection(&b), Err(Error::RingMismatch)));
        assert!(matches!(a.try_is_subset(&b), Err(Error::RingMismatch)));
        let c = SubsetMask::from_bits(RingId(1), 0b110);
        assert_eq!((a & c).bits(), 0b010);
        assert_eq!((a | c).bits(), 0b111);
        assert_eq!((a - c).bits(), 0b001);
    }

    #[test]
    #[should_panic(expected = "different rings")]
    fn operators_panic_across_rings() {
        let a = SubsetMask::from_bits(RingId(1), 1);
        let b = SubsetMask::from_bits(RingId(2), 1);
        let _ = a | b;
    }

    #[test]
    fn iteration_and_display() {
        let a = SubsetMask::from_bits(RingId(0), 0b101);
        assert_eq!(a.elements(), vec![Element(0), Element(2)]);
        assert_eq!(a.to_string(), "{0,2}");
        assert_eq!(a.first(), Some(Element(0)));
        assert_eq!(a.len(), 2);
    }
}
