//! Finite Krasner (m,n)-hyperrings and their n-ary S-hyperideals.
//!
//! A ring is described by a [`HyperRingSpec`] (element names plus tables for
//! the m-ary hyperaddition `f` and the n-ary multiplication `g`) and becomes a
//! [`HyperRing`] once [`verify_axioms`] accepts it. Subsets are
//! [`SubsetMask`]s tied to the ring that produced them.
//!
//! - [`ideals`]: hyperideals, generation, enumeration, prime/primary/
//!   semiprime/maximal classification, radicals and special sets.
//! - [`multiplicative`]: multiplicative sets, the S-condition, residuals,
//!   saturation and primary decomposition.
//! - [`constructions`]: classical rings as hyperrings, products, quotients,
//!   homomorphisms.
//! - [`harness`]: exhaustive checks of the theorem catalog over fixtures.
//! - [`cli`]: the `hyperideal` command line.

pub mod cli;
mod closure;
pub mod constructions;
mod error;
pub mod harness;
pub mod ideals;
pub mod kernel;
pub mod multiplicative;
mod subset;

pub use error::{Error, Result};
pub use kernel::{
    check_axioms, parse_spec, serialize_spec, verify_axioms, verify_axioms_with, Axiom,
    AxiomCheck, AxiomReport, AxiomStatus, AxiomWitness, Distributivity, HyperRing,
    HyperRingSpec, MAX_ARITY,
};
pub use subset::{Element, RingId, SubsetMask, MAX_ORDER};
