//! Finite Krasner (m,n)-hyperrings as validated operation tables.

mod axioms;
mod ring;
mod spec;
mod tables;
pub(crate) mod tuples;

pub use axioms::{check_axioms, Axiom, AxiomCheck, AxiomReport, AxiomStatus, AxiomWitness, Distributivity};
pub use ring::{verify_axioms, verify_axioms_with, HyperRing};
pub use spec::{parse_spec, serialize_spec, HyperRingSpec, MAX_ARITY};
