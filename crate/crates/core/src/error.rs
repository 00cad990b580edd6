use thiserror::Error;

use crate::kernel::AxiomReport;

/// Errors raised by the library. Verdicts (a subset failing to be a
/// hyperideal, a pair failing the S-condition) are values, not errors.
#[derive(Debug, Error)]
pub enum Error {
    #[error("malformed ring document: {0}")]
    Json(#[from] serde_json::Error),

    #[error("missing table entry for key \"{0}\"")]
    MissingEntry(String),

    #[error("duplicate table entry for key \"{0}\"")]
    DuplicateEntry(String),

    #[error("unknown element \"{0}\"")]
    UnknownElement(String),

    #[error("duplicate element \"{0}\"")]
    DuplicateElement(String),

    #[error("invalid element name \"{0}\": names must be non-empty and contain no commas or whitespace")]
    InvalidName(String),

    #[error("empty hyperoperation value for key \"{0}\"")]
    EmptyHyperValue(String),

    #[error("key \"{key}\" has {got} components, expected {expected}")]
    MalformedKey {
        key: String,
        expected: usize,
        got: usize,
    },

    #[error("arity {which} = {value} out of range (supported: 2..={max})")]
    ArityOutOfRange {
        which: &'static str,
        value: usize,
        max: usize,
    },

    #[error("zero and one must be distinct elements (both are \"{0}\")")]
    ZeroEqualsOne(String),

    #[error("arity mismatch: expected {expected} arguments, got {got}")]
    ArityMismatch { expected: usize, got: usize },

    #[error("empty subset")]
    EmptySubset,

    #[error("subset belongs to a different ring")]
    RingMismatch,

    #[error("ring order {order} exceeds the configured limit {limit}")]
    OrderLimitExceeded { order: usize, limit: usize },

    #[error("axiom verification failed:\n{0}")]
    Axioms(Box<AxiomReport>),

    #[error("{subset} is not a hyperideal: {reason}")]
    NotAHyperideal { subset: String, reason: String },

    #[error("{0} is the whole ring (a proper hyperideal is required)")]
    ImproperIdeal(String),

    #[error("{subset} is not multiplicative: {reason}")]
    NotMultiplicative { subset: String, reason: String },

    #[error("hypothesis violated: {0}")]
    HypothesisViolation(String),

    #[error("internal contradiction: {0}")]
    InternalContradiction(String),

    #[error("cosets do not partition the ring: {first} and {second} overlap without being equal")]
    CosetsNotPartition { first: String, second: String },

    #[error("induced operation is not well defined: {0}")]
    InducedOpIllDefined(String),

    #[error("the tables do not define a commutative unital ring:\n{0}")]
    NotARing(Box<AxiomReport>),

    #[error("{table} table is not commutative at ({a},{b})")]
    NotCommutative {
        table: &'static str,
        a: usize,
        b: usize,
    },

    #[error("unknown theorem id \"{0}\"")]
    UnknownTheorem(String),

    #[error("unknown fixture \"{0}\"")]
    UnknownFixture(String),

    #[error("{0}")]
    Usage(String),

    #[error("i/o error on {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
