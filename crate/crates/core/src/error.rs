use thiserror::Error;

use crate::semigroup::{AssocViolation, StructureId};

/// Why a raw table was rejected as a Γ-semigroup.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ValidationError {
    #[error("carrier and parameter set must be non-empty (n = {n}, m = {m})")]
    Degenerate { n: usize, m: usize },
    #[error("carrier of size {n} exceeds the supported maximum of {max}")]
    TooLarge { n: usize, max: usize },
    #[error("shape mismatch at {location}: expected {expected}, found {found}")]
    Shape { location: String, expected: usize, found: usize },
    #[error("{} table entries out of range 0..{n}", entries.len())]
    OutOfRange {
        n: usize,
        /// `(γ, x, y, value)` for every offending cell.
        entries: Vec<(usize, usize, usize, usize)>,
    },
    #[error("{} associativity violations", .0.len())]
    NotAssociative(Vec<AssocViolation>),
}

/// Two objects that must live over the same Γ-semigroup do not.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
#[error("object bound to structure {found:?}, expected {expected:?}")]
pub struct BindingError {
    pub expected: StructureId,
    pub found: StructureId,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FuzzyError {
    #[error("predicate requires a non-empty argument")]
    Empty,
    #[error(transparent)]
    Binding(#[from] BindingError),
    #[error("expected {expected} grades, found {found}")]
    Arity { expected: usize, found: usize },
    #[error("grade {0} lies outside [0, 1]")]
    OutOfRange(String),
    #[error("grade arithmetic overflowed")]
    Overflow,
}

/// An exhaustive search was asked to run past its size guard.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("{what}: {actual} exceeds guard {limit}")]
pub struct GuardError {
    pub what: &'static str,
    pub limit: usize,
    pub actual: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum IdealError {
    #[error("ideal predicates require a non-empty subset")]
    Empty,
    #[error(transparent)]
    Binding(#[from] BindingError),
    #[error(transparent)]
    Guard(#[from] GuardError),
}
