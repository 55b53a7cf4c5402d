use thiserror::Error;

/// Everything that can go wrong while building fields, geometric objects and
/// incidence structures.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("characteristic 2 excluded: field order must be an odd prime")]
    CharacteristicTwo,
    #[error("prime fields only: {0} is not prime")]
    NotPrime(u64),
    #[error("field order {0} exceeds the supported maximum {max}", max = u32::MAX)]
    OrderTooLarge(u64),
    #[error("operands belong to different fields (F_{left} vs F_{right})")]
    FieldMismatch { left: u64, right: u64 },
    #[error("zero has no multiplicative inverse")]
    ZeroInverse,
    #[error("dimension must be at least 1")]
    ZeroDimension,
    #[error("expected {expected} coordinates, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("coordinate {value} is not a canonical residue mod {q}")]
    CoordinateOutOfRange { value: u64, q: u64 },
    #[error("objects live in different spaces: (q={q1}, d={d1}) vs (q={q2}, d={d2})")]
    ContextMismatch { q1: u64, d1: usize, q2: u64, d2: usize },
    #[error("operation is only defined in the plane (d = 2), got d = {0}")]
    RequiresPlane(usize),
    #[error("enumeration of {needed} items exceeds the budget of {budget}")]
    BudgetExceeded { needed: u128, budget: u64 },
    #[error("duplicate point at position {0}")]
    DuplicatePoint(usize),
    #[error("duplicate sphere at position {0}")]
    DuplicateSphere(usize),
    #[error("parameter {0} must lie strictly between 0 and 1")]
    ParameterOutOfRange(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
