//! Crate-wide error type.

use thiserror::Error;

/// Convenience alias used across the crate.
pub type Result<T> = std::result::Result<T, Error>;

/// Errors raised by construction, validation, and counting operations.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("modulus must be at least 2, got {0}")]
    InvalidModulus(u32),
    #[error("group must have at least one cyclic factor")]
    EmptyGroup,
    #[error("element does not belong to the group: {0}")]
    GroupMismatch(String),
    #[error("index {index} out of range for group of order {order}")]
    IndexOutOfRange { index: u64, order: u64 },
    #[error("group order {order} exceeds the supported table range")]
    OrderTooLarge { order: u64 },

    #[error("base must be at least 2, got {0}")]
    InvalidBase(u32),
    #[error("digit {digit} out of range for base {base}")]
    InvalidDigit { digit: u32, base: u32 },
    #[error("digit vector has a trailing zero")]
    TrailingZero,
    #[error("value exceeds the supported integer width")]
    WidthOverflow,

    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("degree must be between 1 and 8, got {0}")]
    InvalidDegree(usize),
    #[error("modulus polynomial is not monic of the declared degree")]
    NotMonic,
    #[error("modulus polynomial is reducible")]
    Reducible,
    #[error("element does not belong to the field")]
    FieldMismatch,
    #[error("truncation width {width} out of range for degree {degree}")]
    TruncationRange { width: usize, degree: usize },
    #[error("prime {p} exceeds the {max} guard for this construction")]
    PrimeTooLarge { p: u32, max: u32 },

    #[error("table of {size} entries exceeds the construction guard {guard}")]
    TableGuard { size: u64, guard: u64 },
    #[error("weight table has {found} entries, expected {expected}")]
    TableLength { expected: u64, found: u64 },
    #[error("table entry {entry} out of range for group of order {order}")]
    EntryRange { entry: u64, order: u64 },
    #[error("the all-zero window must map to the group identity")]
    NonzeroOrigin,
    #[error("rank must be at least 1")]
    InvalidRank,
    #[error("dimension must be at least 1")]
    InvalidDimension,
    #[error("unknown catalog name `{0}`")]
    UnknownCatalog(String),
    #[error("normalized search space for base {base} over a group of order {order} exceeds {limit} tables")]
    SearchSpace { base: u32, order: u64, limit: u64 },

    #[error("operation requires rank {expected}, got rank {found}")]
    RankUnsupported { expected: u32, found: u32 },
    #[error("operation requires dimension {expected}, got {found}")]
    DimensionMismatch { expected: u32, found: u32 },
    #[error("state space of {states} states exceeds the {guard} guard")]
    StateGuard { states: u64, guard: u64 },

    #[error("shift must be positive")]
    ZeroShift,
    #[error("shift vector must be nonzero")]
    ZeroShiftVector,
    #[error("shifts must be strictly increasing and positive")]
    ShiftOrder,
    #[error("count must be at least 1")]
    EmptyRange,
    #[error("sweep of {requested} indices exceeds the ceiling {ceiling} (set {var} to adjust)", var = crate::guard::SWEEP_ENV_VAR)]
    SweepCeiling { requested: u64, ceiling: u64 },
    #[error("tuple space of {size} cells exceeds the {guard} guard")]
    TupleGuard { size: u64, guard: u64 },
    #[error("base {base} is not a multiple of the group order {order}")]
    DivisibilityRequired { base: u64, order: u64 },
    #[error(
        "lower bound violated for element index {element}: count {count} < {bound} (r={shift}, N={len})"
    )]
    LowerBoundViolated { element: u64, count: u64, bound: f64, shift: u64, len: u64 },
}
