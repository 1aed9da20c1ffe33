use thiserror::Error;

/// Errors raised by the partition and divisor machinery.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid jump of order {order} on [{partition}]: {reason}")]
    InvalidJump {
        partition: String,
        order: u64,
        reason: JumpViolation,
    },
    #[error("invalid invariant jump of order {order} on [{partition}]: order must be below every part")]
    InvalidInvariantJump { partition: String, order: u64 },
    #[error("not a jump-form partition: {0}")]
    InvalidPartition(String),
    #[error("dimension mismatch: expected vector of length {expected}, got {actual}")]
    DimensionMismatch { expected: usize, actual: usize },
    #[error("{what} would hold {required} items, over the budget of {budget}")]
    LimitExceeded {
        what: &'static str,
        required: String,
        budget: usize,
    },
    #[error("arithmetic overflow in {0}")]
    Overflow(&'static str),
}

/// Which validity condition a rejected jump broke.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum JumpViolation {
    /// The order is zero.
    ZeroOrder,
    /// `a1 - r` would drop below the last term.
    FirstBelowLast,
    /// `r` would exceed the second term.
    ExceedsSecond,
}

impl std::fmt::Display for JumpViolation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            JumpViolation::ZeroOrder => "order must be positive",
            JumpViolation::FirstBelowLast => "first term minus order would be less than the last term",
            JumpViolation::ExceedsSecond => "order exceeds the second term",
        })
    }
}

pub type Result<T> = std::result::Result<T, Error>;
