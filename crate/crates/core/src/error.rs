use alloc::string::String;
use core::fmt;

/// Errors raised by the exact pipeline and the finite-field oracle.
///
/// Variants tagged "internal" mean a computed object failed one of the
/// structural checks (integrality, parity, triangularity). They indicate a
/// bug, not bad input.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// A partition was given with an increasing step.
    NotAPartition(String),
    /// Division of a polynomial or rational function by zero.
    DivisionByZero,
    /// A division that must be exact left a remainder (internal).
    InexactDivision(String),
    /// A zero pivot was met in the `L D Lᵗ` decomposition.
    ZeroPivot { index: usize },
    /// A matrix entry that must lie in `ℤ[t]` did not (internal).
    NotIntegral(String),
    /// A polynomial had a term of the wrong parity (internal).
    Parity(String),
    /// A polynomial that must lie in `ℕ[t]` has a negative coefficient (internal).
    Negative(String),
    /// A triangularity or support condition failed (internal).
    Support(String),
    /// Reconstruction `P Λ Pᵗ = Ω` failed (internal).
    Reconstruction,
    /// Invalid argument: non-prime modulus, non-nilpotent matrix, size mismatch.
    InvalidInput(String),
    /// An enumeration would exceed its configured budget.
    BudgetExceeded { required: u64, limit: u64 },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::NotAPartition(s) => write!(f, "not a partition: {s}"),
            Error::DivisionByZero => write!(f, "division by zero"),
            Error::InexactDivision(s) => write!(f, "inexact division: {s}"),
            Error::ZeroPivot { index } => write!(f, "zero pivot at position {index}"),
            Error::NotIntegral(s) => write!(f, "entry not in Z[t]: {s}"),
            Error::Parity(s) => write!(f, "parity violation: {s}"),
            Error::Negative(s) => write!(f, "negative coefficient: {s}"),
            Error::Support(s) => write!(f, "support violation: {s}"),
            Error::Reconstruction => write!(f, "P Λ Pᵗ does not reconstruct Ω"),
            Error::InvalidInput(s) => write!(f, "invalid input: {s}"),
            Error::BudgetExceeded { required, limit } => write!(
                f,
                "enumeration needs {required} points, budget is {limit}"
            ),
        }
    }
}

impl core::error::Error for Error {}
