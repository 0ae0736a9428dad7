//! Error type shared by every module of the core crate.

use alloc::string::String;
use thiserror::Error;

/// Everything that can go wrong in the core computations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A text input did not match the expected grammar.
    #[error("syntax error on line {line}: {message}")]
    Syntax { line: usize, message: String },
    /// A crossing position lies outside `1..=2m-1`.
    #[error("crossing {index} at position {position} is out of range 1..={max}")]
    CrossingRange { index: usize, position: usize, max: usize },
    /// The front traces more than one closed component.
    #[error("front has {components} components; only knots are supported")]
    MultiComponent { components: usize },
    /// A generator or variable has no assigned value.
    #[error("no value for {0}")]
    MissingValue(String),
    /// A base-point variable was sent to zero.
    #[error("base-point variable {0} must map to a unit")]
    ZeroUnit(String),
    /// Some term of a differential does not have grading one less than its generator.
    #[error("grading mismatch in the differential of {generator}: term {term} has grading {found}, expected {expected}")]
    Grading { generator: String, term: String, found: i64, expected: i64 },
    /// The differential does not square to zero.
    #[error("d^2 is nonzero on {generator}: {residue}")]
    DSquared { generator: String, residue: String },
    /// ρ does not divide twice the rotation number.
    #[error("rho={rho} does not divide 2r={two_r}")]
    Rho { rho: u32, two_r: i64 },
    /// `p` in `F_p` is not prime.
    #[error("{0} is not prime")]
    NotPrime(u64),
    /// Enumeration needs a finite field.
    #[error("enumeration requires a finite field")]
    InfiniteField,
    /// Brute-force search space exceeds the configured budget.
    #[error("search space {needed} exceeds budget {budget}")]
    Budget { needed: u128, budget: u128 },
    /// A candidate map is not an augmentation.
    #[error("not an augmentation: {0}")]
    NotAugmentation(String),
    /// A ruling is not a valid ρ-graded normal ruling of the diagram.
    #[error("invalid ruling: {0}")]
    InvalidRuling(String),
    /// The odd-ρ constructor was handed an oriented ruling.
    #[error("ruling is oriented; an unoriented ruling is required")]
    OrientedRuling,
    /// An internal consistency check of a construction failed.
    #[error("internal check failed: {0}")]
    Internal(String),
}
