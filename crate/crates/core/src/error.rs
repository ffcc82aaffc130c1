use thiserror::Error;

/// Errors shared by every layer of the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("zero has no inverse mod p")]
    ZeroInverse,
    #[error("operands live in different rings (p or variable count differ)")]
    RingMismatch,
    #[error("exponent arithmetic overflowed while forming a Frobenius power")]
    ExponentOverflow,
    #[error("ideal is not homogeneous")]
    NotHomogeneous,
    #[error("non-homogeneous input polynomial: {0}")]
    NotHomogeneousInput(String),
    #[error("ideal is not zero-dimensional: no pure power of variable #{0} in the initial ideal")]
    NotZeroDimensional(usize),
    #[error("quotient ring is not F-pure (Fedder test failed)")]
    NotFPure,
    #[error("generator #{0} of a does not lie in the radical of J")]
    NotInRadical(usize),
    #[error("search budget exceeded: {what} (limit {limit})")]
    SearchBudgetExceeded { what: &'static str, limit: u64 },
    #[error("defining ideal is not a complete intersection: {gens} generators but codimension {codim}")]
    NotCompleteIntersection { gens: usize, codim: usize },
    #[error("not a homogeneous system of parameters: {0}")]
    NotSystemOfParameters(String),
    #[error("the zero ideal is not a valid argument here")]
    EmptyIdeal,
    #[error("the unit ideal is not a valid argument here")]
    UnitIdeal,
    #[error("colon by an ideal with no nonzero generator")]
    DivisionByZeroGenerator,
    #[error("element is zero in the quotient ring")]
    ZeroInQuotient,
    #[error("parse error at {line}:{col}: {msg}")]
    Parse { line: usize, col: usize, msg: String },
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
}

impl Error {
    /// Stable machine-readable code used in JSON reports.
    pub fn code(&self) -> &'static str {
        match self {
            Error::NotPrime(_) => "not_prime",
            Error::ZeroInverse => "zero_inverse",
            Error::RingMismatch => "ring_mismatch",
            Error::ExponentOverflow => "exponent_overflow",
            Error::NotHomogeneous => "not_homogeneous",
            Error::NotHomogeneousInput(_) => "not_homogeneous_input",
            Error::NotZeroDimensional(_) => "not_zero_dimensional",
            Error::NotFPure => "not_f_pure",
            Error::NotInRadical(_) => "not_in_radical",
            Error::SearchBudgetExceeded { .. } => "search_budget_exceeded",
            Error::NotCompleteIntersection { .. } => "not_complete_intersection",
            Error::NotSystemOfParameters(_) => "not_system_of_parameters",
            Error::EmptyIdeal => "empty_ideal",
            Error::UnitIdeal => "unit_ideal",
            Error::DivisionByZeroGenerator => "division_by_zero_generator",
            Error::ZeroInQuotient => "zero_in_quotient",
            Error::Parse { .. } => "parse_error",
            Error::InvalidParameter(_) => "invalid_parameter",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
