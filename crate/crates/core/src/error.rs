use thiserror::Error;

/// Errors shared across the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SemigroupError {
    #[error("generator list is empty")]
    EmptyInput,

    #[error("generators have gcd {gcd}, expected 1")]
    GcdError { gcd: i64 },

    #[error("element {0} is not positive")]
    NonPositiveElement(i64),

    #[error("complement of the gap set is not closed under addition: {a} + {b} = {sum} is listed as a gap")]
    NotASemigroup { a: i64, b: i64, sum: i64 },

    #[error("{0} is not a positive member of the semigroup")]
    NotAMember(i64),

    #[error("genus bound {requested} exceeds the enumeration cap {cap}")]
    CapExceeded { requested: i64, cap: i64 },

    #[error("operation requires genus >= 1, got the full semigroup <1>")]
    GenusZero,

    #[error("unknown family id {0}, expected 1, 2 or 3")]
    BadFamily(u8),

    #[error("family parameter tau must be >= 1, got {0}")]
    BadTau(i64),

    #[error("graded dimension formula produced {value} < 0 at degree {degree}; presentation or endomorphism data is inconsistent")]
    NegativeDimension { degree: i64, value: i64 },

    #[error("input too large: {0}")]
    InputTooLarge(String),
}
