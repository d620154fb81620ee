use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("generator list is empty")]
    EmptyInput,
    #[error("generator list contains zero")]
    ContainsZero,
    #[error("generators have gcd {0}; the complement in N is infinite")]
    GcdNotOne(u64),
    #[error("negative input {0}")]
    NegativeInput(i64),
    #[error("{0} is not an element of the semigroup")]
    NotAMember(u64),
    #[error("the semigroup is N itself (Frobenius number -1)")]
    WholeNumbersSemigroup,
    #[error("embedding dimension is one; the delta set is empty")]
    EmbeddingDimensionOne,
    #[error("delta bound does not fit in a signed 64-bit integer")]
    BoundOverflow,
    #[error("element {element} has more than {cap} factorizations")]
    TooManyFactorizations { element: u64, cap: usize },
    #[error("invalid relation: sides have images {left} and {right}")]
    InvalidRelation { left: u64, right: u64 },
    #[error("expected embedding dimension {expected}, found {found}")]
    WrongEmbeddingDimension { expected: usize, found: usize },
    #[error("semigroup is symmetric; use the symmetric decomposition instead")]
    SymmetricSemigroup,
    #[error("semigroup is not symmetric")]
    NotSymmetric,
    #[error("no decomposition <a*m1, a*m2, b*m1 + c*m2> found for a symmetric semigroup")]
    DecompositionNotFound,
    #[error("excluded parameters: {0}")]
    ExcludedParameters(String),
    #[error("gcd({n}, {d}) must be 1")]
    GcdViolation { n: u64, d: u64 },
    #[error("{0} is not an odd prime")]
    BadPrime(u64),
    #[error("prime {p} divides {d}")]
    DividesD { p: u64, d: u64 },
    #[error("degenerate parameters: {0}")]
    DegenerateParameters(String),
    #[error("bad parameters: {0}")]
    BadParameters(String),
    #[error("target is unrealizable: min {min} differs from gcd {gcd}")]
    UnrealizableByGcdTest { min: u64, gcd: u64 },
    #[error("target is unrealizable: a length set containing 1 must equal {{1}}")]
    UnrealizableLengthOne,
    #[error("partial scans cannot enter the catalog")]
    PartialScanRejected,
    #[error("parse error: {0}")]
    Parse(String),
    #[error("internal inconsistency: {0}")]
    Internal(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}
