use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("{0} is not a prime")]
    NotPrime(u32),
    #[error("prime {0} outside supported range 2..=13")]
    PrimeOutOfRange(u32),
    #[error("p must be odd for extraspecial covers")]
    EvenPrime,
    #[error("modulus mismatch: {0} vs {1}")]
    ModulusMismatch(u32, u32),
    #[error("dimension mismatch: {0} vs {1}")]
    DimensionMismatch(usize, usize),
    #[error("dimension must be at least 1")]
    ZeroDimension,
    #[error("size limit exceeded: {size} > {limit}")]
    SizeLimit { size: u128, limit: u128 },
    #[error("connection set contains the identity")]
    IdentityInConnection,
    #[error("connection set is not closed under inverses (element id {0})")]
    NotInverseClosed(usize),
    #[error("connection sets overlap with their inverses")]
    ConnectionOverlap,
    #[error("gain defined inconsistently on arc ({0}, {1})")]
    InconsistentGain(usize, usize),
    #[error("matrix is not Hermitian: deviation {0:e} at ({1}, {2})")]
    NotHermitian(f64, usize, usize),
    #[error("matrix is not square or has wrong size")]
    BadMatrixShape,
    #[error("function domain mismatch: {0} vs {1}")]
    DomainMismatch(usize, usize),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("parse error: {0}")]
    Parse(String),
}
