use thiserror::Error;

/// Errors raised by field, matrix, carrier and automorphism construction.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("modulus {0} is not prime")]
    NotPrime(u32),
    #[error("zero has no multiplicative inverse")]
    ZeroInverse,
    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },
    #[error("modulus mismatch: {left} vs {right}")]
    ModulusMismatch { left: u32, right: u32 },
    #[error("matrix is singular")]
    Singular,
    #[error("carrier would have {size} elements, above the guard of {guard}")]
    TooLarge { size: u128, guard: u64 },
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("cannot act on F_p^{vector_dim} with {matrix_dim}x{matrix_dim} matrices")]
    ActionMismatch { vector_dim: usize, matrix_dim: usize },
    #[error("map is not a homomorphism at ({0}, {1})")]
    NotHomomorphism(String, String),
    #[error("map is not bijective: {0} and {1} share an image")]
    NotBijective(String, String),
    #[error("{0} is not an element of the carrier")]
    NotInCarrier(String),
    #[error("carrier {0} carries no group structure")]
    NotAGroupCarrier(String),
    #[error("group carrier is not closed: {0} * {1} = {2}")]
    GroupNotClosed(String, String, String),
    #[error("duplicate carrier element {0}")]
    DuplicateElement(String),
}
