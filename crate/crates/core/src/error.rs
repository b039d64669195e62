use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("degree mismatch: expected {expected}, found {found}")]
    DegreeMismatch { expected: usize, found: usize },

    #[error("not a permutation: {0}")]
    NotAPermutation(String),

    #[error("{what} exceeds cap ({size} > {cap})")]
    CapExceeded { what: &'static str, size: u128, cap: u128 },

    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("group is not transitive")]
    NotTransitive,

    #[error("block must be a nonempty set of points")]
    EmptyBlock,

    #[error("{ell} does not divide the degree {degree}")]
    NotADivisor { ell: usize, degree: usize },

    #[error("group spec parse error at position {position}: {message}")]
    Parse { position: usize, message: String },

    #[error("invalid group table: {0}")]
    InvalidTable(String),

    #[error("element {element} out of range for a group of order {order}")]
    ElementOutOfRange { element: usize, order: usize },

    #[error("set is not a subgroup")]
    NotASubgroup,

    #[error("subgroup is not normal")]
    NotNormal,

    #[error("automorphism does not preserve the kernel (alpha(H) != H)")]
    KernelNotPreserved,

    #[error("not a group automorphism: {0}")]
    NotAnAutomorphism(String),

    #[error("connection set is not closed under inverses (graph mode)")]
    NotInverseClosed,

    #[error("digraph is not vertex-transitive")]
    NotVertexTransitive,

    #[error("io error: {0}")]
    Io(String),
}
