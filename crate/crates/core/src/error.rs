//! Error type shared across the crate.

/// Everything that can go wrong while building grids, operators, families,
/// or running the solvers.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("invalid grid: {0}")]
    InvalidGrid(String),

    #[error("operands live on different grids")]
    GridMismatch,

    #[error("non-finite value at sample index {0}")]
    NonFiniteSample(usize),

    #[error("invalid parameter `{name}`: {reason}")]
    InvalidParameter { name: &'static str, reason: String },

    #[error("eigenvalue iteration failed to converge (window ending at index {0})")]
    NoConvergence(usize),

    #[error(
        "eigenvector residual {residual:.3e} exceeds tolerance {tolerance:.3e} \
         for eigenvalue {index} = {re:.6e}{im:+.6e}i"
    )]
    ResidualTooLarge {
        index: usize,
        residual: f64,
        tolerance: f64,
        re: f64,
        im: f64,
    },

    #[error(
        "potential has not decayed at the grid ends: max |V| = {found:.3e} over the outer \
         5% of nodes, threshold {threshold:.3e}; enlarge the box or sample a shorter tail"
    )]
    PotentialNotDecayed { found: f64, threshold: f64 },

    #[error("requested {requested} eigenpairs from a dimension-{dimension} operator")]
    CountTooLarge { requested: usize, dimension: usize },

    #[error("operation requires domain {required}, got {got}")]
    WrongDomain {
        required: &'static str,
        got: &'static str,
    },

    #[error("malformed document: {0}")]
    MalformedDocument(String),
}

pub type Result<T> = std::result::Result<T, Error>;
