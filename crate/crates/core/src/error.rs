use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("ambient mismatch: {0} vs {1} variables")]
    AmbientMismatch(usize, usize),

    #[error("exponent overflow")]
    ExponentOverflow,

    #[error("{divisor} does not divide {dividend}")]
    NotDivisible { divisor: String, dividend: String },

    #[error("variable index {index} out of range for {ambient} variables")]
    VariableOutOfRange { index: usize, ambient: usize },

    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("invalid graph: {0}")]
    InvalidGraph(String),

    #[error("family parameter out of range: {0}")]
    FamilyOutOfRange(String),

    #[error("empty vertex or variable subset")]
    EmptySubset,

    #[error("parse error: {0}")]
    Parse(String),

    #[error("{what} = {value} exceeds the configured limit {limit}")]
    LimitExceeded {
        what: &'static str,
        value: u128,
        limit: u128,
    },

    #[error("ideal is not squarefree")]
    NotSquarefree,

    #[error("operation undefined on the zero or unit ideal")]
    DegenerateIdeal,

    #[error("ideal is not equigenerated")]
    NotEquigenerated,

    #[error("reconstruction mismatch: {0}")]
    ReconstructionMismatch(String),

    #[error("unsupported characteristic {0}; supported primes are 2, 3, 5, 7, 11, 13")]
    UnsupportedPrime(u32),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("prime {0:?} is not associated")]
    NotAssociated(Vec<usize>),

    #[error("budget exceeded: {0}")]
    BudgetExceeded(String),

    #[error("i/o error: {0}")]
    Io(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
