use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("expected a square matrix, got {rows}x{cols}")]
    NotSquare { rows: usize, cols: usize },

    #[error("shape mismatch: {0}")]
    Shape(String),

    #[error("columns are linearly dependent")]
    DependentColumns,

    #[error("generators do not lie in the lattice: {0}")]
    NotInLattice(String),

    #[error("vertex {vertex} out of range 1..={n}")]
    VertexOutOfRange { vertex: u32, n: u32 },

    #[error("dimension {k} out of range (complex has dimension {dim})")]
    DimOutOfRange { k: isize, dim: usize },

    #[error("boundary maps do not compose to zero at dimension {k}")]
    NotChainComplex { k: usize },

    #[error("missing weight for cell {0}")]
    MissingWeight(String),

    #[error("weight for cell {0} is not strictly positive")]
    NonPositiveWeight(String),

    #[error("invalid selection: {0}")]
    InvalidSelection(String),

    #[error("hypothesis violated: {0}")]
    Hypothesis(String),

    #[error("enumeration cap exceeded: {needed} candidates, cap is {cap}")]
    CapExceeded { needed: String, cap: u64 },

    #[error("parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("complex is not shifted: {0}")]
    NotShifted(String),

    #[error("unknown name: {0}")]
    Unknown(String),

    #[error("bad parameter: {0}")]
    BadParameter(String),

    #[error("matrix is singular: {0}")]
    Singular(String),
}
