use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("partition part {0} is negative")]
    NegativePart(i64),
    #[error("partition {0:?} is not weakly decreasing")]
    NotWeaklyDecreasing(Vec<i64>),
    #[error("index set {entries:?} is not strictly increasing inside 1..={n}")]
    InvalidIndexSet { n: usize, entries: Vec<usize> },
    #[error("struck rows and columns differ in size or ambient order ({rows} vs {cols})")]
    ShapeMismatch { rows: usize, cols: usize },
    #[error("roots {0} and {1} coincide; use the recurrence or confluent path")]
    RepeatedRoots(usize, usize),
    #[error("series mode supplies e_k only up to k = {available}, but e_{needed} was required")]
    SeriesTruncation { needed: i64, available: usize },
    #[error("operation needs the zeros of the symbol, which are unavailable in series mode")]
    SeriesModeRootless,
    #[error("confluent Vandermonde determinant vanished; multiplicity grouping is inconsistent")]
    DegenerateDenominator,
    #[error("matrix is singular")]
    SingularMatrix,
    #[error("index ({r}, {s}) outside 1..={n}")]
    InvalidIndex { n: usize, r: usize, s: usize },
    #[error("method {0} is unavailable for this symbol")]
    MethodUnavailable(&'static str),
    #[error("this operation needs the zeros of a - x; supply them or use the float backend")]
    MissingRoots,
    #[error("eigenvector formula requires p >= 1")]
    RequiresPositiveP,
    #[error("root finder did not converge after {0} iterations")]
    NonConvergence(usize),
    #[error("invalid symbol: {0}")]
    InvalidSymbol(String),
    #[error("matrix is {rows}x{cols}, expected square")]
    NotSquare { rows: usize, cols: usize },
    #[error("order {order} exceeds oracle limit {limit}")]
    OrderTooLarge { order: usize, limit: usize },
    #[error("instance exceeds oracle limit: {0}")]
    SizeTooLarge(String),
    #[error("cannot parse scalar {0:?}")]
    ParseScalar(String),
    #[error("malformed document: {0}")]
    Document(String),
}

impl Error {
    /// Input (parse/validation) errors as opposed to mathematical failures.
    pub fn is_input_error(&self) -> bool {
        matches!(
            self,
            Error::NegativePart(_)
                | Error::NotWeaklyDecreasing(_)
                | Error::InvalidIndexSet { .. }
                | Error::ShapeMismatch { .. }
                | Error::InvalidIndex { .. }
                | Error::InvalidSymbol(_)
                | Error::ParseScalar(_)
                | Error::Document(_)
                | Error::NotSquare { .. }
        )
    }
}
