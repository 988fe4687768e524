use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("q -> q±1 substitution requires an ordinary polynomial (no negative exponents)")]
    NegativeDegreeShift,
    #[error("inexact division: {0}")]
    InexactDivision(String),
    #[error("size mismatch: {0}")]
    SizeMismatch(String),
    #[error("non-integral coefficient in {0}")]
    NonIntegralCoefficient(String),
    #[error("resource limit exceeded: {0}")]
    ResourceLimit(String),
    #[error("bad parameters: {0}")]
    BadParams(String),
    #[error("partition {0} does not fit in the staircase")]
    NotInStaircase(String),
    #[error("invalid area sequence: {0}")]
    InvalidAreaSequence(String),
    #[error("({0}, {1}) is not a non-strict outer corner")]
    NotAnOuterCorner(usize, usize),
    #[error("no strict edge of {0} is an outer corner of the current diagram")]
    IrreducibleStrictEdge(String),
    #[error("edge ({0}, {1}) is not admissible")]
    NotAdmissible(usize, usize),
    #[error("{0} is not abelian")]
    NotAbelian(String),
    #[error("admissibility violated: {0}")]
    AdmissibilityViolation(String),
    #[error("operation is only defined for diagrams without strict edges")]
    StrictEdgesPresent,
    #[error("edge set is not a unit-interval graph: {0}")]
    NotUnitInterval(String),
    #[error("{0} is not in any of the named families")]
    NotInFamilies(String),
    #[error("tableau is not standard: {0}")]
    NotStandard(String),
    #[error("coloring generating function is not symmetric: {0}")]
    NotSymmetric(String),
    #[error("recursion depth bound {0} exceeded")]
    DepthExceeded(usize),
}

pub type Result<T> = std::result::Result<T, Error>;
