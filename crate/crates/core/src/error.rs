use thiserror::Error;

/// Failures while reading the symbol and orbifold grammars.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("syntax error at byte {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("fibre ({alpha},{beta}) violates gcd(alpha, beta) = 1")]
    NotCoprime { alpha: i64, beta: i64 },
    #[error("cone order {0} is less than 2")]
    ConeOrder(i64),
    #[error("a non-orientable surface must have genus at least 1")]
    NonOrientableGenusZero,
    #[error("a bounded symbol carries no obstruction term; expected b = 0, found {0}")]
    BoundedObstruction(i64),
}

impl ParseError {
    pub(crate) fn syntax(pos: usize, msg: impl Into<String>) -> Self {
        ParseError::Syntax { pos, msg: msg.into() }
    }
}

/// Errors raised while reading a finite-group catalogue.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CatalogueError {
    #[error("line {line}: {msg}")]
    Malformed { line: usize, msg: String },
    #[error("line {line}: point {point} exceeds degree {degree}")]
    PointExceedsDegree { line: usize, point: usize, degree: usize },
    #[error("line {line}: duplicate group name {name:?}")]
    DuplicateName { line: usize, name: String },
    #[error("group {name:?} has order larger than the expansion cap {cap}")]
    TooLarge { name: String, cap: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error(transparent)]
    Catalogue(#[from] CatalogueError),
    #[error("operation requires a closed symbol")]
    BoundedSymbol,
    #[error("operation requires a symbol with non-empty boundary")]
    ClosedSymbol,
    #[error("operation requires a non-orientable base surface")]
    OrientableBase,
    #[error("orbifold comparison requires closed orbifolds")]
    OrbifoldBoundary,
    #[error("closed and bounded symbols cannot be compared")]
    MixedBoundary,
    #[error("{what} exceeded its cap of {limit}")]
    CapExceeded { what: &'static str, limit: usize },
    #[error("invalid coset table: {0}")]
    InvalidCosetTable(String),
    #[error("inconsistent reduction: {0}")]
    Diagnostic(String),
}

impl Error {
    /// Stable snake_case name of the variant.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::Parse(_) => "parse",
            Error::Catalogue(_) => "catalogue",
            Error::BoundedSymbol => "bounded_symbol",
            Error::ClosedSymbol => "closed_symbol",
            Error::OrientableBase => "orientable_base",
            Error::OrbifoldBoundary => "orbifold_boundary",
            Error::MixedBoundary => "mixed_boundary",
            Error::CapExceeded { .. } => "cap_exceeded",
            Error::InvalidCosetTable(_) => "invalid_coset_table",
            Error::Diagnostic(_) => "diagnostic",
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
