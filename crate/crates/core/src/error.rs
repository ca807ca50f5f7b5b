use thiserror::Error;

/// Library-wide error type.
///
/// Every variant carries a short machine-parsable code (the `code()` method)
/// so the CLI can emit single-line errors with stable prefixes.
#[derive(Debug, Error)]
pub enum Error {
    /// A query left the sampled domain (region outside grid, argument out of range).
    #[error("out of domain: {0}")]
    OutOfDomain(String),

    /// Structurally invalid input (bad interval, too few nodes, empty data).
    #[error("invalid input: {0}")]
    InvalidInput(String),

    /// A parity- or dimension-restricted operation was called with the wrong d.
    #[error("dimension not admissible: {0}")]
    Dimension(String),

    /// Grid resolution cannot represent the requested content (Nyquist-type checks).
    #[error("grid resolution insufficient: {0}")]
    Resolution(String),

    /// Requested evolution time or region exceeds the physical grid.
    #[error("grid too small: {0}")]
    GridExtent(String),

    /// Decay / support / truncation precondition violated, with the measured mass.
    #[error("insufficient decay: {0}")]
    Decay(String),

    /// An iteration failed to converge within its budget.
    #[error("no convergence: {0}")]
    Convergence(String),

    /// Extrapolation ladder produced unstable values.
    #[error("unstable extrapolation: {0}")]
    Extrapolation(String),

    /// Requested derivative or expansion order beyond the configured cap.
    #[error("order too large: {0}")]
    Order(String),

    /// File and serialization problems.
    #[error("io: {0}")]
    Io(String),

    /// Malformed CSV / JSON content.
    #[error("parse: {0}")]
    Parse(String),
}

impl Error {
    /// Stable short code for machine-parsable CLI output.
    pub fn code(&self) -> &'static str {
        match self {
            Error::OutOfDomain(_) => "E_DOMAIN",
            Error::InvalidInput(_) => "E_INPUT",
            Error::Dimension(_) => "E_DIM",
            Error::Resolution(_) => "E_NYQUIST",
            Error::GridExtent(_) => "E_GRID",
            Error::Decay(_) => "E_DECAY",
            Error::Convergence(_) => "E_CONVERGE",
            Error::Extrapolation(_) => "E_EXTRAP",
            Error::Order(_) => "E_ORDER",
            Error::Io(_) => "E_IO",
            Error::Parse(_) => "E_PARSE",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
