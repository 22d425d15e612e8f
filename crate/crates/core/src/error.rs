use thiserror::Error;

/// Errors raised by the closed forms, the shooting oracle and the evolver.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// An argument lies outside the domain where the formula is defined.
    #[error("domain error: {0}")]
    Domain(String),

    /// An experiment setup (grid, packet, boundary pairing) is inconsistent.
    #[error("configuration error: {0}")]
    Config(String),

    /// A caller supplied too little data to do anything with.
    #[error("usage error: {0}")]
    Usage(String),

    /// The plane-wave decomposition found no incoming component.
    #[error("degenerate plane-wave decomposition: incoming amplitude vanishes")]
    DegenerateDecomposition,

    /// A linear solve broke down.
    #[error("numerical error: {0}")]
    Numerical(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn require_finite(name: &str, value: f64) -> Result<()> {
    if value.is_finite() {
        Ok(())
    } else {
        Err(Error::Domain(format!("{name} must be finite, got {value}")))
    }
}

pub(crate) fn require_positive(name: &str, value: f64) -> Result<()> {
    require_finite(name, value)?;
    if value > 0.0 {
        Ok(())
    } else {
        Err(Error::Domain(format!("{name} must be > 0, got {value}")))
    }
}
