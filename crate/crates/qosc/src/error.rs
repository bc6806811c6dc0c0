use thiserror::Error;

/// Errors shared by every module of the crate.
#[derive(Debug, Clone, Error)]
pub enum Error {
    /// Input parameters outside the admissible region (alpha >= 0, beta >= 0,
    /// alpha * beta < 1) or an operation called in a regime where it is not defined.
    #[error("domain error: {0}")]
    Domain(String),

    /// A quantity left the range of f64 and the caller did not request the
    /// log-domain path.
    #[error("overflow in {0}; retry in log domain or reduce n")]
    Overflow(&'static str),

    /// An infinite series failed to reach the requested tail bound.
    #[error("series did not converge to tol {tol:e} within {max_terms} terms")]
    NonConvergence { tol: f64, max_terms: usize },

    /// A denominator parameter of a basic hypergeometric series hit a forbidden value.
    #[error("forbidden denominator parameter in basic hypergeometric series: {0}")]
    BadSeriesParameter(String),

    /// A truncated Fock basis was too small for the requested accuracy.
    #[error("truncated basis insufficient: {0}")]
    Truncation(String),

    /// The Jacobi eigensolver did not converge within its sweep cap.
    #[error("eigensolver did not converge after {0} sweeps")]
    EigenNonConvergence(usize),

    /// An internal cross-check failed (e.g. a spectrum that should be monotone is not).
    #[error("internal consistency violation: {0}")]
    Inconsistency(String),
}

pub type Result<T> = std::result::Result<T, Error>;
