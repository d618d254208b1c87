use thiserror::Error;

/// Errors raised by the numerical routines in this crate.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// An argument lies outside the domain of the requested function.
    #[error("domain error in {what}: {reason}")]
    Domain {
        what: &'static str,
        reason: String,
    },

    /// The requested quantity is an integral (or expectation value) that
    /// does not converge.
    #[error("divergent quantity in {what}: {reason}")]
    Divergence {
        what: &'static str,
        reason: String,
    },

    /// An iterative routine exhausted its budget before meeting its tolerance.
    /// `best` is the last estimate and `error_estimate` its estimated error.
    #[error("no convergence in {what}: best estimate {best:e} with error estimate {error_estimate:e}")]
    Convergence {
        what: &'static str,
        best: f64,
        error_estimate: f64,
    },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

pub(crate) fn domain(what: &'static str, reason: impl Into<String>) -> Error {
    Error::Domain {
        what,
        reason: reason.into(),
    }
}
