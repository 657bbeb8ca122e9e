use thiserror::Error;

/// Failure modes shared by every evaluator in the crate.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// An argument lies outside the domain of the function.
    #[error("{func}: argument out of domain ({detail})")]
    Domain { func: &'static str, detail: String },

    /// The result is not representable as a finite `f64`.
    #[error("{func}: result overflows ({detail})")]
    Overflow { func: &'static str, detail: String },

    /// A validity condition of an analytic identity is violated.
    #[error("validity condition violated: {0}")]
    Validity(String),

    /// A model parameter violates its type invariant.
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    /// Adaptive quadrature stopped before reaching the requested tolerance.
    #[error("quadrature did not converge: value {value:e}, error estimate {error:e} after {evaluations} evaluations")]
    Quadrature {
        value: f64,
        error: f64,
        evaluations: usize,
    },

    /// The requested evaluation method does not apply to this model.
    #[error("unsupported combination: {0}")]
    Unsupported(String),

    /// Goodness-of-fit needs more samples than were supplied.
    #[error("too few samples: got {got}, need at least {need}")]
    TooFewSamples { got: usize, need: usize },
}

impl Error {
    pub(crate) fn domain(func: &'static str, detail: impl Into<String>) -> Self {
        Error::Domain {
            func,
            detail: detail.into(),
        }
    }

    pub(crate) fn overflow(func: &'static str, detail: impl Into<String>) -> Self {
        Error::Overflow {
            func,
            detail: detail.into(),
        }
    }

    /// True when the error stems from user input rather than numerics.
    pub fn is_parameter_error(&self) -> bool {
        matches!(
            self,
            Error::InvalidParameter(_) | Error::Unsupported(_) | Error::TooFewSamples { .. }
        )
    }
}

pub type Result<T> = std::result::Result<T, Error>;
