use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// An input violates a documented precondition.
    #[error("{field}: {reason}")]
    InvalidParameter { field: &'static str, reason: String },

    /// The operation needs a band gap but the parameters close it.
    #[error("{field}: gap closed ({reason})")]
    GapClosed { field: &'static str, reason: String },

    /// An eigenvector was requested at a point of multiplicity two.
    #[error("{field}: degenerate eigenvalue ({reason})")]
    Degenerate { field: &'static str, reason: String },

    #[error("matrix: non-real spectrum (discriminant {discriminant:e})")]
    NonRealSpectrum { discriminant: f64 },

    #[error("omega: {reason}")]
    OutsideGap { reason: String },

    #[error("matrix: Jacobi iteration did not converge after {sweeps} sweeps (off-diagonal {off_norm:e})")]
    NoConvergence { sweeps: usize, off_norm: f64 },

    #[error("n_points: discretization too coarse (overlap {overlap:e} at step {step})")]
    CoarseDiscretization { step: usize, overlap: f64 },

    #[error("dt: {dt} exceeds stability bound {bound}")]
    Unstable { dt: f64, bound: f64 },
}

impl Error {
    pub(crate) fn invalid(field: &'static str, reason: impl Into<String>) -> Self {
        Error::InvalidParameter { field, reason: reason.into() }
    }

    /// Whether the error is a parameter validation failure, as opposed to a
    /// numerical precondition that the parameters do not meet.
    pub fn is_validation(&self) -> bool {
        matches!(self, Error::InvalidParameter { .. })
    }
}
