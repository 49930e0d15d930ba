use thiserror::Error;

/// Errors raised by the tiling, schedule and solver APIs.
///
/// Verification failures are *not* errors: [`crate::verify_exact_cover`]
/// reports them as data.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("degenerate placement: axis {axis} origin {origin:?} wraps onto itself on a torus of extent {extent}")]
    DegeneratePlacement {
        axis: usize,
        origin: Vec<i64>,
        extent: usize,
    },

    #[error("point set is not an SDR hole: it has neither one point in every row nor one in every column")]
    NotAnSdrHole,

    #[error("construction failed verification: {0}")]
    NotACover(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn invalid<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::InvalidParameter(msg.into()))
}
