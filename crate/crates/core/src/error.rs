use thiserror::Error;

use crate::planimeter::Config;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("parameter {t} outside curve domain [0, {duration}]")]
    Domain { t: f64, duration: f64 },

    #[error("operation requires a closed curve (endpoint gap {gap:e})")]
    OpenCurve { gap: f64 },

    #[error("degenerate region: signed area {area:e} is too small")]
    DegenerateRegion { area: f64 },

    #[error("composite curve is discontinuous at junction {index} (gap {gap:e})")]
    Discontinuous { index: usize, gap: f64 },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("non-finite value encountered in {0}")]
    NonFinite(&'static str),

    #[error("planner did not converge after {loops} loops (residual {residual:e})")]
    Convergence {
        loops: usize,
        residual: f64,
        best: Config,
    },
}

impl Error {
    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidParameter(msg.into())
    }
}
