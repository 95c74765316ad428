use thiserror::Error;

use crate::quadrature::Port;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("{what} must be finite, got {value}")]
    Domain { what: &'static str, value: f64 },

    #[error("invalid parameter `{name}` = {value}: {reason}")]
    InvalidParameter {
        name: &'static str,
        value: f64,
        reason: &'static str,
    },

    #[error("port {0:?} needs a beam splitter")]
    MissingSplitter(Port),

    #[error("photon statistics undefined: mean photon rate is {rate}")]
    UndefinedStatistics { rate: f64 },

    #[error("quadrature did not reach tolerance {tol:e} (residual estimate {residual:e})")]
    NotConverged { tol: f64, residual: f64 },
}

pub(crate) fn ensure_finite(what: &'static str, value: f64) -> Result<f64> {
    if value.is_finite() {
        Ok(value)
    } else {
        Err(Error::Domain { what, value })
    }
}
