use std::path::PathBuf;

use thiserror::Error;

/// Errors produced by the solvers, calculators and the command-line runner.
#[derive(Debug, Error)]
pub enum Error {
    #[error("non-finite argument {0}")]
    NonFinite(f64),

    #[error("no Airy zero with index {index}; supported indices are 0..={max}")]
    ZeroIndexOutOfRange { index: usize, max: usize },

    #[error("root search for Airy zero {index} did not converge")]
    RootNotConverged { index: usize },

    #[error("quadrature on [{lower}, {upper}] did not reach tolerance: estimated error {error:e} after {intervals} intervals")]
    QuadratureNotConverged {
        lower: f64,
        upper: f64,
        error: f64,
        intervals: usize,
    },

    #[error("normalization of state {n} disagrees with the closed form: relative deviation {deviation:e}")]
    NormalizationMismatch { n: usize, deviation: f64 },

    #[error("invalid value for `{field}`: {constraint}")]
    InvalidParameter {
        field: &'static str,
        constraint: String,
    },

    #[error("unknown energy unit `{0}` (expected J, eV or neV)")]
    UnknownUnit(String),

    #[error("dipole energy is singular at zero separation")]
    ZeroSeparation,

    #[error("while computing `{field}`: {source}")]
    Field {
        field: &'static str,
        #[source]
        source: Box<Error>,
    },

    #[error("configuration: {0}")]
    Config(String),

    #[error("{}: {source}", path.display())]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
}

impl Error {
    pub(crate) fn invalid(field: &'static str, constraint: impl Into<String>) -> Self {
        Error::InvalidParameter {
            field,
            constraint: constraint.into(),
        }
    }

    pub(crate) fn in_field(field: &'static str) -> impl FnOnce(Error) -> Error {
        move |source| Error::Field {
            field,
            source: Box::new(source),
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
