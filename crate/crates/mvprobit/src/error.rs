//! Error type shared across the estimation pipeline.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("domain error: {0}")]
    Domain(String),

    #[error("dimension mismatch: {0}")]
    Dimension(String),

    #[error("response column {column} contains a single class")]
    SingleClass { column: usize },

    #[error("separation detected in component {component}: standardized coefficient magnitude exceeded {limit:e}")]
    Separation { component: usize, limit: f64 },

    #[error("{context}: not converged after {iterations} iterations (gradient norm {grad_norm:e})")]
    NoConvergence {
        context: String,
        iterations: usize,
        grad_norm: f64,
    },

    #[error("rank-deficient design: {0}")]
    RankDeficient(String),

    #[error("matrix {name} is singular or ill-conditioned (rcond {rcond:e})")]
    Singular { name: String, rcond: f64 },

    #[error("matrix not positive definite: {0}")]
    NotPositiveDefinite(String),

    #[error("non-finite value in {0}")]
    NonFinite(String),

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("bootstrap unstable: {failed} of {requested} replicates failed")]
    BootstrapUnstable { failed: usize, requested: usize },

    #[error("invalid data at row {row}, column {column}: {message}")]
    InvalidData {
        row: usize,
        column: String,
        message: String,
    },

    #[error("stage {stage} failed for {unit}: {source}")]
    Stage {
        stage: u8,
        unit: String,
        #[source]
        source: Box<Error>,
    },
}

impl Error {
    /// Wrap an error with the stage and component/pair it came from.
    pub fn in_stage(self, stage: u8, unit: impl Into<String>) -> Self {
        Error::Stage {
            stage,
            unit: unit.into(),
            source: Box::new(self),
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
