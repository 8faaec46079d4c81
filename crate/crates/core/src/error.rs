use std::path::PathBuf;

use thiserror::Error;

use crate::mesh::MeshReport;
use crate::quandle::ValidationReport;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    /// Input that cannot even be interpreted as an operation table, map or set.
    #[error("malformed input: {0}")]
    Malformed(String),

    #[error("element {index} out of range for carrier of size {size}")]
    OutOfRange { index: usize, size: usize },

    #[error("axiom violations:\n{0}")]
    Axioms(ValidationReport),

    #[error("{what} exceeds the configured cap of {cap} (got {got})")]
    CapExceeded {
        what: &'static str,
        cap: usize,
        got: usize,
    },

    #[error("structure is a rack but not a quandle")]
    NotAQuandle,

    #[error("quandle is not a kei")]
    NotKei,

    #[error("set {0} is not a subquandle")]
    NotSubquandle(String),

    #[error("hypothesis not satisfied: {0}")]
    Hypothesis(String),

    /// A consequence of a proven theorem failed to hold. Indicates a bug.
    #[error("theorem-backed assertion failed: {0}")]
    Falsified(String),

    #[error("partition block {block} is not closed under the symmetries: {detail}")]
    BlockNotOrbitClosed { block: usize, detail: String },

    #[error("invalid mesh:\n{0}")]
    MeshInvalid(MeshReport),

    #[error("{path}:{line}: {msg}")]
    Parse {
        path: PathBuf,
        line: usize,
        msg: String,
    },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    /// True for the failures that would contradict a theorem rather than bad input.
    pub fn is_falsification(&self) -> bool {
        matches!(self, Error::Falsified(_))
    }
}
