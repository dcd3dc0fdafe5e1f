use std::path::PathBuf;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("undefined degree: the zero polynomial has no least exponent")]
    UndefinedDegree,

    #[error("parse error at token {position}: {message}")]
    Parse { position: usize, message: String },

    #[error("invalid diagram: {0}")]
    InvalidDiagram(String),

    #[error("crossing index {index} out of range (diagram has {count} crossings)")]
    InvalidCrossing { index: usize, count: usize },

    #[error("expected a knot (1 component), got {components} components")]
    NotAKnot { components: usize },

    #[error("invalid configuration: {0}")]
    Config(String),

    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
