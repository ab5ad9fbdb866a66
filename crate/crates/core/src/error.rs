use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("generator {letter} is not a vertex of a graph with {vertex_count} vertices")]
    InvalidGenerator { letter: usize, vertex_count: usize },

    #[error("commutation graphs are limited to {max} vertices, got {got}")]
    TooManyVertices { got: usize, max: usize },

    #[error("cannot parse {what}: {input:?}")]
    Parse { what: &'static str, input: String },

    #[error("word does not preserve the colour classes {{1,2,3}} and {{4,5,6}}")]
    NotBicoloured,

    #[error("invalid shuffle triple ({0}, {1}, {2})")]
    InvalidTriple(usize, usize, usize),

    #[error("invalid H letter index {0}, expected 1..=8")]
    InvalidHLetter(usize),

    #[error("word is not a pure braid")]
    NotPure,

    #[error("element does not lie in the kernel of the quotient map")]
    NotInKernel,

    #[error("inconsistent kernel setup: {0}")]
    Setup(String),

    #[error("generator images violate relator {relator}")]
    InconsistentImages { relator: usize },

    #[error("action is not transitive: orbit of 0 has {orbit} of {points} points")]
    NotTransitive { orbit: usize, points: usize },

    #[error("malformed presentation: {0}")]
    Presentation(String),

    #[error("decomposition stage {stage} failed: {detail}")]
    Stage { stage: &'static str, detail: String },
}
