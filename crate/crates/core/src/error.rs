use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("shape mismatch: {left:?} vs {right:?}")]
    ShapeMismatch {
        left: (usize, usize),
        right: (usize, usize),
    },

    #[error("elements belong to different algebras")]
    AlgebraMismatch,

    /// Structure data failed a law checked at construction time.
    #[error("invalid {structure}: {law} fails at {witness}")]
    InvalidStructure {
        structure: String,
        law: String,
        witness: String,
    },

    /// Input to a conversion or functor does not satisfy the axioms it requires.
    #[error("axiom failure in {structure}: {law} fails at {witness}")]
    AxiomFailure {
        structure: String,
        law: String,
        witness: String,
    },

    #[error("action of generator {generator} is not a derivation: {witness}")]
    NotADerivation { generator: String, witness: String },

    #[error("action does not respect the bracket: {witness}")]
    NotARepresentation { witness: String },

    #[error("characters are not all rational: {0}")]
    NotSplit(String),

    #[error("cochain is not closed: {witness}")]
    NotClosed { witness: String },

    #[error("cochain degree {0} is out of the supported range")]
    DegreeOverflow(usize),

    #[error("arrows are not composable: {0}")]
    NonComposable(String),

    #[error("input is not of enveloping type: {0}")]
    NonEnveloping(String),

    #[error("inconsistent data: {0}")]
    Inconsistent(String),

    #[error("schema error at {path}: {reason}")]
    Schema { path: String, reason: String },
}

impl Error {
    pub fn invalid(structure: &str, law: &str, witness: impl Into<String>) -> Self {
        Error::InvalidStructure {
            structure: structure.to_string(),
            law: law.to_string(),
            witness: witness.into(),
        }
    }

    pub fn schema(path: impl Into<String>, reason: impl Into<String>) -> Self {
        Error::Schema {
            path: path.into(),
            reason: reason.into(),
        }
    }
}
