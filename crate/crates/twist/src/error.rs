use thiserror::Error;

/// Failures of the twist-construction pipeline. Condition failures of a
/// candidate triple are not errors (they are reported as verdicts); these
/// errors mark inputs or stages where no meaningful answer exists.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TwistError {
    /// The embedded resolution does not describe a unital subalgebra of the
    /// ambient algebra (wrong shapes, wrong unit, or non-multiplicative
    /// embedding rows).
    #[error("embedding rejected: {0}")]
    BadEmbedding(String),
    /// The resolution could not be transported to a complex of bimodules
    /// over the ambient algebra.
    #[error("lifted complex could not be formed: {0}")]
    ComplexNotFormed(String),
    /// A comparison map required by the iterated-kernel construction does
    /// not exist.
    #[error("no comparison map at stage {stage}: {detail}")]
    LiftNotFound { stage: usize, detail: String },
    /// The requested check has no meaning for the given input (for example
    /// a group-algebra-only comparison on a quiver algebra).
    #[error("not applicable: {0}")]
    Inapplicable(String),
    /// Modules or bimodules over different algebras were mixed.
    #[error("modules or bimodules live over mismatched algebras")]
    AlgebraMismatch,
}
