use thiserror::Error;

/// Why a built-in resolution family or an explicit description was refused.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ResolutionError {
    #[error("algebra is not a truncated polynomial algebra k[x]/(x^n) with n >= 2")]
    NotTruncatedPoly,
    #[error("construction requires a different base-field characteristic")]
    WrongCharacteristic,
    #[error("algebra basis is not a group")]
    NotGroupAlgebra,
    #[error("group is not cyclic")]
    NotCyclic,
    #[error("field characteristic does not divide the group order")]
    CharacteristicMismatch,
    #[error("cannot parse tensor element: {0}")]
    BadElement(String),
}
