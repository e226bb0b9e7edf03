use thiserror::Error;

use crate::linalg::Field;
use crate::report::ValidationReport;

pub type Result<T, E = AlgebraError> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum AlgebraError {
    #[error("mixed fields: {0} and {1}")]
    MixedFields(Field, Field),
    #[error("division by zero")]
    DivisionByZero,
    #[error("{0} is not an admissible prime characteristic")]
    NotPrime(u64),
    #[error("scalar literal {0}")]
    ScalarSyntax(String),
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),

    #[error("invalid group: {0}")]
    InvalidGroup(String),
    #[error("not a group homomorphism: {0}")]
    NotHomomorphism(String),
    #[error("embedding is not injective")]
    NotInjective,
    #[error("image is not a normal subgroup: {0}")]
    NotNormal(String),
    #[error("group is not abelian: {0}")]
    NotAbelian(String),
    #[error("arrows are not composable: {0}")]
    NonComposable(String),
    #[error("invalid crossed module")]
    InvalidCrossedModule(ValidationReport),

    #[error("not a bicharacter: {0}")]
    NotBicharacter(String),
    #[error("not an algebra automorphism: {0}")]
    NotAlgebraAutomorphism(String),
    #[error("antipode is missing")]
    MissingAntipode,
    #[error("no antipode exists")]
    NoAntipode,
    #[error("not a grouplike family: {0}")]
    NotGrouplike(String),
    #[error("not a pivotal element")]
    NotPivotal(ValidationReport),
    #[error("module is not homogeneous")]
    NotHomogeneous,
    #[error("not an integral: {0}")]
    NotIntegral(String),
    #[error("maps are not mutually inverse at component {component}")]
    NotInvertible { component: usize },
    #[error("defining identity failed: {0}")]
    DefiningIdentityFailed(String),
    #[error("axiom check failed")]
    AxiomCheckFailed(ValidationReport),
    #[error("structure does not validate")]
    Invalid(ValidationReport),
    #[error("{0}")]
    Unsupported(String),
}

impl AlgebraError {
    pub(crate) fn shape(msg: impl Into<String>) -> Self {
        AlgebraError::ShapeMismatch(msg.into())
    }
}
