use thiserror::Error;

use crate::linalg::Field;
use crate::report::AxiomReport;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("field mismatch: {0} vs {1}")]
    FieldMismatch(Field, Field),
    #[error("invalid field: {0}")]
    InvalidField(String),
    #[error("cannot parse scalar {0:?}")]
    ParseScalar(String),
    #[error("multiplication table is not a group: {0}")]
    NotAGroup(String),
    #[error("Hopf algebra axioms violated ({0})")]
    HopfAxioms(AxiomReport),
    #[error("comodule laws violated ({0})")]
    ComoduleAxioms(AxiomReport),
    #[error("comultiplication is not cocommutative, the dual algebra would not be commutative")]
    NotCocommutative,
    #[error("alpha_p requires a field of positive characteristic")]
    CharacteristicZero,
    #[error("no invariant integral: the group scheme is not linearly reductive")]
    NoInvariantIntegral,
    #[error("space of integrals has dimension {0}, expected 1")]
    IntegralSpace(usize),
    #[error("convolution algebra is not semisimple")]
    NotSemisimple,
    #[error("objects are defined over different Hopf algebras")]
    AlgebraMismatch,
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("invalid descriptor: {0}")]
    Descriptor(String),
}
