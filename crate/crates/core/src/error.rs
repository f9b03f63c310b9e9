use thiserror::Error;

use crate::monomial::ExponentVector;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("arity mismatch: expected {expected} variables, found {found}")]
    ArityMismatch { expected: usize, found: usize },

    #[error("variable index {index} out of range for {arity} variables")]
    VariableOutOfRange { index: usize, arity: usize },

    #[error("the monomial 1 is not allowed here")]
    UnitMonomial,

    #[error("the module is zero")]
    ZeroModule,

    #[error("bottom ideal is not contained in top ideal (generator {witness})")]
    ContainmentViolated { witness: ExponentVector },

    /// A monomial of the target that no Stanley space contains.
    #[error("monomial {witness} of the module is not covered")]
    NotCovered { witness: ExponentVector },

    #[error("monomial {witness} lies in spaces {first} and {second}")]
    Overlap {
        witness: ExponentVector,
        first: usize,
        second: usize,
    },

    #[error("monomial {witness} is covered but does not belong to the module")]
    OutsideTarget { witness: ExponentVector },

    #[error("variable {index} is not regular on the module")]
    NotRegular { index: usize },

    #[error("chain is not ascending at link {index}")]
    ChainBroken { index: usize },

    #[error("box corner {corner} is below the required corner {required}")]
    BadBox {
        corner: ExponentVector,
        required: ExponentVector,
    },

    #[error("search exceeded the node budget of {budget}")]
    SearchLimitExceeded { budget: u64 },

    #[error("invalid interval partition: {0}")]
    InvalidPartition(String),

    #[error("invalid input: {0}")]
    InvalidInput(String),
}
