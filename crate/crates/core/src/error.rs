use std::fmt;

use thiserror::Error;

/// Ring or module law that a presentation failed to satisfy.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Axiom {
    WellDefined,
    Commutativity,
    Associativity,
    Distributivity,
    Identity,
    Unitality,
    ActionAssociativity,
    Bilinearity,
}

impl fmt::Display for Axiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            Axiom::WellDefined => "well-definedness",
            Axiom::Commutativity => "commutativity",
            Axiom::Associativity => "associativity",
            Axiom::Distributivity => "distributivity",
            Axiom::Identity => "identity",
            Axiom::Unitality => "unitality",
            Axiom::ActionAssociativity => "action associativity",
            Axiom::Bilinearity => "bilinearity",
        };
        f.write_str(name)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{axiom} fails at {witness:?}")]
    AxiomViolation {
        axiom: Axiom,
        /// Coordinate vectors of the offending elements.
        witness: Vec<Vec<u32>>,
    },
    #[error("{what} has size {size}, above the cap of {cap}")]
    SizeExceeded {
        what: &'static str,
        size: usize,
        cap: usize,
    },
    #[error("operands belong to different rings")]
    RingMismatch,
    #[error("operands belong to different modules")]
    ModuleMismatch,
    #[error("malformed presentation: {0}")]
    InvalidPresentation(String),
    #[error("coordinates {0:?} do not name an element")]
    InvalidElement(Vec<u32>),
    #[error("ideal is not prime: {a:?} * {b:?} lies in it")]
    NotPrime { a: Vec<u32>, b: Vec<u32> },
    #[error("ideal is not maximal")]
    NotMaximal,
    #[error("ideal is not proper")]
    NotProper,
    #[error("not homogeneous: {a:?} * {m:?} leaves the submodule")]
    NotHomogeneous { a: Vec<u32>, m: Vec<u32> },
    #[error("arity mismatch: {0}")]
    ArityMismatch(String),
    #[error("operation not supported for this instance: {0}")]
    Unsupported(&'static str),
    #[error("unknown check `{0}`")]
    UnknownCheck(String),
}

pub type Result<T> = std::result::Result<T, Error>;
