use thiserror::Error;

use crate::group::GroupElement;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, Error, PartialEq)]
pub enum Error {
    #[error("invalid group parameters: {0}")]
    InvalidParams(String),

    #[error("group order {order} exceeds the enumeration cap {cap}")]
    CapExceeded { order: u64, cap: u64 },

    #[error("element {0} is not a canonical element of this group")]
    ForeignElement(GroupElement),

    #[error("element {0} has no finite order within |G| steps")]
    NoFiniteOrder(GroupElement),

    /// A brute-force computation and its closed form disagree. Always fatal.
    #[error("closed form disagrees with brute force: {0}")]
    ClosedFormMismatch(String),

    #[error("class functions live on different domains")]
    DomainMismatch,

    #[error("{0} is not a subgroup of the stated group")]
    NotASubgroup(String),

    #[error("subgroup is not abelian")]
    NotAbelian,

    #[error("unsupported centralizer of order {0}")]
    UnsupportedCentralizer(usize),

    #[error("inner product {value} is neither 0 nor 1 within tolerance")]
    AmbiguousInnerProduct { value: f64 },

    #[error("character table check failed: {0}")]
    CharacterTable(String),

    #[error("indicator {value} is not integral (m = {m}, {context})")]
    NonIntegral { value: f64, m: u64, context: String },

    #[error("indicator paths disagree: {0}")]
    PathDisagreement(String),

    #[error("{0}")]
    Invalid(String),
}
