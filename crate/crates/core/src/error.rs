use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: a has {a} entries, b has {b}")]
    DimensionMismatch { a: usize, b: usize },

    #[error("instance dimension must be at least 1")]
    EmptyDimension,

    #[error("transport data has {capacities} capacities but {costs} costs")]
    TransportDimensionMismatch { capacities: usize, costs: usize },

    #[error("transport field `{field}` must be positive")]
    NonPositive { field: &'static str },

    #[error("price {price} does not divide cost {cost} of truck type {index}")]
    IndivisibleCost { index: usize, cost: u64, price: u64 },

    #[error("price {price} does not divide required profit {profit}")]
    IndivisibleProfit { profit: u64, price: u64 },

    #[error("arithmetic overflow while {0}")]
    Overflow(&'static str),

    #[error("value {0} is too large for an explicit membership table")]
    TooLarge(u64),

    #[error("offsets alpha + beta must be positive for the general pipeline")]
    DegenerateOffsets,

    #[error("generator set is empty")]
    EmptyGeneratorSet,

    #[error("generators have gcd {0}, not a numerical semigroup")]
    NotNumerical(u64),

    #[error("no conductor found below safety cap {0}")]
    SafetyCap(u64),

    #[error("closure did not stabilize after {0} rounds")]
    IterationCap(usize),

    #[error("no witness found for claimed member {0}")]
    WitnessSearchFailure(u64),

    #[error("internal inconsistency: {0}")]
    InternalInconsistency(String),
}

pub type Result<T> = std::result::Result<T, Error>;
