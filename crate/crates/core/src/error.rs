use thiserror::Error;

use crate::roots::SupportRelation;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("rank mismatch: {left} vs {right}")]
    RankMismatch { left: usize, right: usize },

    #[error("invalid root [{lo}, {hi}] in rank {rank}")]
    InvalidRoot { lo: usize, hi: usize, rank: usize },

    #[error("value {value} at position {position} is outside [1, {n}]")]
    ValueOutOfRange { position: usize, value: usize, n: usize },

    #[error("not a parking function: only {count} values are <= {k}")]
    NotParking { k: usize, count: usize },

    #[error("not a permutation of 1..{n}")]
    NotPermutation { n: usize },

    #[error("parking function is not non-decreasing at position {position}")]
    NotNondecreasing { position: usize },

    #[error("order must be at least 1")]
    EmptyOrder,

    #[error("malformed diagram: {0}")]
    MalformedDiagram(String),

    #[error("malformed Dyck path: {0}")]
    MalformedDyckPath(String),

    #[error(transparent)]
    InvalidBasis(#[from] BasisViolation),

    #[error("generator index {k} out of range 1..{max}")]
    GeneratorOutOfRange { k: usize, max: usize },

    #[error("bad braid letter {0:?}")]
    BadLetter(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("malformed chain: {0}")]
    MalformedChain(String),

    #[error("row {row} out of range 1..{max}")]
    RowOutOfRange { row: usize, max: usize },

    #[error("cannot render {target} as {format}")]
    UnsupportedRender { format: String, target: String },
}

impl Error {
    /// Stable identifier for scripts.
    pub fn code(&self) -> &'static str {
        match self {
            Error::RankMismatch { .. } => "rank_mismatch",
            Error::InvalidRoot { .. } => "invalid_root",
            Error::ValueOutOfRange { .. } => "value_out_of_range",
            Error::NotParking { .. } => "not_parking",
            Error::NotPermutation { .. } => "not_permutation",
            Error::NotNondecreasing { .. } => "not_nondecreasing",
            Error::EmptyOrder => "empty_order",
            Error::MalformedDiagram(_) => "malformed_diagram",
            Error::MalformedDyckPath(_) => "malformed_dyck_path",
            Error::InvalidBasis(_) => "invalid_basis",
            Error::GeneratorOutOfRange { .. } => "generator_out_of_range",
            Error::BadLetter(_) => "bad_letter",
            Error::Precondition(_) => "precondition",
            Error::MalformedChain(_) => "malformed_chain",
            Error::RowOutOfRange { .. } => "row_out_of_range",
            Error::UnsupportedRender { .. } => "unsupported_render",
        }
    }
}

/// First violated condition found while validating an ordered root sequence.
///
/// Conditions are checked in a fixed order: length, rank, independence,
/// upper-triangularity of the Seifert matrix, then the arc conditions.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BasisViolation {
    #[error("expected {expected} roots, got {got}")]
    WrongLength { expected: usize, got: usize },

    #[error("root {index} has rank {got}, expected {expected}")]
    RankMismatch { index: usize, expected: usize, got: usize },

    #[error("roots are linearly dependent (rank {rank} < {n})")]
    Dependent { rank: usize, n: usize },

    #[error("seifert(a_{later}, a_{earlier}) = {value}, supports are {relation}")]
    Seifert {
        later: usize,
        earlier: usize,
        value: i32,
        relation: SupportRelation,
    },

    #[error("arc {index} = ({left}, {right}) is not an arc on 0..{n}")]
    ArcOutOfRange { index: usize, left: usize, right: usize, n: usize },

    #[error("arcs {first} and {second} intersect")]
    ArcsIntersect { first: usize, second: usize },

    #[error("arcs {outer} and {inner} share a left end but the inner one comes first")]
    SameLeftEnd { outer: usize, inner: usize },

    #[error("arcs {outer} and {inner} share a right end but the inner one comes last")]
    SameRightEnd { outer: usize, inner: usize },

    #[error("arc {ending} ends where arc {starting} starts but comes later")]
    Touching { ending: usize, starting: usize },

    #[error("arcs up to {index} close a cycle")]
    Cycle { index: usize },
}
