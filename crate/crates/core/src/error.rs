use thiserror::Error;

/// Errors reported by validation, construction, and parsing.
#[derive(Debug, Error)]
pub enum Error {
    #[error("i/o: {0}")]
    Io(#[from] std::io::Error),

    #[error("json: {0}")]
    Json(#[from] serde_json::Error),

    #[error("table is not square: row {row} has length {len}, expected {order}")]
    NotSquare { row: usize, len: usize, order: usize },

    #[error("table entry out of range at ({i},{j}): {value} not in [0,{order})")]
    EntryOutOfRange {
        i: usize,
        j: usize,
        value: usize,
        order: usize,
    },

    #[error("identity index {identity} out of range for order {order}")]
    IdentityOutOfRange { identity: usize, order: usize },

    #[error("identity law fails: table[{left}][{right}] = {got}, expected {expected}")]
    IdentityLaw {
        left: usize,
        right: usize,
        got: usize,
        expected: usize,
    },

    #[error("associativity fails at triple ({i},{j},{k}): ({i}{j}){k} = {left} but {i}({j}{k}) = {right}")]
    Associativity {
        i: usize,
        j: usize,
        k: usize,
        left: usize,
        right: usize,
    },

    #[error("map length {len} does not match domain order {order}")]
    MapLength { len: usize, order: usize },

    #[error("map value {value} at element {element} not in [0,{order})")]
    MapOutOfRange {
        element: usize,
        value: usize,
        order: usize,
    },

    #[error("map does not preserve the identity: {got} is not the codomain identity")]
    IdentityNotPreserved { got: usize },

    #[error("map is not multiplicative at ({i},{j}): maps product to {got}, expected {expected}")]
    NotMultiplicative {
        i: usize,
        j: usize,
        got: usize,
        expected: usize,
    },

    #[error("cannot compose: inner codomain differs from outer domain")]
    ComposeMismatch,

    #[error("cospan legs have different codomains")]
    CospanMismatch,

    #[error("seed element {0} is not an element of the ambient monoid")]
    SeedOutOfRange(usize),

    #[error("submonoid parts live in different ambient monoids")]
    AmbientMismatch,

    #[error("not a section: f(s({b})) = {got}, expected {b}")]
    NotASection { b: usize, got: usize },

    #[error("composite is not surjective: {missing} has no preimage")]
    NotSurjective { missing: usize },

    #[error("homomorphism is not surjective: {missing} has no preimage")]
    HomNotSurjective { missing: usize },

    #[error("element {element} is not in the codomain of the homomorphism")]
    ElementOutOfRange { element: usize },

    #[error("generalized-point morphisms do not form a parallel pair")]
    NotParallel,

    #[error("square does not commute in generalized-point morphism: {which}")]
    SquareNotCommuting { which: &'static str },

    #[error("pullback leg mismatch: morphism does not land where the construction requires")]
    PullbackMismatch,

    #[error("unknown class name `{0}`")]
    UnknownClass(String),

    #[error("unknown suite `{0}`")]
    UnknownSuite(String),

    #[error("search expression error: {0}")]
    Expr(String),

    #[error("literal and optimized checkers disagree on an instance: {context}")]
    CheckerDisagreement { context: String },
}

pub type Result<T> = std::result::Result<T, Error>;
