use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("malformed input: {0}")]
    Malformed(String),

    #[error("table is not a Latin square: {0}")]
    NotLatinSquare(String),

    #[error("no identity element found")]
    NoIdentity,

    #[error("element {element} has no inverse")]
    NoInverse { element: usize },

    #[error("multiplication is not associative at ({a}, {b}, {c})")]
    NotAssociative { a: usize, b: usize, c: usize },

    #[error("group order {order} exceeds the bound {bound}")]
    OrderBoundExceeded { order: usize, bound: usize },

    #[error("algebra dimension {dim} exceeds the bound {bound}")]
    DimBoundExceeded { dim: usize, bound: usize },

    #[error("structure constants are not associative at basis triple ({i}, {j}, {l}), residual {residual:e}")]
    AlgebraNotAssociative {
        i: usize,
        j: usize,
        l: usize,
        residual: f64,
    },

    #[error("declared unit is not a two-sided identity (residual {residual:e})")]
    BadUnit { residual: f64 },

    #[error("operands belong to different algebras")]
    ParentMismatch,

    #[error("character table eigenvalues stayed degenerate after all redraws")]
    DegenerateSpectrum,

    #[error("character table failed its orthogonality check (residual {residual:e})")]
    OrthogonalityFailure { residual: f64 },

    #[error("Lie ideal violates the block sandwich ({0})")]
    SandwichViolation(String),

    #[error("central part is not contained in the span of the central idempotents")]
    CentralPartNotCentral,

    #[error("{0}")]
    NotAbelian(String),

    #[error("element is not central in the coefficient algebra")]
    NotCentral,

    #[error("element is zero")]
    ZeroElement,

    #[error("support set is not a union of conjugacy classes")]
    NotInvariant,

    #[error("coefficient algebra has no unit")]
    NonUnital,

    #[error("center cross-check failed: {0}")]
    CrossCheckMismatch(String),
}

pub type Result<T> = std::result::Result<T, Error>;
