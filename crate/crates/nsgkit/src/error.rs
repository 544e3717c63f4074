//! Error type shared by the group-side and real-line halves of the crate.

use thiserror::Error;

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, Error)]
pub enum Error {
    /// A group was constructed with a zero order or an overflowing cardinality.
    #[error("invalid group orders: {0}")]
    InvalidGroup(String),

    /// An element does not belong to the group it was used with.
    #[error("invalid element: {0}")]
    InvalidElement(String),

    /// A signal was passed to an operation expecting the other side.
    #[error("side mismatch: expected {expected}-side signal, got {got}-side")]
    SideMismatch {
        expected: &'static str,
        got: &'static str,
    },

    /// Two signals (or a signal and a family) live on different groups.
    #[error("group mismatch: operands live on different groups")]
    GroupMismatch,

    /// A window family violated its construction invariants.
    #[error("invalid window family: {0}")]
    InvalidFamily(String),

    /// A coefficient array does not match the system shape.
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),

    /// The symbol has no usable lower bound; the pair is not reproducing.
    #[error("symbol is numerically singular (min |m| = {min_abs:e}, tolerance {tol:e})")]
    SymbolSingular { min_abs: f64, tol: f64 },

    /// Dense-matrix assembly was requested above the configured cap.
    #[error("dense oracle cap exceeded: |G| = {cardinality} > cap {cap}")]
    OracleCapExceeded { cardinality: usize, cap: usize },

    /// A reindex permutation broke the weight structure of the index set.
    #[error("invalid reindex: {0}")]
    InvalidReindex(String),

    /// A phase or unitary specification was not unimodular / not applicable.
    #[error("invalid transform: {0}")]
    InvalidTransform(String),

    /// A spectral window specification violated its invariants.
    #[error("invalid spectral window: {0}")]
    InvalidWindow(String),

    /// A quadrature grid violated its invariants.
    #[error("invalid grid: {0}")]
    InvalidGrid(String),

    /// A quadrature node hit a zero of the scaling function β.
    #[error("singular quadrature node: β(ω) = 0 at ω = {omega}")]
    SingularNode { omega: f64 },

    /// The weighted integrand diverges at an endpoint of the warped integral.
    #[error("endpoint singularity: weighted integrand near {endpoint} reached {magnitude:e}")]
    EndpointSingularity { endpoint: f64, magnitude: f64 },

    /// The λ-section guard found window mass next to the singular point.
    #[error("singularity guard tripped: window support meets ξ = {point}")]
    GuardTripped { point: f64 },

    /// An operation was asked for a value on its excluded null set.
    #[error("undefined point: {0}")]
    UndefinedPoint(String),

    /// A real-line parameter left the domain of validity.
    #[error("domain violation: {0}")]
    DomainViolation(String),
}
