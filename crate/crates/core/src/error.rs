//! Error type shared by all modules.

use thiserror::Error;

/// Errors reported by the library. Payloads are `f64` regardless of the
/// scalar type the computation ran in.
#[derive(Debug, Clone, Error)]
pub enum Error {
    /// A parameter fell outside its admissible range.
    #[error("parameter out of range: {0}")]
    Parameter(String),

    /// Series exponential requires a zero constant term.
    #[error("series exponential needs constant term 0, got {re}+{im}i")]
    NonzeroConstantTerm { re: f64, im: f64 },

    /// Evaluation point outside the radius where the tail can be certified.
    #[error("|z| = {radius} exceeds certified evaluation radius {max}")]
    EvaluationRadius { radius: f64, max: f64 },

    /// The truncation order is too small for the requested quantity.
    #[error("series order {have} too small, need at least {need}")]
    InsufficientOrder { need: usize, have: usize },

    /// Hypergeometric pole: c is a nonpositive integer.
    #[error("hypergeometric pole: c = {c} is a nonpositive integer")]
    Pole { c: f64 },

    /// Argument outside the open interval the series representation covers.
    #[error("hypergeometric argument |x| >= 1: x = {x}")]
    HypergeometricDomain { x: f64 },

    /// A series summation ran out of its iteration budget.
    #[error("summation did not converge within {max_terms} terms")]
    SeriesConvergence { max_terms: usize },

    /// Adaptive quadrature hit max_depth; carries the best estimate.
    #[error("quadrature did not converge: best estimate {best}, error bound {bound}")]
    QuadratureConvergence { best: f64, bound: f64 },

    /// No sign change over the root bracket.
    #[error("no sign change on [{lo}, {hi}]: F(lo) = {f_lo}, F(hi) = {f_hi}")]
    Bracket {
        lo: f64,
        hi: f64,
        f_lo: f64,
        f_hi: f64,
    },

    /// The located root does not satisfy the residual tolerance.
    #[error("root residual {residual} above tolerance at root {root}")]
    Residual { root: f64, residual: f64 },

    /// A truncation tail could not be certified below tolerance.
    #[error("tail bound could not be certified: {0}")]
    TailCertification(String),

    /// The requested quantity is infinite.
    #[error("divergent quantity: {0}")]
    Divergent(String),

    /// A coefficient or input value is NaN or infinite.
    #[error("non-finite value encountered: {0}")]
    NonFinite(String),
}

pub type Result<V> = std::result::Result<V, Error>;
