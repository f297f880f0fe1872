//! Error type shared by the simulation and analysis modules.

use thiserror::Error;

/// Errors surfaced by simulation, reduction, and quadrature routines.
///
/// Numerical drift within documented tolerances is never an error; these
/// variants signal contract violations (bad parameters, exhausted budgets)
/// or genuine numerical failures (non-convergent eigensolves).
#[derive(Debug, Error)]
pub enum Error {
    /// A walk was asked to step past its pre-allocated lattice budget.
    /// Amplitude is never silently truncated at the boundary.
    #[error("step budget exhausted: t = {t} has already reached T_max = {t_max}")]
    CapacityExhausted { t: usize, t_max: usize },

    /// SWAP power outside the supported range `[0, 1]`.
    #[error("tau = {0} is outside [0, 1]")]
    TauOutOfRange(f64),

    /// Classical coin-exchange probability outside `[0, 1]`.
    #[error("swap probability = {0} is outside [0, 1]")]
    SwapProbOutOfRange(f64),

    /// Lattice budgets must allow at least one step.
    #[error("T_max must be at least 1")]
    NonPositiveBudget,

    /// Quadrature grid too coarse for the requested horizon. The moment
    /// integrands are trigonometric polynomials of degree `2t` per axis;
    /// an undersized uniform grid would alias silently instead of erroring.
    #[error("quadrature grid N = {n} is too small for t = {t}: need N >= {min}")]
    GridTooSmall { n: usize, t: usize, min: usize },

    /// Spectral filter threshold outside the open interval `(0, 1)`.
    #[error("eigenfilter cutoff = {0} is outside (0, 1)")]
    CutoffOutOfRange(f64),

    /// A spectrum handed to the entropy routine does not sum to one.
    #[error("spectrum is not normalized: sum = {0}")]
    SpectrumNotNormalized(f64),

    /// A probability fell below `-1e-12`. Values in `(-1e-12, 0)` are
    /// clipped to zero as rounding noise; anything lower indicates a bug
    /// upstream, not noise.
    #[error("negative probability {value} in {context}")]
    NegativeProbability { value: f64, context: &'static str },

    /// An eigendecomposition or singular-value decomposition failed.
    #[error("eigendecomposition failed: {0}")]
    EigenFailure(String),
}

pub type Result<T> = std::result::Result<T, Error>;
