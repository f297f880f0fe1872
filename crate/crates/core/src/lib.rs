//! Two coined quantum walkers on separate lines whose coins are partially
//! swapped after every step.
//!
//! The step operator is `U₂ = SWAP^τ (U ⊗ U)`, where `U = S (𝟙 ⊗ H)` is the
//! Hadamard walk step on one line and `SWAP^τ` is the fractional power of the
//! two-qubit SWAP gate acting on the joint coin space. The crate provides
//!
//! - [`lattice`]: exact state-vector evolution on a bounded integer lattice;
//! - [`correlation`]: reduced two-walker states, joint/marginal position
//!   distributions, position moments, and the correlation measures MI
//!   (Shannon, positions), QMI (von Neumann), and MID (measurement-induced
//!   disturbance);
//! - [`momentum`]: an independent momentum-space backend — per-momentum coin
//!   step matrices, the 16×16 transfer matrix of the coin superoperator,
//!   exact finite-`t` position moments by periodic quadrature, and long-time
//!   asymptotics (drift slope and the ballistic coefficient of `⟨x²⟩`);
//! - [`classical`]: an exact dynamic-programming baseline of two classical
//!   random walkers with probabilistic coin exchange;
//! - [`gates`], [`linalg`], [`error`]: shared gates, numeric support, and the
//!   error type.
//!
//! All entropies and mutual informations are in bits (base-2 logarithms).
//! Every routine is deterministic; nothing here uses randomness or threads.

pub mod classical;
pub mod correlation;
pub mod error;
pub mod gates;
pub mod lattice;
pub mod linalg;
pub mod momentum;

pub use error::{Error, Result};

/// Complex double-precision scalar used throughout.
pub type C64 = num_complex::Complex<f64>;
