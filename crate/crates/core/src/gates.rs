//! Coin-space gates: the Hadamard coin, the fractional SWAP, and their
//! per-step composition.
//!
//! Joint coin matrices act on the ordered basis
//! `(|+1,+1⟩, |+1,−1⟩, |−1,+1⟩, |−1,−1⟩)` — the tensor square of the
//! single-coin basis with `+1` before `−1`.

use std::f64::consts::{FRAC_1_SQRT_2, PI};

use nalgebra::{Matrix2, Matrix4};

use crate::{C64, Error, Result};

/// The Hadamard coin `H = (1/√2) [[1, 1], [1, −1]]` in the `(|+1⟩, |−1⟩)` basis.
pub fn hadamard() -> Matrix2<C64> {
    let h = C64::new(FRAC_1_SQRT_2, 0.0);
    Matrix2::new(h, h, h, -h)
}

/// Pauli matrices indexed `0..4` as `{𝟙, σ_x, σ_y, σ_z}`.
///
/// # Panics
/// Panics if `i >= 4`.
pub fn pauli(i: usize) -> Matrix2<C64> {
    let o = C64::new(1.0, 0.0);
    let z = C64::new(0.0, 0.0);
    let im = C64::new(0.0, 1.0);
    match i {
        0 => Matrix2::new(o, z, z, o),
        1 => Matrix2::new(z, o, o, z),
        2 => Matrix2::new(z, -im, im, z),
        3 => Matrix2::new(o, z, z, -o),
        _ => panic!("pauli index {i} out of range 0..4"),
    }
}

fn validate_tau(tau: f64) -> Result<()> {
    if !(0.0..=1.0).contains(&tau) {
        return Err(Error::TauOutOfRange(tau));
    }
    Ok(())
}

/// `SWAP^τ` on the joint coin space.
///
/// The fractional power is taken on the principal branch, `(−1)^τ ≡ e^{iπτ}`,
/// equivalently by eigendecomposition of SWAP with the `−1` eigenvalue mapped
/// to `e^{iπτ}`. This makes the gate unitary for every real `τ` and gives the
/// semigroup property `SWAP^{τ₁} SWAP^{τ₂} = SWAP^{τ₁+τ₂}`.
pub fn swap_tau_matrix(tau: f64) -> Result<Matrix4<C64>> {
    validate_tau(tau)?;
    Ok(swap_tau_unchecked(tau))
}

/// `SWAP^τ` without the range check; used internally where negative powers
/// arise as adjoints.
pub(crate) fn swap_tau_unchecked(tau: f64) -> Matrix4<C64> {
    let w = C64::from_polar(1.0, PI * tau);
    let one = C64::new(1.0, 0.0);
    let z = C64::new(0.0, 0.0);
    let p = (one + w) * 0.5;
    let q = (one - w) * 0.5;
    Matrix4::new(
        one, z, z, z, //
        z, p, q, z, //
        z, q, p, z, //
        z, z, z, one,
    )
}

/// The joint coin operation of one walk step: `SWAP^τ (H ⊗ H)`.
///
/// Coin flips act first, the partial swap second; the conditional shift that
/// sits between them in the full step operator acts only on positions and is
/// handled by the lattice engine.
pub fn joint_coin_matrix(tau: f64) -> Result<Matrix4<C64>> {
    validate_tau(tau)?;
    let h = hadamard();
    Ok(swap_tau_unchecked(tau) * h.kronecker(&h))
}
