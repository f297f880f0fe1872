//! Exact state-vector evolution of the two-walker, two-coin system under
//! `U₂ = SWAP^τ (U ⊗ U)` on a bounded integer lattice.
//!
//! One step applies, in order: the coin flips `H ⊗ H` at every site, the
//! conditional shifts on each walker independently, and `SWAP^τ` on the
//! joint coin. The lattice is pre-allocated to `[−T_max, T_max]²`; support
//! after `t` steps is bounded by `|x|, |y| ≤ t` on the parity sublattice
//! `x ≡ y ≡ t (mod 2)`, and amplitudes outside it stay exactly zero (they
//! are never written).

use std::f64::consts::PI;

use crate::linalg::KahanSum;
use crate::{C64, Error, Result};

/// Coin basis label. `+1` sorts before `−1` in every 2- and 4-dimensional
/// matrix layout of this crate.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CoinLabel {
    /// `|+1⟩`: shifts its walker by `+1`.
    Plus,
    /// `|−1⟩`: shifts its walker by `−1`.
    Minus,
}

impl CoinLabel {
    /// Both labels in the global ordering.
    pub const ALL: [CoinLabel; 2] = [CoinLabel::Plus, CoinLabel::Minus];

    /// The shift value `±1` carried by this coin state.
    pub fn value(self) -> i64 {
        match self {
            CoinLabel::Plus => 1,
            CoinLabel::Minus => -1,
        }
    }

    /// Basis index: `Plus → 0`, `Minus → 1`.
    pub fn index(self) -> usize {
        match self {
            CoinLabel::Plus => 0,
            CoinLabel::Minus => 1,
        }
    }
}

/// Parameters of one walk step.
#[derive(Clone, Copy, Debug)]
pub struct StepParameters {
    tau: f64,
}

impl StepParameters {
    /// SWAP power `τ ∈ [0, 1]`.
    pub fn new(tau: f64) -> Result<Self> {
        if !(0.0..=1.0).contains(&tau) {
            return Err(Error::TauOutOfRange(tau));
        }
        Ok(StepParameters { tau })
    }

    pub fn tau(self) -> f64 {
        self.tau
    }
}

/// Complex amplitudes `ψ[c₁, c₂, x, y]` of the full walkers+coins pure state.
///
/// Storage is coin-major: four position planes (joint coin index
/// `c = 2·c₁ + c₂`) of `(2·T_max + 1)²` amplitudes each, so the per-site
/// 4×4 coin gates are small dense multiplies over contiguous planes.
#[derive(Clone, Debug)]
pub struct LatticeStateVector {
    t_max: usize,
    t: usize,
    side: usize,
    planes: [Vec<C64>; 4],
}

impl LatticeStateVector {
    /// Step budget this state was allocated for.
    pub fn t_max(&self) -> usize {
        self.t_max
    }

    /// Number of steps applied so far.
    pub fn t(&self) -> usize {
        self.t
    }

    fn idx(&self, x: i64, y: i64) -> usize {
        let h = self.t_max as i64;
        debug_assert!(x.abs() <= h && y.abs() <= h);
        (x + h) as usize * self.side + (y + h) as usize
    }

    /// Amplitude `ψ(c₁, c₂, x, y)`; exactly zero outside the lattice.
    pub fn amplitude(&self, c1: CoinLabel, c2: CoinLabel, x: i64, y: i64) -> C64 {
        let h = self.t_max as i64;
        if x.abs() > h || y.abs() > h {
            return C64::new(0.0, 0.0);
        }
        self.planes[2 * c1.index() + c2.index()][self.idx(x, y)]
    }
}

/// Both walkers at the origin, each coin in `(|+1⟩ + i|−1⟩)/√2`.
///
/// The joint coin amplitudes at `(0, 0)` are the tensor square of that coin
/// state: `(+1,+1) → 1/2`, `(+1,−1) → i/2`, `(−1,+1) → i/2`, `(−1,−1) → −1/2`.
pub fn initial_state(t_max: usize) -> Result<LatticeStateVector> {
    if t_max == 0 {
        return Err(Error::NonPositiveBudget);
    }
    let side = 2 * t_max + 1;
    let planes = std::array::from_fn(|_| vec![C64::new(0.0, 0.0); side * side]);
    let mut state = LatticeStateVector { t_max, t: 0, side, planes };
    let origin = state.idx(0, 0);
    state.planes[0][origin] = C64::new(0.5, 0.0);
    state.planes[1][origin] = C64::new(0.0, 0.5);
    state.planes[2][origin] = C64::new(0.0, 0.5);
    state.planes[3][origin] = C64::new(-0.5, 0.0);
    Ok(state)
}

/// One application of `U₂ = SWAP^τ (U ⊗ U)`.
///
/// Fails with a capacity error when the step budget is exhausted; amplitude
/// is never silently truncated at the lattice boundary.
pub fn apply_step(state: &LatticeStateVector, params: StepParameters) -> Result<LatticeStateVector> {
    if state.t >= state.t_max {
        return Err(Error::CapacityExhausted { t: state.t, t_max: state.t_max });
    }

    let side = state.side;
    let mut planes: [Vec<C64>; 4] = std::array::from_fn(|_| vec![C64::new(0.0, 0.0); side * side]);
    let t = state.t as i64;
    let zero = C64::new(0.0, 0.0);

    // Coin flips (H ⊗ H) fused with the conditional shifts. Each plane shifts
    // by a fixed offset, so destinations never collide and plain stores suffice.
    // Skipping all-zero source sites keeps off-support amplitudes exactly zero.
    for x in -t..=t {
        for y in -t..=t {
            let i = state.idx(x, y);
            let a = state.planes[0][i];
            let b = state.planes[1][i];
            let c = state.planes[2][i];
            let d = state.planes[3][i];
            if a == zero && b == zero && c == zero && d == zero {
                continue;
            }
            let f00 = (a + b + c + d) * 0.5;
            let f01 = (a - b + c - d) * 0.5;
            let f10 = (a + b - c - d) * 0.5;
            let f11 = (a - b - c + d) * 0.5;
            planes[0][state.idx(x + 1, y + 1)] = f00;
            planes[1][state.idx(x + 1, y - 1)] = f01;
            planes[2][state.idx(x - 1, y + 1)] = f10;
            planes[3][state.idx(x - 1, y - 1)] = f11;
        }
    }

    // SWAP^τ after the shifts: mixes the (+1,−1) and (−1,+1) planes sitewise
    // and leaves the (+1,+1) and (−1,−1) planes untouched.
    let w = C64::from_polar(1.0, PI * params.tau);
    let p = (C64::new(1.0, 0.0) + w) * 0.5;
    let q = (C64::new(1.0, 0.0) - w) * 0.5;
    for x in -(t + 1)..=(t + 1) {
        for y in -(t + 1)..=(t + 1) {
            let i = state.idx(x, y);
            let b = planes[1][i];
            let c = planes[2][i];
            if b == zero && c == zero {
                continue;
            }
            planes[1][i] = p * b + q * c;
            planes[2][i] = q * b + p * c;
        }
    }

    Ok(LatticeStateVector { t_max: state.t_max, t: state.t + 1, side, planes })
}

/// `steps` applications of [`apply_step`] with the same parameters.
pub fn evolve(
    state: &LatticeStateVector,
    params: StepParameters,
    steps: usize,
) -> Result<LatticeStateVector> {
    if state.t + steps > state.t_max {
        return Err(Error::CapacityExhausted { t: state.t + steps, t_max: state.t_max });
    }
    let mut out = state.clone();
    for _ in 0..steps {
        out = apply_step(&out, params)?;
    }
    Ok(out)
}

/// `√(Σ |ψ|²)`, accumulated with compensated summation.
pub fn state_norm(state: &LatticeStateVector) -> f64 {
    let mut acc = KahanSum::new();
    for plane in &state.planes {
        for z in plane {
            acc.add(z.norm_sqr());
        }
    }
    acc.value().sqrt()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn initial_state_matches_coin_tensor_square() {
        let s = initial_state(3).unwrap();
        assert_eq!(s.t(), 0);
        let a = |c1, c2| s.amplitude(c1, c2, 0, 0);
        use CoinLabel::{Minus, Plus};
        assert_eq!(a(Plus, Plus), C64::new(0.5, 0.0));
        assert_eq!(a(Plus, Minus), C64::new(0.0, 0.5));
        assert_eq!(a(Minus, Plus), C64::new(0.0, 0.5));
        assert_eq!(a(Minus, Minus), C64::new(-0.5, 0.0));
        assert!((state_norm(&s) - 1.0).abs() < 1e-15);
        // everything away from the origin is exactly zero
        for x in -3..=3i64 {
            for y in -3..=3i64 {
                if (x, y) == (0, 0) {
                    continue;
                }
                for c1 in CoinLabel::ALL {
                    for c2 in CoinLabel::ALL {
                        assert_eq!(s.amplitude(c1, c2, x, y), C64::new(0.0, 0.0));
                    }
                }
            }
        }
    }

    #[test]
    fn zero_budget_is_rejected() {
        assert!(matches!(initial_state(0), Err(Error::NonPositiveBudget)));
    }

    #[test]
    fn one_step_occupies_the_four_corners_equally() {
        for tau in [0.0, 0.3, 0.5, 1.0] {
            let params = StepParameters::new(tau).unwrap();
            let s = apply_step(&initial_state(2).unwrap(), params).unwrap();
            assert_eq!(s.t(), 1);
            let site_prob = |x: i64, y: i64| -> f64 {
                let mut p = 0.0;
                for c1 in CoinLabel::ALL {
                    for c2 in CoinLabel::ALL {
                        p += s.amplitude(c1, c2, x, y).norm_sqr();
                    }
                }
                p
            };
            for x in [-1i64, 1] {
                for y in [-1i64, 1] {
                    assert!((site_prob(x, y) - 0.25).abs() < 1e-14, "tau = {tau}, ({x}, {y})");
                }
            }
            assert!((state_norm(&s) - 1.0).abs() < 1e-13);
            // nothing anywhere else
            let mut total = 0.0;
            for x in [-1i64, 1] {
                for y in [-1i64, 1] {
                    total += site_prob(x, y);
                }
            }
            assert!((total - 1.0).abs() < 1e-13);
        }
    }

    #[test]
    fn step_budget_is_enforced() {
        let params = StepParameters::new(0.5).unwrap();
        let s = evolve(&initial_state(2).unwrap(), params, 2).unwrap();
        assert!(matches!(
            apply_step(&s, params),
            Err(Error::CapacityExhausted { t: 2, t_max: 2 })
        ));
        assert!(matches!(
            evolve(&initial_state(2).unwrap(), params, 3),
            Err(Error::CapacityExhausted { .. })
        ));
    }

    #[test]
    fn evolve_zero_steps_is_identity() {
        let s = initial_state(4).unwrap();
        let params = StepParameters::new(0.7).unwrap();
        let s2 = evolve(&s, params, 0).unwrap();
        for c1 in CoinLabel::ALL {
            for c2 in CoinLabel::ALL {
                for x in -4..=4i64 {
                    for y in -4..=4i64 {
                        assert_eq!(s.amplitude(c1, c2, x, y), s2.amplitude(c1, c2, x, y));
                    }
                }
            }
        }
    }

    #[test]
    fn norm_is_preserved_over_many_steps() {
        let params = StepParameters::new(0.5).unwrap();
        let s = evolve(&initial_state(50).unwrap(), params, 50).unwrap();
        assert!((state_norm(&s) - 1.0).abs() < 1e-12);
    }

    #[test]
    fn support_respects_parity_exactly() {
        let params = StepParameters::new(0.8).unwrap();
        let mut s = initial_state(7).unwrap();
        for _ in 0..7 {
            s = apply_step(&s, params).unwrap();
            let t = s.t() as i64;
            for c1 in CoinLabel::ALL {
                for c2 in CoinLabel::ALL {
                    for x in -7..=7i64 {
                        for y in -7..=7i64 {
                            let off_support = x.abs() > t
                                || y.abs() > t
                                || (x - t).rem_euclid(2) != 0
                                || (y - t).rem_euclid(2) != 0;
                            if off_support {
                                assert_eq!(
                                    s.amplitude(c1, c2, x, y),
                                    C64::new(0.0, 0.0),
                                    "t = {t}, ({x}, {y})"
                                );
                            }
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn all_zero_state_has_zero_norm() {
        let mut s = initial_state(2).unwrap();
        for plane in &mut s.planes {
            plane.fill(C64::new(0.0, 0.0));
        }
        assert_eq!(state_norm(&s), 0.0);
    }
}
