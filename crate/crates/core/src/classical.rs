//! Classical counterpart of the walker pair: two fair random walkers whose
//! coin values may be exchanged after every step.
//!
//! Each step re-randomizes both coins fairly, moves each walker by its coin
//! value, then exchanges the coin values with probability `swap_prob`. The
//! update is exact dynamic programming on the joint probability table — no
//! sampling — so the irrelevance of the classical swap (the coins are
//! refreshed before they are ever used again) holds to machine precision,
//! in contrast with the fractional swap of the coherent walk.

use crate::correlation::JointDistribution;
use crate::linalg::KahanSum;
use crate::{Error, Result};

/// Joint probability table `q[c₁, c₂, x, y]` over coin values and positions
/// after `t` steps.
#[derive(Clone, Debug)]
pub struct ClassicalJointState {
    t: usize,
    swap_prob: f64,
    /// Side length of the position window: `2t + 1`.
    side: usize,
    /// `planes[2c₁ + c₂][(x + t)·side + (y + t)]`; coin value `+1` is index 0.
    planes: [Vec<f64>; 4],
}

impl ClassicalJointState {
    pub fn t(&self) -> usize {
        self.t
    }

    pub fn swap_prob(&self) -> f64 {
        self.swap_prob
    }

    /// `q[c₁, c₂, x, y]` with coin indices 0 (`+1`) and 1 (`−1`); zero
    /// outside the reachable window.
    pub fn mass(&self, c1: usize, c2: usize, x: i64, y: i64) -> f64 {
        let t = self.t as i64;
        if x.abs() > t || y.abs() > t {
            return 0.0;
        }
        let idx = ((x + t) as usize) * self.side + (y + t) as usize;
        self.planes[2 * c1 + c2][idx]
    }

    /// Total mass (1 within 1e−12 for any evolution of the initial state).
    pub fn total_mass(&self) -> f64 {
        let mut acc = KahanSum::new();
        for plane in &self.planes {
            for &q in plane {
                acc.add(q);
            }
        }
        acc.value()
    }
}

/// Both walkers at the origin with fair independent coins.
pub fn initial_classical_state(swap_prob: f64) -> Result<ClassicalJointState> {
    if !(swap_prob.is_finite() && (0.0..=1.0).contains(&swap_prob)) {
        return Err(Error::SwapProbOutOfRange(swap_prob));
    }
    Ok(ClassicalJointState {
        t: 0,
        swap_prob,
        side: 1,
        planes: std::array::from_fn(|_| vec![0.25]),
    })
}

/// One exact update: re-randomize coins, move, then exchange coin values
/// with probability `swap_prob`. The table grows by one site per side.
pub fn classical_step(s: &ClassicalJointState) -> ClassicalJointState {
    let t = s.t as i64;
    let side = s.side;
    let new_t = s.t + 1;
    let new_side = side + 2;
    let mut planes: [Vec<f64>; 4] =
        std::array::from_fn(|_| vec![0.0; new_side * new_side]);

    // fair refresh puts a quarter of the site mass on each coin pair, and
    // the move scatters those quarters to the four diagonal neighbours
    for x in -t..=t {
        for y in -t..=t {
            let src = ((x + t) as usize) * side + (y + t) as usize;
            let site_total: f64 = (0..4).map(|c| s.planes[c][src]).sum();
            if site_total == 0.0 {
                continue;
            }
            let quarter = site_total / 4.0;
            for (c, (vx, vy)) in [(1i64, 1i64), (1, -1), (-1, 1), (-1, -1)]
                .into_iter()
                .enumerate()
            {
                let dst = ((x + vx + t + 1) as usize) * new_side + (y + vy + t + 1) as usize;
                planes[c][dst] += quarter;
            }
        }
    }

    // exchange the two coin values with probability p: only the mixed coin
    // pairs (+,−) and (−,+) are affected
    let p = s.swap_prob;
    if p != 0.0 {
        for i in 0..new_side * new_side {
            let a = planes[1][i];
            let b = planes[2][i];
            planes[1][i] = (1.0 - p) * a + p * b;
            planes[2][i] = p * a + (1.0 - p) * b;
        }
    }

    ClassicalJointState { t: new_t, swap_prob: s.swap_prob, side: new_side, planes }
}

/// Evolve the initial state for `steps` steps.
pub fn classical_evolve(swap_prob: f64, steps: usize) -> Result<ClassicalJointState> {
    let mut s = initial_classical_state(swap_prob)?;
    for _ in 0..steps {
        s = classical_step(&s);
    }
    Ok(s)
}

/// Marginalize the coins. The result lives on the same parity support as
/// the coherent walk (each walker moves by ±1 per step) and is a product of
/// binomials; its `tau` slot carries `swap_prob`.
pub fn classical_joint_distribution(s: &ClassicalJointState) -> JointDistribution {
    let t = s.t;
    let n = t + 1;
    let ti = t as i64;
    let mut probs = vec![0.0; n * n];
    for px in 0..n {
        let x = 2 * px as i64 - ti;
        for py in 0..n {
            let y = 2 * py as i64 - ti;
            let mut mass = 0.0;
            for c1 in 0..2 {
                for c2 in 0..2 {
                    mass += s.mass(c1, c2, x, y);
                }
            }
            probs[px * n + py] = mass;
        }
    }
    JointDistribution::from_probabilities(t, s.swap_prob, probs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::correlation::{marginals, mutual_information, position_moments};

    #[test]
    fn swap_prob_is_validated() {
        assert!(initial_classical_state(-0.1).is_err());
        assert!(initial_classical_state(1.1).is_err());
        assert!(initial_classical_state(f64::NAN).is_err());
        assert!(initial_classical_state(0.0).is_ok());
        assert!(initial_classical_state(1.0).is_ok());
    }

    #[test]
    fn first_step_marginal_is_fair() {
        for p in [0.0, 0.3, 1.0] {
            let jd = classical_joint_distribution(&classical_evolve(p, 1).unwrap());
            let (m1, m2) = marginals(&jd);
            for m in [m1, m2] {
                assert_eq!(m.prob(1), 0.5);
                assert_eq!(m.prob(-1), 0.5);
            }
        }
    }

    #[test]
    fn two_step_origin_mass_is_a_quarter() {
        let jd = classical_joint_distribution(&classical_evolve(0.5, 2).unwrap());
        assert!((jd.prob(0, 0) - 0.25).abs() < 1e-15);
    }

    #[test]
    fn variance_is_diffusive() {
        let mut s = initial_classical_state(0.7).unwrap();
        for t in 1..=40 {
            s = classical_step(&s);
            let jd = classical_joint_distribution(&s);
            let (m1, m2) = marginals(&jd);
            for m in [m1, m2] {
                let mom = position_moments(&m);
                assert!(mom.mean.abs() < 1e-13);
                assert!((mom.variance - t as f64).abs() < 1e-12, "t = {t}");
            }
        }
    }

    #[test]
    fn swapping_never_changes_the_walk() {
        let mut states: Vec<_> = [0.0, 0.5, 1.0]
            .iter()
            .map(|&p| initial_classical_state(p).unwrap())
            .collect();
        for t in 1..=12 {
            for s in &mut states {
                *s = classical_step(s);
            }
            let tables: Vec<_> = states.iter().map(classical_joint_distribution).collect();
            for other in &tables[1..] {
                for ((x, y, p0), (_, _, p1)) in tables[0].support().zip(other.support()) {
                    assert!((p0 - p1).abs() < 1e-15, "t = {t} at ({x}, {y})");
                }
            }
        }
    }

    #[test]
    fn walkers_stay_independent() {
        let jd = classical_joint_distribution(&classical_evolve(0.9, 8).unwrap());
        assert!(mutual_information(&jd).abs() < 1e-12);
        assert!((jd.total() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn mass_is_conserved() {
        let s = classical_evolve(0.4, 25).unwrap();
        assert!((s.total_mass() - 1.0).abs() < 1e-12);
    }
}
