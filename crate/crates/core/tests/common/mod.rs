#![allow(dead_code)]

use nalgebra::{DMatrix, DVector, Matrix3, Vector3};
use qwduet_core::correlation::ReducedWalkerState;
use qwduet_core::lattice::{apply_step, initial_state, LatticeStateVector, StepParameters};
use qwduet_core::C64;

/// Walk the pair for `t` steps at the given `τ`.
pub fn evolve_walk(t: usize, tau: f64) -> LatticeStateVector {
    let params = StepParameters::new(tau).unwrap();
    let mut s = initial_state(t.max(1)).unwrap();
    for _ in 0..t {
        s = apply_step(&s, params).unwrap();
    }
    s
}

/// The balanced single-walker coin `(|+⟩ + i|−⟩)/√2`.
pub fn symmetric_coin() -> (C64, C64) {
    let r = 1.0 / 2.0_f64.sqrt();
    (C64::new(r, 0.0), C64::new(0.0, r))
}

/// Reference one-walker Hadamard walk, evolved independently of the
/// two-walker engine. Returns the coin-up and coin-down amplitude lines
/// indexed by `x + t`.
pub fn single_walk(t: usize, coin: (C64, C64)) -> (Vec<C64>, Vec<C64>) {
    let len = 2 * t + 1;
    let zero = C64::new(0.0, 0.0);
    let mut up = vec![zero; len];
    let mut down = vec![zero; len];
    up[t] = coin.0;
    down[t] = coin.1;
    let r = 1.0 / 2.0_f64.sqrt();
    for _ in 0..t {
        let mut nu = vec![zero; len];
        let mut nd = vec![zero; len];
        for i in 0..len {
            let (a, b) = (up[i], down[i]);
            if a == zero && b == zero {
                continue;
            }
            nu[i + 1] += (a + b) * r;
            nd[i - 1] += (a - b) * r;
        }
        up = nu;
        down = nd;
    }
    (up, down)
}

/// Dense two-walker density matrix on the `(t+1)²`-dimensional parity
/// support, for brute-force comparison against the rank-4 representation.
pub fn dense_rho_w(rw: &ReducedWalkerState) -> DMatrix<C64> {
    let dim = rw.support_dim() * rw.support_dim();
    let mut rho = DMatrix::zeros(dim, dim);
    for c in 0..4 {
        let v = DVector::from_column_slice(rw.component(c));
        rho += &v * v.adjoint();
    }
    rho
}

/// Least-squares slope of `y` against `x`.
pub fn linear_fit_slope(xs: &[f64], ys: &[f64]) -> f64 {
    let n = xs.len() as f64;
    let mx = xs.iter().sum::<f64>() / n;
    let my = ys.iter().sum::<f64>() / n;
    let mut cov = 0.0;
    let mut var = 0.0;
    for (x, y) in xs.iter().zip(ys) {
        cov += (x - mx) * (y - my);
        var += (x - mx) * (x - mx);
    }
    cov / var
}

/// Leading coefficient of the least-squares quadratic `y ≈ a·t² + b·t + c`.
pub fn quadratic_fit_leading(ts: &[f64], ys: &[f64]) -> f64 {
    let mut a = Matrix3::<f64>::zeros();
    let mut b = Vector3::<f64>::zeros();
    for (&t, &y) in ts.iter().zip(ys) {
        let row = Vector3::new(t * t, t, 1.0);
        a += row * row.transpose();
        b += row * y;
    }
    let sol = a.lu().solve(&b).expect("normal equations are nonsingular");
    sol[0]
}
