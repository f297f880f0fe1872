//! Momentum-space backend: transfer matrices over the Pauli product basis,
//! exact position moments by quadrature, and long-time ballistic
//! coefficients.
//!
//! In the plane-wave basis `|k⟩ = Σ_x e^{ikx}|x⟩` the shift acts as
//! `S|k⟩ = e^{−ik}|k⟩`, so one step of the pair at momenta `(k, j)` is the
//! 4×4 coin-space unitary `U_kj = SWAP^τ (U_k ⊗ U_j)` with
//! `U_k = diag(e^{−ik}, e^{ik}) · H`. Conjugation by `U_kj` acts on the
//! coefficients of the Pauli product expansion
//! `ρ = Σ_a r_a σ_{i(a)} ⊗ σ_{j(a)}` (`a = 4i + j`, Pauli order
//! `{𝟙, σx, σy, σz}`, `r_a = Tr[B_a ρ]/4`) as a real orthogonal 16×16
//! transfer matrix.
//!
//! Position moments follow from differentiating the step in `k`:
//! `∂_k U_kj = −i Ũ U_kj` with `Ũ = SWAP^τ (σ_z ⊗ 𝟙) SWAP^{−τ}` — Hermitian,
//! momentum-independent, and squaring to the identity — giving
//!
//! - `⟨x⟩_t  = (2π)^{−2} ∬ Σ_{m=1}^{t} Tr[Ũ 𝓛^m ρ₀]`,
//! - `⟨x²⟩_t = t + (2π)^{−2} ∬ Σ_{d≥1, m≥1, d+m≤t} Tr[Ũ 𝓛^d({Ũ, 𝓛^m ρ₀})]`,
//!
//! where `𝓛 = U_kj · U_kj†` conjugation and the `t` comes from `Ũ² = 𝟙`.
//! Walker 2 uses `SWAP^τ (𝟙 ⊗ σ_z) SWAP^{−τ}`. The integrands are
//! trigonometric polynomials, so a uniform periodic grid integrates them
//! exactly once it is fine enough; grids below the required size are
//! rejected rather than silently degraded.
//!
//! Long-time asymptotics replace `𝓛^m` by the orthogonal projector onto the
//! fixed space `ker(𝓛 − 1)` (every transfer eigenvalue lies on the unit
//! circle, so the non-fixed part is purely oscillatory and Cesàro-averages
//! to zero):
//!
//! - `⟨x⟩_t / t  → slope = (2π)^{−2} ∬ Tr[Ũ P ρ₀]`,
//! - `⟨x²⟩_t / t² → C₂ = ½ (2π)^{−2} ∬ Tr[Ũ P({Ũ, P ρ₀})]`.

use std::f64::consts::PI;
use std::sync::OnceLock;

use nalgebra::{Matrix2, Matrix4, SMatrix, SVector};

use crate::gates::{hadamard, pauli, swap_tau_matrix, swap_tau_unchecked};
use crate::linalg::{fixed_space_projector, KahanSum};
use crate::{C64, Error, Result};

/// A pair of walker momenta `(k, j)`, each in `[−π, π)`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct MomentumPair {
    pub k: f64,
    pub j: f64,
}

impl MomentumPair {
    pub fn new(k: f64, j: f64) -> Self {
        MomentumPair { k, j }
    }
}

/// Coefficient vector over the Pauli product basis.
pub type PauliCoefficients = SVector<f64, 16>;

fn pauli_product_basis() -> &'static [Matrix4<C64>; 16] {
    static BASIS: OnceLock<[Matrix4<C64>; 16]> = OnceLock::new();
    BASIS.get_or_init(|| {
        std::array::from_fn(|a| {
            let (pi_, pj) = (pauli(a / 4), pauli(a % 4));
            Matrix4::from_fn(|r, c| pi_[(r / 2, c / 2)] * pj[(r % 2, c % 2)])
        })
    })
}

/// `Re Tr[B_a X] / 4` for every basis element; the imaginary parts vanish
/// for Hermitian `X`.
fn pauli_coefficients_of(x: &Matrix4<C64>) -> PauliCoefficients {
    let basis = pauli_product_basis();
    SVector::from_fn(|a, _| {
        let mut tr = C64::new(0.0, 0.0);
        for r in 0..4 {
            for c in 0..4 {
                tr += basis[a][(r, c)] * x[(c, r)];
            }
        }
        debug_assert!(tr.im.abs() < 1e-12, "non-Hermitian input to Pauli expansion");
        tr.re / 4.0
    })
}

/// Joint state of the two coins as a 4×4 density matrix (basis order
/// `|++⟩, |+−⟩, |−+⟩, |−−⟩`).
#[derive(Clone, Debug)]
pub struct CoinJointState {
    rho: Matrix4<C64>,
}

impl CoinJointState {
    /// Both coins in `(|+⟩ + i|−⟩)/√2`: the balanced state whose walk stays
    /// left-right symmetric. Position starts at the origin, so in momentum
    /// space this coin matrix is the whole initial data, independent of
    /// `(k, j)`.
    pub fn initial() -> Self {
        let half = C64::new(0.5, 0.0);
        let ihalf = C64::new(0.0, 0.5);
        let chi = SVector::<C64, 4>::from([half, ihalf, ihalf, -half]);
        CoinJointState { rho: &chi * chi.adjoint() }
    }

    pub fn from_density(rho: Matrix4<C64>) -> Self {
        CoinJointState { rho }
    }

    pub fn density(&self) -> &Matrix4<C64> {
        &self.rho
    }

    /// Expansion coefficients `r_a = Tr[B_a ρ]/4`.
    pub fn pauli_coefficients(&self) -> PauliCoefficients {
        pauli_coefficients_of(&self.rho)
    }
}

/// Single-walker momentum step `U_k = diag(e^{−ik}, e^{ik}) · H`.
pub fn momentum_coin(k: f64) -> Matrix2<C64> {
    let d = Matrix2::from_diagonal(&SVector::<C64, 2>::from([
        C64::from_polar(1.0, -k),
        C64::from_polar(1.0, k),
    ]));
    d * hadamard()
}

/// One step of the pair at fixed momenta: `U_kj = SWAP^τ (U_k ⊗ U_j)`.
pub fn coin_step_matrix(pair: MomentumPair, tau: f64) -> Result<Matrix4<C64>> {
    let swap = swap_tau_matrix(tau)?;
    let (uk, uj) = (momentum_coin(pair.k), momentum_coin(pair.j));
    let tensor = Matrix4::from_fn(|r, c| uk[(r / 2, c / 2)] * uj[(r % 2, c % 2)]);
    Ok(swap * tensor)
}

/// `SWAP^τ (σ_z ⊗ 𝟙) SWAP^{−τ}` for walker 1, `SWAP^τ (𝟙 ⊗ σ_z) SWAP^{−τ}`
/// for walker 2: the Hermitian, momentum-independent velocity generator
/// satisfying `∂_k U_kj = −i Ũ U_kj` (respectively `∂_j`). Squares to `𝟙`.
fn velocity_generator(tau: f64, walker: usize) -> Matrix4<C64> {
    let z = pauli(3);
    let bare = match walker {
        1 => Matrix4::from_fn(|r, c| z[(r / 2, c / 2)] * pauli(0)[(r % 2, c % 2)]),
        2 => Matrix4::from_fn(|r, c| pauli(0)[(r / 2, c / 2)] * z[(r % 2, c % 2)]),
        _ => panic!("walker index must be 1 or 2, got {walker}"),
    };
    let swap = swap_tau_unchecked(tau);
    swap * bare * swap.adjoint()
}

/// `u_a = Tr[X B_a]` for Hermitian `X`, so that `Tr[X ρ] = u · r` whenever
/// `ρ = Σ_a r_a B_a`.
fn trace_vector(x: &Matrix4<C64>) -> PauliCoefficients {
    4.0 * pauli_coefficients_of(x)
}

/// Matrix of `ρ ↦ {X, ρ}` on Pauli coefficients, for Hermitian `X`.
fn anticommutator_matrix(x: &Matrix4<C64>) -> SMatrix<f64, 16, 16> {
    let basis = pauli_product_basis();
    let mut m = SMatrix::<f64, 16, 16>::zeros();
    for b in 0..16 {
        let y = x * basis[b] + basis[b] * x;
        m.set_column(b, &pauli_coefficients_of(&y));
    }
    m
}

/// Real orthogonal 16×16 matrix of `ρ ↦ U ρ U†` on Pauli coefficients.
#[derive(Clone, Debug)]
pub struct TransferMatrix {
    m: SMatrix<f64, 16, 16>,
}

impl TransferMatrix {
    pub fn matrix(&self) -> &SMatrix<f64, 16, 16> {
        &self.m
    }

    pub fn entry(&self, a: usize, b: usize) -> f64 {
        self.m[(a, b)]
    }

    pub fn apply(&self, r: &PauliCoefficients) -> PauliCoefficients {
        &self.m * r
    }
}

/// Transfer matrix built from its definition: `M[a, b] = Tr[B_a U B_b U†]/4`
/// with `U = U_kj`. Entries are real because each `B_b` stays Hermitian
/// under conjugation; the identity column is pinned exactly since
/// `U 𝟙 U† = 𝟙`.
pub fn transfer_matrix_from_conjugation(pair: MomentumPair, tau: f64) -> Result<TransferMatrix> {
    let u = coin_step_matrix(pair, tau)?;
    let basis = pauli_product_basis();
    let udag = u.adjoint();
    let mut m = SMatrix::<f64, 16, 16>::zeros();
    for b in 0..16 {
        let image = u * basis[b] * udag;
        m.set_column(b, &pauli_coefficients_of(&image));
    }
    let mut e0 = PauliCoefficients::zeros();
    e0[0] = 1.0;
    m.set_column(0, &e0);
    Ok(TransferMatrix { m })
}

/// Closed-form transfer-matrix table, transcribed verbatim from a published
/// derivation of the same conjugation (1-based slots `4(i−1)+j` mapped to
/// our 0-based `a = 4i+j`). Kept for cross-checking against
/// [`transfer_matrix_from_conjugation`]; the table's entries carry odd
/// momentum phases such as `cos(k−j)` that a momentum-independent operator
/// basis cannot produce, so the two builds are expected to disagree — see
/// [`compare_transfer_matrices`].
pub fn transfer_matrix_tabulated(pair: MomentumPair, tau: f64) -> Result<SMatrix<C64, 16, 16>> {
    swap_tau_matrix(tau)?; // validate range
    let (k, j) = (pair.k, pair.j);
    let w = C64::from_polar(1.0, PI * tau); // the table's (−1)^τ
    let one = C64::new(1.0, 0.0);
    let i_ = C64::new(0.0, 1.0);

    let a = ((one + w) * (-(k - j).cos()) + 2.0 * (k + j).cos() * one) / 4.0;
    let d = ((one + w) * (k - j).cos() + 2.0 * (k + j).cos() * one) / 4.0;
    let e2ij = C64::from_polar(1.0, 2.0 * j);
    let e2ik = C64::from_polar(1.0, 2.0 * k);
    let phase = C64::from_polar(1.0, -(k + j));
    let b = phase / 8.0
        * (2.0 * one + (one + w) * e2ij - ((one + w) + 2.0 * e2ij) * e2ik);
    let c = phase / 8.0
        * (2.0 * one - (one + w) * e2ij + ((one + w) - 2.0 * e2ij) * e2ik);
    let e = -(w - one) / 4.0 * C64::from_polar(1.0, j - k);
    let f = i_ * (w - one) / 4.0 * C64::from_polar(1.0, j - k);

    let mut m = SMatrix::<C64, 16, 16>::zeros();
    for (r, cidx, v) in [
        (0, 0, a),
        (3, 3, a),
        (12, 12, a),
        (15, 15, a),
        (0, 3, b),
        (3, 0, b),
        (12, 15, b),
        (15, 12, b),
        (0, 12, c),
        (3, 15, c),
        (12, 0, c),
        (15, 3, c),
        (0, 15, d),
        (3, 12, d),
        (12, 3, d),
        (15, 0, d),
        (5, 5, e),
        (5, 6, -i_ * e),
        (6, 5, i_ * e),
        (6, 6, e),
        (9, 5, -i_ * e),
        (9, 6, -e),
        (10, 5, e),
        (10, 6, -i_ * e),
        (5, 9, f),
        (5, 10, -i_ * f),
        (6, 9, -i_ * f),
        (6, 10, -f),
        (9, 9, i_ * f),
        (9, 10, f),
        (10, 9, f),
        (10, 10, -i_ * f),
    ] {
        m[(r, cidx)] = v;
    }
    Ok(m)
}

/// One entry where the constructed and tabulated transfer matrices differ
/// by more than the tolerance.
#[derive(Clone, Copy, Debug)]
pub struct EntryDiscrepancy {
    pub row: usize,
    pub col: usize,
    pub constructed: C64,
    pub tabulated: C64,
    pub abs_diff: f64,
}

/// Compare the constructed transfer matrix against the tabulated one
/// entry-by-entry, returning every entry whose absolute difference exceeds
/// `tol` (empty means agreement).
pub fn compare_transfer_matrices(
    pair: MomentumPair,
    tau: f64,
    tol: f64,
) -> Result<Vec<EntryDiscrepancy>> {
    let constructed = transfer_matrix_from_conjugation(pair, tau)?;
    let tabulated = transfer_matrix_tabulated(pair, tau)?;
    let mut out = Vec::new();
    for r in 0..16 {
        for c in 0..16 {
            let built = C64::new(constructed.entry(r, c), 0.0);
            let diff = (built - tabulated[(r, c)]).norm();
            if diff > tol {
                out.push(EntryDiscrepancy {
                    row: r,
                    col: c,
                    constructed: built,
                    tabulated: tabulated[(r, c)],
                    abs_diff: diff,
                });
            }
        }
    }
    Ok(out)
}

/// Single-walker transfer matrix on coefficients over `{𝟙, σx, σy, σz}`:
/// conjugation by `U_k` sends `σx ↦ σz`, `σy ↦ sin2k·σx − cos2k·σy`,
/// `σz ↦ cos2k·σx + sin2k·σy`. The two-walker matrix at `τ = 0` is the
/// Kronecker product of two of these.
pub fn single_walker_transfer_matrix(k: f64) -> SMatrix<f64, 4, 4> {
    let (s, c) = (2.0 * k).sin_cos();
    SMatrix::<f64, 4, 4>::from_columns(&[
        SVector::from([1.0, 0.0, 0.0, 0.0]),
        SVector::from([0.0, 0.0, 0.0, 1.0]),
        SVector::from([0.0, s, -c, 0.0]),
        SVector::from([0.0, c, s, 0.0]),
    ])
}

/// Evenly spaced nodes `k_i = −π + 2πi/n` on `[−π, π)`; with weight `1/n`
/// per axis this trapezoid rule integrates trigonometric polynomials of
/// degree below `n` exactly.
fn grid_nodes(n: usize) -> Vec<f64> {
    (0..n).map(|i| -PI + 2.0 * PI * i as f64 / n as f64).collect()
}

/// Moment integrands after `t` steps are trigonometric polynomials of
/// degree at most `4t + 1` per axis; refuse any grid that cannot integrate
/// them exactly.
fn require_grid(n: usize, t: usize) -> Result<()> {
    let min = 4 * t + 2;
    if n < min {
        return Err(Error::GridTooSmall { n, t, min });
    }
    Ok(())
}

/// Exact moments of both walkers for every `t` in `1..=t_max`, from one
/// quadrature sweep.
#[derive(Clone, Copy, Debug)]
pub struct MomentumMomentsRecord {
    pub t: usize,
    pub tau: f64,
    pub mean1: f64,
    pub mean2: f64,
    pub second1: f64,
    pub second2: f64,
    pub var1: f64,
    pub var2: f64,
}

/// Exact `⟨x⟩_t` and `⟨x²⟩_t` for both walkers and all `t ≤ t_max` by
/// quadrature over the momentum torus. Requires `n ≥ 4·t_max + 2`.
///
/// Per node the transfer matrix is built once; the `⟨x²⟩` double sum is
/// bucketed by `q = d + m` so each horizon `t` reads its prefix.
pub fn moment_sweep(t_max: usize, tau: f64, n: usize) -> Result<Vec<MomentumMomentsRecord>> {
    if t_max == 0 {
        return Err(Error::NonPositiveBudget);
    }
    require_grid(n, t_max)?;
    swap_tau_matrix(tau)?; // validate range once; nodes use the unchecked path

    let u = [1, 2].map(|wk| trace_vector(&velocity_generator(tau, wk)));
    let anti = [1, 2].map(|wk| anticommutator_matrix(&velocity_generator(tau, wk)));
    let r0 = CoinJointState::initial().pauli_coefficients();
    let weight = 1.0 / (n * n) as f64;
    let nodes = grid_nodes(n);

    // first[w][m] accumulates ∬ Tr[Ũ_w 𝓛^m ρ₀]; bucket[w][q] accumulates
    // ∬ Σ_{d+m=q} Tr[Ũ_w 𝓛^d({Ũ_w, 𝓛^m ρ₀})]
    let mut first: [Vec<KahanSum>; 2] = std::array::from_fn(|_| vec![KahanSum::new(); t_max + 1]);
    let mut bucket: [Vec<KahanSum>; 2] = std::array::from_fn(|_| vec![KahanSum::new(); t_max + 1]);

    let mut powers: Vec<PauliCoefficients> = Vec::with_capacity(t_max);
    for &k in &nodes {
        for &j in &nodes {
            let tm = transfer_matrix_from_conjugation(MomentumPair::new(k, j), tau)?;
            powers.clear();
            let mut r = r0;
            for m in 1..=t_max {
                r = tm.apply(&r);
                powers.push(r);
                for w in 0..2 {
                    first[w][m].add(u[w].dot(&r) * weight);
                }
            }
            for w in 0..2 {
                for m in 1..t_max {
                    let mut s = &anti[w] * powers[m - 1];
                    for d in 1..=(t_max - m) {
                        s = tm.apply(&s);
                        bucket[w][m + d].add(u[w].dot(&s) * weight);
                    }
                }
            }
        }
    }

    let mut records = Vec::with_capacity(t_max);
    let mut mean = [0.0f64; 2];
    let mut extra = [0.0f64; 2];
    for t in 1..=t_max {
        for w in 0..2 {
            mean[w] += first[w][t].value();
            extra[w] += bucket[w][t].value();
        }
        let second = [t as f64 + extra[0], t as f64 + extra[1]];
        records.push(MomentumMomentsRecord {
            t,
            tau,
            mean1: mean[0],
            mean2: mean[1],
            second1: second[0],
            second2: second[1],
            var1: second[0] - mean[0] * mean[0],
            var2: second[1] - mean[1] * mean[1],
        });
    }
    Ok(records)
}

/// `⟨x⟩_t` of one walker (1 or 2) by quadrature.
pub fn exact_first_moment(t: usize, tau: f64, n: usize, walker: usize) -> Result<f64> {
    let rec = *moment_sweep(t, tau, n)?.last().expect("t ≥ 1 yields records");
    Ok(match walker {
        1 => rec.mean1,
        2 => rec.mean2,
        _ => panic!("walker index must be 1 or 2, got {walker}"),
    })
}

/// `⟨x²⟩_t` of one walker (1 or 2) by quadrature.
pub fn exact_second_moment(t: usize, tau: f64, n: usize, walker: usize) -> Result<f64> {
    let rec = *moment_sweep(t, tau, n)?.last().expect("t ≥ 1 yields records");
    Ok(match walker {
        1 => rec.second1,
        2 => rec.second2,
        _ => panic!("walker index must be 1 or 2, got {walker}"),
    })
}

/// Long-time ballistic coefficients at one `τ`.
#[derive(Clone, Copy, Debug)]
pub struct AsymptoticsRecord {
    pub tau: f64,
    /// Quadrature nodes per axis.
    pub grid: usize,
    /// Fixed-mode threshold: eigenvalues with `|λ − 1| ≤ 1 − cutoff` count
    /// as persistent.
    pub cutoff: f64,
    /// `lim ⟨x⟩_t / t` per walker.
    pub slope1: f64,
    pub slope2: f64,
    /// `lim ⟨x²⟩_t / t²` per walker.
    pub c2_1: f64,
    pub c2_2: f64,
    /// Smallest and largest fixed-space dimension seen across nodes
    /// (generically 4; larger on degeneracy curves).
    pub fixed_dim_min: usize,
    pub fixed_dim_max: usize,
}

fn validate_cutoff(cutoff: f64) -> Result<f64> {
    if !(cutoff.is_finite() && 0.0 < cutoff && cutoff < 1.0) {
        return Err(Error::CutoffOutOfRange(cutoff));
    }
    Ok(1.0 - cutoff)
}

/// Ballistic slope and `C₂` for both walkers by projecting each node's
/// dynamics onto its transfer-matrix fixed space.
pub fn asymptotics_record(tau: f64, n: usize, cutoff: f64) -> Result<AsymptoticsRecord> {
    if n < 2 {
        return Err(Error::GridTooSmall { n, t: 0, min: 2 });
    }
    let tol = validate_cutoff(cutoff)?;
    swap_tau_matrix(tau)?;

    let u = [1, 2].map(|wk| trace_vector(&velocity_generator(tau, wk)));
    let anti = [1, 2].map(|wk| anticommutator_matrix(&velocity_generator(tau, wk)));
    let r0 = CoinJointState::initial().pauli_coefficients();
    let weight = 1.0 / (n * n) as f64;
    let nodes = grid_nodes(n);

    let mut slope = [KahanSum::new(), KahanSum::new()];
    let mut c2 = [KahanSum::new(), KahanSum::new()];
    let (mut dim_min, mut dim_max) = (usize::MAX, 0usize);
    for &k in &nodes {
        for &j in &nodes {
            let tm = transfer_matrix_from_conjugation(MomentumPair::new(k, j), tau)?;
            let p = fixed_space_projector(tm.matrix(), tol)?;
            let dim = p.trace().round() as usize;
            dim_min = dim_min.min(dim);
            dim_max = dim_max.max(dim);
            let fixed = &p * r0;
            for w in 0..2 {
                slope[w].add(u[w].dot(&fixed) * weight);
                c2[w].add(0.5 * u[w].dot(&(&p * (&anti[w] * fixed))) * weight);
            }
        }
    }
    Ok(AsymptoticsRecord {
        tau,
        grid: n,
        cutoff,
        slope1: slope[0].value(),
        slope2: slope[1].value(),
        c2_1: c2[0].value(),
        c2_2: c2[1].value(),
        fixed_dim_min: dim_min,
        fixed_dim_max: dim_max,
    })
}

/// `lim ⟨x⟩_t / t` of one walker (1 or 2).
pub fn asymptotic_slope(tau: f64, n: usize, cutoff: f64, walker: usize) -> Result<f64> {
    let rec = asymptotics_record(tau, n, cutoff)?;
    Ok(match walker {
        1 => rec.slope1,
        2 => rec.slope2,
        _ => panic!("walker index must be 1 or 2, got {walker}"),
    })
}

/// `lim ⟨x²⟩_t / t²` of one walker (1 or 2).
pub fn ballistic_c2(tau: f64, n: usize, cutoff: f64, walker: usize) -> Result<f64> {
    let rec = asymptotics_record(tau, n, cutoff)?;
    Ok(match walker {
        1 => rec.c2_1,
        2 => rec.c2_2,
        _ => panic!("walker index must be 1 or 2, got {walker}"),
    })
}
