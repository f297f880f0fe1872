//! Reduction of the pure walkers+coins state to the two-walker density
//! operator, joint/marginal position distributions, position moments, and
//! the three correlation measures:
//!
//! - MI — Shannon mutual information of the joint position distribution
//!   (classical correlation),
//! - QMI — `S(ρ₁) + S(ρ₂) − S(ρ_w)` (total correlation),
//! - MID — QMI minus the mutual information surviving local dephasing in
//!   the eigenbases of the reduced states (quantum correlation).
//!
//! All distributions live on the parity support: after `t` steps a walker
//! occupies only the `t + 1` positions `x ∈ {−t, −t+2, …, t}`. Reduced
//! objects are stored compressed to that support. All entropies are in bits.

use nalgebra::{DMatrix, Matrix4};

use crate::lattice::{CoinLabel, LatticeStateVector};
use crate::linalg::{hermitian_eigen_desc, hermitian_eigenvalues_desc, KahanSum};
use crate::{C64, Error, Result};

/// Eigenvalues at or below this are treated as zero when selecting
/// eigenprojectors of the reduced states.
const ZERO_EIG_TOL: f64 = 1e-12;

/// Nonzero eigenvalues closer than this make the local eigenbasis — and
/// hence MID — non-unique; such results carry a warning.
const DEGENERACY_GAP: f64 = 1e-10;

/// Probabilities below zero by at most this much are clipped to zero;
/// anything lower is an error (a bug signal, not rounding noise).
const NEGATIVE_PROB_TOL: f64 = -1e-12;

fn clip_probability(p: f64, context: &'static str) -> Result<f64> {
    if p < NEGATIVE_PROB_TOL {
        return Err(Error::NegativeProbability { value: p, context });
    }
    Ok(p.max(0.0))
}

/// Rank-≤4 representation of the two-walker density operator
/// `ρ_w = Σ_c |φ_c⟩⟨φ_c|`: one walker-space component vector per joint-coin
/// label, each on the parity support.
#[derive(Clone, Debug)]
pub struct ReducedWalkerState {
    t: usize,
    tau: f64,
    /// `components[c][px * (t+1) + py]` with `x = 2·px − t`, `y = 2·py − t`.
    components: [Vec<C64>; 4],
}

impl ReducedWalkerState {
    /// Steps taken by the walk this state was reduced from.
    pub fn t(&self) -> usize {
        self.t
    }

    /// SWAP power of that walk (provenance).
    pub fn tau(&self) -> f64 {
        self.tau
    }

    /// Support dimension per walker: `t + 1`.
    pub fn support_dim(&self) -> usize {
        self.t + 1
    }

    /// Position at support index `i`: `−t + 2i`.
    pub fn position(&self, i: usize) -> i64 {
        2 * i as i64 - self.t as i64
    }

    /// Component vector `φ_c` for joint-coin index `c = 2·c₁ + c₂`.
    pub fn component(&self, c: usize) -> &[C64] {
        &self.components[c]
    }

    /// `Tr ρ_w = Σ_c ‖φ_c‖²`.
    pub fn trace(&self) -> f64 {
        let mut acc = KahanSum::new();
        for comp in &self.components {
            for z in comp {
                acc.add(z.norm_sqr());
            }
        }
        acc.value()
    }

    /// `φ_c` reshaped as a `(t+1) × (t+1)` matrix indexed `(px, py)`.
    fn component_matrix(&self, c: usize) -> DMatrix<C64> {
        let n = self.support_dim();
        DMatrix::from_fn(n, n, |px, py| self.components[c][px * n + py])
    }
}

/// Trace out the coins: `φ_c(x, y) = ψ(c₁, c₂, x, y)` for each joint-coin
/// label. `tau` is carried as provenance only.
pub fn reduce_to_walkers(state: &LatticeStateVector, tau: f64) -> ReducedWalkerState {
    let t = state.t();
    let n = t + 1;
    let mut components: [Vec<C64>; 4] = std::array::from_fn(|_| vec![C64::new(0.0, 0.0); n * n]);
    for (c1i, c1) in CoinLabel::ALL.into_iter().enumerate() {
        for (c2i, c2) in CoinLabel::ALL.into_iter().enumerate() {
            let comp = &mut components[2 * c1i + c2i];
            for px in 0..n {
                let x = 2 * px as i64 - t as i64;
                for py in 0..n {
                    let y = 2 * py as i64 - t as i64;
                    comp[px * n + py] = state.amplitude(c1, c2, x, y);
                }
            }
        }
    }
    ReducedWalkerState { t, tau, components }
}

/// Joint position distribution `P(x, y) = Σ_c |φ_c(x, y)|²` on the parity
/// support.
#[derive(Clone, Debug)]
pub struct JointDistribution {
    t: usize,
    tau: f64,
    /// `probs[px * (t+1) + py]`.
    probs: Vec<f64>,
}

impl JointDistribution {
    pub(crate) fn from_probabilities(t: usize, tau: f64, probs: Vec<f64>) -> Self {
        debug_assert_eq!(probs.len(), (t + 1) * (t + 1));
        JointDistribution { t, tau, probs }
    }

    pub fn t(&self) -> usize {
        self.t
    }

    pub fn tau(&self) -> f64 {
        self.tau
    }

    pub fn support_dim(&self) -> usize {
        self.t + 1
    }

    /// Position at support index `i`: `−t + 2i`.
    pub fn position(&self, i: usize) -> i64 {
        2 * i as i64 - self.t as i64
    }

    /// `P(x, y)`; zero off the parity support.
    pub fn prob(&self, x: i64, y: i64) -> f64 {
        let t = self.t as i64;
        let on = |v: i64| v.abs() <= t && (v - t).rem_euclid(2) == 0;
        if !on(x) || !on(y) {
            return 0.0;
        }
        let n = self.support_dim();
        self.probs[((x + t) / 2) as usize * n + ((y + t) / 2) as usize]
    }

    /// Support triplets `(x, y, p)` in lexicographic `(x, y)` order.
    pub fn support(&self) -> impl Iterator<Item = (i64, i64, f64)> + '_ {
        let n = self.support_dim();
        self.probs.iter().enumerate().map(move |(i, &p)| {
            let px = i / n;
            let py = i % n;
            (self.position(px), self.position(py), p)
        })
    }

    /// Total mass (should be 1 within 1e−10).
    pub fn total(&self) -> f64 {
        let mut acc = KahanSum::new();
        for &p in &self.probs {
            acc.add(p);
        }
        acc.value()
    }
}

/// `P(x, y) = Σ_c |φ_c(x, y)|²`.
pub fn joint_distribution(rw: &ReducedWalkerState) -> JointDistribution {
    let n = rw.support_dim();
    let mut probs = vec![0.0; n * n];
    for comp in &rw.components {
        for (p, z) in probs.iter_mut().zip(comp.iter()) {
            *p += z.norm_sqr();
        }
    }
    JointDistribution { t: rw.t, tau: rw.tau, probs }
}

/// Position distribution of one walker on the parity support.
#[derive(Clone, Debug)]
pub struct MarginalDistribution {
    t: usize,
    /// Which walker this marginal belongs to: 1 or 2.
    walker: usize,
    probs: Vec<f64>,
}

impl MarginalDistribution {
    pub fn t(&self) -> usize {
        self.t
    }

    pub fn walker(&self) -> usize {
        self.walker
    }

    pub fn support_dim(&self) -> usize {
        self.t + 1
    }

    pub fn position(&self, i: usize) -> i64 {
        2 * i as i64 - self.t as i64
    }

    /// `P(x)`; zero off the parity support.
    pub fn prob(&self, x: i64) -> f64 {
        let t = self.t as i64;
        if x.abs() > t || (x - t).rem_euclid(2) != 0 {
            return 0.0;
        }
        self.probs[((x + t) / 2) as usize]
    }

    /// Support pairs `(x, p)` in ascending `x`.
    pub fn support(&self) -> impl Iterator<Item = (i64, f64)> + '_ {
        self.probs.iter().enumerate().map(move |(i, &p)| (self.position(i), p))
    }

    pub fn total(&self) -> f64 {
        let mut acc = KahanSum::new();
        for &p in &self.probs {
            acc.add(p);
        }
        acc.value()
    }
}

/// `P₁(x) = Σ_y P(x, y)` and `P₂(y) = Σ_x P(x, y)`.
pub fn marginals(jd: &JointDistribution) -> (MarginalDistribution, MarginalDistribution) {
    let n = jd.support_dim();
    let mut p1 = vec![0.0; n];
    let mut p2 = vec![0.0; n];
    for px in 0..n {
        for py in 0..n {
            let p = jd.probs[px * n + py];
            p1[px] += p;
            p2[py] += p;
        }
    }
    (
        MarginalDistribution { t: jd.t, walker: 1, probs: p1 },
        MarginalDistribution { t: jd.t, walker: 2, probs: p2 },
    )
}

/// Mean, second moment, variance, and spread of a position distribution.
#[derive(Clone, Copy, Debug)]
pub struct MomentsRecord {
    pub mean: f64,
    pub second_moment: f64,
    /// `⟨x²⟩ − ⟨x⟩²`, clamped at zero against rounding.
    pub variance: f64,
    /// `σ = √variance`.
    pub spread: f64,
}

/// Moments by direct weighted sums over the support.
pub fn position_moments(md: &MarginalDistribution) -> MomentsRecord {
    let mut mean = KahanSum::new();
    let mut second = KahanSum::new();
    for (x, p) in md.support() {
        let xf = x as f64;
        mean.add(xf * p);
        second.add(xf * xf * p);
    }
    let mean = mean.value();
    let second_moment = second.value();
    let variance = (second_moment - mean * mean).max(0.0);
    MomentsRecord { mean, second_moment, variance, spread: variance.sqrt() }
}

/// Shannon mutual information of the joint position distribution, in bits:
/// `I = Σ P(x,y) log₂[P(x,y) / (P₁(x) P₂(y))]` with `0·log 0 = 0`.
pub fn mutual_information(jd: &JointDistribution) -> f64 {
    let (m1, m2) = marginals(jd);
    let n = jd.support_dim();
    let mut acc = KahanSum::new();
    for px in 0..n {
        for py in 0..n {
            let p = jd.probs[px * n + py];
            if p > 0.0 {
                acc.add(p * (p / (m1.probs[px] * m2.probs[py])).log2());
            }
        }
    }
    acc.value()
}

/// Von Neumann entropy of a spectrum, in bits: `−Σ λ log₂ λ` with
/// `0·log 0 = 0`.
///
/// Entries in `(−1e−12, 0)` are clipped to zero; lower entries and spectra
/// whose sum strays from 1 by more than 1e−8 are rejected.
pub fn von_neumann_entropy(spectrum: &[f64]) -> Result<f64> {
    let mut sum = KahanSum::new();
    let mut entropy = KahanSum::new();
    for &raw in spectrum {
        let lambda = clip_probability(raw, "entropy spectrum")?;
        sum.add(lambda);
        if lambda > 0.0 {
            entropy.add(-lambda * lambda.log2());
        }
    }
    if (sum.value() - 1.0).abs() > 1e-8 {
        return Err(Error::SpectrumNotNormalized(sum.value()));
    }
    Ok(entropy.value())
}

/// Reduced density matrix of walker 1 or 2 on the parity support
/// (`(t+1)`-dimensional).
///
/// # Panics
/// Panics if `walker` is not 1 or 2.
pub fn walker_density_matrix(rw: &ReducedWalkerState, walker: usize) -> DMatrix<C64> {
    let n = rw.support_dim();
    let mut rho = DMatrix::zeros(n, n);
    for c in 0..4 {
        let f = rw.component_matrix(c);
        match walker {
            // ρ₁[x, x'] = Σ_c Σ_y φ_c(x, y) conj(φ_c(x', y))
            1 => rho += &f * f.adjoint(),
            // ρ₂[y, y'] = Σ_c Σ_x φ_c(x, y) conj(φ_c(x, y'))
            2 => rho += (f.adjoint() * &f).transpose(),
            _ => panic!("walker index must be 1 or 2, got {walker}"),
        }
    }
    rho
}

/// The 4×4 Gram matrix `G[c, c'] = ⟨φ_c|φ_{c'}⟩`, whose nonzero spectrum
/// equals that of `ρ_w` (both are products of the same component stack).
pub fn gram_matrix(rw: &ReducedWalkerState) -> Matrix4<C64> {
    Matrix4::from_fn(|c, cp| {
        let mut g = C64::new(0.0, 0.0);
        for (a, b) in rw.components[c].iter().zip(rw.components[cp].iter()) {
            g += a.conj() * b;
        }
        g
    })
}

/// `I = S(ρ₁) + S(ρ₂) − S(ρ_w)` in bits. `S(ρ_w)` comes from the 4×4 Gram
/// spectrum; `S(ρ₁)`, `S(ρ₂)` from dense eigensolves on the parity support.
pub fn quantum_mutual_information(rw: &ReducedWalkerState) -> Result<f64> {
    let s1 = von_neumann_entropy(&hermitian_eigenvalues_desc(walker_density_matrix(rw, 1))?)?;
    let s2 = von_neumann_entropy(&hermitian_eigenvalues_desc(walker_density_matrix(rw, 2))?)?;
    let gram = DMatrix::from_fn(4, 4, |r, c| gram_matrix(rw)[(r, c)]);
    let s12 = von_neumann_entropy(&hermitian_eigenvalues_desc(gram)?)?;
    Ok(s1 + s2 - s12)
}

/// Outcome table of dephasing `ρ_w` in the eigenbases of its reduced states:
/// `p_jk = Σ_c ⟨φ_c| (Π₁^j ⊗ Π₂^k) |φ_c⟩` over rank-1 eigenprojectors of the
/// nonzero eigenvalues. Zero-eigenvalue sectors carry zero probability and
/// are omitted.
#[derive(Clone, Debug)]
pub struct DephasedJointTable {
    /// `p[j * eigs2.len() + k]`.
    p: Vec<f64>,
    /// Kept (nonzero) eigenvalues of ρ₁, descending.
    pub eigs1: Vec<f64>,
    /// Kept (nonzero) eigenvalues of ρ₂, descending.
    pub eigs2: Vec<f64>,
    /// Non-uniqueness warnings from near-degenerate nonzero eigenvalues.
    pub warnings: Vec<String>,
}

impl DephasedJointTable {
    pub fn n1(&self) -> usize {
        self.eigs1.len()
    }

    pub fn n2(&self) -> usize {
        self.eigs2.len()
    }

    pub fn prob(&self, j: usize, k: usize) -> f64 {
        self.p[j * self.n2() + k]
    }

    pub fn total(&self) -> f64 {
        let mut acc = KahanSum::new();
        for &p in &self.p {
            acc.add(p);
        }
        acc.value()
    }

    /// Row sums (should reproduce `eigs1` within 1e−10).
    pub fn row_sums(&self) -> Vec<f64> {
        (0..self.n1()).map(|j| (0..self.n2()).map(|k| self.prob(j, k)).sum()).collect()
    }

    /// Column sums (should reproduce `eigs2` within 1e−10).
    pub fn col_sums(&self) -> Vec<f64> {
        (0..self.n2()).map(|k| (0..self.n1()).map(|j| self.prob(j, k)).sum()).collect()
    }

    /// Shannon mutual information of the table, in bits. Since the dephased
    /// state is diagonal in the product eigenbasis, this is its quantum
    /// mutual information.
    pub fn mutual_information_bits(&self) -> f64 {
        let rows = self.row_sums();
        let cols = self.col_sums();
        let mut acc = KahanSum::new();
        for j in 0..self.n1() {
            for k in 0..self.n2() {
                let p = self.prob(j, k);
                if p > 0.0 {
                    acc.add(p * (p / (rows[j] * cols[k])).log2());
                }
            }
        }
        acc.value()
    }
}

/// Eigendecompose a reduced state, keep eigenpairs above the zero tolerance,
/// and flag near-degenerate kept eigenvalues.
fn kept_eigensystem(
    rho: DMatrix<C64>,
    walker: usize,
    warnings: &mut Vec<String>,
) -> Result<(Vec<f64>, DMatrix<C64>)> {
    let n = rho.nrows();
    let (vals, vecs) = hermitian_eigen_desc(rho)?;
    let kept: Vec<usize> = (0..n).filter(|&i| vals[i] > ZERO_EIG_TOL).collect();
    for w in kept.windows(2) {
        let gap = vals[w[0]] - vals[w[1]];
        if gap < DEGENERACY_GAP {
            warnings.push(format!(
                "walker {walker} reduced state has near-degenerate nonzero eigenvalues \
                 (gap {gap:.3e} at indices {}, {}): dephasing eigenbasis is not unique",
                w[0], w[1]
            ));
        }
    }
    let kept_vals: Vec<f64> = kept.iter().map(|&i| vals[i]).collect();
    let mut kept_vecs = DMatrix::zeros(n, kept.len());
    for (dst, &src) in kept.iter().enumerate() {
        kept_vecs.set_column(dst, &vecs.column(src));
    }
    Ok((kept_vals, kept_vecs))
}

/// Dephase `ρ_w` in the local eigenbases of `ρ₁` and `ρ₂`.
///
/// With rank-1 projectors `Π₁^j = |u_j⟩⟨u_j|`, `Π₂^k = |v_k⟩⟨v_k|`:
/// `p_jk = Σ_c |⟨u_j ⊗ v_k | φ_c⟩|² = Σ_c |(U† F_c V̄)[j, k]|²`,
/// where `F_c` is `φ_c` as a position matrix.
pub fn dephase_local(rw: &ReducedWalkerState) -> Result<DephasedJointTable> {
    let mut warnings = Vec::new();
    let (eigs1, u) = kept_eigensystem(walker_density_matrix(rw, 1), 1, &mut warnings)?;
    let (eigs2, v) = kept_eigensystem(walker_density_matrix(rw, 2), 2, &mut warnings)?;
    let (n1, n2) = (eigs1.len(), eigs2.len());
    let v_conj = v.conjugate();
    let mut p = vec![0.0; n1 * n2];
    for c in 0..4 {
        let w = u.adjoint() * rw.component_matrix(c) * &v_conj;
        for j in 0..n1 {
            for k in 0..n2 {
                p[j * n2 + k] += w[(j, k)].norm_sqr();
            }
        }
    }
    Ok(DephasedJointTable { p, eigs1, eigs2, warnings })
}

/// Result of the measurement-induced-disturbance computation.
#[derive(Clone, Debug)]
pub struct MidResult {
    /// `Q = I[ρ_w] − I[Πρ_w]` in bits.
    pub mid_bits: f64,
    /// `I[Πρ_w]`: mutual information of the dephased table, in bits.
    pub dephased_mi_bits: f64,
    /// Degeneracy warnings propagated from [`dephase_local`].
    pub warnings: Vec<String>,
}

/// Measurement-induced disturbance `Q = I[ρ_w] − I[Πρ_w]`, where `Π` dephases
/// in the local eigenbases of the reduced states.
pub fn measurement_induced_disturbance(rw: &ReducedWalkerState) -> Result<MidResult> {
    let qmi = quantum_mutual_information(rw)?;
    let table = dephase_local(rw)?;
    let dephased_mi_bits = table.mutual_information_bits();
    Ok(MidResult { mid_bits: qmi - dephased_mi_bits, dephased_mi_bits, warnings: table.warnings })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::{apply_step, initial_state, StepParameters};

    fn walk(t: usize, tau: f64) -> ReducedWalkerState {
        let params = StepParameters::new(tau).unwrap();
        let mut s = initial_state(t.max(1)).unwrap();
        for _ in 0..t {
            s = apply_step(&s, params).unwrap();
        }
        reduce_to_walkers(&s, tau)
    }

    #[test]
    fn reduction_at_t_zero_is_pure_and_local() {
        let rw = walk(0, 0.5);
        assert!((rw.trace() - 1.0).abs() < 1e-14);
        assert_eq!(rw.support_dim(), 1);
        let g = gram_matrix(&rw);
        // pure product state: Gram spectrum {1, 0, 0, 0}
        let vals =
            hermitian_eigenvalues_desc(DMatrix::from_fn(4, 4, |r, c| g[(r, c)])).unwrap();
        assert!((vals[0] - 1.0).abs() < 1e-13);
        assert!(vals[1].abs() < 1e-13);
    }

    #[test]
    fn reduction_keeps_trace_one() {
        let rw = walk(6, 0.5);
        assert!((rw.trace() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn joint_distribution_at_t_one_is_uniform_on_corners() {
        for tau in [0.0, 0.2, 0.7, 1.0] {
            let jd = joint_distribution(&walk(1, tau));
            for x in [-1i64, 1] {
                for y in [-1i64, 1] {
                    assert!((jd.prob(x, y) - 0.25).abs() < 1e-14, "tau = {tau}");
                }
            }
            assert_eq!(jd.prob(0, 0), 0.0);
            assert!((jd.total() - 1.0).abs() < 1e-12);
        }
    }

    #[test]
    fn marginals_at_t_one_are_half_half() {
        let jd = joint_distribution(&walk(1, 0.8));
        let (m1, m2) = marginals(&jd);
        for m in [&m1, &m2] {
            assert!((m.prob(1) - 0.5).abs() < 1e-14);
            assert!((m.prob(-1) - 0.5).abs() < 1e-14);
            assert!((m.total() - 1.0).abs() < 1e-12);
        }
        assert_eq!(m1.walker(), 1);
        assert_eq!(m2.walker(), 2);
    }

    #[test]
    fn moments_of_t_one_marginal() {
        let jd = joint_distribution(&walk(1, 0.4));
        let (m1, _) = marginals(&jd);
        let mom = position_moments(&m1);
        assert!(mom.mean.abs() < 1e-14);
        assert!((mom.variance - 1.0).abs() < 1e-13);
        assert!((mom.spread - 1.0).abs() < 1e-13);
    }

    #[test]
    fn moments_of_point_mass() {
        let md = MarginalDistribution { t: 0, walker: 1, probs: vec![1.0] };
        let mom = position_moments(&md);
        assert_eq!(mom.mean, 0.0);
        assert_eq!(mom.variance, 0.0);
        assert_eq!(mom.spread, 0.0);
    }

    #[test]
    fn mutual_information_of_perfectly_correlated_pair_is_one_bit() {
        // {(1,1): 1/2, (−1,−1): 1/2} on the t = 1 support
        let jd = JointDistribution::from_probabilities(1, 0.0, vec![0.5, 0.0, 0.0, 0.5]);
        assert!((mutual_information(&jd) - 1.0).abs() < 1e-14);
    }

    #[test]
    fn entropy_textbook_values() {
        assert_eq!(von_neumann_entropy(&[1.0]).unwrap(), 0.0);
        assert!((von_neumann_entropy(&[0.5, 0.5]).unwrap() - 1.0).abs() < 1e-15);
        assert!((von_neumann_entropy(&[0.25; 4]).unwrap() - 2.0).abs() < 1e-15);
        // tiny negatives clip, grossly wrong sums error
        assert!(von_neumann_entropy(&[1.0, -1e-13]).is_ok());
        assert!(matches!(
            von_neumann_entropy(&[0.4, 0.4]),
            Err(Error::SpectrumNotNormalized(_))
        ));
        assert!(matches!(
            von_neumann_entropy(&[1.0, -1e-9]),
            Err(Error::NegativeProbability { .. })
        ));
    }

    #[test]
    fn product_state_dephases_to_a_single_entry() {
        let rw = walk(0, 0.3);
        let table = dephase_local(&rw).unwrap();
        assert_eq!((table.n1(), table.n2()), (1, 1));
        assert!((table.prob(0, 0) - 1.0).abs() < 1e-13);
        assert!(table.mutual_information_bits().abs() < 1e-13);
    }

    #[test]
    fn dephased_rows_reproduce_reduced_spectrum() {
        let rw = walk(6, 0.5);
        let table = dephase_local(&rw).unwrap();
        assert!((table.total() - 1.0).abs() < 1e-10);
        for (sum, eig) in table.row_sums().iter().zip(table.eigs1.iter()) {
            assert!((sum - eig).abs() < 1e-10);
        }
        for (sum, eig) in table.col_sums().iter().zip(table.eigs2.iter()) {
            assert!((sum - eig).abs() < 1e-10);
        }
    }

    #[test]
    fn exact_degeneracy_is_flagged() {
        // at t = 1 each reduced state is diag(1/2, 1/2): maximally degenerate
        let rw = walk(1, 0.5);
        let table = dephase_local(&rw).unwrap();
        assert!(!table.warnings.is_empty());
        let mid = measurement_induced_disturbance(&rw).unwrap();
        assert!(!mid.warnings.is_empty());
    }

    #[test]
    fn mid_vanishes_without_coupling() {
        for t in [2, 5] {
            let rw = walk(t, 0.0);
            let mid = measurement_induced_disturbance(&rw).unwrap();
            assert!(mid.mid_bits.abs() < 1e-9, "t = {t}: {}", mid.mid_bits);
            assert!(quantum_mutual_information(&rw).unwrap().abs() < 1e-9);
            assert!(mutual_information(&joint_distribution(&rw)).abs() < 1e-10);
        }
    }
}
