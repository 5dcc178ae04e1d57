//! Averaged variational principle on finite-dimensional operators.
//!
//! For a symmetric matrix with orthonormal eigenvectors `ψ_j` and a weighted
//! family of trial vectors `f_ζ` forming a Parseval frame, the Riesz mean
//! weighted by frame coefficients dominates the averaged Rayleigh quotient
//! deficit over any sub-family `M0`:
//!
//! `Σ_j (z − μ_j)_+ Σ_ζ w_ζ ⟨ψ_j, f_ζ⟩² ≥ Σ_{ζ∈M0} w_ζ (z‖f_ζ‖² − Q(f_ζ, f_ζ))`.

use nalgebra::{DMatrix, DVector};
use rand::Rng;
use serde::Serialize;

use crate::bounds::KroegerState;
use crate::error::{Error, Result};
use crate::inequalities::y_p;
use crate::report::VerificationRecord;
use crate::spectra_exact::{enumerate_box_count, BoundaryCondition};

/// Orthogonality tolerance for eigenvector matrices.
pub const ORTHO_TOL: f64 = 1e-10;
/// Tolerance on the frame operator being the identity.
pub const PARSEVAL_TOL: f64 = 1e-9;
/// The verdict allows `lhs ≥ rhs − AVP_RTOL · max(|z|, 1) · n`.
pub const AVP_RTOL: f64 = 1e-9;

/// A symmetric operator given by its spectral decomposition.
#[derive(Debug, Clone, PartialEq)]
pub struct DiscreteOperatorSpec {
    eigenvalues: Vec<f64>,
    /// Column `j` is the eigenvector of `eigenvalues[j]`.
    eigenvectors: DMatrix<f64>,
}

fn max_deviation_from_identity(m: &DMatrix<f64>) -> f64 {
    let n = m.nrows();
    let mut worst = 0.0f64;
    for i in 0..n {
        for j in 0..n {
            let target = if i == j { 1.0 } else { 0.0 };
            worst = worst.max((m[(i, j)] - target).abs());
        }
    }
    worst
}

impl DiscreteOperatorSpec {
    pub fn new(eigenvalues: Vec<f64>, eigenvectors: DMatrix<f64>) -> Result<Self> {
        let n = eigenvalues.len();
        if n == 0 || eigenvectors.nrows() != n || eigenvectors.ncols() != n {
            return Err(Error::arg(format!(
                "need n eigenvalues and an n x n eigenvector matrix, got {n} and {}x{}",
                eigenvectors.nrows(),
                eigenvectors.ncols()
            )));
        }
        if eigenvalues.windows(2).any(|w| w[0] > w[1]) || eigenvalues.iter().any(|e| !e.is_finite()) {
            return Err(Error::arg("eigenvalues must be finite and sorted nondecreasing"));
        }
        let dev = max_deviation_from_identity(&(eigenvectors.transpose() * &eigenvectors));
        if dev > ORTHO_TOL {
            return Err(Error::arg(format!("eigenvectors are not orthonormal (deviation {dev:e})")));
        }
        Ok(DiscreteOperatorSpec { eigenvalues, eigenvectors })
    }

    /// `diag(eigenvalues)` in the standard basis.
    pub fn diagonal(eigenvalues: Vec<f64>) -> Result<Self> {
        let n = eigenvalues.len();
        Self::new(eigenvalues, DMatrix::identity(n, n))
    }

    /// Random spectrum in `[0, scale)` with a random orthonormal eigenbasis.
    pub fn random<R: Rng>(n: usize, scale: f64, rng: &mut R) -> Result<Self> {
        let mut eigenvalues: Vec<f64> = (0..n).map(|_| rng.gen::<f64>() * scale).collect();
        eigenvalues.sort_by(|a, b| a.total_cmp(b));
        Self::new(eigenvalues, random_orthonormal_columns(n, n, rng))
    }

    pub fn dim(&self) -> usize {
        self.eigenvalues.len()
    }

    pub fn eigenvalues(&self) -> &[f64] {
        &self.eigenvalues
    }

    pub fn eigenvectors(&self) -> &DMatrix<f64> {
        &self.eigenvectors
    }
}

/// `rows × cols` matrix with orthonormal columns, from QR of a random matrix.
fn random_orthonormal_columns<R: Rng>(rows: usize, cols: usize, rng: &mut R) -> DMatrix<f64> {
    let g = DMatrix::from_fn(rows, cols, |_, _| rng.gen_range(-1.0..1.0));
    g.qr().q()
}

/// Weighted trial vectors and the sub-family `M0`.
#[derive(Debug, Clone, PartialEq)]
pub struct TrialFamily {
    vectors: Vec<DVector<f64>>,
    weights: Vec<f64>,
    subset: Vec<usize>,
}

impl TrialFamily {
    pub fn new(vectors: Vec<DVector<f64>>, weights: Vec<f64>, subset: Vec<usize>) -> Result<Self> {
        if vectors.len() != weights.len() {
            return Err(Error::arg("one weight per trial vector is required"));
        }
        if let Some(first) = vectors.first() {
            if vectors.iter().any(|v| v.len() != first.len()) {
                return Err(Error::arg("trial vectors must have equal length"));
            }
        }
        if !weights.iter().all(|w| *w > 0.0 && w.is_finite()) {
            return Err(Error::arg("weights must be positive and finite"));
        }
        if let Some(&bad) = subset.iter().find(|&&i| i >= vectors.len()) {
            return Err(Error::arg(format!("subset index {bad} is out of range")));
        }
        Ok(TrialFamily { vectors, weights, subset })
    }

    /// Standard basis of `R^n` with unit weights.
    pub fn standard_basis(n: usize, subset: Vec<usize>) -> Result<Self> {
        let vectors = (0..n).map(|i| DVector::from_fn(n, |j, _| if i == j { 1.0 } else { 0.0 })).collect();
        Self::new(vectors, vec![1.0; n], subset)
    }

    /// The eigenvectors of `op` with unit weights.
    pub fn eigenbasis(op: &DiscreteOperatorSpec, subset: Vec<usize>) -> Result<Self> {
        let vectors = op.eigenvectors.column_iter().map(|c| c.into_owned()).collect();
        Self::new(vectors, vec![1.0; op.dim()], subset)
    }

    /// A random Parseval frame of `count ≥ n` vectors with random weights in
    /// `[1/2, 2]`: rows of a matrix with orthonormal columns, divided by `√w`.
    pub fn random_parseval<R: Rng>(n: usize, count: usize, rng: &mut R) -> Result<Self> {
        if count < n {
            return Err(Error::arg(format!("a frame of R^{n} needs at least {n} vectors, got {count}")));
        }
        let q = random_orthonormal_columns(count, n, rng);
        let weights: Vec<f64> = (0..count).map(|_| rng.gen_range(0.5..2.0)).collect();
        let vectors = (0..count)
            .map(|z| DVector::from_fn(n, |j, _| q[(z, j)] / weights[z].sqrt()))
            .collect();
        let subset = (0..count).filter(|_| rng.gen_bool(0.5)).collect();
        Self::new(vectors, weights, subset)
    }

    pub fn with_subset(mut self, subset: Vec<usize>) -> Result<Self> {
        if let Some(&bad) = subset.iter().find(|&&i| i >= self.vectors.len()) {
            return Err(Error::arg(format!("subset index {bad} is out of range")));
        }
        self.subset = subset;
        Ok(self)
    }

    pub fn len(&self) -> usize {
        self.vectors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vectors.is_empty()
    }

    pub fn subset(&self) -> &[usize] {
        &self.subset
    }

    /// `Σ_ζ w_ζ f_ζ f_ζᵀ`.
    pub fn frame_operator(&self) -> DMatrix<f64> {
        let n = self.vectors.first().map_or(0, |v| v.len());
        let mut s = DMatrix::zeros(n, n);
        for (f, w) in self.vectors.iter().zip(&self.weights) {
            s.ger(*w, f, f, 1.0);
        }
        s
    }

    pub fn parseval_defect(&self) -> f64 {
        max_deviation_from_identity(&self.frame_operator())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum AvpMode {
    /// Requires a Parseval family; `holds` is then a checked theorem.
    Theorem,
    /// Any family; both sides are reported but nothing is claimed.
    Permissive,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct AvpCheck {
    pub lhs: f64,
    pub rhs: f64,
    pub holds: bool,
    pub mode: AvpMode,
}

/// Evaluates both sides of the averaged variational inequality at `z`.
pub fn avp_check(op: &DiscreteOperatorSpec, family: &TrialFamily, z: f64, mode: AvpMode) -> Result<AvpCheck> {
    let n = op.dim();
    if family.vectors.iter().any(|v| v.len() != n) {
        return Err(Error::arg(format!("trial vectors must have length {n}")));
    }
    if mode == AvpMode::Theorem {
        let defect = family.parseval_defect();
        if defect > PARSEVAL_TOL {
            return Err(Error::Precondition(format!(
                "trial family is not a Parseval frame (defect {defect:e})"
            )));
        }
    }
    let vt = op.eigenvectors.transpose();
    let mut lhs_weights = vec![0.0; n];
    let mut in_subset = vec![false; family.len()];
    for &i in &family.subset {
        in_subset[i] = true;
    }
    let mut rhs = 0.0;
    for (idx, (f, w)) in family.vectors.iter().zip(&family.weights).enumerate() {
        let c = &vt * f;
        for (acc, cj) in lhs_weights.iter_mut().zip(c.iter()) {
            *acc += w * cj * cj;
        }
        if in_subset[idx] {
            let q: f64 = op.eigenvalues.iter().zip(c.iter()).map(|(mu, cj)| mu * cj * cj).sum();
            rhs += w * (z * f.norm_squared() - q);
        }
    }
    let lhs: f64 = op.eigenvalues.iter().zip(&lhs_weights).map(|(mu, s)| (z - mu).max(0.0) * s).sum();
    let holds = lhs >= rhs - AVP_RTOL * z.abs().max(1.0) * n as f64;
    Ok(AvpCheck { lhs, rhs, holds, mode })
}

/// `n` points in `(0, r_max]`, evenly spaced.
pub fn radius_grid(r_max: f64, n: usize) -> Vec<f64> {
    (1..=n).map(|i| r_max * i as f64 / n as f64).collect()
}

/// Checks, on the exact Neumann spectrum of a box, the inequality
/// `μ_{k+1}R^d − d/(d+2) R^{d+2} ≤ m_k^{d/2}(μ_{k+1} − (1/k)Σ_{i≤k} μ_i)` at
/// every radius in `grid_r`, then the two normalized consequences obtained
/// with `x_k = μ_{k+1}/m_k`.
pub fn kroeger_demo(box_lengths: &[f64], k: usize, grid_r: &[f64]) -> Result<Vec<VerificationRecord>> {
    let d = box_lengths.len();
    let spectrum = enumerate_box_count(box_lengths, BoundaryCondition::Neumann, k + 1)?;
    let volume: f64 = box_lengths.iter().product();
    let sum = spectrum.eigenvalue_sum(k)?;
    let state = KroegerState::from_sum(sum, k, d, volume)?;
    let mu_next = spectrum.eigenvalue(k + 1)?;
    let mean = sum / k as f64;
    let df = d as f64;
    let rhs = state.m_k.powf(df / 2.0) * (mu_next - mean);
    let inputs = format!("box={box_lengths:?} k={k}");
    let mut records = Vec::with_capacity(grid_r.len() + 2);
    for &r in grid_r {
        if !(r > 0.0) {
            return Err(Error::arg(format!("radii must be positive, got {r}")));
        }
        let lhs = mu_next * r.powf(df) - df / (df + 2.0) * r.powf(df + 2.0);
        let tol = 1e-12 * (mu_next * r.powf(df)).max(rhs.abs()).max(1.0);
        records.push(VerificationRecord::upper("kroeger_radius", inputs.clone(), r, rhs, lhs, tol));
    }
    let x = mu_next / state.m_k;
    let left = (df + 2.0) / df * mean - state.m_k;
    let tol = 1e-12 * state.m_k;
    let normalized1 = state.m_k * 2.0 / df * y_p(x, df / 2.0);
    records.push(VerificationRecord::upper("kroeger_normalized1", inputs.clone(), x, normalized1, left, tol));
    let normalized2 = -state.m_k * (x - 1.0).powi(2);
    records.push(VerificationRecord::upper("kroeger_normalized2", inputs, x, normalized2, left, tol));
    Ok(records)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn diagonal_examples() {
        let op = DiscreteOperatorSpec::diagonal(vec![1.0, 2.0, 3.0]).unwrap();
        let fam = TrialFamily::standard_basis(3, vec![0, 1]).unwrap();
        let c = avp_check(&op, &fam, 2.5, AvpMode::Theorem).unwrap();
        assert!((c.lhs - 2.0).abs() < 1e-15 && (c.rhs - 2.0).abs() < 1e-15 && c.holds);
        let fam = fam.with_subset(vec![0, 1, 2]).unwrap();
        let c = avp_check(&op, &fam, 2.5, AvpMode::Theorem).unwrap();
        assert!((c.rhs - 1.5).abs() < 1e-15 && c.lhs > c.rhs);
    }

    #[test]
    fn random_parseval_instances_hold() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..50 {
            let op = DiscreteOperatorSpec::random(12, 10.0, &mut rng).unwrap();
            let fam = TrialFamily::random_parseval(12, 20, &mut rng).unwrap();
            assert!(fam.parseval_defect() < PARSEVAL_TOL);
            let z = rng.gen_range(0.0..12.0);
            assert!(avp_check(&op, &fam, z, AvpMode::Theorem).unwrap().holds);
        }
    }

    #[test]
    fn eigenbasis_saturates() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let op = DiscreteOperatorSpec::random(10, 5.0, &mut rng).unwrap();
        let z = 2.5;
        let below: Vec<usize> = (0..10).filter(|&j| op.eigenvalues()[j] < z).collect();
        let fam = TrialFamily::eigenbasis(&op, below).unwrap();
        let c = avp_check(&op, &fam, z, AvpMode::Theorem).unwrap();
        assert!((c.lhs - c.rhs).abs() < 1e-10);
    }

    #[test]
    fn non_parseval_family_needs_permissive_mode() {
        let op = DiscreteOperatorSpec::diagonal(vec![1.0, 2.0]).unwrap();
        let fam = TrialFamily::new(vec![DVector::from_vec(vec![2.0, 0.0])], vec![1.0], vec![0]).unwrap();
        assert!(matches!(avp_check(&op, &fam, 1.5, AvpMode::Theorem), Err(Error::Precondition(_))));
        let c = avp_check(&op, &fam, 1.5, AvpMode::Permissive).unwrap();
        assert_eq!(c.mode, AvpMode::Permissive);
        assert!((c.lhs - 2.0).abs() < 1e-15);
    }

    #[test]
    fn validation() {
        let bad = DMatrix::from_element(2, 2, 1.0);
        assert!(DiscreteOperatorSpec::new(vec![1.0, 2.0], bad).is_err());
        assert!(DiscreteOperatorSpec::diagonal(vec![2.0, 1.0]).is_err());
        assert!(TrialFamily::standard_basis(2, vec![5]).is_err());
        let op = DiscreteOperatorSpec::diagonal(vec![1.0, 2.0]).unwrap();
        let fam = TrialFamily::standard_basis(3, vec![]).unwrap();
        assert!(avp_check(&op, &fam, 1.0, AvpMode::Permissive).is_err());
    }

    #[test]
    fn kroeger_demo_on_unit_square() {
        for k in [1, 2, 10] {
            let m_k = 4.0 * std::f64::consts::PI * k as f64;
            let recs = kroeger_demo(&[1.0, 1.0], k, &radius_grid(3.0 * m_k.sqrt(), 200)).unwrap();
            assert_eq!(recs.len(), 202);
            assert!(recs.iter().all(|r| r.passed), "k = {k}");
        }
    }
}
