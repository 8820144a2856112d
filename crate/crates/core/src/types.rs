//! Value types for discrimination problems: pure states, Hermitian and
//! density operators, measurement elements, ensembles, and the tolerance
//! block every validation routine reads.
//!
//! Pure states are stored as vectors and promoted to rank-1 density
//! operators at module boundaries, so strategy code only ever sees density
//! operators and never duplicates pure/mixed code paths.

use nalgebra::{DMatrix, DVector};
use num_complex::Complex64;

use crate::error::{DiscrimError, Result};

pub type CMat = DMatrix<Complex64>;
pub type CVec = DVector<Complex64>;

pub(crate) fn cx(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

pub(crate) fn cxr(re: f64) -> Complex64 {
    Complex64::new(re, 0.0)
}

/// Max-abs matrix norm: cheap and its meaning does not drift with dimension.
pub fn max_abs(m: &CMat) -> f64 {
    m.iter().map(|z| z.norm()).fold(0.0, f64::max)
}

/// (m + m^dag)/2. Used before every eigendecomposition so rounding noise in
/// nominally Hermitian operators cannot leak into the solver.
pub fn hermitize(m: &CMat) -> CMat {
    (m + m.adjoint()) * cxr(0.5)
}

/// Tr(a b) without forming the product matrix.
pub fn trace_product(a: &CMat, b: &CMat) -> Complex64 {
    debug_assert_eq!(a.nrows(), b.nrows());
    let n = a.nrows();
    let mut s = cx(0.0, 0.0);
    for i in 0..n {
        for k in 0..n {
            s += a[(i, k)] * b[(k, i)];
        }
    }
    s
}

/// Re Tr(a b); the imaginary part is the caller's problem to police.
pub fn real_trace_product(a: &CMat, b: &CMat) -> f64 {
    trace_product(a, b).re
}

/// Tolerance block threaded through validation. Defaults sit far above
/// double-precision noise for dim <= 8 while still catching real defects:
/// hermiticity/completeness residuals at 1e-9 (max-abs norm), eigenvalue
/// floor -1e-9 for positivity, and a rank cutoff of 1e-9 relative to the
/// largest eigenvalue for support/kernel splits.
#[derive(Debug, Clone, Copy)]
pub struct Tolerances {
    pub hermiticity: f64,
    pub positivity: f64,
    pub completeness: f64,
    pub rank: f64,
}

impl Default for Tolerances {
    fn default() -> Self {
        Self {
            hermiticity: 1e-9,
            positivity: 1e-9,
            completeness: 1e-9,
            rank: 1e-9,
        }
    }
}

impl Tolerances {
    /// One value for all four fields; rejects non-positive input.
    pub fn uniform(t: f64) -> Result<Self> {
        if !(t > 0.0) {
            return Err(DiscrimError::InvalidTolerance(t));
        }
        Ok(Self {
            hermiticity: t,
            positivity: t,
            completeness: t,
            rank: t,
        })
    }
}

/// Window inside which a state vector is silently rescaled to unit norm.
/// Anything further out is rejected rather than repaired.
pub const NORMALIZATION_WINDOW: f64 = 1e-6;

/// Unit vector in C^dim.
#[derive(Debug, Clone)]
pub struct PureState {
    amplitudes: CVec,
}

impl PureState {
    /// Accepts vectors within [`NORMALIZATION_WINDOW`] of unit norm and
    /// rescales them exactly; rejects everything else.
    pub fn new(amplitudes: CVec) -> Result<Self> {
        if amplitudes.is_empty() {
            return Err(DiscrimError::Empty("state vector"));
        }
        let norm = amplitudes.norm();
        if (norm - 1.0).abs() > NORMALIZATION_WINDOW {
            return Err(DiscrimError::NotNormalized(norm));
        }
        Ok(Self {
            amplitudes: amplitudes / cxr(norm),
        })
    }

    pub fn from_slice(amplitudes: &[Complex64]) -> Result<Self> {
        Self::new(CVec::from_column_slice(amplitudes))
    }

    pub fn qubit(a: Complex64, b: Complex64) -> Result<Self> {
        Self::from_slice(&[a, b])
    }

    /// k-th computational basis vector of C^dim.
    pub fn basis_state(dim: usize, k: usize) -> Self {
        assert!(k < dim, "basis index {k} out of range for dim {dim}");
        let mut v = CVec::zeros(dim);
        v[k] = cxr(1.0);
        Self { amplitudes: v }
    }

    pub fn dim(&self) -> usize {
        self.amplitudes.len()
    }

    pub fn amplitudes(&self) -> &CVec {
        &self.amplitudes
    }

    /// <self|other>.
    pub fn inner(&self, other: &PureState) -> Complex64 {
        assert_eq!(self.dim(), other.dim(), "inner product dimension mismatch");
        self.amplitudes.dotc(&other.amplitudes)
    }

    /// |psi><psi|.
    pub fn projector(&self) -> CMat {
        &self.amplitudes * self.amplitudes.adjoint()
    }

    /// Promote to a rank-1 density operator.
    pub fn density(&self) -> DensityOperator {
        DensityOperator {
            op: HermitianOperator {
                matrix: self.projector(),
            },
        }
    }
}

/// Square complex matrix equal to its conjugate transpose within tolerance.
#[derive(Debug, Clone)]
pub struct HermitianOperator {
    matrix: CMat,
}

impl HermitianOperator {
    pub fn new(matrix: CMat) -> Result<Self> {
        Self::with_tol(matrix, &Tolerances::default())
    }

    pub fn with_tol(matrix: CMat, tol: &Tolerances) -> Result<Self> {
        if matrix.nrows() != matrix.ncols() {
            return Err(DiscrimError::NotSquare {
                rows: matrix.nrows(),
                cols: matrix.ncols(),
            });
        }
        if matrix.is_empty() {
            return Err(DiscrimError::Empty("operator"));
        }
        let residual = max_abs(&(&matrix - matrix.adjoint()));
        if residual > tol.hermiticity {
            return Err(DiscrimError::NotHermitian(residual));
        }
        Ok(Self { matrix })
    }

    /// For operators Hermitian by construction (spectral sums, projector
    /// combinations); skips the residual check.
    pub(crate) fn new_unchecked(matrix: CMat) -> Self {
        Self { matrix }
    }

    pub fn dim(&self) -> usize {
        self.matrix.nrows()
    }

    pub fn matrix(&self) -> &CMat {
        &self.matrix
    }

    pub fn into_matrix(self) -> CMat {
        self.matrix
    }
}

/// Unit-trace positive Hermitian operator: a quantum state, pure or mixed.
#[derive(Debug, Clone)]
pub struct DensityOperator {
    op: HermitianOperator,
}

impl DensityOperator {
    pub fn new(matrix: CMat) -> Result<Self> {
        Self::with_tol(matrix, &Tolerances::default())
    }

    pub fn with_tol(matrix: CMat, tol: &Tolerances) -> Result<Self> {
        let op = HermitianOperator::with_tol(matrix, tol)?;
        let trace = op.matrix().trace();
        if (trace.re - 1.0).abs() > tol.completeness || trace.im.abs() > tol.completeness {
            return Err(DiscrimError::InvalidTrace(trace.re));
        }
        let min_eig = crate::eigen::min_eigenvalue(op.matrix());
        if min_eig < -tol.positivity {
            return Err(DiscrimError::NotPositive(min_eig));
        }
        Ok(Self { op })
    }

    pub fn dim(&self) -> usize {
        self.op.dim()
    }

    pub fn matrix(&self) -> &CMat {
        self.op.matrix()
    }

    pub fn operator(&self) -> &HermitianOperator {
        &self.op
    }
}

/// Measurement outcome tag: a state index, or the inconclusive result.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum OutcomeLabel {
    State(usize),
    Inconclusive,
}

impl std::fmt::Display for OutcomeLabel {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            OutcomeLabel::State(i) => write!(f, "{i}"),
            OutcomeLabel::Inconclusive => write!(f, "?"),
        }
    }
}

/// Positive Hermitian operator tagged with the outcome it reports.
#[derive(Debug, Clone)]
pub struct ProbabilityOperator {
    op: HermitianOperator,
    label: OutcomeLabel,
}

impl ProbabilityOperator {
    pub fn new(matrix: CMat, label: OutcomeLabel) -> Result<Self> {
        Self::with_tol(matrix, label, &Tolerances::default())
    }

    pub fn with_tol(matrix: CMat, label: OutcomeLabel, tol: &Tolerances) -> Result<Self> {
        let op = HermitianOperator::with_tol(matrix, tol)?;
        let min_eig = crate::eigen::min_eigenvalue(op.matrix());
        if min_eig < -tol.positivity {
            return Err(DiscrimError::NotPositive(min_eig));
        }
        Ok(Self { op, label })
    }

    pub fn dim(&self) -> usize {
        self.op.dim()
    }

    pub fn matrix(&self) -> &CMat {
        self.op.matrix()
    }

    pub fn label(&self) -> OutcomeLabel {
        self.label
    }
}

/// Ordered list of probability operators. Construction enforces shared
/// dimension only; completeness is the job of `validate_pom`, which must be
/// able to report on defective measurements instead of refusing to build
/// them.
#[derive(Debug, Clone)]
pub struct Pom {
    elements: Vec<ProbabilityOperator>,
    dim: usize,
}

impl Pom {
    pub fn new(elements: Vec<ProbabilityOperator>) -> Result<Self> {
        let first = elements.first().ok_or(DiscrimError::Empty("POM"))?;
        let dim = first.dim();
        for e in &elements {
            if e.dim() != dim {
                return Err(DiscrimError::DimensionMismatch {
                    left: dim,
                    right: e.dim(),
                });
            }
        }
        Ok(Self { elements, dim })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn elements(&self) -> &[ProbabilityOperator] {
        &self.elements
    }

    pub fn element(&self, i: usize) -> &ProbabilityOperator {
        &self.elements[i]
    }

    pub fn labels(&self) -> Vec<OutcomeLabel> {
        self.elements.iter().map(|e| e.label()).collect()
    }

    pub fn element_sum(&self) -> CMat {
        let mut s = CMat::zeros(self.dim, self.dim);
        for e in &self.elements {
            s += e.matrix();
        }
        s
    }

    /// Effective element per state index: the sum of all elements labeled
    /// with that state. Errors when a state has no element or an
    /// inconclusive label sneaks in.
    pub(crate) fn aggregated_state_elements(&self, n_states: usize) -> Result<Vec<CMat>> {
        let mut agg = vec![CMat::zeros(self.dim, self.dim); n_states];
        let mut seen = vec![false; n_states];
        for e in &self.elements {
            match e.label() {
                OutcomeLabel::State(i) if i < n_states => {
                    agg[i] += e.matrix();
                    seen[i] = true;
                }
                OutcomeLabel::State(_) => {
                    return Err(DiscrimError::BadLabels("label outside state range"))
                }
                OutcomeLabel::Inconclusive => {
                    return Err(DiscrimError::BadLabels("inconclusive outcome not allowed"))
                }
            }
        }
        if seen.iter().all(|&s| s) {
            Ok(agg)
        } else {
            Err(DiscrimError::BadLabels("some state has no outcome"))
        }
    }
}

/// The discrimination problem instance: candidate states with their prior
/// preparation probabilities.
#[derive(Debug, Clone)]
pub struct StateEnsemble {
    states: Vec<DensityOperator>,
    priors: Vec<f64>,
}

impl StateEnsemble {
    pub fn new(states: Vec<DensityOperator>, priors: Vec<f64>) -> Result<Self> {
        if states.is_empty() {
            return Err(DiscrimError::Empty("ensemble"));
        }
        if states.len() != priors.len() {
            return Err(DiscrimError::LengthMismatch {
                left: states.len(),
                right: priors.len(),
            });
        }
        let dim = states[0].dim();
        for s in &states {
            if s.dim() != dim {
                return Err(DiscrimError::DimensionMismatch {
                    left: dim,
                    right: s.dim(),
                });
            }
        }
        for &p in &priors {
            if !(0.0..=1.0).contains(&p) || !p.is_finite() {
                return Err(DiscrimError::ProbabilityOutOfRange(p));
            }
        }
        let total: f64 = priors.iter().sum();
        if (total - 1.0).abs() > 1e-9 {
            return Err(DiscrimError::InvalidPriors(total));
        }
        Ok(Self { states, priors })
    }

    pub fn from_pure(states: &[PureState], priors: &[f64]) -> Result<Self> {
        Self::new(
            states.iter().map(PureState::density).collect(),
            priors.to_vec(),
        )
    }

    pub fn dim(&self) -> usize {
        self.states[0].dim()
    }

    pub fn len(&self) -> usize {
        self.states.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn states(&self) -> &[DensityOperator] {
        &self.states
    }

    pub fn state(&self, i: usize) -> &DensityOperator {
        &self.states[i]
    }

    pub fn priors(&self) -> &[f64] {
        &self.priors
    }

    pub fn prior(&self, i: usize) -> f64 {
        self.priors[i]
    }

    /// p_i rho_i.
    pub fn weighted(&self, i: usize) -> CMat {
        self.states[i].matrix() * cxr(self.priors[i])
    }

    /// rho = sum_i p_i rho_i.
    pub fn average(&self) -> CMat {
        let mut rho = CMat::zeros(self.dim(), self.dim());
        for i in 0..self.len() {
            rho += self.weighted(i);
        }
        rho
    }
}

/// Canonical form of two pure states: an orthonormal basis (u, v) of their
/// span in which psi0 = cos(theta) u + sin(theta) v and (up to a dropped
/// global phase) psi1 = cos(theta) u - sin(theta) v, with theta in [0, pi/4]
/// so cos(2 theta) = |<psi0|psi1>|. Measurements built in the canonical
/// plane are mapped back through `embed`.
#[derive(Debug, Clone)]
pub struct CanonicalPair {
    pub theta: f64,
    basis: (CVec, CVec),
}

impl CanonicalPair {
    /// Fails only for identical states (|overlap| = 1), where no span exists.
    pub fn from_states(psi0: &PureState, psi1: &PureState) -> Result<Self> {
        if psi0.dim() != psi1.dim() {
            return Err(DiscrimError::DimensionMismatch {
                left: psi0.dim(),
                right: psi1.dim(),
            });
        }
        let ov = psi0.inner(psi1);
        let mag = ov.norm().min(1.0);
        if mag >= 1.0 - 1e-14 {
            return Err(DiscrimError::IdenticalStates);
        }
        // Absorb the overlap phase into psi1 so the pair is real in its span.
        let phase = if ov.norm() > 0.0 { ov / cxr(ov.norm()) } else { cxr(1.0) };
        let psi1_adj = psi1.amplitudes() * phase;
        let u = (psi0.amplitudes() + &psi1_adj) * cxr(1.0 / (2.0 + 2.0 * mag).sqrt());
        let v = (psi0.amplitudes() - &psi1_adj) * cxr(1.0 / (2.0 - 2.0 * mag).sqrt());
        let theta = 0.5 * mag.acos();
        Ok(Self { theta, basis: (u, v) })
    }

    /// Lift a 2x2 operator in (u, v) coordinates back to the full space.
    pub fn embed(&self, m2: &CMat) -> CMat {
        assert_eq!(m2.nrows(), 2);
        let (u, v) = &self.basis;
        let dim = u.len();
        let mut p = CMat::zeros(dim, 2);
        p.column_mut(0).copy_from(u);
        p.column_mut(1).copy_from(v);
        &p * m2 * p.adjoint()
    }

    pub fn basis(&self) -> (&CVec, &CVec) {
        (&self.basis.0, &self.basis.1)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pure_state_rejects_far_from_unit_norm() {
        let err = PureState::from_slice(&[cxr(0.5), cxr(0.5)]).unwrap_err();
        assert!(matches!(err, DiscrimError::NotNormalized(_)));
    }

    #[test]
    fn pure_state_rescales_within_window() {
        let s = PureState::from_slice(&[cxr(1.0 + 5e-7), cxr(0.0)]).unwrap();
        assert!((s.amplitudes().norm() - 1.0).abs() < 1e-15);
    }

    #[test]
    fn density_rejects_negative_eigenvalue() {
        let m = CMat::from_row_slice(2, 2, &[cxr(1.5), cxr(0.0), cxr(0.0), cxr(-0.5)]);
        assert!(matches!(
            DensityOperator::new(m),
            Err(DiscrimError::NotPositive(_))
        ));
    }

    #[test]
    fn density_rejects_bad_trace() {
        let m = CMat::from_row_slice(2, 2, &[cxr(0.7), cxr(0.0), cxr(0.0), cxr(0.7)]);
        assert!(matches!(
            DensityOperator::new(m),
            Err(DiscrimError::InvalidTrace(_))
        ));
    }

    #[test]
    fn hermitian_rejects_asymmetric() {
        let m = CMat::from_row_slice(2, 2, &[cxr(1.0), cx(0.0, 1.0), cx(0.0, 1.0), cxr(1.0)]);
        assert!(matches!(
            HermitianOperator::new(m),
            Err(DiscrimError::NotHermitian(_))
        ));
    }

    #[test]
    fn ensemble_checks_priors() {
        let s = vec![
            PureState::basis_state(2, 0).density(),
            PureState::basis_state(2, 1).density(),
        ];
        assert!(matches!(
            StateEnsemble::new(s.clone(), vec![0.6, 0.6]),
            Err(DiscrimError::InvalidPriors(_))
        ));
        assert!(StateEnsemble::new(s, vec![0.6, 0.4]).is_ok());
    }

    #[test]
    fn pom_requires_shared_dimension() {
        let a = ProbabilityOperator::new(CMat::identity(2, 2), OutcomeLabel::State(0)).unwrap();
        let b = ProbabilityOperator::new(CMat::identity(3, 3), OutcomeLabel::State(1)).unwrap();
        assert!(matches!(
            Pom::new(vec![a, b]),
            Err(DiscrimError::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn canonical_pair_recovers_theta() {
        let t = 0.3_f64;
        let psi0 = PureState::qubit(cxr(t.cos()), cxr(t.sin())).unwrap();
        let psi1 = PureState::qubit(cxr(t.cos()), cxr(-t.sin())).unwrap();
        let cp = CanonicalPair::from_states(&psi0, &psi1).unwrap();
        assert!((cp.theta - t).abs() < 1e-12);
        // psi0 in canonical coordinates is (cos t, sin t).
        let (u, v) = cp.basis();
        let a = u.dotc(psi0.amplitudes());
        let b = v.dotc(psi0.amplitudes());
        assert!((a.norm() - t.cos()).abs() < 1e-12);
        assert!((b.norm() - t.sin()).abs() < 1e-12);
    }

    #[test]
    fn canonical_pair_rejects_identical() {
        let psi = PureState::basis_state(2, 0);
        assert!(matches!(
            CanonicalPair::from_states(&psi, &psi.clone()),
            Err(DiscrimError::IdenticalStates)
        ));
    }
}
