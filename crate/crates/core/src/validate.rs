//! Measurement axioms and the Born rule.
//!
//! A probability operator measure must be Hermitian element-wise, positive
//! element-wise, and complete (elements sum to the identity). `validate_pom`
//! reports residuals for all three instead of failing fast, so defective
//! measurements can be diagnosed.

use crate::eigen::min_eigenvalue;
use crate::error::{DiscrimError, Result};
use crate::types::{max_abs, trace_product, CMat, DensityOperator, Pom, ProbabilityOperator, Tolerances};

/// Per-axiom residuals for a measurement, plus the overall verdict.
#[derive(Debug, Clone)]
pub struct ValidationReport {
    pub pass: bool,
    /// Max over elements of the max-abs deviation from Hermiticity.
    pub hermiticity_residual: f64,
    /// Minimum eigenvalue of each element, in element order.
    pub min_eigenvalues: Vec<f64>,
    /// Max-abs norm of (sum of elements - identity).
    pub completeness_residual: f64,
}

impl ValidationReport {
    /// Most negative eigenvalue over all elements.
    pub fn min_eigenvalue(&self) -> f64 {
        self.min_eigenvalues.iter().copied().fold(f64::INFINITY, f64::min)
    }
}

/// Check the three measurement axioms against the given tolerances.
pub fn validate_pom(pom: &Pom, tol: &Tolerances) -> ValidationReport {
    let dim = pom.dim();
    let mut hermiticity_residual: f64 = 0.0;
    let mut min_eigenvalues = Vec::with_capacity(pom.len());
    for e in pom.elements() {
        let m = e.matrix();
        hermiticity_residual = hermiticity_residual.max(max_abs(&(m - m.adjoint())));
        min_eigenvalues.push(min_eigenvalue(m));
    }
    let completeness_residual = max_abs(&(pom.element_sum() - CMat::identity(dim, dim)));
    let pass = hermiticity_residual <= tol.hermiticity
        && min_eigenvalues.iter().all(|&l| l >= -tol.positivity)
        && completeness_residual <= tol.completeness;
    ValidationReport {
        pass,
        hermiticity_residual,
        min_eigenvalues,
        completeness_residual,
    }
}

/// Tr(rho pi), the probability of the outcome in the given state. The trace
/// must be real within tolerance (a large imaginary part signals a
/// non-Hermitian input) and may be clamped only across tiny excursions;
/// anything beyond -1e-9 below zero or above one is an error, not a clamp.
pub fn born_probability(state: &DensityOperator, element: &ProbabilityOperator) -> Result<f64> {
    if state.dim() != element.dim() {
        return Err(DiscrimError::DimensionMismatch {
            left: state.dim(),
            right: element.dim(),
        });
    }
    let z = trace_product(state.matrix(), element.matrix());
    let tol = Tolerances::default();
    if z.im.abs() > tol.hermiticity {
        return Err(DiscrimError::ImaginaryPart(z.im));
    }
    if z.re < -tol.positivity || z.re > 1.0 + tol.positivity {
        return Err(DiscrimError::ProbabilityOutOfRange(z.re));
    }
    Ok(z.re.clamp(0.0, 1.0))
}

/// Born probability for operators trusted by construction; clamps to [0, 1].
pub(crate) fn born_raw(rho: &CMat, pi: &CMat) -> f64 {
    trace_product(rho, pi).re.clamp(0.0, 1.0)
}
