//! Seeded random instances: states, unitaries, measurements, ensembles.
//! Used by the verification suite and the property tests; every consumer
//! passes its own RNG so runs stay reproducible.

use num_complex::Complex64;
use rand::Rng;

use crate::eigen::support_inv_sqrt_mat;
use crate::min_error::SymmetricEnsembleSpec;
use crate::types::{cxr, CMat, CVec, OutcomeLabel, Pom, ProbabilityOperator, PureState, StateEnsemble};

/// Standard normal via Box-Muller; keeps the crate off extra distributions.
pub fn standard_normal(rng: &mut impl Rng) -> f64 {
    let u1: f64 = 1.0 - rng.gen::<f64>();
    let u2: f64 = rng.gen();
    (-2.0 * u1.ln()).sqrt() * (std::f64::consts::TAU * u2).cos()
}

fn gaussian_complex(rng: &mut impl Rng) -> Complex64 {
    Complex64::new(standard_normal(rng), standard_normal(rng))
}

/// Ginibre matrix: i.i.d. complex Gaussian entries.
pub fn ginibre(dim: usize, rng: &mut impl Rng) -> CMat {
    CMat::from_fn(dim, dim, |_, _| gaussian_complex(rng))
}

/// Haar-distributed random pure state.
pub fn random_pure_state(dim: usize, rng: &mut impl Rng) -> PureState {
    loop {
        let v = CVec::from_fn(dim, |_, _| gaussian_complex(rng));
        let n = v.norm();
        if n > 1e-6 {
            return PureState::new(v / cxr(n)).expect("normalized");
        }
    }
}

/// Random unitary from the QR decomposition of a Ginibre matrix, with the
/// R diagonal phases absorbed so the distribution is Haar.
pub fn random_unitary(dim: usize, rng: &mut impl Rng) -> CMat {
    let qr = ginibre(dim, rng).qr();
    let r = qr.r();
    let mut q = qr.q();
    for k in 0..dim {
        let d = r[(k, k)];
        let phase = if d.norm() > 0.0 { d / cxr(d.norm()) } else { cxr(1.0) };
        for i in 0..dim {
            q[(i, k)] *= phase;
        }
    }
    q
}

/// Random full-rank density operator: normalized G G^dag for Ginibre G.
pub fn random_density_matrix(dim: usize, rng: &mut impl Rng) -> CMat {
    let g = ginibre(dim, rng);
    let m = &g * g.adjoint();
    let tr = m.trace().re;
    m * cxr(1.0 / tr)
}

/// Random probability vector (flat Dirichlet via normalized exponentials).
pub fn random_priors(n: usize, rng: &mut impl Rng) -> Vec<f64> {
    let mut w: Vec<f64> = (0..n).map(|_| -(1.0 - rng.gen::<f64>()).ln()).collect();
    let total: f64 = w.iter().sum();
    for x in &mut w {
        *x /= total;
    }
    w
}

/// Random ensemble of pure states with random priors.
pub fn random_pure_ensemble(dim: usize, n: usize, rng: &mut impl Rng) -> StateEnsemble {
    let states: Vec<PureState> = (0..n).map(|_| random_pure_state(dim, rng)).collect();
    let priors = random_priors(n, rng);
    StateEnsemble::from_pure(&states, &priors).expect("valid by construction")
}

/// Random POM with the requested number of outcomes: elements A_j^dag A_j
/// conjugated by the inverse square root of their sum, which restores
/// completeness while keeping positivity.
pub fn random_pom(dim: usize, n_outcomes: usize, rng: &mut impl Rng) -> Pom {
    assert!(n_outcomes >= 1);
    loop {
        let parts: Vec<CMat> = (0..n_outcomes)
            .map(|_| {
                let a = ginibre(dim, rng);
                a.adjoint() * a
            })
            .collect();
        let mut total = CMat::zeros(dim, dim);
        for p in &parts {
            total += p;
        }
        let s = support_inv_sqrt_mat(&total, 1e-12);
        let residual = crate::types::max_abs(&(&s * &total * &s - CMat::identity(dim, dim)));
        if residual > 1e-10 {
            continue; // rank-deficient draw, effectively never happens
        }
        let elements: Vec<ProbabilityOperator> = parts
            .iter()
            .enumerate()
            .map(|(j, p)| {
                ProbabilityOperator::new(&s * p * &s, OutcomeLabel::State(j))
                    .expect("positive by construction")
            })
            .collect();
        return Pom::new(elements).expect("non-empty");
    }
}

/// Random rank-1 POM: vectors w_j with sum |w_j><w_j| = identity, built the
/// same way from random rank-1 parts.
pub fn random_rank_one_pom(dim: usize, n_outcomes: usize, rng: &mut impl Rng) -> Pom {
    assert!(n_outcomes >= dim, "need at least dim outcomes for completeness");
    let vecs: Vec<CVec> = (0..n_outcomes)
        .map(|_| CVec::from_fn(dim, |_, _| gaussian_complex(rng)))
        .collect();
    let mut total = CMat::zeros(dim, dim);
    for v in &vecs {
        total += v * v.adjoint();
    }
    let s = support_inv_sqrt_mat(&total, 1e-12);
    let elements: Vec<ProbabilityOperator> = vecs
        .iter()
        .enumerate()
        .map(|(j, v)| {
            let w = &s * v;
            ProbabilityOperator::new(&w * w.adjoint(), OutcomeLabel::State(j))
                .expect("positive by construction")
        })
        .collect();
    Pom::new(elements).expect("non-empty")
}

/// Random symmetric ensemble generator: V = U diag(omega^k_j) U^dag with
/// omega = exp(2 pi i / count), so V^count is the identity exactly up to
/// rounding.
pub fn random_symmetric_spec(count: usize, dim: usize, rng: &mut impl Rng) -> SymmetricEnsembleSpec {
    let u = random_unitary(dim, rng);
    let omega = std::f64::consts::TAU / count as f64;
    let d = CMat::from_fn(dim, dim, |i, j| {
        if i == j {
            let k = rng.gen_range(0..count) as f64;
            Complex64::from_polar(1.0, omega * k)
        } else {
            cxr(0.0)
        }
    });
    let v = &u * d * u.adjoint();
    let seed_state = random_pure_state(dim, rng);
    SymmetricEnsembleSpec::new(v, seed_state, count).expect("valid by construction")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::types::max_abs;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn random_unitary_is_unitary() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for dim in 1..=6 {
            let u = random_unitary(dim, &mut rng);
            let residual = max_abs(&(u.adjoint() * &u - CMat::identity(dim, dim)));
            assert!(residual < 1e-12, "dim {dim}: {residual}");
        }
    }

    #[test]
    fn random_pom_is_complete_and_positive() {
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        let pom = random_pom(3, 5, &mut rng);
        let report = crate::validate::validate_pom(&pom, &crate::types::Tolerances::default());
        assert!(report.pass, "{report:?}");
    }

    #[test]
    fn random_density_is_valid() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let rho = random_density_matrix(4, &mut rng);
        assert!(crate::types::DensityOperator::new(rho).is_ok());
    }
}
