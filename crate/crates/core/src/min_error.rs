//! Minimum-error discrimination: closed forms for two states, the square
//! root measurement, optimality certificates, and a fixed-point optimizer
//! for ensembles with no known closed form.

use num_complex::Complex64;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::eigen::{eigh, min_eigenvalue, rank_of, support_inv_sqrt_mat};
use crate::error::{DiscrimError, Result};
use crate::search::golden_max;
use crate::types::{
    hermitize, max_abs, real_trace_product, CMat, DensityOperator, OutcomeLabel, Pom,
    ProbabilityOperator, PureState, StateEnsemble, Tolerances,
};

/// How far a measurement is from satisfying the minimum-error optimality
/// conditions. Both vanish exactly at an optimum.
///
/// `dominance` is the worst negative eigenvalue (sign-flipped, floored at
/// zero) of sum_i p_i rho_i pi_i - p_j rho_j over all j. `cross` is the
/// largest entry of pi_i (p_i rho_i - p_j rho_j) pi_j over all pairs.
#[derive(Debug, Clone, Copy)]
pub struct OptimalityResiduals {
    pub dominance: f64,
    pub cross: f64,
}

impl OptimalityResiduals {
    pub fn max(&self) -> f64 {
        self.dominance.max(self.cross)
    }
}

/// An exactly-optimal minimum-error measurement together with its error
/// probability and the optimality residuals of the returned POM.
#[derive(Debug, Clone)]
pub struct MinErrorResult {
    pub pom: Pom,
    pub p_error: f64,
    pub p_correct: f64,
    pub residuals: OptimalityResiduals,
}

/// Square root measurement. `support_only` is set when the ensemble average
/// is rank deficient: the elements then resolve the identity on the support
/// of the average state, not on the whole space.
#[derive(Debug, Clone)]
pub struct SrmResult {
    pub pom: Pom,
    pub support_only: bool,
}

fn check_prior(p0: f64) -> Result<()> {
    if !(0.0..=1.0).contains(&p0) || !p0.is_finite() {
        return Err(DiscrimError::InvalidPriors(p0));
    }
    Ok(())
}

/// Optimal minimum-error measurement for two pure states with priors
/// (p0, 1 - p0). The error probability matches
/// (1 - sqrt(1 - 4 p0 p1 |<psi0|psi1>|^2)) / 2.
pub fn helstrom_two_pure(psi0: &PureState, psi1: &PureState, p0: f64) -> Result<MinErrorResult> {
    two_mixed_optimal(&psi0.density(), &psi1.density(), p0)
}

/// Optimal minimum-error measurement for two arbitrary density operators.
/// Projects onto the strictly positive eigenspace of p0 rho0 - p1 rho1;
/// zero modes are assigned to outcome 1 (any split gives the same error).
pub fn two_mixed_optimal(rho0: &DensityOperator, rho1: &DensityOperator, p0: f64) -> Result<MinErrorResult> {
    check_prior(p0)?;
    if rho0.dim() != rho1.dim() {
        return Err(DiscrimError::DimensionMismatch { left: rho0.dim(), right: rho1.dim() });
    }
    let p1 = 1.0 - p0;
    let dim = rho0.dim();
    let gamma = rho0.matrix() * Complex64::new(p0, 0.0) - rho1.matrix() * Complex64::new(p1, 0.0);
    let (values, vectors) = eigh(&gamma);
    let mut pi0 = CMat::zeros(dim, dim);
    for (k, &lambda) in values.iter().enumerate() {
        if lambda > 0.0 {
            let v = vectors.column(k);
            pi0 += v * v.adjoint();
        }
    }
    let pi1 = CMat::identity(dim, dim) - &pi0;
    let p_error = (p0 - real_trace_product(&gamma, &pi0)).clamp(0.0, 1.0);

    let weighted = [rho0.matrix() * Complex64::new(p0, 0.0), rho1.matrix() * Complex64::new(p1, 0.0)];
    let pis = [pi0, pi1];
    let residuals = residuals_from_mats(&weighted, &pis);
    let pom = pom_from_mats(pis.to_vec())?;
    Ok(MinErrorResult { pom, p_error, p_correct: 1.0 - p_error, residuals })
}

fn pom_from_mats(mats: Vec<CMat>) -> Result<Pom> {
    let elements = mats
        .into_iter()
        .enumerate()
        .map(|(i, m)| ProbabilityOperator::new(hermitize(&m), OutcomeLabel::State(i)))
        .collect::<Result<Vec<_>>>()?;
    Pom::new(elements)
}

fn residuals_from_mats(weighted: &[CMat], pis: &[CMat]) -> OptimalityResiduals {
    let dim = weighted[0].nrows();
    let mut g = CMat::zeros(dim, dim);
    for (w, pi) in weighted.iter().zip(pis) {
        g += w * pi;
    }
    let g = hermitize(&g);
    let mut dominance = 0.0_f64;
    for w in weighted {
        dominance = dominance.max(-min_eigenvalue(&(&g - w)));
    }
    let mut cross = 0.0_f64;
    for (i, wi) in weighted.iter().enumerate() {
        for (j, wj) in weighted.iter().enumerate() {
            if i != j {
                cross = cross.max(max_abs(&(&pis[i] * (wi - wj) * &pis[j])));
            }
        }
    }
    OptimalityResiduals { dominance: dominance.max(0.0), cross }
}

/// Evaluates the minimum-error optimality conditions for an arbitrary POM
/// against an ensemble. Elements sharing a state label are aggregated first;
/// inconclusive outcomes are not meaningful here and are rejected.
pub fn check_optimality(ensemble: &StateEnsemble, pom: &Pom) -> Result<OptimalityResiduals> {
    if ensemble.dim() != pom.dim() {
        return Err(DiscrimError::DimensionMismatch { left: ensemble.dim(), right: pom.dim() });
    }
    let pis = pom.aggregated_state_elements(ensemble.len())?;
    let weighted: Vec<CMat> = (0..ensemble.len()).map(|i| ensemble.weighted(i)).collect();
    Ok(residuals_from_mats(&weighted, &pis))
}

/// Square root measurement: pi_i = rho^{-1/2} p_i rho_i rho^{-1/2} with rho
/// the ensemble average, inverted on its support.
pub fn square_root_measurement(ensemble: &StateEnsemble) -> Result<SrmResult> {
    let weights: Vec<f64> = ensemble.priors().to_vec();
    weighted_srm(ensemble, &weights)
}

/// Square root measurement built from a reweighted average
/// sigma = sum_i w_i rho_i. The weights must form a distribution; they bias
/// which states the measurement favors without changing the ensemble.
pub fn weighted_srm(ensemble: &StateEnsemble, weights: &[f64]) -> Result<SrmResult> {
    if weights.len() != ensemble.len() {
        return Err(DiscrimError::LengthMismatch { left: ensemble.len(), right: weights.len() });
    }
    if weights.iter().any(|w| !w.is_finite() || *w < 0.0) {
        return Err(DiscrimError::InvalidWeights("weights must be finite and nonnegative"));
    }
    let total: f64 = weights.iter().sum();
    if (total - 1.0).abs() > 1e-9 {
        return Err(DiscrimError::InvalidWeights("weights must sum to one"));
    }
    let tol = Tolerances::default();
    let dim = ensemble.dim();
    let mut sigma = CMat::zeros(dim, dim);
    for (i, w) in weights.iter().enumerate() {
        sigma += ensemble.state(i).matrix() * Complex64::new(*w, 0.0);
    }
    let sigma = hermitize(&sigma);
    let s = support_inv_sqrt_mat(&sigma, tol.rank);
    let support_only = rank_of(&sigma, tol.rank) < dim;
    let mats: Vec<CMat> = (0..ensemble.len())
        .map(|i| {
            let w = ensemble.state(i).matrix() * Complex64::new(weights[i], 0.0);
            &s * w * &s
        })
        .collect();
    Ok(SrmResult { pom: pom_from_mats(mats)?, support_only })
}

/// Detects when guessing a single state without measuring is already
/// optimal: returns the smallest index i with p_i rho_i - p_j rho_j >= 0
/// for every j, or None when no state dominates.
pub fn no_measurement_optimal(ensemble: &StateEnsemble) -> Option<usize> {
    let tol = Tolerances::default();
    let weighted: Vec<CMat> = (0..ensemble.len()).map(|i| ensemble.weighted(i)).collect();
    'outer: for (i, wi) in weighted.iter().enumerate() {
        for (j, wj) in weighted.iter().enumerate() {
            if i == j {
                continue;
            }
            if min_eigenvalue(&(wi - wj)) < -tol.positivity {
                continue 'outer;
            }
        }
        return Some(i);
    }
    None
}

const SYMMETRY_TOL: f64 = 1e-8;

/// An ensemble generated by repeatedly applying a unitary V with V^N = I to
/// a seed state, taken with equal priors. The square root measurement is
/// exactly optimal for such ensembles.
#[derive(Debug, Clone)]
pub struct SymmetricEnsembleSpec {
    generator: CMat,
    seed_state: PureState,
    count: usize,
}

impl SymmetricEnsembleSpec {
    pub fn new(generator: CMat, seed_state: PureState, count: usize) -> Result<Self> {
        if count == 0 {
            return Err(DiscrimError::Empty("symmetric ensemble count"));
        }
        if generator.nrows() != generator.ncols() {
            return Err(DiscrimError::NotSquare { rows: generator.nrows(), cols: generator.ncols() });
        }
        if generator.nrows() != seed_state.dim() {
            return Err(DiscrimError::DimensionMismatch { left: generator.nrows(), right: seed_state.dim() });
        }
        let dim = generator.nrows();
        let eye = CMat::identity(dim, dim);
        let unitarity = max_abs(&(generator.adjoint() * &generator - &eye));
        if unitarity > SYMMETRY_TOL {
            return Err(DiscrimError::NotUnitary(unitarity));
        }
        let mut power = eye.clone();
        for _ in 0..count {
            power = &generator * power;
        }
        let residual = max_abs(&(power - eye));
        if residual > SYMMETRY_TOL {
            return Err(DiscrimError::NotPeriodic { n: count, residual });
        }
        Ok(Self { generator, seed_state, count })
    }

    pub fn generator(&self) -> &CMat {
        &self.generator
    }

    pub fn seed_state(&self) -> &PureState {
        &self.seed_state
    }

    pub fn count(&self) -> usize {
        self.count
    }

    pub fn states(&self) -> Vec<PureState> {
        let mut out = Vec::with_capacity(self.count);
        let mut v = self.seed_state.amplitudes().clone_owned();
        for _ in 0..self.count {
            out.push(PureState::new(v.clone_owned()).expect("unitary orbit stays normalized"));
            v = &self.generator * v;
        }
        out
    }

    pub fn ensemble(&self) -> StateEnsemble {
        StateEnsemble::from_pure(&self.states(), &vec![1.0 / self.count as f64; self.count])
            .expect("orbit states share the generator dimension")
    }
}

/// Knobs for the fixed-point optimizer. `threshold` is the optimality
/// residual below which iteration stops; `random_starts` extra seeds are
/// drawn deterministically from `seed` on top of the square-root-measurement
/// and best-single-guess seeds that are always tried.
#[derive(Debug, Clone, Copy)]
pub struct OptimizeConfig {
    pub max_iterations: usize,
    pub threshold: f64,
    pub random_starts: usize,
    pub seed: u64,
}

impl Default for OptimizeConfig {
    fn default() -> Self {
        Self { max_iterations: 1000, threshold: 1e-9, random_starts: 2, seed: 0x5eed }
    }
}

/// Outcome of the fixed-point iteration. `trajectory` records the success
/// probability after the seed and after every accepted step of the winning
/// start, so callers can see (and test) that it never decreases.
#[derive(Debug, Clone)]
pub struct MinErrorOptimization {
    pub result: MinErrorResult,
    pub converged: bool,
    pub iterations: usize,
    pub trajectory: Vec<f64>,
}

struct RunOutcome {
    pis: Vec<CMat>,
    p_correct: f64,
    residuals: OptimalityResiduals,
    converged: bool,
    iterations: usize,
    trajectory: Vec<f64>,
}

fn score(weighted: &[CMat], pis: &[CMat]) -> f64 {
    let total: f64 = weighted.iter().zip(pis).map(|(w, pi)| real_trace_product(w, pi)).sum();
    total.clamp(0.0, 1.0)
}

fn fixed_point_run(weighted: &[CMat], start: Vec<CMat>, config: &OptimizeConfig) -> RunOutcome {
    let n = weighted.len();
    let dim = weighted[0].nrows();
    let eye = CMat::identity(dim, dim);
    let mut pis = start;
    let mut p_correct = score(weighted, &pis);
    let mut trajectory = vec![p_correct];
    let mut residuals = residuals_from_mats(weighted, &pis);
    let mut converged = residuals.max() < config.threshold;
    let mut iterations = 0;
    while !converged && iterations < config.max_iterations {
        iterations += 1;
        let mut g = CMat::zeros(dim, dim);
        let updated: Vec<CMat> = weighted.iter().zip(&pis).map(|(w, pi)| w * pi * w).collect();
        for u in &updated {
            g += u;
        }
        let g = hermitize(&g);
        let s = support_inv_sqrt_mat(&g, 1e-12);
        let mut next: Vec<CMat> = updated.iter().map(|u| hermitize(&(&s * u * &s))).collect();
        let mut sum = CMat::zeros(dim, dim);
        for m in &next {
            sum += m;
        }
        let defect = &eye - sum;
        if max_abs(&defect) > 1e-12 {
            // rho-weighted iterates live on the support of G; park the
            // orthogonal remainder evenly so the POM stays complete.
            let share = defect / Complex64::new(n as f64, 0.0);
            for m in &mut next {
                *m = hermitize(&(&*m + &share));
            }
        }
        let p_next = score(weighted, &next);
        if p_next + 1e-12 < p_correct {
            break;
        }
        pis = next;
        p_correct = p_next;
        trajectory.push(p_correct);
        residuals = residuals_from_mats(weighted, &pis);
        converged = residuals.max() < config.threshold;
    }
    RunOutcome { pis, p_correct, residuals, converged, iterations, trajectory }
}

fn srm_seed(ensemble: &StateEnsemble) -> Result<Vec<CMat>> {
    let srm = square_root_measurement(ensemble)?;
    let dim = ensemble.dim();
    let mut mats: Vec<CMat> = srm.pom.elements().iter().map(|e| e.matrix().clone_owned()).collect();
    if srm.support_only {
        let mut sum = CMat::zeros(dim, dim);
        for m in &mats {
            sum += m;
        }
        let share = (CMat::identity(dim, dim) - sum) / Complex64::new(mats.len() as f64, 0.0);
        for m in &mut mats {
            *m = hermitize(&(&*m + &share));
        }
    }
    Ok(mats)
}

fn guess_seed(ensemble: &StateEnsemble) -> Vec<CMat> {
    let dim = ensemble.dim();
    let mut best = 0;
    for i in 1..ensemble.len() {
        if ensemble.priors()[i] > ensemble.priors()[best] {
            best = i;
        }
    }
    (0..ensemble.len())
        .map(|i| if i == best { CMat::identity(dim, dim) } else { CMat::zeros(dim, dim) })
        .collect()
}

fn random_seed(rng: &mut ChaCha8Rng, n: usize, dim: usize) -> Vec<CMat> {
    let parts: Vec<CMat> = (0..n)
        .map(|_| {
            let a = crate::random::ginibre(dim, rng);
            a.adjoint() * a
        })
        .collect();
    let mut sum = CMat::zeros(dim, dim);
    for p in &parts {
        sum += p;
    }
    let s = support_inv_sqrt_mat(&hermitize(&sum), 1e-12);
    // Ginibre parts are full rank almost surely, so the conjugation
    // renormalizes them into a complete POM.
    parts.into_iter().map(|p| hermitize(&(&s * p * &s))).collect()
}

/// Iterative minimum-error solver for ensembles without a usable closed
/// form. Each step maps pi_i to G^{-1/2} L_i pi_i L_i G^{-1/2} with
/// L_i = p_i rho_i and G the sum of the updated elements; the success
/// probability is monotone along the iteration and steps that would lower
/// it (a numerical artifact near fixed points) are rejected.
pub fn optimize_min_error(ensemble: &StateEnsemble, config: &OptimizeConfig) -> Result<MinErrorOptimization> {
    check_config(config)?;
    let weighted: Vec<CMat> = (0..ensemble.len()).map(|i| ensemble.weighted(i)).collect();
    let mut seeds: Vec<Vec<CMat>> = vec![srm_seed(ensemble)?, guess_seed(ensemble)];
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    for _ in 0..config.random_starts {
        seeds.push(random_seed(&mut rng, ensemble.len(), ensemble.dim()));
    }
    optimize_over_seeds(&weighted, seeds, config)
}

/// Same iteration, seeded only from random complete POMs. Exists so the
/// verification suite can show convergence does not lean on the analytic
/// seeds; requires `random_starts >= 1`.
pub(crate) fn optimize_from_random_starts(
    ensemble: &StateEnsemble,
    config: &OptimizeConfig,
) -> Result<MinErrorOptimization> {
    check_config(config)?;
    if config.random_starts == 0 {
        return Err(DiscrimError::Empty("random_starts"));
    }
    let weighted: Vec<CMat> = (0..ensemble.len()).map(|i| ensemble.weighted(i)).collect();
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    let seeds: Vec<Vec<CMat>> = (0..config.random_starts)
        .map(|_| random_seed(&mut rng, ensemble.len(), ensemble.dim()))
        .collect();
    optimize_over_seeds(&weighted, seeds, config)
}

fn check_config(config: &OptimizeConfig) -> Result<()> {
    if config.max_iterations == 0 {
        return Err(DiscrimError::Empty("max_iterations"));
    }
    if !(config.threshold > 0.0) {
        return Err(DiscrimError::InvalidTolerance(config.threshold));
    }
    Ok(())
}

fn optimize_over_seeds(
    weighted: &[CMat],
    seeds: Vec<Vec<CMat>>,
    config: &OptimizeConfig,
) -> Result<MinErrorOptimization> {
    let mut best: Option<RunOutcome> = None;
    for seed in seeds {
        let run = fixed_point_run(weighted, seed, config);
        let better = match &best {
            None => true,
            Some(b) => run.p_correct > b.p_correct + 1e-15,
        };
        if better {
            best = Some(run);
        }
    }
    let best = best.ok_or(DiscrimError::Empty("seeds"))?;
    let pom = pom_from_mats(best.pis)?;
    let result = MinErrorResult {
        pom,
        p_error: 1.0 - best.p_correct,
        p_correct: best.p_correct,
        residuals: best.residuals,
    };
    Ok(MinErrorOptimization {
        result,
        converged: best.converged,
        iterations: best.iterations,
        trajectory: best.trajectory,
    })
}

/// Independent check for two pure states with real canonical coordinates:
/// sweeps projective measurements in the plane spanned by the pair and
/// returns the smallest error found. Exercises none of the eigenvector
/// machinery the closed forms use.
pub fn two_pure_projective_search(
    psi0: &PureState,
    psi1: &PureState,
    p0: f64,
    grid_points: usize,
) -> Result<f64> {
    check_prior(p0)?;
    if grid_points < 2 {
        return Err(DiscrimError::Empty("grid_points"));
    }
    let pair = crate::types::CanonicalPair::from_states(psi0, psi1)?;
    let theta = pair.theta;
    let p1 = 1.0 - p0;
    // Outcome 0 is the ray at angle t, outcome 1 its orthogonal complement.
    let p_correct = move |t: f64| {
        let c = (t - theta).cos();
        let s = (t + theta).sin();
        p0 * c * c + p1 * s * s
    };
    let step = std::f64::consts::TAU / (grid_points - 1) as f64;
    let mut best_t = 0.0;
    let mut best = f64::NEG_INFINITY;
    for k in 0..grid_points {
        let t = k as f64 * step;
        let v = p_correct(t);
        if v > best {
            best = v;
            best_t = t;
        }
    }
    let (_, refined) = golden_max(&p_correct, best_t - step, best_t + step, 200);
    Ok((1.0 - refined.max(best)).clamp(0.0, 1.0))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ensembles::{trine_ensemble, two_pure_ensemble, two_pure_states};
    use crate::types::cxr;

    fn helstrom_error(theta: f64, p0: f64) -> f64 {
        let ov = (2.0 * theta).cos();
        0.5 * (1.0 - (1.0 - 4.0 * p0 * (1.0 - p0) * ov * ov).sqrt())
    }

    #[test]
    fn helstrom_matches_closed_form() {
        for &(theta, p0) in &[(15f64, 0.5), (15f64, 0.2), (30f64, 0.7), (5f64, 0.9)] {
            let th = theta.to_radians();
            let (a, b) = two_pure_states(th).unwrap();
            let r = helstrom_two_pure(&a, &b, p0).unwrap();
            assert!((r.p_error - helstrom_error(th, p0)).abs() < 1e-12);
            assert!(r.residuals.max() < 1e-9);
        }
    }

    #[test]
    fn helstrom_equal_priors_quarter() {
        let (a, b) = two_pure_states(15f64.to_radians()).unwrap();
        let r = helstrom_two_pure(&a, &b, 0.5).unwrap();
        assert!((r.p_error - 0.25).abs() < 1e-12);
    }

    #[test]
    fn orthogonal_states_discriminate_perfectly() {
        let a = PureState::basis_state(2, 0);
        let b = PureState::basis_state(2, 1);
        let r = helstrom_two_pure(&a, &b, 0.3).unwrap();
        assert!(r.p_error < 1e-12);
    }

    #[test]
    fn identical_states_cost_the_smaller_prior() {
        let a = PureState::basis_state(2, 0);
        let r = helstrom_two_pure(&a, &a, 0.7).unwrap();
        assert!((r.p_error - 0.3).abs() < 1e-12);
    }

    #[test]
    fn mixed_diagonal_pair() {
        let rho0 = DensityOperator::new(CMat::from_diagonal(&nalgebra::DVector::from_vec(vec![
            cxr(0.9),
            cxr(0.1),
        ])))
        .unwrap();
        let rho1 = DensityOperator::new(CMat::from_diagonal(&nalgebra::DVector::from_vec(vec![
            cxr(0.1),
            cxr(0.9),
        ])))
        .unwrap();
        let r = two_mixed_optimal(&rho0, &rho1, 0.5).unwrap();
        assert!((r.p_error - 0.1).abs() < 1e-12);
        assert!(r.residuals.max() < 1e-9);
    }

    #[test]
    fn srm_on_trine_is_two_thirds_scaled_projectors() {
        let ens = trine_ensemble().unwrap();
        let srm = square_root_measurement(&ens).unwrap();
        assert!(!srm.support_only);
        for (i, el) in srm.pom.elements().iter().enumerate() {
            let expected = ens.state(i).matrix() * cxr(2.0 / 3.0);
            assert!(max_abs(&(el.matrix() - expected)) < 1e-12);
        }
        let res = check_optimality(&ens, &srm.pom).unwrap();
        assert!(res.max() < 1e-9);
    }

    #[test]
    fn srm_single_state_is_support_projector() {
        let ens = StateEnsemble::from_pure(&[PureState::basis_state(2, 0)], &[1.0]).unwrap();
        let srm = square_root_measurement(&ens).unwrap();
        assert!(srm.support_only);
        let proj = ens.state(0).matrix();
        assert!(max_abs(&(srm.pom.elements()[0].matrix() - proj)) < 1e-12);
    }

    #[test]
    fn weighted_srm_rejects_bad_weights() {
        let ens = trine_ensemble().unwrap();
        assert!(weighted_srm(&ens, &[0.5, 0.5]).is_err());
        assert!(weighted_srm(&ens, &[0.5, 0.5, 0.5]).is_err());
        assert!(weighted_srm(&ens, &[-0.5, 1.0, 0.5]).is_err());
    }

    #[test]
    fn weighted_srm_extreme_weight_projects_on_one_state() {
        let ens = two_pure_ensemble(20f64.to_radians(), 0.5).unwrap();
        let srm = weighted_srm(&ens, &[1.0, 0.0]).unwrap();
        assert!(srm.support_only);
        // sigma = rho_0, so element 0 collapses to the projector onto psi_0
        // and element 1 vanishes with its weight.
        let expected = ens.state(0).matrix();
        assert!(max_abs(&(srm.pom.elements()[0].matrix() - expected)) < 1e-12);
        assert!(max_abs(srm.pom.elements()[1].matrix()) < 1e-12);
    }

    #[test]
    fn swapped_labels_fail_the_certificate() {
        let (a, b) = two_pure_states(20f64.to_radians()).unwrap();
        let r = helstrom_two_pure(&a, &b, 0.4).unwrap();
        let ens = StateEnsemble::from_pure(&[b, a], &[0.6, 0.4]).unwrap();
        // Same POM, ensemble labels swapped: the certificate must reject it.
        let res = check_optimality(&ens, &r.pom).unwrap();
        assert!(res.max() > 1e-3, "swapped residual {}", res.max());
    }

    #[test]
    fn no_measurement_detects_dominated_ensembles() {
        let half = CMat::identity(2, 2) * cxr(0.5);
        let mixed = DensityOperator::new(half).unwrap();
        let pure = PureState::basis_state(2, 0).density();
        let ens = StateEnsemble::new(vec![mixed, pure], vec![0.9, 0.1]).unwrap();
        assert_eq!(no_measurement_optimal(&ens), Some(0));
        let ens2 = two_pure_ensemble(30f64.to_radians(), 0.5).unwrap();
        assert_eq!(no_measurement_optimal(&ens2), None);
    }

    #[test]
    fn symmetric_spec_validates_generator() {
        let omega = Complex64::from_polar(1.0, std::f64::consts::TAU / 3.0);
        let v = CMat::from_diagonal(&nalgebra::DVector::from_vec(vec![cxr(1.0), omega]));
        let seed = PureState::qubit(cxr(0.3f64.cos()), cxr(0.3f64.sin())).unwrap();
        let spec = SymmetricEnsembleSpec::new(v.clone(), seed.clone(), 3).unwrap();
        assert_eq!(spec.states().len(), 3);
        assert!(SymmetricEnsembleSpec::new(v.clone(), seed.clone(), 2).is_err());
        let not_unitary = CMat::identity(2, 2) * cxr(1.1);
        assert!(matches!(
            SymmetricEnsembleSpec::new(not_unitary, seed, 2),
            Err(DiscrimError::NotUnitary(_))
        ));
    }

    #[test]
    fn optimizer_matches_helstrom_on_two_states() {
        let ens = two_pure_ensemble(15f64.to_radians(), 0.5).unwrap();
        let opt = optimize_min_error(&ens, &OptimizeConfig::default()).unwrap();
        assert!(opt.converged);
        assert!((opt.result.p_error - 0.25).abs() < 1e-6);
        for w in opt.trajectory.windows(2) {
            assert!(w[1] >= w[0] - 1e-12);
        }
    }

    #[test]
    fn optimizer_matches_srm_on_trine() {
        let ens = trine_ensemble().unwrap();
        let opt = optimize_min_error(&ens, &OptimizeConfig::default()).unwrap();
        assert!(opt.converged);
        assert!((opt.result.p_correct - 2.0 / 3.0).abs() < 1e-6);
    }

    #[test]
    fn projective_search_agrees_with_helstrom() {
        for &(theta, p0) in &[(15f64, 0.5), (25f64, 0.3), (40f64, 0.8)] {
            let th = theta.to_radians();
            let (a, b) = two_pure_states(th).unwrap();
            let grid = two_pure_projective_search(&a, &b, p0, 721).unwrap();
            assert!((grid - helstrom_error(th, p0)).abs() < 1e-6);
        }
    }
}
