//! Maximum confidence discrimination: for each state, the largest possible
//! posterior probability that the state was prepared given that its outcome
//! fired. Useful precisely when linear dependence rules unambiguous
//! discrimination out; the conclusive outcomes are then as trustworthy as
//! physics allows, at the price of an inconclusive rate.

use crate::eigen::{eigh, min_eigenvalue, support_inv_sqrt_mat, support_projector_mat};
use crate::error::{DiscrimError, Result};
use crate::search::max_feasible;
use crate::types::{
    cxr, hermitize, max_abs, real_trace_product, CMat, OutcomeLabel, Pom, ProbabilityOperator,
    PureState, StateEnsemble, Tolerances,
};

/// Maximum-confidence measurement: one conclusive element per state plus an
/// explicit inconclusive element (possibly zero). `confidences` holds the
/// per-state optimum each conclusive element attains; `p_outcome` the
/// unconditional firing probability of each conclusive element.
#[derive(Debug, Clone)]
pub struct MaxConfidenceResult {
    pub pom: Pom,
    pub confidences: Vec<f64>,
    pub p_outcome: Vec<f64>,
    pub p_inconclusive: f64,
}

/// Posterior probability of state i given that element `index` (labeled
/// State(i)) fired on the ensemble average.
pub fn confidence(ensemble: &StateEnsemble, pom: &Pom, index: usize) -> Result<f64> {
    if ensemble.dim() != pom.dim() {
        return Err(DiscrimError::DimensionMismatch { left: ensemble.dim(), right: pom.dim() });
    }
    let element = pom.element(index);
    let i = match element.label() {
        OutcomeLabel::State(i) if i < ensemble.len() => i,
        OutcomeLabel::State(_) => return Err(DiscrimError::BadLabels("label outside state range")),
        OutcomeLabel::Inconclusive => {
            return Err(DiscrimError::BadLabels("inconclusive outcome has no confidence"))
        }
    };
    let p_outcome = real_trace_product(&ensemble.average(), element.matrix());
    if p_outcome < 1e-12 {
        return Err(DiscrimError::ZeroProbabilityOutcome(index));
    }
    let joint = ensemble.prior(i) * real_trace_product(ensemble.state(i).matrix(), element.matrix());
    Ok((joint / p_outcome).clamp(0.0, 1.0))
}

fn shaped_weighted(ensemble: &StateEnsemble, s: &CMat, i: usize) -> CMat {
    hermitize(&(s * ensemble.weighted(i) * s))
}

/// The best confidence any measurement can reach for state i: the top
/// eigenvalue of rho^{-1/2} p_i rho_i rho^{-1/2} (inverse on the support).
pub fn max_confidence_value(ensemble: &StateEnsemble, i: usize) -> Result<f64> {
    if i >= ensemble.len() {
        return Err(DiscrimError::BadLabels("state index out of range"));
    }
    let tol = Tolerances::default();
    let s = support_inv_sqrt_mat(&hermitize(&ensemble.average()), tol.rank);
    let (values, _) = eigh(&shaped_weighted(ensemble, &s, i));
    Ok(values[0].clamp(0.0, 1.0))
}

/// Measurement attaining the maximum confidence for every state at once.
///
/// Directions are fixed by the top eigenspace of each shaped operator (a
/// uniform mixture if the top eigenvalue is degenerate); any nonnegative
/// scaling preserves the confidences, so the scalings are then chosen to
/// maximize the total conclusive probability subject to the inconclusive
/// element staying positive: a shared-scale bisection followed by rounds of
/// single-coordinate ascent.
pub fn max_confidence_pom(ensemble: &StateEnsemble) -> Result<MaxConfidenceResult> {
    let tol = Tolerances::default();
    let dim = ensemble.dim();
    let n = ensemble.len();
    let rho = hermitize(&ensemble.average());
    let s = support_inv_sqrt_mat(&rho, tol.rank);

    let mut confidences = Vec::with_capacity(n);
    let mut rays: Vec<CMat> = Vec::with_capacity(n);
    for i in 0..n {
        let shaped = shaped_weighted(ensemble, &s, i);
        let (values, vectors) = eigh(&shaped);
        let gamma = values[0].max(0.0);
        confidences.push(gamma.clamp(0.0, 1.0));
        if gamma <= 0.0 {
            rays.push(CMat::zeros(dim, dim));
            continue;
        }
        // Uniform mixture over the top eigenspace; the window scales with
        // gamma so a degenerate top pair is never split by rounding.
        let window = 1e-9 * gamma.max(1.0);
        let top: Vec<usize> = (0..values.len()).filter(|&k| values[k] >= gamma - window).collect();
        let mut sigma = CMat::zeros(dim, dim);
        for &k in &top {
            let v = vectors.column(k);
            sigma += v * v.adjoint();
        }
        sigma /= cxr(top.len() as f64);
        rays.push(hermitize(&(&s * sigma * &s)));
    }

    let live: Vec<usize> = (0..n).filter(|&i| max_abs(&rays[i]) > 1e-14).collect();
    let eye = CMat::identity(dim, dim);
    let gains: Vec<f64> = rays.iter().map(|b| real_trace_product(&rho, b)).collect();

    let remainder = |alphas: &[f64]| {
        let mut m = eye.clone();
        for &i in &live {
            m -= &rays[i] * cxr(alphas[i]);
        }
        m
    };

    // Shared scale first: the largest t with I - t sum_i B_i >= 0.
    let mut alphas = vec![0.0; n];
    let shared_ok = |t: f64| {
        let mut m = eye.clone();
        for &i in &live {
            m -= &rays[i] * cxr(t);
        }
        min_eigenvalue(&m) >= -1e-12
    };
    let t0 = max_feasible(&shared_ok, 1e6, 80);
    for &i in &live {
        alphas[i] = t0;
    }

    // Coordinate ascent: each alpha_i in turn is pushed to the largest
    // feasible value. The objective sum_i alpha_i Tr(rho B_i) is linear, so
    // every pass is monotone; stop when a full pass gains nothing. The
    // current value is kept as a floor: it is feasible by construction, and
    // eigenvalue noise right at the boundary must not zero the coordinate.
    let objective =
        |alphas: &[f64]| -> f64 { live.iter().map(|&i| alphas[i] * gains[i]).sum() };
    let mut current = objective(&alphas);
    for _ in 0..50 {
        for &i in &live {
            let mut others = alphas.clone();
            others[i] = 0.0;
            let base = remainder(&others);
            let ok = |t: f64| min_eigenvalue(&(&base - &rays[i] * cxr(t))) >= -1e-12;
            alphas[i] = max_feasible(&ok, 1e6, 80).max(alphas[i]);
        }
        let next = objective(&alphas);
        if next - current < 1e-12 {
            break;
        }
        current = next;
    }

    let mut elements = Vec::with_capacity(n + 1);
    let mut conclusive = CMat::zeros(dim, dim);
    let mut p_outcome = Vec::with_capacity(n);
    for i in 0..n {
        let m = &rays[i] * cxr(alphas[i]);
        p_outcome.push(real_trace_product(&rho, &m).clamp(0.0, 1.0));
        conclusive += &m;
        elements.push(ProbabilityOperator::new(m, OutcomeLabel::State(i))?);
    }
    let pi_inc = &eye - conclusive;
    let p_inconclusive = real_trace_product(&rho, &pi_inc).clamp(0.0, 1.0);
    elements.push(ProbabilityOperator::new(pi_inc, OutcomeLabel::Inconclusive)?);
    Ok(MaxConfidenceResult {
        pom: Pom::new(elements)?,
        confidences,
        p_outcome,
        p_inconclusive,
    })
}

/// Outcome-weighted average confidence of a fully conclusive measurement.
/// For a minimum-error measurement this equals its success probability;
/// comparing it against the per-state maxima is what quantifies the
/// confidence shortfall of guessing strategies.
pub fn weighted_average_confidence(ensemble: &StateEnsemble, pom: &Pom) -> Result<f64> {
    if ensemble.dim() != pom.dim() {
        return Err(DiscrimError::DimensionMismatch { left: ensemble.dim(), right: pom.dim() });
    }
    let mut total = 0.0;
    for e in pom.elements() {
        match e.label() {
            OutcomeLabel::Inconclusive => {
                return Err(DiscrimError::BadLabels(
                    "average confidence requires a fully conclusive measurement",
                ))
            }
            OutcomeLabel::State(i) if i < ensemble.len() => {
                total += ensemble.prior(i) * real_trace_product(ensemble.state(i).matrix(), e.matrix());
            }
            OutcomeLabel::State(_) => return Err(DiscrimError::BadLabels("label outside state range")),
        }
    }
    Ok(total.clamp(0.0, 1.0))
}

/// Ceiling on every state's confidence from the steering side: no local
/// measurement may claim state j with confidence above <j|P|j>, where P is
/// the support projector of the correlation matrix
/// R_ij = sqrt(p_i p_j) <psi_j|psi_i>. Works entirely in index space; no
/// measurement operators appear.
pub fn no_signaling_confidence_oracle(states: &[PureState], priors: &[f64]) -> Result<Vec<f64>> {
    if states.is_empty() {
        return Err(DiscrimError::Empty("states"));
    }
    if states.len() != priors.len() {
        return Err(DiscrimError::LengthMismatch { left: states.len(), right: priors.len() });
    }
    let dim = states[0].dim();
    for s in states {
        if s.dim() != dim {
            return Err(DiscrimError::DimensionMismatch { left: dim, right: s.dim() });
        }
    }
    for &p in priors {
        if !(0.0..=1.0).contains(&p) || !p.is_finite() {
            return Err(DiscrimError::ProbabilityOutOfRange(p));
        }
    }
    let total: f64 = priors.iter().sum();
    if (total - 1.0).abs() > 1e-9 {
        return Err(DiscrimError::InvalidPriors(total));
    }
    let n = states.len();
    let r = CMat::from_fn(n, n, |i, j| {
        states[j].inner(&states[i]) * cxr((priors[i] * priors[j]).sqrt())
    });
    let p = support_projector_mat(&hermitize(&r), Tolerances::default().rank);
    Ok((0..n).map(|j| p[(j, j)].re.clamp(0.0, 1.0)).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ensembles::{trine_ensemble, trine_latitude_ensemble, two_pure_ensemble};
    use crate::validate::validate_pom;

    #[test]
    fn trine_confidence_is_two_thirds_with_complete_pom() {
        let ens = trine_ensemble().unwrap();
        let r = max_confidence_pom(&ens).unwrap();
        for i in 0..3 {
            assert!((r.confidences[i] - 2.0 / 3.0).abs() < 1e-12);
            assert!((confidence(&ens, &r.pom, i).unwrap() - 2.0 / 3.0).abs() < 1e-12);
            // The completion recovers the square root measurement exactly.
            let expected = ens.state(i).matrix() * cxr(2.0 / 3.0);
            assert!(max_abs(&(r.pom.element(i).matrix() - expected)) < 1e-9);
        }
        assert!(r.p_inconclusive < 1e-9);
        assert!(validate_pom(&r.pom, &Tolerances::default()).pass);
    }

    #[test]
    fn latitude_trine_keeps_two_thirds_at_any_latitude() {
        for deg in [10.0_f64, 25.0, 40.0] {
            let theta = deg.to_radians();
            let ens = trine_latitude_ensemble(theta).unwrap();
            let r = max_confidence_pom(&ens).unwrap();
            for i in 0..3 {
                assert!((r.confidences[i] - 2.0 / 3.0).abs() < 1e-10, "theta {deg}");
            }
            // Inconclusive element is (1 - tan^2 theta)|0><0|.
            let t2 = (theta.tan()).powi(2);
            let mut expected = CMat::zeros(2, 2);
            expected[(0, 0)] = cxr(1.0 - t2);
            assert!(max_abs(&(r.pom.element(3).matrix() - expected)) < 1e-9, "theta {deg}");
            assert!((r.p_inconclusive - (2.0 * theta).cos()).abs() < 1e-9);
        }
    }

    #[test]
    fn two_state_max_confidence_is_the_unambiguous_pom() {
        let theta = 0.5f64;
        let ens = two_pure_ensemble(theta, 0.5).unwrap();
        let mc = max_confidence_pom(&ens).unwrap();
        let un = crate::unambiguous::unamb_two_pure(theta, 0.5).unwrap();
        assert!((mc.confidences[0] - 1.0).abs() < 1e-10);
        assert!((mc.confidences[1] - 1.0).abs() < 1e-10);
        for i in 0..3 {
            assert!(max_abs(&(mc.pom.element(i).matrix() - un.pom.element(i).matrix())) < 1e-9);
        }
    }

    #[test]
    fn srm_average_confidence_trails_the_maximum_on_the_latitude_trine() {
        let theta = 20f64.to_radians();
        let ens = trine_latitude_ensemble(theta).unwrap();
        let srm = crate::min_error::square_root_measurement(&ens).unwrap();
        let avg = weighted_average_confidence(&ens, &srm.pom).unwrap();
        let expected = (1.0 + (2.0 * theta).sin()) / 3.0;
        assert!((avg - expected).abs() < 1e-12);
        assert!(avg < 2.0 / 3.0);
        // Per-outcome confidence of the symmetric measurement is the same
        // number, state by state.
        for i in 0..3 {
            assert!((confidence(&ens, &srm.pom, i).unwrap() - expected).abs() < 1e-12);
        }
    }

    #[test]
    fn confidence_rejects_inconclusive_and_dead_outcomes() {
        let ens = trine_ensemble().unwrap();
        let r = max_confidence_pom(&ens).unwrap();
        assert!(matches!(
            confidence(&ens, &r.pom, 3),
            Err(DiscrimError::BadLabels(_))
        ));
        let dead = Pom::new(vec![
            ProbabilityOperator::new(CMat::zeros(2, 2), OutcomeLabel::State(0)).unwrap(),
            ProbabilityOperator::new(CMat::identity(2, 2), OutcomeLabel::State(1)).unwrap(),
        ])
        .unwrap();
        assert!(matches!(
            confidence(&ens, &dead, 0),
            Err(DiscrimError::ZeroProbabilityOutcome(0))
        ));
    }

    #[test]
    fn no_signaling_matches_the_trine_family() {
        let states = crate::ensembles::trine_states();
        let bounds = no_signaling_confidence_oracle(&states, &[1.0 / 3.0; 3]).unwrap();
        for b in &bounds {
            assert!((b - 2.0 / 3.0).abs() < 1e-12);
        }
        for deg in [15.0_f64, 30.0, 44.0] {
            let states = crate::ensembles::trine_latitude_states(deg.to_radians()).unwrap();
            let bounds = no_signaling_confidence_oracle(&states, &[1.0 / 3.0; 3]).unwrap();
            for b in &bounds {
                assert!((b - 2.0 / 3.0).abs() < 1e-10, "deg {deg}");
            }
        }
        // Independent two-state sanity: full-rank correlation, bound 1.
        let (a, b) = crate::ensembles::two_pure_states(0.3).unwrap();
        let bounds = no_signaling_confidence_oracle(&[a, b], &[0.5, 0.5]).unwrap();
        assert!((bounds[0] - 1.0).abs() < 1e-12 && (bounds[1] - 1.0).abs() < 1e-12);
    }
}
