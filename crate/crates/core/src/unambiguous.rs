//! Unambiguous discrimination: conclusive outcomes never lie, all the cost
//! is pushed into an inconclusive result. Covers the two-state closed form
//! (both prior regimes), linearly independent N-state ensembles through
//! reciprocal states, feasibility for mixed pairs, and a no-signaling bound
//! used as an independent ceiling in tests.

use num_complex::Complex64;

use crate::eigen::{eigh, kernel_projector, min_eigenvalue};
use crate::error::{DiscrimError, Result};
use crate::search::{golden_max, max_feasible};
use crate::types::{
    cxr, max_abs, real_trace_product, CanonicalPair, CMat, CVec, DensityOperator, OutcomeLabel,
    Pom, ProbabilityOperator, PureState, StateEnsemble, Tolerances,
};

/// Which branch of the two-state solution applies.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PriorRegime {
    /// Both states are identified some of the time; the failure rate is
    /// 2 sqrt(p0 p1) |overlap|.
    Interior,
    /// One prior is heavy enough (p_favored |ov|^2 > p_other) that the best
    /// strategy only ever identifies the favored state, by projecting onto
    /// the complement of the other one.
    Skewed { favored: usize },
}

/// An unambiguous measurement with its failure probability, the conditional
/// success probability for each state, and (for the two-state closed forms)
/// the prior regime that produced it.
#[derive(Debug, Clone)]
pub struct UnambiguousResult {
    pub pom: Pom,
    pub p_inconclusive: f64,
    pub per_state_success: Vec<f64>,
    pub regime: Option<PriorRegime>,
}

fn check_prior(p0: f64) -> Result<()> {
    if !(0.0..=1.0).contains(&p0) || !p0.is_finite() {
        return Err(DiscrimError::InvalidPriors(p0));
    }
    Ok(())
}

fn check_theta(theta: f64) -> Result<()> {
    if !(theta > 0.0 && theta <= std::f64::consts::FRAC_PI_4 + 1e-12) {
        return Err(DiscrimError::AngleOutOfRange(theta, "expected (0, pi/4]"));
    }
    Ok(())
}

/// Optimal unambiguous measurement for the canonical pair
/// cos(theta)|0> +/- sin(theta)|1> with priors (p0, 1 - p0).
pub fn unamb_two_pure(theta: f64, p0: f64) -> Result<UnambiguousResult> {
    check_theta(theta)?;
    let (a, b) = crate::ensembles::two_pure_states(theta)?;
    unamb_two_pure_general(&a, &b, p0)
}

/// Optimal unambiguous measurement for an arbitrary pure pair. The pair is
/// rotated to canonical coordinates, solved there, and the solution embedded
/// back; everything outside the two-state span feeds the inconclusive
/// element. Identical states are rejected: nothing can distinguish them.
pub fn unamb_two_pure_general(psi0: &PureState, psi1: &PureState, p0: f64) -> Result<UnambiguousResult> {
    check_prior(p0)?;
    let pair = CanonicalPair::from_states(psi0, psi1)?;
    let theta = pair.theta;
    let p1 = 1.0 - p0;
    let s = (2.0 * theta).cos();
    let dim = psi0.dim();

    let (ct, st) = (theta.cos(), theta.sin());
    // Reciprocal rays in canonical coordinates: r0 is orthogonal to psi1,
    // r1 to psi0, and <psi_i|r_i> = sin(2 theta).
    let r0 = CVec::from_vec(vec![cxr(st), cxr(ct)]);
    let r1 = CVec::from_vec(vec![cxr(st), cxr(-ct)]);
    let sin2 = (2.0 * theta).sin();

    let skewed = if p0 * s * s > p1 {
        Some(0)
    } else if p1 * s * s > p0 {
        Some(1)
    } else {
        None
    };

    let (pi0_c, pi1_c, success, p_fail, regime) = match skewed {
        Some(favored) => {
            // Project onto the unfavored state's complement; the unfavored
            // state is never identified.
            let (win, proj) = if favored == 0 { (0, &r0) } else { (1, &r1) };
            let pi_win = proj * proj.adjoint();
            let zero = CMat::zeros(2, 2);
            let (pi0_c, pi1_c) = if win == 0 { (pi_win, zero) } else { (zero, pi_win) };
            let mut success = vec![0.0, 0.0];
            success[win] = sin2 * sin2;
            let (p_win, p_lose) = if win == 0 { (p0, p1) } else { (p1, p0) };
            let p_fail = p_win * s * s + p_lose;
            (pi0_c, pi1_c, success, p_fail, PriorRegime::Skewed { favored })
        }
        None => {
            // Failure probabilities f_i = s sqrt(p_j / p_i), multiplied out
            // so p_i = 0 with s = 0 cannot produce 0 * inf.
            let f0 = if s == 0.0 { 0.0 } else { s * (p1 / p0).sqrt() };
            let f1 = if s == 0.0 { 0.0 } else { s * (p0 / p1).sqrt() };
            let a0 = (1.0 - f0) / (sin2 * sin2);
            let a1 = (1.0 - f1) / (sin2 * sin2);
            let pi0_c = r0.clone() * r0.adjoint() * cxr(a0);
            let pi1_c = r1.clone() * r1.adjoint() * cxr(a1);
            let success = vec![1.0 - f0, 1.0 - f1];
            let p_fail = p0 * f0 + p1 * f1;
            (pi0_c, pi1_c, success, p_fail, PriorRegime::Interior)
        }
    };

    let pi0 = pair.embed(&pi0_c);
    let pi1 = pair.embed(&pi1_c);
    let pi_inc = CMat::identity(dim, dim) - &pi0 - &pi1;
    let pom = Pom::new(vec![
        ProbabilityOperator::new(pi0, OutcomeLabel::State(0))?,
        ProbabilityOperator::new(pi1, OutcomeLabel::State(1))?,
        ProbabilityOperator::new(pi_inc, OutcomeLabel::Inconclusive)?,
    ])?;
    Ok(UnambiguousResult {
        pom,
        p_inconclusive: p_fail.clamp(0.0, 1.0),
        per_state_success: success,
        regime: Some(regime),
    })
}

/// Gram matrix G_jk = <psi_j|psi_k>.
fn gram(states: &[PureState]) -> CMat {
    let n = states.len();
    CMat::from_fn(n, n, |j, k| states[j].inner(&states[k]))
}

/// Smallest Gram eigenvalue and whether it clears the rank tolerance
/// (relative to the largest). Linear independence is exactly what makes
/// unambiguous discrimination of every state possible.
pub fn linear_independence(states: &[PureState]) -> Result<(bool, f64)> {
    if states.is_empty() {
        return Err(DiscrimError::Empty("states"));
    }
    let dim = states[0].dim();
    for s in states {
        if s.dim() != dim {
            return Err(DiscrimError::DimensionMismatch { left: dim, right: s.dim() });
        }
    }
    let g = gram(states);
    let (values, _) = eigh(&g);
    let max = values[0].max(0.0);
    let min = *values.last().expect("nonempty spectrum");
    Ok((min > Tolerances::default().rank * max.max(1e-300), min))
}

/// Normalized reciprocal states: <psi_j|r_k> = 0 for j != k and
/// <psi_j|r_j> = 1/||G^{-1} column j|| real positive. Requires linear
/// independence.
pub fn reciprocal_states(states: &[PureState]) -> Result<Vec<PureState>> {
    let (independent, min_eig) = linear_independence(states)?;
    if !independent {
        return Err(DiscrimError::LinearlyDependent(min_eig));
    }
    let n = states.len();
    let g = gram(states);
    let (values, vectors) = eigh(&g);
    // G^{-1} through the spectral form; independence guarantees the
    // eigenvalues are safely positive.
    let mut g_inv = CMat::zeros(n, n);
    for (k, &lambda) in values.iter().enumerate() {
        let v = vectors.column(k);
        g_inv += v * v.adjoint() * cxr(1.0 / lambda);
    }
    let dim = states[0].dim();
    (0..n)
        .map(|j| {
            let mut tilde = CVec::zeros(dim);
            for k in 0..n {
                tilde += states[k].amplitudes() * g_inv[(k, j)];
            }
            let norm = tilde.norm();
            PureState::new(tilde / cxr(norm))
        })
        .collect()
}

fn detection_rays(states: &[PureState]) -> Result<Vec<(CVec, f64)>> {
    let recips = reciprocal_states(states)?;
    Ok(states
        .iter()
        .zip(&recips)
        .map(|(psi, r)| {
            let overlap2 = psi.inner(r).norm_sqr();
            (r.amplitudes().clone_owned(), overlap2)
        })
        .collect())
}

/// Unambiguous measurement for linearly independent pure states hitting the
/// requested conditional success probability for each state. Fails with the
/// offending eigenvalue when the combination is infeasible (the inconclusive
/// element would go negative).
pub fn unamb_n_pure(
    states: &[PureState],
    priors: &[f64],
    success: &[f64],
) -> Result<UnambiguousResult> {
    let ensemble = StateEnsemble::from_pure(states, priors)?;
    if success.len() != states.len() {
        return Err(DiscrimError::LengthMismatch { left: states.len(), right: success.len() });
    }
    for &p in success {
        if !(0.0..=1.0).contains(&p) || !p.is_finite() {
            return Err(DiscrimError::ProbabilityOutOfRange(p));
        }
    }
    let dim = ensemble.dim();
    let rays = detection_rays(states)?;
    let mut elements = Vec::with_capacity(states.len() + 1);
    let mut sum = CMat::zeros(dim, dim);
    for (j, (ray, overlap2)) in rays.iter().enumerate() {
        let m = ray * ray.adjoint() * cxr(success[j] / overlap2);
        sum += &m;
        elements.push(ProbabilityOperator::new(m, OutcomeLabel::State(j))?);
    }
    let pi_inc = CMat::identity(dim, dim) - sum;
    let lam = min_eigenvalue(&pi_inc);
    if lam < -Tolerances::default().positivity {
        return Err(DiscrimError::InfeasibleSuccess(lam));
    }
    elements.push(ProbabilityOperator::new(pi_inc, OutcomeLabel::Inconclusive)?);
    let p_inconclusive: f64 = priors
        .iter()
        .zip(success)
        .map(|(p, q)| p * (1.0 - q))
        .sum();
    Ok(UnambiguousResult {
        pom: Pom::new(elements)?,
        p_inconclusive: p_inconclusive.clamp(0.0, 1.0),
        per_state_success: success.to_vec(),
        regime: None,
    })
}

/// Largest success probability that all states can share simultaneously,
/// found by bisecting on feasibility of the inconclusive element. For two
/// canonical states this lands on 1 - cos(2 theta).
pub fn unamb_max_equal_success(states: &[PureState], priors: &[f64]) -> Result<UnambiguousResult> {
    let ensemble = StateEnsemble::from_pure(states, priors)?;
    let dim = ensemble.dim();
    let rays = detection_rays(states)?;
    let mut total = CMat::zeros(dim, dim);
    for (ray, overlap2) in &rays {
        total += ray * ray.adjoint() * cxr(1.0 / overlap2);
    }
    let eye = CMat::identity(dim, dim);
    let feasible = move |p: f64| min_eigenvalue(&(&eye - &total * cxr(p))) >= -1e-12;
    let p_star = max_feasible(&feasible, 1.0, 80);
    unamb_n_pure(states, priors, &vec![p_star; states.len()])
}

/// Which of two mixed states can ever be identified without error, with the
/// kernel projector of the opposing state as a witness element when it can.
#[derive(Debug, Clone)]
pub struct MixedFeasibility {
    pub state0_identifiable: bool,
    pub state1_identifiable: bool,
    pub candidate0: Option<ProbabilityOperator>,
    pub candidate1: Option<ProbabilityOperator>,
}

/// State i is unambiguously identifiable iff the other state's kernel sees
/// rho_i, i.e. K_j rho_i K_j != 0. A full-rank companion blocks everything.
pub fn mixed_unamb_feasibility(rho0: &DensityOperator, rho1: &DensityOperator) -> Result<MixedFeasibility> {
    if rho0.dim() != rho1.dim() {
        return Err(DiscrimError::DimensionMismatch { left: rho0.dim(), right: rho1.dim() });
    }
    let tol = Tolerances::default();
    let k0 = kernel_projector(rho0, &tol).into_matrix();
    let k1 = kernel_projector(rho1, &tol).into_matrix();
    let sees1 = max_abs(&(&k0 * rho1.matrix() * &k0)) > tol.positivity;
    let sees0 = max_abs(&(&k1 * rho0.matrix() * &k1)) > tol.positivity;
    let candidate0 = if sees0 {
        Some(ProbabilityOperator::new(k1, OutcomeLabel::State(0))?)
    } else {
        None
    };
    let candidate1 = if sees1 {
        Some(ProbabilityOperator::new(k0, OutcomeLabel::State(1))?)
    } else {
        None
    };
    Ok(MixedFeasibility {
        state0_identifiable: sees0,
        state1_identifiable: sees1,
        candidate0,
        candidate1,
    })
}

/// Failure probability for unambiguously telling a coherent state from its
/// phase flip at equal priors: the overlap |<alpha|-alpha>| = e^{-2|alpha|^2}.
/// No truncation enters; this is what makes the comparison against a
/// Fock-space comparator in the tests meaningful.
pub fn coherent_overlap_demo(alpha: Complex64) -> f64 {
    (-2.0 * alpha.norm_sqr()).exp()
}

/// Lower bound on the unambiguous failure probability from no-signaling
/// alone: maximize the conclusive mass q0 + q1 subject to
/// (p0 - q0)(p1 - q1) >= p0 p1 cos^2(2 theta) and 0 <= q_i <= p_i, with no
/// reference to measurement operators. Grid over q0 plus a golden-section
/// polish.
pub fn no_signaling_unamb_oracle(theta: f64, p0: f64, grid: usize) -> Result<f64> {
    check_theta(theta)?;
    check_prior(p0)?;
    if grid < 2 {
        return Err(DiscrimError::Empty("grid"));
    }
    let p1 = 1.0 - p0;
    let c = (p0 * p1).sqrt() * (2.0 * theta).cos();
    if c <= 0.0 {
        // Orthogonal states or a one-sided prior: everything conclusive.
        return Ok(0.0);
    }
    let c2 = c * c;
    // q1 >= 0 forces q0 <= p0 - c^2/p1; beyond that nothing is feasible.
    let hi = (p0 - c2 / p1).max(0.0);
    let total = move |q0: f64| q0 + p1 - c2 / (p0 - q0);
    if hi == 0.0 {
        return Ok((1.0 - total(0.0).max(0.0)).clamp(0.0, 1.0));
    }
    let mut best_q = 0.0;
    let mut best = f64::NEG_INFINITY;
    for k in 0..grid {
        let q0 = hi * k as f64 / (grid - 1) as f64;
        let v = total(q0);
        if v > best {
            best = v;
            best_q = q0;
        }
    }
    let step = hi / (grid - 1) as f64;
    let (_, refined) = golden_max(&total, (best_q - step).max(0.0), (best_q + step).min(hi), 200);
    Ok((1.0 - refined.max(best).max(0.0)).clamp(0.0, 1.0))
}

/// Largest probability of any conclusive element firing on a state it does
/// not name. Zero (to numerical noise) is the defining property of an
/// unambiguous measurement.
pub fn zero_error_residual(ensemble: &StateEnsemble, pom: &Pom) -> Result<f64> {
    if ensemble.dim() != pom.dim() {
        return Err(DiscrimError::DimensionMismatch { left: ensemble.dim(), right: pom.dim() });
    }
    let mut worst = 0.0_f64;
    for e in pom.elements() {
        match e.label() {
            OutcomeLabel::Inconclusive => {}
            OutcomeLabel::State(i) if i < ensemble.len() => {
                for j in 0..ensemble.len() {
                    if j != i {
                        worst = worst
                            .max(real_trace_product(ensemble.state(j).matrix(), e.matrix()).abs());
                    }
                }
            }
            OutcomeLabel::State(_) => return Err(DiscrimError::BadLabels("label outside state range")),
        }
    }
    Ok(worst)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::validate::validate_pom;

    #[test]
    fn equal_priors_failure_is_the_overlap() {
        let theta = 30f64.to_radians();
        let r = unamb_two_pure(theta, 0.5).unwrap();
        let s = (2.0 * theta).cos();
        assert_eq!(r.regime, Some(PriorRegime::Interior));
        assert!((r.p_inconclusive - s).abs() < 1e-12);
        assert!((r.per_state_success[0] - (1.0 - s)).abs() < 1e-12);
        assert!(validate_pom(&r.pom, &Tolerances::default()).pass);
    }

    #[test]
    fn interior_matches_formula_for_uneven_priors() {
        let theta = 20f64.to_radians();
        let p0 = 0.45;
        let s = (2.0 * theta).cos();
        let r = unamb_two_pure(theta, p0).unwrap();
        assert_eq!(r.regime, Some(PriorRegime::Interior));
        let expected = 2.0 * (p0 * (1.0 - p0)).sqrt() * s;
        assert!((r.p_inconclusive - expected).abs() < 1e-12);
        let ens = crate::ensembles::two_pure_ensemble(theta, p0).unwrap();
        assert!(zero_error_residual(&ens, &r.pom).unwrap() < 1e-12);
    }

    #[test]
    fn skewed_priors_project_out_the_weak_state() {
        let theta = 20f64.to_radians();
        let s = (2.0 * theta).cos();
        let r = unamb_two_pure(theta, 0.9).unwrap();
        assert_eq!(r.regime, Some(PriorRegime::Skewed { favored: 0 }));
        assert!((r.p_inconclusive - (0.9 * s * s + 0.1)).abs() < 1e-12);
        assert_eq!(r.per_state_success[1], 0.0);
        // pi_1 is the zero element; the POM is still complete.
        assert!(max_abs(r.pom.element(1).matrix()) < 1e-15);
        assert!(validate_pom(&r.pom, &Tolerances::default()).pass);
    }

    #[test]
    fn regimes_agree_at_the_boundary() {
        let theta = 25f64.to_radians();
        let s = (2.0 * theta).cos();
        let p_star = 1.0 / (1.0 + s * s);
        let below = unamb_two_pure(theta, p_star - 1e-9).unwrap();
        let above = unamb_two_pure(theta, p_star + 1e-9).unwrap();
        assert_ne!(below.regime, above.regime);
        assert!((below.p_inconclusive - above.p_inconclusive).abs() < 1e-8);
    }

    #[test]
    fn orthogonal_states_never_fail() {
        let r = unamb_two_pure(std::f64::consts::FRAC_PI_4, 0.5).unwrap();
        assert!(r.p_inconclusive < 1e-12);
        assert!((r.per_state_success[0] - 1.0).abs() < 1e-12);
    }

    #[test]
    fn theta_domain_is_enforced() {
        assert!(matches!(unamb_two_pure(0.0, 0.5), Err(DiscrimError::AngleOutOfRange(..))));
        assert!(matches!(unamb_two_pure(1.0, 0.5), Err(DiscrimError::AngleOutOfRange(..))));
    }

    #[test]
    fn general_pair_embedded_in_dim_three() {
        // Same canonical pair expressed in a rotated 3-dimensional frame.
        let theta = 0.4f64;
        let (c, s) = (theta.cos(), theta.sin());
        let e0 = CVec::from_vec(vec![cxr(1.0 / 2f64.sqrt()), cxr(1.0 / 2f64.sqrt()), cxr(0.0)]);
        let e1 = CVec::from_vec(vec![cxr(0.0), cxr(0.0), cxr(1.0)]);
        let psi0 = PureState::new(&e0 * cxr(c) + &e1 * cxr(s)).unwrap();
        let psi1 = PureState::new(&e0 * cxr(c) - &e1 * cxr(s)).unwrap();
        let r = unamb_two_pure_general(&psi0, &psi1, 0.5).unwrap();
        let flat = unamb_two_pure(theta, 0.5).unwrap();
        assert!((r.p_inconclusive - flat.p_inconclusive).abs() < 1e-12);
        let ens = StateEnsemble::from_pure(&[psi0, psi1], &[0.5, 0.5]).unwrap();
        assert!(zero_error_residual(&ens, &r.pom).unwrap() < 1e-12);
        assert!(validate_pom(&r.pom, &Tolerances::default()).pass);
    }

    fn independent_triple() -> Vec<PureState> {
        let a = 0.7f64;
        let b = 0.5f64;
        vec![
            PureState::basis_state(3, 0),
            PureState::from_slice(&[cxr(a.cos()), cxr(a.sin()), cxr(0.0)]).unwrap(),
            PureState::from_slice(&[cxr(b.cos()), cxr(0.0), cxr(b.sin())]).unwrap(),
        ]
    }

    #[test]
    fn reciprocals_are_biorthogonal() {
        let states = independent_triple();
        let recips = reciprocal_states(&states).unwrap();
        for (j, psi) in states.iter().enumerate() {
            for (k, r) in recips.iter().enumerate() {
                let ov = psi.inner(r);
                if j == k {
                    assert!(ov.re > 0.0 && ov.im.abs() < 1e-12);
                } else {
                    assert!(ov.norm() < 1e-12);
                }
            }
        }
    }

    #[test]
    fn dependent_states_are_rejected() {
        let states = crate::ensembles::trine_states();
        let (ok, _) = linear_independence(&states).unwrap();
        assert!(!ok);
        assert!(matches!(
            reciprocal_states(&states),
            Err(DiscrimError::LinearlyDependent(_))
        ));
    }

    #[test]
    fn n_state_measurement_hits_requested_success() {
        let states = independent_triple();
        let priors = [0.3, 0.3, 0.4];
        // Requesting a quarter of each reciprocal overlap keeps the total
        // detection operator strictly below the identity, so the request is
        // feasible no matter how skewed the triple is.
        let recips = reciprocal_states(&states).unwrap();
        let success: Vec<f64> = states
            .iter()
            .zip(&recips)
            .map(|(s, r)| 0.25 * s.inner(r).norm_sqr())
            .collect();
        let r = unamb_n_pure(&states, &priors, &success).unwrap();
        let ens = StateEnsemble::from_pure(&states, &priors).unwrap();
        for (j, &q) in success.iter().enumerate() {
            let got = real_trace_product(ens.state(j).matrix(), r.pom.element(j).matrix());
            assert!((got - q).abs() < 1e-10);
        }
        assert!(zero_error_residual(&ens, &r.pom).unwrap() < 1e-10);
        assert!(validate_pom(&r.pom, &Tolerances::default()).pass);
        assert!(matches!(
            unamb_n_pure(&states, &priors, &[0.99, 0.99, 0.99]),
            Err(DiscrimError::InfeasibleSuccess(_))
        ));
    }

    #[test]
    fn equal_success_bisection_matches_two_state_closed_form() {
        let theta = 0.35f64;
        let (a, b) = crate::ensembles::two_pure_states(theta).unwrap();
        let r = unamb_max_equal_success(&[a, b], &[0.5, 0.5]).unwrap();
        let expected = 1.0 - (2.0 * theta).cos();
        assert!((r.per_state_success[0] - expected).abs() < 1e-8);
        assert!((r.p_inconclusive - (2.0 * theta).cos()).abs() < 1e-8);
    }

    #[test]
    fn mixed_feasibility_follows_the_kernels() {
        let mk = |d: &[f64]| {
            let v: Vec<Complex64> = d.iter().map(|&x| cxr(x)).collect();
            DensityOperator::new(CMat::from_diagonal(&CVec::from_vec(v))).unwrap()
        };
        let rho0 = mk(&[0.5, 0.5, 0.0]);
        let rho1 = mk(&[0.0, 0.5, 0.5]);
        let f = mixed_unamb_feasibility(&rho0, &rho1).unwrap();
        assert!(f.state0_identifiable && f.state1_identifiable);
        let c1 = f.candidate1.unwrap();
        assert!(real_trace_product(rho0.matrix(), c1.matrix()).abs() < 1e-12);
        assert!(real_trace_product(rho1.matrix(), c1.matrix()) > 0.1);

        let full = mk(&[0.5, 0.5]);
        let g = mixed_unamb_feasibility(&full, &full.clone()).unwrap();
        assert!(!g.state0_identifiable && !g.state1_identifiable);
        assert!(g.candidate0.is_none() && g.candidate1.is_none());
    }

    #[test]
    fn coherent_demo_matches_general_overlap() {
        for &(re, im) in &[(0.5, 0.0), (0.8, 0.3), (1.2, -0.7)] {
            let alpha = Complex64::new(re, im);
            let beta = -alpha;
            // Independent comparator: |<alpha|beta>| from the full overlap
            // formula exp(-(|a|^2+|b|^2)/2 + conj(a) b).
            let ov = (-(alpha.norm_sqr() + beta.norm_sqr()) / 2.0
                + (alpha.conj() * beta).re)
                .exp();
            assert!((coherent_overlap_demo(alpha) - ov).abs() < 1e-15);
        }
    }

    #[test]
    fn no_signaling_bound_equals_closed_form() {
        for &(deg, p0) in &[(30f64, 0.5), (20f64, 0.45), (20f64, 0.9), (10f64, 0.2)] {
            let theta = deg.to_radians();
            let bound = no_signaling_unamb_oracle(theta, p0, 4001).unwrap();
            let exact = unamb_two_pure(theta, p0).unwrap().p_inconclusive;
            assert!(
                (bound - exact).abs() < 1e-6,
                "theta {deg} p0 {p0}: bound {bound} vs exact {exact}"
            );
        }
    }
}
