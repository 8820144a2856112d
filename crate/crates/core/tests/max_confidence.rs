//! Maximum-confidence measurements against their two known anchors: for
//! linearly independent states the strategy collapses onto unambiguous
//! discrimination, and for the symmetric qubit trines the ceiling is 2/3
//! regardless of latitude while minimum error stays strictly below it.

use discrimkit::ensembles::{trine_latitude_ensemble, two_pure_ensemble};
use discrimkit::max_confidence::{
    confidence, max_confidence_pom, max_confidence_value, weighted_average_confidence,
};
use discrimkit::min_error::square_root_measurement;
use discrimkit::types::max_abs;
use discrimkit::unambiguous::unamb_two_pure;
use discrimkit::validate::validate_pom;
use discrimkit::Tolerances;

#[test]
fn two_state_maximum_confidence_is_unambiguous_discrimination() {
    let theta = 0.5_f64;
    let ens = two_pure_ensemble(theta, 0.5).unwrap();
    let mc = max_confidence_pom(&ens).unwrap();
    let ua = unamb_two_pure(theta, 0.5).unwrap();

    assert_eq!(mc.pom.len(), ua.pom.len());
    for k in 0..mc.pom.len() {
        assert_eq!(mc.pom.element(k).label(), ua.pom.element(k).label());
        let diff = max_abs(&(mc.pom.element(k).matrix() - ua.pom.element(k).matrix()));
        assert!(diff < 1e-9, "element {k} differs by {diff}");
    }
    for i in 0..2 {
        assert!((mc.confidences[i] - 1.0).abs() < 1e-10);
        assert!((confidence(&ens, &mc.pom, i).unwrap() - 1.0).abs() < 1e-9);
    }
    assert!((mc.p_inconclusive - ua.p_inconclusive).abs() < 1e-9);
}

#[test]
fn latitude_sweep_keeps_the_ceiling_while_min_error_trails() {
    for deg in [5.0_f64, 15.0, 25.0, 35.0, 44.0] {
        let theta = deg.to_radians();
        let ens = trine_latitude_ensemble(theta).unwrap();
        let mc = max_confidence_pom(&ens).unwrap();
        assert!(validate_pom(&mc.pom, &Tolerances::default()).pass, "theta {deg}");

        let srm = square_root_measurement(&ens).unwrap();
        let avg = weighted_average_confidence(&ens, &srm.pom).unwrap();
        let expected = (1.0 + (2.0 * theta).sin()) / 3.0;
        assert!((avg - expected).abs() < 1e-10, "theta {deg}");

        for i in 0..3 {
            let ceiling = max_confidence_value(&ens, i).unwrap();
            assert!((ceiling - 2.0 / 3.0).abs() < 1e-10);
            // The minimum-error measurement gives up exactly (1 - sin 2t)/3
            // of confidence for never being inconclusive; the gap closes
            // only at the equator.
            let shortfall = (1.0 - (2.0 * theta).sin()) / 3.0;
            assert!((ceiling - avg - shortfall).abs() < 1e-10, "theta {deg}");
            assert!(avg < ceiling, "theta {deg}");
            let c = confidence(&ens, &srm.pom, i).unwrap();
            assert!(c <= ceiling + 1e-10, "theta {deg}, outcome {i}");
        }

        // Unconditional outcome probabilities account for everything.
        let total: f64 = mc.p_outcome.iter().sum::<f64>() + mc.p_inconclusive;
        assert!((total - 1.0).abs() < 1e-9);
    }
}

#[test]
fn conclusive_probability_decomposes_by_confidence() {
    // P(correct via conclusive outcomes) = sum_k P(outcome k) c_k for the
    // maximum-confidence measurement; check the identity numerically.
    let theta = 20.0_f64.to_radians();
    let ens = trine_latitude_ensemble(theta).unwrap();
    let mc = max_confidence_pom(&ens).unwrap();

    let mut p_correct = 0.0;
    for i in 0..3 {
        p_correct += ens.prior(i)
            * discrimkit::validate::born_probability(ens.state(i), mc.pom.element(i)).unwrap();
    }
    let via_confidence: f64 =
        (0..3).map(|k| mc.p_outcome[k] * confidence(&ens, &mc.pom, k).unwrap()).sum();
    assert!((p_correct - via_confidence).abs() < 1e-10);
}

#[test]
fn dependent_trine_defeats_unambiguous_but_not_confidence() {
    // The flat trine is linearly dependent, so reciprocal construction must
    // fail while max confidence still yields 2/3 per outcome.
    let states = discrimkit::ensembles::trine_states();
    assert!(discrimkit::unambiguous::reciprocal_states(&states).is_err());

    let ens = discrimkit::ensembles::trine_ensemble().unwrap();
    let mc = max_confidence_pom(&ens).unwrap();
    for i in 0..3 {
        assert!((mc.confidences[i] - 2.0 / 3.0).abs() < 1e-10);
    }
    assert!(mc.p_inconclusive < 1e-9);
}
