//! Stock ensembles: the canonical two-state family, the trine (equatorial
//! and lifted to a latitude), and the tetrad. These are the worked examples
//! the rest of the crate is tested against.

use num_complex::Complex64;

use crate::error::{DiscrimError, Result};
use crate::types::{cxr, PureState, StateEnsemble};

const FRAC_PI_4: f64 = std::f64::consts::FRAC_PI_4;

/// cos(theta)|0> +/- sin(theta)|1>. Any two pure states with a real overlap
/// are unitarily equivalent to this pair with cos(2 theta) = <psi0|psi1>.
pub fn two_pure_states(theta: f64) -> Result<(PureState, PureState)> {
    if !(0.0..=FRAC_PI_4 + 1e-12).contains(&theta) {
        return Err(DiscrimError::AngleOutOfRange(theta, "expected [0, pi/4]"));
    }
    let c = cxr(theta.cos());
    let s = cxr(theta.sin());
    Ok((PureState::qubit(c, s)?, PureState::qubit(c, -s)?))
}

pub fn two_pure_ensemble(theta: f64, p0: f64) -> Result<StateEnsemble> {
    let (a, b) = two_pure_states(theta)?;
    StateEnsemble::from_pure(&[a, b], &[p0, 1.0 - p0])
}

/// Three real qubit states at 120 degrees: (1, 0) and (-1/2, +/-sqrt(3)/2).
pub fn trine_states() -> Vec<PureState> {
    let h = 3f64.sqrt() / 2.0;
    vec![
        PureState::qubit(cxr(1.0), cxr(0.0)).expect("unit vector"),
        PureState::qubit(cxr(-0.5), cxr(h)).expect("unit vector"),
        PureState::qubit(cxr(-0.5), cxr(-h)).expect("unit vector"),
    ]
}

pub fn trine_ensemble() -> Result<StateEnsemble> {
    StateEnsemble::from_pure(&trine_states(), &[1.0 / 3.0; 3])
}

/// Trine lifted off the equator: cos(theta)|0> + e^{2 pi i k/3} sin(theta)|1>
/// for k = 0, 1, 2. Defined for theta in (0, pi/4]; at pi/4 the family
/// reaches the equatorial trine up to a basis rotation.
pub fn trine_latitude_states(theta: f64) -> Result<Vec<PureState>> {
    if !(theta > 0.0 && theta <= FRAC_PI_4 + 1e-12) {
        return Err(DiscrimError::AngleOutOfRange(theta, "expected (0, pi/4]"));
    }
    let c = cxr(theta.cos());
    let s = theta.sin();
    (0..3)
        .map(|k| {
            let phase = Complex64::from_polar(s, std::f64::consts::TAU * k as f64 / 3.0);
            PureState::qubit(c, phase)
        })
        .collect()
}

pub fn trine_latitude_ensemble(theta: f64) -> Result<StateEnsemble> {
    StateEnsemble::from_pure(&trine_latitude_states(theta)?, &[1.0 / 3.0; 3])
}

/// Four qubit states whose projectors sum to 2I (pairwise overlap 1/3):
/// (1, 0) and (-1, sqrt(2) w^k)/sqrt(3) for the three cube roots w^k of 1.
pub fn tetrad_states() -> Vec<PureState> {
    let a = cxr(-1.0 / 3f64.sqrt());
    let r = (2.0 / 3.0f64).sqrt();
    let mut out: Vec<PureState> = (0..3)
        .map(|k| {
            let b = Complex64::from_polar(r, std::f64::consts::TAU * k as f64 / 3.0);
            PureState::qubit(a, b).expect("unit vector")
        })
        .collect();
    out.push(PureState::qubit(cxr(1.0), cxr(0.0)).expect("unit vector"));
    out
}

pub fn tetrad_ensemble() -> Result<StateEnsemble> {
    StateEnsemble::from_pure(&tetrad_states(), &[0.25; 4])
}
