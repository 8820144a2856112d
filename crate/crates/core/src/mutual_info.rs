//! Mutual information between the preparation label and the measurement
//! record, in bits. Includes the exclusion measurement for the symmetric
//! qubit families (where it beats every von Neumann measurement), a grid
//! search over projective qubit measurements, and a stochastic search for
//! the accessible information.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::eigen::{eigh, max_eigenvalue, min_eigenvalue, support_inv_sqrt_mat};
use crate::error::{DiscrimError, Result};
use crate::search::golden_max;
use crate::types::{
    cx, cxr, hermitize, max_abs, CMat, CVec, OutcomeLabel, Pom, ProbabilityOperator, StateEnsemble,
};
use crate::validate::born_raw;

/// Joint distribution over (prepared state, observed outcome).
#[derive(Debug, Clone)]
pub struct JointDistribution {
    probabilities: Vec<Vec<f64>>,
}

impl JointDistribution {
    /// Rows are states, columns outcomes. Entries must be nonnegative and
    /// sum to one within a loose window; Born-rule rounding is the only
    /// slack this is meant to absorb.
    pub fn new(probabilities: Vec<Vec<f64>>) -> Result<Self> {
        let first = probabilities.first().ok_or(DiscrimError::Empty("joint distribution"))?;
        let cols = first.len();
        if cols == 0 {
            return Err(DiscrimError::Empty("joint distribution row"));
        }
        let mut total = 0.0;
        for row in &probabilities {
            if row.len() != cols {
                return Err(DiscrimError::LengthMismatch { left: cols, right: row.len() });
            }
            for &p in row {
                if !(p >= 0.0) || !p.is_finite() {
                    return Err(DiscrimError::ProbabilityOutOfRange(p));
                }
                total += p;
            }
        }
        if (total - 1.0).abs() > 1e-6 {
            return Err(DiscrimError::InvalidPriors(total));
        }
        Ok(Self { probabilities })
    }

    pub fn from_measurement(ensemble: &StateEnsemble, pom: &Pom) -> Result<Self> {
        if ensemble.dim() != pom.dim() {
            return Err(DiscrimError::DimensionMismatch { left: ensemble.dim(), right: pom.dim() });
        }
        let rows = (0..ensemble.len())
            .map(|i| {
                pom.elements()
                    .iter()
                    .map(|e| ensemble.prior(i) * born_raw(ensemble.state(i).matrix(), e.matrix()))
                    .collect()
            })
            .collect();
        Self::new(rows)
    }

    pub fn probabilities(&self) -> &[Vec<f64>] {
        &self.probabilities
    }

    /// I(X;K) in bits, with 0 log 0 = 0.
    pub fn mutual_information(&self) -> f64 {
        let rows = self.probabilities.len();
        let cols = self.probabilities[0].len();
        let mut px = vec![0.0; rows];
        let mut qk = vec![0.0; cols];
        for (i, row) in self.probabilities.iter().enumerate() {
            for (k, &p) in row.iter().enumerate() {
                px[i] += p;
                qk[k] += p;
            }
        }
        let mut bits = 0.0;
        for (i, row) in self.probabilities.iter().enumerate() {
            for (k, &p) in row.iter().enumerate() {
                if p > 0.0 {
                    bits += p * (p / (px[i] * qk[k])).log2();
                }
            }
        }
        bits.max(0.0)
    }
}

/// Convenience wrapper: joint distribution of measuring the ensemble, then
/// its mutual information.
pub fn mutual_information(ensemble: &StateEnsemble, pom: &Pom) -> Result<f64> {
    Ok(JointDistribution::from_measurement(ensemble, pom)?.mutual_information())
}

fn pure_vector(state: &crate::types::DensityOperator) -> Option<CVec> {
    let (values, vectors) = eigh(state.matrix());
    if values[0] >= 1.0 - 1e-9 {
        Some(vectors.column(0).clone_owned())
    } else {
        None
    }
}

/// Exclusion measurement for the symmetric qubit families: outcome k is
/// proportional to the projector orthogonal to state k, so it names the one
/// state that was certainly NOT prepared. Only defined for equiprobable
/// pure qubit triples or quadruples averaging to I/2 with uniform pairwise
/// overlap (|<psi_j|psi_k>|^2 = 1/4 or 1/3); anything else is rejected.
pub fn elimination_measurement(ensemble: &StateEnsemble) -> Result<Pom> {
    let n = ensemble.len();
    if ensemble.dim() != 2 {
        return Err(DiscrimError::UnsupportedEnsemble("exclusion needs qubit states"));
    }
    if n != 3 && n != 4 {
        return Err(DiscrimError::UnsupportedEnsemble("exclusion needs 3 or 4 states"));
    }
    for &p in ensemble.priors() {
        if (p - 1.0 / n as f64).abs() > 1e-9 {
            return Err(DiscrimError::UnsupportedEnsemble("exclusion needs equal priors"));
        }
    }
    let avg = ensemble.average();
    if max_abs(&(avg - CMat::identity(2, 2) * cxr(0.5))) > 1e-9 {
        return Err(DiscrimError::UnsupportedEnsemble("exclusion needs average I/2"));
    }
    let mut vectors = Vec::with_capacity(n);
    for i in 0..n {
        match pure_vector(ensemble.state(i)) {
            Some(v) => vectors.push(v),
            None => return Err(DiscrimError::UnsupportedEnsemble("exclusion needs pure states")),
        }
    }
    let target = if n == 3 { 0.25 } else { 1.0 / 3.0 };
    for j in 0..n {
        for k in 0..n {
            if j != k {
                let ov2 = vectors[j].dotc(&vectors[k]).norm_sqr();
                if (ov2 - target).abs() > 1e-9 {
                    return Err(DiscrimError::UnsupportedEnsemble(
                        "exclusion needs uniform pairwise overlap",
                    ));
                }
            }
        }
    }
    let scale = cxr(2.0 / n as f64);
    let elements = vectors
        .iter()
        .enumerate()
        .map(|(k, v)| {
            // (a, b) -> (-conj b, conj a) is orthogonal in C^2.
            let perp = CVec::from_vec(vec![-v[1].conj(), v[0].conj()]);
            ProbabilityOperator::new((&perp * perp.adjoint()) * scale, OutcomeLabel::State(k))
        })
        .collect::<Result<Vec<_>>>()?;
    Pom::new(elements)
}

/// p(+|i) table for a projective measurement along the Bloch direction
/// (polar, azimuth), computed from Bloch components so the grid loop never
/// touches matrices.
fn bloch_components(state: &CMat) -> (f64, f64, f64) {
    let x = 2.0 * state[(1, 0)].re;
    let y = 2.0 * state[(1, 0)].im;
    let z = (state[(0, 0)] - state[(1, 1)]).re;
    (x, y, z)
}

fn mi_two_outcome(priors: &[f64], plus: &[f64]) -> f64 {
    let mut q = 0.0;
    for (p, c) in priors.iter().zip(plus) {
        q += p * c;
    }
    let mut bits = 0.0;
    for (p, c) in priors.iter().zip(plus) {
        for (joint, marg) in [(p * c, q), (p * (1.0 - c), 1.0 - q)] {
            if joint > 0.0 && marg > 0.0 {
                bits += joint * (joint / (p * marg)).log2();
            }
        }
    }
    bits.max(0.0)
}

/// Best two-outcome projective qubit measurement found on a Bloch-angle
/// grid of the given resolution (degrees), polished with golden-section
/// passes on each angle.
#[derive(Debug, Clone)]
pub struct ProjectiveQubitResult {
    pub pom: Pom,
    pub bits: f64,
    pub polar: f64,
    pub azimuth: f64,
}

pub fn best_projective_qubit(ensemble: &StateEnsemble, resolution_deg: f64) -> Result<ProjectiveQubitResult> {
    if ensemble.dim() != 2 {
        return Err(DiscrimError::UnsupportedEnsemble("projective sweep needs qubit states"));
    }
    if !(resolution_deg > 0.0) {
        return Err(DiscrimError::InvalidTolerance(resolution_deg));
    }
    let blochs: Vec<(f64, f64, f64)> =
        ensemble.states().iter().map(|s| bloch_components(s.matrix())).collect();
    let priors = ensemble.priors().to_vec();
    let eval = |polar: f64, azimuth: f64| -> f64 {
        let n = (
            polar.sin() * azimuth.cos(),
            polar.sin() * azimuth.sin(),
            polar.cos(),
        );
        let plus: Vec<f64> = blochs
            .iter()
            .map(|r| (0.5 * (1.0 + n.0 * r.0 + n.1 * r.1 + n.2 * r.2)).clamp(0.0, 1.0))
            .collect();
        mi_two_outcome(&priors, &plus)
    };

    let res = resolution_deg.to_radians();
    let n_polar = (std::f64::consts::PI / res).ceil() as usize + 1;
    let n_azimuth = (std::f64::consts::TAU / res).ceil() as usize;
    let mut best = (0.0f64, 0.0f64, f64::NEG_INFINITY);
    for a in 0..n_polar {
        let polar = (a as f64 * res).min(std::f64::consts::PI);
        for b in 0..n_azimuth {
            let azimuth = b as f64 * res;
            let bits = eval(polar, azimuth);
            if bits > best.2 {
                best = (polar, azimuth, bits);
            }
        }
    }
    let (mut polar, mut azimuth, mut bits) = best;
    for _ in 0..4 {
        let f_polar = |t: f64| eval(t.clamp(0.0, std::f64::consts::PI), azimuth);
        let (t, _) = golden_max(&f_polar, polar - res, polar + res, 120);
        polar = t.clamp(0.0, std::f64::consts::PI);
        let f_azimuth = |t: f64| eval(polar, t);
        let (u, v) = golden_max(&f_azimuth, azimuth - res, azimuth + res, 120);
        azimuth = u;
        bits = v;
    }

    let n = (
        polar.sin() * azimuth.cos(),
        polar.sin() * azimuth.sin(),
        polar.cos(),
    );
    let half = cxr(0.5);
    let sigma_n = CMat::from_row_slice(2, 2, &[
        cxr(n.2),
        cx(n.0, -n.1),
        cx(n.0, n.1),
        cxr(-n.2),
    ]);
    let plus = (CMat::identity(2, 2) + &sigma_n) * half;
    let minus = (CMat::identity(2, 2) - &sigma_n) * half;
    let pom = Pom::new(vec![
        ProbabilityOperator::new(plus, OutcomeLabel::State(0))?,
        ProbabilityOperator::new(minus, OutcomeLabel::State(1))?,
    ])?;
    Ok(ProjectiveQubitResult { pom, bits, polar, azimuth })
}

/// Result of the accessible-information search. `budget_exhausted` is set
/// when some restart stopped on the iteration cap instead of the step-size
/// floor, i.e. the returned value is a lower bound that was still moving.
#[derive(Debug, Clone)]
pub struct AccessibleInfoResult {
    pub pom: Pom,
    pub bits: f64,
    pub budget_exhausted: bool,
}

struct VectorPom {
    vectors: Vec<CVec>,
}

impl VectorPom {
    /// Map the raw outcome vectors a_j into a complete rank-1 POM:
    /// pi_j = M^{-1/2} a_j a_j^dag M^{-1/2} with M = sum_j a_j a_j^dag.
    /// Returns None when M is too close to singular to trust.
    fn realize(&self, dim: usize) -> Option<Vec<CMat>> {
        let mut m = CMat::zeros(dim, dim);
        for a in &self.vectors {
            m += a * a.adjoint();
        }
        let m = hermitize(&m);
        if min_eigenvalue(&m) < 1e-10 * max_eigenvalue(&m).max(1e-300) {
            return None;
        }
        let s = support_inv_sqrt_mat(&m, 1e-12);
        Some(self.vectors.iter().map(|a| hermitize(&(&s * (a * a.adjoint()) * &s))).collect())
    }
}

fn mi_of_mats(ensemble: &StateEnsemble, mats: &[CMat]) -> f64 {
    let rows: Vec<Vec<f64>> = (0..ensemble.len())
        .map(|i| {
            mats.iter()
                .map(|m| ensemble.prior(i) * born_raw(ensemble.state(i).matrix(), m))
                .collect()
        })
        .collect();
    JointDistribution { probabilities: rows }.mutual_information()
}

/// Stochastic climb over complete rank-1 measurements with `n_outcomes`
/// outcomes. Restart 0 on a qubit starts from the best projective
/// measurement, so the result can only improve on it; later restarts start
/// from independent random measurements on their own RNG streams.
pub fn accessible_info_search(
    ensemble: &StateEnsemble,
    n_outcomes: usize,
    restarts: usize,
    seed: u64,
) -> Result<AccessibleInfoResult> {
    let dim = ensemble.dim();
    if n_outcomes < dim {
        return Err(DiscrimError::UnsupportedEnsemble(
            "rank-1 completeness needs at least dim outcomes",
        ));
    }
    if restarts == 0 {
        return Err(DiscrimError::Empty("restarts"));
    }
    const MAX_ITERS: usize = 2500;
    const STEP_FLOOR: f64 = 1e-7;
    let mut best_mats: Option<Vec<CMat>> = None;
    let mut best_bits = f64::NEG_INFINITY;
    let mut budget_exhausted = false;

    for restart in 0..restarts {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        rng.set_stream(restart as u64);
        let mut cand = VectorPom {
            vectors: (0..n_outcomes)
                .map(|_| {
                    CVec::from_fn(dim, |_, _| {
                        cx(crate::random::standard_normal(&mut rng), crate::random::standard_normal(&mut rng))
                    }) * cxr(0.5)
                })
                .collect(),
        };
        if restart == 0 && dim == 2 {
            // Seed the first climb at the projective optimum; its two
            // elements are rank-1 projectors, so their principal vectors
            // reproduce it exactly under the completeness map.
            let proj = best_projective_qubit(ensemble, 1.0)?;
            for (k, e) in proj.pom.elements().iter().enumerate() {
                let (values, vectors) = eigh(e.matrix());
                cand.vectors[k] = vectors.column(0) * cxr(values[0].max(0.0).sqrt());
            }
            for v in cand.vectors.iter_mut().skip(2) {
                *v *= cxr(1e-3);
            }
        }

        let mut mats = match cand.realize(dim) {
            Some(m) => m,
            None => continue,
        };
        let mut bits = mi_of_mats(ensemble, &mats);
        let mut step = 0.2;
        let mut iters = 0;
        while step >= STEP_FLOOR && iters < MAX_ITERS {
            iters += 1;
            let j = rng.gen_range(0..n_outcomes);
            let bump = CVec::from_fn(dim, |_, _| {
                cx(crate::random::standard_normal(&mut rng), crate::random::standard_normal(&mut rng))
            }) * cxr(step);
            let saved = cand.vectors[j].clone();
            cand.vectors[j] += bump;
            match cand.realize(dim) {
                Some(m) => {
                    let b = mi_of_mats(ensemble, &m);
                    if b > bits {
                        bits = b;
                        mats = m;
                    } else {
                        cand.vectors[j] = saved;
                        step *= 0.99;
                    }
                }
                None => {
                    cand.vectors[j] = saved;
                    step *= 0.99;
                }
            }
        }
        if iters >= MAX_ITERS && step >= STEP_FLOOR {
            budget_exhausted = true;
        }
        if bits > best_bits {
            best_bits = bits;
            best_mats = Some(mats);
        }
    }

    let mats = best_mats.ok_or(DiscrimError::Empty("no usable restart"))?;
    // Outcome labels are positional; an information-optimal record is not a
    // guess about any particular state.
    let elements = mats
        .into_iter()
        .enumerate()
        .map(|(k, m)| ProbabilityOperator::new(m, OutcomeLabel::State(k)))
        .collect::<Result<Vec<_>>>()?;
    Ok(AccessibleInfoResult {
        pom: Pom::new(elements)?,
        bits: best_bits,
        budget_exhausted,
    })
}
