//! Monte Carlo side of the crate: draw preparation/outcome records from an
//! ensemble and a validated measurement, reduce them to empirical figures,
//! and expand rank-1 measurements into the multiport (path encoding) picture
//! where each outcome is one exit path of an isometry.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::eigen::eigh;
use crate::error::{DiscrimError, Result};
use crate::mutual_info::JointDistribution;
use crate::types::{cxr, CMat, OutcomeLabel, Pom, PureState, StateEnsemble, Tolerances};
use crate::validate::{born_raw, validate_pom};

/// Joint samples of one simulation run: counts[i][k] is how many trials
/// prepared state i and observed outcome k. The seed is carried along so a
/// record is reproducible from its own metadata.
#[derive(Debug, Clone)]
pub struct OutcomeCounts {
    pub counts: Vec<Vec<u64>>,
    pub n_trials: u64,
    pub seed: u64,
    pub outcome_labels: Vec<OutcomeLabel>,
}

impl OutcomeCounts {
    pub fn outcome_totals(&self) -> Vec<u64> {
        let cols = self.outcome_labels.len();
        let mut totals = vec![0; cols];
        for row in &self.counts {
            for (k, &c) in row.iter().enumerate() {
                totals[k] += c;
            }
        }
        totals
    }
}

/// Sample preparation/outcome pairs. The POM is validated first and the
/// conditional probability table is cleaned before any drawing: entries
/// below the positivity tolerance are snapped to exactly zero and each row
/// renormalized, so an outcome that is impossible in exact arithmetic can
/// never fire through rounding noise. Each trial runs on its own RNG stream
/// of the given seed (two draws: state, then outcome), which makes the
/// record independent of batching.
pub fn sample_outcomes(
    ensemble: &StateEnsemble,
    pom: &Pom,
    n_trials: u64,
    seed: u64,
) -> Result<OutcomeCounts> {
    if ensemble.dim() != pom.dim() {
        return Err(DiscrimError::DimensionMismatch { left: ensemble.dim(), right: pom.dim() });
    }
    if n_trials == 0 {
        return Err(DiscrimError::NoTrials);
    }
    let tol = Tolerances::default();
    let report = validate_pom(pom, &tol);
    if !report.pass {
        if report.hermiticity_residual > tol.hermiticity {
            return Err(DiscrimError::NotHermitian(report.hermiticity_residual));
        }
        if report.min_eigenvalue() < -tol.positivity {
            return Err(DiscrimError::NotPositive(report.min_eigenvalue()));
        }
        return Err(DiscrimError::Incomplete(report.completeness_residual));
    }

    let n_states = ensemble.len();
    let n_outcomes = pom.len();
    let mut table = vec![vec![0.0_f64; n_outcomes]; n_states];
    for (i, row) in table.iter_mut().enumerate() {
        for (k, slot) in row.iter_mut().enumerate() {
            let p = born_raw(ensemble.state(i).matrix(), pom.element(k).matrix());
            *slot = if p < tol.positivity { 0.0 } else { p };
        }
        let total: f64 = row.iter().sum();
        for slot in row.iter_mut() {
            *slot /= total;
        }
    }

    let priors = ensemble.priors();
    let mut counts = vec![vec![0u64; n_outcomes]; n_states];
    for trial in 0..n_trials {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        rng.set_stream(trial);
        let u_state: f64 = rng.gen();
        let mut i = n_states - 1;
        let mut acc = 0.0;
        for (j, &p) in priors.iter().enumerate() {
            acc += p;
            if u_state < acc {
                i = j;
                break;
            }
        }
        let u_outcome: f64 = rng.gen();
        let row = &table[i];
        let mut k = n_outcomes - 1;
        let mut acc = 0.0;
        for (m, &p) in row.iter().enumerate() {
            acc += p;
            if u_outcome < acc {
                k = m;
                break;
            }
        }
        counts[i][k] += 1;
    }
    Ok(OutcomeCounts {
        counts,
        n_trials,
        seed,
        outcome_labels: pom.labels(),
    })
}

/// Empirical estimates reduced from a count record. Confidence is None for
/// inconclusive outcomes and outcomes that never fired.
#[derive(Debug, Clone)]
pub struct EmpiricalFigures {
    pub p_error: f64,
    pub p_inconclusive: f64,
    pub per_outcome_confidence: Vec<Option<f64>>,
    pub mutual_information: f64,
}

pub fn empirical_figures(record: &OutcomeCounts) -> Result<EmpiricalFigures> {
    if record.counts.is_empty() || record.n_trials == 0 {
        return Err(DiscrimError::NoTrials);
    }
    let n_states = record.counts.len();
    let n = record.n_trials as f64;
    let totals = record.outcome_totals();

    let mut errors = 0u64;
    let mut inconclusive = 0u64;
    for (i, row) in record.counts.iter().enumerate() {
        for (k, &c) in row.iter().enumerate() {
            match record.outcome_labels[k] {
                OutcomeLabel::Inconclusive => inconclusive += c,
                OutcomeLabel::State(j) if j == i => {}
                OutcomeLabel::State(_) => errors += c,
            }
        }
    }

    let per_outcome_confidence = record
        .outcome_labels
        .iter()
        .enumerate()
        .map(|(k, label)| match label {
            OutcomeLabel::Inconclusive => None,
            OutcomeLabel::State(j) => {
                if totals[k] == 0 || *j >= n_states {
                    None
                } else {
                    Some(record.counts[*j][k] as f64 / totals[k] as f64)
                }
            }
        })
        .collect();

    let joint: Vec<Vec<f64>> = record
        .counts
        .iter()
        .map(|row| row.iter().map(|&c| c as f64 / n).collect())
        .collect();
    let mutual_information = JointDistribution::new(joint)?.mutual_information();

    Ok(EmpiricalFigures {
        p_error: errors as f64 / n,
        p_inconclusive: inconclusive as f64 / n,
        per_outcome_confidence,
        mutual_information,
    })
}

/// Rank-1 measurement written as one isometry: row j is w_j^dag where
/// pi_j = w_j w_j^dag, so outcome j is exit path j of a multiport that
/// implements V. V^dag V = I is exactly POM completeness.
#[derive(Debug, Clone)]
pub struct PathEncoding {
    pub isometry: CMat,
    pub outcome_map: Vec<OutcomeLabel>,
}

impl PathEncoding {
    /// |(V psi)_j|^2: the probability of leaving through path j.
    pub fn path_probabilities(&self, psi: &PureState) -> Result<Vec<f64>> {
        if psi.dim() != self.isometry.ncols() {
            return Err(DiscrimError::DimensionMismatch {
                left: psi.dim(),
                right: self.isometry.ncols(),
            });
        }
        let amp = &self.isometry * psi.amplitudes();
        Ok(amp.iter().map(|z| z.norm_sqr()).collect())
    }
}

/// Decompose a complete rank-1 POM into a path encoding. Each element must
/// have rank at most 1 (zero elements give zero rows); the phase of each
/// row is fixed by making its first non-negligible component real positive,
/// so equal POMs map to equal isometries.
pub fn naimark_path_encoding(pom: &Pom) -> Result<PathEncoding> {
    let tol = Tolerances::default();
    let report = validate_pom(pom, &tol);
    if report.completeness_residual > tol.completeness {
        return Err(DiscrimError::Incomplete(report.completeness_residual));
    }
    let dim = pom.dim();
    let mut isometry = CMat::zeros(pom.len(), dim);
    for (j, e) in pom.elements().iter().enumerate() {
        let (values, vectors) = eigh(e.matrix());
        let top = values[0].max(0.0);
        if top <= tol.rank {
            continue;
        }
        let rank = values.iter().filter(|&&v| v > tol.rank * top).count();
        if rank > 1 {
            return Err(DiscrimError::NotRankOne { index: j, rank });
        }
        let mut w = vectors.column(0) * cxr(top.sqrt());
        if let Some(lead) = w.iter().find(|z| z.norm() > 1e-9) {
            let phase = lead.conj() / cxr(lead.norm());
            w *= phase;
        }
        for d in 0..dim {
            isometry[(j, d)] = w[d].conj();
        }
    }
    Ok(PathEncoding {
        isometry,
        outcome_map: pom.labels(),
    })
}
