//! Ensemble files: a small JSON schema so problems can come from disk
//! instead of being hardcoded. Complex numbers are [re, im] pairs; a state
//! is either a "vector" (pure) or a "matrix" (density operator), mixed
//! freely within one file.

use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{DiscrimError, Result};
use crate::types::{cx, CMat, CVec, DensityOperator, PureState, StateEnsemble};

#[derive(Serialize, Deserialize)]
struct EnsembleFile {
    dim: usize,
    states: Vec<StateSpec>,
    priors: Vec<f64>,
}

#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum StateSpec {
    Vector { vector: Vec<[f64; 2]> },
    Matrix { matrix: Vec<Vec<[f64; 2]>> },
}

fn state_from_spec(spec: &StateSpec, dim: usize) -> Result<DensityOperator> {
    match spec {
        StateSpec::Vector { vector } => {
            if vector.len() != dim {
                return Err(DiscrimError::InvalidEnsembleFile(format!(
                    "state vector has {} entries, file says dim {}",
                    vector.len(),
                    dim
                )));
            }
            let amps = CVec::from_iterator(dim, vector.iter().map(|p| cx(p[0], p[1])));
            Ok(PureState::new(amps)?.density())
        }
        StateSpec::Matrix { matrix } => {
            if matrix.len() != dim || matrix.iter().any(|row| row.len() != dim) {
                return Err(DiscrimError::InvalidEnsembleFile(format!(
                    "state matrix is not {dim}x{dim}"
                )));
            }
            let m = CMat::from_fn(dim, dim, |r, c| cx(matrix[r][c][0], matrix[r][c][1]));
            DensityOperator::new(m)
        }
    }
}

pub fn parse_ensemble(json: &str) -> Result<StateEnsemble> {
    let file: EnsembleFile = serde_json::from_str(json)?;
    if file.dim == 0 {
        return Err(DiscrimError::InvalidEnsembleFile("dim must be positive".into()));
    }
    let states = file
        .states
        .iter()
        .map(|s| state_from_spec(s, file.dim))
        .collect::<Result<Vec<_>>>()?;
    StateEnsemble::new(states, file.priors)
}

pub fn load_ensemble(path: &Path) -> Result<StateEnsemble> {
    parse_ensemble(&std::fs::read_to_string(path)?)
}

/// Raw [re, im] rows of a matrix, for callers that serialize operators.
pub fn matrix_rows(m: &CMat) -> Vec<Vec<[f64; 2]>> {
    (0..m.nrows())
        .map(|r| (0..m.ncols()).map(|c| [m[(r, c)].re, m[(r, c)].im]).collect())
        .collect()
}

/// Serialize with every state in matrix form; that representation is total,
/// so a round trip never has to decide whether something is pure enough.
pub fn ensemble_json(ensemble: &StateEnsemble) -> Result<String> {
    let file = EnsembleFile {
        dim: ensemble.dim(),
        states: ensemble
            .states()
            .iter()
            .map(|s| StateSpec::Matrix { matrix: matrix_rows(s.matrix()) })
            .collect(),
        priors: ensemble.priors().to_vec(),
    };
    Ok(serde_json::to_string_pretty(&file)?)
}

pub fn save_ensemble(path: &Path, ensemble: &StateEnsemble) -> Result<()> {
    std::fs::write(path, ensemble_json(ensemble)?)?;
    Ok(())
}
