//! JSON state files.
//!
//! ```json
//! { "dims": [2, 2], "matrix": [[[0.5, 0.0], ...], ...], "label": "bell" }
//! ```
//!
//! `dims` is `[d_A, d_B]` for bipartite states and `[d]` otherwise. Entries are
//! `[re, im]` pairs, row-major. Floats are written in shortest round-trip
//! form, so a write/read cycle is bit-exact.

use std::fs;
use std::path::Path;

use serde::{Deserialize, Serialize};

use super::CliError;
use crate::linalg::{BipartiteState, DensityMatrix, Matrix, C64};

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct StateFile {
    pub dims: Vec<usize>,
    pub matrix: Vec<Vec<[f64; 2]>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub label: Option<String>,
}

/// A validated state file.
#[derive(Clone, Debug)]
pub enum LoadedState {
    Single(DensityMatrix),
    Bipartite(BipartiteState),
}

impl LoadedState {
    pub fn density(&self) -> &DensityMatrix {
        match self {
            LoadedState::Single(rho) => rho,
            LoadedState::Bipartite(bs) => bs.state(),
        }
    }
}

impl StateFile {
    pub fn from_matrix(m: &Matrix, dims: Vec<usize>, label: Option<String>) -> Self {
        let matrix = (0..m.rows()).map(|r| (0..m.cols()).map(|c| [m[(r, c)].re, m[(r, c)].im]).collect()).collect();
        Self { dims, matrix, label }
    }

    pub fn from_density(rho: &DensityMatrix, label: Option<String>) -> Self {
        Self::from_matrix(rho.matrix(), vec![rho.dim()], label)
    }

    pub fn from_bipartite(bs: &BipartiteState, label: Option<String>) -> Self {
        Self::from_matrix(bs.matrix(), vec![bs.d_a(), bs.d_b()], label)
    }

    /// Structural checks: shape of `dims` and `matrix`.
    pub fn to_matrix(&self) -> Result<Matrix, CliError> {
        if self.dims.is_empty() || self.dims.len() > 2 {
            return Err(CliError::Parse(format!("dims: expected [d] or [d_A, d_B], got {} entries", self.dims.len())));
        }
        if let Some(i) = self.dims.iter().position(|&d| d == 0) {
            return Err(CliError::Parse(format!("dims[{i}]: dimension must be positive")));
        }
        let n: usize = self.dims.iter().product();
        if self.matrix.len() != n {
            return Err(CliError::Parse(format!("matrix: {} rows, dims require {n}", self.matrix.len())));
        }
        let mut data = Vec::with_capacity(n * n);
        for (r, row) in self.matrix.iter().enumerate() {
            if row.len() != n {
                return Err(CliError::Parse(format!("matrix[{r}]: {} entries, dims require {n}", row.len())));
            }
            data.extend(row.iter().map(|&[re, im]| C64::new(re, im)));
        }
        Matrix::new(n, n, data).map_err(|e| CliError::Parse(format!("matrix: {e}")))
    }

    /// Structural checks followed by state validation at `validation_tol`.
    pub fn load(&self, validation_tol: f64) -> Result<LoadedState, CliError> {
        let m = self.to_matrix()?;
        let rho = DensityMatrix::with_tol(m, validation_tol).map_err(|e| CliError::Validation(e.to_string()))?;
        match self.dims[..] {
            [_] => Ok(LoadedState::Single(rho)),
            [d_a, d_b] => BipartiteState::new(rho, d_a, d_b)
                .map(LoadedState::Bipartite)
                .map_err(|e| CliError::Validation(e.to_string())),
            _ => unreachable!("dims length checked in to_matrix"),
        }
    }
}

pub fn parse_state_str(text: &str) -> Result<StateFile, CliError> {
    serde_json::from_str(text).map_err(|e| CliError::Parse(e.to_string()))
}

pub fn read_state_file(path: &Path) -> Result<StateFile, CliError> {
    let text = fs::read_to_string(path).map_err(|e| CliError::Parse(format!("{}: {e}", path.display())))?;
    parse_state_str(&text).map_err(|e| match e {
        CliError::Parse(msg) => CliError::Parse(format!("{}: {msg}", path.display())),
        other => other,
    })
}

pub fn write_state_file(path: &Path, file: &StateFile) -> Result<(), CliError> {
    let text = serde_json::to_string_pretty(file).map_err(|e| CliError::Io(e.to_string()))?;
    fs::write(path, text + "\n").map_err(|e| CliError::Io(format!("{}: {e}", path.display())))
}
