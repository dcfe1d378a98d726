use serde::Serialize;

use crate::error::{Error, Result};
use crate::ns::ParameterSet;

/// Allowed deviation of `d_ij · d_ji` from 1, and of the diagonal from 1.
pub const RECIPROCITY_TOLERANCE: f64 = 1e-6;

/// Square matrix of positive reals indexed by a parameter set.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ParameterMatrix {
    parameters: ParameterSet,
    rows: Vec<Vec<f64>>,
}

impl ParameterMatrix {
    pub fn new(parameters: ParameterSet, rows: Vec<Vec<f64>>) -> Result<Self> {
        let n = parameters.len();
        if rows.len() != n {
            return Err(Error::InvalidMatrix(format!(
                "{} rows for {n} parameters",
                rows.len()
            )));
        }
        for (i, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(Error::InvalidMatrix(format!(
                    "row `{}` has {} entries, expected {n}",
                    parameters.ids()[i],
                    row.len()
                )));
            }
            if let Some((j, v)) = row
                .iter()
                .enumerate()
                .find(|(_, v)| !(v.is_finite() && **v > 0.0))
            {
                return Err(Error::InvalidMatrix(format!(
                    "entry ({}, {}) = {v} is not a positive number",
                    parameters.ids()[i],
                    parameters.ids()[j]
                )));
            }
        }
        Ok(Self { parameters, rows })
    }

    /// Skips validation; callers guarantee shape and positivity.
    pub(crate) fn from_parts(parameters: ParameterSet, rows: Vec<Vec<f64>>) -> Self {
        Self { parameters, rows }
    }

    pub fn parameters(&self) -> &ParameterSet {
        &self.parameters
    }

    pub fn size(&self) -> usize {
        self.rows.len()
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.rows[i][j]
    }

    pub fn rows(&self) -> &[Vec<f64>] {
        &self.rows
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum ReciprocityPolicy {
    /// Non-reciprocal entries are rejected.
    #[default]
    Error,
    /// Non-reciprocal entries are reported as warnings.
    Warn,
}

/// Relative importance matrix on the 1–9 pairwise comparison scale:
/// positive entries, unit diagonal, `d_ji ≈ 1 / d_ij`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SaatyMatrix {
    matrix: ParameterMatrix,
    warnings: Vec<String>,
}

impl SaatyMatrix {
    pub fn new(
        parameters: ParameterSet,
        rows: Vec<Vec<f64>>,
        policy: ReciprocityPolicy,
    ) -> Result<Self> {
        let matrix = ParameterMatrix::new(parameters, rows)?;
        let ids = matrix.parameters.ids();
        let n = matrix.size();
        let mut warnings = Vec::new();
        for i in 0..n {
            let d = matrix.get(i, i);
            if (d - 1.0).abs() > RECIPROCITY_TOLERANCE {
                return Err(Error::InvalidMatrix(format!(
                    "diagonal entry ({0}, {0}) = {d}, expected 1",
                    ids[i]
                )));
            }
            for j in (i + 1)..n {
                let (a, b) = (matrix.get(i, j), matrix.get(j, i));
                if (a * b - 1.0).abs() > RECIPROCITY_TOLERANCE {
                    let msg = format!(
                        "entries ({0}, {1}) = {a} and ({1}, {0}) = {b} are not reciprocal",
                        ids[i], ids[j]
                    );
                    match policy {
                        ReciprocityPolicy::Error => return Err(Error::InvalidMatrix(msg)),
                        ReciprocityPolicy::Warn => warnings.push(msg),
                    }
                }
            }
        }
        for (i, row) in matrix.rows.iter().enumerate() {
            for (j, &v) in row.iter().enumerate() {
                if i != j && !on_scale(v) {
                    warnings.push(format!(
                        "entry ({}, {}) = {v} is off the 1-9 rating scale",
                        ids[i], ids[j]
                    ));
                }
            }
        }
        Ok(Self { matrix, warnings })
    }

    pub fn matrix(&self) -> &ParameterMatrix {
        &self.matrix
    }

    pub fn parameters(&self) -> &ParameterSet {
        self.matrix.parameters()
    }

    /// Advisory findings: off-scale values, tolerated non-reciprocity.
    pub fn warnings(&self) -> &[String] {
        &self.warnings
    }
}

/// Integer intensities 1..=9 and their reciprocals.
fn on_scale(v: f64) -> bool {
    (1..=9).any(|k| {
        let k = f64::from(k);
        (v - k).abs() <= 1e-9 || (v - 1.0 / k).abs() <= 1e-9
    })
}

/// Row sums `c_i = Σ_j d_ij`.
pub fn row_scores(d: &ParameterMatrix) -> Vec<f64> {
    d.rows.iter().map(|row| row.iter().sum()).collect()
}

/// Each row divided by its row sum.
pub fn normalize(d: &ParameterMatrix) -> ParameterMatrix {
    let rows = d
        .rows
        .iter()
        .map(|row| {
            let c: f64 = row.iter().sum();
            row.iter().map(|v| v / c).collect()
        })
        .collect();
    ParameterMatrix::from_parts(d.parameters.clone(), rows)
}

/// Column means of a normalized matrix, `w(e_j) = (1/n) Σ_i d̂_ij`.
pub fn parameter_weights(normalized: &ParameterMatrix) -> Vec<f64> {
    let n = normalized.size();
    (0..n)
        .map(|j| normalized.rows.iter().map(|row| row[j]).sum::<f64>() / n as f64)
        .collect()
}

/// Row scores, normalized matrix and weights of one relative matrix.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ParameterWeights {
    pub parameters: ParameterSet,
    pub scores: Vec<f64>,
    pub normalized: ParameterMatrix,
    pub weights: Vec<f64>,
}

impl ParameterWeights {
    pub fn derive(d: &ParameterMatrix) -> Self {
        let normalized = normalize(d);
        Self {
            parameters: d.parameters.clone(),
            scores: row_scores(d),
            weights: parameter_weights(&normalized),
            normalized,
        }
    }

    pub fn weight_of(&self, parameter: &str) -> Option<f64> {
        self.parameters.position(parameter).map(|k| self.weights[k])
    }
}
