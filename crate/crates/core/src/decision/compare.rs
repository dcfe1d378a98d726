use serde::Serialize;

use crate::error::Result;
use crate::ns::{NeutrosophicTriple, NsSet};

/// Pairwise dominance of the elements under one parameter.
///
/// `x_ij = (ΔT + ΔI + ΔF + 1) / 2` with `ΔT = T_i − T_j`, `ΔI = I_j − I_i`,
/// `ΔF = F_j − F_i`. The diagonal is exactly `0.5` and `x_ij + x_ji = 1`.
/// Entries are not clamped and lie in `[−1, 2]`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CompareMatrix {
    pub parameter: String,
    pub rows: Vec<Vec<f64>>,
}

impl CompareMatrix {
    pub fn size(&self) -> usize {
        self.rows.len()
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.rows[i][j]
    }
}

pub(crate) fn dominance(a: NeutrosophicTriple, b: NeutrosophicTriple) -> f64 {
    let dt = a.t() - b.t();
    let di = b.i() - a.i();
    let df = b.f() - a.f();
    (dt + di + df + 1.0) / 2.0
}

pub(crate) fn compare_row(parameter: &str, row: &[NeutrosophicTriple]) -> CompareMatrix {
    CompareMatrix {
        parameter: parameter.to_owned(),
        rows: row
            .iter()
            .map(|&a| row.iter().map(|&b| dominance(a, b)).collect())
            .collect(),
    }
}

/// Compare matrix of `f(parameter)`.
pub fn compare_matrix(f: &NsSet, parameter: &str) -> Result<CompareMatrix> {
    Ok(compare_row(parameter, f.row_by_id(parameter)?))
}

/// Membership degree of each element under one parameter: column means
/// `W(x_j) = (1/m) Σ_i x_ij`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ElementWeights {
    pub parameter: String,
    pub weights: Vec<f64>,
}

pub fn element_weights(cm: &CompareMatrix) -> ElementWeights {
    let m = cm.size();
    ElementWeights {
        parameter: cm.parameter.clone(),
        weights: (0..m)
            .map(|j| cm.rows.iter().map(|row| row[j]).sum::<f64>() / m as f64)
            .collect(),
    }
}
