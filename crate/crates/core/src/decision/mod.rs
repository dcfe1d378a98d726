//! Single decision maker ranking.
//!
//! Pipeline: relative parameter matrix → row scores → normalized matrix →
//! parameter weights; per parameter, compare matrix → element weights; then
//! the weighted decision set and its argmax.

mod compare;
mod saaty;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::exec::Execution;
use crate::ns::{NsSet, Universe};

pub use compare::{compare_matrix, element_weights, CompareMatrix, ElementWeights};
pub use saaty::{
    normalize, parameter_weights, row_scores, ParameterMatrix, ParameterWeights, ReciprocityPolicy,
    SaatyMatrix, RECIPROCITY_TOLERANCE,
};

/// Fuzzy set of final scores over the universe, with its argmax.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct DecisionSet {
    pub universe: Universe,
    pub scores: Vec<f64>,
    /// Index of the first maximal score in universe order.
    pub optimum: usize,
}

impl DecisionSet {
    pub fn optimum_id(&self) -> &str {
        &self.universe.ids()[self.optimum]
    }

    pub fn score_of(&self, element: &str) -> Option<f64> {
        self.universe.position(element).map(|k| self.scores[k])
    }
}

/// `F(x_j) = (1/n) Σ_k w(e_k) · W_{f(e_k)}(x_j)`.
///
/// The leading `1/n` only rescales; it is kept so scores read like the
/// published tables.
pub fn decision_set(
    weights: &ParameterWeights,
    element_weights: &[ElementWeights],
    universe: &Universe,
) -> Result<DecisionSet> {
    let n = weights.parameters.len();
    if element_weights.len() != n
        || element_weights
            .iter()
            .zip(weights.parameters.iter())
            .any(|(ew, p)| ew.parameter != p)
    {
        return Err(Error::DomainMismatch(
            "element weights do not follow the weighted parameter set".into(),
        ));
    }
    let m = universe.len();
    if let Some(ew) = element_weights.iter().find(|ew| ew.weights.len() != m) {
        return Err(Error::DomainMismatch(format!(
            "element weights for `{}` cover {} elements, universe has {m}",
            ew.parameter,
            ew.weights.len()
        )));
    }
    let scores: Vec<f64> = (0..m)
        .map(|j| {
            let sum: f64 = weights
                .weights
                .iter()
                .zip(element_weights)
                .map(|(w, ew)| w * ew.weights[j])
                .sum();
            sum / n as f64
        })
        .collect();
    let optimum = argmax_first(&scores);
    Ok(DecisionSet {
        universe: universe.clone(),
        scores,
        optimum,
    })
}

fn argmax_first(values: &[f64]) -> usize {
    let mut best = 0;
    for (k, &v) in values.iter().enumerate().skip(1) {
        if v > values[best] {
            best = k;
        }
    }
    best
}

/// Every intermediate of one pipeline run.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct DecisionReport {
    pub ns_set: NsSetView,
    pub relative_matrix: ParameterMatrix,
    pub parameter_weights: ParameterWeights,
    pub compare_matrices: Vec<CompareMatrix>,
    pub element_weights: Vec<ElementWeights>,
    pub decision: DecisionSet,
    pub warnings: Vec<String>,
}

/// Serializable echo of the input soft set.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct NsSetView(#[serde(serialize_with = "crate::io::serialize_ns_set_value")] pub NsSet);

impl DecisionReport {
    pub fn optimum(&self) -> &str {
        self.decision.optimum_id()
    }

    pub fn compare_matrix(&self, parameter: &str) -> Option<&CompareMatrix> {
        self.compare_matrices
            .iter()
            .find(|c| c.parameter == parameter)
    }

    pub fn element_weights_of(&self, parameter: &str) -> Option<&ElementWeights> {
        self.element_weights
            .iter()
            .find(|c| c.parameter == parameter)
    }
}

/// Runs the pipeline on a validated relative parameter matrix.
pub fn decide(f: &NsSet, d: &SaatyMatrix) -> Result<DecisionReport> {
    decide_with(f, d, Execution::default())
}

pub fn decide_with(f: &NsSet, d: &SaatyMatrix, execution: Execution) -> Result<DecisionReport> {
    let mut report = decide_matrix(f, d.matrix(), execution)?;
    report.warnings = d.warnings().to_vec();
    Ok(report)
}

/// Pipeline over any positive relative matrix (for instance a panel mean).
pub fn decide_matrix(
    f: &NsSet,
    d: &ParameterMatrix,
    execution: Execution,
) -> Result<DecisionReport> {
    if f.parameters() != d.parameters() {
        return Err(Error::DomainMismatch(format!(
            "soft set parameters {} differ from matrix parameters {}",
            f.parameters(),
            d.parameters()
        )));
    }
    let weights = ParameterWeights::derive(d);
    let params = f.parameters().ids();
    let compare_matrices: Vec<CompareMatrix> =
        execution.map_indexed(params.len(), |k| compare::compare_row(&params[k], f.row(k)));
    let element_weights: Vec<ElementWeights> = compare_matrices
        .iter()
        .map(compare::element_weights)
        .collect();
    let decision = decision_set(&weights, &element_weights, f.universe())?;
    Ok(DecisionReport {
        ns_set: NsSetView(f.clone()),
        relative_matrix: d.clone(),
        parameter_weights: weights,
        compare_matrices,
        element_weights,
        decision,
        warnings: Vec::new(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ns::{universal_ns_set, NeutrosophicTriple, ParameterSet};

    fn params(n: usize) -> ParameterSet {
        ParameterSet::new((1..=n).map(|k| format!("e{k}"))).unwrap()
    }

    fn flat_weights(n: usize) -> ParameterWeights {
        ParameterWeights::derive(&ParameterMatrix::new(params(n), vec![vec![1.0; n]; n]).unwrap())
    }

    #[test]
    fn decision_from_printed_intermediates() {
        let mut w = flat_weights(4);
        w.weights = vec![0.29, 0.09, 0.34, 0.28];
        let printed = [
            [0.67, 0.63, 0.42, 0.37, 0.32],
            [0.80, 0.57, 0.33, 0.42, 0.52],
            [0.48, 0.39, 0.49, 0.55, 0.42],
            [0.65, 0.40, 0.50, 0.65, 0.30],
        ];
        let ew: Vec<ElementWeights> = printed
            .iter()
            .enumerate()
            .map(|(k, row)| ElementWeights {
                parameter: format!("e{}", k + 1),
                weights: row.to_vec(),
            })
            .collect();
        let x = Universe::new((1..=5).map(|k| format!("x{k}"))).unwrap();
        let d = decision_set(&w, &ew, &x).unwrap();
        assert!((d.scores[0] - 0.15).abs() < 0.005);
        assert_eq!(d.optimum_id(), "x1");
    }

    #[test]
    fn group_decision_from_printed_intermediates() {
        let mut w = flat_weights(4);
        w.weights = vec![0.21, 0.33, 0.18, 0.28];
        let printed = [
            [0.57, 0.56, 0.37, 0.40, 0.66],
            [0.61, 0.48, 0.71, 0.39, 0.31],
            [0.32, 0.57, 0.47, 0.61, 0.53],
            [0.49, 0.50, 0.52, 0.35, 0.64],
        ];
        let ew: Vec<ElementWeights> = printed
            .iter()
            .enumerate()
            .map(|(k, row)| ElementWeights {
                parameter: format!("e{}", k + 1),
                weights: row.to_vec(),
            })
            .collect();
        let x = Universe::new((1..=5).map(|k| format!("x{k}"))).unwrap();
        let d = decision_set(&w, &ew, &x).unwrap();
        // the published F(x1) = .126 is an arithmetic slip; the sum gives .129
        for (got, want) in d.scores.iter().zip([0.126, 0.130, 0.136, 0.105, 0.129]) {
            assert!((got - want).abs() < 0.005, "{got} vs {want}");
        }
        assert_eq!(d.optimum_id(), "x3");
    }

    #[test]
    fn ties_resolve_to_first_element() {
        let w = flat_weights(2);
        let ew = vec![
            ElementWeights {
                parameter: "e1".into(),
                weights: vec![0.5; 3],
            },
            ElementWeights {
                parameter: "e2".into(),
                weights: vec![0.5; 3],
            },
        ];
        let x = Universe::new(["a", "b", "c"]).unwrap();
        let d = decision_set(&w, &ew, &x).unwrap();
        assert_eq!(d.optimum, 0);
        assert!(d.scores.iter().all(|&s| s == d.scores[0]));
    }

    #[test]
    fn mismatched_element_weights() {
        let w = flat_weights(2);
        let ew = vec![ElementWeights {
            parameter: "e1".into(),
            weights: vec![0.5],
        }];
        let x = Universe::new(["a"]).unwrap();
        assert!(matches!(
            decision_set(&w, &ew, &x),
            Err(Error::DomainMismatch(_))
        ));
    }

    #[test]
    fn universal_set_ranks_everything_equal() {
        let x = Universe::new(["a", "b", "c"]).unwrap();
        let f = universal_ns_set(x, params(3));
        let d = SaatyMatrix::new(
            params(3),
            vec![
                vec![1.0, 3.0, 5.0],
                vec![1.0 / 3.0, 1.0, 2.0],
                vec![0.2, 0.5, 1.0],
            ],
            ReciprocityPolicy::Error,
        )
        .unwrap();
        let r = decide(&f, &d).unwrap();
        assert_eq!(r.optimum(), "a");
        assert!(r.decision.scores.iter().all(|&s| s == r.decision.scores[0]));
    }

    #[test]
    fn single_parameter_two_elements() {
        let x = Universe::new(["p", "q"]).unwrap();
        let rows = vec![vec![
            NeutrosophicTriple::new(0.3, 0.5, 0.4).unwrap(),
            NeutrosophicTriple::new(0.6, 0.2, 0.1).unwrap(),
        ]];
        let f = NsSet::from_rows(x, params(1), rows).unwrap();
        let d = SaatyMatrix::new(params(1), vec![vec![1.0]], ReciprocityPolicy::Error).unwrap();
        let r = decide(&f, &d).unwrap();
        // x_pq = 0.05, x_qp = 0.95; column means 0.725 (p) and 0.275 (q)
        let w = &r.element_weights[0].weights;
        assert!((w[0] - 0.725).abs() < 1e-12);
        assert!((w[1] - 0.275).abs() < 1e-12);
        assert_eq!(r.optimum(), "p");
    }

    #[test]
    fn parameter_mismatch_is_rejected() {
        let x = Universe::new(["a"]).unwrap();
        let f = universal_ns_set(x, params(2));
        let d = SaatyMatrix::new(params(1), vec![vec![1.0]], ReciprocityPolicy::Error).unwrap();
        assert!(matches!(decide(&f, &d), Err(Error::DomainMismatch(_))));
    }
}
