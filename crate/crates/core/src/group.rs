//! Panel decisions: several makers, each with a soft set and a relative
//! parameter matrix over the same universe and parameters.
//!
//! Matrices are averaged entrywise, soft sets are intersected, and the
//! single maker pipeline runs on the result.

use std::collections::HashSet;

use serde::Serialize;

use crate::decision::{decide_matrix, DecisionReport, NsSetView, ParameterMatrix, SaatyMatrix};
use crate::error::{Error, Result};
use crate::exec::Execution;
use crate::ns::{intersection, NsSet};

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct DecisionMakerInput {
    pub id: String,
    pub ns_set: NsSetView,
    pub saaty: SaatyMatrix,
}

impl DecisionMakerInput {
    pub fn new(id: impl Into<String>, ns_set: NsSet, saaty: SaatyMatrix) -> Self {
        Self {
            id: id.into(),
            ns_set: NsSetView(ns_set),
            saaty,
        }
    }
}

fn check_panel(makers: &[DecisionMakerInput]) -> Result<()> {
    let first = makers.first().ok_or(Error::EmptyPanel)?;
    let mut seen = HashSet::new();
    for m in makers {
        if !seen.insert(m.id.as_str()) {
            return Err(Error::DuplicateIdentifier {
                kind: "decision maker",
                id: m.id.clone(),
            });
        }
        let f = &m.ns_set.0;
        if f.universe() != first.ns_set.0.universe() {
            return Err(Error::DomainMismatch(format!(
                "maker `{}` uses universe {}, maker `{}` uses {}",
                m.id,
                f.universe(),
                first.id,
                first.ns_set.0.universe()
            )));
        }
        if f.parameters() != first.ns_set.0.parameters() || m.saaty.parameters() != f.parameters() {
            return Err(Error::DomainMismatch(format!(
                "maker `{}` does not share the panel parameter set {}",
                m.id,
                first.ns_set.0.parameters()
            )));
        }
    }
    Ok(())
}

/// Entrywise arithmetic mean of the makers' relative matrices.
///
/// Entries are summed in panel order and divided once, so a single maker
/// reproduces its own matrix exactly.
pub fn mean_matrix(matrices: &[&ParameterMatrix]) -> Result<ParameterMatrix> {
    let first = matrices.first().ok_or(Error::EmptyPanel)?;
    if let Some(m) = matrices
        .iter()
        .find(|m| m.parameters() != first.parameters())
    {
        return Err(Error::DomainMismatch(format!(
            "matrix over {} differs from panel parameters {}",
            m.parameters(),
            first.parameters()
        )));
    }
    let n = first.size();
    let count = matrices.len() as f64;
    let rows = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| matrices.iter().map(|m| m.get(i, j)).sum::<f64>() / count)
                .collect()
        })
        .collect();
    ParameterMatrix::new(first.parameters().clone(), rows)
}

/// Intersection of all soft sets, folded in panel order.
pub fn aggregate_ns_sets(sets: &[&NsSet]) -> Result<NsSet> {
    let (first, rest) = sets.split_first().ok_or(Error::EmptyPanel)?;
    rest.iter()
        .try_fold((*first).clone(), |acc, f| intersection(&acc, f))
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct GroupDecisionReport {
    pub makers: Vec<DecisionMakerInput>,
    pub mean_matrix: ParameterMatrix,
    pub aggregate: NsSetView,
    pub report: DecisionReport,
    pub warnings: Vec<String>,
}

impl GroupDecisionReport {
    pub fn optimum(&self) -> &str {
        self.report.optimum()
    }
}

pub fn group_decide(makers: &[DecisionMakerInput]) -> Result<GroupDecisionReport> {
    group_decide_with(makers, Execution::default())
}

pub fn group_decide_with(
    makers: &[DecisionMakerInput],
    execution: Execution,
) -> Result<GroupDecisionReport> {
    check_panel(makers)?;
    let matrices: Vec<&ParameterMatrix> = makers.iter().map(|m| m.saaty.matrix()).collect();
    let sets: Vec<&NsSet> = makers.iter().map(|m| &m.ns_set.0).collect();
    let mean = mean_matrix(&matrices)?;
    let aggregate = aggregate_ns_sets(&sets)?;
    let report = decide_matrix(&aggregate, &mean, execution)?;
    let warnings = makers
        .iter()
        .flat_map(|m| {
            m.saaty
                .warnings()
                .iter()
                .map(move |w| format!("{}: {w}", m.id))
        })
        .collect();
    Ok(GroupDecisionReport {
        makers: makers.to_vec(),
        mean_matrix: mean,
        aggregate: NsSetView(aggregate),
        report,
        warnings,
    })
}
