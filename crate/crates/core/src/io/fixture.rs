//! Reference values for a pipeline run, with known misprints.
//!
//! A fixture maps quantity paths such as `weights[e1]`,
//! `compare[bright][x1][x2]` or `optimum` to printed values. Entries under
//! `errata` carry both the printed and the corrected value and are checked
//! against the corrected one.

use serde::{Deserialize, Serialize};

use super::json_error;
use super::unique::UniqueMap;
use crate::decision::DecisionReport;
use crate::error::{Error, Result};

/// Default comparison tolerance: printed tables use two decimals.
pub const DEFAULT_TOLERANCE: f64 = 0.01;

/// Slack for values that sit exactly on the tolerance boundary.
const BOUNDARY_SLACK: f64 = 1e-9;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum FixtureValue {
    Number(f64),
    Triple([f64; 3]),
    Element(String),
}

impl FixtureValue {
    pub fn close_to(&self, other: &FixtureValue, tol: f64) -> bool {
        let near = |a: f64, b: f64| (a - b).abs() <= tol + BOUNDARY_SLACK;
        match (self, other) {
            (Self::Number(a), Self::Number(b)) => near(*a, *b),
            (Self::Triple(a), Self::Triple(b)) => a.iter().zip(b).all(|(x, y)| near(*x, *y)),
            (Self::Element(a), Self::Element(b)) => a == b,
            _ => false,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Quantity {
    /// The input soft set (for panels, the aggregate).
    NsSet,
    /// The relative parameter matrix (for panels, the mean matrix).
    Relative,
    RowScores,
    Normalized,
    Weights,
    Compare,
    ElementWeights,
    Decision,
    Optimum,
}

impl Quantity {
    fn from_name(name: &str) -> Option<(Self, usize)> {
        Some(match name {
            "ns_set" | "aggregate" => (Self::NsSet, 2),
            "relative" | "mean_matrix" => (Self::Relative, 2),
            "row_scores" => (Self::RowScores, 1),
            "normalized" => (Self::Normalized, 2),
            "weights" => (Self::Weights, 1),
            "compare" => (Self::Compare, 3),
            "element_weights" => (Self::ElementWeights, 2),
            "decision" => (Self::Decision, 1),
            "optimum" => (Self::Optimum, 0),
            _ => return None,
        })
    }
}

/// `name[key][key]...`
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuantityPath {
    pub quantity: Quantity,
    pub keys: Vec<String>,
}

impl QuantityPath {
    pub fn parse(text: &str) -> std::result::Result<Self, String> {
        let (name, mut rest) = text.find('[').map_or((text, ""), |k| text.split_at(k));
        let (quantity, arity) =
            Quantity::from_name(name).ok_or_else(|| format!("unknown quantity `{name}`"))?;
        let mut keys = Vec::new();
        while !rest.is_empty() {
            let inner = rest
                .strip_prefix('[')
                .and_then(|r| r.split_once(']'))
                .ok_or_else(|| format!("malformed index in `{text}`"))?;
            keys.push(inner.0.to_owned());
            rest = inner.1;
        }
        if keys.len() != arity {
            return Err(format!(
                "`{name}` takes {arity} indices, found {}",
                keys.len()
            ));
        }
        Ok(Self { quantity, keys })
    }

    /// Reads the addressed value out of a report.
    pub fn lookup(&self, r: &DecisionReport) -> Option<FixtureValue> {
        let k = &self.keys;
        let params = r.parameter_weights.parameters.clone();
        let p = |s: &str| params.position(s);
        let x = |s: &str| r.decision.universe.position(s);
        use FixtureValue::Number;
        Some(match self.quantity {
            Quantity::NsSet => {
                FixtureValue::Triple(r.ns_set.0.get(p(&k[0])?, x(&k[1])?).to_array())
            }
            Quantity::Relative => Number(r.relative_matrix.get(p(&k[0])?, p(&k[1])?)),
            Quantity::RowScores => Number(r.parameter_weights.scores[p(&k[0])?]),
            Quantity::Normalized => {
                Number(r.parameter_weights.normalized.get(p(&k[0])?, p(&k[1])?))
            }
            Quantity::Weights => Number(r.parameter_weights.weights[p(&k[0])?]),
            Quantity::Compare => Number(r.compare_matrices[p(&k[0])?].get(x(&k[1])?, x(&k[2])?)),
            Quantity::ElementWeights => Number(r.element_weights[p(&k[0])?].weights[x(&k[1])?]),
            Quantity::Decision => Number(r.decision.scores[x(&k[0])?]),
            Quantity::Optimum => FixtureValue::Element(r.optimum().to_owned()),
        })
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Erratum {
    pub printed: FixtureValue,
    pub corrected: FixtureValue,
    #[serde(default)]
    pub note: String,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawFixture {
    kind: String,
    #[serde(default)]
    name: String,
    #[serde(default)]
    tolerance: Option<f64>,
    #[serde(default)]
    expected: UniqueMap<FixtureValue>,
    #[serde(default)]
    errata: UniqueMap<Erratum>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Fixture {
    pub name: String,
    pub tolerance: f64,
    pub expected: Vec<(QuantityPath, String, FixtureValue)>,
    pub errata: Vec<(QuantityPath, String, Erratum)>,
}

pub fn parse_fixture(text: &str) -> Result<Fixture> {
    let raw: RawFixture = serde_json::from_str(text).map_err(json_error)?;
    if raw.kind != "fixture" {
        return Err(Error::validation(
            "kind",
            format!("expected `fixture`, found `{}`", raw.kind),
        ));
    }
    let tolerance = raw.tolerance.unwrap_or(DEFAULT_TOLERANCE);
    if !(tolerance.is_finite() && tolerance >= 0.0) {
        return Err(Error::validation(
            "tolerance",
            "must be a non-negative number",
        ));
    }
    let path_of = |section: &str, key: &str| {
        QuantityPath::parse(key).map_err(|m| Error::validation(format!("{section}.{key}"), m))
    };
    let expected = raw
        .expected
        .0
        .into_iter()
        .map(|(key, v)| Ok((path_of("expected", &key)?, key, v)))
        .collect::<Result<Vec<_>>>()?;
    let errata = raw
        .errata
        .0
        .into_iter()
        .map(|(key, v)| Ok((path_of("errata", &key)?, key, v)))
        .collect::<Result<Vec<_>>>()?;
    if let Some((_, key, _)) = errata
        .iter()
        .find(|(_, key, _)| expected.iter().any(|(_, k, _)| k == key))
    {
        return Err(Error::validation(
            format!("errata.{key}"),
            "path is listed under both expected and errata",
        ));
    }
    Ok(Fixture {
        name: raw.name,
        tolerance,
        expected,
        errata,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum EntryStatus {
    /// Computed value agrees with the printed one.
    Match,
    /// Computed value disagrees with the printed one.
    Mismatch,
    /// Known misprint; computed value agrees with the correction.
    Erratum,
    /// Known misprint, but the computed value disagrees with the correction.
    ErratumMismatch,
    /// The path names an id the report does not have.
    Missing,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ComparisonEntry {
    pub path: String,
    pub printed: FixtureValue,
    pub computed: Option<FixtureValue>,
    pub corrected: Option<FixtureValue>,
    pub status: EntryStatus,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct FixtureComparison {
    pub name: String,
    pub tolerance: f64,
    pub entries: Vec<ComparisonEntry>,
    /// Whether the computed optimum equals the printed one, when the
    /// fixture states it.
    pub optimum_agrees: Option<bool>,
}

impl FixtureComparison {
    pub fn count(&self, status: EntryStatus) -> usize {
        self.entries.iter().filter(|e| e.status == status).count()
    }

    /// Entries that neither match nor confirm a known misprint.
    pub fn failures(&self) -> impl Iterator<Item = &ComparisonEntry> {
        self.entries
            .iter()
            .filter(|e| !matches!(e.status, EntryStatus::Match | EntryStatus::Erratum))
    }

    pub fn entry(&self, path: &str) -> Option<&ComparisonEntry> {
        self.entries.iter().find(|e| e.path == path)
    }
}

impl Fixture {
    pub fn compare(&self, report: &DecisionReport) -> FixtureComparison {
        let tol = self.tolerance;
        let mut entries = Vec::new();
        for (path, key, printed) in &self.expected {
            let computed = path.lookup(report);
            let status = match &computed {
                None => EntryStatus::Missing,
                Some(c) if c.close_to(printed, tol) => EntryStatus::Match,
                Some(_) => EntryStatus::Mismatch,
            };
            entries.push(ComparisonEntry {
                path: key.clone(),
                printed: printed.clone(),
                computed,
                corrected: None,
                status,
                note: None,
            });
        }
        for (path, key, erratum) in &self.errata {
            let computed = path.lookup(report);
            let status = match &computed {
                None => EntryStatus::Missing,
                Some(c) if c.close_to(&erratum.corrected, tol) => EntryStatus::Erratum,
                Some(_) => EntryStatus::ErratumMismatch,
            };
            entries.push(ComparisonEntry {
                path: key.clone(),
                printed: erratum.printed.clone(),
                computed,
                corrected: Some(erratum.corrected.clone()),
                status,
                note: Some(erratum.note.clone()).filter(|n| !n.is_empty()),
            });
        }
        let optimum_agrees = self
            .expected
            .iter()
            .find(|(p, _, _)| p.quantity == Quantity::Optimum)
            .map(|(_, _, v)| *v == FixtureValue::Element(report.optimum().to_owned()));
        FixtureComparison {
            name: self.name.clone(),
            tolerance: tol,
            entries,
            optimum_agrees,
        }
    }
}
