//! Document formats and report rendering.
//!
//! Soft sets, panels and fixtures are JSON documents; relative parameter
//! matrices are comma separated grids that accept fraction literals.
//! Every error carries a locus: a line and column for syntax errors, a
//! field path or line for validation errors, and the file name when read
//! from disk.

mod fixture;
mod format;
mod maji;
mod nsset;
mod panel;
mod report;
mod saaty;
mod unique;

use std::path::Path;

use crate::decision::{ReciprocityPolicy, SaatyMatrix};
use crate::error::{Error, Result};
use crate::maji::MajiNsSet;
use crate::ns::NsSet;

pub use fixture::{
    parse_fixture, ComparisonEntry, EntryStatus, Erratum, Fixture, FixtureComparison, FixtureValue,
    Quantity, QuantityPath, DEFAULT_TOLERANCE,
};
pub use format::{format_exact, format_fixed};
pub use maji::{parse_maji_ns_set, serialize_maji_ns_set};
pub use nsset::{parse_ns_set, serialize_ns_set, serialize_ns_set_value};
pub use panel::{parse_panel_config, MakerEntry, PanelConfig};
pub use report::{
    render_decision_structured, render_decision_text, render_group_structured, render_group_text,
    render_propositions_structured, render_propositions_text, DEFAULT_PRECISION,
};
pub use saaty::{parse_entry, parse_parameter_matrix, parse_saaty};

pub(crate) fn json_error(e: serde_json::Error) -> Error {
    let locus = format!("line {}, column {}", e.line(), e.column());
    let message = e.to_string();
    let message = message
        .rsplit_once(" at line ")
        .map_or(message.as_str(), |(m, _)| m)
        .to_owned();
    Error::parse(locus, message)
}

/// Prefixes the locus of a document error with the file it came from.
pub fn in_file(path: &Path, e: Error) -> Error {
    let file = path.display();
    match e {
        Error::Parse { locus, message } => Error::Parse {
            locus: format!("{file}: {locus}"),
            message,
        },
        Error::Validation { locus, message } => Error::Validation {
            locus: format!("{file}: {locus}"),
            message,
        },
        other @ Error::Io { .. } => other,
        other => Error::Validation {
            locus: file.to_string(),
            message: other.to_string(),
        },
    }
}

pub fn read_text(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|source| Error::Io {
        locus: path.display().to_string(),
        source,
    })
}

fn load<T>(path: &Path, parse: impl FnOnce(&str) -> Result<T>) -> Result<T> {
    parse(&read_text(path)?).map_err(|e| in_file(path, e))
}

pub fn load_ns_set(path: &Path) -> Result<NsSet> {
    load(path, parse_ns_set)
}

pub fn load_maji_ns_set(path: &Path) -> Result<MajiNsSet> {
    load(path, parse_maji_ns_set)
}

pub fn load_saaty(path: &Path, policy: ReciprocityPolicy) -> Result<SaatyMatrix> {
    load(path, |t| parse_saaty(t, policy))
}

pub fn load_fixture(path: &Path) -> Result<Fixture> {
    load(path, parse_fixture)
}

/// Reads a panel file and every document it names.
pub fn load_panel(
    path: &Path,
    policy: ReciprocityPolicy,
) -> Result<Vec<crate::group::DecisionMakerInput>> {
    let cfg = load(path, parse_panel_config)?;
    let base = path.parent().unwrap_or_else(|| Path::new("."));
    cfg.load_makers(base, policy)
}

/// What a document holds, judged by its extension and `kind` field.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DocumentKind {
    NsSet,
    Maji,
    Panel,
    Fixture,
    Saaty,
}

#[derive(serde::Deserialize)]
struct KindProbe {
    #[serde(default)]
    kind: Option<String>,
}

pub fn document_kind(path: &Path, text: &str) -> Result<DocumentKind> {
    if path
        .extension()
        .is_some_and(|e| e.eq_ignore_ascii_case("csv"))
    {
        return Ok(DocumentKind::Saaty);
    }
    let probe: KindProbe = serde_json::from_str(text).map_err(json_error)?;
    Ok(match probe.kind.as_deref() {
        None | Some("ns-set") => DocumentKind::NsSet,
        Some("maji") => DocumentKind::Maji,
        Some("panel") => DocumentKind::Panel,
        Some("fixture") => DocumentKind::Fixture,
        Some(other) => {
            return Err(Error::validation(
                "kind",
                format!("unknown document kind `{other}`"),
            ))
        }
    })
}
