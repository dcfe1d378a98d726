use serde::Deserialize;

use super::json_error;
use super::nsset::triple_at;
use super::unique::UniqueMap;
use crate::error::{Error, Result};
use crate::maji::{MajiNsSet, MajiParameter, MajiParameterSet};
use crate::ns::{NeutrosophicTriple, Universe};

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawMaji {
    kind: String,
    universe: Vec<String>,
    parameters: Vec<String>,
    values: UniqueMap<UniqueMap<Vec<f64>>>,
}

/// Parses a `"kind": "maji"` document. Every (parameter, element) entry
/// must be present; negated parameters are written `¬name`.
pub fn parse_maji_ns_set(text: &str) -> Result<MajiNsSet> {
    let raw: RawMaji = serde_json::from_str(text).map_err(json_error)?;
    if raw.kind != "maji" {
        return Err(Error::validation(
            "kind",
            format!("expected `maji`, found `{}`", raw.kind),
        ));
    }
    let universe = Universe::new(raw.universe).map_err(|e| Error::validation("universe", e))?;
    let params = raw
        .parameters
        .iter()
        .map(|p| MajiParameter::parse(p))
        .collect::<Result<Vec<_>>>()
        .and_then(MajiParameterSet::new)
        .map_err(|e| Error::validation("parameters", e))?;
    let m = universe.len();
    let mut grid: Vec<Option<NeutrosophicTriple>> = vec![None; params.len() * m];
    for (p, row) in raw.values.0 {
        let pk = MajiParameter::parse(&p)
            .ok()
            .and_then(|mp| params.position(&mp))
            .ok_or_else(|| Error::validation(format!("values.{p}"), "parameter is not declared"))?;
        for (x, v) in row.0 {
            let path = format!("values.{p}.{x}");
            let xk = universe
                .position(&x)
                .ok_or_else(|| Error::validation(&path, "element is not declared"))?;
            grid[pk * m + xk] = Some(triple_at(&path, &v)?);
        }
    }
    if let Some(k) = grid.iter().position(Option::is_none) {
        let p = params.iter().nth(k / m).expect("index in range");
        return Err(Error::validation(
            format!("values.{p}.{}", universe.ids()[k % m]),
            "missing entry",
        ));
    }
    Ok(MajiNsSet::from_fn(universe, params, |p, x| {
        grid[p * m + x].expect("checked above")
    }))
}

pub fn serialize_maji_ns_set(h: &MajiNsSet) -> String {
    let mut text = serde_json::to_string_pretty(h).expect("maji sets always serialize");
    text.push('\n');
    text
}
