use std::fmt::Write as _;

use serde::ser::{SerializeMap, SerializeStruct};
use serde::{Deserialize, Serialize, Serializer};

use super::format::format_exact;
use super::json_error;
use super::unique::UniqueMap;
use crate::error::{Error, Result};
use crate::ns::{NeutrosophicTriple, NsSet, ParameterSet, Universe};

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawNsSet {
    #[serde(default)]
    kind: Option<String>,
    universe: Vec<String>,
    parameters: Vec<String>,
    #[serde(default)]
    values: UniqueMap<UniqueMap<Vec<f64>>>,
}

pub(crate) fn triple_at(path: &str, v: &[f64]) -> Result<NeutrosophicTriple> {
    let [t, i, f] = v else {
        return Err(Error::validation(
            path,
            format!("expected [t, i, f], found {} numbers", v.len()),
        ));
    };
    NeutrosophicTriple::new(*t, *i, *f).map_err(|e| Error::validation(path, e))
}

/// Parses an ns-set document. Omitted entries are `(0, 1, 1)`.
pub fn parse_ns_set(text: &str) -> Result<NsSet> {
    let raw: RawNsSet = serde_json::from_str(text).map_err(json_error)?;
    if let Some(kind) = raw.kind.as_deref().filter(|k| *k != "ns-set") {
        return Err(Error::validation(
            "kind",
            format!("expected `ns-set`, found `{kind}`"),
        ));
    }
    let universe = Universe::new(raw.universe).map_err(|e| Error::validation("universe", e))?;
    let parameters =
        ParameterSet::new(raw.parameters).map_err(|e| Error::validation("parameters", e))?;
    let m = universe.len();
    let mut grid = vec![NeutrosophicTriple::ABSENT; parameters.len() * m];
    for (p, row) in raw.values.0 {
        let pk = parameters
            .position(&p)
            .ok_or_else(|| Error::validation(format!("values.{p}"), "parameter is not declared"))?;
        for (x, v) in row.0 {
            let path = format!("values.{p}.{x}");
            let xk = universe
                .position(&x)
                .ok_or_else(|| Error::validation(&path, "element is not declared"))?;
            grid[pk * m + xk] = triple_at(&path, &v)?;
        }
    }
    Ok(NsSet::from_fn(universe, parameters, |p, x| grid[p * m + x]))
}

fn json_str(s: &str) -> String {
    serde_json::to_string(s).expect("strings always serialize")
}

fn id_list(ids: &[String]) -> String {
    let items: Vec<String> = ids.iter().map(|s| json_str(s)).collect();
    format!("[{}]", items.join(", "))
}

/// Canonical text: declaration order, absent entries and all-absent
/// parameters omitted, shortest round-trip numbers.
pub fn serialize_ns_set(f: &NsSet) -> String {
    let mut out = String::from("{\n");
    let _ = writeln!(out, "  \"universe\": {},", id_list(f.universe().ids()));
    let _ = writeln!(out, "  \"parameters\": {},", id_list(f.parameters().ids()));
    let rows: Vec<(usize, Vec<usize>)> = (0..f.parameters().len())
        .map(|p| {
            let present = (0..f.universe().len())
                .filter(|&x| f.get(p, x) != NeutrosophicTriple::ABSENT)
                .collect::<Vec<_>>();
            (p, present)
        })
        .filter(|(_, present)| !present.is_empty())
        .collect();
    if rows.is_empty() {
        out.push_str("  \"values\": {}\n}\n");
        return out;
    }
    out.push_str("  \"values\": {\n");
    for (r, (p, present)) in rows.iter().enumerate() {
        let _ = writeln!(out, "    {}: {{", json_str(&f.parameters().ids()[*p]));
        for (c, &x) in present.iter().enumerate() {
            let [t, i, fa] = f.get(*p, x).to_array();
            let _ = write!(
                out,
                "      {}: [{}, {}, {}]",
                json_str(&f.universe().ids()[x]),
                format_exact(t),
                format_exact(i),
                format_exact(fa)
            );
            out.push_str(if c + 1 < present.len() { ",\n" } else { "\n" });
        }
        out.push_str(if r + 1 < rows.len() {
            "    },\n"
        } else {
            "    }\n"
        });
    }
    out.push_str("  }\n}\n");
    out
}

struct Values<'a>(&'a NsSet);

struct Row<'a>(&'a NsSet, usize);

impl Serialize for Values<'_> {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let f = self.0;
        let mut map = s.serialize_map(None)?;
        for (p, id) in f.parameters().iter().enumerate() {
            if f.row(p).iter().any(|&v| v != NeutrosophicTriple::ABSENT) {
                map.serialize_entry(id, &Row(f, p))?;
            }
        }
        map.end()
    }
}

impl Serialize for Row<'_> {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut map = s.serialize_map(None)?;
        for (x, v) in self.0.universe().iter().zip(self.0.row(self.1)) {
            if *v != NeutrosophicTriple::ABSENT {
                map.serialize_entry(x, v)?;
            }
        }
        map.end()
    }
}

/// Serde form of an ns-set, same shape as the document.
pub fn serialize_ns_set_value<S: Serializer>(
    f: &NsSet,
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    let mut st = s.serialize_struct("NsSet", 3)?;
    st.serialize_field("universe", f.universe())?;
    st.serialize_field("parameters", f.parameters())?;
    st.serialize_field("values", &Values(f))?;
    st.end()
}
