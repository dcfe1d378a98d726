use std::path::{Path, PathBuf};

use serde::Deserialize;

use super::{json_error, load_ns_set, load_saaty};
use crate::decision::ReciprocityPolicy;
use crate::error::{Error, Result};
use crate::group::DecisionMakerInput;

#[derive(Debug, Clone, PartialEq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MakerEntry {
    pub id: String,
    /// ns-set document, relative to the panel file.
    pub nsset: PathBuf,
    /// Comparison grid, relative to the panel file.
    pub saaty: PathBuf,
}

#[derive(Debug, Clone, PartialEq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PanelConfig {
    pub kind: String,
    pub makers: Vec<MakerEntry>,
}

pub fn parse_panel_config(text: &str) -> Result<PanelConfig> {
    let cfg: PanelConfig = serde_json::from_str(text).map_err(json_error)?;
    if cfg.kind != "panel" {
        return Err(Error::validation(
            "kind",
            format!("expected `panel`, found `{}`", cfg.kind),
        ));
    }
    if cfg.makers.is_empty() {
        return Err(Error::validation("makers", Error::EmptyPanel));
    }
    for (k, m) in cfg.makers.iter().enumerate() {
        if cfg.makers[..k].iter().any(|o| o.id == m.id) {
            return Err(Error::validation(
                format!("makers[{k}].id"),
                format!("duplicate maker id `{}`", m.id),
            ));
        }
    }
    Ok(cfg)
}

impl PanelConfig {
    /// Loads every maker's documents, resolving paths against `base`.
    pub fn load_makers(
        &self,
        base: &Path,
        policy: ReciprocityPolicy,
    ) -> Result<Vec<DecisionMakerInput>> {
        self.makers
            .iter()
            .map(|m| {
                let f = load_ns_set(&base.join(&m.nsset))?;
                let d = load_saaty(&base.join(&m.saaty), policy)?;
                Ok(DecisionMakerInput::new(m.id.clone(), f, d))
            })
            .collect()
    }
}
