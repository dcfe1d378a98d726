//! The original neutrosophic soft set operations, kept as a comparison
//! target for the algebra in [`crate::ns`].
//!
//! Here a soft set is partial: it is defined on a subset `A` of the
//! parameters only, negated parameters are tracked explicitly, the null set
//! is all-zero, and union/intersection average the indeterminacy degrees.
//! Several of the laws that were claimed for these operations do not hold;
//! [`verify_maji_propositions`] checks each one and reports witnesses.

mod fixture;
mod verify;

use std::collections::HashSet;
use std::fmt;

use serde::ser::{SerializeMap, SerializeStruct};
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::ns::{pair_identifier, validate_identifier, NeutrosophicTriple, ParameterSet, Universe};

pub use fixture::houses_example;
pub use verify::{
    verify_maji_propositions, PropositionOutcome, PropositionReport, PropositionStatus,
    VerifyConfig, Witness,
};

/// A parameter together with its negation flag (`¬e`).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MajiParameter {
    name: String,
    negated: bool,
}

impl MajiParameter {
    pub fn new(name: impl Into<String>) -> Result<Self> {
        let name = name.into();
        validate_identifier(&name)?;
        Ok(Self {
            name,
            negated: false,
        })
    }

    /// Parses `name` or `¬name`.
    pub fn parse(text: &str) -> Result<Self> {
        match text.strip_prefix(crate::ns::NEGATION_PREFIX) {
            Some(rest) => Ok(Self::new(rest)?.negate()),
            None => Self::new(text),
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn is_negated(&self) -> bool {
        self.negated
    }

    pub fn negate(&self) -> Self {
        Self {
            name: self.name.clone(),
            negated: !self.negated,
        }
    }
}

impl fmt::Display for MajiParameter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.negated {
            write!(f, "{}{}", crate::ns::NEGATION_PREFIX, self.name)
        } else {
            f.write_str(&self.name)
        }
    }
}

/// Ordered set of (possibly negated) parameters.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MajiParameterSet(Vec<MajiParameter>);

impl MajiParameterSet {
    pub fn new(params: Vec<MajiParameter>) -> Result<Self> {
        if params.is_empty() {
            return Err(Error::EmptyDomain {
                kind: "parameter subset",
            });
        }
        let mut seen = HashSet::new();
        for p in &params {
            if !seen.insert(p) {
                return Err(Error::DuplicateIdentifier {
                    kind: "parameter",
                    id: p.to_string(),
                });
            }
        }
        Ok(Self(params))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, MajiParameter> {
        self.0.iter()
    }

    pub fn position(&self, p: &MajiParameter) -> Option<usize> {
        self.0.iter().position(|q| q == p)
    }

    pub fn contains(&self, p: &MajiParameter) -> bool {
        self.position(p).is_some()
    }

    pub fn is_subset_of(&self, other: &MajiParameterSet) -> bool {
        self.0.iter().all(|p| other.contains(p))
    }

    /// Same members, ignoring order.
    pub fn same_members(&self, other: &MajiParameterSet) -> bool {
        self.len() == other.len() && self.is_subset_of(other)
    }
}

impl From<&ParameterSet> for MajiParameterSet {
    fn from(params: &ParameterSet) -> Self {
        // ParameterSet identifiers are already validated and distinct
        Self(
            params
                .iter()
                .map(|name| MajiParameter {
                    name: name.to_owned(),
                    negated: false,
                })
                .collect(),
        )
    }
}

impl fmt::Display for MajiParameterSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (k, p) in self.0.iter().enumerate() {
            if k > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{p}")?;
        }
        f.write_str("}")
    }
}

/// The NOT set: every parameter flagged negated. Involutive.
pub fn not_set(params: &MajiParameterSet) -> MajiParameterSet {
    MajiParameterSet(params.iter().map(MajiParameter::negate).collect())
}

/// A soft set `(F, A)` defined on the parameter subset `A` only.
#[derive(Debug, Clone, PartialEq)]
pub struct MajiNsSet {
    universe: Universe,
    parameters: MajiParameterSet,
    grid: Vec<NeutrosophicTriple>,
}

impl MajiNsSet {
    pub fn from_fn<F>(universe: Universe, parameters: MajiParameterSet, mut entry: F) -> Self
    where
        F: FnMut(usize, usize) -> NeutrosophicTriple,
    {
        let m = universe.len();
        let grid = (0..parameters.len() * m)
            .map(|k| entry(k / m, k % m))
            .collect();
        Self {
            universe,
            parameters,
            grid,
        }
    }

    pub fn universe(&self) -> &Universe {
        &self.universe
    }

    pub fn parameters(&self) -> &MajiParameterSet {
        &self.parameters
    }

    #[inline]
    pub fn get(&self, parameter: usize, element: usize) -> NeutrosophicTriple {
        self.grid[parameter * self.universe.len() + element]
    }

    pub fn row(&self, parameter: usize) -> &[NeutrosophicTriple] {
        let m = self.universe.len();
        &self.grid[parameter * m..(parameter + 1) * m]
    }

    fn row_of(&self, p: &MajiParameter) -> Option<&[NeutrosophicTriple]> {
        self.parameters.position(p).map(|k| self.row(k))
    }

    /// Parameter set equality (as sets) and entrywise equality within `tol`.
    pub fn approx_eq(&self, other: &MajiNsSet, tol: f64) -> bool {
        self.universe == other.universe
            && self.parameters.same_members(&other.parameters)
            && self.parameters.iter().enumerate().all(|(k, p)| {
                let theirs = other.row_of(p).expect("same members");
                self.row(k)
                    .iter()
                    .zip(theirs)
                    .all(|(a, b)| a.approx_eq(*b, tol))
            })
    }
}

fn same_universe(h: &MajiNsSet, g: &MajiNsSet) -> Result<()> {
    if h.universe != g.universe {
        return Err(Error::DomainMismatch(format!(
            "universes differ: {} vs {}",
            h.universe, g.universe
        )));
    }
    Ok(())
}

fn averaged(i_h: f64, i_g: f64) -> f64 {
    (i_h + i_g) / 2.0
}

fn union_entry(a: NeutrosophicTriple, b: NeutrosophicTriple) -> NeutrosophicTriple {
    NeutrosophicTriple::from_unit(a.t().max(b.t()), averaged(a.i(), b.i()), a.f().min(b.f()))
}

fn intersection_entry(a: NeutrosophicTriple, b: NeutrosophicTriple) -> NeutrosophicTriple {
    NeutrosophicTriple::from_unit(a.t().min(b.t()), averaged(a.i(), b.i()), a.f().max(b.f()))
}

/// Complement: parameters negated, `(T, I, F) ↦ (F, I, T)`.
pub fn maji_complement(h: &MajiNsSet) -> MajiNsSet {
    MajiNsSet {
        universe: h.universe.clone(),
        parameters: not_set(&h.parameters),
        grid: h.grid.iter().map(|v| v.with_swapped_truth()).collect(),
    }
}

/// Null set over `A`: every triple `(0, 0, 0)`.
pub fn maji_null(universe: Universe, parameters: MajiParameterSet) -> MajiNsSet {
    MajiNsSet::from_fn(universe, parameters, |_, _| NeutrosophicTriple::ZERO)
}

/// `A ⊆ B` and `T ≤`, `I ≤`, `F ≥` on every `(e, x)` with `e ∈ A`.
pub fn maji_is_subset(h: &MajiNsSet, g: &MajiNsSet) -> Result<bool> {
    Ok(maji_subset_violation(h, g)?.is_none())
}

/// First reason `h` is not a subset of `g`, if any.
pub fn maji_subset_violation(h: &MajiNsSet, g: &MajiNsSet) -> Result<Option<String>> {
    same_universe(h, g)?;
    for (k, p) in h.parameters.iter().enumerate() {
        let Some(theirs) = g.row_of(p) else {
            return Ok(Some(format!("parameter {p} is not in {}", g.parameters)));
        };
        for (x, (a, b)) in h.universe.iter().zip(h.row(k).iter().zip(theirs)) {
            let broken = if a.t() > b.t() {
                Some(("T", "≤", a.t(), b.t()))
            } else if a.i() > b.i() {
                Some(("I", "≤", a.i(), b.i()))
            } else if a.f() < b.f() {
                Some(("F", "≥", a.f(), b.f()))
            } else {
                None
            };
            if let Some((comp, rel, lhs, rhs)) = broken {
                return Ok(Some(format!(
                    "{comp}({p})({x}): {lhs} {rel} {rhs} does not hold"
                )));
            }
        }
    }
    Ok(None)
}

/// Union over `A ∪ B`: copies on `A − B` and `B − A`, `(max T, mean I, min F)`
/// on `A ∩ B`.
pub fn maji_union(h: &MajiNsSet, g: &MajiNsSet) -> Result<MajiNsSet> {
    same_universe(h, g)?;
    let mut params: Vec<MajiParameter> = h.parameters.0.clone();
    params.extend(
        g.parameters
            .iter()
            .filter(|p| !h.parameters.contains(p))
            .cloned(),
    );
    let m = h.universe.len();
    let mut grid = Vec::with_capacity(params.len() * m);
    for p in &params {
        match (h.row_of(p), g.row_of(p)) {
            (Some(a), Some(b)) => grid.extend(a.iter().zip(b).map(|(&a, &b)| union_entry(a, b))),
            (Some(a), None) => grid.extend_from_slice(a),
            (None, Some(b)) => grid.extend_from_slice(b),
            (None, None) => unreachable!("parameter comes from one operand"),
        }
    }
    Ok(MajiNsSet {
        universe: h.universe.clone(),
        parameters: MajiParameterSet(params),
        grid,
    })
}

/// Intersection over `A ∩ B`: `(min T, mean I, max F)`.
///
/// Fails with [`Error::EmptyIntersection`] when `A ∩ B` is empty.
pub fn maji_intersection(h: &MajiNsSet, g: &MajiNsSet) -> Result<MajiNsSet> {
    same_universe(h, g)?;
    let mut params = Vec::new();
    let mut grid = Vec::new();
    for (k, p) in h.parameters.iter().enumerate() {
        if let Some(b) = g.row_of(p) {
            params.push(p.clone());
            grid.extend(
                h.row(k)
                    .iter()
                    .zip(b)
                    .map(|(&a, &b)| intersection_entry(a, b)),
            );
        }
    }
    if params.is_empty() {
        return Err(Error::EmptyIntersection);
    }
    Ok(MajiNsSet {
        universe: h.universe.clone(),
        parameters: MajiParameterSet(params),
        grid,
    })
}

fn pair_product<F>(h: &MajiNsSet, g: &MajiNsSet, entry: F) -> Result<MajiNsSet>
where
    F: Fn(NeutrosophicTriple, NeutrosophicTriple) -> NeutrosophicTriple,
{
    same_universe(h, g)?;
    let params = h
        .parameters
        .iter()
        .flat_map(|a| {
            g.parameters.iter().map(move |b| MajiParameter {
                name: pair_identifier(&a.to_string(), &b.to_string()),
                negated: false,
            })
        })
        .collect();
    let n_right = g.parameters.len();
    Ok(MajiNsSet::from_fn(
        h.universe.clone(),
        MajiParameterSet(params),
        |pair, x| entry(h.get(pair / n_right, x), g.get(pair % n_right, x)),
    ))
}

/// AND over `A × B`: `(min T, mean I, max F)` of `H(α)` and `G(β)`.
pub fn maji_and(h: &MajiNsSet, g: &MajiNsSet) -> Result<MajiNsSet> {
    pair_product(h, g, intersection_entry)
}

/// OR over `A × B`: `(max T, mean I, min F)` of `H(α)` and `G(β)`.
pub fn maji_or(h: &MajiNsSet, g: &MajiNsSet) -> Result<MajiNsSet> {
    pair_product(h, g, union_entry)
}

impl Serialize for MajiParameterSet {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(self.0.iter().map(ToString::to_string))
    }
}

struct Rows<'a>(&'a MajiNsSet);

struct Row<'a>(&'a Universe, &'a [NeutrosophicTriple]);

impl Serialize for Rows<'_> {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let set = self.0;
        let mut map = s.serialize_map(Some(set.parameters.len()))?;
        for (k, p) in set.parameters.iter().enumerate() {
            map.serialize_entry(&p.to_string(), &Row(&set.universe, set.row(k)))?;
        }
        map.end()
    }
}

impl Serialize for Row<'_> {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut map = s.serialize_map(Some(self.1.len()))?;
        for (x, v) in self.0.iter().zip(self.1) {
            map.serialize_entry(x, v)?;
        }
        map.end()
    }
}

impl Serialize for MajiNsSet {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("MajiNsSet", 4)?;
        st.serialize_field("kind", "maji")?;
        st.serialize_field("universe", &self.universe)?;
        st.serialize_field("parameters", &self.parameters)?;
        st.serialize_field("values", &Rows(self))?;
        st.end()
    }
}
