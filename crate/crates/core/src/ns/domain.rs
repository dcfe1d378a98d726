use std::collections::HashSet;
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};

/// Characters reserved for product parameter identifiers.
const RESERVED: [char; 3] = ['(', ')', ','];

/// Prefix marking a negated parameter in the older soft set notation.
pub const NEGATION_PREFIX: char = '¬';

/// Checks an identifier against the naming grammar.
///
/// An identifier is either a plain name (non-empty, no surrounding
/// whitespace, none of `(`, `)`, `,`, not starting with `¬`) or a pair
/// `(a,b)` of valid identifiers. Pairs are what products produce, so the
/// grammar keeps pair names unambiguous at any nesting depth.
pub fn validate_identifier(id: &str) -> Result<()> {
    let invalid = |reason| Error::InvalidIdentifier {
        id: id.to_owned(),
        reason,
    };
    if id.is_empty() {
        return Err(invalid("identifier is empty"));
    }
    if let Some(inner) = id.strip_prefix('(') {
        let inner = inner
            .strip_suffix(')')
            .ok_or_else(|| invalid("unbalanced parentheses"))?;
        let (left, right) = split_pair(inner).ok_or_else(|| invalid("malformed pair"))?;
        validate_identifier(left)?;
        return validate_identifier(right);
    }
    if id.trim() != id {
        return Err(invalid("leading or trailing whitespace"));
    }
    if id.contains(RESERVED) {
        return Err(invalid("contains one of the reserved characters ( ) ,"));
    }
    if id.starts_with(NEGATION_PREFIX) {
        return Err(invalid("the negation prefix is reserved"));
    }
    Ok(())
}

/// Splits `a,b` at the single comma outside any parentheses.
fn split_pair(inner: &str) -> Option<(&str, &str)> {
    let mut depth = 0usize;
    let mut split = None;
    for (pos, ch) in inner.char_indices() {
        match ch {
            '(' => depth += 1,
            ')' => depth = depth.checked_sub(1)?,
            ',' if depth == 0 && split.is_some() => return None,
            ',' if depth == 0 => split = Some(pos),
            _ => {}
        }
    }
    if depth != 0 {
        return None;
    }
    split.map(|pos| (&inner[..pos], &inner[pos + 1..]))
}

/// Identifier of the product parameter `(e, e')`.
pub fn pair_identifier(left: &str, right: &str) -> String {
    format!("({left},{right})")
}

fn check_ids(kind: &'static str, ids: &[String]) -> Result<()> {
    if ids.is_empty() {
        return Err(Error::EmptyDomain { kind });
    }
    let mut seen = HashSet::with_capacity(ids.len());
    for id in ids {
        validate_identifier(id)?;
        if !seen.insert(id.as_str()) {
            return Err(Error::DuplicateIdentifier {
                kind,
                id: id.clone(),
            });
        }
    }
    Ok(())
}

macro_rules! id_list {
    ($(#[$meta:meta])* $name:ident, $kind:literal) => {
        $(#[$meta])*
        #[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
        #[serde(transparent)]
        pub struct $name(Vec<String>);

        impl $name {
            pub fn new<I, S>(ids: I) -> Result<Self>
            where
                I: IntoIterator<Item = S>,
                S: Into<String>,
            {
                let ids: Vec<String> = ids.into_iter().map(Into::into).collect();
                check_ids($kind, &ids)?;
                Ok(Self(ids))
            }

            pub fn len(&self) -> usize {
                self.0.len()
            }

            pub fn is_empty(&self) -> bool {
                self.0.is_empty()
            }

            pub fn ids(&self) -> &[String] {
                &self.0
            }

            pub fn iter(&self) -> impl ExactSizeIterator<Item = &str> {
                self.0.iter().map(String::as_str)
            }

            pub fn position(&self, id: &str) -> Option<usize> {
                self.0.iter().position(|x| x == id)
            }

            pub fn contains(&self, id: &str) -> bool {
                self.position(id).is_some()
            }
        }

        impl fmt::Display for $name {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                write!(f, "{{{}}}", self.0.join(", "))
            }
        }
    };
}

id_list!(
    /// Finite ordered universe of alternatives. Order is canonical.
    Universe,
    "universe"
);

id_list!(
    /// Ordered set of parameters (criteria). Order is canonical.
    ParameterSet,
    "parameter set"
);

impl ParameterSet {
    /// `E × E'` in row-major order, each pair named `(e,e')`.
    pub fn product(&self, other: &ParameterSet) -> ParameterSet {
        let ids = self
            .iter()
            .flat_map(|a| other.iter().map(move |b| pair_identifier(a, b)))
            .collect();
        ParameterSet(ids)
    }
}
