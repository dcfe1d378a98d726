use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Per-component tolerance used by set equality.
pub const EQ_TOLERANCE: f64 = 1e-9;

/// Truth, indeterminacy and falsity degrees of one element, each in `[0, 1]`.
///
/// The three degrees are independent; no constraint is placed on their sum.
///
/// `1 − I` is carried next to `I` and the complement swaps the two, so a
/// double complement restores `I` bit for bit instead of computing
/// `1 − (1 − I)`.
#[derive(Debug, Clone, Copy, Serialize, Deserialize)]
#[serde(try_from = "[f64; 3]", into = "[f64; 3]")]
pub struct NeutrosophicTriple {
    t: f64,
    i: f64,
    f: f64,
    i_reflected: f64,
}

impl NeutrosophicTriple {
    /// The "absent" value `(0, 1, 1)`; bottom of the neutrosophic soft subset order.
    pub const ABSENT: Self = Self {
        t: 0.0,
        i: 1.0,
        f: 1.0,
        i_reflected: 0.0,
    };

    /// `(1, 0, 0)`; top of the order.
    pub const FULL: Self = Self {
        t: 1.0,
        i: 0.0,
        f: 0.0,
        i_reflected: 1.0,
    };

    /// `(0, 0, 0)`, the all-zero value used by the older null soft set.
    pub const ZERO: Self = Self {
        t: 0.0,
        i: 0.0,
        f: 0.0,
        i_reflected: 1.0,
    };

    pub fn new(t: f64, i: f64, f: f64) -> Result<Self> {
        check_unit("truth", t)?;
        check_unit("indeterminacy", i)?;
        check_unit("falsity", f)?;
        Ok(Self::from_unit(t, i, f))
    }

    /// Builds a triple from components already known to lie in `[0, 1]`.
    pub(crate) fn from_unit(t: f64, i: f64, f: f64) -> Self {
        debug_assert!(
            [t, i, f].iter().all(|v| (0.0..=1.0).contains(v)),
            "({t}, {i}, {f}) out of range"
        );
        Self {
            t,
            i,
            f,
            i_reflected: 1.0 - i,
        }
    }

    #[inline]
    pub fn t(&self) -> f64 {
        self.t
    }

    #[inline]
    pub fn i(&self) -> f64 {
        self.i
    }

    #[inline]
    pub fn f(&self) -> f64 {
        self.f
    }

    pub fn to_array(self) -> [f64; 3] {
        [self.t, self.i, self.f]
    }

    /// Componentwise `(T ∨, I ∧, F ∧)`.
    pub fn join(self, other: Self) -> Self {
        Self {
            t: self.t.max(other.t),
            i: self.i.min(other.i),
            f: self.f.min(other.f),
            i_reflected: self.i_reflected.max(other.i_reflected),
        }
    }

    /// Componentwise `(T ∧, I ∨, F ∨)`.
    pub fn meet(self, other: Self) -> Self {
        Self {
            t: self.t.min(other.t),
            i: self.i.max(other.i),
            f: self.f.max(other.f),
            i_reflected: self.i_reflected.min(other.i_reflected),
        }
    }

    /// `(F, 1 − I, T)`.
    pub fn complement(self) -> Self {
        Self {
            t: self.f,
            i: self.i_reflected,
            f: self.t,
            i_reflected: self.i,
        }
    }

    /// `(F, I, T)`.
    pub(crate) fn with_swapped_truth(self) -> Self {
        Self {
            t: self.f,
            f: self.t,
            ..self
        }
    }

    /// Clause-wise difference: each component is the positive gap in the
    /// "better" direction, or zero.
    pub fn difference(self, other: Self) -> Self {
        let t = if self.t > other.t {
            self.t - other.t
        } else {
            0.0
        };
        let i = if self.i < other.i {
            other.i - self.i
        } else {
            0.0
        };
        let f = if self.f < other.f {
            other.f - self.f
        } else {
            0.0
        };
        Self::from_unit(t, i, f)
    }

    /// `T ≤ T'`, `I ≥ I'`, `F ≥ F'`.
    pub fn is_below(self, other: Self) -> bool {
        self.t <= other.t && self.i >= other.i && self.f >= other.f
    }

    pub fn approx_eq(self, other: Self, tol: f64) -> bool {
        (self.t - other.t).abs() <= tol
            && (self.i - other.i).abs() <= tol
            && (self.f - other.f).abs() <= tol
    }
}

fn check_unit(component: &'static str, value: f64) -> Result<()> {
    if (0.0..=1.0).contains(&value) {
        Ok(())
    } else {
        Err(Error::ComponentOutOfRange { component, value })
    }
}

impl PartialEq for NeutrosophicTriple {
    fn eq(&self, other: &Self) -> bool {
        self.t == other.t && self.i == other.i && self.f == other.f
    }
}

impl TryFrom<[f64; 3]> for NeutrosophicTriple {
    type Error = Error;

    fn try_from([t, i, f]: [f64; 3]) -> Result<Self> {
        Self::new(t, i, f)
    }
}

impl From<NeutrosophicTriple> for [f64; 3] {
    fn from(v: NeutrosophicTriple) -> Self {
        v.to_array()
    }
}

impl fmt::Display for NeutrosophicTriple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<{}, {}, {}>", self.t, self.i, self.f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tr(t: f64, i: f64, f: f64) -> NeutrosophicTriple {
        NeutrosophicTriple::new(t, i, f).unwrap()
    }

    #[test]
    fn rejects_out_of_range_components() {
        assert!(NeutrosophicTriple::new(1.2, 0.0, 0.0).is_err());
        assert!(NeutrosophicTriple::new(0.0, -0.1, 0.0).is_err());
        assert!(NeutrosophicTriple::new(0.0, 0.0, f64::NAN).is_err());
        assert!(NeutrosophicTriple::new(1.0, 1.0, 1.0).is_ok());
    }

    #[test]
    fn sum_is_unconstrained() {
        assert!(NeutrosophicTriple::new(0.9, 0.9, 0.9).is_ok());
    }

    #[test]
    fn join_of_decision_maker_triples() {
        let joined = tr(0.4, 0.2, 0.7).join(tr(0.5, 0.2, 0.3));
        assert_eq!(joined, tr(0.5, 0.2, 0.3));
    }

    #[test]
    fn complement_reflects_indeterminacy() {
        let c = tr(0.5, 0.6, 0.3).complement();
        assert!(c.approx_eq(tr(0.3, 0.4, 0.5), 1e-15));
    }

    #[test]
    fn double_complement_is_exact() {
        for v in [tr(0.1, 0.2, 0.3), tr(0.7, 0.3, 0.0), tr(0.0, 0.1, 1.0)] {
            assert_eq!(v.complement().complement().to_array(), v.to_array());
        }
    }

    #[test]
    fn difference_clauses() {
        let d = tr(0.7, 0.2, 0.1).difference(tr(0.4, 0.5, 0.6));
        assert!(d.approx_eq(tr(0.3, 0.3, 0.5), 1e-12));
        let d = tr(0.2, 0.9, 0.9).difference(tr(0.6, 0.1, 0.2));
        assert_eq!(d, NeutrosophicTriple::ZERO);
    }

    #[test]
    fn order_direction_on_indeterminacy() {
        assert!(tr(0.3, 0.6, 0.5).is_below(tr(0.5, 0.2, 0.1)));
        assert!(!tr(0.5, 0.2, 0.1).is_below(tr(0.3, 0.6, 0.5)));
        assert!(NeutrosophicTriple::ABSENT.is_below(NeutrosophicTriple::FULL));
    }
}
