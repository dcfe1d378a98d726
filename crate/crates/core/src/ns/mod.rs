//! Neutrosophic soft sets over a finite universe and their algebra.
//!
//! A neutrosophic soft set is total on its parameter set: parameters that
//! carry no information map every element to the absent triple `(0, 1, 1)`.
//! Under this convention the null set is the bottom of the subset order and
//! the usual lattice, absorption and De Morgan laws hold.

mod domain;
mod set;
mod triple;

pub use domain::{pair_identifier, validate_identifier, ParameterSet, Universe, NEGATION_PREFIX};
pub use set::{
    and_product, complement, difference, equals, equals_within, intersection, is_subset,
    null_ns_set, or_product, union, universal_ns_set, NsSet,
};
pub use triple::{NeutrosophicTriple, EQ_TOLERANCE};
