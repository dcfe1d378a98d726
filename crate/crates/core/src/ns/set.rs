use crate::error::{Error, Result};

use super::domain::{ParameterSet, Universe};
use super::triple::{NeutrosophicTriple, EQ_TOLERANCE};

/// A neutrosophic soft set: every parameter maps to a neutrosophic set over
/// the universe.
///
/// Storage is a dense parameter-major grid. Entries equal to
/// [`NeutrosophicTriple::ABSENT`] are the ones a document omits.
#[derive(Debug, Clone, PartialEq)]
pub struct NsSet {
    universe: Universe,
    parameters: ParameterSet,
    grid: Vec<NeutrosophicTriple>,
}

impl NsSet {
    /// Builds a set from a generator over `(parameter index, element index)`.
    pub fn from_fn<F>(universe: Universe, parameters: ParameterSet, mut entry: F) -> Self
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

    /// Builds a set from rows ordered like `parameters`, each row ordered
    /// like `universe`.
    pub fn from_rows(
        universe: Universe,
        parameters: ParameterSet,
        rows: Vec<Vec<NeutrosophicTriple>>,
    ) -> Result<Self> {
        if rows.len() != parameters.len() {
            return Err(Error::InvalidMatrix(format!(
                "{} rows for {} parameters",
                rows.len(),
                parameters.len()
            )));
        }
        if let Some((k, row)) = rows
            .iter()
            .enumerate()
            .find(|(_, r)| r.len() != universe.len())
        {
            return Err(Error::InvalidMatrix(format!(
                "row for `{}` has {} entries, universe has {}",
                parameters.ids()[k],
                row.len(),
                universe.len()
            )));
        }
        Ok(Self {
            universe,
            parameters,
            grid: rows.into_iter().flatten().collect(),
        })
    }

    pub fn universe(&self) -> &Universe {
        &self.universe
    }

    pub fn parameters(&self) -> &ParameterSet {
        &self.parameters
    }

    #[inline]
    pub fn get(&self, parameter: usize, element: usize) -> NeutrosophicTriple {
        self.grid[parameter * self.universe.len() + element]
    }

    pub fn get_by_id(&self, parameter: &str, element: &str) -> Result<NeutrosophicTriple> {
        let p = self
            .parameters
            .position(parameter)
            .ok_or_else(|| Error::UnknownParameter(parameter.to_owned()))?;
        let x = self
            .universe
            .position(element)
            .ok_or_else(|| Error::UnknownElement(element.to_owned()))?;
        Ok(self.get(p, x))
    }

    /// The neutrosophic set assigned to one parameter, in universe order.
    pub fn row(&self, parameter: usize) -> &[NeutrosophicTriple] {
        let m = self.universe.len();
        &self.grid[parameter * m..(parameter + 1) * m]
    }

    pub fn row_by_id(&self, parameter: &str) -> Result<&[NeutrosophicTriple]> {
        let p = self
            .parameters
            .position(parameter)
            .ok_or_else(|| Error::UnknownParameter(parameter.to_owned()))?;
        Ok(self.row(p))
    }

    pub fn entries(&self) -> &[NeutrosophicTriple] {
        &self.grid
    }

    fn same_domain(&self, other: &NsSet) -> Result<()> {
        if self.universe != other.universe {
            return Err(Error::DomainMismatch(format!(
                "universes differ: {} vs {}",
                self.universe, other.universe
            )));
        }
        if self.parameters != other.parameters {
            return Err(Error::DomainMismatch(format!(
                "parameter sets differ: {} vs {}",
                self.parameters, other.parameters
            )));
        }
        Ok(())
    }

    fn zip_with<F>(&self, other: &NsSet, op: F) -> Result<NsSet>
    where
        F: Fn(NeutrosophicTriple, NeutrosophicTriple) -> NeutrosophicTriple,
    {
        self.same_domain(other)?;
        Ok(NsSet {
            universe: self.universe.clone(),
            parameters: self.parameters.clone(),
            grid: self
                .grid
                .iter()
                .zip(&other.grid)
                .map(|(&a, &b)| op(a, b))
                .collect(),
        })
    }

    fn map(&self, op: impl Fn(NeutrosophicTriple) -> NeutrosophicTriple) -> NsSet {
        NsSet {
            universe: self.universe.clone(),
            parameters: self.parameters.clone(),
            grid: self.grid.iter().map(|&a| op(a)).collect(),
        }
    }

    fn product_with<F>(&self, other: &NsSet, op: F) -> Result<NsSet>
    where
        F: Fn(NeutrosophicTriple, NeutrosophicTriple) -> NeutrosophicTriple,
    {
        if self.universe != other.universe {
            return Err(Error::DomainMismatch(format!(
                "universes differ: {} vs {}",
                self.universe, other.universe
            )));
        }
        let n_right = other.parameters.len();
        Ok(NsSet::from_fn(
            self.universe.clone(),
            self.parameters.product(&other.parameters),
            |pair, x| op(self.get(pair / n_right, x), other.get(pair % n_right, x)),
        ))
    }
}

/// Every entry `(0, 1, 1)`.
pub fn null_ns_set(universe: Universe, parameters: ParameterSet) -> NsSet {
    NsSet::from_fn(universe, parameters, |_, _| NeutrosophicTriple::ABSENT)
}

/// Every entry `(1, 0, 0)`.
pub fn universal_ns_set(universe: Universe, parameters: ParameterSet) -> NsSet {
    NsSet::from_fn(universe, parameters, |_, _| NeutrosophicTriple::FULL)
}

/// Neutrosophic soft subset: `T_f ≤ T_g`, `I_f ≥ I_g`, `F_f ≥ F_g` everywhere.
pub fn is_subset(f: &NsSet, g: &NsSet) -> Result<bool> {
    f.same_domain(g)?;
    Ok(f.grid.iter().zip(&g.grid).all(|(&a, &b)| a.is_below(b)))
}

/// Mutual inclusion, evaluated per component at [`EQ_TOLERANCE`].
pub fn equals(f: &NsSet, g: &NsSet) -> Result<bool> {
    equals_within(f, g, EQ_TOLERANCE)
}

pub fn equals_within(f: &NsSet, g: &NsSet, tol: f64) -> Result<bool> {
    f.same_domain(g)?;
    Ok(f.grid
        .iter()
        .zip(&g.grid)
        .all(|(&a, &b)| a.approx_eq(b, tol)))
}

pub fn union(f: &NsSet, g: &NsSet) -> Result<NsSet> {
    f.zip_with(g, NeutrosophicTriple::join)
}

pub fn intersection(f: &NsSet, g: &NsSet) -> Result<NsSet> {
    f.zip_with(g, NeutrosophicTriple::meet)
}

/// `(T, I, F) ↦ (F, 1 − I, T)`; parameters keep their names.
pub fn complement(f: &NsSet) -> NsSet {
    f.map(NeutrosophicTriple::complement)
}

pub fn difference(f: &NsSet, g: &NsSet) -> Result<NsSet> {
    f.zip_with(g, NeutrosophicTriple::difference)
}

/// OR product over `E × E'`: `(T ∨, I ∧, F ∧)` of `f(e)` and `g(e')`.
pub fn or_product(f: &NsSet, g: &NsSet) -> Result<NsSet> {
    f.product_with(g, NeutrosophicTriple::join)
}

/// AND product over `E × E'`: `(T ∧, I ∨, F ∨)` of `f(e)` and `g(e')`.
pub fn and_product(f: &NsSet, g: &NsSet) -> Result<NsSet> {
    f.product_with(g, NeutrosophicTriple::meet)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tr(t: f64, i: f64, f: f64) -> NeutrosophicTriple {
        NeutrosophicTriple::new(t, i, f).unwrap()
    }

    fn domain(m: usize, n: usize) -> (Universe, ParameterSet) {
        (
            Universe::new((1..=m).map(|k| format!("h{k}"))).unwrap(),
            ParameterSet::new((1..=n).map(|k| format!("e{k}"))).unwrap(),
        )
    }

    fn single(t: f64, i: f64, f: f64) -> NsSet {
        let (x, e) = domain(1, 1);
        NsSet::from_fn(x, e, |_, _| tr(t, i, f))
    }

    fn sample() -> NsSet {
        let (x, e) = domain(3, 2);
        let vals = [
            [0.5, 0.6, 0.3],
            [0.4, 0.7, 0.2],
            [0.6, 0.2, 0.3],
            [0.7, 0.3, 0.2],
            [0.8, 0.2, 0.3],
            [0.1, 0.9, 0.0],
        ];
        NsSet::from_fn(x, e, |p, k| {
            let [t, i, f] = vals[p * 3 + k];
            tr(t, i, f)
        })
    }

    #[test]
    fn null_and_universal_bound_everything() {
        let f = sample();
        let (x, e) = domain(3, 2);
        let null = null_ns_set(x.clone(), e.clone());
        let top = universal_ns_set(x, e);
        assert!(null
            .entries()
            .iter()
            .all(|&v| v == NeutrosophicTriple::ABSENT));
        assert!(top.entries().iter().all(|&v| v == NeutrosophicTriple::FULL));
        assert!(is_subset(&null, &f).unwrap());
        assert!(is_subset(&f, &top).unwrap());
        assert_eq!(complement(&top), null);
        assert_eq!(complement(&null), top);
        assert!(!equals(&null, &top).unwrap());
    }

    #[test]
    fn subset_examples() {
        let f = single(0.3, 0.6, 0.5);
        let g = single(0.5, 0.2, 0.1);
        assert!(is_subset(&f, &g).unwrap());
        assert!(!is_subset(&g, &f).unwrap());
        assert!(is_subset(&f, &f).unwrap());
        assert!(equals(&f, &f).unwrap());
    }

    #[test]
    fn mismatched_domains_are_rejected() {
        let (x, e) = domain(2, 2);
        let (y, _) = domain(3, 2);
        let (_, e3) = domain(2, 3);
        let a = null_ns_set(x.clone(), e.clone());
        assert!(matches!(
            union(&a, &null_ns_set(y.clone(), e.clone())),
            Err(Error::DomainMismatch(_))
        ));
        assert!(matches!(
            is_subset(&a, &null_ns_set(x.clone(), e3.clone())),
            Err(Error::DomainMismatch(_))
        ));
        // products only need matching universes
        assert!(or_product(&a, &null_ns_set(x, e3)).is_ok());
        assert!(and_product(&a, &null_ns_set(y, e)).is_err());
    }

    #[test]
    fn identities_with_null_and_universal() {
        let f = sample();
        let (x, e) = domain(3, 2);
        let null = null_ns_set(x.clone(), e.clone());
        let top = universal_ns_set(x, e);
        assert_eq!(union(&f, &null).unwrap(), f);
        assert_eq!(union(&f, &top).unwrap(), top);
        assert_eq!(intersection(&f, &null).unwrap(), null);
        assert_eq!(intersection(&f, &top).unwrap(), f);
        assert_eq!(intersection(&f, &f).unwrap(), f);
    }

    #[test]
    fn union_of_decision_maker_entries() {
        let u = union(&single(0.4, 0.2, 0.7), &single(0.5, 0.2, 0.3)).unwrap();
        assert_eq!(u.get(0, 0), tr(0.5, 0.2, 0.3));
    }

    #[test]
    fn intersection_of_three_makers() {
        let a = single(0.4, 0.2, 0.7);
        let b = single(0.5, 0.2, 0.3);
        let c = single(0.4, 0.5, 0.7);
        let r = intersection(&intersection(&a, &b).unwrap(), &c).unwrap();
        assert_eq!(r.get(0, 0), tr(0.4, 0.5, 0.7));
    }

    #[test]
    fn complement_examples() {
        let f = sample();
        assert_eq!(complement(&complement(&f)), f);
        let c = complement(&single(0.5, 0.6, 0.3));
        assert!(c.get(0, 0).approx_eq(tr(0.3, 0.4, 0.5), 1e-15));
        assert_eq!(c.parameters().ids(), ["e1"]);
    }

    #[test]
    fn difference_examples() {
        let f = sample();
        assert!(difference(&f, &f)
            .unwrap()
            .entries()
            .iter()
            .all(|&v| v == NeutrosophicTriple::ZERO));
        let d = difference(&single(0.7, 0.2, 0.1), &single(0.4, 0.5, 0.6)).unwrap();
        assert!(d.get(0, 0).approx_eq(tr(0.3, 0.3, 0.5), 1e-12));
        let d = difference(&single(0.2, 0.9, 0.9), &single(0.6, 0.1, 0.2)).unwrap();
        assert_eq!(d.get(0, 0), NeutrosophicTriple::ZERO);
    }

    fn two_param(first: [f64; 3], second: [f64; 3]) -> NsSet {
        let (x, e) = domain(1, 2);
        NsSet::from_fn(x, e, |p, _| {
            let [t, i, f] = if p == 0 { first } else { second };
            tr(t, i, f)
        })
    }

    #[test]
    fn products_pair_parameters() {
        let f = two_param([0.5, 0.6, 0.3], [0.0, 1.0, 1.0]);
        let g = two_param([0.0, 1.0, 1.0], [0.6, 0.3, 0.5]);
        let or = or_product(&f, &g).unwrap();
        assert_eq!(or.parameters().len(), 4);
        assert_eq!(or.get_by_id("(e1,e2)", "h1").unwrap(), tr(0.6, 0.3, 0.3));
        let and = and_product(&f, &g).unwrap();
        assert_eq!(and.get_by_id("(e1,e2)", "h1").unwrap(), tr(0.5, 0.6, 0.5));

        let (x, e) = domain(1, 2);
        let null = null_ns_set(x.clone(), e.clone());
        let prod = or_product(&null, &null).unwrap();
        assert_eq!(prod, null_ns_set(x, e.product(&e)));
    }

    #[test]
    fn and_product_diagonal_is_identity() {
        let f = sample();
        let p = and_product(&f, &f).unwrap();
        for (k, e) in f.parameters().iter().enumerate() {
            let diag = format!("({e},{e})");
            for (j, x) in f.universe().iter().enumerate() {
                assert_eq!(p.get_by_id(&diag, x).unwrap(), f.get(k, j));
            }
        }
    }
}
