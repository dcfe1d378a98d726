#![allow(dead_code)]

pub mod oracle;
pub mod reference;

use std::path::PathBuf;

use nss_core::decision::{ReciprocityPolicy, SaatyMatrix};
use nss_core::ns::{NeutrosophicTriple, NsSet, ParameterSet, Universe};
use proptest::prelude::*;

pub fn fixture(rel: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("fixtures")
        .join(rel)
}

pub fn tr(v: [f64; 3]) -> NeutrosophicTriple {
    NeutrosophicTriple::new(v[0], v[1], v[2]).unwrap()
}

pub fn ns_set<const M: usize>(elements: &[&str], params: &[&str], rows: &[[[f64; 3]; M]]) -> NsSet {
    NsSet::from_fn(
        Universe::new(elements.iter().copied()).unwrap(),
        ParameterSet::new(params.iter().copied()).unwrap(),
        |p, x| tr(rows[p][x]),
    )
}

pub fn saaty<const N: usize>(params: &[&str], rows: &[[f64; N]]) -> SaatyMatrix {
    SaatyMatrix::new(
        ParameterSet::new(params.iter().copied()).unwrap(),
        rows.iter().map(|r| r.to_vec()).collect(),
        ReciprocityPolicy::Warn,
    )
    .unwrap()
}

pub fn rows_of<const M: usize>(rows: &[[[f64; 3]; M]]) -> Vec<Vec<[f64; 3]>> {
    rows.iter().map(|r| r.to_vec()).collect()
}

pub fn matrix_of<const N: usize>(rows: &[[f64; N]]) -> Vec<Vec<f64>> {
    rows.iter().map(|r| r.to_vec()).collect()
}

pub fn max_diff<'a>(
    a: impl IntoIterator<Item = &'a f64>,
    b: impl IntoIterator<Item = &'a f64>,
) -> f64 {
    a.into_iter()
        .zip(b)
        .map(|(x, y)| (x - y).abs())
        .fold(0.0, f64::max)
}

/// Components drawn from a coarse grid half the time so ties and exact
/// boundaries come up often.
pub fn component() -> impl Strategy<Value = f64> {
    prop_oneof![(0u32..=20).prop_map(|k| f64::from(k) / 20.0), 0.0..=1.0f64]
}

pub fn triple() -> impl Strategy<Value = NeutrosophicTriple> {
    (component(), component(), component())
        .prop_map(|(t, i, f)| NeutrosophicTriple::new(t, i, f).unwrap())
}

pub fn domain(m: usize, n: usize) -> (Universe, ParameterSet) {
    (
        Universe::new((1..=m).map(|k| format!("x{k}"))).unwrap(),
        ParameterSet::new((1..=n).map(|k| format!("e{k}"))).unwrap(),
    )
}

fn set_on(m: usize, n: usize) -> impl Strategy<Value = NsSet> {
    prop::collection::vec(triple(), m * n).prop_map(move |grid| {
        let (x, e) = domain(m, n);
        NsSet::from_fn(x, e, |p, k| grid[p * m + k])
    })
}

pub fn any_set() -> impl Strategy<Value = NsSet> {
    (1usize..=6, 1usize..=4).prop_flat_map(|(m, n)| set_on(m, n))
}

/// `k` sets over one shared random domain.
pub fn sets(k: usize) -> impl Strategy<Value = Vec<NsSet>> {
    (1usize..=6, 1usize..=4).prop_flat_map(move |(m, n)| prop::collection::vec(set_on(m, n), k))
}

/// Two sets over one universe with independent parameter sets.
pub fn product_pair() -> impl Strategy<Value = (NsSet, NsSet)> {
    (1usize..=5, 1usize..=3, 1usize..=3).prop_flat_map(|(m, a, b)| {
        (set_on(m, a), set_on(m, b)).prop_map(|(f, g)| {
            let params =
                ParameterSet::new((1..=g.parameters().len()).map(|k| format!("q{k}"))).unwrap();
            let g = NsSet::from_fn(g.universe().clone(), params, |p, x| g.get(p, x));
            (f, g)
        })
    })
}

/// A positive reciprocal matrix with entries from the 1-9 scale.
#[allow(clippy::needless_range_loop)]
pub fn saaty_matrix(n: usize) -> impl Strategy<Value = Vec<Vec<f64>>> {
    let scale = prop_oneof![
        (1u32..=9).prop_map(f64::from),
        (2u32..=9).prop_map(|k| 1.0 / f64::from(k))
    ];
    prop::collection::vec(scale, n * (n - 1) / 2).prop_map(move |upper| {
        let mut d = vec![vec![1.0; n]; n];
        let mut it = upper.into_iter();
        for i in 0..n {
            for j in i + 1..n {
                let v = it.next().unwrap();
                d[i][j] = v;
                d[j][i] = 1.0 / v;
            }
        }
        d
    })
}

/// A random ns-set with a matching comparison matrix.
pub fn decision_input() -> impl Strategy<Value = (NsSet, Vec<Vec<f64>>)> {
    (1usize..=6, 1usize..=4).prop_flat_map(|(m, n)| (set_on(m, n), saaty_matrix(n)))
}

pub fn set_rows(f: &NsSet) -> Vec<Vec<[f64; 3]>> {
    (0..f.parameters().len())
        .map(|p| f.row(p).iter().map(|v| v.to_array()).collect())
        .collect()
}
