use crate::ns::{NeutrosophicTriple, Universe};

use super::{MajiNsSet, MajiParameter, MajiParameterSet};

const HOUSES: [&str; 5] = ["h1", "h2", "h3", "h4", "h5"];

const ATTRIBUTES: [(&str, [[f64; 3]; 5]); 4] = [
    (
        "beautiful",
        [
            [0.5, 0.6, 0.3],
            [0.4, 0.7, 0.6],
            [0.6, 0.2, 0.3],
            [0.7, 0.3, 0.2],
            [0.8, 0.2, 0.3],
        ],
    ),
    (
        "wooden",
        [
            [0.6, 0.3, 0.5],
            [0.7, 0.4, 0.3],
            [0.8, 0.1, 0.2],
            [0.7, 0.1, 0.3],
            [0.8, 0.3, 0.6],
        ],
    ),
    (
        "costly",
        [
            [0.7, 0.4, 0.3],
            [0.6, 0.7, 0.2],
            [0.7, 0.2, 0.5],
            [0.5, 0.2, 0.6],
            [0.7, 0.3, 0.4],
        ],
    ),
    (
        "moderate",
        [
            [0.8, 0.6, 0.4],
            [0.7, 0.9, 0.6],
            [0.7, 0.6, 0.4],
            [0.7, 0.8, 0.6],
            [0.9, 0.5, 0.7],
        ],
    ),
];

/// Five houses rated on four attributes; the reference data set for the
/// counterexamples.
pub fn houses_example() -> MajiNsSet {
    let universe = Universe::new(HOUSES).expect("static universe");
    let params = MajiParameterSet::new(
        ATTRIBUTES
            .iter()
            .map(|(name, _)| MajiParameter::new(*name).expect("static name"))
            .collect(),
    )
    .expect("static parameters");
    MajiNsSet::from_fn(universe, params, |p, x| {
        let [t, i, f] = ATTRIBUTES[p].1[x];
        NeutrosophicTriple::new(t, i, f).expect("static triple")
    })
}
