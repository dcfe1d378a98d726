//! Worked example data, with the published intermediate tables.

pub const ELEMENTS: [&str; 5] = ["x1", "x2", "x3", "x4", "x5"];

pub const BLOUSE_PARAMETERS: [&str; 4] = ["bright", "cheap", "colorful", "cotton"];

pub const BLOUSE: [[[f64; 3]; 5]; 4] = [
    [
        [0.5, 0.6, 0.3],
        [0.4, 0.7, 0.2],
        [0.6, 0.2, 0.3],
        [0.7, 0.3, 0.2],
        [0.8, 0.2, 0.3],
    ],
    [
        [0.6, 0.3, 0.5],
        [0.7, 0.4, 0.3],
        [0.8, 0.1, 0.2],
        [0.7, 0.1, 0.3],
        [0.8, 0.3, 0.4],
    ],
    [
        [0.7, 0.4, 0.3],
        [0.6, 0.1, 0.2],
        [0.7, 0.2, 0.5],
        [0.5, 0.2, 0.6],
        [0.7, 0.3, 0.2],
    ],
    [
        [0.4, 0.3, 0.7],
        [0.5, 0.4, 0.2],
        [0.7, 0.4, 0.3],
        [0.2, 0.4, 0.5],
        [0.6, 0.4, 0.4],
    ],
];

pub const BLOUSE_SAATY: [[f64; 4]; 4] = [
    [1.0, 1.0 / 3.0, 5.0, 1.0 / 3.0],
    [3.0, 1.0, 2.0, 3.0],
    [1.0 / 5.0, 1.0 / 2.0, 1.0, 2.0],
    [3.0, 1.0 / 3.0, 1.0 / 2.0, 1.0],
];

pub const CANDIDATE_PARAMETERS: [&str; 4] = ["e1", "e2", "e3", "e4"];

pub const MAKERS: [&str; 3] = ["d1", "d2", "d3"];

pub const CANDIDATES: [[[[f64; 3]; 5]; 4]; 3] = [
    [
        [
            [0.4, 0.2, 0.7],
            [0.5, 0.6, 0.2],
            [0.7, 0.3, 0.3],
            [0.6, 0.5, 0.4],
            [0.3, 0.5, 0.5],
        ],
        [
            [0.3, 0.5, 0.2],
            [0.4, 0.4, 0.3],
            [0.5, 0.7, 0.8],
            [0.7, 0.1, 0.3],
            [0.6, 0.3, 0.2],
        ],
        [
            [0.7, 0.4, 0.3],
            [0.6, 0.1, 0.5],
            [0.5, 0.2, 0.4],
            [0.2, 0.2, 0.6],
            [0.3, 0.3, 0.6],
        ],
        [
            [0.7, 0.3, 0.5],
            [0.3, 0.5, 0.3],
            [0.2, 0.4, 0.3],
            [0.4, 0.2, 0.5],
            [0.5, 0.2, 0.6],
        ],
    ],
    [
        [
            [0.5, 0.2, 0.3],
            [0.3, 0.5, 0.6],
            [0.4, 0.3, 0.3],
            [0.2, 0.5, 0.4],
            [0.5, 0.5, 0.5],
        ],
        [
            [0.5, 0.4, 0.6],
            [0.7, 0.2, 0.5],
            [0.6, 0.3, 0.5],
            [0.7, 0.2, 0.3],
            [0.6, 0.4, 0.2],
        ],
        [
            [0.6, 0.2, 0.5],
            [0.4, 0.4, 0.6],
            [0.2, 0.5, 0.4],
            [0.3, 0.5, 0.4],
            [0.3, 0.3, 0.6],
        ],
        [
            [0.3, 0.4, 0.5],
            [0.4, 0.3, 0.2],
            [0.4, 0.4, 0.3],
            [0.4, 0.2, 0.5],
            [0.2, 0.5, 0.6],
        ],
    ],
    [
        [
            [0.4, 0.5, 0.7],
            [0.5, 0.3, 0.4],
            [0.7, 0.3, 0.5],
            [0.4, 0.5, 0.3],
            [0.7, 0.8, 0.6],
        ],
        [
            [0.6, 0.2, 0.6],
            [0.4, 0.3, 0.5],
            [0.5, 0.4, 0.7],
            [0.3, 0.1, 0.5],
            [0.4, 0.3, 0.1],
        ],
        [
            [0.4, 0.3, 0.2],
            [0.6, 0.7, 0.2],
            [0.3, 0.5, 0.2],
            [0.6, 0.6, 0.4],
            [0.6, 0.5, 0.5],
        ],
        [
            [0.5, 0.3, 0.1],
            [0.2, 0.5, 0.2],
            [0.5, 0.5, 0.4],
            [0.5, 0.2, 0.5],
            [0.5, 0.3, 0.6],
        ],
    ],
];

pub const CANDIDATE_SAATY: [[[f64; 4]; 4]; 3] = [
    [
        [1.0, 3.0, 1.0 / 5.0, 2.0],
        [1.0 / 3.0, 1.0, 3.0, 6.0],
        [5.0, 1.0 / 3.0, 1.0, 1.0 / 5.0],
        [1.0 / 2.0, 1.0 / 6.0, 5.0, 1.0],
    ],
    [
        [1.0, 5.0, 1.0 / 7.0, 2.0],
        [1.0 / 5.0, 1.0, 1.0 / 2.0, 6.0],
        [7.0, 2.0, 1.0, 1.0 / 3.0],
        [1.0 / 2.0, 1.0 / 6.0, 3.0, 1.0],
    ],
    [
        [1.0, 3.0, 1.0 / 3.0, 4.0],
        [1.0 / 3.0, 1.0, 1.0 / 3.0, 1.0 / 6.0],
        [3.0, 3.0, 1.0, 1.0 / 2.0],
        [1.0 / 4.0, 6.0, 2.0, 1.0],
    ],
];

/// The printed aggregate table.
pub const PRINTED_AGGREGATE: [[[f64; 3]; 5]; 4] = [
    [
        [0.4, 0.5, 0.7],
        [0.3, 0.6, 0.6],
        [0.4, 0.3, 0.5],
        [0.2, 0.5, 0.5],
        [0.3, 0.8, 0.6],
    ],
    [
        [0.3, 0.5, 0.6],
        [0.4, 0.4, 0.5],
        [0.5, 0.7, 0.8],
        [0.3, 0.2, 0.5],
        [0.4, 0.4, 0.2],
    ],
    [
        [0.6, 0.5, 0.5],
        [0.4, 0.7, 0.6],
        [0.2, 0.5, 0.4],
        [0.2, 0.6, 0.6],
        [0.3, 0.5, 0.6],
    ],
    [
        [0.3, 0.4, 0.5],
        [0.2, 0.5, 0.3],
        [0.2, 0.5, 0.4],
        [0.4, 0.2, 0.5],
        [0.2, 0.5, 0.6],
    ],
];

pub const PRINTED_MEAN: [[f64; 4]; 4] = [
    [1.0, 3.67, 0.23, 2.67],
    [0.29, 1.0, 1.28, 4.06],
    [5.0, 1.78, 1.0, 0.34],
    [0.42, 4.06, 3.33, 1.0],
];

pub const HOUSE_ATTRIBUTES: [&str; 4] = ["beautiful", "wooden", "costly", "moderate"];

pub const HOUSES: [&str; 5] = ["h1", "h2", "h3", "h4", "h5"];

/// `(F,A) ∩ Φ` as published.
pub const HOUSES_MEET_NULL: [[[f64; 3]; 5]; 4] = [
    [
        [0.0, 0.3, 0.3],
        [0.0, 0.35, 0.6],
        [0.0, 0.1, 0.3],
        [0.0, 0.15, 0.2],
        [0.0, 0.1, 0.3],
    ],
    [
        [0.0, 0.15, 0.5],
        [0.0, 0.2, 0.3],
        [0.0, 0.05, 0.2],
        [0.0, 0.05, 0.3],
        [0.0, 0.15, 0.6],
    ],
    [
        [0.0, 0.2, 0.3],
        [0.0, 0.35, 0.2],
        [0.0, 0.1, 0.5],
        [0.0, 0.1, 0.6],
        [0.0, 0.15, 0.4],
    ],
    [
        [0.0, 0.3, 0.4],
        [0.0, 0.45, 0.6],
        [0.0, 0.3, 0.4],
        [0.0, 0.4, 0.6],
        [0.0, 0.25, 0.7],
    ],
];

/// `(F,A) ∪ Φ` as published.
pub const HOUSES_JOIN_NULL: [[[f64; 3]; 5]; 4] = [
    [
        [0.5, 0.3, 0.0],
        [0.4, 0.35, 0.0],
        [0.6, 0.1, 0.0],
        [0.7, 0.15, 0.0],
        [0.8, 0.1, 0.0],
    ],
    [
        [0.6, 0.15, 0.0],
        [0.7, 0.2, 0.0],
        [0.8, 0.05, 0.0],
        [0.7, 0.05, 0.0],
        [0.8, 0.15, 0.0],
    ],
    [
        [0.7, 0.2, 0.0],
        [0.6, 0.35, 0.0],
        [0.7, 0.1, 0.0],
        [0.5, 0.1, 0.0],
        [0.7, 0.15, 0.0],
    ],
    [
        [0.8, 0.3, 0.0],
        [0.7, 0.45, 0.0],
        [0.7, 0.3, 0.0],
        [0.7, 0.4, 0.0],
        [0.9, 0.25, 0.0],
    ],
];
