#![allow(clippy::needless_range_loop)]

//! Formula-literal recomputation of the decision pipelines on plain arrays.
//! Shares no code with the library.

#[derive(Debug, Clone)]
pub struct Pipeline {
    pub c: Vec<f64>,
    pub normalized: Vec<Vec<f64>>,
    pub w: Vec<f64>,
    /// `compare[k][i][j]` for parameter `k`.
    pub compare: Vec<Vec<Vec<f64>>>,
    /// `element_weights[k][j]`.
    pub element_weights: Vec<Vec<f64>>,
    pub decision: Vec<f64>,
    pub optimum: usize,
}

pub fn pipeline(f: &[Vec<[f64; 3]>], d: &[Vec<f64>]) -> Pipeline {
    let n = d.len();
    let m = f[0].len();

    let mut c = vec![0.0; n];
    for i in 0..n {
        for j in 0..n {
            c[i] += d[i][j];
        }
    }

    let mut normalized = vec![vec![0.0; n]; n];
    for i in 0..n {
        for j in 0..n {
            normalized[i][j] = d[i][j] / c[i];
        }
    }

    let mut w = vec![0.0; n];
    for j in 0..n {
        let mut s = 0.0;
        for i in 0..n {
            s += normalized[i][j];
        }
        w[j] = s / n as f64;
    }

    let mut compare = vec![vec![vec![0.0; m]; m]; n];
    let mut element_weights = vec![vec![0.0; m]; n];
    for k in 0..n {
        for i in 0..m {
            for j in 0..m {
                let (a, b) = (f[k][i], f[k][j]);
                compare[k][i][j] = ((a[0] - b[0]) + (b[1] - a[1]) + (b[2] - a[2]) + 1.0) / 2.0;
            }
        }
        for j in 0..m {
            let mut s = 0.0;
            for i in 0..m {
                s += compare[k][i][j];
            }
            element_weights[k][j] = s / m as f64;
        }
    }

    let mut decision = vec![0.0; m];
    for j in 0..m {
        let mut s = 0.0;
        for k in 0..n {
            s += w[k] * element_weights[k][j];
        }
        decision[j] = s / n as f64;
    }

    let mut optimum = 0;
    for j in 1..m {
        if decision[j] > decision[optimum] {
            optimum = j;
        }
    }

    Pipeline {
        c,
        normalized,
        w,
        compare,
        element_weights,
        decision,
        optimum,
    }
}

pub fn mean_matrix(ds: &[Vec<Vec<f64>>]) -> Vec<Vec<f64>> {
    let n = ds[0].len();
    let mut out = vec![vec![0.0; n]; n];
    for i in 0..n {
        for j in 0..n {
            let mut s = 0.0;
            for d in ds {
                s += d[i][j];
            }
            out[i][j] = s / ds.len() as f64;
        }
    }
    out
}

/// Componentwise `(min T, max I, max F)` over all makers.
pub fn aggregate(fs: &[Vec<Vec<[f64; 3]>>]) -> Vec<Vec<[f64; 3]>> {
    let mut out = fs[0].clone();
    for f in &fs[1..] {
        for (k, row) in f.iter().enumerate() {
            for (x, v) in row.iter().enumerate() {
                let o = &mut out[k][x];
                o[0] = o[0].min(v[0]);
                o[1] = o[1].max(v[1]);
                o[2] = o[2].max(v[2]);
            }
        }
    }
    out
}
