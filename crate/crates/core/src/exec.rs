//! Sequential / data-parallel execution switch.
//!
//! Parallel work is split over independent items (one per parameter, one
//! per random instance) and merged back in input order, so both modes
//! return bit-identical results. Without the `parallel` feature every mode
//! runs sequentially.

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Execution {
    Sequential,
    #[default]
    Parallel,
}

impl Execution {
    /// Whether parallel execution is compiled in.
    pub const fn parallel_available() -> bool {
        cfg!(feature = "parallel")
    }

    /// Maps `op` over `0..len`, collecting results in index order.
    pub fn map_indexed<T, F>(self, len: usize, op: F) -> Vec<T>
    where
        T: Send,
        F: Fn(usize) -> T + Sync + Send,
    {
        match self {
            #[cfg(feature = "parallel")]
            Execution::Parallel => {
                use rayon::prelude::*;
                (0..len).into_par_iter().map(op).collect()
            }
            _ => (0..len).map(op).collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn both_modes_preserve_order() {
        let seq = Execution::Sequential.map_indexed(1000, |k| k * k);
        let par = Execution::Parallel.map_indexed(1000, |k| k * k);
        assert_eq!(seq, par);
        assert_eq!(seq[999], 999 * 999);
    }
}
