//! Execution strategy for the data-parallel sweeps (scan rows, Lefschetz
//! `(i, d)` pairs, weight-set sweeps, minor enumeration).
//!
//! With the `parallel` feature enabled, [`Execution::Parallel`] fans work out
//! over the rayon global pool. Without it, every strategy runs sequentially.
//! Results are always returned in input order, so reports are identical under
//! both strategies.

use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Execution {
    Sequential,
    #[default]
    Parallel,
}

impl Execution {
    /// True when this strategy will actually run on more than one thread.
    pub fn is_parallel(self) -> bool {
        cfg!(feature = "parallel") && self == Execution::Parallel
    }

    /// Maps `f` over `items`, preserving order.
    pub fn map<T, R, F>(self, items: Vec<T>, f: F) -> Vec<R>
    where
        T: Send,
        R: Send,
        F: Fn(T) -> R + Sync + Send,
    {
        #[cfg(feature = "parallel")]
        if self == Execution::Parallel {
            use rayon::prelude::*;
            return items.into_par_iter().map(f).collect();
        }
        items.into_iter().map(f).collect()
    }

    /// Like [`Execution::map`] but over a borrowed slice.
    pub fn map_ref<'a, T, R, F>(self, items: &'a [T], f: F) -> Vec<R>
    where
        T: Sync,
        R: Send,
        F: Fn(&'a T) -> R + Sync + Send,
    {
        #[cfg(feature = "parallel")]
        if self == Execution::Parallel {
            use rayon::prelude::*;
            return items.par_iter().map(f).collect();
        }
        items.iter().map(f).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn both_strategies_preserve_order() {
        let input: Vec<u64> = (0..500).collect();
        let seq = Execution::Sequential.map(input.clone(), |x| x * x);
        let par = Execution::Parallel.map(input.clone(), |x| x * x);
        assert_eq!(seq, par);
        assert_eq!(par[17], 289);
        let by_ref = Execution::Parallel.map_ref(&input, |x| x + 1);
        assert_eq!(by_ref[0], 1);
    }
}
