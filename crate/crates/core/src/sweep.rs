//! Batch verification over many generator pairs.
//!
//! Each pair is independent, so [`sweep`] fans the work out with rayon when
//! the `parallel` feature is enabled and falls back to a plain loop
//! otherwise. [`sweep_sequential`] is always available for comparison.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

use num_integer::Integer;

use crate::error::Result;
use crate::gap_poly::{
    epsilon_symmetry_violations, reciprocal_duality, verify_functional_equation,
};
use crate::graded::{rank_nullity_check, series_identity_check};
use crate::semigroup::{build_table, GeneratorSet};

/// All coprime `(a, b)` with `2 <= a < b <= max_b`, ordered by `b` then `a`.
pub fn coprime_pairs(max_b: u64) -> Vec<(u64, u64)> {
    (3..=max_b).flat_map(|b| (2..b).filter(move |a| a.gcd(&b) == 1).map(move |a| (a, b))).collect()
}

/// Outcome of every check for a single pair.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PairReport {
    pub a: u64,
    pub b: u64,
    pub frobenius: i64,
    pub genus: u64,
    /// `F = ab - a - b` and `G = (a-1)(b-1)/2` from the table.
    pub closed_forms: bool,
    pub functional_equation: bool,
    pub reciprocal_duality: bool,
    /// No epsilon violations and `G = (F+1)/2`.
    pub symmetric: bool,
    /// Rank-nullity for every `n <= 3ab`.
    pub rank_nullity: bool,
    /// Hilbert series identity to order `ab + 10`.
    pub series_identity: bool,
}

impl PairReport {
    pub fn passed(&self) -> bool {
        self.closed_forms
            && self.functional_equation
            && self.reciprocal_duality
            && self.symmetric
            && self.rank_nullity
            && self.series_identity
    }
}

pub fn check_pair(a: u64, b: u64) -> Result<PairReport> {
    let generators = GeneratorSet::pair(a, b)?;
    let table = build_table(&generators)?;
    let (lo, hi) = (a.min(b), a.max(b));
    let frobenius = table.frobenius();
    let genus = table.genus();
    let closed_forms = frobenius == (lo * hi - lo - hi) as i64 && genus == (lo - 1) * (hi - 1) / 2;
    let symmetric =
        epsilon_symmetry_violations(&generators)?.is_empty() && 2 * genus as i64 == frobenius + 1;
    Ok(PairReport {
        a,
        b,
        frobenius,
        genus,
        closed_forms,
        functional_equation: verify_functional_equation(a, b)?,
        reciprocal_duality: reciprocal_duality(a, b)?,
        symmetric,
        rank_nullity: rank_nullity_check(a, b, 3 * a * b)?,
        series_identity: series_identity_check(a, b, (a * b + 10) as usize)?,
    })
}

/// Applies `f` to every item, in parallel when the `parallel` feature is on.
/// Output order matches input order either way.
pub fn batch_map<T, R, F>(items: &[T], f: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> R + Sync + Send,
{
    #[cfg(feature = "parallel")]
    {
        items.par_iter().map(f).collect()
    }
    #[cfg(not(feature = "parallel"))]
    {
        items.iter().map(f).collect()
    }
}

/// Checks every coprime pair with `b <= max_b`.
pub fn sweep(max_b: u64) -> Result<Vec<PairReport>> {
    batch_map(&coprime_pairs(max_b), |&(a, b)| check_pair(a, b)).into_iter().collect()
}

pub fn sweep_sequential(max_b: u64) -> Result<Vec<PairReport>> {
    coprime_pairs(max_b).into_iter().map(|(a, b)| check_pair(a, b)).collect()
}

#[cfg(feature = "parallel")]
pub fn sweep_parallel(max_b: u64) -> Result<Vec<PairReport>> {
    coprime_pairs(max_b).into_par_iter().map(|(a, b)| check_pair(a, b)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pair_counts_match_brute_force() {
        let brute = |max_b: u64| {
            let mut count = 0;
            for b in 2..=max_b {
                for a in 2..b {
                    if (1..=a).filter(|d| a % d == 0 && b % d == 0).count() == 1 {
                        count += 1;
                    }
                }
            }
            count
        };
        for max_b in [2, 3, 10, 20, 30, 40] {
            assert_eq!(coprime_pairs(max_b).len(), brute(max_b), "max_b = {max_b}");
        }
        assert_eq!(coprime_pairs(20).len(), 108);
    }

    #[test]
    fn single_pair_report() {
        let r = check_pair(3, 5).unwrap();
        assert_eq!((r.frobenius, r.genus), (7, 4));
        assert!(r.passed());
        assert!(check_pair(5, 3).unwrap().passed());
        assert!(check_pair(4, 6).is_err());
    }

    #[test]
    fn sweep_paths_agree() {
        let seq = sweep_sequential(12).unwrap();
        assert_eq!(sweep(12).unwrap(), seq);
        #[cfg(feature = "parallel")]
        assert_eq!(sweep_parallel(12).unwrap(), seq);
        assert!(seq.iter().all(PairReport::passed));
    }
}
