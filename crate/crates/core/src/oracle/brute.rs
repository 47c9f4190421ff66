use std::collections::BTreeSet;

use num_bigint::BigUint;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::euclid::check_instance;
use crate::optimizer::{design, Classification, DesignResult};
use crate::profile::{enumerate_profiles, Profile};

use super::fast_b;

pub const DEFAULT_BRUTE_CAP: usize = 22;

/// The exact argmax of `B` over all of `N_{M,k}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OptimalSet {
    pub m: usize,
    pub k: usize,
    pub best_b: BigUint,
    /// Lexicographic order.
    pub argmax: Vec<Profile>,
    pub space_size: usize,
}

impl OptimalSet {
    pub fn contains(&self, p: &Profile) -> bool {
        self.argmax.binary_search(p).is_ok()
    }
}

/// Enumerates `N_{M,k}` and keeps every profile attaining the maximum `B`.
///
/// Evaluation is spread over the rayon pool; the result does not depend on
/// the number of workers.
pub fn brute_force_optimal(m: usize, k: usize, cap: usize) -> Result<OptimalSet> {
    check_instance(m, k)?;
    if m > cap {
        return Err(Error::CapExceeded { m, cap });
    }
    let space: Vec<Profile> = enumerate_profiles(m, k)?.collect();
    let values = space.par_iter().map(fast_b).collect::<Result<Vec<_>>>()?;
    let best_b = values
        .iter()
        .max()
        .cloned()
        .expect("N_{M,k} is never empty");
    let argmax = space
        .iter()
        .zip(&values)
        .filter(|(_, b)| **b == best_b)
        .map(|(p, _)| p.clone())
        .collect();
    Ok(OptimalSet {
        m,
        k,
        best_b,
        argmax,
        space_size: space.len(),
    })
}

/// Exhaustive optimum next to the constructed candidates.
#[derive(Debug, Clone)]
pub struct Agreement {
    pub optimal: OptimalSet,
    pub design: DesignResult,
    /// The argmax is what the gcd classification promises: `{n}` for gcd 1,
    /// `{n, m}` for gcd 2, a non-empty subset of `{n, m}` otherwise.
    pub agrees: bool,
    /// Every candidate attains the maximum.
    pub all_candidates_optimal: bool,
}

pub fn verify_instance(m: usize, k: usize, cap: usize) -> Result<Agreement> {
    let optimal = brute_force_optimal(m, k, cap)?;
    let design = design(m, k)?;
    let found: BTreeSet<&Profile> = optimal.argmax.iter().collect();
    let candidates: BTreeSet<&Profile> = design.candidates().map(|(p, _)| p).collect();
    let agrees = match design.classification {
        Classification::ExactlyOne | Classification::ExactlyTwo => found == candidates,
        Classification::AtMostTwo => !found.is_empty() && found.is_subset(&candidates),
    };
    let all_candidates_optimal = candidates.is_subset(&found);
    Ok(Agreement {
        optimal,
        design,
        agrees,
        all_candidates_optimal,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parts(set: &OptimalSet) -> Vec<Vec<usize>> {
        set.argmax.iter().map(|p| p.parts().to_vec()).collect()
    }

    #[test]
    fn small_optima() {
        let s = brute_force_optimal(3, 2, DEFAULT_BRUTE_CAP).unwrap();
        assert_eq!(parts(&s), vec![vec![2, 1]]);
        assert_eq!(s.best_b, BigUint::from(6u32));

        let s = brute_force_optimal(11, 3, DEFAULT_BRUTE_CAP).unwrap();
        assert_eq!(parts(&s), vec![vec![4, 4, 3]]);
        assert_eq!(s.best_b, BigUint::from(129u32));

        let s = brute_force_optimal(16, 6, DEFAULT_BRUTE_CAP).unwrap();
        assert_eq!(
            parts(&s),
            vec![vec![3, 3, 2, 3, 3, 2], vec![3, 3, 3, 2, 3, 2]]
        );
        assert_eq!(s.best_b, BigUint::from(4599u32));
        assert_eq!(s.space_size, 2002);
    }

    #[test]
    fn cap_is_enforced() {
        assert_eq!(
            brute_force_optimal(23, 5, DEFAULT_BRUTE_CAP),
            Err(Error::CapExceeded { m: 23, cap: 22 })
        );
        assert!(brute_force_optimal(23, 5, 23).is_ok());
    }

    #[test]
    fn agreement_on_worked_instances() {
        let a = verify_instance(16, 6, DEFAULT_BRUTE_CAP).unwrap();
        assert!(a.agrees && a.all_candidates_optimal);
        let a = verify_instance(11, 3, DEFAULT_BRUTE_CAP).unwrap();
        assert!(a.agrees && a.optimal.argmax.len() == 1);
    }
}
