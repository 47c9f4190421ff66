//! Independent checks of the optimizer: exhaustive search, stagewise
//! differences between two constructions, and executable forms of the
//! pairwise comparison lemmas.

mod brute;
mod rules;
mod stage;
pub mod sweeps;

use num_bigint::BigUint;

use crate::construction::{max_representable, max_representable_as};
use crate::error::{Error, Result};
use crate::profile::Profile;

pub use brute::{brute_force_optimal, verify_instance, Agreement, OptimalSet, DEFAULT_BRUTE_CAP};
pub use rules::{
    check_adjacent_gap, check_comparison_rule, check_comparison_rule_a, check_comparison_rule_b,
    CaseTag, LevelCheck, Rule, Verdict,
};
pub use stage::{stagewise_diff, StageDiff};

/// Exact `B`, evaluated in `u128` when it fits.
pub(crate) fn fast_b(profile: &Profile) -> Result<BigUint> {
    match max_representable_as::<u128>(profile) {
        Ok(v) => Ok(BigUint::from(v)),
        Err(Error::Overflow(_)) => max_representable(profile),
        Err(e) => Err(e),
    }
}
