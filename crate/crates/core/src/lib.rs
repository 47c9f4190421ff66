//! Fiber delay line constructions with at most `k` recirculations through
//! `M` fibers.
//!
//! A profile `n_1^k` (a composition of `M` with `n_1 >= 2`) fixes a greedy
//! delay sequence whose maximum representable integer `B` has a closed form.
//! [`design`] builds the one or two profiles maximizing `B` from the Euclid
//! ladder of `(M, k)`; the [`oracle`] module checks that claim exhaustively on
//! small instances.

pub mod cli;
pub mod construction;
pub mod error;
pub mod euclid;
pub mod optimizer;
pub mod oracle;
pub mod profile;
pub mod scalar;
pub mod tables;

pub use construction::{max_representable, max_representable_as, subset_sum_b, Construction};
pub use error::{Error, Result};
pub use euclid::EuclidTrace;
pub use optimizer::{
    compare_profiles, design, lift_to_top, predicted_count, Classification, DesignResult,
    LevelSequence, LiftOrder,
};
pub use profile::{
    enumerate_profiles, left_imbedded, left_presequence, right_imbedded, right_presequence,
    Compositions, Profile, TransformContext,
};
pub use scalar::Scalar;

pub use num_bigint::BigUint as Big;

/// Construction with exact arithmetic.
pub type ExactConstruction = Construction<Big>;
/// Construction in `u64`; building fails with [`Error::Overflow`] when it does not fit.
pub type Construction64 = Construction<u64>;
pub type Construction128 = Construction<u128>;
