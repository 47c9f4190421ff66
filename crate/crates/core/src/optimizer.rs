//! Optimal profiles from the Euclid ladder of `(M, k)`.
//!
//! The deepest level `N` starts from a constant sequence `(q_N, ..., q_N)`
//! (and, when `gcd(M, k) >= 2`, a perturbed companion). Each step up to level
//! `l` applies the left pre-sequence when `l` is odd and the right
//! pre-sequence when `l` is even, in the context `(r_{l-2}, r_{l-1})`, until
//! level 1 yields a member of `N_{M,k}`.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigUint;
use serde::Serialize;

use crate::construction::max_representable;
use crate::error::{Error, Result};
use crate::euclid::EuclidTrace;
use crate::profile::{left_presequence, right_presequence, Profile, TransformContext};

/// How many optimal profiles the gcd guarantees.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Classification {
    /// `gcd = 1`
    ExactlyOne,
    /// `gcd = 2`
    ExactlyTwo,
    /// `gcd >= 3`: both candidates are the only possible optima, but only
    /// "at most two" is guaranteed.
    AtMostTwo,
}

impl Classification {
    pub fn from_gcd(gcd: usize) -> Self {
        match gcd {
            1 => Self::ExactlyOne,
            2 => Self::ExactlyTwo,
            _ => Self::AtMostTwo,
        }
    }
}

impl fmt::Display for Classification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::ExactlyOne => "ExactlyOne",
            Self::ExactlyTwo => "ExactlyTwo",
            Self::AtMostTwo => "AtMostTwo",
        })
    }
}

/// Which pre-sequence the lift applies first when leaving level `N`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LiftOrder {
    /// Odd depth: right pre-sequence first, then alternate.
    RightFirst,
    /// Even depth: left pre-sequence first, then alternate.
    LeftFirst,
}

/// The sequence `n_1^{r_{h-1}}(h)` held at one level of the lifting recursion.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LevelSequence {
    pub level: usize,
    pub sequence: Profile,
}

/// Lifts a level-`h` sequence (length `r_{h-1}`, sum `r_{h-2}`) to level 1.
///
/// The returned ladder starts with the input at level `h` and ends with the
/// level-1 profile, which is validated as a member of `N_{M,k}`.
pub fn lift_to_top(trace: &EuclidTrace, h: usize, seq: &Profile) -> Result<Vec<LevelSequence>> {
    if h == 0 || h > trace.depth() {
        return Err(Error::Index(format!(
            "level h={h} outside 1..={} for (M,k)=({},{})",
            trace.depth(),
            trace.m(),
            trace.k()
        )));
    }
    let (want_len, want_sum) = (
        trace.remainder(h as isize - 1),
        trace.remainder(h as isize - 2),
    );
    if seq.len() != want_len || seq.total() != want_sum {
        return Err(Error::Shape(format!(
            "level-{h} sequence {seq} must have {want_len} parts summing to {want_sum}"
        )));
    }

    let mut ladder = vec![LevelSequence {
        level: h,
        sequence: seq.clone(),
    }];
    let mut current = seq.clone();
    for level in (1..h).rev() {
        let l = level as isize;
        let ctx = TransformContext::new(trace.remainder(l - 2), trace.remainder(l - 1))?;
        current = if level % 2 == 1 {
            left_presequence(&current, &ctx)?
        } else {
            right_presequence(&current, &ctx)?
        };
        ladder.push(LevelSequence {
            level,
            sequence: current.clone(),
        });
    }
    let top = ladder.last_mut().expect("ladder is never empty");
    top.sequence = top.sequence.with_floor(2)?;
    Ok(ladder)
}

/// Output of [`design`]: the candidate optimal profile(s) of `N_{M,k}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DesignResult {
    pub trace: EuclidTrace,
    pub candidate_n: Profile,
    pub candidate_m: Option<Profile>,
    pub classification: Classification,
    pub b_value: BigUint,
    pub b_value_m: Option<BigUint>,
    /// Levels `N, N-1, ..., 1` of the lift producing `candidate_n`.
    pub lift_n: Vec<LevelSequence>,
    /// Same for `candidate_m`, when it exists.
    pub lift_m: Option<Vec<LevelSequence>>,
}

impl DesignResult {
    pub fn lift_order(&self) -> LiftOrder {
        if self.trace.depth_is_odd() {
            LiftOrder::RightFirst
        } else {
            LiftOrder::LeftFirst
        }
    }

    /// Candidates in fixed order: `candidate_n` first.
    pub fn candidates(&self) -> impl Iterator<Item = (&Profile, &BigUint)> {
        std::iter::once((&self.candidate_n, &self.b_value))
            .chain(self.candidate_m.as_ref().zip(self.b_value_m.as_ref()))
    }
}

/// Runs the Euclid-driven construction for `(m, k)`.
pub fn design(m: usize, k: usize) -> Result<DesignResult> {
    let trace = EuclidTrace::new(m, k)?;
    let depth = trace.depth();
    let q = trace.quotient(depth);
    let width = trace.remainder(depth as isize - 1);

    let base = Profile::new(vec![q; width], q * width, 1)?;
    let lift_n = lift_to_top(&trace, depth, &base)?;

    let lift_m = if width >= 2 {
        // q_N >= 2 here, since r_{N-2} = q_N r_{N-1} > r_{N-1}.
        debug_assert!(q >= 2);
        let mut parts = vec![q; width];
        let (first, last) = if trace.depth_is_odd() {
            (q + 1, q - 1)
        } else {
            (q - 1, q + 1)
        };
        parts[0] = first;
        parts[width - 1] = last;
        let start = Profile::new(parts, q * width, 1)?;
        Some(lift_to_top(&trace, depth, &start)?)
    } else {
        None
    };

    let top = |ladder: &[LevelSequence]| ladder[ladder.len() - 1].sequence.clone();
    let candidate_n = top(&lift_n);
    let candidate_m = lift_m.as_deref().map(top);
    let b_value = max_representable(&candidate_n)?;
    let b_value_m = candidate_m.as_ref().map(max_representable).transpose()?;

    Ok(DesignResult {
        classification: Classification::from_gcd(trace.gcd()),
        trace,
        candidate_n,
        candidate_m,
        b_value,
        b_value_m,
        lift_n,
        lift_m,
    })
}

/// Orders two members of the same `N_{M,k}` by their exact `B`.
pub fn compare_profiles(a: &Profile, b: &Profile) -> Result<Ordering> {
    if a.total() != b.total() || a.len() != b.len() {
        return Err(Error::Precondition(format!(
            "cannot compare {a} (M={}, k={}) with {b} (M={}, k={})",
            a.total(),
            a.len(),
            b.total(),
            b.len()
        )));
    }
    Ok(max_representable(a)?.cmp(&max_representable(b)?))
}

/// The number of optima guaranteed by `gcd(m, k)`.
pub fn predicted_count(m: usize, k: usize) -> Result<Classification> {
    Ok(Classification::from_gcd(EuclidTrace::new(m, k)?.gcd()))
}
