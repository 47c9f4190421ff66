//! Pairwise comparison lemmas as executable checks.
//!
//! Each check takes a sequence `n` at level `h` of the Euclid ladder of
//! `(M, k)`, forms the neighbour `n'` the lemma talks about (one unit moved
//! between positions `a` and `a+1`), predicts the ordering of `n` against
//! `n'` from the lemma, then lifts both to level 1 and compares their exact
//! `B` values.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};
use crate::euclid::EuclidTrace;
use crate::optimizer::lift_to_top;
use crate::profile::Profile;

use super::fast_b;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Rule {
    /// Adjacent parts differing by one, odd level.
    ComparisonA,
    /// Adjacent parts differing by one, even level.
    ComparisonB,
    /// Adjacent parts differing by at least two, odd level.
    AdjacentGap,
    /// Adjacent parts differing by at least two, even level.
    AdjacentGapII,
}

/// Which branch of a lemma applies to `(n, a)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CaseTag {
    /// `a = 1` or `a = r_{h-1} - 1`.
    Boundary,
    /// The first asymmetric mirror pair has `n_{a-j} < n_{a+1+j}`.
    InnerMirrorLess,
    /// The first asymmetric mirror pair has `n_{a-j} > n_{a+1+j}`.
    InnerMirrorGreater,
    /// Every mirror pair around the swap is symmetric.
    FullMirror,
    /// Gap smoothing the lemma says strictly increases `B`.
    StrictSmoothing,
    /// Gap smoothing the lemma says weakly increases `B`.
    WeakSmoothing,
}

impl fmt::Display for CaseTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::Boundary => "boundary",
            Self::InnerMirrorLess => "inner_mirror_less",
            Self::InnerMirrorGreater => "inner_mirror_greater",
            Self::FullMirror => "full_mirror",
            Self::StrictSmoothing => "strict_smoothing",
            Self::WeakSmoothing => "weak_smoothing",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Verdict {
    ConfirmsGreater,
    ConfirmsLess,
    ConfirmsEqual,
}

/// Outcome of one lemma check. Orderings are of `n` relative to `n'`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LevelCheck {
    pub m: usize,
    pub k: usize,
    pub h: usize,
    pub a: usize,
    pub rule: Rule,
    pub case: CaseTag,
    pub original: Profile,
    pub modified: Profile,
    pub predicted: Ordering,
    pub observed: Ordering,
}

impl LevelCheck {
    /// `None` when the observed ordering contradicts the prediction.
    pub fn verdict(&self) -> Option<Verdict> {
        (self.predicted == self.observed).then_some(match self.observed {
            Ordering::Greater => Verdict::ConfirmsGreater,
            Ordering::Less => Verdict::ConfirmsLess,
            Ordering::Equal => Verdict::ConfirmsEqual,
        })
    }

    pub fn holds(&self) -> bool {
        self.verdict().is_some()
    }
}

fn ordering_word(o: Ordering) -> &'static str {
    match o {
        Ordering::Less => "less",
        Ordering::Equal => "equal",
        Ordering::Greater => "greater",
    }
}

impl fmt::Display for LevelCheck {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "({},{}) h={} a={} case={} predicted={} observed={} {}",
            self.m,
            self.k,
            self.h,
            self.a,
            self.case,
            ordering_word(self.predicted),
            ordering_word(self.observed),
            if self.holds() { "OK" } else { "FAIL" }
        )
    }
}

/// Validates `n` as a member of `N_{M,k}(h)` with at least two parts.
fn level_member(trace: &EuclidTrace, h: usize, n: &Profile) -> Result<Profile> {
    if h == 0 || h > trace.depth() {
        return Err(Error::Index(format!(
            "level h={h} outside 1..={} for (M,k)=({},{})",
            trace.depth(),
            trace.m(),
            trace.k()
        )));
    }
    let len = trace.remainder(h as isize - 1);
    let sum = trace.remainder(h as isize - 2);
    if len < 2 {
        return Err(Error::Precondition(format!(
            "level {h} of ({},{}) has a single part; nothing to compare",
            trace.m(),
            trace.k()
        )));
    }
    if n.len() != len {
        return Err(Error::Precondition(format!(
            "level-{h} sequence {n} must have {len} parts"
        )));
    }
    Profile::new(n.parts().to_vec(), sum, if h == 1 { 2 } else { 1 })
}

fn check_index(n: &Profile, a: usize) -> Result<()> {
    if a == 0 || a >= n.len() {
        return Err(Error::Index(format!(
            "a={a} outside 1..={} for {n}",
            n.len() - 1
        )));
    }
    Ok(())
}

fn observe(trace: &EuclidTrace, h: usize, n: &Profile, n_prime: &Profile) -> Result<Ordering> {
    let top = |s: &Profile| -> Result<Profile> {
        let ladder = lift_to_top(trace, h, s)?;
        Ok(ladder[ladder.len() - 1].sequence.clone())
    };
    Ok(fast_b(&top(n)?)?.cmp(&fast_b(&top(n_prime)?)?))
}

/// Mirror scan around the pair `(a, a+1)`: the case tag and the offset `j`
/// of the first asymmetric pair, if any.
fn mirror_case(n: &Profile, a: usize) -> (CaseTag, usize) {
    let r = n.len();
    if a == 1 || a == r - 1 {
        return (CaseTag::Boundary, 0);
    }
    for j in 1..=(a - 1).min(r - a - 1) {
        let (left, right) = (n.part(a - j), n.part(a + 1 + j));
        match left.cmp(&right) {
            Ordering::Less => return (CaseTag::InnerMirrorLess, j),
            Ordering::Greater => return (CaseTag::InnerMirrorGreater, j),
            Ordering::Equal => {}
        }
    }
    (CaseTag::FullMirror, 0)
}

/// Comparison rule for `n_a - n_{a+1} = 1` and `n'` = one unit moved from
/// `a` to `a+1`. Odd levels follow rule A, even levels rule B.
pub fn check_comparison_rule(
    m: usize,
    k: usize,
    h: usize,
    n: &Profile,
    a: usize,
) -> Result<LevelCheck> {
    let trace = EuclidTrace::new(m, k)?;
    let n = level_member(&trace, h, n)?;
    check_index(&n, a)?;
    if n.part(a) != n.part(a + 1) + 1 {
        return Err(Error::Precondition(format!(
            "comparison rules need n_a - n_(a+1) = 1, got n_{a} = {}, n_{} = {} in {n}",
            n.part(a),
            a + 1,
            n.part(a + 1)
        )));
    }
    if h == 1 && a == 1 && n.part(1) < 3 {
        return Err(Error::Precondition(format!(
            "at level 1 with a=1 the rule needs n_1 >= 3, got {n}"
        )));
    }
    let n_prime = n.shift_unit(a, a + 1)?;

    let r = n.len();
    let (case, j) = mirror_case(&n, a);
    let spans_ends = j > 0 && a - j == 1 && a + 1 + j == r;
    let odd = h % 2 == 1;
    let predicted = match (odd, case) {
        (true, CaseTag::InnerMirrorGreater) => {
            if spans_ends && n.part(1) == n.part(r) + 1 {
                Ordering::Equal
            } else {
                Ordering::Less
            }
        }
        (true, _) => Ordering::Greater,
        (false, CaseTag::InnerMirrorLess) => {
            if spans_ends && n.part(1) + 1 == n.part(r) {
                Ordering::Equal
            } else {
                Ordering::Greater
            }
        }
        (false, _) => Ordering::Less,
    };
    let observed = observe(&trace, h, &n, &n_prime)?;
    Ok(LevelCheck {
        m,
        k,
        h,
        a,
        rule: if odd {
            Rule::ComparisonA
        } else {
            Rule::ComparisonB
        },
        case,
        original: n,
        modified: n_prime,
        predicted,
        observed,
    })
}

/// Rule A on a member of `N_{M,k}` itself (`h = 1`, `M = sum`, `k = len`).
pub fn check_comparison_rule_a(n: &Profile, a: usize) -> Result<LevelCheck> {
    check_comparison_rule(n.total(), n.len(), 1, n, a)
}

/// Rule B on a level-2 sequence of `(m, k)` (sum `k`, length `m mod k`).
pub fn check_comparison_rule_b(m: usize, k: usize, n: &Profile, a: usize) -> Result<LevelCheck> {
    check_comparison_rule(m, k, 2, n, a)
}

/// Adjacent-gap lemma for `|n_a - n_{a+1}| >= 2`: `n'` moves one unit from
/// the larger of the two parts to the smaller.
pub fn check_adjacent_gap(
    m: usize,
    k: usize,
    h: usize,
    n: &Profile,
    a: usize,
) -> Result<LevelCheck> {
    let trace = EuclidTrace::new(m, k)?;
    let n = level_member(&trace, h, n)?;
    check_index(&n, a)?;
    let (x, y) = (n.part(a), n.part(a + 1));
    if x.abs_diff(y) < 2 {
        return Err(Error::Precondition(format!(
            "adjacent-gap lemma needs |n_a - n_(a+1)| >= 2, got {x} and {y} in {n}"
        )));
    }
    let falling = x > y;
    let n_prime = if falling {
        n.shift_unit(a, a + 1)?
    } else {
        n.shift_unit(a + 1, a)?
    };

    let odd = h % 2 == 1;
    // Odd levels: a rising gap is strict. Even levels: a falling gap is strict.
    let strict = falling != odd;
    let (case, predicted) = if strict {
        (CaseTag::StrictSmoothing, Ordering::Less)
    } else {
        let tie = n.len() == 2
            && if odd {
                n.part(1) == n.part(2) + 2
            } else {
                n.part(1) + 2 == n.part(2)
            };
        (
            CaseTag::WeakSmoothing,
            if tie { Ordering::Equal } else { Ordering::Less },
        )
    };
    let observed = observe(&trace, h, &n, &n_prime)?;
    Ok(LevelCheck {
        m,
        k,
        h,
        a,
        rule: if odd {
            Rule::AdjacentGap
        } else {
            Rule::AdjacentGapII
        },
        case,
        original: n,
        modified: n_prime,
        predicted,
        observed,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn seq(parts: &[usize]) -> Profile {
        Profile::sequence(parts.to_vec()).unwrap()
    }

    #[test]
    fn rule_a_on_worked_sequences() {
        let c = check_comparison_rule_a(&seq(&[3, 2, 3, 3, 3, 2]), 1).unwrap();
        assert_eq!(
            (c.case, c.verdict()),
            (CaseTag::Boundary, Some(Verdict::ConfirmsGreater))
        );

        let c = check_comparison_rule_a(&seq(&[3, 2, 2, 3, 3, 3]), 1).unwrap();
        assert_eq!(c.modified.parts(), &[2, 3, 2, 3, 3, 3]);
        assert_eq!(c.verdict(), Some(Verdict::ConfirmsGreater));

        let c = check_comparison_rule_a(&seq(&[3, 3, 3, 2, 3, 2]), 3).unwrap();
        assert_eq!(c.modified.parts(), &[3, 3, 2, 3, 3, 2]);
        assert_eq!(
            (c.case, c.verdict()),
            (CaseTag::InnerMirrorGreater, Some(Verdict::ConfirmsEqual))
        );

        let c = check_comparison_rule_a(&seq(&[3, 3, 2, 3, 3, 2]), 2).unwrap();
        assert_eq!(
            (c.case, c.verdict()),
            (CaseTag::FullMirror, Some(Verdict::ConfirmsGreater))
        );

        let c = check_comparison_rule_a(&seq(&[3, 2, 3, 2, 3, 3]), 3).unwrap();
        assert_eq!(
            (c.case, c.verdict()),
            (CaseTag::InnerMirrorLess, Some(Verdict::ConfirmsGreater))
        );
    }

    #[test]
    fn rule_b_on_worked_sequences() {
        let c = check_comparison_rule_b(26, 10, &seq(&[2, 1, 2, 2, 1, 2]), 1).unwrap();
        assert_eq!(
            (c.case, c.verdict()),
            (CaseTag::Boundary, Some(Verdict::ConfirmsLess))
        );

        let c = check_comparison_rule_b(26, 10, &seq(&[1, 2, 2, 2, 1, 2]), 4).unwrap();
        assert_eq!(
            (c.case, c.verdict()),
            (CaseTag::FullMirror, Some(Verdict::ConfirmsLess))
        );

        let c = check_comparison_rule_b(26, 10, &seq(&[1, 2, 2, 1, 2, 2]), 3).unwrap();
        assert_eq!(c.modified.parts(), &[1, 2, 1, 2, 2, 2]);
        assert_eq!(
            (c.case, c.verdict()),
            (CaseTag::InnerMirrorLess, Some(Verdict::ConfirmsEqual))
        );

        let c = check_comparison_rule_b(26, 10, &seq(&[2, 2, 2, 1, 2, 1]), 3).unwrap();
        assert_eq!(
            (c.case, c.verdict()),
            (CaseTag::InnerMirrorGreater, Some(Verdict::ConfirmsLess))
        );
    }

    #[test]
    fn adjacent_gap_examples() {
        let c = check_adjacent_gap(16, 6, 1, &seq(&[3, 3, 2, 1, 5, 2]), 4).unwrap();
        assert_eq!(c.modified.parts(), &[3, 3, 2, 2, 4, 2]);
        assert_eq!(
            (c.case, c.verdict()),
            (CaseTag::StrictSmoothing, Some(Verdict::ConfirmsLess))
        );

        let c = check_adjacent_gap(16, 6, 1, &seq(&[3, 3, 2, 5, 1, 2]), 4).unwrap();
        assert_eq!(
            (c.case, c.verdict()),
            (CaseTag::WeakSmoothing, Some(Verdict::ConfirmsLess))
        );

        // level 3 of (16,6) has two parts summing to 4: (3,1) ties (2,2)
        let c = check_adjacent_gap(16, 6, 3, &seq(&[3, 1]), 1).unwrap();
        assert_eq!(c.verdict(), Some(Verdict::ConfirmsEqual));

        // level 4 of (26,10): (1,3) ties (2,2)
        let c = check_adjacent_gap(26, 10, 4, &seq(&[1, 3]), 1).unwrap();
        assert_eq!(c.verdict(), Some(Verdict::ConfirmsEqual));

        let c = check_adjacent_gap(26, 10, 2, &seq(&[1, 1, 5, 1, 1, 1]), 3).unwrap();
        assert_eq!(
            (c.case, c.verdict()),
            (CaseTag::StrictSmoothing, Some(Verdict::ConfirmsLess))
        );
    }

    #[test]
    fn preconditions() {
        assert!(check_comparison_rule_a(&seq(&[3, 3, 2, 3, 3, 2]), 1).is_err());
        assert!(check_comparison_rule_a(&seq(&[3, 2, 3, 3, 3, 2]), 6).is_err());
        // n_1 = 2 with a = 1 at the top level
        assert!(check_comparison_rule_a(&seq(&[2, 1, 1]), 1).is_err());
        assert!(check_comparison_rule_b(26, 10, &seq(&[1, 2, 2, 1, 2]), 1).is_err());
        assert!(check_adjacent_gap(16, 6, 1, &seq(&[3, 3, 2, 3, 3, 2]), 1).is_err());
        assert!(check_adjacent_gap(16, 6, 4, &seq(&[3, 1]), 1).is_err());
    }

    #[test]
    fn report_line_format() {
        let c = check_comparison_rule_a(&seq(&[3, 3, 3, 2, 3, 2]), 3).unwrap();
        assert_eq!(
            c.to_string(),
            "(16,6) h=1 a=3 case=inner_mirror_greater predicted=equal observed=equal OK"
        );
    }
}
