//! Profile sequences and the left/right imbedded and pre-sequence transforms.
//!
//! A profile `n_1, ..., n_L` is a composition of some total into `L` positive
//! parts. At the top level (`N_{M,k}`) it says how many consecutive fibers
//! belong to each of the `k` recirculation blocks and its first part must be
//! at least 2. Intermediate levels of the lifting recursion drop that floor.
//!
//! Positions are 1-based in every doc comment and error message; storage is a
//! plain left-to-right `Vec`.

use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::euclid::check_instance;

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Profile {
    parts: Vec<usize>,
    total: usize,
    first_part_floor: usize,
}

impl Profile {
    /// Validates `parts` against an expected total and first-part floor.
    pub fn new(parts: Vec<usize>, total: usize, first_part_floor: usize) -> Result<Self> {
        if parts.is_empty() {
            return Err(Error::Profile("profile has no parts".into()));
        }
        if let Some(i) = parts.iter().position(|&p| p == 0) {
            return Err(Error::Profile(format!("part n_{} is zero", i + 1)));
        }
        if parts[0] < first_part_floor {
            return Err(Error::Profile(format!(
                "first part n_1 = {} is below the floor {first_part_floor}",
                parts[0]
            )));
        }
        let sum: usize = parts.iter().sum();
        if sum != total {
            return Err(Error::Profile(format!(
                "parts sum to {sum}, expected {total}"
            )));
        }
        Ok(Self {
            parts,
            total,
            first_part_floor,
        })
    }

    /// A bare sequence of positive parts (floor 1, total = its sum).
    pub fn sequence(parts: Vec<usize>) -> Result<Self> {
        let total = parts.iter().sum();
        Self::new(parts, total, 1)
    }

    /// A member of `N_{M,k}`: `k` positive parts summing to `m`, first part >= 2.
    pub fn in_space(m: usize, k: usize, parts: Vec<usize>) -> Result<Self> {
        check_instance(m, k)?;
        if parts.len() != k {
            return Err(Error::Profile(format!(
                "expected {k} parts for k={k}, got {}",
                parts.len()
            )));
        }
        Self::new(parts, m, 2)
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn total(&self) -> usize {
        self.total
    }

    pub fn first_part_floor(&self) -> usize {
        self.first_part_floor
    }

    /// 1-based access.
    pub fn part(&self, i: usize) -> usize {
        self.parts[i - 1]
    }

    /// Same parts, re-validated under a different first-part floor.
    pub fn with_floor(&self, first_part_floor: usize) -> Result<Self> {
        Self::new(self.parts.clone(), self.total, first_part_floor)
    }

    /// Moves one unit from part `from` to the adjacent part `to` (1-based).
    pub fn shift_unit(&self, from: usize, to: usize) -> Result<Self> {
        let len = self.len();
        if from == 0 || to == 0 || from > len || to > len || from.abs_diff(to) != 1 {
            return Err(Error::Index(format!(
                "cannot move a unit from n_{from} to n_{to} in a profile of length {len}"
            )));
        }
        let mut parts = self.parts.clone();
        parts[from - 1] -= 1;
        parts[to - 1] += 1;
        Self::new(parts, self.total, self.first_part_floor)
    }
}

impl fmt::Display for Profile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

impl FromStr for Profile {
    type Err = Error;

    /// Parses `"3,3,2"` (whitespace and surrounding parentheses tolerated).
    fn from_str(s: &str) -> Result<Self> {
        let body = s.trim().trim_start_matches('(').trim_end_matches(')');
        let parts = body
            .split(',')
            .map(|tok| {
                tok.trim().parse::<usize>().map_err(|_| {
                    Error::Profile(format!("`{}` is not a positive integer", tok.trim()))
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Self::sequence(parts)
    }
}

impl Serialize for Profile {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.parts.serialize(serializer)
    }
}

/// `big = q * small + r` with `1 <= r < small`: the context of one transform.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TransformContext {
    big: usize,
    small: usize,
    quotient: usize,
    remainder: usize,
}

impl TransformContext {
    pub fn new(big: usize, small: usize) -> Result<Self> {
        if small == 0 || big <= small {
            return Err(Error::Shape(format!(
                "transform context needs big > small >= 1, got big={big}, small={small}"
            )));
        }
        let (quotient, remainder) = (big / small, big % small);
        if remainder == 0 {
            return Err(Error::Shape(format!(
                "transform context ({big}, {small}) has zero remainder"
            )));
        }
        Ok(Self {
            big,
            small,
            quotient,
            remainder,
        })
    }

    pub fn big(&self) -> usize {
        self.big
    }

    pub fn small(&self) -> usize {
        self.small
    }

    pub fn quotient(&self) -> usize {
        self.quotient
    }

    pub fn remainder(&self) -> usize {
        self.remainder
    }

    /// 1-based positions carrying `q+1` in a two-valued sequence of length `small`.
    fn raised_positions(&self, n: &Profile) -> Result<Vec<usize>> {
        if n.len() != self.small {
            return Err(Error::Shape(format!(
                "sequence {n} has length {}, expected {}",
                n.len(),
                self.small
            )));
        }
        let q = self.quotient;
        let mut raised = Vec::with_capacity(self.remainder);
        for (i, &p) in n.parts().iter().enumerate() {
            if p == q + 1 {
                raised.push(i + 1);
            } else if p != q {
                return Err(Error::Shape(format!(
                    "n_{} = {p} of {n} is neither q={q} nor q+1={}",
                    i + 1,
                    q + 1
                )));
            }
        }
        if raised.len() != self.remainder {
            return Err(Error::Shape(format!(
                "{n} has {} parts equal to q+1, expected r={}",
                raised.len(),
                self.remainder
            )));
        }
        Ok(raised)
    }

    fn check_gap_sequence(&self, m: &Profile) -> Result<()> {
        if m.len() != self.remainder || m.total() != self.small {
            return Err(Error::Shape(format!(
                "gap sequence {m} must have {} parts summing to {} (got {} parts summing to {})",
                self.remainder,
                self.small,
                m.len(),
                m.total()
            )));
        }
        Ok(())
    }

    /// Two-valued sequence with `q+1` exactly at the given 1-based positions.
    fn plant(&self, raised: impl IntoIterator<Item = usize>) -> Result<Profile> {
        let mut parts = vec![self.quotient; self.small];
        for i in raised {
            parts[i - 1] += 1;
        }
        Profile::new(parts, self.big, 1)
    }
}

/// `L^I_{big,small}`: gap lengths between consecutive `q+1` positions, the
/// last gap running to the end. Requires `n_1 = q+1`.
pub fn left_imbedded(n: &Profile, ctx: &TransformContext) -> Result<Profile> {
    let raised = ctx.raised_positions(n)?;
    if raised[0] != 1 {
        return Err(Error::Shape(format!(
            "left-imbedded sequence needs n_1 = q+1, but the first raised position of {n} is {}",
            raised[0]
        )));
    }
    let mut gaps: Vec<usize> = raised.windows(2).map(|w| w[1] - w[0]).collect();
    gaps.push(ctx.small - raised[raised.len() - 1] + 1);
    Profile::new(gaps, ctx.small, 1)
}

/// `L_{big,small}`: plants `q+1` at `i_j = 1 + m_1 + ... + m_{j-1}`.
pub fn left_presequence(m: &Profile, ctx: &TransformContext) -> Result<Profile> {
    ctx.check_gap_sequence(m)?;
    let starts = m.parts().iter().scan(1, |pos, &g| {
        let here = *pos;
        *pos += g;
        Some(here)
    });
    ctx.plant(starts)
}

/// `R^I_{big,small}`: run lengths ending at each `q+1` position. Requires
/// `n_small = q+1`.
pub fn right_imbedded(n: &Profile, ctx: &TransformContext) -> Result<Profile> {
    let raised = ctx.raised_positions(n)?;
    let last = raised[raised.len() - 1];
    if last != ctx.small {
        return Err(Error::Shape(format!(
            "right-imbedded sequence needs n_{} = q+1, but the last raised position of {n} is {last}",
            ctx.small
        )));
    }
    let runs = std::iter::once(raised[0])
        .chain(raised.windows(2).map(|w| w[1] - w[0]))
        .collect();
    Profile::new(runs, ctx.small, 1)
}

/// `R_{big,small}`: plants `q+1` at `i_j = m_1 + ... + m_j`.
pub fn right_presequence(m: &Profile, ctx: &TransformContext) -> Result<Profile> {
    ctx.check_gap_sequence(m)?;
    let ends = m.parts().iter().scan(0, |pos, &g| {
        *pos += g;
        Some(*pos)
    });
    ctx.plant(ends)
}

/// Compositions of `total` into `len` positive parts with the first part at
/// least `first_part_floor`, in lexicographically increasing order.
#[derive(Debug, Clone)]
pub struct Compositions {
    next: Option<Vec<usize>>,
    total: usize,
    floor: usize,
}

impl Compositions {
    pub fn new(total: usize, len: usize, first_part_floor: usize) -> Self {
        let floor = first_part_floor.max(1);
        let next = if len == 0 || total < floor + (len - 1) {
            None
        } else if len == 1 {
            Some(vec![total])
        } else {
            let mut first = vec![1; len];
            first[0] = floor;
            first[len - 1] = total - floor - (len - 2);
            Some(first)
        };
        Self { next, total, floor }
    }

    fn advance(c: &mut [usize]) -> bool {
        let len = c.len();
        // Rightmost non-final position whose suffix still has a spare unit.
        let mut suffix = c[len - 1];
        for i in (0..len.saturating_sub(1)).rev() {
            let slots = len - 1 - i;
            if suffix > slots {
                c[i] += 1;
                let rest = suffix - 1;
                for p in &mut c[i + 1..len - 1] {
                    *p = 1;
                }
                c[len - 1] = rest - (slots - 1);
                return true;
            }
            suffix += c[i];
        }
        false
    }
}

impl Iterator for Compositions {
    type Item = Profile;

    fn next(&mut self) -> Option<Profile> {
        let current = self.next.take()?;
        let mut succ = current.clone();
        if Self::advance(&mut succ) {
            self.next = Some(succ);
        }
        Some(Profile {
            parts: current,
            total: self.total,
            first_part_floor: self.floor,
        })
    }
}

/// Every member of `N_{M,k}` in lexicographic order; there are `C(m-2, k-1)`.
pub fn enumerate_profiles(m: usize, k: usize) -> Result<Compositions> {
    check_instance(m, k)?;
    Ok(Compositions::new(m, k, 2))
}
