//! Greedy delay sequences and their maximum representable integers.
//!
//! For a profile `n_1^k` with block boundaries `s_i = n_1 + ... + n_i`, the
//! greedy delays are
//!
//! ```text
//! d_j        = j                                         1 <= j <= s_1
//! d_{s_i+j}  = 2 d_{s_i} + (j-1) (d_{s_1} + ... + d_{s_i} + 1)
//! ```
//!
//! and the maximum representable integer after block `i` is
//! `B_i = d_{s_1} + ... + d_{s_i}`.

use num_bigint::BigUint;

use crate::error::{Error, Result};
use crate::profile::Profile;
use crate::scalar::Scalar;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Construction<T = BigUint> {
    profile: Profile,
    delays: Vec<T>,
    block_bounds: Vec<usize>,
    block_b: Vec<T>,
}

fn check_membership(profile: &Profile) -> Result<()> {
    let (m, k) = (profile.total(), profile.len());
    if m < 2 || k >= m {
        return Err(Error::Domain { m, k });
    }
    if profile.part(1) < 2 {
        return Err(Error::Profile(format!(
            "{profile} is not in N_{{{m},{k}}}: first part must be at least 2"
        )));
    }
    Ok(())
}

impl<T: Scalar> Construction<T> {
    pub fn build(profile: &Profile) -> Result<Self> {
        check_membership(profile)?;
        let m = profile.total();
        let k = profile.len();

        let mut delays = Vec::with_capacity(m);
        let mut block_bounds = Vec::with_capacity(k + 1);
        let mut block_b = Vec::with_capacity(k);
        block_bounds.push(0);

        for j in 1..=profile.part(1) {
            delays.push(T::from_count(j)?);
        }
        block_bounds.push(profile.part(1));
        block_b.push(T::from_count(profile.part(1))?);

        for i in 1..k {
            let d_si = delays[block_bounds[i] - 1].clone();
            let base = d_si.add_checked(&d_si)?;
            let step = block_b[i - 1].add_checked(&T::one())?;
            let mut d = base;
            for j in 1..=profile.part(i + 1) {
                if j > 1 {
                    d = d.add_checked(&step)?;
                }
                delays.push(d.clone());
            }
            block_bounds.push(block_bounds[i] + profile.part(i + 1));
            block_b.push(block_b[i - 1].add_checked(&d)?);
        }

        Ok(Self {
            profile: profile.clone(),
            delays,
            block_bounds,
            block_b,
        })
    }

    pub fn profile(&self) -> &Profile {
        &self.profile
    }

    /// `d_1, ..., d_M`.
    pub fn delays(&self) -> &[T] {
        &self.delays
    }

    /// `s_0 = 0, s_1, ..., s_k`.
    pub fn block_bounds(&self) -> &[usize] {
        &self.block_bounds
    }

    /// `B(d_1^{s_i}; i)` for `i = 1..k`.
    pub fn block_b(&self) -> &[T] {
        &self.block_b
    }

    /// `B(d_1^M; k)`.
    pub fn max_representable(&self) -> &T {
        &self.block_b[self.block_b.len() - 1]
    }

    /// `d_{s_i}` for `1 <= i <= k`.
    pub fn block_end_delay(&self, i: usize) -> &T {
        &self.delays[self.block_bounds[i] - 1]
    }

    /// `B(d_1^{s_i+j}; i+1)`.
    ///
    /// For `i = 0` this is `j` (`1 <= j <= n_1`); for `1 <= i <= k-1` it is
    /// `d_{s_i+j} + B_i` with `1 <= j <= n_{i+1}`.
    pub fn prefix_b(&self, i: usize, j: usize) -> Result<T> {
        let k = self.profile.len();
        if i >= k || j == 0 || j > self.profile.part(i + 1) {
            return Err(Error::Index(format!(
                "prefix (i={i}, j={j}) outside 0 <= i <= {}, 1 <= j <= n_(i+1) for {}",
                k - 1,
                self.profile
            )));
        }
        if i == 0 {
            return T::from_count(j);
        }
        self.delays[self.block_bounds[i] + j - 1].add_checked(&self.block_b[i - 1])
    }
}

/// Exact `B(d_1^M; k)` of the greedy construction for `profile`.
pub fn max_representable(profile: &Profile) -> Result<BigUint> {
    Construction::<BigUint>::build(profile).map(|c| c.max_representable().clone())
}

/// Like [`max_representable`] but in a fixed-width or other scalar.
pub fn max_representable_as<T: Scalar>(profile: &Profile) -> Result<T> {
    Construction::<T>::build(profile).map(|c| c.max_representable().clone())
}

/// Largest `B` such that every integer in `[0, B]` is a sum of at most `k`
/// distinct entries of `delays`, found by a min-count subset-sum table.
///
/// Independent of the closed forms above; used to pin them down.
pub fn subset_sum_b(delays: &[u64], k: usize) -> Result<u64> {
    if delays.is_empty() || k == 0 {
        return Err(Error::Precondition(
            "subset-sum oracle needs at least one delay and k >= 1".into(),
        ));
    }
    if delays.len() >= u8::MAX as usize {
        return Err(Error::Precondition(
            "subset-sum oracle supports fewer than 255 delays".into(),
        ));
    }
    let mut sorted = delays.to_vec();
    sorted.sort_unstable();
    if sorted[0] == 0 || sorted.windows(2).any(|w| w[0] == w[1]) {
        return Err(Error::Precondition(
            "subset-sum oracle needs distinct positive delays".into(),
        ));
    }

    let limit = sorted
        .iter()
        .try_fold(0u64, |acc, &d| acc.checked_add(d))
        .ok_or(Error::Overflow("subset-sum table size"))?;
    let limit = usize::try_from(limit).map_err(|_| Error::Overflow("subset-sum table size"))?;

    const UNREACHED: u8 = u8::MAX;
    let mut fewest = vec![UNREACHED; limit + 1];
    fewest[0] = 0;
    for &d in &sorted {
        let d = d as usize;
        for s in (d..=limit).rev() {
            let prev = fewest[s - d];
            if prev != UNREACHED && prev + 1 < fewest[s] {
                fewest[s] = prev + 1;
            }
        }
    }
    let covered = fewest
        .iter()
        .take_while(|&&c| c != UNREACHED && (c as usize) <= k)
        .count();
    Ok((covered - 1) as u64)
}
