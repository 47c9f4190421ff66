use num_bigint::{BigInt, BigUint};

use crate::construction::Construction;
use crate::error::{Error, Result};
use crate::profile::Profile;

/// Block-wise differences between the constructions of two profiles `a`, `b`
/// of the same `N_{M,k}`:
///
/// `alpha_i = d^a_{s_i} - d^b_{s'_i}` for `i = 1..k` and
/// `beta_i = B^a_i - B^b_i` for `i = 0..k` (with `beta_0 = 0`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StageDiff {
    pub alpha: Vec<BigInt>,
    pub beta: Vec<BigInt>,
}

pub fn stagewise_diff(a: &Profile, b: &Profile) -> Result<StageDiff> {
    if a.total() != b.total() || a.len() != b.len() {
        return Err(Error::Precondition(format!(
            "stagewise difference needs profiles of the same (M,k); got {a} and {b}"
        )));
    }
    let ca = Construction::<BigUint>::build(a)?;
    let cb = Construction::<BigUint>::build(b)?;
    let k = a.len();
    let alpha = (1..=k)
        .map(|i| {
            BigInt::from(ca.block_end_delay(i).clone())
                - BigInt::from(cb.block_end_delay(i).clone())
        })
        .collect();
    let beta = std::iter::once(BigInt::from(0))
        .chain(
            ca.block_b()
                .iter()
                .zip(cb.block_b())
                .map(|(x, y)| BigInt::from(x.clone()) - BigInt::from(y.clone())),
        )
        .collect();
    Ok(StageDiff { alpha, beta })
}

impl StageDiff {
    /// `beta_k = B(a) - B(b)`.
    pub fn total_difference(&self) -> &BigInt {
        &self.beta[self.beta.len() - 1]
    }

    /// Checks the stagewise recursions:
    ///
    /// * `beta_0 = 0` and `beta_i = alpha_i + beta_{i-1}`;
    /// * `alpha_1 = n^a_1 - n^b_1`;
    /// * `alpha_i = 2 alpha_{i-1} + (n_i - 1) beta_{i-1}` wherever `n^a_i = n^b_i`, `i >= 2`.
    pub fn satisfies_recursions(&self, a: &Profile, b: &Profile) -> bool {
        let k = a.len();
        if self.alpha.len() != k || self.beta.len() != k + 1 || b.len() != k {
            return false;
        }
        if self.beta[0] != BigInt::from(0) {
            return false;
        }
        let accumulates = (1..=k).all(|i| self.beta[i] == &self.alpha[i - 1] + &self.beta[i - 1]);
        let first = self.alpha[0] == BigInt::from(a.part(1) as i64 - b.part(1) as i64);
        let tail = (2..=k).filter(|&i| a.part(i) == b.part(i)).all(|i| {
            let expect = 2 * &self.alpha[i - 2] + BigInt::from(a.part(i) - 1) * &self.beta[i - 1];
            self.alpha[i - 1] == expect
        });
        accumulates && first && tail
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(m: usize, parts: &[usize]) -> Profile {
        Profile::in_space(m, parts.len(), parts.to_vec()).unwrap()
    }

    #[test]
    fn identical_profiles_have_zero_differences() {
        let a = p(16, &[3, 3, 2, 3, 3, 2]);
        let d = stagewise_diff(&a, &a).unwrap();
        assert!(d.alpha.iter().chain(&d.beta).all(|x| *x == BigInt::from(0)));
        assert!(d.satisfies_recursions(&a, &a));
    }

    #[test]
    fn differences_match_totals() {
        let a = p(16, &[3, 3, 2, 3, 3, 2]);
        let b = p(16, &[3, 3, 2, 2, 4, 2]);
        let d = stagewise_diff(&a, &b).unwrap();
        assert_eq!(*d.total_difference(), BigInt::from(272));
        assert!(d.satisfies_recursions(&a, &b));

        let a = p(4, &[3, 1]);
        let b = p(4, &[2, 2]);
        let d = stagewise_diff(&a, &b).unwrap();
        assert_eq!(d.alpha[0], BigInt::from(1));
        assert_eq!(d.beta[1], BigInt::from(1));
        assert!(d.satisfies_recursions(&a, &b));
    }

    #[test]
    fn mismatched_contexts_are_rejected() {
        assert!(stagewise_diff(&p(16, &[3, 3, 2, 3, 3, 2]), &p(17, &[4, 3, 2, 3, 3, 2])).is_err());
        assert!(stagewise_diff(&p(16, &[3, 3, 2, 3, 3, 2]), &p(16, &[4, 4, 4, 4])).is_err());
    }

    #[test]
    fn tampered_differences_fail_the_recursions() {
        let a = p(16, &[3, 3, 2, 3, 3, 2]);
        let b = p(16, &[3, 2, 3, 3, 3, 2]);
        let mut d = stagewise_diff(&a, &b).unwrap();
        assert!(d.satisfies_recursions(&a, &b));
        d.alpha[5] += 1;
        assert!(!d.satisfies_recursions(&a, &b));
    }
}
