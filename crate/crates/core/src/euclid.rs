//! The remainder/quotient ladder of Euclid's algorithm on `(m, k)`.

use crate::error::{Error, Result};

/// Full trace of Euclid's algorithm started from `r_{-1} = m`, `r_0 = k`.
///
/// `remainders` holds `r_{-1}, r_0, ..., r_N` (so `r_N = 0` is stored) and
/// `quotients` holds `q_1, ..., q_N`, where `r_{i-2} = q_i * r_{i-1} + r_i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EuclidTrace {
    remainders: Vec<usize>,
    quotients: Vec<usize>,
}

/// Checks the instance bounds shared by every top-level operation.
pub fn check_instance(m: usize, k: usize) -> Result<()> {
    if m < 2 || k == 0 || k >= m {
        return Err(Error::Domain { m, k });
    }
    Ok(())
}

impl EuclidTrace {
    pub fn new(m: usize, k: usize) -> Result<Self> {
        check_instance(m, k)?;
        let mut remainders = vec![m, k];
        let mut quotients = Vec::new();
        let (mut a, mut b) = (m, k);
        while b != 0 {
            quotients.push(a / b);
            let r = a % b;
            remainders.push(r);
            a = b;
            b = r;
        }
        Ok(Self {
            remainders,
            quotients,
        })
    }

    pub fn m(&self) -> usize {
        self.remainders[0]
    }

    pub fn k(&self) -> usize {
        self.remainders[1]
    }

    /// Number of division steps `N`.
    pub fn depth(&self) -> usize {
        self.quotients.len()
    }

    pub fn gcd(&self) -> usize {
        self.remainder(self.depth() as isize - 1)
    }

    /// `r_i` for `-1 <= i <= N`.
    ///
    /// # Panics
    /// If `i` is outside that range.
    pub fn remainder(&self, i: isize) -> usize {
        assert!(
            i >= -1 && i <= self.depth() as isize,
            "r_{i} is not part of the trace"
        );
        self.remainders[(i + 1) as usize]
    }

    /// `q_i` for `1 <= i <= N`.
    ///
    /// # Panics
    /// If `i` is outside that range.
    pub fn quotient(&self, i: usize) -> usize {
        assert!(
            i >= 1 && i <= self.depth(),
            "q_{i} is not part of the trace"
        );
        self.quotients[i - 1]
    }

    /// `r_{-1}, r_0, ..., r_N`.
    pub fn remainders(&self) -> &[usize] {
        &self.remainders
    }

    /// `q_1, ..., q_N`.
    pub fn quotients(&self) -> &[usize] {
        &self.quotients
    }

    pub fn depth_is_odd(&self) -> bool {
        self.depth() % 2 == 1
    }
}
