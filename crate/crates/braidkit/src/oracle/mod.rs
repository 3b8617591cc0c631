//! Deciding equality of braid words.
//!
//! Two independent procedures are available: the faithful Artin action on a
//! free group ([`artin_action`]) and Dehornoy handle reduction
//! ([`handle_reduce`]). [`Oracle`] bundles them with per-call resource caps;
//! its triviality test goes through the Artin action.

mod artin;
mod free;
mod handle;

pub use artin::{act_on, artin_action};
pub use free::{FreeAutomorphism, FreeWord};
pub use handle::{handle_reduce, is_handle_free, main_sign};

use crate::braid::{check_strands, BraidWord};
use crate::error::Result;

/// Resource caps for oracle calls.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    /// Maximum total free-word length of intermediate Artin images.
    pub max_free_len: usize,
    /// Maximum number of handle reductions.
    pub max_steps: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits { max_free_len: 1_000_000, max_steps: 10_000_000 }
    }
}

/// The braid word problem solver.
///
/// ```
/// use braidkit::{BraidWord, Oracle};
/// let oracle = Oracle::default();
/// let lhs = BraidWord::from_signed(3, &[1, 2, 1]).unwrap();
/// let rhs = BraidWord::from_signed(3, &[2, 1, 2]).unwrap();
/// assert!(oracle.equal(&lhs, &rhs).unwrap());
/// ```
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Oracle {
    pub limits: Limits,
}

impl Oracle {
    pub fn new(limits: Limits) -> Self {
        Oracle { limits }
    }

    pub fn artin_action(&self, u: &BraidWord) -> Result<FreeAutomorphism> {
        artin_action(u, self.limits.max_free_len)
    }

    /// True iff `u` is the trivial braid, decided by the Artin action.
    pub fn is_trivial(&self, u: &BraidWord) -> Result<bool> {
        let u = u.free_cancel();
        if u.is_empty() {
            return Ok(true);
        }
        Ok(self.artin_action(&u)?.is_identity())
    }

    pub fn equal(&self, u: &BraidWord, v: &BraidWord) -> Result<bool> {
        check_strands(u.strands(), v.strands())?;
        let u = u.free_cancel();
        let v = v.free_cancel();
        if u == v {
            return Ok(true);
        }
        self.is_trivial(&u.concat(&v.inverse())?)
    }

    pub fn handle_reduce(&self, u: &BraidWord) -> Result<BraidWord> {
        handle_reduce(u, self.limits.max_steps)
    }

    /// True iff `u` is the trivial braid, decided by handle reduction.
    pub fn is_trivial_dehornoy(&self, u: &BraidWord) -> Result<bool> {
        Ok(self.handle_reduce(u)?.is_empty())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(n: usize, s: &[i32]) -> BraidWord {
        BraidWord::from_signed(n, s).unwrap()
    }

    #[test]
    fn triviality_examples() {
        let o = Oracle::default();
        assert!(o.is_trivial(&w(2, &[1, -1])).unwrap());
        assert!(!o.is_trivial(&w(2, &[1, 1])).unwrap());
        assert!(o.is_trivial(&w(3, &[1, 2, 1, -2, -1, -2])).unwrap());
        assert!(o.is_trivial_dehornoy(&BraidWord::identity(4)).unwrap());
        assert!(!o.is_trivial_dehornoy(&w(2, &[1, 1])).unwrap());
    }

    #[test]
    fn equality_examples() {
        let o = Oracle::default();
        assert!(o.equal(&w(4, &[1, 3]), &w(4, &[3, 1])).unwrap());
        assert!(!o.equal(&w(3, &[1]), &w(3, &[2])).unwrap());
        let u = w(3, &[1, 2, -2, 1, -1, -1]);
        assert!(o.equal(&u, &u.free_cancel()).unwrap());
        assert!(o.equal(&w(3, &[1]), &w(4, &[1])).is_err());
    }
}
