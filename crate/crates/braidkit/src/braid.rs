//! Braid words over the Artin generators and the permutations they induce.
//!
//! A [`BraidWord`] is a flat sequence of letters `σ_k^{±1}` on a fixed number
//! of strands. Words are read left to right, which is top to bottom in the
//! braid diagram, and the empty word is the trivial braid.

use std::fmt;

use crate::error::{Error, Result};

/// A single Artin generator `σ_k` or its inverse.
///
/// Stored as a nonzero signed index: `k` for `σ_k`, `-k` for `σ_k^{-1}`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Generator(i32);

impl Generator {
    /// `σ_k`.
    pub fn pos(k: usize) -> Self {
        assert!(k >= 1, "generator index starts at 1");
        Generator(k as i32)
    }

    /// `σ_k^{-1}`.
    pub fn neg(k: usize) -> Self {
        assert!(k >= 1, "generator index starts at 1");
        Generator(-(k as i32))
    }

    /// `σ_k^{sign}` where `sign` is `+1` or `-1`.
    pub fn new(k: usize, sign: i32) -> Self {
        if sign > 0 {
            Self::pos(k)
        } else {
            Self::neg(k)
        }
    }

    pub(crate) fn from_raw(raw: i32) -> Self {
        debug_assert!(raw != 0);
        Generator(raw)
    }

    pub(crate) fn raw(self) -> i32 {
        self.0
    }

    pub fn index(self) -> usize {
        self.0.unsigned_abs() as usize
    }

    /// `+1` or `-1`.
    pub fn sign(self) -> i32 {
        self.0.signum()
    }

    pub fn is_positive(self) -> bool {
        self.0 > 0
    }

    #[must_use]
    pub fn inverse(self) -> Self {
        Generator(-self.0)
    }
}

impl fmt::Debug for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_positive() {
            write!(f, "s{}", self.index())
        } else {
            write!(f, "s{}^-1", self.index())
        }
    }
}

/// A word in `σ_1^{±1}, …, σ_{n-1}^{±1}` on `n` strands.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BraidWord {
    strands: usize,
    letters: Vec<Generator>,
}

impl BraidWord {
    /// The trivial braid on `strands` strands.
    pub fn identity(strands: usize) -> Self {
        assert!(strands >= 1, "a braid needs at least one strand");
        BraidWord { strands, letters: Vec::new() }
    }

    /// Builds a word, checking every letter index against the strand count.
    pub fn new(strands: usize, letters: Vec<Generator>) -> Result<Self> {
        if strands == 0 {
            return Err(Error::InvalidArgument("a braid needs at least one strand".into()));
        }
        if let Some(bad) = letters.iter().find(|g| g.index() >= strands) {
            return Err(Error::IndexOutOfRange { index: bad.index(), strands });
        }
        Ok(BraidWord { strands, letters })
    }

    /// Builds a word from signed indices (`2` is `σ_2`, `-1` is `σ_1^{-1}`).
    ///
    /// ```
    /// use braidkit::BraidWord;
    /// let w = BraidWord::from_signed(3, &[1, 2, -1]).unwrap();
    /// assert_eq!(w.to_string(), "s1 s2 s1^-1");
    /// ```
    pub fn from_signed(strands: usize, letters: &[i32]) -> Result<Self> {
        if letters.contains(&0) {
            return Err(Error::InvalidArgument("generator index 0 does not exist".into()));
        }
        Self::new(strands, letters.iter().map(|&r| Generator(r)).collect())
    }

    /// `σ_k` alone.
    pub fn sigma(strands: usize, k: usize) -> Result<Self> {
        if k == 0 {
            return Err(Error::IndexOutOfRange { index: 0, strands });
        }
        Self::new(strands, vec![Generator::pos(k)])
    }

    pub(crate) fn from_parts_unchecked(strands: usize, letters: Vec<Generator>) -> Self {
        debug_assert!(letters.iter().all(|g| g.index() < strands));
        BraidWord { strands, letters }
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn letters(&self) -> &[Generator] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// The same letters viewed on a larger number of strands.
    pub fn embed(&self, strands: usize) -> Result<Self> {
        if strands < self.strands {
            return Err(Error::StrandMismatch { left: self.strands, right: strands });
        }
        Ok(BraidWord { strands, letters: self.letters.clone() })
    }

    /// Syntactic product `self · other`; no cancellation is performed.
    pub fn concat(&self, other: &BraidWord) -> Result<Self> {
        check_strands(self.strands, other.strands)?;
        let mut letters = Vec::with_capacity(self.len() + other.len());
        letters.extend_from_slice(&self.letters);
        letters.extend_from_slice(&other.letters);
        Ok(BraidWord { strands: self.strands, letters })
    }

    /// Product of a sequence of words on the same strand count.
    pub fn product<'a, I>(strands: usize, words: I) -> Result<Self>
    where
        I: IntoIterator<Item = &'a BraidWord>,
    {
        let mut out = BraidWord::identity(strands);
        for w in words {
            check_strands(strands, w.strands)?;
            out.letters.extend_from_slice(&w.letters);
        }
        Ok(out)
    }

    #[must_use]
    pub fn inverse(&self) -> Self {
        BraidWord {
            strands: self.strands,
            letters: self.letters.iter().rev().map(|g| g.inverse()).collect(),
        }
    }

    /// `self^e` for any integer `e`; `e = 0` gives the empty word.
    #[must_use]
    pub fn pow(&self, e: i64) -> Self {
        let base = if e < 0 { self.inverse() } else { self.clone() };
        let mut letters = Vec::with_capacity(base.len() * e.unsigned_abs() as usize);
        for _ in 0..e.unsigned_abs() {
            letters.extend_from_slice(&base.letters);
        }
        BraidWord { strands: self.strands, letters }
    }

    /// Removes adjacent pairs `σ_k^{ε} σ_k^{-ε}` until none remain.
    #[must_use]
    pub fn free_cancel(&self) -> Self {
        let mut out: Vec<Generator> = Vec::with_capacity(self.len());
        for &g in &self.letters {
            if out.last() == Some(&g.inverse()) {
                out.pop();
            } else {
                out.push(g);
            }
        }
        BraidWord { strands: self.strands, letters: out }
    }

    /// Mirror image: every `σ_k^{ε}` becomes `σ_k^{-ε}`.
    #[must_use]
    pub fn reflect(&self) -> Self {
        BraidWord {
            strands: self.strands,
            letters: self.letters.iter().map(|g| g.inverse()).collect(),
        }
    }

    /// The induced strand permutation.
    pub fn permutation(&self) -> Permutation {
        // position -> strand currently there, then invert
        let mut at: Vec<usize> = (0..self.strands).collect();
        for g in &self.letters {
            at.swap(g.index() - 1, g.index());
        }
        let mut images = vec![0; self.strands];
        for (end, &start) in at.iter().enumerate() {
            images[start] = end;
        }
        Permutation { images }
    }

    pub fn is_pure(&self) -> bool {
        self.permutation().is_identity()
    }
}

impl fmt::Debug for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BraidWord[{}]({})", self.strands, self)
    }
}

/// Prints in the CLI expression syntax; the empty word prints as `s1^0`.
impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return if self.strands >= 2 { f.write_str("s1^0") } else { f.write_str("1") };
        }
        for (pos, g) in self.letters.iter().enumerate() {
            if pos > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{g}")?;
        }
        Ok(())
    }
}

pub(crate) fn check_strands(left: usize, right: usize) -> Result<()> {
    if left == right {
        Ok(())
    } else {
        Err(Error::StrandMismatch { left, right })
    }
}

/// A permutation of strand positions.
///
/// `apply(k)` is the end position of the strand that starts at position `k`
/// (both 1-based). Under this convention [`BraidWord::permutation`] turns a
/// product `u · v` into `perm(u).then(&perm(v))`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(size: usize) -> Self {
        Permutation { images: (0..size).collect() }
    }

    /// From 1-based images; fails unless they form a bijection of `1..=size`.
    pub fn from_images(images: &[usize]) -> Result<Self> {
        let size = images.len();
        let mut seen = vec![false; size];
        for &i in images {
            if i == 0 || i > size || seen[i - 1] {
                return Err(Error::InvalidArgument(format!("{images:?} is not a permutation")));
            }
            seen[i - 1] = true;
        }
        Ok(Permutation { images: images.iter().map(|i| i - 1).collect() })
    }

    pub fn size(&self) -> usize {
        self.images.len()
    }

    /// Image of the 1-based position `k`.
    pub fn apply(&self, k: usize) -> usize {
        self.images[k - 1] + 1
    }

    /// 1-based images in order.
    pub fn images(&self) -> Vec<usize> {
        self.images.iter().map(|i| i + 1).collect()
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(k, &i)| k == i)
    }

    /// First `self`, then `other`: `k ↦ other(self(k))`.
    #[must_use]
    pub fn then(&self, other: &Permutation) -> Permutation {
        assert_eq!(self.size(), other.size());
        Permutation { images: self.images.iter().map(|&i| other.images[i]).collect() }
    }

    #[must_use]
    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0; self.size()];
        for (k, &i) in self.images.iter().enumerate() {
            images[i] = k;
        }
        Permutation { images }
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, i) in self.images.iter().enumerate() {
            if k > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{}->{}", k + 1, i + 1)?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(n: usize, s: &[i32]) -> BraidWord {
        BraidWord::from_signed(n, s).unwrap()
    }

    #[test]
    fn concat_is_syntactic() {
        assert_eq!(w(2, &[1]).concat(&w(2, &[-1])).unwrap(), w(2, &[1, -1]));
        assert_eq!(BraidWord::identity(3).concat(&w(3, &[2])).unwrap(), w(3, &[2]));
        assert_eq!(w(3, &[1, 2]).concat(&w(3, &[1])).unwrap(), w(3, &[1, 2, 1]));
        assert_eq!(
            w(3, &[1]).concat(&w(4, &[1])),
            Err(Error::StrandMismatch { left: 3, right: 4 })
        );
    }

    #[test]
    fn inverse_reverses_and_flips() {
        assert_eq!(w(3, &[1, 2]).inverse(), w(3, &[-2, -1]));
        assert_eq!(BraidWord::identity(3).inverse(), BraidWord::identity(3));
        assert_eq!(w(2, &[-1]).inverse(), w(2, &[1]));
    }

    #[test]
    fn free_cancel_examples() {
        assert_eq!(w(3, &[1, -1, 2]).free_cancel(), w(3, &[2]));
        assert!(w(3, &[1, 2, -2, -1]).free_cancel().is_empty());
        assert_eq!(w(3, &[1, 2, 1]).free_cancel(), w(3, &[1, 2, 1]));
    }

    #[test]
    fn permutation_examples() {
        assert_eq!(w(3, &[1]).permutation().images(), vec![2, 1, 3]);
        // A_{1,3}
        assert!(w(3, &[2, 1, 1, -2]).permutation().is_identity());
        assert_eq!(w(3, &[1, 2]).permutation().images(), vec![3, 1, 2]);
    }

    #[test]
    fn purity() {
        assert!(w(2, &[1, 1]).is_pure());
        assert!(!w(2, &[1]).is_pure());
        assert!(w(3, &[2, 1, 1, -2]).is_pure());
    }

    #[test]
    fn reflect_examples() {
        assert_eq!(w(3, &[1, 2]).reflect(), w(3, &[-1, -2]));
        let u = w(3, &[1, -2, 1]);
        assert_eq!(u.reflect().reflect(), u);
    }

    #[test]
    fn rejects_bad_indices() {
        assert_eq!(
            BraidWord::from_signed(3, &[3]),
            Err(Error::IndexOutOfRange { index: 3, strands: 3 })
        );
        assert!(BraidWord::from_signed(3, &[0]).is_err());
        assert!(BraidWord::sigma(3, 0).is_err());
    }

    #[test]
    fn display() {
        assert_eq!(w(3, &[1, -2]).to_string(), "s1 s2^-1");
        assert_eq!(BraidWord::identity(3).to_string(), "s1^0");
        assert_eq!(w(4, &[1, 3]).pow(-2), w(4, &[-3, -1, -3, -1]));
    }

    #[test]
    fn permutation_from_images() {
        let p = Permutation::from_images(&[2, 3, 1]).unwrap();
        assert_eq!(p.apply(3), 1);
        assert!(p.then(&p.inverse()).is_identity());
        assert!(Permutation::from_images(&[1, 1]).is_err());
    }
}
