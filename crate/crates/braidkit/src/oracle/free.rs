//! Freely reduced words in a free group of finite rank.

use std::fmt;

/// A freely reduced word in `x_1, …, x_r`.
///
/// Letters are signed generator indices: `k` is `x_k`, `-k` is `x_k^{-1}`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FreeWord {
    rank: usize,
    letters: Vec<i32>,
}

impl FreeWord {
    pub fn identity(rank: usize) -> Self {
        FreeWord { rank, letters: Vec::new() }
    }

    /// The generator `x_k`.
    pub fn generator(rank: usize, k: usize) -> Self {
        assert!(k >= 1 && k <= rank);
        FreeWord { rank, letters: vec![k as i32] }
    }

    /// Freely reduces `letters`. Panics on a zero or out-of-range letter.
    pub fn from_letters(rank: usize, letters: &[i32]) -> Self {
        let mut w = FreeWord::identity(rank);
        for &x in letters {
            w.push(x);
        }
        w
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn letters(&self) -> &[i32] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Appends one letter, cancelling against the last one if possible.
    pub fn push(&mut self, x: i32) {
        assert!(x != 0 && x.unsigned_abs() as usize <= self.rank, "letter {x} out of range");
        if self.letters.last() == Some(&-x) {
            self.letters.pop();
        } else {
            self.letters.push(x);
        }
    }

    pub fn append(&mut self, other: &FreeWord) {
        for &x in &other.letters {
            self.push(x);
        }
    }

    #[must_use]
    pub fn inverse(&self) -> Self {
        FreeWord { rank: self.rank, letters: self.letters.iter().rev().map(|x| -x).collect() }
    }

    /// Image of this word under the substitution `x_k ↦ images[k-1]`.
    pub fn substitute(&self, images: &[FreeWord]) -> FreeWord {
        let rank = images.first().map_or(self.rank, FreeWord::rank);
        let mut out = FreeWord::identity(rank);
        for &x in &self.letters {
            let img = &images[x.unsigned_abs() as usize - 1];
            if x > 0 {
                for &y in &img.letters {
                    out.push(y);
                }
            } else {
                for &y in img.letters.iter().rev() {
                    out.push(-y);
                }
            }
        }
        out
    }

    /// Splits a conjugate `W x_k^e W^{-1}` of a single generator power.
    ///
    /// Returns `(W, k, e)` with `W` not ending in `x_k^{±1}`, or `None` if the
    /// word is not of that shape.
    pub fn as_conjugate(&self) -> Option<(FreeWord, usize, i32)> {
        let len = self.letters.len();
        if len == 0 {
            return None;
        }
        // the conjugator is the longest prefix that is the inverse of the matching suffix
        let mut c = 0;
        while c < len / 2 && self.letters[c] == -self.letters[len - 1 - c] {
            c += 1;
        }
        let core = &self.letters[c..len - c];
        let x = *core.first()?;
        if !core.iter().all(|&y| y == x) {
            return None;
        }
        // in a reduced word the conjugator cannot end in x_k^{±1}
        let prefix = self.letters[..c].to_vec();
        let exp = core.len() as i32 * x.signum();
        Some((FreeWord { rank: self.rank, letters: prefix }, x.unsigned_abs() as usize, exp))
    }
}

impl fmt::Debug for FreeWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FreeWord({self})")
    }
}

impl fmt::Display for FreeWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return f.write_str("1");
        }
        for (pos, &x) in self.letters.iter().enumerate() {
            if pos > 0 {
                f.write_str(" ")?;
            }
            if x > 0 {
                write!(f, "x{x}")?;
            } else {
                write!(f, "x{}^-1", -x)?;
            }
        }
        Ok(())
    }
}

/// An endomorphism of the free group given by generator images.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FreeAutomorphism {
    images: Vec<FreeWord>,
}

impl FreeAutomorphism {
    pub fn identity(rank: usize) -> Self {
        FreeAutomorphism { images: (1..=rank).map(|k| FreeWord::generator(rank, k)).collect() }
    }

    pub fn from_images(images: Vec<FreeWord>) -> Self {
        let rank = images.len();
        assert!(images.iter().all(|w| w.rank() == rank));
        FreeAutomorphism { images }
    }

    pub fn rank(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[FreeWord] {
        &self.images
    }

    /// Image of `x_k`.
    pub fn image(&self, k: usize) -> &FreeWord {
        &self.images[k - 1]
    }

    pub fn is_identity(&self) -> bool {
        self.images
            .iter()
            .enumerate()
            .all(|(k, w)| w.letters() == [k as i32 + 1])
    }

    pub fn apply(&self, w: &FreeWord) -> FreeWord {
        w.substitute(&self.images)
    }

    /// `other ∘ self`: apply `self` first, then `other`.
    #[must_use]
    pub fn then(&self, other: &FreeAutomorphism) -> FreeAutomorphism {
        FreeAutomorphism { images: self.images.iter().map(|w| other.apply(w)).collect() }
    }

    /// Total number of letters across all generator images.
    pub fn total_len(&self) -> usize {
        self.images.iter().map(FreeWord::len).sum()
    }
}
