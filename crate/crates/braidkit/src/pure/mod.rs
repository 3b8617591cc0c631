//! The pure braid alphabet `A_{i,j}` and words over it.
//!
//! `A_{i,j} = σ_{j-1} ⋯ σ_{i+1} σ_i^2 σ_{i+1}^{-1} ⋯ σ_{j-1}^{-1}` for
//! `1 ≤ i < j ≤ n`. The derived letters `A_{0,j}` stand for
//! `A_{j,n}^{-1} ⋯ A_{j,j+1}^{-1} A_{j-1,j}^{-1} ⋯ A_{1,j}^{-1}`.

mod comb;

use std::fmt;

use crate::braid::{BraidWord, Generator};
use crate::error::{Error, Result};

pub use comb::comb;

/// `A_{i,j}^{±1}` with `0 ≤ i < j`; `i = 0` marks a derived letter.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PureLetter {
    i: usize,
    j: usize,
    sign: i8,
}

impl PureLetter {
    /// `A_{i,j}^{sign}`. The pair is unordered: `A_{j,i}` is stored as
    /// `A_{i,j}`. `A_{i,i}` is rejected.
    pub fn new(i: usize, j: usize, sign: i32) -> Result<Self> {
        if i == j {
            return Err(Error::DiagonalLetter(i));
        }
        let (i, j) = if i < j { (i, j) } else { (j, i) };
        Ok(PureLetter { i, j, sign: if sign < 0 { -1 } else { 1 } })
    }

    pub(crate) fn raw(i: usize, j: usize, sign: i32) -> Self {
        debug_assert!(i < j);
        PureLetter { i, j, sign: if sign < 0 { -1 } else { 1 } }
    }

    pub fn pair(self) -> (usize, usize) {
        (self.i, self.j)
    }

    pub fn sign(self) -> i32 {
        i32::from(self.sign)
    }

    pub fn is_derived(self) -> bool {
        self.i == 0
    }

    #[must_use]
    pub fn inverse(self) -> Self {
        PureLetter { sign: -self.sign, ..self }
    }
}

impl fmt::Debug for PureLetter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for PureLetter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "A[{},{}]", self.i, self.j)?;
        if self.sign < 0 {
            f.write_str("^-1")?;
        }
        Ok(())
    }
}

/// A word in the letters `A_{i,j}^{±1}` on `n` strands.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PureWord {
    strands: usize,
    letters: Vec<PureLetter>,
}

impl PureWord {
    pub fn identity(strands: usize) -> Self {
        PureWord { strands, letters: Vec::new() }
    }

    pub fn new(strands: usize, letters: Vec<PureLetter>) -> Result<Self> {
        if let Some(bad) = letters.iter().find(|l| l.j > strands) {
            return Err(Error::IndexOutOfRange { index: bad.j, strands });
        }
        Ok(PureWord { strands, letters })
    }

    /// The single letter `A_{i,j}`.
    ///
    /// ```
    /// use braidkit::PureWord;
    /// let c = PureWord::letter(3, 1, 3).unwrap();
    /// assert_eq!(c.expand().to_string(), "s2 s1 s1 s2^-1");
    /// ```
    pub fn letter(strands: usize, i: usize, j: usize) -> Result<Self> {
        Self::new(strands, vec![PureLetter::new(i, j, 1)?])
    }

    /// Builds a word from `(i, j, sign)` triples.
    pub fn from_triples(strands: usize, triples: &[(usize, usize, i32)]) -> Result<Self> {
        let letters = triples
            .iter()
            .map(|&(i, j, s)| PureLetter::new(i, j, s))
            .collect::<Result<Vec<_>>>()?;
        Self::new(strands, letters)
    }

    pub(crate) fn from_parts_unchecked(strands: usize, letters: Vec<PureLetter>) -> Self {
        PureWord { strands, letters }
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn letters(&self) -> &[PureLetter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn has_derived(&self) -> bool {
        self.letters.iter().any(|l| l.is_derived())
    }

    /// The same letters on more strands.
    pub fn embed(&self, strands: usize) -> Result<Self> {
        if strands < self.strands {
            return Err(Error::StrandMismatch { left: self.strands, right: strands });
        }
        if self.has_derived() {
            // A_{0,j} depends on n
            return Ok(PureWord { strands, letters: self.without_derived().letters });
        }
        Ok(PureWord { strands, letters: self.letters.clone() })
    }

    pub fn concat(&self, other: &PureWord) -> Result<Self> {
        crate::braid::check_strands(self.strands, other.strands)?;
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Ok(PureWord { strands: self.strands, letters })
    }

    pub fn product<'a, I>(strands: usize, words: I) -> Result<Self>
    where
        I: IntoIterator<Item = &'a PureWord>,
    {
        let mut out = PureWord::identity(strands);
        for w in words {
            crate::braid::check_strands(strands, w.strands)?;
            out.letters.extend_from_slice(&w.letters);
        }
        Ok(out)
    }

    #[must_use]
    pub fn inverse(&self) -> Self {
        PureWord {
            strands: self.strands,
            letters: self.letters.iter().rev().map(|l| l.inverse()).collect(),
        }
    }

    #[must_use]
    pub fn pow(&self, e: i64) -> Self {
        let base = if e < 0 { self.inverse() } else { self.clone() };
        let mut letters = Vec::with_capacity(base.len() * e.unsigned_abs() as usize);
        for _ in 0..e.unsigned_abs() {
            letters.extend_from_slice(&base.letters);
        }
        PureWord { strands: self.strands, letters }
    }

    /// Cancels adjacent inverse letters.
    #[must_use]
    pub fn free_cancel(&self) -> Self {
        let mut out: Vec<PureLetter> = Vec::with_capacity(self.len());
        for &l in &self.letters {
            if out.last() == Some(&l.inverse()) {
                out.pop();
            } else {
                out.push(l);
            }
        }
        PureWord { strands: self.strands, letters: out }
    }

    /// `[x, y] = x^{-1} y^{-1} x y`.
    pub fn commutator(&self, other: &PureWord) -> Result<Self> {
        PureWord::product(self.strands, [&self.inverse(), &other.inverse(), self, other])
    }

    /// `β^{-1} x β`.
    pub fn conjugate_by(&self, beta: &PureWord) -> Result<Self> {
        PureWord::product(self.strands, [&beta.inverse(), self, beta])
    }

    /// Replaces every derived letter by its standard-alphabet word.
    #[must_use]
    pub fn without_derived(&self) -> Self {
        let n = self.strands;
        let mut letters = Vec::with_capacity(self.len());
        for &l in &self.letters {
            if l.is_derived() {
                let body = a0_letters(l.j, n);
                if l.sign > 0 {
                    letters.extend(body);
                } else {
                    letters.extend(body.iter().rev().map(|x| x.inverse()));
                }
            } else {
                letters.push(l);
            }
        }
        PureWord { strands: n, letters }
    }

    /// The σ-word obtained by substituting each letter.
    pub fn expand(&self) -> BraidWord {
        let mut out = Vec::new();
        for &l in &self.without_derived().letters {
            push_expansion(&mut out, l);
        }
        BraidWord::from_parts_unchecked(self.strands, out)
    }

    /// Exponent sums of the standard letters; derived letters count through
    /// their expansion.
    pub fn abelianize(&self) -> AbelianVector {
        let mut v = AbelianVector::zero(self.strands);
        for &l in &self.without_derived().letters {
            v.add(l.i, l.j, l.sign());
        }
        v
    }

    /// The `(i, j)` entry of [`PureWord::abelianize`].
    pub fn exponent_sum(&self, i: usize, j: usize) -> Result<i64> {
        if i == 0 || i >= j || j > self.strands {
            return Err(Error::InvalidArgument(format!("({i},{j}) is not a standard pair")));
        }
        Ok(self.abelianize().get(i, j))
    }

    /// Forgets strand `k`, letter by letter: `A_{i,j}` dies when `k ∈ {i, j}`
    /// and is renumbered otherwise.
    pub fn delete_strand(&self, k: usize) -> Result<PureWord> {
        let n = self.strands;
        if k == 0 || k > n || n < 2 {
            return Err(Error::IndexOutOfRange { index: k, strands: n });
        }
        let shift = |x: usize| if x > k { x - 1 } else { x };
        let letters = self
            .without_derived()
            .letters
            .into_iter()
            .filter(|l| l.i != k && l.j != k)
            .map(|l| PureLetter { i: shift(l.i), j: shift(l.j), sign: l.sign })
            .collect();
        Ok(PureWord { strands: n - 1, letters })
    }
}

fn push_expansion(out: &mut Vec<Generator>, l: PureLetter) {
    debug_assert!(l.i >= 1);
    for k in (l.i + 1..l.j).rev() {
        out.push(Generator::pos(k));
    }
    out.push(Generator::new(l.i, l.sign()));
    out.push(Generator::new(l.i, l.sign()));
    for k in l.i + 1..l.j {
        out.push(Generator::neg(k));
    }
}

fn a0_letters(j: usize, n: usize) -> Vec<PureLetter> {
    let mut letters = Vec::with_capacity(n.saturating_sub(1));
    for k in (j + 1..=n).rev() {
        letters.push(PureLetter::raw(j, k, -1));
    }
    for k in (1..j).rev() {
        letters.push(PureLetter::raw(k, j, -1));
    }
    letters
}

/// `A_{0,j}` written in the standard alphabet of `P_n`.
///
/// ```
/// use braidkit::pure::a0;
/// assert_eq!(a0(1, 3).unwrap().to_string(), "A[1,3]^-1 A[1,2]^-1");
/// ```
pub fn a0(j: usize, n: usize) -> Result<PureWord> {
    if j == 0 || j > n {
        return Err(Error::IndexOutOfRange { index: j, strands: n });
    }
    Ok(PureWord { strands: n, letters: a0_letters(j, n) })
}

/// The derived letter `A_{0,j}` as a one-letter word.
pub fn a0_letter(j: usize, n: usize) -> Result<PureWord> {
    if j == 0 || j > n {
        return Err(Error::IndexOutOfRange { index: j, strands: n });
    }
    Ok(PureWord { strands: n, letters: vec![PureLetter::raw(0, j, 1)] })
}

/// The full twist `z_n = A_{1,2} (A_{1,3} A_{2,3}) ⋯ (A_{1,n} ⋯ A_{n-1,n})`.
pub fn full_twist(n: usize) -> Result<PureWord> {
    if n < 2 {
        return Err(Error::InvalidArgument(format!("the full twist needs at least 2 strands, got {n}")));
    }
    let letters = (2..=n)
        .flat_map(|j| (1..j).map(move |i| PureLetter::raw(i, j, 1)))
        .collect();
    Ok(PureWord { strands: n, letters })
}

impl fmt::Debug for PureWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PureWord[{}]({})", self.strands, self)
    }
}

/// Prints in the CLI expression syntax; the empty word prints as `A[1,2]^0`.
impl fmt::Display for PureWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return if self.strands >= 2 { f.write_str("A[1,2]^0") } else { f.write_str("1") };
        }
        for (pos, l) in self.letters.iter().enumerate() {
            if pos > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

/// Integer exponent per standard pair `(i, j)`, `1 ≤ i < j ≤ n`, ordered
/// lexicographically: `(1,2), (1,3), …, (1,n), (2,3), …`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct AbelianVector {
    strands: usize,
    exponents: Vec<i64>,
}

impl AbelianVector {
    pub fn zero(strands: usize) -> Self {
        AbelianVector { strands, exponents: vec![0; strands * strands.saturating_sub(1) / 2] }
    }

    pub fn from_exponents(strands: usize, exponents: Vec<i64>) -> Result<Self> {
        if exponents.len() != strands * strands.saturating_sub(1) / 2 {
            return Err(Error::InvalidArgument(format!(
                "expected {} exponents for {strands} strands",
                strands * strands.saturating_sub(1) / 2
            )));
        }
        Ok(AbelianVector { strands, exponents })
    }

    fn slot(&self, i: usize, j: usize) -> usize {
        debug_assert!(1 <= i && i < j && j <= self.strands);
        let n = self.strands;
        // pairs (a, b) with a < i come first: sum_{a<i} (n - a)
        (i - 1) * n - (i - 1) * i / 2 + (j - i - 1)
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn exponents(&self) -> &[i64] {
        &self.exponents
    }

    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.exponents[self.slot(i, j)]
    }

    pub fn add(&mut self, i: usize, j: usize, by: i32) {
        let s = self.slot(i, j);
        self.exponents[s] += i64::from(by);
    }

    pub fn is_zero(&self) -> bool {
        self.exponents.iter().all(|&e| e == 0)
    }

    /// `(pair, exponent)` in slot order.
    pub fn entries(&self) -> impl Iterator<Item = ((usize, usize), i64)> + '_ {
        let n = self.strands;
        (1..n)
            .flat_map(move |i| (i + 1..=n).map(move |j| (i, j)))
            .zip(self.exponents.iter().copied())
    }
}

impl fmt::Display for AbelianVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (pos, ((i, j), e)) in self.entries().enumerate() {
            if pos > 0 {
                f.write_str(" ")?;
            }
            write!(f, "({i},{j}):{e}")?;
        }
        Ok(())
    }
}

/// Abelianization computed from crossings: for each strand pair, half the
/// signed number of crossings between the two strands.
pub fn linking_vector(u: &BraidWord) -> Result<AbelianVector> {
    if !u.is_pure() {
        return Err(Error::NotPure);
    }
    let n = u.strands();
    let mut twice = AbelianVector::zero(n);
    let mut at: Vec<usize> = (1..=n).collect();
    for g in u.letters() {
        let k = g.index();
        let (a, b) = (at[k - 1], at[k]);
        twice.add(a.min(b), a.max(b), g.sign());
        at.swap(k - 1, k);
    }
    // pure braids cross every pair an even number of times in total
    for e in twice.exponents.iter_mut() {
        debug_assert!(*e % 2 == 0);
        *e /= 2;
    }
    Ok(twice)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bw(n: usize, s: &[i32]) -> BraidWord {
        BraidWord::from_signed(n, s).unwrap()
    }

    #[test]
    fn letter_normalization() {
        assert_eq!(PureLetter::new(3, 1, 1).unwrap().pair(), (1, 3));
        assert_eq!(PureLetter::new(2, 2, 1), Err(Error::DiagonalLetter(2)));
    }

    #[test]
    fn expansion_examples() {
        assert_eq!(PureWord::letter(3, 1, 2).unwrap().expand(), bw(3, &[1, 1]));
        assert_eq!(PureWord::letter(3, 1, 3).unwrap().expand(), bw(3, &[2, 1, 1, -2]));
        assert_eq!(a0_letter(2, 3).unwrap().expand(), bw(3, &[-2, -2, -1, -1]));
        let inv = PureWord::from_triples(3, &[(1, 3, -1)]).unwrap();
        assert_eq!(inv.expand(), bw(3, &[2, -1, -1, -2]));
    }

    #[test]
    fn a0_examples() {
        assert_eq!(a0(1, 3).unwrap(), PureWord::from_triples(3, &[(1, 3, -1), (1, 2, -1)]).unwrap());
        assert_eq!(a0(3, 3).unwrap(), PureWord::from_triples(3, &[(2, 3, -1), (1, 3, -1)]).unwrap());
        assert!(a0(0, 3).is_err());
        assert!(a0(4, 3).is_err());
    }

    #[test]
    fn full_twist_examples() {
        assert_eq!(full_twist(2).unwrap().to_string(), "A[1,2]");
        assert_eq!(full_twist(3).unwrap().to_string(), "A[1,2] A[1,3] A[2,3]");
        assert_eq!(full_twist(3).unwrap().abelianize().exponents(), &[1, 1, 1]);
        assert!(full_twist(1).is_err());
    }

    #[test]
    fn abelianize_examples() {
        let a = PureWord::letter(3, 1, 2).unwrap();
        let b = PureWord::letter(3, 2, 3).unwrap();
        assert!(a.commutator(&b).unwrap().abelianize().is_zero());
        assert_eq!(a0(2, 3).unwrap().abelianize().exponents(), &[-1, 0, -1]);
        assert_eq!(a0_letter(2, 3).unwrap().abelianize().exponents(), &[-1, 0, -1]);
    }

    #[test]
    fn exponent_sums() {
        let w = PureWord::from_triples(3, &[(1, 2, 1), (1, 2, 1), (1, 2, 1), (1, 3, -1)]).unwrap();
        assert_eq!(w.exponent_sum(1, 2).unwrap(), 3);
        assert_eq!(w.exponent_sum(1, 3).unwrap(), -1);
        assert_eq!(w.exponent_sum(2, 3).unwrap(), 0);
        assert!(w.exponent_sum(0, 2).is_err());
    }

    #[test]
    fn linking_examples() {
        assert_eq!(linking_vector(&bw(2, &[1, 1])).unwrap().exponents(), &[1]);
        let z3 = full_twist(3).unwrap().expand();
        assert_eq!(linking_vector(&z3).unwrap().exponents(), &[1, 1, 1]);
        let a = PureWord::letter(3, 1, 2).unwrap();
        let b = PureWord::letter(3, 2, 3).unwrap();
        let c = a.commutator(&b).unwrap().expand();
        assert!(linking_vector(&c).unwrap().is_zero());
        assert_eq!(linking_vector(&bw(3, &[1])), Err(Error::NotPure));
    }

    #[test]
    fn slot_order_is_lexicographic() {
        let v = AbelianVector::zero(4);
        let pairs: Vec<_> = v.entries().map(|(p, _)| p).collect();
        assert_eq!(pairs, vec![(1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)]);
        for (idx, (i, j)) in pairs.into_iter().enumerate() {
            assert_eq!(v.slot(i, j), idx);
        }
    }

    #[test]
    fn symbolic_deletion_renumbers() {
        let w = PureWord::from_triples(4, &[(1, 4, 1), (2, 3, -1), (3, 4, 1)]).unwrap();
        assert_eq!(w.delete_strand(3).unwrap().to_string(), "A[1,3]");
        assert_eq!(w.delete_strand(1).unwrap().to_string(), "A[1,2]^-1 A[2,3]");
    }
}
