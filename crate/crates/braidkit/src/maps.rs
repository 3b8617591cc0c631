//! Homomorphisms between braid groups.
//!
//! Strand deletion `d_k` acts geometrically on σ-words. The automorphisms
//! `θ_n`, `θ_n^{-1}` and `w_n` are [`GeneratorMap`]s given by the images of
//! the standard letters; derived letters are expanded before substitution.
//! `∂_n = d_1 ∘ θ_n`.

use std::collections::BTreeMap;

use crate::braid::{check_strands, BraidWord, Generator};
use crate::error::{Error, Result};
use crate::pure::{a0_letter, PureLetter, PureWord};

/// Removes the strand that starts at position `k`.
///
/// The tracked strand's position `p` is updated at every crossing it takes
/// part in; other crossings are kept and renumbered when they lie right of
/// `p`.
///
/// ```
/// use braidkit::{maps::delete_strand, PureWord};
/// let a13 = PureWord::letter(3, 1, 3).unwrap().expand();
/// assert_eq!(delete_strand(&a13, 2).unwrap().to_string(), "s1 s1");
/// ```
pub fn delete_strand(u: &BraidWord, k: usize) -> Result<BraidWord> {
    let n = u.strands();
    if k == 0 || k > n || n < 2 {
        return Err(Error::IndexOutOfRange { index: k, strands: n });
    }
    let mut p = k;
    let mut out = Vec::with_capacity(u.len());
    for &g in u.letters() {
        let i = g.index();
        if p == i {
            p = i + 1;
        } else if p == i + 1 {
            p = i;
        } else if i + 1 < p {
            out.push(g);
        } else {
            out.push(Generator::new(i - 1, g.sign()));
        }
    }
    Ok(BraidWord::from_parts_unchecked(n - 1, out))
}

/// A homomorphism `P_n → P_{n'}` given on the standard letters.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneratorMap {
    name: String,
    source: usize,
    target: usize,
    images: BTreeMap<(usize, usize), PureWord>,
}

impl GeneratorMap {
    /// Fails unless every `A_{i,j}`, `1 ≤ i < j ≤ source`, has exactly one
    /// image on `target` strands.
    pub fn new(
        name: impl Into<String>,
        source: usize,
        target: usize,
        images: BTreeMap<(usize, usize), PureWord>,
    ) -> Result<Self> {
        let expected = source * source.saturating_sub(1) / 2;
        if images.len() != expected {
            return Err(Error::InvalidArgument(format!(
                "expected {expected} generator images, got {}",
                images.len()
            )));
        }
        for (&(i, j), img) in &images {
            if !(1 <= i && i < j && j <= source) {
                return Err(Error::InvalidArgument(format!("({i},{j}) is not a standard pair")));
            }
            check_strands(target, img.strands())?;
        }
        Ok(GeneratorMap { name: name.into(), source, target, images })
    }

    fn from_fn(name: &str, n: usize, image: impl Fn(usize, usize) -> PureWord) -> Self {
        let images = (2..=n)
            .flat_map(|j| (1..j).map(move |i| (i, j)))
            .map(|(i, j)| ((i, j), image(i, j)))
            .collect();
        GeneratorMap { name: name.into(), source: n, target: n, images }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn source(&self) -> usize {
        self.source
    }

    pub fn target(&self) -> usize {
        self.target
    }

    pub fn image(&self, i: usize, j: usize) -> Option<&PureWord> {
        self.images.get(&(i, j))
    }

    /// Letter-by-letter substitution.
    pub fn apply(&self, w: &PureWord) -> Result<PureWord> {
        check_strands(self.source, w.strands())?;
        let mut letters: Vec<PureLetter> = Vec::new();
        for l in w.without_derived().letters() {
            let img = &self.images[&l.pair()];
            if l.sign() > 0 {
                letters.extend_from_slice(img.letters());
            } else {
                letters.extend(img.letters().iter().rev().map(|x| x.inverse()));
            }
        }
        PureWord::new(self.target, letters)
    }

    /// The identity of `P_n`.
    pub fn identity(n: usize) -> Self {
        Self::from_fn("id", n, |i, j| letter(n, i, j, 1))
    }

    /// `θ_n`: fixes `A_{i,j}` for `i ≥ 2` and sends `A_{1,j}` to
    /// `A_{1,j}^{-1} A_{0,j} A_{1,j}`.
    pub fn theta(n: usize) -> Self {
        Self::from_fn("theta", n, |i, j| {
            let a = letter(n, i, j, 1);
            if i == 1 {
                derived(j, n).conjugate_by(&a).expect("same strands")
            } else {
                a
            }
        })
    }

    /// `θ_n^{-1}`: sends `A_{1,j}` to `A_{0,j}` and fixes the rest.
    pub fn theta_inv(n: usize) -> Self {
        Self::from_fn("theta-inv", n, |i, j| if i == 1 { derived(j, n) } else { letter(n, i, j, 1) })
    }

    /// `w_n`: fixes `A_{i,j}` for `j < n` and sends `A_{i,n}` to
    /// `(A_{i,n} A_{1,i} ⋯ A_{i-1,i} A_{i,i+1} ⋯ A_{i,n-1})^{-1}`.
    pub fn w(n: usize) -> Self {
        Self::from_fn("w", n, |i, j| {
            if j < n {
                return letter(n, i, j, 1);
            }
            let mut inner = vec![PureLetter::raw(i, n, 1)];
            inner.extend((1..n).filter(|&k| k != i).map(|k| PureLetter::raw(k.min(i), k.max(i), 1)));
            PureWord::new(n, inner).expect("indices below n").inverse()
        })
    }

    /// `w_n` in the form `A_{i,n} ↦ A_{i,n} A_{0,i} A_{i,n}^{-1}`.
    pub fn w_conjugate_form(n: usize) -> Self {
        Self::from_fn("w-conj", n, |i, j| {
            let a = letter(n, i, j, 1);
            if j < n {
                a
            } else {
                derived(i, n).conjugate_by(&a.inverse()).expect("same strands")
            }
        })
    }
}

fn letter(n: usize, i: usize, j: usize, sign: i32) -> PureWord {
    PureWord::new(n, vec![PureLetter::raw(i, j, sign)]).expect("index within n")
}

fn derived(j: usize, n: usize) -> PureWord {
    a0_letter(j, n).expect("index within n")
}

/// Applies `m` to `w`.
pub fn apply_map(m: &GeneratorMap, w: &PureWord) -> Result<PureWord> {
    m.apply(w)
}

pub fn theta(w: &PureWord) -> Result<PureWord> {
    require_strands(w, 2)?;
    GeneratorMap::theta(w.strands()).apply(w)
}

pub fn theta_inv(w: &PureWord) -> Result<PureWord> {
    require_strands(w, 2)?;
    GeneratorMap::theta_inv(w.strands()).apply(w)
}

pub fn w_map(w: &PureWord) -> Result<PureWord> {
    require_strands(w, 3)?;
    GeneratorMap::w(w.strands()).apply(w)
}

/// `∂_n(w) = d_1(θ_n(w))`, evaluated geometrically on the σ-expansion.
pub fn del(w: &PureWord) -> Result<BraidWord> {
    require_strands(w, 2)?;
    delete_strand(&theta(w)?.expand(), 1)
}

/// `∂_n(w)` computed in the `A` alphabet, using letterwise strand deletion.
///
/// Equal as a braid to [`del`]; keeps results in the `A` alphabet so that
/// maps can be composed without combing.
pub fn del_pure(w: &PureWord) -> Result<PureWord> {
    require_strands(w, 2)?;
    theta(w)?.delete_strand(1)
}

/// `Ψ_β(x) = β^{-1} x β`.
pub fn conjugate(x: &BraidWord, beta: &BraidWord) -> Result<BraidWord> {
    check_strands(x.strands(), beta.strands())?;
    BraidWord::product(x.strands(), [&beta.inverse(), x, beta])
}

/// `[x, y] = x^{-1} y^{-1} x y`.
pub fn commutator(x: &BraidWord, y: &BraidWord) -> Result<BraidWord> {
    check_strands(x.strands(), y.strands())?;
    BraidWord::product(x.strands(), [&x.inverse(), &y.inverse(), x, y])
}

fn require_strands(w: &PureWord, min: usize) -> Result<()> {
    if w.strands() < min {
        return Err(Error::InvalidArgument(format!(
            "map needs at least {min} strands, got {}",
            w.strands()
        )));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::Oracle;
    use crate::pure::{a0, full_twist};

    fn pw(n: usize, t: &[(usize, usize, i32)]) -> PureWord {
        PureWord::from_triples(n, t).unwrap()
    }

    fn same(x: &BraidWord, y: &BraidWord) -> bool {
        Oracle::default().equal(x, y).unwrap()
    }

    #[test]
    fn deletion_examples() {
        let a13 = pw(3, &[(1, 3, 1)]).expand();
        assert!(delete_strand(&a13, 3).unwrap().is_empty());
        assert!(delete_strand(&BraidWord::identity(4), 1).unwrap().is_empty());
        let d2 = delete_strand(&a13, 2).unwrap();
        assert!(same(&d2, &pw(2, &[(1, 2, 1)]).expand()));
        assert!(delete_strand(&a13, 0).is_err());
        assert!(delete_strand(&a13, 4).is_err());
    }

    #[test]
    fn theta_examples() {
        assert_eq!(theta(&pw(3, &[(2, 3, 1)])).unwrap(), pw(3, &[(2, 3, 1)]));
        assert_eq!(theta(&pw(3, &[(1, 2, 1)])).unwrap().to_string(), "A[1,2]^-1 A[0,2] A[1,2]");
        let t = theta(&a0(2, 3).unwrap()).unwrap();
        assert!(same(&t.expand(), &pw(3, &[(1, 2, 1)]).expand()));
    }

    #[test]
    fn theta_inv_examples() {
        assert_eq!(theta_inv(&pw(3, &[(1, 3, 1)])).unwrap().to_string(), "A[0,3]");
        assert_eq!(theta_inv(&pw(3, &[(2, 3, 1)])).unwrap(), pw(3, &[(2, 3, 1)]));
        let w = pw(3, &[(1, 2, 1), (2, 3, 1)]);
        assert!(same(&theta(&theta_inv(&w).unwrap()).unwrap().expand(), &w.expand()));
    }

    #[test]
    fn del_examples() {
        assert!(Oracle::default().is_trivial(&del(&a0(2, 3).unwrap()).unwrap()).unwrap());
        for n in [3, 4] {
            let d = del(&pw(n, &[(1, 2, 1)])).unwrap();
            assert!(same(&d, &a0_letter(1, n - 1).unwrap().expand()));
        }
        let d = del(&a0(1, 3).unwrap()).unwrap();
        assert!(same(&d, &BraidWord::from_signed(2, &[1, 1, 1, 1]).unwrap()));
    }

    #[test]
    fn w_examples() {
        assert_eq!(w_map(&pw(3, &[(1, 2, 1)])).unwrap(), pw(3, &[(1, 2, 1)]));
        assert_eq!(w_map(&pw(3, &[(1, 3, 1)])).unwrap(), pw(3, &[(1, 2, -1), (1, 3, -1)]));
        let lhs = w_map(&a0(3, 3).unwrap()).unwrap().expand();
        let z2 = full_twist(3).unwrap().pow(2);
        let rhs = a0(3, 3).unwrap().concat(&z2).unwrap().expand();
        assert!(same(&lhs, &rhs));
    }

    #[test]
    fn conjugation_examples() {
        let x = pw(3, &[(2, 3, 1)]).expand();
        assert_eq!(conjugate(&x, &BraidWord::identity(3)).unwrap(), x);
        let s1 = BraidWord::sigma(3, 1).unwrap();
        assert!(same(&conjugate(&x, &s1).unwrap(), &pw(3, &[(1, 3, 1)]).expand()));
        let half = BraidWord::from_signed(3, &[1, 2, 1]).unwrap();
        let a = pw(3, &[(1, 2, 1)]).expand();
        assert!(same(&conjugate(&a, &half).unwrap(), &x));
    }

    #[test]
    fn commutator_examples() {
        let x = pw(3, &[(1, 3, 1), (2, 3, -1)]).expand();
        assert!(Oracle::default().is_trivial(&commutator(&x, &x).unwrap()).unwrap());
    }

    #[test]
    fn apply_identity() {
        let w = pw(3, &[(1, 2, 1), (2, 3, 1)]);
        assert_eq!(apply_map(&GeneratorMap::identity(3), &w).unwrap(), w);
    }

    #[test]
    fn generator_map_validation() {
        let mut images = BTreeMap::new();
        images.insert((1, 2), pw(2, &[(1, 2, -1)]));
        assert!(GeneratorMap::new("inv", 2, 2, images.clone()).is_ok());
        images.insert((1, 3), pw(2, &[]));
        assert!(GeneratorMap::new("bad", 2, 2, images).is_err());
    }
}
