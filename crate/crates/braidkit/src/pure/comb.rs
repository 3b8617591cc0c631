//! Combing pure σ-words into the `A_{i,j}` alphabet.
//!
//! For pure `u` on `n` strands let `v` be `u` with strand `n` deleted, read
//! back on `n` strands. Then `γ = u v^{-1}` lies in the kernel of `d_n`,
//! which is free on `A_{1,n}, …, A_{n-1,n}`, and `u = γ v`.
//!
//! To write `γ` in those generators, act on `x_n`: `γ(x_n) = W x_n W^{-1}`.
//! Erasing `x_n` from `W` is a homomorphism from the kernel to
//! `F(x_1, …, x_{n-1})` sending `A_{i,n}` to `x_i`, so the erased conjugator
//! spells `γ` with `x_i` read as `A_{i,n}`.

use super::{PureLetter, PureWord};
use crate::braid::BraidWord;
use crate::error::{Error, Result};
use crate::maps::delete_strand;
use crate::oracle::{act_on, FreeWord, Oracle};

/// The `A_{·,n}` word of an element of the kernel of `d_n`.
fn last_strand_word(gamma: &BraidWord, oracle: &Oracle) -> Result<Vec<PureLetter>> {
    let n = gamma.strands();
    let image = act_on(&FreeWord::generator(n, n), gamma, oracle.limits.max_free_len)?;
    if image.len() == 1 {
        return Ok(Vec::new());
    }
    let (conj, k, e) = image.as_conjugate().ok_or(Error::NotPure)?;
    if k != n || e != 1 {
        return Err(Error::NotPure);
    }
    let mut erased = FreeWord::identity(n);
    for &x in conj.letters() {
        if x.unsigned_abs() as usize != n {
            erased.push(x);
        }
    }
    Ok(erased
        .letters()
        .iter()
        .map(|&x| PureLetter::raw(x.unsigned_abs() as usize, n, x.signum()))
        .collect())
}

/// Rewrites a pure braid word as a word in the standard `A_{i,j}`.
///
/// The result is equal to `u` as a braid and has the same exponent sums as
/// [`super::linking_vector`]; it is not a normal form.
///
/// ```
/// use braidkit::{BraidWord, Oracle};
/// use braidkit::pure::comb;
/// let u = BraidWord::from_signed(3, &[2, 1, 1, -2]).unwrap();
/// assert_eq!(comb(&u, &Oracle::default()).unwrap().to_string(), "A[1,3]");
/// ```
pub fn comb(u: &BraidWord, oracle: &Oracle) -> Result<PureWord> {
    if !u.is_pure() {
        return Err(Error::NotPure);
    }
    let n = u.strands();
    let mut current = u.free_cancel();
    // u = γ_n γ_{n-1} ⋯ γ_2 with γ_k in the kernel of d_k on k strands
    let mut layers: Vec<Vec<PureLetter>> = Vec::new();
    for top in (2..=n).rev() {
        let rest = delete_strand(&current, top)?.free_cancel();
        let gamma = current.concat(&rest.embed(top)?.inverse())?.free_cancel();
        layers.push(last_strand_word(&gamma, oracle)?);
        current = rest;
    }
    let letters = layers.into_iter().flatten().collect();
    Ok(PureWord::from_parts_unchecked(n, letters))
}
