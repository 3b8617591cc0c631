//! Dehornoy handle reduction.
//!
//! A `σ_i`-handle is a subword `σ_i^e v σ_i^{-e}` where every letter of `v`
//! has index greater than `i`. Reducing it deletes the two ends and replaces
//! each `σ_{i+1}^d` in `v` by `σ_{i+1}^{-e} σ_i^d σ_{i+1}^e`. The reduction
//! used here always picks the handle whose closing letter comes first; such
//! a handle contains no `σ_{i+1}`-handle, so it is permitted.
//!
//! A word with no handles at all is empty, or its smallest generator occurs
//! with a single sign, which certifies a nontrivial braid.

use crate::braid::{BraidWord, Generator};
use crate::error::{Error, Result};

/// Position pair `(open, close)` of the first-closing handle, if any.
///
/// `last[k]` tracks the latest position holding a letter of index `k`; the
/// nearest earlier letter with index `<= i` is the maximum over `k <= i`.
fn first_handle(word: &[i32], from: usize, last: &mut [Option<usize>]) -> Option<(usize, usize)> {
    for (q, &x) in word.iter().enumerate().skip(from) {
        let i = x.unsigned_abs() as usize;
        let mut prev: Option<usize> = None;
        for slot in last.iter().take(i + 1).skip(1) {
            if let Some(p) = *slot {
                if prev.is_none_or(|best| p > best) {
                    prev = Some(p);
                }
            }
        }
        if let Some(p) = prev {
            if word[p] == -x {
                return Some((p, q));
            }
        }
        last[i] = Some(q);
    }
    None
}

/// Rebuilds the scanner state for positions `< upto`.
fn state_before(word: &[i32], strands: usize, upto: usize) -> Vec<Option<usize>> {
    let mut last = vec![None; strands];
    let mut missing = strands.saturating_sub(1);
    for p in (0..upto).rev() {
        if missing == 0 {
            break;
        }
        let i = word[p].unsigned_abs() as usize;
        if last[i].is_none() {
            last[i] = Some(p);
            missing -= 1;
        }
    }
    last
}

/// Reduces handles until none remain.
///
/// Returns the handle-free word; it is empty iff `u` is the trivial braid.
/// `max_steps` bounds the number of handle reductions.
pub fn handle_reduce(u: &BraidWord, max_steps: usize) -> Result<BraidWord> {
    let strands = u.strands();
    let mut word: Vec<i32> = u.letters().iter().map(|g| g.raw()).collect();
    let mut steps = 0usize;
    let mut from = 0usize;
    let mut last = vec![None; strands.max(1)];
    while let Some((p, q)) = first_handle(&word, from, &mut last) {
        steps += 1;
        if steps > max_steps {
            return Err(Error::StepLimit { limit: max_steps });
        }
        let i = word[p].abs();
        let e = word[p].signum();
        let mut middle = Vec::with_capacity(q - p + 8);
        for &x in &word[p + 1..q] {
            if x.abs() == i + 1 {
                middle.push(-e * (i + 1));
                middle.push(x.signum() * i);
                middle.push(e * (i + 1));
            } else {
                middle.push(x);
            }
        }
        word.splice(p..=q, middle);
        // everything before p is unchanged and held no handle
        from = p;
        last = state_before(&word, strands, p);
    }
    Ok(BraidWord::from_parts_unchecked(strands, word.into_iter().map(Generator::from_raw).collect()))
}

/// True when no handle of any index occurs in `u`.
pub fn is_handle_free(u: &BraidWord) -> bool {
    let word: Vec<i32> = u.letters().iter().map(|g| g.raw()).collect();
    let mut last = vec![None; u.strands().max(1)];
    first_handle(&word, 0, &mut last).is_none()
}

/// Sign of the smallest generator in a handle-free word: `+1` for a
/// σ-positive word, `-1` for σ-negative, `0` for the empty word.
pub fn main_sign(reduced: &BraidWord) -> i32 {
    reduced
        .letters()
        .iter()
        .min_by_key(|g| g.index())
        .map_or(0, |g| g.sign())
}

#[cfg(test)]
mod tests {
    use super::*;

    const STEPS: usize = 10_000_000;

    fn w(n: usize, s: &[i32]) -> BraidWord {
        BraidWord::from_signed(n, s).unwrap()
    }

    #[test]
    fn free_pair_vanishes() {
        assert!(handle_reduce(&w(2, &[1, -1]), STEPS).unwrap().is_empty());
    }

    #[test]
    fn single_handle() {
        let r = handle_reduce(&w(3, &[-1, 2, 1]), STEPS).unwrap();
        assert_eq!(r, w(3, &[2, 1, -2]));
        assert!(is_handle_free(&r));
    }

    #[test]
    fn handle_free_word_is_untouched() {
        assert_eq!(handle_reduce(&w(3, &[2, 2]), STEPS).unwrap(), w(3, &[2, 2]));
    }

    #[test]
    fn braid_relation_reduces_to_empty() {
        let u = w(3, &[1, 2, 1, -2, -1, -2]);
        assert!(handle_reduce(&u, STEPS).unwrap().is_empty());
    }

    #[test]
    fn main_sign_of_positive_word() {
        let r = handle_reduce(&w(3, &[1, 1]), STEPS).unwrap();
        assert_eq!(main_sign(&r), 1);
        let r = handle_reduce(&w(3, &[2, -1, -2]), STEPS).unwrap();
        assert_eq!(main_sign(&r), -1);
    }

    #[test]
    fn step_cap() {
        let u = w(3, &[1, 2, 1, -2, -1, -2]);
        assert_eq!(handle_reduce(&u, 1), Err(Error::StepLimit { limit: 1 }));
    }
}
