//! The Artin action of `B_n` on the free group `F_n`.
//!
//! `σ_i` acts by `x_i ↦ x_i x_{i+1} x_i^{-1}`, `x_{i+1} ↦ x_i` and
//! `σ_i^{-1}` by `x_i ↦ x_{i+1}`, `x_{i+1} ↦ x_{i+1}^{-1} x_i x_{i+1}`; all
//! other generators are fixed. A word acts on the right: the letters of `u`
//! are applied to a free word one after another, left to right, so that
//! `artin(u · v) = artin(u).then(&artin(v))`.

use super::free::{FreeAutomorphism, FreeWord};
use crate::braid::{BraidWord, Generator};
use crate::error::{Error, Result};

/// Applies one letter to `w` in place of building a new automorphism.
fn act_letter(w: &FreeWord, g: Generator) -> FreeWord {
    let i = g.index() as i32;
    let mut out = FreeWord::identity(w.rank());
    for &x in w.letters() {
        let (gen, sign) = (x.abs(), x.signum());
        let image: &[i32] = match (g.is_positive(), gen - i) {
            (true, 0) => &[i, i + 1, -i],
            (true, 1) => &[i],
            (false, 0) => &[i + 1],
            (false, 1) => &[-(i + 1), i, i + 1],
            _ => {
                out.push(x);
                continue;
            }
        };
        if sign > 0 {
            for &y in image {
                out.push(y);
            }
        } else {
            for &y in image.iter().rev() {
                out.push(-y);
            }
        }
    }
    out
}

/// Image of the free word `w` under the braid `u`.
pub fn act_on(w: &FreeWord, u: &BraidWord, max_len: usize) -> Result<FreeWord> {
    assert_eq!(w.rank(), u.strands(), "free rank must equal the strand count");
    let mut cur = w.clone();
    for &g in u.letters() {
        cur = act_letter(&cur, g);
        if cur.len() > max_len {
            return Err(Error::FreeLengthLimit { limit: max_len });
        }
    }
    Ok(cur)
}

/// The automorphism of `F_n` induced by `u`.
pub fn artin_action(u: &BraidWord, max_len: usize) -> Result<FreeAutomorphism> {
    let n = u.strands();
    let mut images: Vec<FreeWord> = (1..=n).map(|k| FreeWord::generator(n, k)).collect();
    for &g in u.letters() {
        let mut total = 0;
        for img in images.iter_mut() {
            *img = act_letter(img, g);
            total += img.len();
        }
        if total > max_len {
            return Err(Error::FreeLengthLimit { limit: max_len });
        }
    }
    Ok(FreeAutomorphism::from_images(images))
}

#[cfg(test)]
mod tests {
    use super::*;

    const CAP: usize = 1_000_000;

    fn w(n: usize, s: &[i32]) -> BraidWord {
        BraidWord::from_signed(n, s).unwrap()
    }

    #[test]
    fn sigma_one_images() {
        let a = artin_action(&w(2, &[1]), CAP).unwrap();
        assert_eq!(a.image(1).letters(), &[1, 2, -1]);
        assert_eq!(a.image(2).letters(), &[1]);
    }

    #[test]
    fn inverse_letter_cancels() {
        assert!(artin_action(&w(2, &[1, -1]), CAP).unwrap().is_identity());
        assert!(artin_action(&w(2, &[-1, 1]), CAP).unwrap().is_identity());
    }

    #[test]
    fn braid_relation_gives_same_automorphism() {
        let lhs = artin_action(&w(3, &[1, 2, 1]), CAP).unwrap();
        let rhs = artin_action(&w(3, &[2, 1, 2]), CAP).unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn product_of_generators_is_fixed() {
        let a = artin_action(&w(4, &[1, -3, 2, 2, -1, 3]), CAP).unwrap();
        let delta = FreeWord::from_letters(4, &[1, 2, 3, 4]);
        assert_eq!(a.apply(&delta), delta);
    }

    #[test]
    fn length_cap_is_enforced() {
        let long = w(3, &[1, -2].repeat(40));
        assert_eq!(artin_action(&long, 50), Err(Error::FreeLengthLimit { limit: 50 }));
    }
}
