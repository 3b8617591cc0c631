//! Brunnian braids, the cycle subgroup `Z_n`, and random samplers for
//! normal closures and symmetric commutator subgroups.
//!
//! Samplers build their output from pure letters, so every sample is a
//! member of the target subgroup by construction. There is no membership
//! test for closures, symmetric commutators or `Bd_n`.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::braid::BraidWord;
use crate::error::{Error, Result};
use crate::maps::{del_pure, delete_strand};
use crate::oracle::Oracle;
use crate::pure::{a0_letter, comb, PureLetter, PureWord};

/// True iff `u` becomes trivial after removing any one strand.
pub fn is_brunnian(u: &BraidWord, oracle: &Oracle) -> Result<bool> {
    if !u.is_pure() {
        return Err(Error::NotPure);
    }
    if u.strands() < 2 {
        return Ok(true);
    }
    for k in 1..=u.strands() {
        if !oracle.is_trivial(&delete_strand(u, k)?)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// [`is_brunnian`] for a word already in the `A` alphabet.
pub fn is_brunnian_pure(w: &PureWord, oracle: &Oracle) -> Result<bool> {
    if w.strands() < 2 {
        return Ok(true);
    }
    for k in 1..=w.strands() {
        if !oracle.is_trivial(&w.delete_strand(k)?.expand())? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Membership in `Z_n = Brun_n ∩ Ker(∂_n)`; combs `u` to evaluate `∂_n`.
pub fn in_z(u: &BraidWord, oracle: &Oracle) -> Result<bool> {
    if !is_brunnian(u, oracle)? {
        return Ok(false);
    }
    if u.strands() < 2 {
        return Ok(true);
    }
    let w = comb(u, oracle)?;
    oracle.is_trivial(&del_pure(&w)?.expand())
}

/// [`in_z`] for a word already in the `A` alphabet.
pub fn in_z_pure(w: &PureWord, oracle: &Oracle) -> Result<bool> {
    if !is_brunnian_pure(w, oracle)? {
        return Ok(false);
    }
    if w.strands() < 2 {
        return Ok(true);
    }
    oracle.is_trivial(&del_pure(w)?.expand())
}

/// Knobs for the random samplers.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SamplerParams {
    pub seed: u64,
    /// Longest conjugator, in pure letters.
    pub max_conjugator_len: usize,
    /// Most left-normed commutator terms multiplied into one symmetric
    /// commutator sample.
    pub max_commutator_terms: usize,
    /// Most conjugates multiplied into one normal-closure sample.
    pub max_factors: usize,
}

impl Default for SamplerParams {
    fn default() -> Self {
        SamplerParams { seed: 0, max_conjugator_len: 4, max_commutator_terms: 1, max_factors: 2 }
    }
}

impl SamplerParams {
    pub fn with_seed(self, seed: u64) -> Self {
        SamplerParams { seed, ..self }
    }

    pub fn validate(&self) -> Result<()> {
        if self.max_conjugator_len == 0 || self.max_commutator_terms == 0 || self.max_factors == 0 {
            return Err(Error::InvalidArgument("sampler bounds must be positive".into()));
        }
        Ok(())
    }

    pub fn rng(&self) -> ChaCha8Rng {
        ChaCha8Rng::seed_from_u64(self.seed)
    }
}

/// A uniformly random standard letter `A_{i,j}^{±1}`.
fn random_letter<R: Rng>(n: usize, rng: &mut R) -> PureLetter {
    let j = rng.gen_range(2..=n);
    let i = rng.gen_range(1..j);
    PureLetter::new(i, j, if rng.gen_bool(0.5) { 1 } else { -1 }).expect("i < j")
}

/// A random word of length at most `max_len`, with `P(len = l)`
/// proportional to `2^{-l}`.
pub fn random_pure_word<R: Rng>(n: usize, max_len: usize, rng: &mut R) -> PureWord {
    let mut len = 0;
    while len < max_len && rng.gen_bool(0.5) {
        len += 1;
    }
    random_pure_word_exact(n, len, rng)
}

/// A random word with exactly `len` letters (before any cancellation).
pub fn random_pure_word_exact<R: Rng>(n: usize, len: usize, rng: &mut R) -> PureWord {
    if n < 2 {
        return PureWord::identity(n);
    }
    let letters = (0..len).map(|_| random_letter(n, rng)).collect();
    PureWord::new(n, letters).expect("letters within n")
}

/// `∏ Ψ_{β_t}(g^{e_t})` for the given `(β_t, e_t)`.
pub fn closure_element(g: &PureWord, factors: &[(PureWord, i32)]) -> Result<PureWord> {
    let mut out = PureWord::identity(g.strands());
    for (beta, e) in factors {
        let base = if *e < 0 { g.inverse() } else { g.clone() };
        out = out.concat(&base.conjugate_by(beta)?)?;
    }
    Ok(out)
}

/// An element of the normal closure of `g` in `P_n`.
pub fn sample_closure_with<R: Rng>(g: &PureWord, p: &SamplerParams, rng: &mut R) -> Result<PureWord> {
    p.validate()?;
    let n = g.strands();
    let count = rng.gen_range(1..=p.max_factors);
    let factors: Vec<(PureWord, i32)> = (0..count)
        .map(|_| {
            let beta = random_pure_word(n, p.max_conjugator_len, rng);
            (beta, if rng.gen_bool(0.5) { 1 } else { -1 })
        })
        .collect();
    closure_element(g, &factors)
}

pub fn sample_closure(g: &PureWord, n: usize, p: &SamplerParams) -> Result<PureWord> {
    crate::braid::check_strands(n, g.strands())?;
    sample_closure_with(g, p, &mut p.rng())
}

/// Left-normed commutator `[[x_1, x_2], …, x_m]`.
pub fn left_normed(xs: &[PureWord]) -> Result<PureWord> {
    let (first, rest) = xs
        .split_first()
        .ok_or_else(|| Error::InvalidArgument("empty commutator".into()))?;
    rest.iter().try_fold(first.clone(), |acc, x| acc.commutator(x))
}

/// An element of `[⟨⟨g_1⟩⟩, …, ⟨⟨g_m⟩⟩]_S`.
pub fn sample_symmetric_commutator_with<R: Rng>(
    gens: &[PureWord],
    p: &SamplerParams,
    rng: &mut R,
) -> Result<PureWord> {
    p.validate()?;
    if gens.len() < 2 {
        return Err(Error::InvalidArgument(format!(
            "a symmetric commutator needs at least 2 subgroups, got {}",
            gens.len()
        )));
    }
    let n = gens[0].strands();
    let terms = rng.gen_range(1..=p.max_commutator_terms);
    let mut out = PureWord::identity(n);
    for _ in 0..terms {
        let mut order: Vec<usize> = (0..gens.len()).collect();
        order.shuffle(rng);
        let xs = order
            .iter()
            .map(|&t| sample_closure_with(&gens[t], p, rng))
            .collect::<Result<Vec<_>>>()?;
        out = out.concat(&left_normed(&xs)?)?;
    }
    Ok(out)
}

pub fn sample_symmetric_commutator(gens: &[PureWord], n: usize, p: &SamplerParams) -> Result<PureWord> {
    for g in gens {
        crate::braid::check_strands(n, g.strands())?;
    }
    sample_symmetric_commutator_with(gens, p, &mut p.rng())
}

/// Generators `A_{1,n}, …, A_{n-1,n}` whose closures build `Brun_n`.
pub fn brunnian_generators(n: usize) -> Result<Vec<PureWord>> {
    (1..n).map(|i| PureWord::letter(n, i, n)).collect()
}

/// Derived letters `A_{0,1}, …, A_{0,n}` whose closures build `Bd_n`.
pub fn boundary_generators(n: usize) -> Result<Vec<PureWord>> {
    (1..=n).map(|j| a0_letter(j, n)).collect()
}

pub fn sample_brun_with<R: Rng>(n: usize, p: &SamplerParams, rng: &mut R) -> Result<PureWord> {
    if n < 3 {
        return Err(Error::InvalidArgument(format!("Brunnian sampling needs n >= 3, got {n}")));
    }
    sample_symmetric_commutator_with(&brunnian_generators(n)?, p, rng)
}

/// A Brunnian braid on `n ≥ 3` strands.
pub fn sample_brun(n: usize, p: &SamplerParams) -> Result<PureWord> {
    sample_brun_with(n, p, &mut p.rng())
}

pub fn sample_bd_with<R: Rng>(n: usize, p: &SamplerParams, rng: &mut R) -> Result<PureWord> {
    if n < 2 {
        return Err(Error::InvalidArgument(format!("boundary sampling needs n >= 2, got {n}")));
    }
    del_pure(&sample_brun_with(n + 1, p, rng)?)
}

/// An element of `Bd_n = ∂_{n+1}(Brun_{n+1})`.
pub fn sample_bd(n: usize, p: &SamplerParams) -> Result<PureWord> {
    sample_bd_with(n, p, &mut p.rng())
}

/// A commutator of two random pure braids on three strands, which is
/// Brunnian since `Brun_3 = [P_3, P_3]`.
pub fn sample_brun3_alt(p: &SamplerParams) -> Result<PureWord> {
    p.validate()?;
    let mut rng = p.rng();
    let len = 2 * p.max_conjugator_len;
    let x = random_pure_word(3, len, &mut rng);
    let y = random_pure_word(3, len, &mut rng);
    x.commutator(&y)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pw(n: usize, t: &[(usize, usize, i32)]) -> PureWord {
        PureWord::from_triples(n, t).unwrap()
    }

    #[test]
    fn brunnian_examples() {
        let o = Oracle::default();
        assert!(is_brunnian(&BraidWord::identity(3), &o).unwrap());
        assert!(!is_brunnian(&pw(3, &[(1, 2, 1)]).expand(), &o).unwrap());
        let c = pw(3, &[(1, 2, 1)]).commutator(&pw(3, &[(2, 3, 1)])).unwrap();
        assert!(is_brunnian(&c.expand(), &o).unwrap());
        assert!(is_brunnian_pure(&c, &o).unwrap());
        assert_eq!(is_brunnian(&BraidWord::sigma(3, 1).unwrap(), &o), Err(Error::NotPure));
    }

    #[test]
    fn z_examples() {
        let o = Oracle::default();
        assert!(in_z(&BraidWord::identity(3), &o).unwrap());
        let c = pw(3, &[(1, 2, 1)]).commutator(&pw(3, &[(2, 3, 1)])).unwrap();
        assert!(in_z(&c.expand(), &o).unwrap());
        assert!(in_z_pure(&c, &o).unwrap());
        assert!(!in_z(&pw(3, &[(1, 2, 1)]).expand(), &o).unwrap());
    }

    #[test]
    fn closure_with_trivial_conjugator() {
        let g = pw(3, &[(1, 3, 1)]);
        assert_eq!(closure_element(&g, &[(PureWord::identity(3), 1)]).unwrap(), g);
    }

    #[test]
    fn closure_samples_die_under_both_deletions() {
        let o = Oracle::default();
        let g = pw(3, &[(1, 3, 1)]);
        for seed in 0..20 {
            let s = sample_closure(&g, 3, &SamplerParams::default().with_seed(seed)).unwrap();
            for k in [1, 3] {
                assert!(o.is_trivial(&delete_strand(&s.expand(), k).unwrap()).unwrap());
            }
        }
    }

    #[test]
    fn samplers_are_deterministic() {
        let p = SamplerParams::default().with_seed(7);
        assert_eq!(sample_brun(4, &p).unwrap(), sample_brun(4, &p).unwrap());
        assert_eq!(sample_bd(3, &p).unwrap(), sample_bd(3, &p).unwrap());
        let g = pw(4, &[(2, 4, 1)]);
        assert_eq!(sample_closure(&g, 4, &p).unwrap(), sample_closure(&g, 4, &p).unwrap());
    }

    #[test]
    fn smallest_symmetric_commutator() {
        let a = pw(3, &[(1, 3, 1)]);
        let b = pw(3, &[(2, 3, 1)]);
        assert_eq!(left_normed(&[a.clone(), b.clone()]).unwrap(), a.commutator(&b).unwrap());
        let p = SamplerParams::default();
        assert!(sample_symmetric_commutator(&[a], 3, &p).is_err());
    }

    #[test]
    fn parameter_validation() {
        let p = SamplerParams { max_factors: 0, ..SamplerParams::default() };
        assert!(sample_brun(3, &p).is_err());
        assert!(sample_brun(2, &SamplerParams::default()).is_err());
        assert!(sample_bd(1, &SamplerParams::default()).is_err());
    }

    #[test]
    fn bd_of_trivial_sample_is_trivial() {
        let o = Oracle::default();
        let d = del_pure(&PureWord::identity(4)).unwrap();
        assert!(o.is_trivial(&d.expand()).unwrap());
    }
}
