//! The group interface every platform implements, plus the derived
//! operations (conjugation, commutators, powers) and seeded sampling.
//!
//! Conjugation is a right action throughout: `conj(a, g) = g⁻¹·a·g`, written
//! `a^g`. With this convention `conj(conj(a, g), h) = conj(a, g·h)`.

use std::fmt::Debug;
use std::hash::Hash;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::format::FormatError;
use crate::word::Word;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroupError {
    #[error("elements belong to different groups")]
    Mismatch,
    #[error("dimension mismatch: expected {expected}, found {found}")]
    Dimension { expected: usize, found: usize },
    #[error("generator index {index} out of range for {count} generators")]
    GeneratorOutOfRange { index: usize, count: usize },
    #[error("collection exceeded its budget of {0} steps")]
    StepBudget(u64),
    #[error("matrix is not unimodular")]
    NotUnimodular,
    #[error("invalid sampler config: {0}")]
    InvalidSampler(String),
    #[error("malformed element: {0}")]
    Format(#[from] FormatError),
}

pub type Result<T, E = GroupError> = std::result::Result<T, E>;

/// A group with canonical normal forms: two elements are equal iff their
/// `Elem` values are equal.
pub trait Group {
    type Elem: Clone + Eq + Hash + Debug;

    fn identity(&self) -> Self::Elem;

    /// The platform's distinguished generators, in index order.
    fn generators(&self) -> Vec<Self::Elem>;

    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Result<Self::Elem>;

    fn inv(&self, a: &Self::Elem) -> Result<Self::Elem>;

    /// Canonical one-line wire form.
    fn encode(&self, a: &Self::Elem) -> String;

    fn decode(&self, s: &str) -> Result<Self::Elem>;

    fn gen_count(&self) -> usize {
        self.generators().len()
    }

    fn is_identity(&self, a: &Self::Elem) -> bool {
        *a == self.identity()
    }

    /// Evaluates a word over the platform generators.
    fn eval(&self, w: &Word) -> Result<Self::Elem> {
        eval_over(self, &self.generators(), w)
    }

    /// `g⁻¹·a·g`.
    fn conj(&self, a: &Self::Elem, g: &Self::Elem) -> Result<Self::Elem> {
        let ag = self.mul(a, g)?;
        self.mul(&self.inv(g)?, &ag)
    }

    /// `[a, b] = a⁻¹·b⁻¹·a·b`.
    fn comm(&self, a: &Self::Elem, b: &Self::Elem) -> Result<Self::Elem> {
        let ab = self.mul(a, b)?;
        let ba = self.mul(b, a)?;
        self.mul(&self.inv(&ba)?, &ab)
    }

    /// `aᵏ` by square-and-multiply; negative `k` inverts first.
    fn pow(&self, a: &Self::Elem, k: impl Into<BigInt>) -> Result<Self::Elem> {
        let k: BigInt = k.into();
        let base = if k.is_negative() { self.inv(a)? } else { a.clone() };
        let k = k.abs();
        let mut acc = self.identity();
        for i in (0..k.bits()).rev() {
            acc = self.mul(&acc, &acc)?;
            if k.bit(i) {
                acc = self.mul(&acc, &base)?;
            }
        }
        Ok(acc)
    }

    fn commutes_with_all(&self, a: &Self::Elem, gens: &[Self::Elem]) -> Result<bool> {
        for g in gens {
            if !self.is_identity(&self.comm(a, g)?) {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

/// Evaluates `w` with letter `i` mapped to `gens[i]`.
pub fn eval_over<G: Group + ?Sized>(group: &G, gens: &[G::Elem], w: &Word) -> Result<G::Elem> {
    let mut acc = group.identity();
    for s in w.syllables() {
        let g = gens.get(s.gen).ok_or(GroupError::GeneratorOutOfRange {
            index: s.gen,
            count: gens.len(),
        })?;
        acc = group.mul(&acc, &group.pow(g, s.exp.clone())?)?;
    }
    Ok(acc)
}

/// Parameters of the fixed-length random-word sampler.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SamplerConfig {
    pub word_length: usize,
    pub generator_set: Vec<usize>,
    pub seed: u64,
}

impl SamplerConfig {
    pub fn validate(&self, gen_count: usize) -> Result<()> {
        if self.word_length == 0 {
            return Err(GroupError::InvalidSampler("word_length must be at least 1".into()));
        }
        if self.generator_set.is_empty() {
            return Err(GroupError::InvalidSampler("generator_set is empty".into()));
        }
        if let Some(&bad) = self.generator_set.iter().find(|&&g| g >= gen_count) {
            return Err(GroupError::GeneratorOutOfRange {
                index: bad,
                count: gen_count,
            });
        }
        Ok(())
    }
}

/// A uniformly random freely reduced word with exactly `length` letters
/// over `letters` generators and their inverses.
pub fn random_word<R: Rng + ?Sized>(rng: &mut R, letters: usize, length: usize) -> Word {
    assert!(letters > 0, "random_word needs at least one generator");
    let mut w = Word::empty();
    // letter code c: generator c / 2, inverted when c is odd
    let mut prev: Option<usize> = None;
    for _ in 0..length {
        let code = match prev {
            None => rng.gen_range(0..2 * letters),
            Some(p) => {
                let forbidden = p ^ 1;
                let c = rng.gen_range(0..2 * letters - 1);
                if c >= forbidden {
                    c + 1
                } else {
                    c
                }
            }
        };
        w.push(code / 2, if code % 2 == 0 { 1 } else { -1 });
        prev = Some(code);
    }
    w
}

/// Samples an element of the subgroup generated by `gens` as a random
/// reduced word of `length` letters.
pub fn sample_in<G, R>(group: &G, gens: &[G::Elem], length: usize, rng: &mut R) -> Result<G::Elem>
where
    G: Group + ?Sized,
    R: Rng + ?Sized,
{
    if gens.is_empty() {
        return Ok(group.identity());
    }
    eval_over(group, gens, &random_word(rng, gens.len(), length))
}

/// Deterministic sampling from a seeded config.
pub fn sample<G: Group + ?Sized>(group: &G, cfg: &SamplerConfig) -> Result<G::Elem> {
    cfg.validate(group.gen_count())?;
    let all = group.generators();
    let gens: Vec<G::Elem> = cfg.generator_set.iter().map(|&i| all[i].clone()).collect();
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    sample_in(group, &gens, cfg.word_length, &mut rng)
}

/// The RNG every seeded entry point uses.
pub fn seeded_rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub(crate) fn is_zero_vec(v: &[BigInt]) -> bool {
    v.iter().all(Zero::is_zero)
}
