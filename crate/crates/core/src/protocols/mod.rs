//! Key exchange and encryption schemes over a [`PlatformSpec`]:
//!
//! - [`kk06`]: conjugacy key exchange, `E = x^{(c^t)}`, header `h = b^t`
//! - [`pcke`]: power-conjugacy key exchange
//! - [`ccs`]: classical Cramer-Shoup over a prime-order subgroup of `Z_p^*`
//! - [`ncs`]: the hashless conjugation analogue of `ccs`
//!
//! Every "random" choice is a random reduced word of `word_length` letters
//! over the relevant generator set, drawn from an explicit RNG.

pub mod ccs;
pub mod files;
pub mod kk06;
pub mod ncs;
pub mod pcke;

use rand::Rng;
use thiserror::Error;

use crate::group::{sample_in, Group, GroupError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ProtocolError {
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error("invalid platform: {0}")]
    InvalidPlatform(String),
    #[error("invalid parameters: {0}")]
    InvalidParams(String),
    #[error("gave up after {0} attempts")]
    RetryExhausted(usize),
    #[error("degenerate input: {0}")]
    Degenerate(String),
    #[error("conjugacy search exhausted its budget after {states} states")]
    NotFound { states: usize },
}

pub type Result<T, E = ProtocolError> = std::result::Result<T, E>;

/// Outcome of a decryption with an integrity check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Decrypted<T> {
    Accept(T),
    Reject,
}

impl<T> Decrypted<T> {
    pub fn accepted(self) -> Option<T> {
        match self {
            Decrypted::Accept(m) => Some(m),
            Decrypted::Reject => None,
        }
    }

    pub fn is_reject(&self) -> bool {
        matches!(self, Decrypted::Reject)
    }
}

/// A group with a pair of elementwise-commuting subgroups `S = ⟨secret_gens⟩`
/// and `T = ⟨random_gens⟩`.
///
/// Generators of two subgroups whose conjugates always commute.
pub type Factors<E> = (Vec<E>, Vec<E>);

/// `factors`, when set, names generators of two subgroups whose conjugates
/// always commute (the two coordinates of a direct product); the
/// Cramer-Shoup variant draws `g₁` and `g₂` from them.
#[derive(Clone, Debug)]
pub struct PlatformSpec<G: Group> {
    pub group: G,
    pub secret_gens: Vec<G::Elem>,
    pub random_gens: Vec<G::Elem>,
    pub factors: Option<Factors<G::Elem>>,
    pub word_length: usize,
    pub retry_budget: usize,
}

pub const DEFAULT_RETRY_BUDGET: usize = 64;

impl<G: Group> PlatformSpec<G> {
    pub fn new(group: G) -> Self {
        PlatformSpec {
            group,
            secret_gens: Vec::new(),
            random_gens: Vec::new(),
            factors: None,
            word_length: 8,
            retry_budget: DEFAULT_RETRY_BUDGET,
        }
    }

    pub fn with_secret(mut self, gens: Vec<G::Elem>) -> Self {
        self.secret_gens = gens;
        self
    }

    pub fn with_random(mut self, gens: Vec<G::Elem>) -> Self {
        self.random_gens = gens;
        self
    }

    pub fn with_factors(mut self, left: Vec<G::Elem>, right: Vec<G::Elem>) -> Self {
        self.factors = Some((left, right));
        self
    }

    pub fn with_word_length(mut self, len: usize) -> Self {
        self.word_length = len;
        self
    }

    /// Checks `[s, t] = 1` for every pair of generators, plus the shape
    /// constraints.
    pub fn validate(&self) -> Result<()> {
        let bad = |m: &str| Err(ProtocolError::InvalidPlatform(m.to_string()));
        if self.secret_gens.is_empty() || self.random_gens.is_empty() {
            return bad("secret and random generator sets must be nonempty");
        }
        if self.word_length == 0 {
            return bad("word length must be at least 1");
        }
        if self.retry_budget == 0 {
            return bad("retry budget must be at least 1");
        }
        for s in &self.secret_gens {
            if !self.group.commutes_with_all(s, &self.random_gens)? {
                return bad("secret and random subgroups do not commute");
            }
        }
        if let Some((left, right)) = &self.factors {
            if left.is_empty() || right.is_empty() {
                return bad("both factors need generators");
            }
        }
        Ok(())
    }

    pub fn sample_secret<R: Rng + ?Sized>(&self, rng: &mut R) -> Result<G::Elem> {
        Ok(sample_in(&self.group, &self.secret_gens, self.word_length, rng)?)
    }

    pub fn sample_random<R: Rng + ?Sized>(&self, rng: &mut R) -> Result<G::Elem> {
        Ok(sample_in(&self.group, &self.random_gens, self.word_length, rng)?)
    }

    /// A random element of the whole group.
    pub fn sample_element<R: Rng + ?Sized>(&self, rng: &mut R) -> Result<G::Elem> {
        Ok(sample_in(&self.group, &self.group.generators(), self.word_length, rng)?)
    }
}
