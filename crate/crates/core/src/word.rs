//! Freely reduced words over a finite generating set.
//!
//! Generator indices are 0-based in memory and printed 1-based (`g1`, `g2`, ...)
//! in every text format.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::format::{parse_int, FormatError};

/// One syllable `g_index^exponent` with a nonzero exponent.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Syllable {
    pub gen: usize,
    pub exp: BigInt,
}

/// A freely reduced word: no zero exponents, no two adjacent syllables on
/// the same generator.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word {
    syllables: Vec<Syllable>,
}

impl Word {
    pub fn empty() -> Self {
        Word::default()
    }

    pub fn letter(gen: usize, exp: impl Into<BigInt>) -> Self {
        let mut w = Word::empty();
        w.push(gen, exp);
        w
    }

    /// Builds a word from raw `(gen, exp)` pairs, freely reducing as it goes.
    pub fn from_pairs<I, E>(pairs: I) -> Self
    where
        I: IntoIterator<Item = (usize, E)>,
        E: Into<BigInt>,
    {
        let mut w = Word::empty();
        for (g, e) in pairs {
            w.push(g, e);
        }
        w
    }

    /// Appends `gen^exp` on the right, merging with the last syllable.
    pub fn push(&mut self, gen: usize, exp: impl Into<BigInt>) {
        let exp = exp.into();
        if exp.is_zero() {
            return;
        }
        if let Some(last) = self.syllables.last_mut() {
            if last.gen == gen {
                last.exp += exp;
                if last.exp.is_zero() {
                    self.syllables.pop();
                }
                return;
            }
        }
        self.syllables.push(Syllable { gen, exp });
    }

    pub fn append(&mut self, other: &Word) {
        for s in &other.syllables {
            self.push(s.gen, s.exp.clone());
        }
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut w = self.clone();
        w.append(other);
        w
    }

    pub fn inverse(&self) -> Word {
        Word {
            syllables: self
                .syllables
                .iter()
                .rev()
                .map(|s| Syllable {
                    gen: s.gen,
                    exp: -&s.exp,
                })
                .collect(),
        }
    }

    pub fn syllables(&self) -> &[Syllable] {
        &self.syllables
    }

    pub fn is_empty(&self) -> bool {
        self.syllables.is_empty()
    }

    /// Number of letters, i.e. the sum of absolute exponents.
    pub fn letter_length(&self) -> BigInt {
        self.syllables.iter().map(|s| s.exp.abs()).sum()
    }

    pub fn max_gen(&self) -> Option<usize> {
        self.syllables.iter().map(|s| s.gen).max()
    }

    /// Shifts every generator index by `offset`.
    pub fn shifted(&self, offset: usize) -> Word {
        Word {
            syllables: self
                .syllables
                .iter()
                .map(|s| Syllable {
                    gen: s.gen + offset,
                    exp: s.exp.clone(),
                })
                .collect(),
        }
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.syllables.is_empty() {
            return f.write_str("1");
        }
        for (i, s) in self.syllables.iter().enumerate() {
            if i > 0 {
                f.write_str("*")?;
            }
            write!(f, "g{}", s.gen + 1)?;
            if !s.exp.is_one() {
                write!(f, "^{}", s.exp)?;
            }
        }
        Ok(())
    }
}

impl FromStr for Word {
    type Err = FormatError;

    /// Parses `1` (empty word) or `g<i>[^<e>]` syllables joined by `*`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        if s == "1" {
            return Ok(Word::empty());
        }
        let mut w = Word::empty();
        for part in s.split('*') {
            let body = part
                .strip_prefix('g')
                .ok_or_else(|| FormatError::new(format!("bad syllable `{part}`")))?;
            let (idx, exp) = match body.split_once('^') {
                Some((i, e)) => (i, parse_int(e)?),
                None => (body, BigInt::one()),
            };
            let idx: usize = match parse_int(idx)?.try_into() {
                Ok(i) if i >= 1 => i,
                _ => return Err(FormatError::new(format!("bad generator index in `{part}`"))),
            };
            if exp.is_zero() {
                return Err(FormatError::new(format!("zero exponent in `{part}`")));
            }
            w.push(idx - 1, exp);
        }
        Ok(w)
    }
}
