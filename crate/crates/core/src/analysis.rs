//! Ball growth and throughput measurements.

use std::fmt;
use std::ops::ControlFlow;
use std::str::FromStr;
use std::time::Instant;

use num_rational::Ratio;
use sha2::{Digest, Sha256};

use crate::cayley::explore;
use crate::format::{parse_usize, strict_lines, FormatError};
use crate::group::{random_word, seeded_rng, Group, GroupError};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum AnalysisError {
    #[error("ball exceeded the state budget of {0}")]
    StateBudget(usize),
    #[error("invalid argument: {0}")]
    Invalid(String),
    #[error(transparent)]
    Group(#[from] GroupError),
}

/// Ball sizes `B(0..=R)` and the successive ratios `B(r)/B(r−1)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GrowthReport {
    pub radii: Vec<usize>,
    pub ball_sizes: Vec<u64>,
    pub ratio_estimates: Vec<Ratio<u64>>,
}

impl GrowthReport {
    pub fn from_sizes(ball_sizes: Vec<u64>) -> Self {
        let ratio_estimates = ball_sizes.windows(2).map(|w| Ratio::new(w[1], w[0])).collect();
        GrowthReport {
            radii: (0..ball_sizes.len()).collect(),
            ball_sizes,
            ratio_estimates,
        }
    }

    /// `B(r)/B(r−1)` for `r ≥ 1`.
    pub fn ratio_at(&self, r: usize) -> Option<Ratio<u64>> {
        r.checked_sub(1).and_then(|i| self.ratio_estimates.get(i).copied())
    }

    /// Growth estimate from the last measured ratio.
    pub fn tail_ratio(&self) -> Option<Ratio<u64>> {
        self.ratio_estimates.last().copied()
    }
}

/// One line per radius: `r <radius> <ball_size> <ratio>`, with the ratio
/// written as a reduced fraction (`-` at radius 0).
impl fmt::Display for GrowthReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, (r, b)) in self.radii.iter().zip(&self.ball_sizes).enumerate() {
            match i.checked_sub(1).map(|j| self.ratio_estimates[j]) {
                Some(q) => writeln!(f, "r {r} {b} {q}")?,
                None => writeln!(f, "r {r} {b} -")?,
            }
        }
        Ok(())
    }
}

impl FromStr for GrowthReport {
    type Err = FormatError;

    fn from_str(text: &str) -> Result<Self, FormatError> {
        let mut sizes = Vec::new();
        for (i, line) in strict_lines(text)?.into_iter().enumerate() {
            let toks: Vec<&str> = line.split(' ').collect();
            let ["r", r, b, q] = toks.as_slice() else {
                return Err(FormatError::new(format!("growth line {}: bad shape", i + 1)));
            };
            if parse_usize(r)? != i {
                return Err(FormatError::new(format!("growth line {}: radius out of order", i + 1)));
            }
            sizes.push(parse_usize(b)? as u64);
            let expected = match sizes.len() {
                1 => "-".to_string(),
                n => Ratio::new(sizes[n - 1], sizes[n - 2]).to_string(),
            };
            if *q != expected {
                return Err(FormatError::new(format!("growth line {}: ratio `{q}` != `{expected}`", i + 1)));
            }
        }
        Ok(GrowthReport::from_sizes(sizes))
    }
}

/// `B(r)` for `r = 0..=max_radius` over `gens` and their inverses, counting
/// distinct normal forms. Fails once more than `max_states` elements would
/// be held.
pub fn ball_growth<G: Group + ?Sized>(
    group: &G,
    gens: &[G::Elem],
    max_radius: usize,
    max_states: usize,
) -> Result<GrowthReport, AnalysisError> {
    let run = explore(group, gens, max_radius, max_states, |_, _| Ok(ControlFlow::Continue(())))?;
    if run.exhausted {
        return Err(AnalysisError::StateBudget(max_states));
    }
    Ok(GrowthReport::from_sizes(run.sizes.into_iter().map(|s| s as u64).collect()))
}

/// Free-group bound `1 + Σ_{i=1}^{r} 2g(2g−1)^{i−1}` on `B(r)` for `g`
/// generators.
pub fn free_group_bound(gens: u64, r: u32) -> u128 {
    let g = u128::from(gens);
    if g == 0 {
        return 1;
    }
    (1..=r).fold(1u128, |acc, i| acc.saturating_add((2 * g).saturating_mul((2 * g - 1).saturating_pow(i - 1))))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BenchOp {
    Mul,
    Conj,
    Collect,
}

impl FromStr for BenchOp {
    type Err = AnalysisError;

    fn from_str(s: &str) -> Result<Self, AnalysisError> {
        match s {
            "mul" => Ok(BenchOp::Mul),
            "conj" => Ok(BenchOp::Conj),
            "collect" => Ok(BenchOp::Collect),
            _ => Err(AnalysisError::Invalid(format!("unknown operation `{s}`"))),
        }
    }
}

impl fmt::Display for BenchOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            BenchOp::Mul => "mul",
            BenchOp::Conj => "conj",
            BenchOp::Collect => "collect",
        })
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct BenchReport {
    pub op: BenchOp,
    pub trials: usize,
    pub word_length: usize,
    pub seed: u64,
    /// SHA-256 over the encoded results; identical inputs give identical
    /// digests.
    pub digest: String,
    pub seconds: f64,
}

impl BenchReport {
    pub fn ops_per_second(&self) -> f64 {
        if self.seconds > 0.0 {
            self.trials as f64 / self.seconds
        } else {
            f64::INFINITY
        }
    }

    /// The deterministic part of the report.
    pub fn summary(&self) -> String {
        format!(
            "bench {} trials={} word_length={} seed={} digest={}\n",
            self.op, self.trials, self.word_length, self.seed, self.digest
        )
    }
}

/// Times `trials` runs of `op` on inputs drawn from a seeded stream of
/// random words of `word_length` letters. `collect` evaluates a word to
/// normal form; `mul` and `conj` act on pre-evaluated elements.
pub fn bench<G: Group + ?Sized>(
    group: &G,
    op: BenchOp,
    trials: usize,
    word_length: usize,
    seed: u64,
) -> Result<BenchReport, AnalysisError> {
    if trials == 0 || word_length == 0 {
        return Err(AnalysisError::Invalid("trials and word length must be positive".into()));
    }
    let mut rng = seeded_rng(seed);
    let letters = group.gen_count();
    let draw = |rng: &mut rand_chacha::ChaCha8Rng| random_word(rng, letters, word_length);
    let words: Vec<_> = (0..trials).map(|_| (draw(&mut rng), draw(&mut rng))).collect();
    let pairs = match op {
        BenchOp::Collect => Vec::new(),
        _ => words
            .iter()
            .map(|(a, b)| Ok((group.eval(a)?, group.eval(b)?)))
            .collect::<Result<Vec<_>, GroupError>>()?,
    };

    let start = Instant::now();
    let results = match op {
        BenchOp::Collect => words.iter().map(|(a, _)| group.eval(a)).collect::<Result<Vec<_>, _>>()?,
        BenchOp::Mul => pairs.iter().map(|(a, b)| group.mul(a, b)).collect::<Result<Vec<_>, _>>()?,
        BenchOp::Conj => pairs.iter().map(|(a, b)| group.conj(a, b)).collect::<Result<Vec<_>, _>>()?,
    };
    let seconds = start.elapsed().as_secs_f64();

    let mut hasher = Sha256::new();
    for r in &results {
        hasher.update(group.encode(r).as_bytes());
        hasher.update(b"\n");
    }
    let digest = hasher.finalize().iter().map(|b| format!("{b:02x}")).collect();
    Ok(BenchReport {
        op,
        trials,
        word_length,
        seed,
        digest,
        seconds,
    })
}
