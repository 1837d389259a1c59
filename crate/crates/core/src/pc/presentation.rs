use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;

use crate::format::{parse_usize, strict_lines, FormatError};
use crate::word::Word;

/// Default rewriting-step budget for one collection.
pub const DEFAULT_STEP_BUDGET: u64 = 1_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum RelativeOrder {
    Finite(u64),
    Infinite,
}

impl RelativeOrder {
    pub fn finite(self) -> Option<u64> {
        match self {
            RelativeOrder::Finite(r) => Some(r),
            RelativeOrder::Infinite => None,
        }
    }
}

/// A polycyclic presentation on generators `g1..gn`.
///
/// For finite relative order `r_i` the power relation gives `g_i^{r_i}` as a
/// word in `g_{i+1}..g_n`; for every `i < j` the conjugation relations give
/// `g_j^{g_i}` and `g_j^{g_i^{-1}}`. Missing relations default to trivial
/// (`g_i^{r_i} = 1`, `g_j^{g_i} = g_j`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PcPresentation {
    pub(crate) orders: Vec<RelativeOrder>,
    pub(crate) powers: Vec<Word>,
    pub(crate) conj_pos: Vec<Vec<Word>>,
    pub(crate) conj_neg: Vec<Vec<Word>>,
    pub(crate) step_budget: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PresentationError {
    #[error("presentation needs at least one generator")]
    NoGenerators,
    #[error("relative order of g{0} must be at least 2")]
    BadOrder(usize),
    #[error("relation for g{gen} uses g{used}, expected only generators after g{after}")]
    NotTriangular { gen: usize, used: usize, after: usize },
    #[error("power relation given for g{0}, which has infinite order")]
    PowerOnInfinite(usize),
    #[error("conjugation relation needs i < j, got {0} {1}")]
    BadPair(usize, usize),
    #[error("generator index {0} out of range")]
    OutOfRange(usize),
    #[error(transparent)]
    Format(#[from] FormatError),
}

impl PcPresentation {
    /// A presentation with the given relative orders and all relations
    /// trivial (a direct product of cyclic groups).
    pub fn new(orders: Vec<RelativeOrder>) -> Result<Self, PresentationError> {
        let n = orders.len();
        if n == 0 {
            return Err(PresentationError::NoGenerators);
        }
        for (i, o) in orders.iter().enumerate() {
            if let RelativeOrder::Finite(r) = o {
                if *r < 2 {
                    return Err(PresentationError::BadOrder(i + 1));
                }
            }
        }
        let trivial = |i: usize| -> Vec<Word> { (0..n).map(|j| if j > i { Word::letter(j, 1) } else { Word::empty() }).collect() };
        Ok(PcPresentation {
            powers: vec![Word::empty(); n],
            conj_pos: (0..n).map(trivial).collect(),
            conj_neg: (0..n).map(trivial).collect(),
            orders,
            step_budget: DEFAULT_STEP_BUDGET,
        })
    }

    fn check_tail(&self, gen: usize, w: &Word) -> Result<(), PresentationError> {
        for s in w.syllables() {
            if s.gen >= self.len() {
                return Err(PresentationError::OutOfRange(s.gen + 1));
            }
            if s.gen <= gen {
                return Err(PresentationError::NotTriangular {
                    gen: gen + 1,
                    used: s.gen + 1,
                    after: gen + 1,
                });
            }
        }
        Ok(())
    }

    /// Sets `g_i^{r_i} = w` (0-based `i`).
    pub fn set_power(&mut self, i: usize, w: Word) -> Result<(), PresentationError> {
        if i >= self.len() {
            return Err(PresentationError::OutOfRange(i + 1));
        }
        if self.orders[i] == RelativeOrder::Infinite {
            return Err(PresentationError::PowerOnInfinite(i + 1));
        }
        self.check_tail(i, &w)?;
        self.powers[i] = w;
        Ok(())
    }

    /// Sets `g_j^{g_i} = w` (`inverse == false`) or `g_j^{g_i^{-1}} = w`.
    pub fn set_conjugate(&mut self, i: usize, j: usize, inverse: bool, w: Word) -> Result<(), PresentationError> {
        if i >= j {
            return Err(PresentationError::BadPair(i + 1, j + 1));
        }
        if j >= self.len() {
            return Err(PresentationError::OutOfRange(j + 1));
        }
        self.check_tail(i, &w)?;
        let table = if inverse { &mut self.conj_neg } else { &mut self.conj_pos };
        table[i][j] = w;
        Ok(())
    }

    pub fn with_step_budget(mut self, steps: u64) -> Self {
        self.step_budget = steps;
        self
    }

    pub fn step_budget(&self) -> u64 {
        self.step_budget
    }

    pub fn len(&self) -> usize {
        self.orders.len()
    }

    pub fn is_empty(&self) -> bool {
        self.orders.is_empty()
    }

    pub fn orders(&self) -> &[RelativeOrder] {
        &self.orders
    }

    pub fn is_finite(&self) -> bool {
        self.orders.iter().all(|o| o.finite().is_some())
    }

    /// `∏ r_i` when every relative order is finite.
    pub fn order(&self) -> Option<BigInt> {
        self.orders
            .iter()
            .map(|o| o.finite().map(BigInt::from))
            .product()
    }

    /// The presentation of `A × B`: generators of `B` follow those of `A`,
    /// and the two blocks commute.
    pub fn direct_product(a: &PcPresentation, b: &PcPresentation) -> PcPresentation {
        let off = a.len();
        let mut orders = a.orders.clone();
        orders.extend_from_slice(&b.orders);
        let mut p = PcPresentation::new(orders).expect("factors are valid presentations");
        for i in 0..a.len() {
            p.powers[i] = a.powers[i].clone();
            for j in (i + 1)..a.len() {
                p.conj_pos[i][j] = a.conj_pos[i][j].clone();
                p.conj_neg[i][j] = a.conj_neg[i][j].clone();
            }
        }
        for i in 0..b.len() {
            p.powers[off + i] = b.powers[i].shifted(off);
            for j in (i + 1)..b.len() {
                p.conj_pos[off + i][off + j] = b.conj_pos[i][j].shifted(off);
                p.conj_neg[off + i][off + j] = b.conj_neg[i][j].shifted(off);
            }
        }
        p.step_budget = a.step_budget.max(b.step_budget);
        p
    }
}

/// File format, one directive per line:
///
/// ```text
/// n <count>
/// order <i> <r|inf>
/// power <i> : <word>
/// conj <i> <j> <+|-> : <word>
/// ```
///
/// `n` comes first; every generator needs an `order` line. Indices are
/// 1-based, `<word>` uses the `g<i>^<e>` syllable syntax joined by `*`, and
/// `1` denotes the empty word. Blank lines and unknown directives are errors.
impl FromStr for PcPresentation {
    type Err = PresentationError;

    fn from_str(text: &str) -> Result<Self, Self::Err> {
        let lines = strict_lines(text)?;
        let bad = |ln: usize, msg: &str| FormatError::new(format!("line {}: {msg}", ln + 1));
        let mut it = lines.iter().enumerate();
        let n = match it.next() {
            Some((_, l)) if l.starts_with("n ") => parse_usize(&l[2..])?,
            _ => return Err(bad(0, "expected `n <count>`").into()),
        };
        if n == 0 {
            return Err(PresentationError::NoGenerators);
        }
        let mut orders: Vec<Option<RelativeOrder>> = vec![None; n];
        let mut relations = Vec::new();
        for (ln, line) in it {
            let (head, word) = match line.split_once(" : ") {
                Some((h, w)) => (h, Some(w.parse::<Word>()?)),
                None => (*line, None),
            };
            let toks: Vec<&str> = head.split(' ').collect();
            let index = |s: &str| -> Result<usize, PresentationError> {
                let i = parse_usize(s)?;
                if i == 0 || i > n {
                    return Err(PresentationError::OutOfRange(i));
                }
                Ok(i - 1)
            };
            match (toks.as_slice(), word) {
                (["order", i, r], None) => {
                    let i = index(i)?;
                    if orders[i].is_some() {
                        return Err(bad(ln, "duplicate order").into());
                    }
                    orders[i] = Some(if *r == "inf" {
                        RelativeOrder::Infinite
                    } else {
                        RelativeOrder::Finite(parse_usize(r)? as u64)
                    });
                }
                (["power", i], Some(w)) => relations.push((index(i)?, None, w)),
                (["conj", i, j, sign @ ("+" | "-")], Some(w)) => {
                    relations.push((index(i)?, Some((index(j)?, *sign == "-")), w))
                }
                _ => return Err(bad(ln, "unrecognised line").into()),
            }
        }
        let orders = orders
            .into_iter()
            .enumerate()
            .map(|(i, o)| o.ok_or_else(|| FormatError::new(format!("missing order for g{}", i + 1))))
            .collect::<Result<Vec<_>, _>>()?;
        let mut p = PcPresentation::new(orders)?;
        for (i, conj, w) in relations {
            match conj {
                None => p.set_power(i, w)?,
                Some((j, inv)) => p.set_conjugate(i, j, inv, w)?,
            }
        }
        Ok(p)
    }
}

impl fmt::Display for PcPresentation {
    /// Writes every relation explicitly, so the output is canonical.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "n {}", self.len())?;
        for (i, o) in self.orders.iter().enumerate() {
            match o {
                RelativeOrder::Finite(r) => writeln!(f, "order {} {r}", i + 1)?,
                RelativeOrder::Infinite => writeln!(f, "order {} inf", i + 1)?,
            }
        }
        for (i, o) in self.orders.iter().enumerate() {
            if o.finite().is_some() {
                writeln!(f, "power {} : {}", i + 1, self.powers[i])?;
            }
        }
        for i in 0..self.len() {
            for j in (i + 1)..self.len() {
                writeln!(f, "conj {} {} + : {}", i + 1, j + 1, self.conj_pos[i][j])?;
                writeln!(f, "conj {} {} - : {}", i + 1, j + 1, self.conj_neg[i][j])?;
            }
        }
        Ok(())
    }
}
