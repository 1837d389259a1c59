use std::fmt;
use std::ops::ControlFlow;

use crate::cayley::explore;
use crate::group::{Group, Result};
use crate::word::Word;

/// Limits for brute-force search. A zero `max_states` or `max_power` makes
/// every search return `NotFound` immediately.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SearchBudget {
    pub max_word_length: usize,
    pub max_states: usize,
    pub max_power: u64,
}

impl SearchBudget {
    pub fn new(max_word_length: usize, max_states: usize) -> Self {
        SearchBudget {
            max_word_length,
            max_states,
            max_power: 1,
        }
    }

    pub fn with_max_power(mut self, max_power: u64) -> Self {
        self.max_power = max_power;
        self
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SearchOutcome<E> {
    Found { conjugator: E, word: Word, states: usize },
    NotFound { states: usize },
}

impl<E> SearchOutcome<E> {
    pub fn states(&self) -> usize {
        match self {
            SearchOutcome::Found { states, .. } | SearchOutcome::NotFound { states } => *states,
        }
    }

    pub fn conjugator(&self) -> Option<&E> {
        match self {
            SearchOutcome::Found { conjugator, .. } => Some(conjugator),
            SearchOutcome::NotFound { .. } => None,
        }
    }
}

/// The report line: `found <len> <word>` or `notfound states=<n>`.
impl<E> fmt::Display for SearchOutcome<E> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SearchOutcome::Found { word, .. } => write!(f, "found {} {word}", word.letter_length()),
            SearchOutcome::NotFound { states } => write!(f, "notfound states={states}"),
        }
    }
}

/// Finds `s` with `conj(b, s) = c` by breadth-first search over words in
/// `gens`. The result is the shortlex-least conjugator (length first, then
/// lexicographic with `g1 < g1⁻¹ < g2 < …`).
pub fn conj_search<G: Group + ?Sized>(
    group: &G,
    b: &G::Elem,
    c: &G::Elem,
    gens: &[G::Elem],
    budget: &SearchBudget,
) -> Result<SearchOutcome<G::Elem>> {
    let mut hit = None;
    let run = explore(group, gens, budget.max_word_length, budget.max_states, |s, w| {
        if group.conj(b, s)? == *c {
            hit = Some((s.clone(), w.clone()));
            return Ok(ControlFlow::Break(()));
        }
        Ok(ControlFlow::Continue(()))
    })?;
    Ok(match hit {
        Some((conjugator, word)) => SearchOutcome::Found {
            conjugator,
            word,
            states: run.states,
        },
        None => SearchOutcome::NotFound { states: run.states },
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PowerSearchOutcome<E> {
    Found { n: u64, conjugator: E, word: Word, states: usize },
    NotFound { states: usize },
}

impl<E> PowerSearchOutcome<E> {
    pub fn states(&self) -> usize {
        match self {
            PowerSearchOutcome::Found { states, .. } | PowerSearchOutcome::NotFound { states } => *states,
        }
    }
}

/// `found n=<n> <len> <word>` or `notfound states=<n>`.
impl<E> fmt::Display for PowerSearchOutcome<E> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PowerSearchOutcome::Found { n, word, .. } => write!(f, "found n={n} {} {word}", word.letter_length()),
            PowerSearchOutcome::NotFound { states } => write!(f, "notfound states={states}"),
        }
    }
}

/// The overall outcome and one [`SearchOutcome`] per attempted exponent.
pub type PowerSearch<E> = (PowerSearchOutcome<E>, Vec<SearchOutcome<E>>);

/// Finds `(n, s)` with `wⁿ = s⁻¹·v·s`, trying `n = 1, 2, …, max_power` in
/// turn. Returns the first hit in `(n, length, lex)` order, together with
/// one [`SearchOutcome`] per attempted `n`.
pub fn power_conj_search<G: Group + ?Sized>(
    group: &G,
    v: &G::Elem,
    w: &G::Elem,
    gens: &[G::Elem],
    budget: &SearchBudget,
) -> Result<PowerSearch<G::Elem>> {
    let mut attempts = Vec::new();
    let mut total = 0;
    for n in 1..=budget.max_power {
        let target = group.pow(w, n)?;
        let outcome = conj_search(group, v, &target, gens, budget)?;
        total += outcome.states();
        attempts.push(outcome.clone());
        if let SearchOutcome::Found { conjugator, word, .. } = outcome {
            let found = PowerSearchOutcome::Found {
                n,
                conjugator,
                word,
                states: total,
            };
            return Ok((found, attempts));
        }
    }
    Ok((PowerSearchOutcome::NotFound { states: total }, attempts))
}
