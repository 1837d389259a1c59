use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::presentation::{PcPresentation, RelativeOrder};
use crate::format::{parse_int, FormatError};
use crate::group::{is_zero_vec, Group, GroupError, Result};
use crate::word::Word;

/// Normal form `g1^{e1}···gn^{en}` with `0 ≤ e_i < r_i` for finite `r_i`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PcElement {
    exps: Vec<BigInt>,
}

impl PcElement {
    pub fn exponents(&self) -> &[BigInt] {
        &self.exps
    }

    pub fn to_word(&self) -> Word {
        Word::from_pairs(self.exps.iter().cloned().enumerate())
    }
}

/// Pending rewrites, top of stack is processed next.
type Stack = Vec<(usize, BigInt)>;

/// Above this many letters a power `w^k` is collected once and raised by
/// square-and-multiply instead of being expanded.
const EXPAND_LIMIT: u64 = 64;

impl PcPresentation {
    /// Collects `w` into normal form.
    pub fn collect(&self, w: &Word) -> Result<PcElement> {
        self.collect_from(vec![BigInt::zero(); self.len()], w)
    }

    /// Multiplies the normal form `start` by `w` on the right.
    ///
    /// Collection from the left: the state is always a collected word, and
    /// each incoming letter `g_i^{±1}` is moved past the collected tail on
    /// generators `> i` using the conjugation relations. A syllable is
    /// absorbed in one step when its tail is trivial; otherwise the cost is
    /// linear in its exponent.
    fn collect_from(&self, mut exps: Vec<BigInt>, w: &Word) -> Result<PcElement> {
        let n = self.len();
        if let Some(g) = w.max_gen() {
            if g >= n {
                return Err(GroupError::GeneratorOutOfRange { index: g, count: n });
            }
        }
        let mut stack: Stack = w
            .syllables()
            .iter()
            .rev()
            .map(|s| (s.gen, s.exp.clone()))
            .collect();
        let mut steps = 0u64;
        while let Some((i, e)) = stack.pop() {
            steps += 1;
            if steps > self.step_budget {
                return Err(GroupError::StepBudget(self.step_budget));
            }
            if e.is_zero() {
                continue;
            }
            if is_zero_vec(&exps[i + 1..]) {
                // Nothing to move past: absorb the whole syllable.
                let total = &exps[i] + e;
                match self.orders[i] {
                    RelativeOrder::Infinite => exps[i] = total,
                    RelativeOrder::Finite(r) => {
                        let (q, rem) = total.div_mod_floor(&BigInt::from(r));
                        exps[i] = rem;
                        self.push_power(&mut stack, &self.powers[i], &q)?;
                    }
                }
                continue;
            }

            let positive = e.is_positive();
            let rest: BigInt = if positive { &e - 1 } else { &e + 1 };
            if !rest.is_zero() {
                stack.push((i, rest));
            }
            let tail: Vec<(usize, BigInt)> = ((i + 1)..n)
                .map(|j| (j, std::mem::take(&mut exps[j])))
                .filter(|(_, ej)| !ej.is_zero())
                .collect();

            // prefix · tail · g_i^{±1} = prefix · g_i^{±1} · tail^{g_i^{±1}}
            let rels = if positive { &self.conj_pos[i] } else { &self.conj_neg[i] };
            for (j, ej) in tail.iter().rev() {
                self.push_power(&mut stack, &rels[*j], ej)?;
            }
            let r = self.orders[i].finite();
            if positive {
                exps[i] += 1;
                if r.is_some_and(|r| exps[i] == BigInt::from(r)) {
                    exps[i] = BigInt::zero();
                    self.push_power(&mut stack, &self.powers[i], &BigInt::one())?;
                }
            } else if let (Some(r), true) = (r, exps[i].is_zero()) {
                exps[i] = BigInt::from(r - 1);
                self.push_power(&mut stack, &self.powers[i], &-BigInt::one())?;
            } else {
                exps[i] -= 1;
            }
        }
        Ok(PcElement { exps })
    }

    /// Queues `w^k` so that it is processed before anything already queued.
    fn push_power(&self, stack: &mut Stack, w: &Word, k: &BigInt) -> Result<()> {
        if k.is_zero() || w.is_empty() {
            return Ok(());
        }
        if let [s] = w.syllables() {
            stack.push((s.gen, &s.exp * k));
            return Ok(());
        }
        let letters = w.letter_length() * k.abs();
        let expanded = if letters > BigInt::from(EXPAND_LIMIT) {
            self.pow(&self.collect(w)?, k.clone())?.to_word()
        } else {
            let base = if k.is_negative() { w.inverse() } else { w.clone() };
            let mut out = Word::empty();
            for _ in 0..k.magnitude().to_u64_digits().first().copied().unwrap_or(0) {
                out.append(&base);
            }
            out
        };
        for s in expanded.syllables().iter().rev() {
            stack.push((s.gen, s.exp.clone()));
        }
        Ok(())
    }

    fn check_elem(&self, a: &PcElement) -> Result<()> {
        if a.exps.len() != self.len() {
            return Err(GroupError::Dimension {
                expected: self.len(),
                found: a.exps.len(),
            });
        }
        Ok(())
    }

    /// Builds an element from an exponent vector, rejecting vectors that are
    /// not in normal form.
    pub fn element(&self, exps: Vec<BigInt>) -> Result<PcElement> {
        if exps.len() != self.len() {
            return Err(GroupError::Dimension {
                expected: self.len(),
                found: exps.len(),
            });
        }
        for (i, (e, o)) in exps.iter().zip(&self.orders).enumerate() {
            if let Some(r) = o.finite() {
                if e.is_negative() || *e >= BigInt::from(r) {
                    return Err(FormatError::new(format!(
                        "exponent {e} of g{} outside 0..{r}",
                        i + 1
                    ))
                    .into());
                }
            }
        }
        Ok(PcElement { exps })
    }
}

impl Group for PcPresentation {
    type Elem = PcElement;

    fn identity(&self) -> PcElement {
        PcElement {
            exps: vec![BigInt::zero(); self.len()],
        }
    }

    fn generators(&self) -> Vec<PcElement> {
        (0..self.len())
            .map(|i| {
                let mut exps = vec![BigInt::zero(); self.len()];
                exps[i] = BigInt::one();
                PcElement { exps }
            })
            .collect()
    }

    fn gen_count(&self) -> usize {
        self.len()
    }

    fn mul(&self, a: &PcElement, b: &PcElement) -> Result<PcElement> {
        self.check_elem(a)?;
        self.check_elem(b)?;
        self.collect_from(a.exps.clone(), &b.to_word())
    }

    fn inv(&self, a: &PcElement) -> Result<PcElement> {
        self.check_elem(a)?;
        self.collect(&a.to_word().inverse())
    }

    fn eval(&self, w: &Word) -> Result<PcElement> {
        self.collect(w)
    }

    fn encode(&self, a: &PcElement) -> String {
        let mut s = String::from("pc");
        for e in &a.exps {
            s.push(' ');
            s.push_str(&e.to_string());
        }
        s
    }

    fn decode(&self, s: &str) -> Result<PcElement> {
        let mut toks = s.split(' ');
        if toks.next() != Some("pc") {
            return Err(FormatError::new(format!("expected `pc ...`, found `{s}`")).into());
        }
        let exps = toks.map(parse_int).collect::<Result<Vec<_>, _>>()?;
        self.element(exps)
    }
}
