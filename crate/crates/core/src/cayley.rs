//! Breadth-first exploration of the Cayley graph, deduplicated by normal
//! form. Elements are visited in shortlex order of their minimal words, so
//! each visited word is the shortlex-least word for its element.

use std::collections::HashSet;
use std::ops::ControlFlow;

use crate::group::{Group, Result};
use crate::word::Word;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Exploration {
    /// Distinct elements discovered, identity included.
    pub states: usize,
    /// `sizes[r]` is the number of distinct elements of length `≤ r`, for
    /// every radius that was fully explored.
    pub sizes: Vec<usize>,
    /// Stopped because `max_states` was reached.
    pub exhausted: bool,
    /// Stopped because the visitor broke out.
    pub stopped: bool,
}

/// Walks the ball of radius `max_radius` over `gens` and their inverses
/// (letter order `g1 < g1⁻¹ < g2 < g2⁻¹ < …`), calling `visit` on each new
/// element with its shortlex-minimal word. No more than `max_states`
/// elements are ever discovered.
pub fn explore<G, F>(group: &G, gens: &[G::Elem], max_radius: usize, max_states: usize, mut visit: F) -> Result<Exploration>
where
    G: Group + ?Sized,
    F: FnMut(&G::Elem, &Word) -> Result<ControlFlow<()>>,
{
    let mut out = Exploration {
        states: 0,
        sizes: Vec::new(),
        exhausted: false,
        stopped: false,
    };
    if max_states == 0 {
        out.exhausted = true;
        return Ok(out);
    }
    let mut letters = Vec::with_capacity(2 * gens.len());
    for (i, g) in gens.iter().enumerate() {
        letters.push((g.clone(), i, 1));
        letters.push((group.inv(g)?, i, -1));
    }

    let id = group.identity();
    let empty = Word::empty();
    out.states = 1;
    if visit(&id, &empty)?.is_break() {
        out.stopped = true;
        return Ok(out);
    }
    out.sizes.push(1);
    let mut seen: HashSet<G::Elem> = HashSet::from([id.clone()]);
    let mut frontier = vec![(id, empty)];

    for _ in 1..=max_radius {
        let mut next = Vec::new();
        for (x, w) in &frontier {
            for (g, i, sign) in &letters {
                let y = group.mul(x, g)?;
                if seen.contains(&y) {
                    continue;
                }
                if out.states == max_states {
                    out.exhausted = true;
                    return Ok(out);
                }
                let mut wy = w.clone();
                wy.push(*i, *sign);
                out.states += 1;
                seen.insert(y.clone());
                if visit(&y, &wy)?.is_break() {
                    out.stopped = true;
                    return Ok(out);
                }
                next.push((y, wy));
            }
        }
        out.sizes.push(out.states);
        frontier = next;
    }
    Ok(out)
}
