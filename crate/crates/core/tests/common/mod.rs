#![allow(dead_code)]

use ncs_core::matrix::MatGroup;
use ncs_core::pc::{catalog, d4_squared, CATALOG};
use ncs_core::{GroupHandle, Word};
use proptest::prelude::*;

/// Every built-in platform behind a handle, with a short name.
pub fn platforms() -> Vec<(&'static str, GroupHandle)> {
    let mut out: Vec<(&'static str, GroupHandle)> = CATALOG.iter().map(|&n| (n, catalog(n).unwrap().into())).collect();
    out.push(("d4xd4", d4_squared().into()));
    out.push(("anosov", MatGroup::anosov().into()));
    out
}

/// Raw words: up to `max_syllables` syllables with exponents in `-3..=3`.
/// Generator indices are reduced modulo the platform's generator count by
/// [`to_word`].
pub fn raw_word(max_syllables: usize) -> impl Strategy<Value = Vec<(usize, i32)>> {
    prop::collection::vec((0usize..8, -3i32..=3), 0..=max_syllables)
}

pub fn to_word(raw: &[(usize, i32)], gens: usize) -> Word {
    Word::from_pairs(raw.iter().map(|&(g, e)| (g % gens, e)))
}
