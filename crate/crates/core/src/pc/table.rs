use std::collections::{HashMap, VecDeque};

use num_bigint::BigInt;
use num_traits::ToPrimitive;

use super::collect::PcElement;
use super::presentation::PcPresentation;
use crate::group::{Group, GroupError, Result};

/// Upper bound on `|G|²`, the number of products a table stores.
pub const MAX_TABLE_ENTRIES: usize = 1_000_000;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum EnumerationError {
    #[error("presentation has a generator of infinite order")]
    Infinite,
    #[error("group of order {0} is too large to tabulate")]
    TooLarge(BigInt),
    #[error(transparent)]
    Group(#[from] GroupError),
}

/// Full multiplication table of a finite polycyclic group, built by
/// exhaustive collection. Elements are indices into [`MultTable::elements`],
/// listed in lexicographic order of their exponent vectors.
#[derive(Clone, Debug)]
pub struct MultTable {
    pres: PcPresentation,
    elements: Vec<PcElement>,
    index: HashMap<PcElement, usize>,
    products: Vec<u32>,
    inverses: Vec<usize>,
}

/// Tabulates every normal form and every product.
pub fn enumerate(pres: &PcPresentation) -> Result<MultTable, EnumerationError> {
    let order = pres.order().ok_or(EnumerationError::Infinite)?;
    let size = order
        .to_usize()
        .filter(|n| n.checked_mul(*n).is_some_and(|sq| sq <= MAX_TABLE_ENTRIES))
        .ok_or_else(|| EnumerationError::TooLarge(order.clone()))?;

    let radices: Vec<u64> = pres.orders().iter().map(|o| o.finite().unwrap()).collect();
    let mut elements = Vec::with_capacity(size);
    let mut digits = vec![0u64; radices.len()];
    for _ in 0..size {
        elements.push(pres.element(digits.iter().map(|&d| BigInt::from(d)).collect())?);
        for k in (0..digits.len()).rev() {
            digits[k] += 1;
            if digits[k] < radices[k] {
                break;
            }
            digits[k] = 0;
        }
    }
    let index: HashMap<PcElement, usize> = elements.iter().cloned().enumerate().map(|(i, e)| (e, i)).collect();

    let mut products = Vec::with_capacity(size * size);
    for a in &elements {
        for b in &elements {
            products.push(index[&pres.mul(a, b)?] as u32);
        }
    }
    let identity = index[&pres.identity()];
    let mut inverses = vec![usize::MAX; size];
    for a in 0..size {
        for b in 0..size {
            if products[a * size + b] as usize == identity {
                inverses[a] = b;
                break;
            }
        }
    }
    Ok(MultTable {
        pres: pres.clone(),
        elements,
        index,
        products,
        inverses,
    })
}

impl MultTable {
    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn elements(&self) -> &[PcElement] {
        &self.elements
    }

    pub fn index_of(&self, e: &PcElement) -> Option<usize> {
        self.index.get(e).copied()
    }

    pub fn product(&self, a: usize, b: usize) -> usize {
        self.products[a * self.len() + b] as usize
    }

    pub fn presentation(&self) -> &PcPresentation {
        &self.pres
    }

    /// Number of distinct elements reachable from the identity through the
    /// generators.
    pub fn reachable(&self) -> usize {
        let gens: Vec<usize> = self.pres.generators().iter().map(|g| self.index[g]).collect();
        let mut seen = vec![false; self.len()];
        let start = self.index[&self.pres.identity()];
        seen[start] = true;
        let mut queue = VecDeque::from([start]);
        let mut count = 1;
        while let Some(x) = queue.pop_front() {
            for &g in &gens {
                let y = self.product(x, g);
                if !seen[y] {
                    seen[y] = true;
                    count += 1;
                    queue.push_back(y);
                }
            }
        }
        count
    }

    /// Checks that the table is a group on `∏ r_i` elements: every element
    /// is reachable from the generators, every element has an inverse, and
    /// multiplication is associative on all triples.
    pub fn is_consistent(&self) -> bool {
        let n = self.len();
        if self.reachable() != n || self.inverses.contains(&usize::MAX) {
            return false;
        }
        (0..n).all(|a| {
            (0..n).all(|b| {
                let ab = self.product(a, b);
                (0..n).all(|c| self.product(ab, c) == self.product(a, self.product(b, c)))
            })
        })
    }
}

impl Group for MultTable {
    type Elem = usize;

    fn identity(&self) -> usize {
        self.index[&self.pres.identity()]
    }

    fn generators(&self) -> Vec<usize> {
        self.pres.generators().iter().map(|g| self.index[g]).collect()
    }

    fn mul(&self, a: &usize, b: &usize) -> Result<usize> {
        for &x in [a, b] {
            if x >= self.len() {
                return Err(GroupError::GeneratorOutOfRange { index: x, count: self.len() });
            }
        }
        Ok(self.product(*a, *b))
    }

    fn inv(&self, a: &usize) -> Result<usize> {
        self.inverses
            .get(*a)
            .copied()
            .ok_or(GroupError::GeneratorOutOfRange { index: *a, count: self.len() })
    }

    fn encode(&self, a: &usize) -> String {
        self.pres.encode(&self.elements[*a])
    }

    fn decode(&self, s: &str) -> Result<usize> {
        let e = self.pres.decode(s)?;
        Ok(self.index[&e])
    }
}
