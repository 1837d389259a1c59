use std::fmt;

use num_bigint::BigUint;

use crate::protocols::ccs::CcsCiphertext;
use crate::protocols::ncs::NcsCiphertext;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Component {
    U1,
    U2,
    E,
    V,
}

impl Component {
    pub const ALL: [Component; 4] = [Component::U1, Component::U2, Component::E, Component::V];

    fn index(self) -> usize {
        self as usize
    }
}

impl fmt::Display for Component {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Component::U1 => "u1",
            Component::U2 => "u2",
            Component::E => "e",
            Component::V => "v",
        })
    }
}

/// A ciphertext with the Cramer-Shoup shape `(u₁, u₂, e, v)`.
pub trait FourPart: Clone {
    type Part: Clone;
    fn parts(&self) -> [Self::Part; 4];
    fn from_parts(parts: [Self::Part; 4]) -> Self;
}

impl<E: Clone> FourPart for NcsCiphertext<E> {
    type Part = E;

    fn parts(&self) -> [E; 4] {
        [self.u1.clone(), self.u2.clone(), self.e.clone(), self.v.clone()]
    }

    fn from_parts([u1, u2, e, v]: [E; 4]) -> Self {
        NcsCiphertext { u1, u2, e, v }
    }
}

impl FourPart for CcsCiphertext {
    type Part = BigUint;

    fn parts(&self) -> [BigUint; 4] {
        [self.u1.clone(), self.u2.clone(), self.e.clone(), self.v.clone()]
    }

    fn from_parts([u1, u2, e, v]: [BigUint; 4]) -> Self {
        CcsCiphertext { u1, u2, e, v }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Strategy<P> {
    /// One mutant per candidate, with `component` replaced by it. Sampled
    /// elements, the identity, or a whole finite group all fit here.
    Replace { component: Component, candidates: Vec<P> },
    /// Exchange two components.
    Swap(Component, Component),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mutant<C> {
    pub label: String,
    pub ciphertext: C,
}

/// Applies each strategy in order and collects the mutants. The stream is
/// a pure function of its inputs.
pub fn tamper_suite<C: FourPart>(ct: &C, strategies: &[Strategy<C::Part>]) -> Vec<Mutant<C>> {
    let mut out = Vec::new();
    for strategy in strategies {
        match strategy {
            Strategy::Replace { component, candidates } => {
                for (k, cand) in candidates.iter().enumerate() {
                    let mut parts = ct.parts();
                    parts[component.index()] = cand.clone();
                    out.push(Mutant {
                        label: format!("replace {component} #{k}"),
                        ciphertext: C::from_parts(parts),
                    });
                }
            }
            Strategy::Swap(a, b) => {
                let mut parts = ct.parts();
                parts.swap(a.index(), b.index());
                out.push(Mutant {
                    label: format!("swap {a} {b}"),
                    ciphertext: C::from_parts(parts),
                });
            }
        }
    }
    out
}
