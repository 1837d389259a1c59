//! Group-based public-key protocols with exact arithmetic.
//!
//! Two platform families implement [`Group`]: polycyclic presentations
//! ([`pc`]) normalized by collection, and the semidirect products
//! `Zⁿ ⋊_M Z` ([`matrix`]). [`platform::GroupHandle`] wraps either one and
//! tags every element with its group of origin. On top sit the protocol
//! suite ([`protocols`]), brute-force adversaries ([`attacks`]) and ball
//! growth measurement ([`analysis`]).
//!
//! Conventions: `conj(a, g) = g⁻¹·a·g` and `comm(a, b) = a⁻¹·b⁻¹·a·b`.

pub mod analysis;
pub mod attacks;
pub mod cayley;
pub mod format;
pub mod group;
pub mod matrix;
pub mod pc;
pub mod platform;
pub mod protocols;
pub mod word;

pub use group::{Group, GroupError, SamplerConfig};
pub use matrix::{IntMatrix, MatElement, MatGroup};
pub use pc::{PcElement, PcPresentation};
pub use platform::{Element, GroupHandle};
pub use word::Word;

/// `D4 × D4` as a single polycyclic presentation on four generators.
pub type D4xD4 = PcPresentation;
