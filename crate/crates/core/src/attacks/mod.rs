//! Desk-scale adversaries: brute-force conjugacy and power-conjugacy
//! search, discrete logarithm by linear scan, and ciphertext tampering.

mod dlog;
mod search;
mod tamper;

pub use dlog::dlog_bruteforce;
pub use search::{conj_search, power_conj_search, PowerSearch, PowerSearchOutcome, SearchBudget, SearchOutcome};
pub use tamper::{tamper_suite, Component, FourPart, Mutant, Strategy};
