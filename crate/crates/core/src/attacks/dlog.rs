use num_bigint::BigUint;
use num_traits::{One, Zero};

/// Smallest `k ∈ [0, q)` with `gᵏ ≡ y (mod p)`, by linear scan.
pub fn dlog_bruteforce(p: &BigUint, g: &BigUint, y: &BigUint, q: &BigUint) -> Option<BigUint> {
    let target = y % p;
    let mut acc = BigUint::one() % p;
    let mut k = BigUint::zero();
    while k < *q {
        if acc == target {
            return Some(k);
        }
        acc = (acc * g) % p;
        k += 1u32;
    }
    None
}
