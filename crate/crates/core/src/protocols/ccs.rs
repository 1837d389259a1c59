//! Classical Cramer-Shoup over the order-`q` subgroup of `Z_p^*`.
//!
//! Encryption of `m` with randomness `r` is `(u₁, u₂, e, v)` with
//! `u₁ = g₁ʳ`, `u₂ = g₂ʳ`, `e = hʳm`, `v = cʳd^{rα}` and
//! `α = H(u₁, u₂, e)`. Decryption checks `v = u₁^{x₁+αy₁}u₂^{x₂+αy₂}` and
//! returns `e / u₁ᶻ`, or rejects.

use num_bigint::{BigUint, RandBigInt};
use num_integer::Integer;
use num_traits::{One, Zero};
use rand::Rng;
use sha2::{Digest, Sha256};

use super::{Decrypted, ProtocolError, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CcsParams {
    pub p: BigUint,
    pub q: BigUint,
    pub g1: BigUint,
    pub g2: BigUint,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CcsSecret {
    pub x1: BigUint,
    pub x2: BigUint,
    pub y1: BigUint,
    pub y2: BigUint,
    pub z: BigUint,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CcsPublic {
    pub c: BigUint,
    pub d: BigUint,
    pub h: BigUint,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CcsKeys {
    pub params: CcsParams,
    pub public: CcsPublic,
    pub secret: CcsSecret,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CcsCiphertext {
    pub u1: BigUint,
    pub u2: BigUint,
    pub e: BigUint,
    pub v: BigUint,
}

/// The hash `α = H(u₁, u₂, e)`, reduced into `Z_q`.
pub trait CcsHash {
    fn alpha(&self, u1: &BigUint, u2: &BigUint, e: &BigUint, q: &BigUint) -> BigUint;
}

/// SHA-256 of the canonical serialization `"u1\nu2\ne\n"` (base 10),
/// read as a big-endian integer and reduced mod `q`.
#[derive(Clone, Copy, Debug, Default)]
pub struct Sha256Hash;

impl CcsHash for Sha256Hash {
    fn alpha(&self, u1: &BigUint, u2: &BigUint, e: &BigUint, q: &BigUint) -> BigUint {
        let text = format!("{u1}\n{u2}\n{e}\n");
        BigUint::from_bytes_be(&Sha256::digest(text.as_bytes())) % q
    }
}

/// Deterministic Miller-Rabin with the first twelve prime bases; exact for
/// every input below 3.3·10²⁴ and a strong probable-prime test beyond.
pub fn is_probable_prime(n: &BigUint) -> bool {
    const BASES: [u32; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    if *n < BigUint::from(2u32) {
        return false;
    }
    for b in BASES {
        let b = BigUint::from(b);
        if *n == b {
            return true;
        }
        if (n % &b).is_zero() {
            return false;
        }
    }
    let one = BigUint::one();
    let n1 = n - &one;
    let s = n1.trailing_zeros().unwrap_or(0);
    let d = &n1 >> s;
    'bases: for b in BASES {
        let mut x = BigUint::from(b).modpow(&d, n);
        if x == one || x == n1 {
            continue;
        }
        for _ in 1..s {
            x = x.modpow(&BigUint::from(2u32), n);
            if x == n1 {
                continue 'bases;
            }
        }
        return false;
    }
    true
}

impl CcsParams {
    pub fn new(p: BigUint, q: BigUint, g1: BigUint, g2: BigUint) -> Result<Self> {
        let params = CcsParams { p, q, g1, g2 };
        params.validate()?;
        Ok(params)
    }

    /// `p = 23, q = 11, g₁ = 2, g₂ = 4`.
    pub fn desk() -> Self {
        CcsParams::new(23u32.into(), 11u32.into(), 2u32.into(), 4u32.into()).expect("valid desk parameters")
    }

    pub fn validate(&self) -> Result<()> {
        let bad = |m: &str| Err(ProtocolError::InvalidParams(m.to_string()));
        if !is_probable_prime(&self.p) || !is_probable_prime(&self.q) {
            return bad("p and q must be prime");
        }
        if !(&self.p - 1u32).is_multiple_of(&self.q) {
            return bad("q must divide p - 1");
        }
        for g in [&self.g1, &self.g2] {
            if !self.in_subgroup(g) || g.is_one() {
                return bad("g1 and g2 must have order q");
            }
        }
        Ok(())
    }

    /// `x ∈ [1, p)` with `x^q = 1`.
    pub fn in_subgroup(&self, x: &BigUint) -> bool {
        !x.is_zero() && *x < self.p && x.modpow(&self.q, &self.p).is_one()
    }

    fn exp(&self, base: &BigUint, e: &BigUint) -> BigUint {
        base.modpow(e, &self.p)
    }

    fn mul(&self, a: &BigUint, b: &BigUint) -> BigUint {
        (a * b) % &self.p
    }

    fn inv(&self, a: &BigUint) -> BigUint {
        // a^{p−2} by Fermat
        a.modpow(&(&self.p - 2u32), &self.p)
    }
}

pub fn ccs_keys_from(params: &CcsParams, secret: CcsSecret) -> Result<CcsKeys> {
    params.validate()?;
    for x in [&secret.x1, &secret.x2, &secret.y1, &secret.y2, &secret.z] {
        if *x >= params.q {
            return Err(ProtocolError::InvalidParams("secret exponents must lie in Z_q".into()));
        }
    }
    let (g1, g2) = (&params.g1, &params.g2);
    let public = CcsPublic {
        c: params.mul(&params.exp(g1, &secret.x1), &params.exp(g2, &secret.x2)),
        d: params.mul(&params.exp(g1, &secret.y1), &params.exp(g2, &secret.y2)),
        h: params.exp(g1, &secret.z),
    };
    Ok(CcsKeys {
        params: params.clone(),
        public,
        secret,
    })
}

pub fn ccs_keygen<R: Rng + ?Sized>(params: &CcsParams, rng: &mut R) -> Result<CcsKeys> {
    let mut draw = || rng.gen_biguint_below(&params.q);
    let secret = CcsSecret {
        x1: draw(),
        x2: draw(),
        y1: draw(),
        y2: draw(),
        z: draw(),
    };
    ccs_keys_from(params, secret)
}

pub fn ccs_encrypt(
    params: &CcsParams,
    public: &CcsPublic,
    m: &BigUint,
    r: &BigUint,
    hash: &impl CcsHash,
) -> Result<CcsCiphertext> {
    if !params.in_subgroup(m) {
        return Err(ProtocolError::InvalidParams("message must lie in the order-q subgroup".into()));
    }
    if *r >= params.q {
        return Err(ProtocolError::InvalidParams("r must lie in Z_q".into()));
    }
    let u1 = params.exp(&params.g1, r);
    let u2 = params.exp(&params.g2, r);
    let e = params.mul(&params.exp(&public.h, r), m);
    let alpha = hash.alpha(&u1, &u2, &e, &params.q);
    let ra = (r * &alpha) % &params.q;
    let v = params.mul(&params.exp(&public.c, r), &params.exp(&public.d, &ra));
    Ok(CcsCiphertext { u1, u2, e, v })
}

/// The value `v` must equal for the ciphertext to be accepted.
pub fn ccs_check_value(params: &CcsParams, secret: &CcsSecret, ct: &CcsCiphertext, hash: &impl CcsHash) -> BigUint {
    let q = &params.q;
    let alpha = hash.alpha(&ct.u1, &ct.u2, &ct.e, q);
    let e1 = (&secret.x1 + &alpha * &secret.y1) % q;
    let e2 = (&secret.x2 + &alpha * &secret.y2) % q;
    params.mul(&params.exp(&ct.u1, &e1), &params.exp(&ct.u2, &e2))
}

pub fn ccs_decrypt(params: &CcsParams, secret: &CcsSecret, ct: &CcsCiphertext, hash: &impl CcsHash) -> Decrypted<BigUint> {
    if ct.v != ccs_check_value(params, secret, ct, hash) {
        return Decrypted::Reject;
    }
    let mask = params.exp(&ct.u1, &secret.z);
    Decrypted::Accept(params.mul(&ct.e, &params.inv(&mask)))
}
