//! Conjugacy key exchange. Bob publishes `b` and `c = b^s` for a secret
//! `s ∈ S`; Alice sends `E = x^{(c^t)}` with header `h = b^t` for a random
//! `t ∈ T`. Since `[S, T] = 1`, `h^s = c^t` and Bob undoes the conjugation.
//! There is no integrity check: a tampered header decrypts to garbage.

use rand::Rng;

use super::{PlatformSpec, ProtocolError, Result};
use crate::group::Group;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Kk06Public<E> {
    pub b: E,
    pub c: E,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Kk06Secret<E> {
    pub s: E,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Kk06Keys<E> {
    pub public: Kk06Public<E>,
    pub secret: Kk06Secret<E>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Kk06Ciphertext<E> {
    pub e: E,
    pub h: E,
}

/// Builds keys from a chosen `b` and `s`, refusing pairs where `s`
/// centralizes `b` (then `c = b` leaks nothing useful and hides nothing).
pub fn kk06_keys_from<G: Group>(group: &G, b: G::Elem, s: G::Elem) -> Result<Kk06Keys<G::Elem>> {
    let c = group.conj(&b, &s)?;
    if c == b {
        return Err(ProtocolError::Degenerate("secret conjugator centralizes b".into()));
    }
    Ok(Kk06Keys {
        public: Kk06Public { b, c },
        secret: Kk06Secret { s },
    })
}

pub fn kk06_keygen<G: Group, R: Rng + ?Sized>(spec: &PlatformSpec<G>, rng: &mut R) -> Result<Kk06Keys<G::Elem>> {
    spec.validate()?;
    for _ in 0..spec.retry_budget {
        let s = spec.sample_secret(rng)?;
        let b = spec.sample_element(rng)?;
        match kk06_keys_from(&spec.group, b, s) {
            Err(ProtocolError::Degenerate(_)) => continue,
            other => return other,
        }
    }
    Err(ProtocolError::RetryExhausted(spec.retry_budget))
}

/// Encryption with an explicit randomizer `t`.
pub fn kk06_encrypt_with<G: Group>(
    group: &G,
    public: &Kk06Public<G::Elem>,
    x: &G::Elem,
    t: &G::Elem,
) -> Result<Kk06Ciphertext<G::Elem>> {
    let ct = group.conj(&public.c, t)?;
    Ok(Kk06Ciphertext {
        e: group.conj(x, &ct)?,
        h: group.conj(&public.b, t)?,
    })
}

pub fn kk06_encrypt<G: Group, R: Rng + ?Sized>(
    spec: &PlatformSpec<G>,
    public: &Kk06Public<G::Elem>,
    x: &G::Elem,
    rng: &mut R,
) -> Result<Kk06Ciphertext<G::Elem>> {
    let t = spec.sample_random(rng)?;
    kk06_encrypt_with(&spec.group, public, x, &t)
}

/// `E^{(h^s)⁻¹}`; exact when `[S, T] = 1`.
pub fn kk06_decrypt<G: Group>(group: &G, secret: &Kk06Secret<G::Elem>, ct: &Kk06Ciphertext<G::Elem>) -> Result<G::Elem> {
    let ct_key = group.conj(&ct.h, &secret.s)?;
    Ok(group.conj(&ct.e, &group.inv(&ct_key)?)?)
}
