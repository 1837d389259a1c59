//! Hashless ncs scheme: the conjugation analogue of [`super::ccs`].
//!
//! Secrets `x₁, x₂, y₁, y₂, z ∈ S`; public `g₁, g₂ ≠ 1` with
//! `[g₂^{x₂}, g₁^{y₁}] = 1`, `c = g₁^{x₁}g₂^{x₂}`, `d = g₁^{y₁}g₂^{y₂}`,
//! `h = g₁^z`. A ciphertext for randomizer `r ∈ T` is
//! `(g₁^r, g₂^r, m^{(h^r)}, c^r d^r)`. The check binds `u₁, u₂, v` only, so a
//! modified `e` is accepted and decrypts to a different message.

use rand::Rng;

use super::{Decrypted, PlatformSpec, ProtocolError, Result};
use crate::group::{sample_in, Group};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NcsSecret<E> {
    pub x1: E,
    pub x2: E,
    pub y1: E,
    pub y2: E,
    pub z: E,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NcsPublic<E> {
    pub g1: E,
    pub g2: E,
    pub c: E,
    pub d: E,
    pub h: E,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NcsKeys<E> {
    pub public: NcsPublic<E>,
    pub secret: NcsSecret<E>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NcsCiphertext<E> {
    pub u1: E,
    pub u2: E,
    pub e: E,
    pub v: E,
}

/// How `g₁` and `g₂` are chosen so that `[g₂^{x₂}, g₁^{y₁}] = 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Pairing {
    /// `g₁` from the left factor, `g₂` from the right factor of
    /// [`PlatformSpec::factors`]; the constraint holds by construction.
    DirectProduct,
    /// `g₁, g₂` drawn from the whole group until the constraint holds.
    Checked,
}

/// Derives the public key, checking every key invariant.
pub fn ncs_keys_from<G: Group>(group: &G, secret: NcsSecret<G::Elem>, g1: G::Elem, g2: G::Elem) -> Result<NcsKeys<G::Elem>> {
    if group.is_identity(&g1) || group.is_identity(&g2) {
        return Err(ProtocolError::Degenerate("g1 and g2 must differ from 1".into()));
    }
    let g1x1 = group.conj(&g1, &secret.x1)?;
    let g2x2 = group.conj(&g2, &secret.x2)?;
    let g1y1 = group.conj(&g1, &secret.y1)?;
    let g2y2 = group.conj(&g2, &secret.y2)?;
    if !group.is_identity(&group.comm(&g2x2, &g1y1)?) {
        return Err(ProtocolError::Degenerate("[g2^x2, g1^y1] != 1".into()));
    }
    let public = NcsPublic {
        c: group.mul(&g1x1, &g2x2)?,
        d: group.mul(&g1y1, &g2y2)?,
        h: group.conj(&g1, &secret.z)?,
        g1,
        g2,
    };
    Ok(NcsKeys { public, secret })
}

pub fn ncs_keygen<G: Group, R: Rng + ?Sized>(spec: &PlatformSpec<G>, pairing: Pairing, rng: &mut R) -> Result<NcsKeys<G::Elem>> {
    spec.validate()?;
    let secret = NcsSecret {
        x1: spec.sample_secret(rng)?,
        x2: spec.sample_secret(rng)?,
        y1: spec.sample_secret(rng)?,
        y2: spec.sample_secret(rng)?,
        z: spec.sample_secret(rng)?,
    };
    let group = &spec.group;
    let all = group.generators();
    let (left, right) = match (pairing, &spec.factors) {
        (Pairing::DirectProduct, Some((l, r))) => (l.as_slice(), r.as_slice()),
        (Pairing::DirectProduct, None) => {
            return Err(ProtocolError::InvalidPlatform("direct-product pairing needs factors".into()))
        }
        (Pairing::Checked, _) => (all.as_slice(), all.as_slice()),
    };
    for _ in 0..spec.retry_budget {
        let g1 = sample_in(group, left, spec.word_length, rng)?;
        let g2 = sample_in(group, right, spec.word_length, rng)?;
        match ncs_keys_from(group, secret.clone(), g1, g2) {
            Err(ProtocolError::Degenerate(_)) => continue,
            other => return other,
        }
    }
    Err(ProtocolError::RetryExhausted(spec.retry_budget))
}

/// True when `m` commutes with `h^r`, in which case `e = m` and the
/// ciphertext carries the message in the clear.
pub fn ncs_leaks_plaintext<G: Group>(group: &G, public: &NcsPublic<G::Elem>, m: &G::Elem, r: &G::Elem) -> Result<bool> {
    let hr = group.conj(&public.h, r)?;
    Ok(group.is_identity(&group.comm(m, &hr)?))
}

/// Encryption with an explicit randomizer `r`, which must commute with the
/// five secrets.
pub fn ncs_encrypt_with<G: Group>(
    group: &G,
    public: &NcsPublic<G::Elem>,
    m: &G::Elem,
    r: &G::Elem,
) -> Result<NcsCiphertext<G::Elem>> {
    let hr = group.conj(&public.h, r)?;
    if ncs_leaks_plaintext(group, public, m, r)? {
        log::warn!("message commutes with h^r; the ciphertext component e equals m");
    }
    Ok(NcsCiphertext {
        u1: group.conj(&public.g1, r)?,
        u2: group.conj(&public.g2, r)?,
        e: group.conj(m, &hr)?,
        v: group.mul(&group.conj(&public.c, r)?, &group.conj(&public.d, r)?)?,
    })
}

pub fn ncs_encrypt<G: Group, R: Rng + ?Sized>(
    spec: &PlatformSpec<G>,
    public: &NcsPublic<G::Elem>,
    m: &G::Elem,
    rng: &mut R,
) -> Result<NcsCiphertext<G::Elem>> {
    let r = spec.sample_random(rng)?;
    ncs_encrypt_with(&spec.group, public, m, &r)
}

/// `u₁^{x₁}·u₁^{y₁}·u₂^{x₂}·u₂^{y₂}`, the value an honest `v` equals.
pub fn ncs_check_value<G: Group>(group: &G, secret: &NcsSecret<G::Elem>, ct: &NcsCiphertext<G::Elem>) -> Result<G::Elem> {
    let parts = [
        group.conj(&ct.u1, &secret.x1)?,
        group.conj(&ct.u1, &secret.y1)?,
        group.conj(&ct.u2, &secret.x2)?,
        group.conj(&ct.u2, &secret.y2)?,
    ];
    let mut acc = group.identity();
    for p in &parts {
        acc = group.mul(&acc, p)?;
    }
    Ok(acc)
}

pub fn ncs_decrypt<G: Group>(group: &G, secret: &NcsSecret<G::Elem>, ct: &NcsCiphertext<G::Elem>) -> Result<Decrypted<G::Elem>> {
    if ncs_check_value(group, secret, ct)? != ct.v {
        return Ok(Decrypted::Reject);
    }
    let mask = group.conj(&ct.u1, &secret.z)?;
    Ok(Decrypted::Accept(group.conj(&ct.e, &group.inv(&mask)?)?))
}
