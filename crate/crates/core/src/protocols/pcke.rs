//! Power-conjugacy key exchange. Bob publishes `v = gⁿ` and `w = s⁻¹gs`;
//! Alice sends `E = x⁻¹t⁻¹vᵐtx` with header `h = t⁻¹wᵐt`. Bob computes
//! `E' = s·hⁿ·s⁻¹ = t⁻¹g^{mn}t` and recovers a conjugator from `E'` to `E`
//! by search. When `E'` has a nontrivial centralizer the recovered element
//! may differ from Alice's `x`; it is always a valid conjugator.

use num_bigint::BigInt;
use rand::Rng;

use super::{PlatformSpec, ProtocolError, Result};
use crate::attacks::{conj_search, SearchBudget, SearchOutcome};
use crate::group::Group;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PckePublic<E> {
    pub v: E,
    pub w: E,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PckeSecret<E> {
    pub n: u64,
    pub s: E,
    pub g: E,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PckeKeys<E> {
    pub public: PckePublic<E>,
    pub secret: PckeSecret<E>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PckeCiphertext<E> {
    pub e: E,
    pub h: E,
}

/// Generators (other than powers of `g` up to `|k| ≤ 32`) that commute
/// with `g`. A nonempty result means `g` has a visibly nontrivial
/// centralizer.
pub fn centralizer_witnesses<G: Group>(group: &G, g: &G::Elem) -> Result<Vec<G::Elem>> {
    let mut powers = Vec::new();
    for k in -32i64..=32 {
        powers.push(group.pow(g, k)?);
    }
    let mut out = Vec::new();
    for x in group.generators() {
        if !powers.contains(&x) && group.is_identity(&group.comm(g, &x)?) {
            out.push(x);
        }
    }
    Ok(out)
}

pub fn pcke_keys_from<G: Group>(group: &G, g: G::Elem, n: u64, s: G::Elem) -> Result<PckeKeys<G::Elem>> {
    if group.is_identity(&g) {
        return Err(ProtocolError::Degenerate("g is the identity".into()));
    }
    if n == 0 {
        return Err(ProtocolError::InvalidParams("n must be positive".into()));
    }
    let v = group.pow(&g, n)?;
    let w = group.conj(&g, &s)?;
    Ok(PckeKeys {
        public: PckePublic { v, w },
        secret: PckeSecret { n, s, g },
    })
}

pub fn pcke_keygen<G: Group, R: Rng + ?Sized>(
    spec: &PlatformSpec<G>,
    g: G::Elem,
    n: u64,
    rng: &mut R,
) -> Result<PckeKeys<G::Elem>> {
    spec.validate()?;
    if !centralizer_witnesses(&spec.group, &g)?.is_empty() {
        log::warn!("g commutes with a generator outside <g>; session keys may not be unique");
    }
    let s = spec.sample_secret(rng)?;
    pcke_keys_from(&spec.group, g, n, s)
}

pub fn pcke_encrypt_with<G: Group>(
    group: &G,
    public: &PckePublic<G::Elem>,
    x: &G::Elem,
    m: u64,
    t: &G::Elem,
) -> Result<PckeCiphertext<G::Elem>> {
    if m == 0 {
        return Err(ProtocolError::InvalidParams("m must be positive".into()));
    }
    // x⁻¹t⁻¹·vᵐ·tx
    let tx = group.mul(t, x)?;
    let e = group.mul(&group.inv(&tx)?, &group.mul(&group.pow(&public.v, m)?, &tx)?)?;
    let h = group.conj(&group.pow(&public.w, m)?, t)?;
    Ok(PckeCiphertext { e, h })
}

pub fn pcke_encrypt<G: Group, R: Rng + ?Sized>(
    spec: &PlatformSpec<G>,
    public: &PckePublic<G::Elem>,
    x: &G::Elem,
    m: u64,
    rng: &mut R,
) -> Result<PckeCiphertext<G::Elem>> {
    let t = spec.sample_random(rng)?;
    pcke_encrypt_with(&spec.group, public, x, m, &t)
}

/// `E' = s·hⁿ·s⁻¹`.
pub fn pcke_inner<G: Group>(group: &G, secret: &PckeSecret<G::Elem>, h: &G::Elem) -> Result<G::Elem> {
    let hn = group.pow(h, BigInt::from(secret.n))?;
    Ok(group.mul(&group.mul(&secret.s, &hn)?, &group.inv(&secret.s)?)?)
}

/// Returns the minimal-length conjugator `x'` with `conj(E', x') = E`,
/// searching over the platform generators.
pub fn pcke_decrypt<G: Group>(
    group: &G,
    secret: &PckeSecret<G::Elem>,
    ct: &PckeCiphertext<G::Elem>,
    budget: &SearchBudget,
) -> Result<G::Elem> {
    let inner = pcke_inner(group, secret, &ct.h)?;
    match conj_search(group, &inner, &ct.e, &group.generators(), budget)? {
        SearchOutcome::Found { conjugator, .. } => Ok(conjugator),
        SearchOutcome::NotFound { states } => Err(ProtocolError::NotFound { states }),
    }
}
