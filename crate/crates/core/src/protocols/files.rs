//! Line-oriented key and ciphertext files. Each record is a header line
//! followed by a fixed number of lines in a fixed order; anything else is
//! rejected.
//!
//! | header               | lines                          |
//! |----------------------|--------------------------------|
//! | `ncs-public v1`      | g₁, g₂, c, d, h                |
//! | `ncs-secret v1`      | x₁, x₂, y₁, y₂, z              |
//! | `ncs-ciphertext v1`  | u₁, u₂, e, v                   |
//! | `kk06-public v1`     | b, c                           |
//! | `kk06-secret v1`     | s                              |
//! | `kk06-ciphertext v1` | E, h                           |
//! | `pcke-public v1`     | v, w                           |
//! | `pcke-secret v1`     | n, s, g                        |
//! | `pcke-ciphertext v1` | E, h                           |
//! | `ccs-params v1`      | p, q, g₁, g₂                   |
//! | `ccs-public v1`      | p, q, g₁, g₂, c, d, h          |
//! | `ccs-secret v1`      | p, q, g₁, g₂, x₁, x₂, y₁, y₂, z |
//! | `ccs-ciphertext v1`  | u₁, u₂, e, v                   |
//!
//! Group elements use their wire form, classical values base-10 integers.

use num_bigint::BigUint;

use super::ccs::{CcsCiphertext, CcsParams, CcsPublic, CcsSecret};
use super::kk06::{Kk06Ciphertext, Kk06Public, Kk06Secret};
use super::ncs::{NcsCiphertext, NcsPublic, NcsSecret};
use super::pcke::{PckeCiphertext, PckePublic, PckeSecret};
use crate::format::{parse_uint, read_record, write_record, FormatError};
use crate::group::{Group, GroupError};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum FileError {
    #[error(transparent)]
    Format(#[from] FormatError),
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error(transparent)]
    Params(#[from] super::ProtocolError),
}

pub type Result<T> = std::result::Result<T, FileError>;

/// A record stored as a fixed-length list of group elements.
pub trait ElementRecord<E>: Sized {
    const HEADER: &'static str;
    const LEN: usize;
    fn to_elements(&self) -> Vec<&E>;
    fn from_elements(elems: Vec<E>) -> Self;

    fn write<G: Group<Elem = E>>(&self, group: &G) -> String {
        write_record(Self::HEADER, self.to_elements().into_iter().map(|e| group.encode(e)))
    }

    fn read<G: Group<Elem = E>>(group: &G, text: &str) -> Result<Self> {
        let lines = read_record(text, Self::HEADER, Self::LEN)?;
        let elems = lines.into_iter().map(|l| group.decode(l)).collect::<std::result::Result<Vec<_>, _>>()?;
        Ok(Self::from_elements(elems))
    }
}

macro_rules! element_record {
    ($ty:ident, $header:literal, [$($field:ident),+]) => {
        impl<E> ElementRecord<E> for $ty<E> {
            const HEADER: &'static str = $header;
            const LEN: usize = [$(stringify!($field)),+].len();

            fn to_elements(&self) -> Vec<&E> {
                vec![$(&self.$field),+]
            }

            fn from_elements(elems: Vec<E>) -> Self {
                let mut it = elems.into_iter();
                $ty { $($field: it.next().expect("record length checked")),+ }
            }
        }
    };
}

element_record!(NcsPublic, "ncs-public v1", [g1, g2, c, d, h]);
element_record!(NcsSecret, "ncs-secret v1", [x1, x2, y1, y2, z]);
element_record!(NcsCiphertext, "ncs-ciphertext v1", [u1, u2, e, v]);
element_record!(Kk06Public, "kk06-public v1", [b, c]);
element_record!(Kk06Secret, "kk06-secret v1", [s]);
element_record!(Kk06Ciphertext, "kk06-ciphertext v1", [e, h]);
element_record!(PckePublic, "pcke-public v1", [v, w]);
element_record!(PckeCiphertext, "pcke-ciphertext v1", [e, h]);

pub fn write_pcke_secret<G: Group>(group: &G, sk: &PckeSecret<G::Elem>) -> String {
    write_record("pcke-secret v1", [sk.n.to_string(), group.encode(&sk.s), group.encode(&sk.g)])
}

pub fn read_pcke_secret<G: Group>(group: &G, text: &str) -> Result<PckeSecret<G::Elem>> {
    let lines = read_record(text, "pcke-secret v1", 3)?;
    let n = crate::format::parse_usize(lines[0])? as u64;
    if n == 0 {
        return Err(FormatError::new("n must be positive").into());
    }
    Ok(PckeSecret {
        n,
        s: group.decode(lines[1])?,
        g: group.decode(lines[2])?,
    })
}

fn uints(lines: &[&str]) -> Result<Vec<BigUint>> {
    Ok(lines.iter().map(|l| parse_uint(l)).collect::<std::result::Result<Vec<_>, _>>()?)
}

fn params_lines(p: &CcsParams) -> Vec<String> {
    [&p.p, &p.q, &p.g1, &p.g2].iter().map(|x| x.to_string()).collect()
}

fn params_from(v: &[BigUint]) -> Result<CcsParams> {
    Ok(CcsParams::new(v[0].clone(), v[1].clone(), v[2].clone(), v[3].clone())?)
}

pub fn write_ccs_params(p: &CcsParams) -> String {
    write_record("ccs-params v1", params_lines(p))
}

pub fn read_ccs_params(text: &str) -> Result<CcsParams> {
    params_from(&uints(&read_record(text, "ccs-params v1", 4)?)?)
}

pub fn write_ccs_public(p: &CcsParams, pk: &CcsPublic) -> String {
    let mut lines = params_lines(p);
    lines.extend([&pk.c, &pk.d, &pk.h].iter().map(|x| x.to_string()));
    write_record("ccs-public v1", lines)
}

pub fn read_ccs_public(text: &str) -> Result<(CcsParams, CcsPublic)> {
    let v = uints(&read_record(text, "ccs-public v1", 7)?)?;
    let pk = CcsPublic {
        c: v[4].clone(),
        d: v[5].clone(),
        h: v[6].clone(),
    };
    Ok((params_from(&v)?, pk))
}

pub fn write_ccs_secret(p: &CcsParams, sk: &CcsSecret) -> String {
    let mut lines = params_lines(p);
    lines.extend([&sk.x1, &sk.x2, &sk.y1, &sk.y2, &sk.z].iter().map(|x| x.to_string()));
    write_record("ccs-secret v1", lines)
}

pub fn read_ccs_secret(text: &str) -> Result<(CcsParams, CcsSecret)> {
    let v = uints(&read_record(text, "ccs-secret v1", 9)?)?;
    let sk = CcsSecret {
        x1: v[4].clone(),
        x2: v[5].clone(),
        y1: v[6].clone(),
        y2: v[7].clone(),
        z: v[8].clone(),
    };
    Ok((params_from(&v)?, sk))
}

pub fn write_ccs_ciphertext(ct: &CcsCiphertext) -> String {
    write_record("ccs-ciphertext v1", [&ct.u1, &ct.u2, &ct.e, &ct.v].iter().map(|x| x.to_string()))
}

pub fn read_ccs_ciphertext(text: &str) -> Result<CcsCiphertext> {
    let v = uints(&read_record(text, "ccs-ciphertext v1", 4)?)?;
    Ok(CcsCiphertext {
        u1: v[0].clone(),
        u2: v[1].clone(),
        e: v[2].clone(),
        v: v[3].clone(),
    })
}
