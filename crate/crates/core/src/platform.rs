//! Runtime-selected platforms: a [`GroupHandle`] wraps any concrete
//! platform and tags its elements so that elements of different groups are
//! never mixed.

use std::fmt;
use std::path::Path;

use sha2::{Digest, Sha256};

use crate::format::{parse_usize, strict_lines, FormatError};
use crate::group::{Group, GroupError, Result};
use crate::matrix::{MatElement, MatGroup};
use crate::pc::{catalog, PcElement, PcPresentation};
use crate::protocols::PlatformSpec;
use crate::word::Word;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Platform {
    Pc(PcPresentation),
    Mat(MatGroup),
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum NormalForm {
    Pc(PcElement),
    Mat(MatElement),
}

/// An element together with the tag of the group it belongs to.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Element {
    tag: u64,
    form: NormalForm,
}

impl Element {
    pub fn normal_form(&self) -> &NormalForm {
        &self.form
    }

    pub fn tag(&self) -> u64 {
        self.tag
    }
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let text = match &self.form {
            NormalForm::Pc(e) => {
                let exps: Vec<String> = e.exponents().iter().map(ToString::to_string).collect();
                format!("pc {}", exps.join(" "))
            }
            NormalForm::Mat(e) => {
                let v: Vec<String> = e.v.iter().map(ToString::to_string).collect();
                format!("mat {} ; {}", v.join(" "), e.k)
            }
        };
        f.write_str(&text)
    }
}

/// A platform plus its identity tag, derived from the canonical description
/// so that equal groups built independently share a tag.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupHandle {
    platform: Platform,
    tag: u64,
}

impl GroupHandle {
    pub fn new(platform: Platform) -> Self {
        let description = match &platform {
            Platform::Pc(p) => format!("pc\n{p}"),
            Platform::Mat(m) => format!("mat\n{m}"),
        };
        let digest = Sha256::digest(description.as_bytes());
        let tag = u64::from_be_bytes(digest[..8].try_into().expect("8 bytes"));
        GroupHandle { platform, tag }
    }

    pub fn platform(&self) -> &Platform {
        &self.platform
    }

    pub fn tag(&self) -> u64 {
        self.tag
    }

    pub fn wrap(&self, form: NormalForm) -> Element {
        Element { tag: self.tag, form }
    }

    fn check(&self, a: &Element) -> Result<()> {
        if a.tag != self.tag {
            return Err(GroupError::Mismatch);
        }
        Ok(())
    }

    fn lift<T, F>(&self, a: &Element, b: &Element, pc: T, mat: F) -> Result<Element>
    where
        T: FnOnce(&PcPresentation, &PcElement, &PcElement) -> Result<PcElement>,
        F: FnOnce(&MatGroup, &MatElement, &MatElement) -> Result<MatElement>,
    {
        self.check(a)?;
        self.check(b)?;
        let form = match (&self.platform, &a.form, &b.form) {
            (Platform::Pc(p), NormalForm::Pc(x), NormalForm::Pc(y)) => NormalForm::Pc(pc(p, x, y)?),
            (Platform::Mat(m), NormalForm::Mat(x), NormalForm::Mat(y)) => NormalForm::Mat(mat(m, x, y)?),
            _ => return Err(GroupError::Mismatch),
        };
        Ok(self.wrap(form))
    }
}

impl From<PcPresentation> for GroupHandle {
    fn from(p: PcPresentation) -> Self {
        GroupHandle::new(Platform::Pc(p))
    }
}

impl From<MatGroup> for GroupHandle {
    fn from(m: MatGroup) -> Self {
        GroupHandle::new(Platform::Mat(m))
    }
}

impl Group for GroupHandle {
    type Elem = Element;

    fn identity(&self) -> Element {
        self.wrap(match &self.platform {
            Platform::Pc(p) => NormalForm::Pc(p.identity()),
            Platform::Mat(m) => NormalForm::Mat(m.identity()),
        })
    }

    fn generators(&self) -> Vec<Element> {
        match &self.platform {
            Platform::Pc(p) => p.generators().into_iter().map(|g| self.wrap(NormalForm::Pc(g))).collect(),
            Platform::Mat(m) => m.generators().into_iter().map(|g| self.wrap(NormalForm::Mat(g))).collect(),
        }
    }

    fn gen_count(&self) -> usize {
        match &self.platform {
            Platform::Pc(p) => p.gen_count(),
            Platform::Mat(m) => m.gen_count(),
        }
    }

    fn mul(&self, a: &Element, b: &Element) -> Result<Element> {
        self.lift(a, b, |p, x, y| p.mul(x, y), |m, x, y| m.mul(x, y))
    }

    fn inv(&self, a: &Element) -> Result<Element> {
        self.lift(a, a, |p, x, _| p.inv(x), |m, x, _| m.inv(x))
    }

    fn eval(&self, w: &Word) -> Result<Element> {
        Ok(self.wrap(match &self.platform {
            Platform::Pc(p) => NormalForm::Pc(p.eval(w)?),
            Platform::Mat(m) => NormalForm::Mat(m.eval(w)?),
        }))
    }

    fn encode(&self, a: &Element) -> String {
        match (&self.platform, &a.form) {
            (Platform::Pc(p), NormalForm::Pc(x)) => p.encode(x),
            (Platform::Mat(m), NormalForm::Mat(x)) => m.encode(x),
            _ => a.to_string(),
        }
    }

    fn decode(&self, s: &str) -> Result<Element> {
        Ok(self.wrap(match &self.platform {
            Platform::Pc(p) => NormalForm::Pc(p.decode(s)?),
            Platform::Mat(m) => NormalForm::Mat(m.decode(s)?),
        }))
    }
}

#[derive(Debug, thiserror::Error)]
pub enum PlatformFileError {
    #[error(transparent)]
    Format(#[from] FormatError),
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error(transparent)]
    Presentation(#[from] crate::pc::PresentationError),
    #[error(transparent)]
    Catalog(#[from] crate::pc::CatalogError),
    #[error("cannot read `{path}`: {source}")]
    Io { path: String, source: std::io::Error },
}

/// Parses a platform file.
///
/// ```text
/// platform v1
/// group catalog <name>            | group product <name> <name>
/// group anosov                    | group presentation <path>
/// group matgroup <path>
/// secret <word>                   (one or more)
/// random <word>                   (one or more)
/// left <word>                     (optional, with `right`)
/// right <word>
/// length <n>
/// retries <n>                     (optional)
/// ```
///
/// Words are over the group's generators. Referenced paths are resolved
/// against `base_dir`.
pub fn parse_platform(text: &str, base_dir: Option<&Path>) -> Result<PlatformSpec<GroupHandle>, PlatformFileError> {
    let lines = strict_lines(text)?;
    let bad = |ln: usize, msg: &str| FormatError::new(format!("platform line {}: {msg}", ln + 1));
    if lines.first() != Some(&"platform v1") {
        return Err(bad(0, "expected `platform v1`").into());
    }
    let read = |rel: &str| -> Result<String, PlatformFileError> {
        let path = base_dir.map_or_else(|| Path::new(rel).to_path_buf(), |d| d.join(rel));
        std::fs::read_to_string(&path).map_err(|source| PlatformFileError::Io {
            path: path.display().to_string(),
            source,
        })
    };
    let group: GroupHandle = match lines.get(1).and_then(|l| l.strip_prefix("group ")) {
        Some(g) => match g.split(' ').collect::<Vec<_>>().as_slice() {
            ["catalog", name] => catalog(name)?.into(),
            ["product", a, b] => PcPresentation::direct_product(&catalog(a)?, &catalog(b)?).into(),
            ["anosov"] => MatGroup::anosov().into(),
            ["presentation", path] => read(path)?.parse::<PcPresentation>()?.into(),
            ["matgroup", path] => read(path)?.parse::<MatGroup>()?.into(),
            _ => return Err(bad(1, "unknown group source").into()),
        },
        None => return Err(bad(1, "expected `group ...`").into()),
    };

    let mut spec = PlatformSpec::new(group);
    let mut length = None;
    let (mut left, mut right) = (Vec::new(), Vec::new());
    for (ln, line) in lines.iter().enumerate().skip(2) {
        let (key, value) = line.split_once(' ').ok_or_else(|| bad(ln, "expected `<key> <value>`"))?;
        match key {
            "secret" | "random" | "left" | "right" => {
                let w: Word = value.parse()?;
                let e = spec.group.eval(&w)?;
                match key {
                    "secret" => spec.secret_gens.push(e),
                    "random" => spec.random_gens.push(e),
                    "left" => left.push(e),
                    _ => right.push(e),
                }
            }
            "length" if length.is_none() => length = Some(parse_usize(value)?),
            "retries" => spec.retry_budget = parse_usize(value)?,
            _ => return Err(bad(ln, "unrecognised line").into()),
        }
    }
    spec.word_length = length.ok_or_else(|| bad(lines.len(), "missing `length`"))?;
    match (left.is_empty(), right.is_empty()) {
        (true, true) => {}
        (false, false) => spec.factors = Some((left, right)),
        _ => return Err(bad(lines.len(), "`left` and `right` must be given together").into()),
    }
    Ok(spec)
}
