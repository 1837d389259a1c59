use super::presentation::{PcPresentation, PresentationError};

/// Names accepted by [`catalog`].
pub const CATALOG: &[&str] = &["d4", "q8", "heis3", "heisZ", "dihedral_inf"];

const D4: &str = "\
n 2
order 1 2
order 2 4
conj 1 2 + : g2^3
conj 1 2 - : g2^3
";

// g1 = i, g2 = j, g3 = -1
const Q8: &str = "\
n 3
order 1 2
order 2 2
order 3 2
power 1 : g3
power 2 : g3
conj 1 2 + : g2*g3
conj 1 2 - : g2*g3
";

const HEIS3: &str = "\
n 3
order 1 3
order 2 3
order 3 3
conj 1 2 + : g2*g3
conj 1 2 - : g2*g3^2
";

const HEIS_Z: &str = "\
n 3
order 1 inf
order 2 inf
order 3 inf
conj 1 2 + : g2*g3
conj 1 2 - : g2*g3^-1
";

const DIHEDRAL_INF: &str = "\
n 2
order 1 2
order 2 inf
conj 1 2 + : g2^-1
conj 1 2 - : g2^-1
";

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CatalogError {
    #[error("unknown catalog entry `{0}`")]
    Unknown(String),
    #[error(transparent)]
    Presentation(#[from] PresentationError),
}

/// Built-in presentations:
///
/// - `d4`: dihedral group of order 8, `g1 = b`, `g2 = a`, `a^b = a³`
/// - `q8`: quaternions, `g1 = i`, `g2 = j`, `g3 = -1` central
/// - `heis3`: Heisenberg group mod 3, `[g2, g1] = g3` central
/// - `heisZ`: integer Heisenberg group, same relations, infinite orders
/// - `dihedral_inf`: `Z/2 ⋉ Z` with `g2^{g1} = g2⁻¹`
pub fn catalog(name: &str) -> Result<PcPresentation, CatalogError> {
    let text = match name {
        "d4" => D4,
        "q8" => Q8,
        "heis3" => HEIS3,
        "heisZ" => HEIS_Z,
        "dihedral_inf" => DIHEDRAL_INF,
        _ => return Err(CatalogError::Unknown(name.to_string())),
    };
    Ok(text.parse()?)
}

/// `d4 × d4`, the direct-product platform used by the Cramer-Shoup variant.
pub fn d4_squared() -> PcPresentation {
    let d4 = catalog("d4").expect("built-in");
    PcPresentation::direct_product(&d4, &d4)
}
