//! Polycyclic presentations, collection to normal form, and finite
//! enumeration.

mod catalog;
mod collect;
mod presentation;
mod table;

pub use catalog::{catalog, d4_squared, CatalogError, CATALOG};
pub use collect::PcElement;
pub use presentation::{PcPresentation, PresentationError, RelativeOrder, DEFAULT_STEP_BUDGET};
pub use table::{enumerate, EnumerationError, MultTable, MAX_TABLE_ENTRIES};
