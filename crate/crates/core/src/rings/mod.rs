//! Constructors, catalogs and the text interchange format for quantum
//! cohomology rings.

mod catalog;
mod coadjoint;
mod complete;
mod grassmannian;
mod io;
mod projective;

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::qalgebra::QRing;

pub use catalog::{
    adjoint_catalog, cominuscule_catalog, fiber_dimension_check, CatalogFamily, FiberCheck,
    FiberVariety, VarietyDescriptor,
};
pub use coadjoint::{coadjoint_chevalley, coadjoint_ring, CoadjointChevalley};
pub use complete::{associativity_complete, Completion, PartialTable};
pub use grassmannian::{grassmannian2, Partition2};
pub use io::{load_ring, save_ring};
pub use projective::{ci_hyperplane_coefficients, complete_intersection, projective_space};

/// Where a ring table came from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Provenance {
    /// Built by a native constructor.
    Builtin,
    /// Produced by [`associativity_complete`].
    Completed,
    /// Supplied from an outside computation.
    External,
}

impl Provenance {
    pub fn as_str(&self) -> &'static str {
        match self {
            Provenance::Builtin => "builtin",
            Provenance::Completed => "completed",
            Provenance::External => "external",
        }
    }
}

impl fmt::Display for Provenance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Provenance {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "builtin" => Ok(Provenance::Builtin),
            "completed" => Ok(Provenance::Completed),
            "external" => Ok(Provenance::External),
            _ => Err(Error::Unsupported(format!("unknown provenance {s}"))),
        }
    }
}

/// A validated ring together with its provenance; the unit of file I/O.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RingTable {
    pub ring: QRing,
    pub provenance: Provenance,
}

impl RingTable {
    pub fn new(ring: QRing, provenance: Provenance) -> Self {
        Self { ring, provenance }
    }

    pub fn builtin(ring: QRing) -> Self {
        Self::new(ring, Provenance::Builtin)
    }

    /// Canonical text form.
    pub fn to_text(&self) -> String {
        io::write_table(self)
    }

    /// Parse and fully validate.
    pub fn from_text(s: &str) -> Result<Self> {
        io::parse_table(s)
    }

    /// Names accepted by [`RingTable::bundled`].
    pub fn bundled_names() -> &'static [&'static str] {
        &["ig26", "ig28", "f4p4"]
    }

    /// Tables shipped with the crate: `ig26` (IG(2,6)), `ig28` (IG(2,8)) and
    /// `f4p4` (F4/P4).
    pub fn bundled(name: &str) -> Option<Result<Self>> {
        let text = match name {
            "ig26" => include_str!("../../data/ig26.qring"),
            "ig28" => include_str!("../../data/ig28.qring"),
            "f4p4" => include_str!("../../data/f4p4.qring"),
            _ => return None,
        };
        Some(Self::from_text(text))
    }
}
