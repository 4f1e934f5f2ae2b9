//! Exact small quantum cohomology rings.
//!
//! The crate builds quantum cohomology rings of a few families of Fano
//! varieties (projective spaces, complete intersections, `Gr(2,n)` and the
//! coadjoint varieties of types `C_n` and `F_4`), analyses the algebra obtained
//! at `q = 1` (radical, quadratic form, spectral data of `E_h`) and replays a
//! first-order deformation argument in a single direction `τ`.
//!
//! All verdicts are computed in exact rational arithmetic.

pub mod error;
pub mod factor;
pub mod linalg;
pub mod poly;
pub mod qalgebra;
pub mod rings;
pub mod rootsys;
pub mod verify;

pub use error::{Error, Result};
pub use linalg::Matrix;
pub use poly::Poly;
pub use qalgebra::{
    GramReport, LinOp, ObstructionVerdict, QElem, QRing, RadicalReport, Schedule,
    SpecializedAlgebra, SpectralDecomposition, Theorem1Report, Vector,
};
pub use rings::{Provenance, RingTable};
pub use rootsys::{AffineRoot, Family, QuantumMonomial, Root, RootSystem, RootSystemType};
pub use verify::{CheckResult, Status};

/// Exact rational scalar used throughout.
pub type Q = num_rational::BigRational;

/// Integer to rational.
pub fn q(n: i64) -> Q {
    Q::from_integer(n.into())
}

/// `num / den` as a rational.
pub fn qf(num: i64, den: i64) -> Q {
    Q::new(num.into(), den.into())
}
