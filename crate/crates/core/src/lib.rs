//! Simple complex Lie algebras over the rationals in Chevalley bases.
//!
//! The crate builds root systems and structure constants for every simple
//! type, and provides exact subspace calculus on top of them: centralizers,
//! normalizers, tangent spaces of adjoint orbit cones, stabilizer comparison
//! for Gauss maps, and the identity ledger for subalgebra-fibered orbits.

pub mod chevalley;
pub mod error;
pub mod lie_subspace;
pub mod linalg;
pub mod orbit;
pub mod roots;
pub mod setup;

pub use chevalley::{BasisLabel, ChevalleyAlgebra, GVector};
pub use error::{Error, Result};
pub use lie_subspace::TStableSubalgebra;
pub use linalg::{QMatrix, Rational, Subspace};
pub use orbit::{GaussFiberReport, Sl2Classification, Sl2Verdict};
pub use roots::{Family, Root, RootSystem, SimpleType};
pub use setup::{IdentityCheck, IdentityLedger, SetupInstance};
