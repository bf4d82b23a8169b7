//! Homological invariants of finite-dimensional monomial bound quiver
//! algebras over prime fields, and a batch checker comparing the injective
//! dimension of the Jacobson radical with the global dimension.
//!
//! Module map:
//!
//! * [`linalg`]: dense exact linear algebra over GF(p).
//! * [`algebra`]: quivers, monomial presentations, normal-path bases,
//!   Nakayama and radical-square-zero constructors, opposite algebras.
//! * [`modules`]: right modules as representations, duality, Hom spaces,
//!   covers and envelopes.
//! * [`homology`]: syzygies, resolutions, projective/injective/global
//!   dimensions with certified infinities.
//! * [`checker`]: claim evaluation, family scans, input documents, reports.

pub mod algebra;
pub mod checker;
pub mod homology;
pub mod linalg;
pub mod modules;

pub use algebra::{Algebra, AlgebraError, KupischSeries, KupischShape, Path, Quiver};
pub use homology::{DimOptions, ExtDim};
pub use linalg::{Field, Matrix};
pub use modules::{ModuleError, Representation};
