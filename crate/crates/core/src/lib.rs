//! Exact generalized vector products and rational trigonometry in three
//! dimensions, relative to an arbitrary non-degenerate symmetric bilinear form
//! over the rationals or a prime field of odd characteristic.
//!
//! Layers, bottom up:
//!
//! - [`field`]: exact scalars ([`FieldSpec`], [`FieldElement`]).
//! - [`linalg`]: row vectors, 3×3 matrices, determinant and adjugate.
//! - [`metric`]: the B-scalar and B-vector products and everything built on them.
//! - [`affine`]: vector triangles, spreads, quadrea and the affine laws.
//! - [`projective`]: projective points, tripods, duals and the projective laws.
//! - [`verify`]: seeded random and exhaustive sweeps over all identities.
//! - [`examples`]: the canned methane and relativistic examples.
//! - [`codec`] and [`cli`]: JSON encoding and the command-line front end.

pub mod affine;
pub mod cli;
pub mod codec;
pub mod error;
pub mod examples;
pub mod field;
pub mod linalg;
pub mod metric;
pub mod projective;
pub mod rng;
pub mod verify;

pub use affine::{analyze_triangle, archimedes, spread, Check, TriangleReport, VectorTriangle};
pub use error::Error;
pub use field::{FieldElement, FieldSpec};
pub use linalg::{Mat3, Vec3};
pub use metric::BilinearForm;
pub use projective::{analyze_tripod, ProjectivePoint, Tripod, TripodReport};
