//! Rational associahedra for a coprime pair `a < b`.
//!
//! Two complexes live on the admissible diagonals of the polygon with points `0..=b`:
//! the noncrossing model (every pairwise noncrossing set of admissible diagonals) and the
//! lattice-path model (generated by the laser facets of `(a, b)` Dyck paths). This crate builds
//! both, decides membership in the lattice-path model, constructs the obstruction graph that
//! separates them, produces and independently re-checks an explicit sequence of elementary
//! collapses from the first onto the second, and computes reduced homology to confirm the
//! wedge-of-spheres and duality statements.

pub mod collapse;
pub mod complex;
mod error;
pub mod export;
pub mod homology;
pub mod lattice;
pub mod membership;
pub mod obstruction;
mod pair;
pub mod polygon;

pub use error::{Error, Result};
pub use pair::CoprimePair;

pub use complex::{build_ass, build_hat_ass, Caps, Face, SimplicialComplex};
pub use lattice::DyckPath;
pub use polygon::Diagonal;
