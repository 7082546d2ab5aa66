//! Hyperbolic volumes of generalized tetrahedra and bipyramids, and volume
//! densities of alternating links built from k-uniform tilings.
//!
//! - [`specfun`]: complex dilogarithm and Lobachevsky function.
//! - [`gentetra`]: generalized tetrahedra from dihedral angles.
//! - [`bipyramid`]: wedge and bipyramid families.
//! - [`tiling`]: tilings, equilateral realizations and link densities.

pub mod bipyramid;
pub mod error;
pub mod gentetra;
pub mod specfun;
pub mod tiling;

pub use error::{Error, ErrorCategory, Result};
