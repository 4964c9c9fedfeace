//! Exact combinatorics of complete and projective toric varieties.
//!
//! Fans and lattice polytopes are analysed for additive actions (Demazure
//! roots, complete collections, polytopes inscribed in a rectangle), for
//! Euler-symmetry, and for the orbit structure of the automorphism group via
//! the divisor class group.

pub mod classgroup;
pub mod error;
pub mod euler;
pub mod fan;
pub mod lattice;
pub mod polytope;

pub use error::{Error, Result};
