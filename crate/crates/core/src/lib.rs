//! Exact verification toolkit for matroids, polymatroids and stable polynomials.
//!
//! Everything is computed over the rationals; no floating point enters any certificate.

pub mod analysis;
pub mod linalg;
pub mod matroid;
pub mod poly;
pub mod polymatroid;
pub mod quaternion;
pub mod rational;
