//! Exact linear algebra over the rationals.

pub mod eigen;
pub mod elim;
pub mod scalar;
pub mod sparse;

pub use elim::{
    coordinates, inverse, kernel_basis, left_inverse, membership, rank, solve_linear, Echelon,
};
pub use scalar::{int, one, ratio, zero, Scalar};
pub use sparse::{tensor, LinComb, SparseMat, SparseVec};
