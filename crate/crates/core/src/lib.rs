//! Exact computational algebra for crossed modules of groups, Lie algebras and Hopf
//! algebras, crossed comodules, their strict 2-object counterparts, and the functors
//! relating them.
//!
//! All arithmetic is over the rationals and exact; every structure is validated when it
//! is built, and every checker reports the basis tuple at which a law fails.

pub mod cohomology;
pub mod crossed;
pub mod document;
pub mod enveloping;
pub mod error;
pub mod functors;
pub mod group;
pub mod hopf;
pub mod lie;
pub mod linalg;
pub mod report;

pub use error::{Error, Result};
