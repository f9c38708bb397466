//! Exact decision procedures for finite-dimensional normed spaces whose unit
//! balls are centrally symmetric rational polytopes: plump faces, the
//! generalized-lush property, planar classification, GL-monotone absolute
//! norms and E-sums.

pub mod abs_sums;
pub mod corpus;
pub mod dd;
pub mod error;
pub mod gl;
pub mod linalg;
pub mod lp;
pub mod normed;
pub mod par;
pub mod planar;
pub mod polytope;
pub mod rational;

pub use error::{Error, Result};
pub use par::Execution;
pub use polytope::{Facet, GeneralPolytope, SymmetricPolytope};
pub use rational::{rat, Rational, Vector};
