//! Exact arithmetic substrate: finite abelian groups, rationals, truncated
//! univariate series and dense rational linear algebra.

pub mod group;
pub mod matrix;
pub mod rational;
pub mod uniseries;

pub use group::{GroupElement, GroupSpec};
pub use matrix::{matrix_nullspace, matrix_rank, subspace_contained, QMatrix};
pub use rational::{parse_rational, q, qf, Rational};
pub use uniseries::UniSeries;
