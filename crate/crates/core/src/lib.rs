//! Exact, degree-truncated computer algebra for double shuffle theory at
//! roots of unity.
//!
//! The crate implements two parallel formalisms over the rationals:
//!
//! - the word-algebra side: series over `X = {x0} ∪ {x_g}` and
//!   `Y = {y_{n,g}}`, the twisted group law `⊛`, the `Γ`-corrected action on
//!   the quotient module, and membership tests for the double shuffle group
//!   and the stabilizer of the harmonic coproduct ([`racinet_group`]);
//! - the crossed-product side: `k⟨⟨X⟩⟩ ⋊ G`, its subalgebra `W` and rank-one
//!   module `M` with their coproducts and twisted actions ([`crossed_product`]).
//!
//! Their Lie algebra counterparts live in [`lie_side`], and [`graded_solver`]
//! turns the Lie conditions into exact linear algebra degree by degree.
//! Every series carries a truncation cap; operations never mix caps.

pub mod cli_io;
pub mod crossed_product;
pub mod error;
pub mod foundations;
pub mod graded_solver;
pub mod lie_side;
pub mod perturbation;
pub mod racinet_group;
pub mod sampling;
pub mod verdict;
pub mod word_algebras;

pub use error::{AlgebraError, Result};
