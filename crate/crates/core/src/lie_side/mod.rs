//! The Lie algebra of primitive series with the twisted bracket, its
//! actions on the word algebras and on the crossed product, the membership
//! conditions for `dmr0` and the stabilizer Lie algebras, and a Lyndon basis
//! for coordinates.

pub mod crossed;
pub mod lie;
pub mod lyndon;
pub mod yside;

pub use crossed::*;
pub use lie::*;
pub use lyndon::*;
pub use yside::*;
