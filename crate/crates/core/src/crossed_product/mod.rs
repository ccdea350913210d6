//! The crossed product `k⟨⟨X⟩⟩ ⋊ G`, the subalgebra `W` and module `M` with
//! their coproducts, the twisted actions of the `⊛` group, and the
//! stabilizers of the coproducts.

pub mod actions;
pub mod stabilizers;
pub mod velem;

pub use actions::*;
pub use stabilizers::*;
pub use velem::*;
