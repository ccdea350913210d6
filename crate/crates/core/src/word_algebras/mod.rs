//! Word algebras over `X` and `Y`: truncated series, tensor squares,
//! coproducts, the `t_g` action, the `q` relabelings and the dual products.

pub mod letters;
pub mod series;
pub mod xalg;
pub mod yalg;

pub use letters::*;
pub use series::{encode_word, pairing, tensor_pairing, word_degree, Letter, Series, Tensor, Word};
pub use xalg::*;
pub use yalg::*;
