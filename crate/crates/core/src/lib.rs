//! Kauffman brackets of rational tangles and Conway-Coxeter friezes of zigzag type.
//!
//! The chain runs from continued fractions through Stern-Brocot words and
//! ancestor triangles to the bracket `<Γ> = v(φ(α))` of a frieze and its
//! complete invariant `C_w`.

pub mod cli;
pub mod frieze;
pub mod laurent;
pub mod lrword;
pub mod rational;
pub mod recipe;
pub mod tangle;
pub mod verify;
pub mod yamada;

pub use laurent::{LaurentPoly, PolyError};
pub use lrword::{fraction_of, word_of, LRWord, Letter, WordError};
pub use rational::{ContinuedFraction, Fraction, RationalError};
pub use tangle::BracketVector;
