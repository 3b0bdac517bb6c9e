//! Exact arithmetic for the algebra of Young diagrams `A_inf`: the
//! class-algebra product and its infinite-degree extension, S_n characters
//! and central characters, Schur functions in power sums, the cut-and-join
//! operators `W(D)` and genus-0 Hurwitz numbers with their generating
//! function.
//!
//! All arithmetic is exact (`BigInt` / `BigRational`).

pub mod characters;
pub mod class_algebra;
pub mod diagram_sum;
pub mod error;
pub mod exec;
pub mod hurwitz;
pub mod partition;
pub mod perm;
pub mod psym;
pub mod rational;
pub mod selftest;
pub mod w_ops;

pub use characters::{CharTableCache, CharacterTable};
pub use diagram_sum::DiagramSum;
pub use error::{Error, Result};
pub use exec::Execution;
pub use partition::Partition;
pub use psym::PPoly;
pub use rational::Rational;
