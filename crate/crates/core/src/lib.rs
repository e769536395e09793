//! Symbolic computation in free groups.
//!
//! * [`word`]: reduced words, roots, centralizers, balls.
//! * [`onevar`]: one-variable words, evaluation, parametric words along a
//!   cyclic line.
//! * [`algset`]: finite unions of points and cyclic cosets.
//! * [`solver`]: solution sets of one-variable equations.
//! * [`embed`]: homomorphisms `F(X) → F(Y)` separating a given element and the
//!   diagonal map into a product of copies of `F(Y)`.
//! * [`residual`]: finite permutation representations separating an element
//!   from the identity.

pub mod algset;
pub mod embed;
pub mod error;
pub mod json;
pub mod onevar;
pub mod par;
pub mod residual;
pub mod solver;
pub mod word;

pub use algset::{AlgebraicSet, ClosedSet, CyclicCoset};
pub use error::{Error, Result};
pub use onevar::{Block, LineSolutionSet, OneVarWord, ParametricWord};
pub use par::Exec;
pub use solver::{solve, SolveConfig, SolveReport};
pub use word::{Alphabet, SignedLetter, Word};
