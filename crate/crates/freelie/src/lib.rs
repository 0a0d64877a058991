//! Exact symbolic engine for free Lie algebras over a split generator set.
//!
//! The tensor algebra over the combined alphabet carries its standard Hopf
//! structure (concatenation product, unshuffle coproduct, reversal
//! antipode). The subalgebra generated by the W-letters acts on everything
//! by the adjoint action, and the whole algebra decomposes as the smash
//! product of the tensor algebra on the derived U-generators with that
//! subalgebra. On the Lie side this yields the semidirect splitting of the
//! free Lie algebra into the free Lie algebra on W and the ideal generated
//! by V, which is itself free on the U-generators — all of it computable
//! with exact rational coefficients.
//!
//! Modules:
//! - [`arith`]: rationals and sparse linear combinations;
//! - [`words`]: alphabets, words, Lyndon machinery, dimension counts;
//! - [`tensor`]: the tensor algebra as a Hopf algebra, adjoint action;
//! - [`lie`]: Lyndon-basis Lie polynomials, expansion and extraction;
//! - [`elimination`]: the block-form automorphisms, smash normal form,
//!   U-generators, and the Lie-level elimination;
//! - [`expr`]: the expression grammar used by the CLI;
//! - [`checks`]: seeded invariant suites behind the `check` subcommand.

pub mod arith;
pub mod checks;
pub mod elimination;
pub mod error;
pub mod expr;
pub mod lie;
pub mod render;
pub mod tensor;
pub mod words;

pub use arith::{rat, LinComb, Rational};
pub use error::Error;
pub use lie::LiePolynomial;
pub use tensor::{TensorElement, TensorPair};
pub use words::{Alphabet, Letter, LetterId, Part, Word};
