//! Error type shared across the crate.

use crate::tensor::TensorElement;
use std::fmt;

#[derive(Clone, Debug)]
pub enum Error {
    /// An operation that requires a nonempty word was given the empty word.
    EmptyWord,
    /// `standard_factorization` applied to a non-Lyndon or single-letter word.
    NotFactorizable(String),
    /// Two elements over different alphabets were combined.
    AlphabetMismatch,
    /// The acting element is not supported on the Hopf subalgebra generated
    /// by the W-letters; carries the offending symbol.
    NotInHopfSubalgebra(String),
    /// The tensor element is not in the image of the free Lie algebra;
    /// carries the residual left after triangular elimination.
    NotALieElement { residual: TensorElement },
    /// An internal decomposition that the structure theory guarantees to
    /// succeed did not; indicates a bug, surfaced instead of panicking.
    DecompositionFailure(String),
    /// Input degree exceeds the configured cap.
    DegreeOutOfRange { degree: usize, max: usize },
    /// Malformed alphabet or generator declaration.
    InvalidAlphabet(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::EmptyWord => write!(f, "the empty word is not allowed here"),
            Error::NotFactorizable(w) => {
                write!(f, "word `{w}` has no standard factorization (not Lyndon or too short)")
            }
            Error::AlphabetMismatch => write!(f, "elements belong to different alphabets"),
            Error::NotInHopfSubalgebra(sym) => write!(
                f,
                "acting element contains the non-W letter `{sym}`; it must lie in the subalgebra generated by W"
            ),
            Error::NotALieElement { residual } => {
                write!(f, "not a Lie element; residual after elimination: {residual}")
            }
            Error::DecompositionFailure(msg) => write!(f, "internal decomposition failure: {msg}"),
            Error::DegreeOutOfRange { degree, max } => {
                write!(f, "degree {degree} exceeds the configured maximum {max}")
            }
            Error::InvalidAlphabet(msg) => write!(f, "invalid alphabet: {msg}"),
        }
    }
}

impl std::error::Error for Error {}
