//! Free Lie algebra elements in the Lyndon basis.
//!
//! A Lie polynomial is a combination of Lyndon words, each standing for the
//! iterated bracket given by its standard factorization. `expand` writes the
//! element out in the tensor algebra; `extract` inverts that on the image by
//! triangular elimination, using the fact that the expansion of a Lyndon
//! word is the word itself plus lexicographically larger words of the same
//! multidegree.

use crate::arith::{LinComb, Rational};
use crate::error::Error;
use crate::tensor::{concat_mul, TensorElement, TensorPair};
use crate::words::{is_lyndon, standard_factorization, Alphabet, LetterId, Word};
use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

/// An element of the free Lie algebra over an alphabet, in the Lyndon basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LiePolynomial {
    alphabet: Arc<Alphabet>,
    body: LinComb<Word>,
}

impl LiePolynomial {
    pub fn zero(alphabet: &Arc<Alphabet>) -> Self {
        LiePolynomial { alphabet: alphabet.clone(), body: LinComb::zero() }
    }

    pub fn from_letter(alphabet: &Arc<Alphabet>, id: LetterId) -> Self {
        LiePolynomial { alphabet: alphabet.clone(), body: LinComb::basis(Word::letter(id)) }
    }

    /// Builds from explicit terms, rejecting any non-Lyndon support word.
    pub fn from_terms<I: IntoIterator<Item = (Word, Rational)>>(
        alphabet: &Arc<Alphabet>,
        terms: I,
    ) -> Result<Self, Error> {
        let body = LinComb::from_terms(terms);
        for w in body.keys() {
            if !is_lyndon(w)? {
                return Err(Error::NotFactorizable(format!("{w} is not a Lyndon word")));
            }
        }
        Ok(LiePolynomial { alphabet: alphabet.clone(), body })
    }

    /// Wraps a combination already known to have Lyndon support.
    pub(crate) fn from_body_unchecked(alphabet: &Arc<Alphabet>, body: LinComb<Word>) -> Self {
        debug_assert!(body.keys().all(|w| is_lyndon(w).unwrap_or(false)));
        LiePolynomial { alphabet: alphabet.clone(), body }
    }

    pub fn alphabet(&self) -> &Arc<Alphabet> {
        &self.alphabet
    }

    pub fn body(&self) -> &LinComb<Word> {
        &self.body
    }

    pub fn is_zero(&self) -> bool {
        self.body.is_zero()
    }

    pub fn max_degree(&self) -> usize {
        self.body.keys().map(|w| self.alphabet.word_degree(w)).max().unwrap_or(0)
    }

    fn check_same(&self, other: &Self) -> Result<(), Error> {
        if Arc::ptr_eq(&self.alphabet, &other.alphabet) || self.alphabet == other.alphabet {
            Ok(())
        } else {
            Err(Error::AlphabetMismatch)
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self, Error> {
        self.check_same(other)?;
        Ok(LiePolynomial { alphabet: self.alphabet.clone(), body: self.body.add(&other.body) })
    }

    pub fn sub(&self, other: &Self) -> Result<Self, Error> {
        self.check_same(other)?;
        Ok(LiePolynomial { alphabet: self.alphabet.clone(), body: self.body.sub(&other.body) })
    }

    pub fn neg(&self) -> Self {
        LiePolynomial { alphabet: self.alphabet.clone(), body: self.body.neg() }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        LiePolynomial { alphabet: self.alphabet.clone(), body: self.body.scale(c) }
    }

    /// The commutator expansion in the tensor algebra: each Lyndon word is
    /// replaced by the bracketing given by its standard factorization.
    pub fn expand(&self) -> TensorElement {
        let mut memo = HashMap::new();
        let body = self.body.map_linear(|w| expand_word(w, &mut memo).clone());
        TensorElement::from_body(&self.alphabet, body)
    }

    /// The Lie bracket, computed by expanding, commuting, and extracting.
    pub fn bracket(&self, other: &Self) -> Result<Self, Error> {
        self.check_same(other)?;
        let ex = self.expand();
        let ey = other.expand();
        let comm = concat_mul(ex.body(), ey.body()).sub(&concat_mul(ey.body(), ex.body()));
        let element = TensorElement::from_body(&self.alphabet, comm);
        Ok(extract(&element).expect("a commutator of Lie elements is a Lie element"))
    }
}

impl fmt::Display for LiePolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", crate::render::format_terms(&self.alphabet, &self.body))
    }
}

fn expand_word<'a>(w: &Word, memo: &'a mut HashMap<Word, LinComb<Word>>) -> &'a LinComb<Word> {
    if !memo.contains_key(w) {
        let result = if w.len() <= 1 {
            LinComb::basis(w.clone())
        } else {
            let (u, v) = standard_factorization(w).expect("Lyndon support word");
            let eu = expand_word(&u, memo).clone();
            let ev = expand_word(&v, memo).clone();
            concat_mul(&eu, &ev).sub(&concat_mul(&ev, &eu))
        };
        memo.insert(w.clone(), result);
    }
    &memo[w]
}

/// Inverts `expand` on its image: reads off Lyndon coordinates greedily from
/// the lexicographically smallest support word, subtracting its expansion.
/// Fails with the remaining residual if the input is not a Lie element.
pub fn extract(t: &TensorElement) -> Result<LiePolynomial, Error> {
    let mut residual = t.body().clone();
    let mut out = LinComb::zero();
    let mut memo = HashMap::new();
    while let Some(w) = residual.leading_key().cloned() {
        if !is_lyndon(&w).unwrap_or(false) {
            return Err(Error::NotALieElement {
                residual: TensorElement::from_body(t.alphabet(), residual),
            });
        }
        let c = residual.coeff(&w);
        out.add_term(w.clone(), c.clone());
        residual = residual.sub(&expand_word(&w, &mut memo).scale(&c));
    }
    Ok(LiePolynomial { alphabet: t.alphabet().clone(), body: out })
}

/// Whether the coproduct of `t` is t ⊗ 1 + 1 ⊗ t. Over the rationals this
/// characterizes the Lie elements, giving an independent cross-check of
/// `extract`.
pub fn is_primitive(t: &TensorElement) -> bool {
    t.coproduct() == TensorPair::primitive_form(t)
}
