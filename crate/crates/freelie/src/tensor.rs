//! The tensor algebra over an alphabet as a Hopf algebra.
//!
//! Basis words multiply by concatenation. Letters are primitive: the
//! coproduct of a word is the unshuffle sum over all subsets of its
//! positions, the counit picks out the coefficient of the empty word, and
//! the antipode reverses words with the sign (-1)^length. The adjoint action
//! of the subalgebra generated by the W-letters makes the whole algebra a
//! module algebra over it.

use crate::arith::{LinComb, Rational};
use crate::error::Error;
use crate::words::{Alphabet, LetterId, Part, Word};
use num_traits::One;
use std::fmt;
use std::sync::Arc;

/// A sparse element of the tensor algebra over a fixed alphabet.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TensorElement {
    alphabet: Arc<Alphabet>,
    body: LinComb<Word>,
}

/// An element of the two-fold tensor product, as used by the coproduct.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TensorPair {
    alphabet: Arc<Alphabet>,
    body: LinComb<(Word, Word)>,
}

/// An element of the (n+1)-fold tensor product produced by the iterated
/// coproduct; every key has the same number of slots.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TensorTuple {
    alphabet: Arc<Alphabet>,
    slots: usize,
    body: LinComb<Vec<Word>>,
}

/// All splits of a word into a subsequence and its complement, preserving
/// relative order; the terms of the unshuffle coproduct of a basis word.
pub(crate) fn unshuffles(w: &Word) -> Vec<(Word, Word)> {
    let ids = w.ids();
    let n = ids.len();
    assert!(n < usize::BITS as usize, "word too long for subset enumeration");
    let mut out = Vec::with_capacity(1 << n);
    for mask in 0usize..(1 << n) {
        let mut left = Vec::new();
        let mut right = Vec::new();
        for (i, &id) in ids.iter().enumerate() {
            if mask & (1 << i) != 0 {
                left.push(id);
            } else {
                right.push(id);
            }
        }
        out.push((Word::from_ids(left), Word::from_ids(right)));
    }
    out
}

/// Concatenation product on raw word combinations.
pub(crate) fn concat_mul(a: &LinComb<Word>, b: &LinComb<Word>) -> LinComb<Word> {
    let mut out = LinComb::zero();
    for (wa, ca) in a.iter() {
        for (wb, cb) in b.iter() {
            out.add_term(wa.concat(wb), ca * cb);
        }
    }
    out
}

/// Antipode on raw word combinations: reverse each word, sign (-1)^length.
pub(crate) fn antipode_body(a: &LinComb<Word>) -> LinComb<Word> {
    a.map_linear(|w| {
        let sign = if w.len() % 2 == 0 { Rational::one() } else { -Rational::one() };
        LinComb::term(w.reversed(), sign)
    })
}

impl TensorElement {
    pub fn zero(alphabet: &Arc<Alphabet>) -> Self {
        TensorElement { alphabet: alphabet.clone(), body: LinComb::zero() }
    }

    /// The algebra unit: the empty word with coefficient 1.
    pub fn unit(alphabet: &Arc<Alphabet>) -> Self {
        Self::from_word(alphabet, Word::empty())
    }

    pub fn from_word(alphabet: &Arc<Alphabet>, w: Word) -> Self {
        TensorElement { alphabet: alphabet.clone(), body: LinComb::basis(w) }
    }

    pub fn from_letter(alphabet: &Arc<Alphabet>, id: LetterId) -> Self {
        Self::from_word(alphabet, Word::letter(id))
    }

    pub fn scalar(alphabet: &Arc<Alphabet>, c: Rational) -> Self {
        TensorElement { alphabet: alphabet.clone(), body: LinComb::term(Word::empty(), c) }
    }

    pub fn from_body(alphabet: &Arc<Alphabet>, body: LinComb<Word>) -> Self {
        TensorElement { alphabet: alphabet.clone(), body }
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

    /// Largest total degree over the support; 0 for the zero element.
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
        Ok(Self::from_body(&self.alphabet, self.body.add(&other.body)))
    }

    pub fn sub(&self, other: &Self) -> Result<Self, Error> {
        self.check_same(other)?;
        Ok(Self::from_body(&self.alphabet, self.body.sub(&other.body)))
    }

    pub fn neg(&self) -> Self {
        Self::from_body(&self.alphabet, self.body.neg())
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self::from_body(&self.alphabet, self.body.scale(c))
    }

    /// Bilinear extension of word concatenation.
    pub fn product(&self, other: &Self) -> Result<Self, Error> {
        self.check_same(other)?;
        Ok(Self::from_body(&self.alphabet, concat_mul(&self.body, &other.body)))
    }

    /// The unshuffle coproduct; letters are primitive.
    pub fn coproduct(&self) -> TensorPair {
        let mut body = LinComb::zero();
        for (w, c) in self.body.iter() {
            for (left, right) in unshuffles(w) {
                body.add_term((left, right), c.clone());
            }
        }
        TensorPair { alphabet: self.alphabet.clone(), body }
    }

    /// The coefficient of the empty word.
    pub fn counit(&self) -> Rational {
        self.body.coeff(&Word::empty())
    }

    /// The algebra antimorphism sending each word to its reversal with sign
    /// (-1)^length.
    pub fn antipode(&self) -> Self {
        Self::from_body(&self.alphabet, antipode_body(&self.body))
    }

    /// The n-fold iterated coproduct, landing in n+1 slots; independent of
    /// the bracketing of the iteration by coassociativity.
    pub fn iterated_coproduct(&self, n: usize) -> TensorTuple {
        assert!(n >= 1, "iterated coproduct requires n >= 1");
        let slots = n + 1;
        let mut body = LinComb::zero();
        for (w, c) in self.body.iter() {
            let ids = w.ids();
            // Every function positions -> slots contributes one term.
            let mut coloring = vec![0usize; ids.len()];
            loop {
                let mut parts = vec![Vec::new(); slots];
                for (i, &slot) in coloring.iter().enumerate() {
                    parts[slot].push(ids[i]);
                }
                let key: Vec<Word> = parts.into_iter().map(Word::from_ids).collect();
                body.add_term(key, c.clone());

                let mut pos = 0;
                loop {
                    if pos == coloring.len() {
                        break;
                    }
                    coloring[pos] += 1;
                    if coloring[pos] < slots {
                        break;
                    }
                    coloring[pos] = 0;
                    pos += 1;
                }
                if pos == coloring.len() {
                    break;
                }
            }
        }
        TensorTuple { alphabet: self.alphabet.clone(), slots, body }
    }

    /// Err with the offending symbol if any support word uses a letter
    /// outside the W part.
    pub fn require_w_support(&self) -> Result<(), Error> {
        for w in self.body.keys() {
            for &id in w.ids() {
                if self.alphabet.letter(id).part() != Part::W {
                    return Err(Error::NotInHopfSubalgebra(
                        self.alphabet.letter(id).symbol().to_string(),
                    ));
                }
            }
        }
        Ok(())
    }
}

impl fmt::Display for TensorElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", crate::render::format_terms(&self.alphabet, &self.body))
    }
}

impl TensorPair {
    pub fn zero(alphabet: &Arc<Alphabet>) -> Self {
        TensorPair { alphabet: alphabet.clone(), body: LinComb::zero() }
    }

    pub fn from_body(alphabet: &Arc<Alphabet>, body: LinComb<(Word, Word)>) -> Self {
        TensorPair { alphabet: alphabet.clone(), body }
    }

    pub fn alphabet(&self) -> &Arc<Alphabet> {
        &self.alphabet
    }

    pub fn body(&self) -> &LinComb<(Word, Word)> {
        &self.body
    }

    pub fn add(&self, other: &Self) -> Self {
        Self::from_body(&self.alphabet, self.body.add(&other.body))
    }

    pub fn sub(&self, other: &Self) -> Self {
        Self::from_body(&self.alphabet, self.body.sub(&other.body))
    }

    /// Slot-wise product (no signs; the coalgebra is unsigned).
    pub fn product(&self, other: &Self) -> Self {
        let mut body = LinComb::zero();
        for ((a1, a2), c) in self.body.iter() {
            for ((b1, b2), d) in other.body.iter() {
                body.add_term((a1.concat(b1), a2.concat(b2)), c * d);
            }
        }
        Self::from_body(&self.alphabet, body)
    }

    /// x ⊗ 1 + 1 ⊗ x, the coproduct shape of a primitive element.
    pub fn primitive_form(x: &TensorElement) -> Self {
        let mut body = LinComb::zero();
        for (w, c) in x.body().iter() {
            body.add_term((w.clone(), Word::empty()), c.clone());
            body.add_term((Word::empty(), w.clone()), c.clone());
        }
        Self::from_body(&x.alphabet, body)
    }

    /// Collapse each term (w1, w2) through `f` into a single combination.
    pub fn contract<F: FnMut(&Word, &Word) -> LinComb<Word>>(&self, mut f: F) -> TensorElement {
        TensorElement::from_body(&self.alphabet, self.body.map_linear(|(w1, w2)| f(w1, w2)))
    }
}

impl TensorTuple {
    pub fn slots(&self) -> usize {
        self.slots
    }

    pub fn body(&self) -> &LinComb<Vec<Word>> {
        &self.body
    }
}

/// The adjoint action of `h` (in the subalgebra generated by W) on `c`:
/// sum over the coproduct terms of h of h1 · c · S(h2).
pub fn adjoint_action(h: &TensorElement, c: &TensorElement) -> Result<TensorElement, Error> {
    if !(Arc::ptr_eq(h.alphabet(), c.alphabet()) || h.alphabet() == c.alphabet()) {
        return Err(Error::AlphabetMismatch);
    }
    h.require_w_support()?;
    let mut body = LinComb::zero();
    for (hw, hc) in h.body().iter() {
        for (h1, h2) in unshuffles(hw) {
            let sign = if h2.len() % 2 == 0 { Rational::one() } else { -Rational::one() };
            let h2rev = h2.reversed();
            for (cw, cc) in c.body().iter() {
                let word = h1.concat(cw).concat(&h2rev);
                body.add_term(word, hc * cc * &sign);
            }
        }
    }
    Ok(TensorElement::from_body(h.alphabet(), body))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat;
    use crate::words::Letter;

    fn ab_alphabet() -> Arc<Alphabet> {
        Arc::new(
            Alphabet::new(vec![Letter::new("a", Part::W, 1), Letter::new("b", Part::W, 1)])
                .unwrap(),
        )
    }

    fn sv_alphabet() -> Arc<Alphabet> {
        Arc::new(Alphabet::mixed(&["v"], &["s"]).unwrap())
    }

    fn w(alphabet: &Arc<Alphabet>, s: &str) -> Word {
        Word::from_ids(
            s.chars().map(|c| alphabet.find(&c.to_string()).expect("declared letter")).collect(),
        )
    }

    fn elem(alphabet: &Arc<Alphabet>, s: &str) -> TensorElement {
        TensorElement::from_word(alphabet, w(alphabet, s))
    }

    #[test]
    fn product_concatenates_basis_words() {
        let a = ab_alphabet();
        let prod = elem(&a, "a").product(&elem(&a, "b")).unwrap();
        assert_eq!(prod, elem(&a, "ab"));
    }

    #[test]
    fn unit_law() {
        let a = ab_alphabet();
        let x = TensorElement::from_body(
            &a,
            LinComb::from_terms([(w(&a, "ab"), rat(1, 1)), (w(&a, "b"), rat(2, 1))]),
        );
        assert_eq!(TensorElement::unit(&a).product(&x).unwrap(), x);
        assert_eq!(x.product(&TensorElement::unit(&a)).unwrap(), x);
    }

    #[test]
    fn product_is_bilinear() {
        let a = ab_alphabet();
        let x = TensorElement::from_body(
            &a,
            LinComb::from_terms([(w(&a, "ab"), rat(1, 1)), (w(&a, "b"), rat(2, 1))]),
        );
        let got = x.product(&elem(&a, "a")).unwrap();
        let expected = TensorElement::from_body(
            &a,
            LinComb::from_terms([(w(&a, "aba"), rat(1, 1)), (w(&a, "ba"), rat(2, 1))]),
        );
        assert_eq!(got, expected);
    }

    #[test]
    fn alphabet_mismatch_is_rejected() {
        let a = ab_alphabet();
        let b = sv_alphabet();
        assert!(matches!(
            elem(&a, "a").product(&elem(&b, "s")),
            Err(Error::AlphabetMismatch)
        ));
    }

    #[test]
    fn coproduct_of_unit_and_letter() {
        let a = ab_alphabet();
        let unit = TensorElement::unit(&a);
        assert_eq!(
            unit.coproduct(),
            TensorPair::from_body(&a, LinComb::basis((Word::empty(), Word::empty())))
        );
        // letters are primitive
        let x = elem(&a, "a");
        assert_eq!(x.coproduct(), TensorPair::primitive_form(&x));
    }

    /// Oracle: the coproduct is an algebra map, so Δ(ab) = Δ(a)·Δ(b).
    #[test]
    fn coproduct_of_word_matches_product_of_coproducts() {
        let a = ab_alphabet();
        let direct = elem(&a, "ab").coproduct();
        let via_product = elem(&a, "a").coproduct().product(&elem(&a, "b").coproduct());
        assert_eq!(direct, via_product);
        assert_eq!(direct.body().len(), 4);
    }

    #[test]
    fn counit_examples() {
        let a = ab_alphabet();
        assert_eq!(TensorElement::unit(&a).counit(), rat(1, 1));
        assert_eq!(elem(&a, "a").counit(), rat(0, 1));
        let x = TensorElement::scalar(&a, rat(3, 1)).add(&elem(&a, "ab").scale(&rat(2, 1))).unwrap();
        assert_eq!(x.counit(), rat(3, 1));
    }

    #[test]
    fn antipode_examples() {
        let a = ab_alphabet();
        assert_eq!(TensorElement::unit(&a).antipode(), TensorElement::unit(&a));
        assert_eq!(elem(&a, "a").antipode(), elem(&a, "a").neg());
        // S(ab) = S(b)S(a) = (-b)(-a) = ba
        assert_eq!(elem(&a, "ab").antipode(), elem(&a, "ba"));
    }

    #[test]
    fn iterated_coproduct_reduces_to_coproduct() {
        let a = ab_alphabet();
        let x = TensorElement::from_body(
            &a,
            LinComb::from_terms([(w(&a, "ab"), rat(2, 1)), (w(&a, "a"), rat(-1, 3))]),
        );
        let tuple = x.iterated_coproduct(1);
        let mut expected = LinComb::zero();
        for ((l, r), c) in x.coproduct().body().iter() {
            expected.add_term(vec![l.clone(), r.clone()], c.clone());
        }
        assert_eq!(tuple.body(), &expected);
    }

    #[test]
    fn two_fold_diagonal_of_letter() {
        let a = ab_alphabet();
        let tuple = elem(&a, "a").iterated_coproduct(2);
        let e = Word::empty;
        let aw = || w(&a, "a");
        let expected = LinComb::from_terms([
            (vec![aw(), e(), e()], rat(1, 1)),
            (vec![e(), aw(), e()], rat(1, 1)),
            (vec![e(), e(), aw()], rat(1, 1)),
        ]);
        assert_eq!(tuple.body(), &expected);
    }

    /// Oracle: the 2-fold diagonal of a word enumerates ordered 3-colorings
    /// of its positions; for a 2-letter word that is 9 terms, and it agrees
    /// with applying the coproduct twice.
    #[test]
    fn two_fold_diagonal_matches_nested_coproduct() {
        let a = ab_alphabet();
        let x = elem(&a, "ab");
        let tuple = x.iterated_coproduct(2);
        assert_eq!(tuple.body().iter().map(|(_, c)| c).count(), 9);

        let mut nested = LinComb::zero();
        for ((l, r), c) in x.coproduct().body().iter() {
            for (l1, l2) in unshuffles(l) {
                nested.add_term(vec![l1, l2, r.clone()], c.clone());
            }
        }
        assert_eq!(tuple.body(), &nested);

        let mut nested_right = LinComb::zero();
        for ((l, r), c) in x.coproduct().body().iter() {
            for (r1, r2) in unshuffles(r) {
                nested_right.add_term(vec![l.clone(), r1, r2], c.clone());
            }
        }
        assert_eq!(tuple.body(), &nested_right);
    }

    #[test]
    fn adjoint_action_examples() {
        let m = sv_alphabet();
        let s = elem(&m, "s");
        let v = elem(&m, "v");

        // 1 · c = c
        let c = TensorElement::from_body(
            &m,
            LinComb::from_terms([(w(&m, "sv"), rat(2, 1)), (w(&m, "v"), rat(1, 2))]),
        );
        assert_eq!(adjoint_action(&TensorElement::unit(&m), &c).unwrap(), c);

        // s · v = sv - vs
        let sv_vs = elem(&m, "sv").sub(&elem(&m, "vs")).unwrap();
        assert_eq!(adjoint_action(&s, &v).unwrap(), sv_vs);

        // ss · v = ssv - 2 svs + vss
        let ss = s.product(&s).unwrap();
        let expected = TensorElement::from_body(
            &m,
            LinComb::from_terms([
                (w(&m, "ssv"), rat(1, 1)),
                (w(&m, "svs"), rat(-2, 1)),
                (w(&m, "vss"), rat(1, 1)),
            ]),
        );
        assert_eq!(adjoint_action(&ss, &v).unwrap(), expected);
    }

    #[test]
    fn adjoint_rejects_non_w_actor() {
        let m = sv_alphabet();
        let v = elem(&m, "v");
        let s = elem(&m, "s");
        match adjoint_action(&v, &s) {
            Err(Error::NotInHopfSubalgebra(sym)) => assert_eq!(sym, "v"),
            other => panic!("expected NotInHopfSubalgebra, got {other:?}"),
        }
    }
}
