//! Alphabets, words, and Lyndon-word machinery.
//!
//! Letters are tagged with the part they generate (V, W, or a derived U
//! generator) and a positive degree. V- and W-letters always have degree 1;
//! U-letters carry the degree of their defining expansion. The total order on
//! letters is the declaration order of the alphabet, and words compare
//! lexicographically with respect to it.

use crate::error::Error;
use std::fmt;

/// Which generating space a letter belongs to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Part {
    V,
    W,
    U,
}

/// Index of a letter in its alphabet; the index order is the letter order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LetterId(pub u32);

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Letter {
    symbol: String,
    part: Part,
    degree: usize,
}

impl Letter {
    pub fn new(symbol: impl Into<String>, part: Part, degree: usize) -> Self {
        Letter { symbol: symbol.into(), part, degree }
    }

    pub fn symbol(&self) -> &str {
        &self.symbol
    }

    pub fn part(&self) -> Part {
        self.part
    }

    pub fn degree(&self) -> usize {
        self.degree
    }
}

/// An ordered, finite set of letters.
#[derive(Debug, PartialEq, Eq)]
pub struct Alphabet {
    letters: Vec<Letter>,
}

impl Alphabet {
    /// Checks that symbols are pairwise distinct, degrees positive, and that
    /// V- and W-letters have degree exactly 1.
    pub fn new(letters: Vec<Letter>) -> Result<Self, Error> {
        for (i, l) in letters.iter().enumerate() {
            if l.degree == 0 {
                return Err(Error::InvalidAlphabet(format!("letter `{}` has degree 0", l.symbol)));
            }
            if matches!(l.part, Part::V | Part::W) && l.degree != 1 {
                return Err(Error::InvalidAlphabet(format!(
                    "generator letter `{}` must have degree 1",
                    l.symbol
                )));
            }
            if letters[..i].iter().any(|m| m.symbol == l.symbol) {
                return Err(Error::InvalidAlphabet(format!("duplicate symbol `{}`", l.symbol)));
            }
        }
        Ok(Alphabet { letters })
    }

    /// The alphabet of V∪W with all V-letters preceding all W-letters.
    pub fn mixed(v_symbols: &[&str], w_symbols: &[&str]) -> Result<Self, Error> {
        let letters = v_symbols
            .iter()
            .map(|s| Letter::new(*s, Part::V, 1))
            .chain(w_symbols.iter().map(|s| Letter::new(*s, Part::W, 1)))
            .collect();
        Alphabet::new(letters)
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn letter(&self, id: LetterId) -> &Letter {
        &self.letters[id.0 as usize]
    }

    pub fn ids(&self) -> impl Iterator<Item = LetterId> + '_ {
        (0..self.letters.len() as u32).map(LetterId)
    }

    pub fn find(&self, symbol: &str) -> Option<LetterId> {
        self.letters
            .iter()
            .position(|l| l.symbol == symbol)
            .map(|i| LetterId(i as u32))
    }

    /// Letters of one part, in letter order.
    pub fn part_letters(&self, part: Part) -> Vec<LetterId> {
        self.ids().filter(|&id| self.letter(id).part == part).collect()
    }

    /// Sum of the degrees of the letters of `w`.
    pub fn word_degree(&self, w: &Word) -> usize {
        w.ids().iter().map(|&id| self.letter(id).degree).sum()
    }

    /// Symbols of `w` joined by `sep`; empty string for the empty word.
    pub fn render_word(&self, w: &Word, sep: &str) -> String {
        w.ids()
            .iter()
            .map(|&id| self.letter(id).symbol.as_str())
            .collect::<Vec<_>>()
            .join(sep)
    }
}

/// A finite sequence of letters of one alphabet. The empty word is the
/// algebra unit. Comparison is lexicographic in the letter order.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Word(Vec<LetterId>);

impl Word {
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn letter(id: LetterId) -> Self {
        Word(vec![id])
    }

    pub fn from_ids(ids: Vec<LetterId>) -> Self {
        Word(ids)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn ids(&self) -> &[LetterId] {
        &self.0
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut ids = self.0.clone();
        ids.extend_from_slice(&other.0);
        Word(ids)
    }

    pub fn reversed(&self) -> Word {
        let mut ids = self.0.clone();
        ids.reverse();
        Word(ids)
    }

    pub fn subword(&self, range: std::ops::Range<usize>) -> Word {
        Word(self.0[range].to_vec())
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return write!(f, "1");
        }
        for id in &self.0 {
            write!(f, "{}", id.0)?;
        }
        Ok(())
    }
}

fn lyndon_check(ids: &[LetterId]) -> bool {
    // A nonempty word is Lyndon iff it is strictly smaller than every proper
    // suffix; equivalent to the strict-rotation definition.
    (1..ids.len()).all(|start| ids < &ids[start..])
}

/// Whether `w` is strictly smaller than all of its proper rotations.
pub fn is_lyndon(w: &Word) -> Result<bool, Error> {
    if w.is_empty() {
        return Err(Error::EmptyWord);
    }
    Ok(lyndon_check(w.ids()))
}

/// All words over `letters` (a subset of the alphabet) of total degree in
/// `1..=max_degree`, grouped by degree and lexicographic within each degree.
pub fn words_over(alphabet: &Alphabet, letters: &[LetterId], max_degree: usize) -> Vec<Word> {
    let mut out = Vec::new();
    for degree in 1..=max_degree {
        out.extend(words_of_degree(alphabet, letters, degree));
    }
    out
}

/// All words over `letters` of total degree exactly `degree`, in
/// lexicographic order.
pub fn words_of_degree(alphabet: &Alphabet, letters: &[LetterId], degree: usize) -> Vec<Word> {
    let mut out = Vec::new();
    let mut current = Vec::new();
    fn rec(
        alphabet: &Alphabet,
        letters: &[LetterId],
        remaining: usize,
        current: &mut Vec<LetterId>,
        out: &mut Vec<Word>,
    ) {
        if remaining == 0 {
            out.push(Word::from_ids(current.clone()));
            return;
        }
        for &id in letters {
            let d = alphabet.letter(id).degree();
            if d <= remaining {
                current.push(id);
                rec(alphabet, letters, remaining - d, current, out);
                current.pop();
            }
        }
    }
    rec(alphabet, letters, degree, &mut current, &mut out);
    out
}

/// All words over the full alphabet of total degree at most `max_degree`,
/// including the empty word, grouped by degree.
pub fn words_up_to_degree(alphabet: &Alphabet, max_degree: usize) -> Vec<Word> {
    let letters: Vec<LetterId> = alphabet.ids().collect();
    let mut out = vec![Word::empty()];
    out.extend(words_over(alphabet, &letters, max_degree));
    out
}

/// All Lyndon words of total degree at most `max_degree`, grouped by degree
/// and lexicographic within each degree.
pub fn lyndon_words(alphabet: &Alphabet, max_degree: usize) -> Vec<Word> {
    let letters: Vec<LetterId> = alphabet.ids().collect();
    words_over(alphabet, &letters, max_degree)
        .into_iter()
        .filter(|w| lyndon_check(w.ids()))
        .collect()
}

/// Number of Lyndon words over `alphabet` of total degree exactly `n`.
pub fn graded_lyndon_count(alphabet: &Alphabet, n: usize) -> usize {
    let letters: Vec<LetterId> = alphabet.ids().collect();
    words_of_degree(alphabet, &letters, n)
        .iter()
        .filter(|w| lyndon_check(w.ids()))
        .count()
}

/// Splits a Lyndon word `w` of length at least 2 as `u·v` with `v` the
/// longest proper Lyndon suffix; both parts are Lyndon and `u < v`.
pub fn standard_factorization(w: &Word) -> Result<(Word, Word), Error> {
    if w.len() < 2 || !lyndon_check(w.ids()) {
        return Err(Error::NotFactorizable(format!("{w}")));
    }
    for start in 1..w.len() {
        if lyndon_check(&w.ids()[start..]) {
            return Ok((w.subword(0..start), w.subword(start..w.len())));
        }
    }
    unreachable!("the final letter of a word is always Lyndon");
}

fn mobius(d: usize) -> i64 {
    let mut m = d;
    let mut primes = 0;
    let mut p = 2;
    while p * p <= m {
        if m % p == 0 {
            m /= p;
            if m % p == 0 {
                return 0;
            }
            primes += 1;
        }
        p += 1;
    }
    if m > 1 {
        primes += 1;
    }
    if primes % 2 == 0 {
        1
    } else {
        -1
    }
}

/// The number of Lyndon words of length `n` over `k` degree-1 letters:
/// (1/n) Σ_{d|n} μ(d) k^(n/d).
pub fn witt_dimension(k: usize, n: usize) -> usize {
    assert!(n >= 1, "witt_dimension requires n >= 1");
    let mut sum: i128 = 0;
    for d in 1..=n {
        if n % d == 0 {
            sum += mobius(d) as i128 * (k as i128).pow((n / d) as u32);
        }
    }
    debug_assert!(sum % n as i128 == 0 && sum >= 0);
    (sum / n as i128) as usize
}
