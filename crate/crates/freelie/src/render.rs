//! Text and JSON rendering of sparse elements.
//!
//! Text output is parseable by the expression grammar: monomials are symbols
//! joined by `*`, coefficients are reduced `p/q` with `q = 1` elided. JSON
//! output is a list of `{monomial, coefficient}` objects in key order, so a
//! given element always serializes to the same bytes.

use crate::arith::{LinComb, Rational};
use crate::words::{Alphabet, Word};
use num_traits::{One, Signed};
use serde::Serialize;

/// One term of a serialized element.
#[derive(Debug, Clone, Serialize, PartialEq)]
pub struct TermJson {
    pub monomial: Vec<String>,
    pub coefficient: String,
}

/// The symbols of a word, in order.
pub fn word_symbols(alphabet: &Alphabet, w: &Word) -> Vec<String> {
    w.ids().iter().map(|&id| alphabet.letter(id).symbol().to_string()).collect()
}

pub fn terms_json(alphabet: &Alphabet, body: &LinComb<Word>) -> Vec<TermJson> {
    body.iter()
        .map(|(w, c)| TermJson {
            monomial: word_symbols(alphabet, w),
            coefficient: c.to_string(),
        })
        .collect()
}

/// Terms of a pair combination, with the two coordinates flattened into one
/// monomial (first-coordinate symbols, then second-coordinate symbols).
pub fn pair_terms_json(
    first: &Alphabet,
    second: &Alphabet,
    body: &LinComb<(Word, Word)>,
) -> Vec<TermJson> {
    body.iter()
        .map(|((u, w), c)| {
            let mut monomial = word_symbols(first, u);
            monomial.extend(word_symbols(second, w));
            TermJson { monomial, coefficient: c.to_string() }
        })
        .collect()
}

fn push_term(out: &mut String, coeff: &Rational, monomial: &str) {
    let negative = coeff.is_negative();
    let abs = coeff.abs();
    let body = if monomial.is_empty() {
        abs.to_string()
    } else if abs.is_one() {
        monomial.to_string()
    } else {
        format!("{abs}*{monomial}")
    };
    if out.is_empty() {
        if negative {
            out.push('-');
        }
    } else {
        out.push_str(if negative { " - " } else { " + " });
    }
    out.push_str(&body);
}

/// Human-readable (and re-parseable) form of an element; `"0"` when zero.
pub fn format_terms(alphabet: &Alphabet, body: &LinComb<Word>) -> String {
    if body.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (w, c) in body.iter() {
        push_term(&mut out, c, &alphabet.render_word(w, "*"));
    }
    out
}

/// Text form of a pair combination, coordinates flattened as in JSON.
pub fn format_pair_terms(
    first: &Alphabet,
    second: &Alphabet,
    body: &LinComb<(Word, Word)>,
) -> String {
    if body.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    for ((u, w), c) in body.iter() {
        let mut symbols = word_symbols(first, u);
        symbols.extend(word_symbols(second, w));
        push_term(&mut out, c, &symbols.join("*"));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat;
    use crate::words::{Letter, Part, Word};

    #[test]
    fn formatting_rules() {
        let a = Alphabet::new(vec![
            Letter::new("s", Part::W, 1),
            Letter::new("v", Part::V, 1),
        ])
        .unwrap();
        let s = Word::letter(a.find("s").unwrap());
        let v = Word::letter(a.find("v").unwrap());
        let body = LinComb::from_terms([
            (Word::empty(), rat(3, 2)),
            (s.concat(&v), rat(-1, 1)),
            (v.clone(), rat(2, 1)),
        ]);
        assert_eq!(format_terms(&a, &body), "3/2 - s*v + 2*v");
        assert_eq!(format_terms(&a, &LinComb::zero()), "0");
        assert_eq!(format_terms(&a, &LinComb::term(v, rat(-1, 2))), "-1/2*v");
    }
}
