//! Exact rational coefficients and generic sparse linear combinations.
//!
//! Every algebraic element in this crate is a [`LinComb`]: a finite map from
//! an ordered basis key to a nonzero [`Rational`]. Invariants:
//!
//! - no stored coefficient is zero (dropped eagerly on every operation),
//! - iteration is always in key order, so serialization is deterministic,
//! - coefficients are arbitrary-precision rationals, so all identities in the
//!   test suites hold exactly, never approximately.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use std::collections::BTreeMap;
use std::collections::btree_map;

/// The coefficient field: arbitrary-precision rationals, always reduced,
/// denominator positive, zero stored as 0/1.
pub type Rational = num_rational::BigRational;

/// Shorthand for a rational from machine integers.
pub fn rat(numer: i64, denom: i64) -> Rational {
    Rational::new(BigInt::from(numer), BigInt::from(denom))
}

/// A sparse linear combination of basis keys with rational coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinComb<K: Ord + Clone> {
    terms: BTreeMap<K, Rational>,
}

impl<K: Ord + Clone> Default for LinComb<K> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<K: Ord + Clone> LinComb<K> {
    pub fn zero() -> Self {
        LinComb { terms: BTreeMap::new() }
    }

    /// A single term `coeff * key`; the zero combination if `coeff` is zero.
    pub fn term(key: K, coeff: Rational) -> Self {
        let mut c = Self::zero();
        c.add_term(key, coeff);
        c
    }

    pub fn basis(key: K) -> Self {
        Self::term(key, Rational::one())
    }

    pub fn from_terms<I: IntoIterator<Item = (K, Rational)>>(terms: I) -> Self {
        let mut c = Self::zero();
        for (k, r) in terms {
            c.add_term(k, r);
        }
        c
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Number of terms in the support.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Coefficient of `key` (zero if absent).
    pub fn coeff(&self, key: &K) -> Rational {
        self.terms.get(key).cloned().unwrap_or_else(Rational::zero)
    }

    /// Iterate terms in key order.
    pub fn iter(&self) -> btree_map::Iter<'_, K, Rational> {
        self.terms.iter()
    }

    /// Support keys in order.
    pub fn keys(&self) -> btree_map::Keys<'_, K, Rational> {
        self.terms.keys()
    }

    /// Smallest support key, if any.
    pub fn leading_key(&self) -> Option<&K> {
        self.terms.keys().next()
    }

    /// Add `coeff * key` in place, dropping the entry if it cancels.
    pub fn add_term(&mut self, key: K, coeff: Rational) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(key) {
            btree_map::Entry::Vacant(e) => {
                e.insert(coeff);
            }
            btree_map::Entry::Occupied(mut e) => {
                let sum = e.get() + coeff;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (k, c) in other.iter() {
            out.add_term(k.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (k, c) in other.iter() {
            out.add_term(k.clone(), -c.clone());
        }
        out
    }

    pub fn neg(&self) -> Self {
        self.scale(&-Rational::one())
    }

    /// Every coefficient multiplied by `c`; empty if `c` is zero.
    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        LinComb {
            terms: self.terms.iter().map(|(k, r)| (k.clone(), r * c)).collect(),
        }
    }

    /// Linear extension of a map defined on basis keys.
    pub fn map_linear<K2: Ord + Clone, F: FnMut(&K) -> LinComb<K2>>(&self, mut f: F) -> LinComb<K2> {
        let mut out = LinComb::zero();
        for (k, c) in self.iter() {
            for (k2, c2) in f(k).iter() {
                out.add_term(k2.clone(), c * c2);
            }
        }
        out
    }

    /// Rewrite each basis key, keeping coefficients.
    pub fn map_keys<K2: Ord + Clone, F: FnMut(&K) -> K2>(&self, mut f: F) -> LinComb<K2> {
        let mut out = LinComb::zero();
        for (k, c) in self.iter() {
            out.add_term(f(k), c.clone());
        }
        out
    }
}

impl<K: Ord + Clone> std::ops::Add for &LinComb<K> {
    type Output = LinComb<K>;
    fn add(self, rhs: Self) -> LinComb<K> {
        LinComb::add(self, rhs)
    }
}

impl<K: Ord + Clone> std::ops::Sub for &LinComb<K> {
    type Output = LinComb<K>;
    fn sub(self, rhs: Self) -> LinComb<K> {
        LinComb::sub(self, rhs)
    }
}

impl<K: Ord + Clone> std::ops::Neg for &LinComb<K> {
    type Output = LinComb<K>;
    fn neg(self) -> LinComb<K> {
        LinComb::neg(self)
    }
}
