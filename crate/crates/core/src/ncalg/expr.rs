//! Finitely supported linear combinations with exact scalar coefficients.

use std::collections::btree_map::{self, BTreeMap};

use super::word::{RawWord, Word};
use crate::coeffring::Scalar;

/// Linear combination `Σ c_k · k` with no stored zero coefficients.
#[derive(Clone, PartialEq, Debug)]
pub struct Lin<K: Ord, S> {
    terms: BTreeMap<K, S>,
}

/// Element of a presented algebra: words over [`Letter`](super::Letter)s.
pub type Expr<S> = Lin<Word, S>;
/// Free-algebra expression over raw generators.
pub type RawExpr<S> = Lin<RawWord, S>;
/// Element of an n-fold tensor power: tuples of words.
pub type TExpr<S> = Lin<Vec<Word>, S>;

impl<K: Ord, S> Default for Lin<K, S> {
    fn default() -> Self {
        Lin { terms: BTreeMap::new() }
    }
}

impl<K: Ord + Clone, S: Scalar> Lin<K, S> {
    pub fn new() -> Self {
        Self::default()
    }

    /// The single term `c · k` (empty when `c = 0`).
    pub fn single(k: K, c: S) -> Self {
        let mut out = Self::new();
        out.add_term(k, c);
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Number of non-zero terms.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in canonical key order.
    pub fn iter(&self) -> btree_map::Iter<'_, K, S> {
        self.terms.iter()
    }

    /// Coefficient of a key, if non-zero.
    pub fn get(&self, k: &K) -> Option<&S> {
        self.terms.get(k)
    }

    /// Adds `c · k`, dropping the entry when it cancels.
    pub fn add_term(&mut self, k: K, c: S) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(k) {
            btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            btree_map::Entry::Occupied(mut o) => {
                o.get_mut().add_assign(&c);
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    /// Adds `c · other`.
    pub fn add_scaled(&mut self, other: &Self, c: &S) {
        for (k, v) in other.iter() {
            self.add_term(k.clone(), v.mul(c));
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (k, v) in other.iter() {
            out.add_term(k.clone(), v.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (k, v) in other.iter() {
            out.add_term(k.clone(), v.neg());
        }
        out
    }

    pub fn neg(&self) -> Self {
        Lin { terms: self.terms.iter().map(|(k, v)| (k.clone(), v.neg())).collect() }
    }

    pub fn scale(&self, c: &S) -> Self {
        let mut out = Self::new();
        out.add_scaled(self, c);
        out
    }

    /// Applies `f` to every coefficient, dropping the terms that vanish.
    pub fn map_coeffs(&self, mut f: impl FnMut(&K, &S) -> Option<S>) -> Self {
        let mut out = Self::new();
        for (k, v) in self.iter() {
            if let Some(c) = f(k, v) {
                out.add_term(k.clone(), c);
            }
        }
        out
    }

    /// Consumes the combination into its terms.
    pub fn into_terms(self) -> impl Iterator<Item = (K, S)> {
        self.terms.into_iter()
    }
}

impl<K: Ord + Clone, S: Scalar> FromIterator<(K, S)> for Lin<K, S> {
    fn from_iter<I: IntoIterator<Item = (K, S)>>(iter: I) -> Self {
        let mut out = Self::new();
        for (k, c) in iter {
            out.add_term(k, c);
        }
        out
    }
}
