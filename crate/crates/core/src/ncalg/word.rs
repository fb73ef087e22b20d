//! Letters, words and raw generator words.
//!
//! Internally every Cartan element is expanded over the grid cells: a
//! [`CMono`] is either a vector of group-like exponents (`Π_c K_c^{m_c}`, the
//! exponential model) or a vector of degrees (`Π_c Ξ_c^{e_c}`, the polynomial
//! model).  A normal word has the shape `X+ … X+ · C · X- … X-`.

use std::fmt;

use crate::quiver::{IvId, MAX_CELLS};

/// Cartan monomial over the grid cells.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct CMono(pub [i16; MAX_CELLS]);

impl CMono {
    /// The identity monomial.
    pub const ONE: CMono = CMono([0; MAX_CELLS]);

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|e| *e == 0)
    }

    /// Exponent-wise sum (the product of two monomials).
    pub fn plus(&self, o: &CMono) -> CMono {
        let mut out = self.0;
        for (x, y) in out.iter_mut().zip(o.0.iter()) {
            *x += *y;
        }
        CMono(out)
    }

    /// Exponent-wise negation (the inverse group-like).
    pub fn negated(&self) -> CMono {
        let mut out = self.0;
        for x in out.iter_mut() {
            *x = -*x;
        }
        CMono(out)
    }

    /// `m` on every cell of `range`, zero elsewhere.
    pub fn on_cells(range: std::ops::Range<usize>, m: i16) -> CMono {
        let mut out = [0; MAX_CELLS];
        for c in range {
            out[c] = m;
        }
        CMono(out)
    }

    /// Total degree `Σ_c e_c`.
    pub fn degree(&self) -> i64 {
        self.0.iter().map(|e| *e as i64).sum()
    }

    /// `Σ_c e_c v_c`.
    pub fn dot(&self, v: &[i64]) -> i64 {
        self.0.iter().zip(v).map(|(e, x)| *e as i64 * x).sum()
    }
}

impl fmt::Debug for CMono {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

/// A letter of a word: `X+_α`, a Cartan monomial, or `X-_α`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub enum Letter {
    P(IvId),
    C(CMono),
    M(IvId),
}

impl Letter {
    pub fn is_x(&self) -> bool {
        !matches!(self, Letter::C(_))
    }
}

/// A word: a product of letters (empty word = unit).
pub type Word = Vec<Letter>;

/// Generators as they appear in user input and in the display basis.
///
/// Composite intervals are allowed here; they are expanded over cells when a
/// raw expression is evaluated in an algebra.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub enum Gen {
    /// `X+_α` (also `x+_α` in the classical presentation).
    Xp(IvId),
    /// `X-_α`.
    Xm(IvId),
    /// `H_α` (polynomial presentations).
    H(IvId),
    /// `K_α`.
    K(IvId),
    /// `K_α^{-1}`.
    Kinv(IvId),
    /// `Ξ_α` (formal presentations; `ξ_α` in the classical one).
    Xi(IvId),
}

impl Gen {
    pub fn interval(&self) -> IvId {
        match *self {
            Gen::Xp(a) | Gen::Xm(a) | Gen::H(a) | Gen::K(a) | Gen::Kinv(a) | Gen::Xi(a) => a,
        }
    }
}

/// A raw word over [`Gen`].
pub type RawWord = Vec<Gen>;
