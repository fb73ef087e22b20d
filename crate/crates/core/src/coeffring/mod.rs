//! Exact scalar arithmetic.
//!
//! * [`LaurentQ`]: Laurent polynomials in `q` over the integers.
//! * [`LocalLaurent`]: the same ring with `q - 1` inverted; the coefficient
//!   ring of the polynomial presentations, where Cartan elements such as
//!   `(K - 1)/(q - 1)` are expanded in group-like monomials.
//! * [`SeriesH`]: power series in `h` truncated at a fixed order, with
//!   `q = exp(h/2)`; the coefficient ring of the formal presentations.
//! * [`LSeries`]: Laurent series in `h` with tracked precision (pairing values).
//!
//! The [`Scalar`] trait is the interface the rewriting engine is generic over.

mod laurent;
mod local;
mod series;

use std::fmt;

use num_traits::{One, Zero};

pub use laurent::{binom_int, LaurentQ};
pub use local::LocalLaurent;
pub use series::{LSeries, SeriesH};

/// Exact rationals with 128-bit components (overflow is checked).
pub type Rat = num_rational::Ratio<i128>;

/// Parses `"3"`, `"-1/2"` or `"0.25"`-free rational literals.
pub fn parse_rat(text: &str) -> Option<Rat> {
    let t = text.trim();
    match t.split_once('/') {
        Some((n, d)) => {
            let n: i128 = n.trim().parse().ok()?;
            let d: i128 = d.trim().parse().ok()?;
            if d == 0 {
                None
            } else {
                Some(Rat::new(n, d))
            }
        }
        None => t.parse::<i128>().ok().map(Rat::from_integer),
    }
}

/// The q-integer `(n)_q = (q^n - 1)/(q - 1)`, for any integer `n`.
pub fn qint(n: i64) -> LaurentQ {
    (&LaurentQ::q_pow(n) - &LaurentQ::one()).div_qm1().expect("q^n - 1 vanishes at q = 1")
}

/// Quotient by `(q - 1)^n` when it divides `x` exactly.
pub fn divides_qm1(x: &LaurentQ, n: u32) -> Option<LaurentQ> {
    let mut cur = x.clone();
    for _ in 0..n {
        cur = cur.div_qm1()?;
    }
    Some(cur)
}

/// `q = exp(h/2)` as a series truncated at order `n`.
pub fn expand_q(n: usize) -> SeriesH {
    SeriesH::expand_q(n)
}

/// The ring map `Z[q, q^-1] -> Q[[h]]/(h^n)`, `q -> exp(h/2)`.
pub fn expand_laurent(x: &LaurentQ, n: usize) -> SeriesH {
    x.terms().fold(SeriesH::zero(n), |acc, (k, c)| {
        acc.add(&SeriesH::q_pow(n, k).scale(&Rat::from_integer(c)))
    })
}

/// Evaluation at `q = 1`.
pub fn eval_q1(x: &LaurentQ) -> Rat {
    Rat::from_integer(x.eval_q1())
}

/// Coefficient ring interface used by the rewriting engine.
pub trait Scalar: Clone + PartialEq + fmt::Debug + fmt::Display + Send + Sync + 'static {
    /// Run-wide parameters (e.g. the series truncation order).
    type Ctx: Clone + fmt::Debug + PartialEq + Send + Sync;

    fn zero(ctx: &Self::Ctx) -> Self;
    fn from_int(ctx: &Self::Ctx, n: i128) -> Self;
    /// Embeds a rational, when the ring contains it.
    fn from_rat(ctx: &Self::Ctx, r: &Rat) -> Option<Self>;
    /// `q^k`.
    fn q_pow(ctx: &Self::Ctx, k: i64) -> Self;
    /// `h^k`, when `h` is an element of the ring.
    fn h_pow(ctx: &Self::Ctx, k: usize) -> Option<Self>;

    fn add(&self, o: &Self) -> Self;
    fn sub(&self, o: &Self) -> Self;
    fn mul(&self, o: &Self) -> Self;
    fn neg(&self) -> Self;
    fn is_zero(&self) -> bool;

    /// `1/(q - 1)`, when `q - 1` is invertible in the ring.
    fn qm1_inv(ctx: &Self::Ctx) -> Option<Self>;
    /// Multiplicative inverse, when `self` is a unit.
    fn inv(&self) -> Option<Self>;
    /// Embeds a truncated `h`-series, when the ring contains `h`.
    fn from_series(ctx: &Self::Ctx, s: &SeriesH) -> Option<Self>;

    fn one(ctx: &Self::Ctx) -> Self {
        Self::from_int(ctx, 1)
    }
    /// In-place `self += o`.
    fn add_assign(&mut self, o: &Self) {
        *self = self.add(o);
    }
    /// Drops every `h^k` with `k >= keep` (no-op for rings without `h`).
    fn truncate_h(&mut self, _keep: usize) {}
    /// `h`-adic order of the first non-zero coefficient (rings with `h` only).
    fn h_valuation(&self) -> Option<usize> {
        None
    }
}

impl Scalar for LocalLaurent {
    type Ctx = ();

    fn zero(_: &()) -> Self {
        <LocalLaurent as Zero>::zero()
    }
    fn from_int(_: &(), n: i128) -> Self {
        LocalLaurent::from_laurent(LaurentQ::constant(n))
    }
    fn from_rat(_: &(), r: &Rat) -> Option<Self> {
        r.is_integer().then(|| LocalLaurent::from_laurent(LaurentQ::constant(r.to_integer())))
    }
    fn q_pow(_: &(), k: i64) -> Self {
        LocalLaurent::from_laurent(LaurentQ::q_pow(k))
    }
    fn h_pow(_: &(), _k: usize) -> Option<Self> {
        None
    }
    fn qm1_inv(_: &()) -> Option<Self> {
        Some(LocalLaurent::new(LaurentQ::one(), 1))
    }
    fn inv(&self) -> Option<Self> {
        // Units of Z[q, q^-1][1/(q-1)] are ±q^k (q - 1)^j.
        let mut terms = self.num().terms();
        match (terms.next(), terms.next()) {
            (Some((k, c)), None) if c == 1 || c == -1 => {
                Some(LocalLaurent::from_laurent(LaurentQ::monomial(c, -k)).mul_qm1_pow(self.den() as i64))
            }
            _ => None,
        }
    }
    fn from_series(_: &(), _s: &SeriesH) -> Option<Self> {
        None
    }
    fn add(&self, o: &Self) -> Self {
        LocalLaurent::add(self, o)
    }
    fn sub(&self, o: &Self) -> Self {
        LocalLaurent::sub(self, o)
    }
    fn mul(&self, o: &Self) -> Self {
        LocalLaurent::mul(self, o)
    }
    fn neg(&self) -> Self {
        LocalLaurent::neg(self)
    }
    fn is_zero(&self) -> bool {
        LocalLaurent::is_zero(self)
    }
}

impl Scalar for SeriesH {
    type Ctx = usize;

    fn zero(n: &usize) -> Self {
        SeriesH::zero(*n)
    }
    fn from_int(n: &usize, c: i128) -> Self {
        SeriesH::constant(*n, Rat::from_integer(c))
    }
    fn from_rat(n: &usize, r: &Rat) -> Option<Self> {
        Some(SeriesH::constant(*n, *r))
    }
    fn q_pow(n: &usize, k: i64) -> Self {
        SeriesH::q_pow(*n, k)
    }
    fn h_pow(n: &usize, k: usize) -> Option<Self> {
        Some(SeriesH::monomial(*n, Rat::one(), k))
    }
    fn qm1_inv(_: &usize) -> Option<Self> {
        None
    }
    fn inv(&self) -> Option<Self> {
        SeriesH::inv(self)
    }
    fn from_series(n: &usize, s: &SeriesH) -> Option<Self> {
        let mut c = s.coeffs().to_vec();
        c.resize(*n, Rat::zero());
        Some(SeriesH::from_coeffs(*n, c))
    }
    fn add(&self, o: &Self) -> Self {
        SeriesH::add(self, o)
    }
    fn add_assign(&mut self, o: &Self) {
        SeriesH::add_assign(self, o);
    }
    fn sub(&self, o: &Self) -> Self {
        SeriesH::sub(self, o)
    }
    fn mul(&self, o: &Self) -> Self {
        SeriesH::mul(self, o)
    }
    fn neg(&self) -> Self {
        SeriesH::neg(self)
    }
    fn is_zero(&self) -> bool {
        SeriesH::is_zero(self)
    }
    fn truncate_h(&mut self, keep: usize) {
        SeriesH::truncate_to(self, keep)
    }
    fn h_valuation(&self) -> Option<usize> {
        self.valuation()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn qint_values() {
        assert!(qint(0).is_zero());
        assert_eq!(qint(2), LaurentQ::new(0, vec![1, 1]));
        assert_eq!(qint(-1), LaurentQ::monomial(-1, -1));
        assert_eq!(qint(-2), LaurentQ::new(-2, vec![-1, -1]));
    }

    #[test]
    fn divisibility_examples() {
        assert_eq!(divides_qm1(&LaurentQ::new(0, vec![-1, 0, 1]), 1), Some(LaurentQ::new(0, vec![1, 1])));
        assert_eq!(divides_qm1(&LaurentQ::q_pow(1), 1), None);
        let x = &LaurentQ::qm1().pow(3) * &LaurentQ::q_pow(-2);
        assert_eq!(divides_qm1(&x, 3), Some(LaurentQ::q_pow(-2)));
        assert_eq!(divides_qm1(&x, 4), None);
    }

    #[test]
    fn evaluation_maps() {
        assert_eq!(eval_q1(&LaurentQ::new(0, vec![1, 1])), Rat::from_integer(2));
        let s = expand_laurent(&LaurentQ::q_minus_qinv(), 4);
        assert_eq!(s.coeffs(), &[Rat::zero(), Rat::one(), Rat::zero(), Rat::new(1, 24)]);
    }

    #[test]
    fn rational_parsing() {
        assert_eq!(parse_rat("-3/6"), Some(Rat::new(-1, 2)));
        assert_eq!(parse_rat("7"), Some(Rat::from_integer(7)));
        assert_eq!(parse_rat("1/0"), None);
        assert_eq!(parse_rat("x"), None);
    }
}
