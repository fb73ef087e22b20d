//! Laurent polynomials in `q` with integer coefficients.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::Rat;

/// Element of `Z[q, q^-1]`, stored densely from the lowest exponent.
///
/// The representation is canonical: the zero polynomial has no coefficients,
/// and otherwise both the first and last stored coefficients are non-zero.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentQ {
    low: i64,
    coeffs: Vec<i128>,
}

impl LaurentQ {
    /// Builds a Laurent polynomial `Σ coeffs[i] q^(low + i)`.
    pub fn new(low: i64, coeffs: Vec<i128>) -> Self {
        let mut p = LaurentQ { low, coeffs };
        p.normalize();
        p
    }

    /// The monomial `c q^k`.
    pub fn monomial(c: i128, k: i64) -> Self {
        LaurentQ::new(k, vec![c])
    }

    /// The integer constant `c`.
    pub fn constant(c: i128) -> Self {
        LaurentQ::monomial(c, 0)
    }

    /// `q^k`.
    pub fn q_pow(k: i64) -> Self {
        LaurentQ::monomial(1, k)
    }

    /// `q - 1`.
    pub fn qm1() -> Self {
        LaurentQ::new(0, vec![-1, 1])
    }

    /// `q - q^-1`.
    pub fn q_minus_qinv() -> Self {
        LaurentQ::new(-1, vec![-1, 0, 1])
    }

    fn normalize(&mut self) {
        let lead = self.coeffs.iter().position(|c| *c != 0);
        match lead {
            None => {
                self.coeffs.clear();
                self.low = 0;
            }
            Some(i) => {
                if i > 0 {
                    self.coeffs.drain(..i);
                    self.low += i as i64;
                }
                while self.coeffs.last() == Some(&0) {
                    self.coeffs.pop();
                }
            }
        }
    }

    /// Lowest exponent with a non-zero coefficient (0 for the zero polynomial).
    pub fn low(&self) -> i64 {
        self.low
    }

    /// Highest exponent with a non-zero coefficient.
    pub fn high(&self) -> i64 {
        self.low + self.coeffs.len() as i64 - 1
    }

    /// Coefficient of `q^k`.
    pub fn coeff(&self, k: i64) -> i128 {
        let i = k - self.low;
        if i < 0 || i >= self.coeffs.len() as i64 {
            0
        } else {
            self.coeffs[i as usize]
        }
    }

    /// Non-zero `(exponent, coefficient)` pairs in increasing exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i64, i128)> + '_ {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| **c != 0)
            .map(move |(i, c)| (self.low + i as i64, *c))
    }

    /// Value at `q = 1`.
    pub fn eval_q1(&self) -> i128 {
        self.coeffs.iter().sum()
    }

    /// Value at a rational point `q = x` (`x` must be non-zero if negative exponents occur).
    pub fn eval(&self, x: &Rat) -> Rat {
        self.terms().fold(Rat::zero(), |acc, (k, c)| acc + Rat::from_integer(c) * pow_rat(x, k))
    }

    /// Multiplication by `q^k`.
    pub fn shift(&self, k: i64) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        LaurentQ { low: self.low + k, coeffs: self.coeffs.clone() }
    }

    /// Exact division by `q - 1`, if possible.
    pub fn div_qm1(&self) -> Option<Self> {
        if self.is_zero() {
            return Some(self.clone());
        }
        if self.eval_q1() != 0 {
            return None;
        }
        // Synthetic division of q^-low * self by (q - 1), from the top.
        let n = self.coeffs.len();
        let mut out = vec![0i128; n - 1];
        let mut carry = 0i128;
        for i in (1..n).rev() {
            carry += self.coeffs[i];
            out[i - 1] = carry;
        }
        Some(LaurentQ::new(self.low, out))
    }

    /// Largest `v` such that `(q - 1)^v` divides `self` (`None` for zero).
    pub fn qm1_valuation(&self) -> Option<u32> {
        if self.is_zero() {
            return None;
        }
        let mut v = 0;
        let mut cur = self.clone();
        while let Some(next) = cur.div_qm1() {
            cur = next;
            v += 1;
        }
        Some(v)
    }

    /// Substitutes `q -> q^-1`.
    pub fn invert_q(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let mut coeffs = self.coeffs.clone();
        coeffs.reverse();
        LaurentQ::new(-self.high(), coeffs)
    }

    /// Integer power.
    pub fn pow(&self, n: u32) -> Self {
        let mut acc = LaurentQ::one();
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    /// Expansion in powers of `t = q - 1`: coefficients `c_0, c_1, ...` with
    /// `self = Σ c_i t^i`. Negative exponents are expanded with the binomial
    /// series and truncated to `len` terms.
    pub fn t_expansion(&self, len: usize) -> Vec<i128> {
        let mut out = vec![0i128; len];
        for (k, c) in self.terms() {
            for (i, slot) in out.iter_mut().enumerate() {
                *slot += c * binom_int(k as i128, i as u32);
            }
        }
        out
    }
}

/// Generalized binomial coefficient `C(m, i)` for any integer `m`.
pub fn binom_int(m: i128, i: u32) -> i128 {
    let mut num = 1i128;
    let mut den = 1i128;
    for j in 0..i as i128 {
        num *= m - j;
        den *= j + 1;
        let g = num_integer::gcd(num, den);
        if g > 1 {
            num /= g;
            den /= g;
        }
    }
    num / den
}

fn pow_rat(x: &Rat, k: i64) -> Rat {
    if k >= 0 {
        num_traits::pow(*x, k as usize)
    } else {
        num_traits::pow(x.recip(), (-k) as usize)
    }
}

impl Zero for LaurentQ {
    fn zero() -> Self {
        LaurentQ::default()
    }
    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
}

impl One for LaurentQ {
    fn one() -> Self {
        LaurentQ::constant(1)
    }
}

impl Add for &LaurentQ {
    type Output = LaurentQ;
    fn add(self, rhs: &LaurentQ) -> LaurentQ {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        let low = self.low.min(rhs.low);
        let high = self.high().max(rhs.high());
        let coeffs = (low..=high).map(|k| self.coeff(k) + rhs.coeff(k)).collect();
        LaurentQ::new(low, coeffs)
    }
}

impl Sub for &LaurentQ {
    type Output = LaurentQ;
    fn sub(self, rhs: &LaurentQ) -> LaurentQ {
        self + &(-rhs)
    }
}

impl Neg for &LaurentQ {
    type Output = LaurentQ;
    fn neg(self) -> LaurentQ {
        LaurentQ { low: self.low, coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

impl Mul for &LaurentQ {
    type Output = LaurentQ;
    fn mul(self, rhs: &LaurentQ) -> LaurentQ {
        if self.is_zero() || rhs.is_zero() {
            return LaurentQ::zero();
        }
        let mut coeffs = vec![0i128; self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if *a == 0 {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        LaurentQ::new(self.low + rhs.low, coeffs)
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for LaurentQ {
            type Output = LaurentQ;
            fn $m(self, rhs: LaurentQ) -> LaurentQ {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for LaurentQ {
    type Output = LaurentQ;
    fn neg(self) -> LaurentQ {
        -&self
    }
}

impl fmt::Display for LaurentQ {
    /// Sparse text form such as `3*q^-2 - 1 + q^4`, in increasing exponent order.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.terms() {
            let (sign, mag) = if c < 0 { ("-", -c) } else { ("+", c) };
            if first {
                if sign == "-" {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let qpart = match k {
                0 => String::new(),
                1 => "q".to_string(),
                _ => format!("q^{k}"),
            };
            match (mag, qpart.is_empty()) {
                (_, true) => write!(f, "{mag}")?,
                (1, false) => write!(f, "{qpart}")?,
                (_, false) => write!(f, "{mag}*{qpart}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for LaurentQ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lp(low: i64, c: &[i128]) -> LaurentQ {
        LaurentQ::new(low, c.to_vec())
    }

    #[test]
    fn canonical_form() {
        assert_eq!(lp(0, &[0, 0, 1, 0]), LaurentQ::q_pow(2));
        assert!(lp(3, &[0, 0]).is_zero());
        assert_eq!(lp(3, &[0]), LaurentQ::zero());
    }

    #[test]
    fn arithmetic() {
        let q = LaurentQ::q_pow(1);
        let qi = LaurentQ::q_pow(-1);
        assert_eq!(&q * &qi, LaurentQ::one());
        assert_eq!(&q - &qi, LaurentQ::q_minus_qinv());
        assert_eq!(&LaurentQ::qm1() * &(&q + &LaurentQ::one()), lp(0, &[-1, 0, 1]));
    }

    #[test]
    fn division_by_qm1() {
        let x = lp(0, &[-1, 0, 1]);
        assert_eq!(x.div_qm1(), Some(lp(0, &[1, 1])));
        assert_eq!(LaurentQ::q_pow(1).div_qm1(), None);
        let cube = LaurentQ::qm1().pow(3).shift(-2);
        assert_eq!(cube.qm1_valuation(), Some(3));
    }

    #[test]
    fn display() {
        assert_eq!(lp(-2, &[3, 0, -1, 0, 0, 0, 1]).to_string(), "3*q^-2 - 1 + q^4");
        assert_eq!(lp(0, &[-1, 1]).to_string(), "-1 + q");
        assert_eq!(LaurentQ::zero().to_string(), "0");
    }

    #[test]
    fn t_expansion_matches_binomial() {
        // q^-1 = 1 - t + t^2 - ...
        assert_eq!(LaurentQ::q_pow(-1).t_expansion(4), vec![1, -1, 1, -1]);
        // q^2 = 1 + 2t + t^2
        assert_eq!(LaurentQ::q_pow(2).t_expansion(4), vec![1, 2, 1, 0]);
        assert_eq!(binom_int(-2, 3), -4);
    }
}
