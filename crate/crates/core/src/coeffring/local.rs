//! Laurent polynomials with `(q - 1)` inverted: the ring `Z[q, q^-1][1/(q-1)]`.

use std::fmt;

use num_traits::{One, Zero};

use super::laurent::LaurentQ;

/// Element `num / (q - 1)^den` of `Z[q, q^-1][1/(q-1)]`.
///
/// Canonical form: `den == 0`, or `num` is not divisible by `q - 1`.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct LocalLaurent {
    num: LaurentQ,
    den: u32,
}

impl LocalLaurent {
    /// Builds and normalizes `num / (q - 1)^den`.
    pub fn new(num: LaurentQ, den: u32) -> Self {
        let mut x = LocalLaurent { num, den };
        x.normalize();
        x
    }

    /// Embeds a Laurent polynomial.
    pub fn from_laurent(num: LaurentQ) -> Self {
        LocalLaurent { num, den: 0 }
    }

    fn normalize(&mut self) {
        if self.num.is_zero() {
            self.den = 0;
            return;
        }
        while self.den > 0 {
            match self.num.div_qm1() {
                Some(n) => {
                    self.num = n;
                    self.den -= 1;
                }
                None => break,
            }
        }
    }

    /// Numerator in canonical form.
    pub fn num(&self) -> &LaurentQ {
        &self.num
    }

    /// Power of `(q - 1)` in the canonical denominator.
    pub fn den(&self) -> u32 {
        self.den
    }

    /// The Laurent polynomial itself, when the element is integral.
    pub fn as_laurent(&self) -> Option<&LaurentQ> {
        (self.den == 0).then_some(&self.num)
    }

    /// `(q - 1)`-adic valuation (`None` for zero); may be negative.
    pub fn valuation(&self) -> Option<i64> {
        self.num.qm1_valuation().map(|v| v as i64 - self.den as i64)
    }

    /// Multiplication by `(q - 1)^k` for any integer `k`.
    pub fn mul_qm1_pow(&self, k: i64) -> Self {
        if k >= 0 {
            LocalLaurent::new(&self.num * &LaurentQ::qm1().pow(k as u32), self.den)
        } else {
            LocalLaurent::new(self.num.clone(), self.den + (-k) as u32)
        }
    }

    /// Expansion `Σ_{i < len} c_i t^(i + shift)` in `t = q - 1`, returned as
    /// `(shift, [c_0, ..])` with `shift = -den`.
    pub fn t_expansion(&self, len: usize) -> (i64, Vec<i128>) {
        (-(self.den as i64), self.num.t_expansion(len))
    }

    pub fn add(&self, o: &Self) -> Self {
        let d = self.den.max(o.den);
        let a = &self.num * &LaurentQ::qm1().pow(d - self.den);
        let b = &o.num * &LaurentQ::qm1().pow(d - o.den);
        LocalLaurent::new(&a + &b, d)
    }

    pub fn neg(&self) -> Self {
        LocalLaurent { num: -&self.num, den: self.den }
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    pub fn mul(&self, o: &Self) -> Self {
        LocalLaurent::new(&self.num * &o.num, self.den + o.den)
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// Value at `q = 1`, when finite.
    pub fn eval_q1(&self) -> Option<i128> {
        if self.den == 0 {
            Some(self.num.eval_q1())
        } else {
            None
        }
    }
}

impl Zero for LocalLaurent {
    fn zero() -> Self {
        LocalLaurent::default()
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
}

impl std::ops::Add for LocalLaurent {
    type Output = LocalLaurent;
    fn add(self, o: LocalLaurent) -> LocalLaurent {
        LocalLaurent::add(&self, &o)
    }
}

impl One for LocalLaurent {
    fn one() -> Self {
        LocalLaurent::from_laurent(LaurentQ::one())
    }
}

impl std::ops::Mul for LocalLaurent {
    type Output = LocalLaurent;
    fn mul(self, o: LocalLaurent) -> LocalLaurent {
        LocalLaurent::mul(&self, &o)
    }
}

impl fmt::Display for LocalLaurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.den {
            0 => write!(f, "{}", self.num),
            d if self.num.terms().count() > 1 => write!(f, "({})*(q - 1)^-{}", self.num, d),
            d => write!(f, "{}*(q - 1)^-{}", self.num, d),
        }
    }
}

impl fmt::Debug for LocalLaurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn normalization_cancels_common_factors() {
        let x = LocalLaurent::new(LaurentQ::new(0, vec![-1, 0, 1]), 1);
        assert_eq!(x, LocalLaurent::from_laurent(LaurentQ::new(0, vec![1, 1])));
        let y = LocalLaurent::new(LaurentQ::q_pow(1), 2);
        assert_eq!(y.den(), 2);
        assert_eq!(y.valuation(), Some(-2));
    }

    #[test]
    fn field_like_operations() {
        let inv_t = LocalLaurent::new(LaurentQ::one(), 1);
        let t = LocalLaurent::from_laurent(LaurentQ::qm1());
        assert_eq!(inv_t.mul(&t), LocalLaurent::one());
        let s = inv_t.add(&LocalLaurent::one());
        assert_eq!(s.to_string(), "q*(q - 1)^-1");
        assert_eq!(s.sub(&inv_t), LocalLaurent::one());
    }
}
