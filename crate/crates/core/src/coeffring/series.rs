//! Truncated power series and Laurent series in `h` with rational coefficients.

use std::fmt;

use num_traits::{One, Signed, Zero};

use super::Rat;

/// Power series `c_0 + c_1 h + ... + c_{N-1} h^{N-1} + O(h^N)`.
///
/// All values taking part in one computation share the same order `N`;
/// binary operations on series of different orders panic.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SeriesH {
    coeffs: Vec<Rat>,
}

impl SeriesH {
    /// The zero series of order `n`.
    pub fn zero(n: usize) -> Self {
        SeriesH { coeffs: vec![Rat::zero(); n] }
    }

    /// The constant `c` at order `n`.
    pub fn constant(n: usize, c: Rat) -> Self {
        let mut s = SeriesH::zero(n);
        if n > 0 {
            s.coeffs[0] = c;
        }
        s
    }

    /// The series with the given leading coefficients (padded or truncated to `n`).
    pub fn from_coeffs(n: usize, mut coeffs: Vec<Rat>) -> Self {
        coeffs.resize(n, Rat::zero());
        SeriesH { coeffs }
    }

    /// `c h^k` at order `n`.
    pub fn monomial(n: usize, c: Rat, k: usize) -> Self {
        let mut s = SeriesH::zero(n);
        if k < n {
            s.coeffs[k] = c;
        }
        s
    }

    /// Truncation order `N`.
    pub fn order(&self) -> usize {
        self.coeffs.len()
    }

    /// Coefficients `c_0 .. c_{N-1}`.
    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    /// Coefficient of `h^k` (zero beyond the order).
    pub fn coeff(&self, k: usize) -> Rat {
        self.coeffs.get(k).cloned().unwrap_or_else(Rat::zero)
    }

    /// `exp(a h)` to order `n`.
    pub fn exp_linear(n: usize, a: Rat) -> Self {
        let mut coeffs = Vec::with_capacity(n);
        let mut term = Rat::one();
        for k in 0..n {
            coeffs.push(term);
            term = term * a / Rat::from_integer(k as i128 + 1);
        }
        SeriesH { coeffs }
    }

    /// `q^k = exp(k h / 2)` to order `n`.
    pub fn q_pow(n: usize, k: i64) -> Self {
        SeriesH::exp_linear(n, Rat::new(k as i128, 2))
    }

    /// `q = exp(h/2)` to order `n`.
    pub fn expand_q(n: usize) -> Self {
        SeriesH::q_pow(n, 1)
    }

    /// `h`-adic valuation (`None` for zero).
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    fn check(&self, o: &Self) {
        assert_eq!(self.order(), o.order(), "mixing series truncation orders");
    }

    pub fn add(&self, o: &Self) -> Self {
        self.check(o);
        SeriesH { coeffs: self.coeffs.iter().zip(&o.coeffs).map(|(a, b)| a + b).collect() }
    }

    /// In-place `self += o`.
    pub fn add_assign(&mut self, o: &Self) {
        self.check(o);
        for (a, b) in self.coeffs.iter_mut().zip(&o.coeffs) {
            if !b.is_zero() {
                *a += b;
            }
        }
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.check(o);
        SeriesH { coeffs: self.coeffs.iter().zip(&o.coeffs).map(|(a, b)| a - b).collect() }
    }

    pub fn neg(&self) -> Self {
        SeriesH { coeffs: self.coeffs.iter().map(|a| -a).collect() }
    }

    pub fn mul(&self, o: &Self) -> Self {
        self.check(o);
        let n = self.order();
        let mut out = vec![Rat::zero(); n];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.coeffs[..n - i].iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] += a * b;
                }
            }
        }
        SeriesH { coeffs: out }
    }

    /// Multiplication by a rational scalar.
    pub fn scale(&self, c: &Rat) -> Self {
        SeriesH { coeffs: self.coeffs.iter().map(|a| a * c).collect() }
    }

    /// Multiplication by `h^k`.
    pub fn shift(&self, k: usize) -> Self {
        let n = self.order();
        let mut out = vec![Rat::zero(); n];
        if k < n {
            out[k..].copy_from_slice(&self.coeffs[..n - k]);
        }
        SeriesH { coeffs: out }
    }

    /// Exact division by `h^k`; the top `k` coefficients become unknown and are
    /// returned as zero, so callers must account for the loss of precision.
    pub fn unshift(&self, k: usize) -> Option<Self> {
        if self.coeffs.iter().take(k).any(|c| !c.is_zero()) {
            return None;
        }
        let n = self.order();
        let mut out = vec![Rat::zero(); n];
        if k < n {
            out[..n - k].copy_from_slice(&self.coeffs[k..]);
        }
        Some(SeriesH { coeffs: out })
    }

    /// Multiplicative inverse, defined exactly for series with `c_0 != 0`.
    pub fn inv(&self) -> Option<Self> {
        let n = self.order();
        if n == 0 {
            return Some(self.clone());
        }
        let c0 = self.coeffs[0];
        if c0.is_zero() {
            return None;
        }
        let mut out = vec![Rat::zero(); n];
        out[0] = c0.recip();
        for k in 1..n {
            let mut s = Rat::zero();
            for j in 1..=k {
                s += self.coeffs[j] * out[k - j];
            }
            out[k] = -s / c0;
        }
        Some(SeriesH { coeffs: out })
    }

    /// Sets every coefficient of degree `>= keep` to zero.
    pub fn truncate_to(&mut self, keep: usize) {
        for c in self.coeffs.iter_mut().skip(keep) {
            *c = Rat::zero();
        }
    }
}

impl fmt::Display for SeriesH {
    /// Text form such as `1 + 1/2*h + O(h^3)`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        // Modulo h the ring is just the rationals.
        if self.order() == 1 {
            return write!(f, "{}", self.coeffs[0]);
        }
        let mut parts: Vec<String> = Vec::new();
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            let body = match (k, mag.is_one()) {
                (0, _) => mag.to_string(),
                (_, true) => hpow(k),
                (_, false) => format!("{}*{}", mag, hpow(k)),
            };
            let sign = if c.is_negative() { "-" } else { "+" };
            if parts.is_empty() {
                parts.push(if sign == "-" { format!("-{body}") } else { body });
            } else {
                parts.push(format!("{sign} {body}"));
            }
        }
        parts.push(format!("O({})", hpow(self.order())));
        if parts.len() > 1 {
            let first = parts.remove(0);
            write!(f, "{first}")?;
            for p in parts {
                if p.starts_with('O') {
                    write!(f, " + {p}")?;
                } else {
                    write!(f, " {p}")?;
                }
            }
            Ok(())
        } else {
            write!(f, "{}", parts[0])
        }
    }
}

fn hpow(k: usize) -> String {
    if k == 1 {
        "h".to_string()
    } else {
        format!("h^{k}")
    }
}

impl fmt::Debug for SeriesH {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Laurent series in `h` with tracked absolute precision:
/// `Σ_{i} c_i h^(low + i) + O(h^prec)`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LSeries {
    low: i64,
    coeffs: Vec<Rat>,
}

impl LSeries {
    /// Known coefficients from `h^low` up to (excluding) `h^prec`.
    pub fn new(low: i64, prec: i64, mut coeffs: Vec<Rat>) -> Self {
        let len = (prec - low).max(0) as usize;
        coeffs.resize(len, Rat::zero());
        LSeries { low, coeffs }
    }

    /// Zero with absolute precision `prec`.
    pub fn zero(prec: i64) -> Self {
        LSeries { low: prec, coeffs: Vec::new() }
    }

    /// Converts a power series, multiplied by `h^shift`.
    pub fn from_series(s: &SeriesH, shift: i64) -> Self {
        LSeries { low: shift, coeffs: s.coeffs().to_vec() }
    }

    /// Absolute precision: every coefficient below `h^prec` is exact.
    pub fn prec(&self) -> i64 {
        self.low + self.coeffs.len() as i64
    }

    /// Coefficient of `h^k` (only meaningful for `k < prec`).
    pub fn coeff(&self, k: i64) -> Rat {
        if k < self.low || k >= self.prec() {
            Rat::zero()
        } else {
            self.coeffs[(k - self.low) as usize]
        }
    }

    /// Valuation: lowest known non-zero exponent, or `None` if zero to precision.
    pub fn valuation(&self) -> Option<i64> {
        self.coeffs.iter().position(|c| !c.is_zero()).map(|i| self.low + i as i64)
    }

    fn trimmed(mut self) -> Self {
        while let Some(c) = self.coeffs.first() {
            if !c.is_zero() {
                break;
            }
            self.coeffs.remove(0);
            self.low += 1;
        }
        self
    }

    pub fn add(&self, o: &Self) -> Self {
        let prec = self.prec().min(o.prec());
        let low = self.low.min(o.low).min(prec);
        let coeffs = (low..prec).map(|k| self.coeff(k) + o.coeff(k)).collect();
        LSeries::new(low, prec, coeffs).trimmed()
    }

    pub fn neg(&self) -> Self {
        LSeries { low: self.low, coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    pub fn mul(&self, o: &Self) -> Self {
        let a = self.clone().trimmed();
        let b = o.clone().trimmed();
        let va = a.valuation().unwrap_or(a.prec());
        let vb = b.valuation().unwrap_or(b.prec());
        let prec = (va + b.prec()).min(vb + a.prec());
        let low = (a.low + b.low).min(prec);
        let mut coeffs = vec![Rat::zero(); (prec - low).max(0) as usize];
        for (i, x) in a.coeffs.iter().enumerate() {
            for (j, y) in b.coeffs.iter().enumerate() {
                let k = a.low + i as i64 + b.low + j as i64;
                if k < prec {
                    coeffs[(k - low) as usize] += x * y;
                }
            }
        }
        LSeries::new(low, prec, coeffs).trimmed()
    }

    /// Multiplication by a rational scalar.
    pub fn scale(&self, c: &Rat) -> Self {
        LSeries { low: self.low, coeffs: self.coeffs.iter().map(|x| x * c).collect() }.trimmed()
    }

    /// Forgets every coefficient at or above `h^prec`.
    pub fn truncate_abs(&self, prec: i64) -> Self {
        let prec = prec.min(self.prec());
        let coeffs = (self.low.min(prec)..prec).map(|k| self.coeff(k)).collect();
        LSeries::new(self.low.min(prec), prec, coeffs)
    }

    /// Equality of the known coefficients up to the smaller precision.
    pub fn agrees_with(&self, o: &Self) -> bool {
        let prec = self.prec().min(o.prec());
        let low = self.low.min(o.low);
        (low..prec).all(|k| self.coeff(k) == o.coeff(k))
    }
}

impl fmt::Display for LSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut out = String::new();
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let k = self.low + i as i64;
            let sign = if c.is_negative() { "-" } else { "+" };
            let mag = c.abs();
            let hp = match k {
                0 => String::new(),
                1 => "h".to_string(),
                _ => format!("h^{k}"),
            };
            let body = match (hp.is_empty(), mag.is_one()) {
                (true, _) => mag.to_string(),
                (false, true) => hp,
                (false, false) => format!("{mag}*{hp}"),
            };
            if out.is_empty() {
                if sign == "-" {
                    out.push('-');
                }
                out.push_str(&body);
            } else {
                out.push_str(&format!(" {sign} {body}"));
            }
        }
        let tail = match self.prec() {
            1 => "O(h)".to_string(),
            p => format!("O(h^{p})"),
        };
        if out.is_empty() {
            write!(f, "{tail}")
        } else {
            write!(f, "{out} + {tail}")
        }
    }
}

impl fmt::Debug for LSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(a: i128, b: i128) -> Rat {
        Rat::new(a, b)
    }

    #[test]
    fn expand_q_to_order_three() {
        let q = SeriesH::expand_q(3);
        assert_eq!(q.coeffs(), &[r(1, 1), r(1, 2), r(1, 8)]);
        assert_eq!(q.to_string(), "1 + 1/2*h + 1/8*h^2 + O(h^3)");
    }

    #[test]
    fn q_minus_qinv_has_valuation_one() {
        let d = SeriesH::q_pow(4, 1).sub(&SeriesH::q_pow(4, -1));
        assert_eq!(d.coeffs(), &[r(0, 1), r(1, 1), r(0, 1), r(1, 24)]);
        assert_eq!(d.valuation(), Some(1));
    }

    #[test]
    fn inverse_of_unit() {
        let q = SeriesH::expand_q(6);
        assert_eq!(q.mul(&q.inv().unwrap()), SeriesH::constant(6, r(1, 1)));
        assert_eq!(q.inv().unwrap(), SeriesH::q_pow(6, -1));
        assert!(SeriesH::monomial(6, r(1, 1), 1).inv().is_none());
    }

    #[test]
    fn laurent_precision_tracking() {
        let inv_h = LSeries::new(-1, 3, vec![r(1, 1)]);
        let h = LSeries::from_series(&SeriesH::monomial(4, r(1, 1), 1), 0);
        let prod = inv_h.mul(&h);
        assert_eq!(prod.coeff(0), r(1, 1));
        assert_eq!(prod.prec(), -1 + 4);
        assert_eq!(LSeries::zero(2).to_string(), "O(h^2)");
    }
}
