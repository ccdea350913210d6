//! Truncated power series in one variable over the rationals.

use num_traits::{One, Zero};

use super::rational::{inv_factorial, Rational};
use crate::error::{AlgebraError, Result};

/// `Σ_{k ≤ cap} c_k x^k`. Coefficients above `cap` are discarded.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UniSeries {
    coeffs: Vec<Rational>,
}

impl UniSeries {
    pub fn zero(cap: usize) -> Self {
        UniSeries { coeffs: vec![Rational::zero(); cap + 1] }
    }

    pub fn one(cap: usize) -> Self {
        let mut s = Self::zero(cap);
        s.coeffs[0] = Rational::one();
        s
    }

    /// The variable `x` itself.
    pub fn x(cap: usize) -> Self {
        let mut s = Self::zero(cap);
        if cap >= 1 {
            s.coeffs[1] = Rational::one();
        }
        s
    }

    /// Builds from coefficients `c_0, c_1, ...`; extra entries are dropped.
    pub fn from_coeffs(cap: usize, coeffs: &[Rational]) -> Self {
        let mut s = Self::zero(cap);
        for (k, c) in coeffs.iter().enumerate().take(cap + 1) {
            s.coeffs[k] = c.clone();
        }
        s
    }

    pub fn cap(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, k: usize) -> Rational {
        self.coeffs.get(k).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn set_coeff(&mut self, k: usize, c: Rational) {
        if k < self.coeffs.len() {
            self.coeffs[k] = c;
        }
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    fn check(&self, other: &Self) -> Result<()> {
        if self.cap() != other.cap() {
            return Err(AlgebraError::CapMismatch { left: self.cap(), right: other.cap() });
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(UniSeries {
            coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect(),
        })
    }

    pub fn scale(&self, c: &Rational) -> Self {
        UniSeries { coeffs: self.coeffs.iter().map(|a| a * c).collect() }
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let n = self.cap();
        let mut out = Self::zero(n);
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate().take(n + 1 - i) {
                if !b.is_zero() {
                    out.coeffs[i + j] += a * b;
                }
            }
        }
        Ok(out)
    }

    /// `Σ_{k ≤ cap} s^k / k!`; requires a zero constant term.
    pub fn exp(&self) -> Result<Self> {
        if !self.coeffs[0].is_zero() {
            return Err(AlgebraError::Domain("exp needs a zero constant term".into()));
        }
        let n = self.cap();
        let mut out = Self::one(n);
        let mut pow = Self::one(n);
        for k in 1..=n {
            pow = pow.mul(self)?;
            out = out.add(&pow.scale(&inv_factorial(k)))?;
        }
        Ok(out)
    }

    /// Multiplicative inverse; requires a nonzero constant term.
    pub fn inv(&self) -> Result<Self> {
        let c0 = &self.coeffs[0];
        if c0.is_zero() {
            return Err(AlgebraError::Domain("inverse needs a nonzero constant term".into()));
        }
        let n = self.cap();
        let inv0 = c0.recip();
        let mut out = Self::zero(n);
        out.coeffs[0] = inv0.clone();
        for k in 1..=n {
            let mut acc = Rational::zero();
            for j in 1..=k {
                acc += &self.coeffs[j] * &out.coeffs[k - j];
            }
            out.coeffs[k] = -acc * &inv0;
        }
        Ok(out)
    }

    /// `log(s) = Σ_{k≥1} (-1)^{k+1} (s-1)^k / k`; requires constant term 1.
    pub fn log(&self) -> Result<Self> {
        if !self.coeffs[0].is_one() {
            return Err(AlgebraError::Domain("log needs constant term 1".into()));
        }
        let n = self.cap();
        let mut u = self.clone();
        u.coeffs[0] = Rational::zero();
        let mut out = Self::zero(n);
        let mut pow = Self::one(n);
        for k in 1..=n {
            pow = pow.mul(&u)?;
            let c = if k % 2 == 1 { Rational::new(1.into(), k.into()) } else { -Rational::new(1.into(), k.into()) };
            out = out.add(&pow.scale(&c))?;
        }
        Ok(out)
    }

    /// Evaluates at an element of any algebra, given its powers on demand.
    ///
    /// `pow(k)` must return the k-th power of the evaluation point.
    pub fn eval_with<T>(&self, mut pow: impl FnMut(usize) -> T, mut acc: impl FnMut(&Rational, T)) {
        for (k, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                acc(c, pow(k));
            }
        }
    }

    /// Text form, lowest degree first.
    pub fn display(&self) -> String {
        let mut parts = Vec::new();
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            parts.push(match k {
                0 => c.to_string(),
                1 => format!("{c}*x"),
                _ => format!("{c}*x^{k}"),
            });
        }
        if parts.is_empty() {
            "0".into()
        } else {
            parts.join(" + ")
        }
    }
}

impl Default for UniSeries {
    fn default() -> Self {
        Self::one(0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::foundations::rational::{q, qf};

    #[test]
    fn exp_of_mixed_polynomial() {
        let s = UniSeries::from_coeffs(4, &[q(0), q(0), q(1), q(-1)]);
        let e = s.exp().unwrap();
        assert_eq!(e, UniSeries::from_coeffs(4, &[q(1), q(0), q(1), q(-1), qf(1, 2)]));
    }

    #[test]
    fn inverse_solves_degree_by_degree() {
        let s = UniSeries::from_coeffs(2, &[q(1), qf(1, 2), q(1)]);
        assert_eq!(s.inv().unwrap(), UniSeries::from_coeffs(2, &[q(1), qf(-1, 2), qf(-3, 4)]));
    }

    #[test]
    fn log_of_one_plus_x() {
        let s = UniSeries::from_coeffs(3, &[q(1), q(1)]);
        assert_eq!(s.log().unwrap(), UniSeries::from_coeffs(3, &[q(0), q(1), qf(-1, 2), qf(1, 3)]));
    }

    #[test]
    fn domain_errors() {
        assert!(UniSeries::one(3).exp().is_err());
        assert!(UniSeries::x(3).inv().is_err());
        assert!(UniSeries::x(3).log().is_err());
        assert!(UniSeries::one(2).mul(&UniSeries::one(3)).is_err());
    }
}
