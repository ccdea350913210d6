//! Arbitrary-precision rationals.
//!
//! `BigRational` keeps numerator and denominator reduced with a positive
//! denominator, so structural equality is value equality.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{AlgebraError, Result};

pub type Rational = num_rational::BigRational;

/// Integer as a rational.
pub fn q(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// `num / den` as a rational. Panics on a zero denominator.
pub fn qf(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// `1 / n!`.
pub fn inv_factorial(n: usize) -> Rational {
    let mut f = BigInt::one();
    for k in 2..=n {
        f *= BigInt::from(k);
    }
    Rational::new(BigInt::one(), f)
}

/// Parses `a`, `-a` or `a/b` exactly.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let t = s.trim();
    let bad = |m: &str| AlgebraError::Parse {
        position: format!("coefficient `{t}`"),
        message: m.to_string(),
    };
    let (n, d) = match t.split_once('/') {
        Some((n, d)) => (n, d),
        None => (t, "1"),
    };
    let n: BigInt = n.trim().parse().map_err(|_| bad("bad numerator"))?;
    let d: BigInt = d.trim().parse().map_err(|_| bad("bad denominator"))?;
    if d.is_zero() {
        return Err(bad("zero denominator"));
    }
    Ok(Rational::new(n, d))
}

/// Canonical text form: `n` for integers, otherwise `n/d`.
pub fn format_rational(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// `(-1)^k` as a rational.
pub fn sign(k: usize) -> Rational {
    if k % 2 == 0 {
        q(1)
    } else {
        q(-1)
    }
}
