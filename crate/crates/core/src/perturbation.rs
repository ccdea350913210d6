//! First-order parts of one-parameter families, computed exactly.
//!
//! Along `Ψ_t = exp_⊛(tψ)` every truncated quantity is a polynomial in `t` of
//! degree at most the cap, since `tψ` has no constant term. Its derivative at
//! `t = 0` is read off from Lagrange interpolation at `t = 0, 1, ..., d`, and
//! one extra sample at `t = d + 1` certifies the degree bound.

use num_traits::{One, Zero};

use crate::crossed_product::{MElem, VElem};
use crate::error::{AlgebraError, Result};
use crate::foundations::rational::{q, Rational};
use crate::lie_side::{exp_circledast, LieElem};
use crate::word_algebras::{Letter, Series, XSeries};

/// Values that can be combined linearly.
pub trait Linear: Clone + PartialEq {
    fn lin_add(&self, other: &Self) -> Self;
    fn lin_scale(&self, c: &Rational) -> Self;
}

impl<L: Letter> Linear for Series<L> {
    fn lin_add(&self, other: &Self) -> Self {
        self + other
    }
    fn lin_scale(&self, c: &Rational) -> Self {
        self.scale(c)
    }
}

impl Linear for VElem {
    fn lin_add(&self, other: &Self) -> Self {
        self + other
    }
    fn lin_scale(&self, c: &Rational) -> Self {
        self.scale(c)
    }
}

impl Linear for MElem {
    fn lin_add(&self, other: &Self) -> Self {
        MElem(&self.0 + &other.0)
    }
    fn lin_scale(&self, c: &Rational) -> Self {
        MElem(self.0.scale(c))
    }
}

/// Lagrange basis weights `L_i(t)` for nodes `0..=d` evaluated at `t`.
fn lagrange_weights(d: usize, t: &Rational) -> Vec<Rational> {
    (0..=d)
        .map(|i| {
            let mut w = Rational::one();
            for j in 0..=d {
                if j != i {
                    w = w * (t - q(j as i64)) / (q(i as i64) - q(j as i64));
                }
            }
            w
        })
        .collect()
}

/// Derivatives `L_i'(0)` of the Lagrange basis for nodes `0..=d`.
fn lagrange_derivative_at_zero(d: usize) -> Vec<Rational> {
    (0..=d)
        .map(|i| {
            let mut total = Rational::zero();
            for k in 0..=d {
                if k == i {
                    continue;
                }
                // Product rule: differentiate the factor (t - k), evaluate the rest at 0.
                let mut term = Rational::one() / (q(i as i64) - q(k as i64));
                for j in 0..=d {
                    if j != i && j != k {
                        term = term * (-q(j as i64)) / (q(i as i64) - q(j as i64));
                    }
                }
                total += term;
            }
            total
        })
        .collect()
}

/// `d/dt f(t)` at `t = 0` for a polynomial family of degree at most `d`.
/// Errors if the sample at `t = d + 1` contradicts the degree bound.
pub fn derivative_at_zero<T: Linear>(d: usize, f: impl Fn(&Rational) -> Result<T>) -> Result<T> {
    let samples: Vec<T> = (0..=d).map(|i| f(&q(i as i64))).collect::<Result<_>>()?;
    let check_t = q(d as i64 + 1);
    let predicted = combine(&samples, &lagrange_weights(d, &check_t));
    if predicted != f(&check_t)? {
        return Err(AlgebraError::Internal(format!("family is not polynomial of degree ≤ {d}")));
    }
    Ok(combine(&samples, &lagrange_derivative_at_zero(d)))
}

fn combine<T: Linear>(samples: &[T], weights: &[Rational]) -> T {
    let mut acc = samples[0].lin_scale(&weights[0]);
    for (s, w) in samples.iter().zip(weights).skip(1) {
        acc = acc.lin_add(&s.lin_scale(w));
    }
    acc
}

/// `Ψ_t = exp_⊛(tψ)`.
pub fn exp_path(psi: &XSeries, t: &Rational) -> Result<XSeries> {
    exp_circledast(&LieElem::new_unchecked(psi.scale(t)))
}

/// First-order part of `t ↦ F(exp_⊛(tψ))` for a group-level map `F`.
pub fn infinitesimal<T: Linear>(psi: &XSeries, f: impl Fn(&XSeries) -> Result<T>) -> Result<T> {
    derivative_at_zero(psi.cap(), |t| f(&exp_path(psi, t)?))
}
