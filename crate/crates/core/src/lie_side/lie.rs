//! The Lie algebra of primitive series with the bracket
//! `⟨ψ1, ψ2⟩ = s_{ψ1}(ψ2) - s_{ψ2}(ψ1)`, and its exponential onto the
//! `⊛` group.

use num_traits::Zero;

use crate::error::{AlgebraError, Result};
use crate::foundations::rational::{q, Rational};
use crate::racinet_group::circledast;
use crate::word_algebras::series::check_compat;
use crate::word_algebras::{
    t_action, x_is_grouplike, x_is_primitive, Letter, Series, Tensor, Word, XLetter, XSeries,
};

/// A series that is primitive for the unshuffle coproduct up to its cap.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LieElem(XSeries);

impl LieElem {
    /// Validates primitivity.
    pub fn new(s: XSeries) -> Result<Self> {
        if !x_is_primitive(&s) {
            return Err(AlgebraError::Domain("series is not primitive".into()));
        }
        Ok(LieElem(s))
    }

    /// Wraps a series known to be primitive (e.g. a bracket expansion).
    pub fn new_unchecked(s: XSeries) -> Self {
        LieElem(s)
    }

    pub fn series(&self) -> &XSeries {
        &self.0
    }

    pub fn into_series(self) -> XSeries {
        self.0
    }
}

/// Applies the derivation determined by letter images.
pub fn apply_derivation<L: Letter>(a: &Series<L>, image: impl Fn(L) -> Series<L>) -> Series<L> {
    let group = a.group().clone();
    let cap = a.cap();
    let mut memo = std::collections::HashMap::new();
    let mut out = Series::zero(&group, cap);
    for (w, c) in a.terms() {
        for i in 0..w.len() {
            let img = memo.entry(w[i]).or_insert_with(|| image(w[i])).clone();
            if img.is_zero() {
                continue;
            }
            let left = Series::monomial(&group, cap, Word::from_slice(&w[..i]), c.clone());
            let right = Series::monomial(&group, cap, Word::from_slice(&w[i + 1..]), num_traits::One::one());
            out.add_scaled(&(&(&left * &img) * &right), &num_traits::One::one()).expect("same cap");
        }
    }
    out
}

/// `(D ⊗ id + id ⊗ D)(t)` for a linear map `D` given on words.
pub fn tensor_derivation<L: Letter>(t: &Tensor<L>, d: impl Fn(&Word<L>) -> Series<L>) -> Tensor<L> {
    let group = t.group().clone();
    let cap = t.cap();
    let one = |w: &Word<L>| Series::monomial(&group, cap, w.clone(), num_traits::One::one());
    &t.map_each(&d, one) + &t.map_each(one, &d)
}

/// Commutator `ab - ba` in the series algebra.
pub fn commutator<L: Letter>(a: &Series<L>, b: &Series<L>) -> Series<L> {
    &(a * b) - &(b * a)
}

/// `d_ψ`: the derivation with `x0 ↦ 0` and `x_g ↦ [x_g, t_g(ψ)]`.
pub fn d_psi(psi: &XSeries, a: &XSeries) -> Result<XSeries> {
    check_compat(psi.group(), psi.cap(), a.group(), a.cap())?;
    let images = d_letter_images(psi);
    Ok(apply_derivation(a, |l| images[l.0 as usize].clone()))
}

/// Letter images of `d_ψ`, indexed like the letters.
pub fn d_letter_images(psi: &XSeries) -> Vec<XSeries> {
    let group = psi.group();
    let cap = psi.cap();
    let mut out = vec![XSeries::zero(group, cap)];
    for g in 0..group.order() {
        let xg = XSeries::letter(group, cap, XLetter::g(g));
        out.push(commutator(&xg, &t_action(g, psi)));
    }
    out
}

/// `s_ψ = ℓ_ψ + d_ψ`.
pub fn s_psi(psi: &XSeries, a: &XSeries) -> Result<XSeries> {
    Ok(&(psi * a) + &d_psi(psi, a)?)
}

/// `⟨ψ1, ψ2⟩ = s_{ψ1}(ψ2) - s_{ψ2}(ψ1)`.
pub fn lie_bracket(a: &LieElem, b: &LieElem) -> Result<LieElem> {
    let out = &s_psi(a.series(), b.series())? - &s_psi(b.series(), a.series())?;
    if !x_is_primitive(&out) {
        return Err(AlgebraError::Internal("bracket of primitives is not primitive".into()));
    }
    Ok(LieElem(out))
}

/// `exp_⊛(ψ) = Σ_k s_ψ^k(1) / k!`.
pub fn exp_circledast(psi: &LieElem) -> Result<XSeries> {
    let p = psi.series();
    if !p.constant().is_zero() {
        return Err(AlgebraError::Domain("exp_⊛ needs a zero constant term".into()));
    }
    let mut term = XSeries::one(p.group(), p.cap());
    let mut sum = term.clone();
    for k in 1..=p.cap() {
        term = s_psi(p, &term)?.scale(&(Rational::from_integer(1.into()) / q(k as i64)));
        if term.is_zero() {
            break;
        }
        sum = &sum + &term;
    }
    Ok(sum)
}

/// Inverse of [`exp_circledast`], solved degree by degree: the degree-`d`
/// part of `a - exp_⊛(ψ)` is added to `ψ`, since `exp_⊛(ψ) = 1 + ψ` plus
/// products of lower-degree parts.
pub fn log_circledast(a: &XSeries) -> Result<LieElem> {
    if !x_is_grouplike(a) {
        return Err(AlgebraError::Domain("log_⊛ needs a grouplike series".into()));
    }
    let mut psi = XSeries::zero(a.group(), a.cap());
    for d in 1..=a.cap() {
        let r = a - &exp_circledast(&LieElem(psi.clone()))?;
        psi = &psi + &r.degree_part(d);
    }
    Ok(LieElem(psi))
}

/// `cbh(ψ, φ) = log_⊛(exp_⊛(ψ) ⊛ exp_⊛(φ))`.
pub fn cbh_bracket(psi: &LieElem, phi: &LieElem) -> Result<LieElem> {
    log_circledast(&circledast(&exp_circledast(psi)?, &exp_circledast(phi)?)?)
}
