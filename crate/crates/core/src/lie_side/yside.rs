//! Infinitesimal actions on the quotient module in the `Y` representation,
//! the `γ`-correction, and the Lie membership conditions for the double
//! shuffle algebra and the stabilizer of the harmonic coproduct.

use num_traits::Zero;

use crate::error::{AlgebraError, Result};
use crate::foundations::rational::{format_rational, q, sign, Rational};
use crate::foundations::UniSeries;
use crate::racinet_group::{
    basis_images, first_tensor_term, uni_at_x1, x0_run_x1, y_basis,
};
use crate::verdict::Verdict;
use crate::word_algebras::{
    delta_star_mod, encode_word, pi_y, q_y, q_y_inv_word, word_degree, x_is_primitive, y_inject,
    y_word_to_x, Series, Tensor, XLetter, XSeries, XWord, YLetter, YSeries, YWord,
};

use super::lie::{d_letter_images, tensor_derivation};

pub(crate) fn require_primitive(psi: &XSeries) -> Result<()> {
    if !x_is_primitive(psi) {
        return Err(AlgebraError::Domain("the Lie-side operations need a primitive series".into()));
    }
    Ok(())
}

/// `γ_ψ(x) = Σ_{n≥1} ((-1)^{n+1}/n) (ψ | x0^{n-1} x1) x^n`.
pub fn gamma_lower(psi: &XSeries) -> UniSeries {
    let cap = psi.cap();
    let mut s = UniSeries::zero(cap);
    for n in 1..=cap {
        let c = psi.coeff(&x0_run_x1(n));
        if !c.is_zero() {
            s.set_coeff(n, sign(n + 1) * c / q(n as i64));
        }
    }
    s
}

/// `γ_ψ(x1)` as an `X` series.
pub fn gamma_lower_x1(psi: &XSeries) -> XSeries {
    uni_at_x1(&gamma_lower(psi), psi.group(), psi.cap())
}

/// Precomputed `s_ψ`, `s^Y_ψ` and `^γs^Y_ψ` for repeated application.
pub struct SY {
    psi: XSeries,
    d_images: Vec<XSeries>,
    gamma_x1: XSeries,
}

impl SY {
    pub fn new(psi: &XSeries) -> Self {
        SY { psi: psi.clone(), d_images: d_letter_images(psi), gamma_x1: gamma_lower_x1(psi) }
    }

    /// `s_ψ` on one `X` word.
    pub fn s_word(&self, w: &[XLetter]) -> XSeries {
        let group = self.psi.group();
        let cap = self.psi.cap();
        let word = XSeries::monomial(group, cap, XWord::from_slice(w), Rational::from_integer(1.into()));
        let mut out = &self.psi * &word;
        for i in 0..w.len() {
            let img = &self.d_images[w[i].0 as usize];
            if img.is_zero() {
                continue;
            }
            let left = XSeries::monomial(group, cap, XWord::from_slice(&w[..i]), Rational::from_integer(1.into()));
            let right =
                XSeries::monomial(group, cap, XWord::from_slice(&w[i + 1..]), Rational::from_integer(1.into()));
            out = &out + &(&(&left * img) * &right);
        }
        out
    }

    /// `s^Y_ψ` on one `Y` word: `q_Y π_Y s_ψ y_inject q_Y^{-1}`.
    pub fn s_y_word(&self, w: &[YLetter]) -> YSeries {
        let lifted = y_word_to_x(&q_y_inv_word(self.psi.group(), w));
        q_y(&pi_y(&self.s_word(&lifted)))
    }

    /// `^γs^Y_ψ = ℓ_{γ_ψ(x1)} + s^Y_ψ` on one `Y` word.
    pub fn gamma_s_y_word(&self, w: &[YLetter]) -> YSeries {
        let single = YSeries::monomial(self.psi.group(), self.psi.cap(), YWord::from_slice(w), Rational::from_integer(1.into()));
        let left = pi_y(&(&self.gamma_x1 * &y_inject(&single)));
        &self.s_y_word(w) + &left
    }
}

/// `s^Y_ψ(m)`.
pub fn s_y_psi(psi: &XSeries, m: &YSeries) -> Result<YSeries> {
    crate::word_algebras::series::check_compat(psi.group(), psi.cap(), m.group(), m.cap())?;
    let op = SY::new(psi);
    Ok(m.map_linear(m.cap(), |w| op.s_y_word(w)))
}

/// `^γs^Y_ψ(m)`.
pub fn gamma_s_y_lie(psi: &XSeries, m: &YSeries) -> Result<YSeries> {
    crate::word_algebras::series::check_compat(psi.group(), psi.cap(), m.group(), m.cap())?;
    let op = SY::new(psi);
    Ok(m.map_linear(m.cap(), |w| op.gamma_s_y_word(w)))
}

/// `θ(ψ) = γ_ψ(x1) + ψ - (ψ|x0) x0`.
pub fn theta_lie(psi: &XSeries) -> XSeries {
    let c = psi.coeff(&[XLetter::X0]);
    let x0 = XSeries::monomial(psi.group(), psi.cap(), smallvec::smallvec![XLetter::X0], c);
    &(&gamma_lower_x1(psi) + psi) - &x0
}

/// `ψ★ = q_Y π_Y(γ_ψ(x1) + ψ)`, the first-order part of `Ψ★`.
pub fn psi_star_lie(psi: &XSeries) -> YSeries {
    q_y(&pi_y(&(psi + &gamma_lower_x1(psi))))
}

/// Membership in the double shuffle Lie algebra `dmr0` for cyclic `G`.
///
/// Condition (iii) is checked in its reduced form: at `(n, g) = (2, 1)` when
/// `|G| = 2`, at `n = 1` for every `g` when `|G| ≥ 3`, and for every `n`
/// up to the cap when `G` is trivial.
pub fn dmr0_lie_membership(psi: &XSeries) -> Result<Verdict> {
    let group = psi.group().clone();
    if !group.is_cyclic() {
        return Err(AlgebraError::Unsupported(format!(
            "double shuffle conditions need a cyclic group, got {group}"
        )));
    }
    require_primitive(psi)?;
    let mut v = Verdict::new("dmr0");
    let c0 = psi.coeff(&[XLetter::X0]);
    let c1 = psi.coeff(&[XLetter::X1]);
    v.record("(i) (ψ|x0) = (ψ|x1) = 0", c0.is_zero() && c1.is_zero(), || {
        if !c0.is_zero() {
            format!("(ψ|x0) = {}", format_rational(&c0))
        } else {
            format!("(ψ|x1) = {}", format_rational(&c1))
        }
    });
    let star = psi_star_lie(psi);
    let one = YSeries::one(&group, psi.cap());
    let rhs = &Tensor::from_pair(&star, &one)? + &Tensor::from_pair(&one, &star)?;
    let diff = &delta_star_mod(&star) - &rhs;
    v.record("(ii) Δ★mod(ψ★) = ψ★⊗1 + 1⊗ψ★", diff.is_zero(), || first_tensor_term(&diff));
    let pairs: Vec<(usize, usize)> = match group.order() {
        1 => (1..=psi.cap()).map(|n| (n, 0)).collect(),
        2 => if psi.cap() >= 2 { vec![(2, 0)] } else { vec![] },
        k => (0..k).map(|g| (1, g)).collect(),
    };
    let mut bad = None;
    for (n, g) in pairs {
        let gi = group.inv_idx(g);
        let a = star.coeff(&[YLetter::new(n, g)]);
        let b = sign(n - 1) * star.coeff(&[YLetter::new(n, gi)]);
        if a != b {
            bad = Some(format!(
                "(ψ★|{}) = {} but (-1)^{}(ψ★|{}) = {}",
                encode_word(&[YLetter::new(n, g)], &group),
                format_rational(&a),
                n - 1,
                encode_word(&[YLetter::new(n, gi)], &group),
                format_rational(&b)
            ));
            break;
        }
    }
    v.record("(iii) (ψ★|y_{n,g}) = (-1)^{n-1}(ψ★|y_{n,g^-1})", bad.is_none(), || bad.unwrap_or_default());
    Ok(v)
}

/// Membership in the stabilizer Lie algebra of the harmonic coproduct on the
/// quotient, checked on every `Y` word up to the cap.
pub fn stab_mod_lie_membership(psi: &XSeries) -> Result<Verdict> {
    require_primitive(psi)?;
    let group = psi.group().clone();
    let cap = psi.cap();
    let basis = y_basis(&group, cap);
    let op = SY::new(psi);
    let images = basis_images(&basis, |w| op.gamma_s_y_word(w));
    let mut v = Verdict::new("stab(Δ★mod)");
    let fail = check_derivation_commutation(&basis, &images, delta_star_mod);
    v.record("(^γs^Y⊗id + id⊗^γs^Y)∘Δ★mod = Δ★mod∘^γs^Y on all Y-words", fail.is_none(), || {
        let (w, d) = fail.unwrap();
        format!("basis word {} (degree {}): {}", encode_word(&w, &group), word_degree(&w), first_tensor_term(&d))
    });
    Ok(v)
}

/// Checks `(D⊗id + id⊗D)∘Δ = Δ∘D` on every basis word, given all images of
/// `D`. Returns the first failing word and the difference.
pub fn check_derivation_commutation<L: crate::word_algebras::Letter>(
    basis: &[crate::word_algebras::Word<L>],
    images: &std::collections::HashMap<crate::word_algebras::Word<L>, Series<L>>,
    coproduct: impl Fn(&Series<L>) -> Tensor<L> + Sync,
) -> Option<(crate::word_algebras::Word<L>, Tensor<L>)> {
    use rayon::prelude::*;
    let group = images.values().next()?.group().clone();
    let cap = images.values().next()?.cap();
    let failures: Vec<(usize, Tensor<L>)> = basis
        .par_iter()
        .enumerate()
        .filter_map(|(i, w)| {
            let single = Series::monomial(&group, cap, w.clone(), Rational::from_integer(1.into()));
            let lhs = tensor_derivation(&coproduct(&single), |u| images[u].clone());
            let rhs = coproduct(&images[w]);
            let d = &lhs - &rhs;
            (!d.is_zero()).then_some((i, d))
        })
        .collect();
    failures.into_iter().min_by_key(|(i, _)| *i).map(|(i, d)| (basis[i].clone(), d))
}

