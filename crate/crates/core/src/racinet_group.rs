//! Group-level formalism on the `X` series algebra: the twisted automorphism
//! `aut_Ψ`, the law `Ψ ⊛ Φ = Ψ · aut_Ψ(Φ)`, its induced action on the
//! quotient module in the `Y` representation, the `Γ`-correction, and
//! membership in the double shuffle group and in the stabilizer of the
//! harmonic coproduct.

use std::collections::HashMap;

use num_traits::{One, Zero};
use rayon::prelude::*;

use crate::error::{AlgebraError, Result};
use crate::foundations::rational::{format_rational, q, sign, Rational};
use crate::foundations::{GroupSpec, UniSeries};
use crate::verdict::Verdict;
use crate::word_algebras::{
    delta_star_mod, encode_word, pi_y, q_y, q_y_inv, t_action, word_degree, words_up_to,
    x_is_grouplike, y_inject, y_letters, Series, Tensor, XLetter, XSeries, XWord, YSeries, YWord,
};

/// Letter images of `aut_Ψ`: `x0 ↦ x0`, `x_g ↦ t_g(Ψ^{-1}) x_g t_g(Ψ)`.
pub fn aut_letter_images(psi: &XSeries) -> Result<Vec<XSeries>> {
    let group = psi.group();
    let cap = psi.cap();
    let inv = psi.inverse()?;
    let mut images = vec![XSeries::letter(group, cap, XLetter::X0)];
    for g in 0..group.order() {
        let xg = XSeries::letter(group, cap, XLetter::g(g));
        images.push(&(&t_action(g, &inv) * &xg) * &t_action(g, psi));
    }
    Ok(images)
}

fn check_pair(a: &XSeries, b: &XSeries) -> Result<()> {
    crate::word_algebras::series::check_compat(a.group(), a.cap(), b.group(), b.cap())
}

/// The algebra automorphism `aut_Ψ`, applied to `a`.
pub fn aut_psi(psi: &XSeries, a: &XSeries) -> Result<XSeries> {
    check_pair(psi, a)?;
    let images = aut_letter_images(psi)?;
    Ok(a.substitute(a.cap(), |l| images[l.0 as usize].clone()))
}

/// `S_Ψ(a) = Ψ · aut_Ψ(a)`.
pub fn s_big(psi: &XSeries, a: &XSeries) -> Result<XSeries> {
    Ok(psi * &aut_psi(psi, a)?)
}

/// `Ψ ⊛ Φ = S_Ψ(Φ)`.
pub fn circledast(psi: &XSeries, phi: &XSeries) -> Result<XSeries> {
    s_big(psi, phi)
}

fn require_grouplike(psi: &XSeries, what: &str) -> Result<()> {
    if !x_is_grouplike(psi) {
        return Err(AlgebraError::Domain(format!("{what} requires a grouplike series")));
    }
    Ok(())
}

/// The `⊛`-inverse, solved degree by degree.
///
/// If `S_Ψ(Φ) = 1` below degree `d`, subtracting the degree-`d` part `R_d`
/// of `S_Ψ(Φ) - 1` from `Φ` clears degree `d`, since `S_Ψ(R_d) = R_d` plus
/// higher-degree terms.
pub fn circledast_inverse(psi: &XSeries) -> Result<XSeries> {
    require_grouplike(psi, "the ⊛-inverse")?;
    let one = XSeries::one(psi.group(), psi.cap());
    let mut phi = one.clone();
    for d in 1..=psi.cap() {
        let r = &s_big(psi, &phi)? - &one;
        phi = &phi - &r.degree_part(d);
    }
    Ok(phi)
}

/// Induced action on the quotient module in the `Y` representation:
/// `m ↦ q_Y(π_Y(S_Ψ(y_inject(q_Y^{-1}(m)))))`.
pub fn s_y(psi: &XSeries, m: &YSeries) -> Result<YSeries> {
    crate::word_algebras::series::check_compat(psi.group(), psi.cap(), m.group(), m.cap())?;
    Ok(q_y(&pi_y(&s_big(psi, &y_inject(&q_y_inv(m)))?)))
}

/// `Γ_Ψ(x) = exp(Σ_{n≥2} ((-1)^{n-1}/n) (Ψ | x0^{n-1} x1) x^n)`.
pub fn gamma_of(psi: &XSeries) -> UniSeries {
    let cap = psi.cap();
    let mut s = UniSeries::zero(cap);
    for n in 2..=cap {
        let c = psi.coeff(&x0_run_x1(n));
        if !c.is_zero() {
            s.set_coeff(n, sign(n - 1) * c / q(n as i64));
        }
    }
    s.exp().expect("zero constant term")
}

/// The word `x0^{n-1} x1`.
pub fn x0_run_x1(n: usize) -> XWord {
    let mut w: XWord = std::iter::repeat(XLetter::X0).take(n - 1).collect();
    w.push(XLetter::X1);
    w
}

/// `f(x1) = Σ c_k x1^k` as an `X` series.
pub fn uni_at_x1(f: &UniSeries, group: &GroupSpec, cap: usize) -> XSeries {
    let mut out = XSeries::zero(group, cap);
    for (k, c) in f.coeffs().iter().enumerate() {
        let w: XWord = std::iter::repeat(XLetter::X1).take(k).collect();
        out.add_term(w, c.clone());
    }
    out
}

/// `Γ_Ψ(x1)`.
pub fn gamma_x1(psi: &XSeries) -> XSeries {
    uni_at_x1(&gamma_of(psi), psi.group(), psi.cap())
}

/// `Γ_Ψ^{-1}(x1)`.
pub fn gamma_inv_x1(psi: &XSeries) -> XSeries {
    let g = gamma_of(psi).inv().expect("constant term 1");
    uni_at_x1(&g, psi.group(), psi.cap())
}

/// The correction factor `C_Ψ = Γ_Ψ(x1)` multiplied on the left in `Ψ★`,
/// `^ΓS^Y_Ψ` and `Θ`. With the positive harmonic coproduct this is the
/// factor that makes `DMR₀` land in the stabilizer; its inverse does not.
pub fn correction_x1(psi: &XSeries) -> XSeries {
    gamma_x1(psi)
}

/// `Γ`-corrected action: `m ↦ π_Y(C_Ψ · S^Y_Ψ(m))`, the product
/// taken on the `X`-side representative. Left multiplication by a series
/// in `x1` commutes with `q`.
pub fn gamma_s_y(psi: &XSeries, m: &YSeries) -> Result<YSeries> {
    let inner = s_y(psi, m)?;
    Ok(pi_y(&(&correction_x1(psi) * &y_inject(&inner))))
}

/// `Θ(Ψ) = C_Ψ · Ψ · exp(-(Ψ|x0) x0)`.
pub fn theta_of(psi: &XSeries) -> XSeries {
    let c = psi.coeff(&[XLetter::X0]);
    let e = XSeries::monomial(psi.group(), psi.cap(), smallvec::smallvec![XLetter::X0], -c)
        .exp()
        .expect("zero constant term");
    &(&correction_x1(psi) * psi) * &e
}

/// `Ψ★ = q_Y(π_Y(C_Ψ Ψ))`.
pub fn psi_star(psi: &XSeries) -> YSeries {
    q_y(&pi_y(&(&correction_x1(psi) * psi)))
}

/// All `Y` words of degree at most `cap`, canonical order.
pub fn y_basis(group: &GroupSpec, cap: usize) -> Vec<YWord> {
    words_up_to(&y_letters(group, cap), cap)
}

/// Membership in the double shuffle group at `λ = 0`, for cyclic `G`.
pub fn dmr0_membership(psi: &XSeries) -> Result<Verdict> {
    let group = psi.group().clone();
    if !group.is_cyclic() {
        return Err(AlgebraError::Unsupported(format!(
            "double shuffle conditions need a cyclic group, got {group}"
        )));
    }
    let mut v = Verdict::new("DMR0");
    v.record("grouplike for the unshuffle coproduct", x_is_grouplike(psi), || {
        "Δ(Ψ) ≠ Ψ⊗Ψ".into()
    });
    let c0 = psi.coeff(&[XLetter::X0]);
    let c1 = psi.coeff(&[XLetter::X1]);
    v.record("(i) (Ψ|x0) = (Ψ|x1) = 0", c0.is_zero() && c1.is_zero(), || {
        if !c0.is_zero() {
            format!("(Ψ|x0) = {}", format_rational(&c0))
        } else {
            format!("(Ψ|x1) = {}", format_rational(&c1))
        }
    });
    let star = psi_star(psi);
    let lhs = delta_star_mod(&star);
    let rhs = Tensor::from_pair(&star, &star)?;
    let diff = &lhs - &rhs;
    v.record("(ii) Δ★mod(Ψ★) = Ψ★⊗Ψ★", diff.is_zero(), || first_tensor_term(&diff));
    if group.order() <= 2 {
        let w: XWord = smallvec::smallvec![XLetter::X0, XLetter::X1];
        let c = psi.coeff(&w);
        v.record("(iii) (Ψ|x0 x1) = 0", c.is_zero(), || format!("(Ψ|x0*x1) = {}", format_rational(&c)));
    } else {
        let mut bad = None;
        for g in 0..group.order() {
            let gi = group.inv_idx(g);
            let a = psi.coeff(&[XLetter::g(g)]);
            let b = psi.coeff(&[XLetter::g(gi)]);
            if a != b {
                bad = Some(format!(
                    "(Ψ|{}) = {} but (Ψ|{}) = {}",
                    encode_word(&[XLetter::g(g)], &group),
                    format_rational(&a),
                    encode_word(&[XLetter::g(gi)], &group),
                    format_rational(&b)
                ));
                break;
            }
        }
        v.record("(iv) (Ψ|x_g) = (Ψ|x_{g^-1})", bad.is_none(), || bad.unwrap_or_default());
    }
    Ok(v)
}

/// First term of a nonzero tensor difference, for witnesses.
pub fn first_tensor_term<L: crate::word_algebras::Letter>(t: &Tensor<L>) -> String {
    match t.sorted_terms().first() {
        None => "no difference".into(),
        Some(((u, w), c)) => format!(
            "degree {}: coefficient of {} ⊗ {} differs by {}",
            word_degree(u) + word_degree(w),
            encode_word(u, t.group()),
            encode_word(w, t.group()),
            format_rational(c)
        ),
    }
}

/// Images of every basis word under a linear map, computed in parallel.
pub fn basis_images<L, M, F>(basis: &[crate::word_algebras::Word<L>], f: F) -> HashMap<crate::word_algebras::Word<L>, Series<M>>
where
    L: crate::word_algebras::Letter,
    M: crate::word_algebras::Letter,
    F: Fn(&crate::word_algebras::Word<L>) -> Series<M> + Sync,
{
    basis.par_iter().map(|w| (w.clone(), f(w))).collect()
}

/// Checks `(A ⊗ A) ∘ Δ = Δ ∘ A` on every basis word, given all images of `A`
/// and the coproduct. Returns the first failing word and the difference.
pub fn check_coproduct_commutation<L: crate::word_algebras::Letter>(
    basis: &[crate::word_algebras::Word<L>],
    images: &HashMap<crate::word_algebras::Word<L>, Series<L>>,
    coproduct: impl Fn(&Series<L>) -> Tensor<L> + Sync,
    unit: &Series<L>,
) -> Option<(crate::word_algebras::Word<L>, Tensor<L>)> {
    let group = unit.group().clone();
    let cap = unit.cap();
    let failures: Vec<(usize, Tensor<L>)> = basis
        .par_iter()
        .enumerate()
        .filter_map(|(i, w)| {
            let single = Series::monomial(&group, cap, w.clone(), Rational::one());
            let lhs = coproduct(&single).map_each(|u| images[u].clone(), |v| images[v].clone());
            let rhs = coproduct(&images[w]);
            let d = &lhs - &rhs;
            if d.is_zero() {
                None
            } else {
                Some((i, d))
            }
        })
        .collect();
    failures.into_iter().min_by_key(|(i, _)| *i).map(|(i, d)| (basis[i].clone(), d))
}

/// Membership in the stabilizer of the harmonic coproduct on the quotient:
/// `(^ΓS^Y_Ψ)^{⊗2} ∘ Δ★mod = Δ★mod ∘ ^ΓS^Y_Ψ`, checked on every `Y` word up to
/// the cap (the maps are module maps only, so generators do not suffice).
pub fn stab_mod_membership(psi: &XSeries) -> Result<Verdict> {
    require_grouplike(psi, "stabilizer membership")?;
    let group = psi.group().clone();
    let cap = psi.cap();
    let basis = y_basis(&group, cap);
    let op = GammaSY::new(psi)?;
    let images = basis_images(&basis, |w| op.apply_word(w));
    let unit = YSeries::one(&group, cap);
    let mut v = Verdict::new("Stab(Δ★mod)");
    let fail = check_coproduct_commutation(&basis, &images, delta_star_mod, &unit);
    v.record("(^ΓS^Y ⊗ ^ΓS^Y)∘Δ★mod = Δ★mod∘^ΓS^Y on all Y-words", fail.is_none(), || {
        let (w, d) = fail.unwrap();
        format!(
            "basis word {} (degree {}): {}",
            encode_word(&w, &group),
            word_degree(&w),
            first_tensor_term(&d)
        )
    });
    Ok(v)
}

/// Precomputed `^ΓS^Y_Ψ` for repeated application.
pub struct GammaSY {
    psi: XSeries,
    images: Vec<XSeries>,
    correction: XSeries,
}

impl GammaSY {
    pub fn new(psi: &XSeries) -> Result<Self> {
        Ok(GammaSY { psi: psi.clone(), images: aut_letter_images(psi)?, correction: correction_x1(psi) })
    }

    /// `S^Y_Ψ` on one `Y` word.
    pub fn s_y_word(&self, w: &[crate::word_algebras::YLetter]) -> YSeries {
        let group = self.psi.group();
        let lifted = crate::word_algebras::y_word_to_x(&crate::word_algebras::q_y_inv_word(group, w));
        let mut acc = self.psi.clone();
        for l in lifted {
            acc = &acc * &self.images[l.0 as usize];
        }
        q_y(&pi_y(&acc))
    }

    /// `^ΓS^Y_Ψ` on one `Y` word.
    pub fn apply_word(&self, w: &[crate::word_algebras::YLetter]) -> YSeries {
        pi_y(&(&self.correction * &y_inject(&self.s_y_word(w))))
    }

    /// `^ΓS^Y_Ψ` on a series.
    pub fn apply(&self, m: &YSeries) -> YSeries {
        m.map_linear(m.cap(), |w| self.apply_word(w))
    }
}
