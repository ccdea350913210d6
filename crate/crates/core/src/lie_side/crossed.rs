//! Infinitesimal actions on the crossed product, on `W`, on `M` and on the
//! `Y` algebra, and the stabilizer Lie algebras of their coproducts.

use std::collections::HashMap;

use num_traits::One;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::crossed_product::{
    delta_m, delta_w, delta_w_generator, m_project, v_to_w, varpi, varpi_inv, w_to_v, z11_pow,
    MElem, VElem, WElem,
};
use crate::error::Result;
use crate::foundations::rational::Rational;
use crate::foundations::{GroupSpec, UniSeries};
use crate::racinet_group::{basis_images, first_tensor_term};
use crate::verdict::Verdict;
use crate::word_algebras::{
    encode_word, harmonic_generator_image, q_y, t_action, word_degree, words_up_to, x0_pow,
    x_word_to_y, y_harmonic_coproduct, y_letters, z_letters, Letter, Series, Tensor, Word,
    XLetter, XSeries, YLetter, YSeries, ZLetter,
};

use super::lie::{apply_derivation, d_letter_images, tensor_derivation};
use super::yside::{check_derivation_commutation, gamma_lower, gamma_lower_x1, require_primitive};

fn uni_at_z11(f: &UniSeries, group: &GroupSpec, cap: usize) -> WElem {
    let mut out = WElem::zero(group, cap);
    for (k, c) in f.coeffs().iter().enumerate() {
        out.add_scaled(&z11_pow(group, cap, k), c).expect("same cap");
    }
    out
}

/// Everything derived from `ψ` that the crossed-product derivations reuse.
#[derive(Debug, Clone)]
pub struct CrossedDerivation {
    psi: XSeries,
    d_images: Vec<XSeries>,
    beta: VElem,
    gamma_z: WElem,
    gamma_e1: VElem,
}

impl CrossedDerivation {
    pub fn new(psi: &XSeries) -> Self {
        let gamma_z = uni_at_z11(&gamma_lower(psi), psi.group(), psi.cap());
        CrossedDerivation {
            psi: psi.clone(),
            d_images: d_letter_images(psi),
            beta: VElem::from_x(psi),
            gamma_e1: w_to_v(&gamma_z),
            gamma_z,
        }
    }

    /// `γ_ψ(-e1) = γ_ψ(z_{1,1})` inside `W`.
    pub fn gamma_z11(&self) -> &WElem {
        &self.gamma_z
    }

    /// `der^{V,(0)}_ψ`: `d_ψ` on each component; kills `e0` and every `g`.
    pub fn der_v0(&self, a: &VElem) -> VElem {
        a.map_comps(|c| apply_derivation(c, |l| self.d_images[l.0 as usize].clone()))
    }

    /// `der^{V,(1)}_ψ = ad_{β(ψ⊗1)} + der^{V,(0)}_ψ`.
    pub fn der_v1(&self, a: &VElem) -> VElem {
        &(&(&self.beta * a) - &(a * &self.beta)) + &self.der_v0(a)
    }

    /// `end^{V,(10)}_ψ = ℓ_{β(ψ⊗1)} + der^{V,(0)}_ψ`.
    pub fn end_v10(&self, a: &VElem) -> VElem {
        &(&self.beta * a) + &self.der_v0(a)
    }

    /// `end^{M,(10)}_ψ`: lift to `V`, apply `end^{V,(10)}_ψ`, project.
    pub fn end_m10(&self, m: &MElem) -> MElem {
        m_project(&self.end_v10(&w_to_v(&m.0)))
    }

    /// `ℓ_{γ_ψ(-e1)} + end^{M,(10)}_ψ`.
    pub fn gamma_end_m10(&self, m: &MElem) -> MElem {
        MElem(&self.end_m10(m).0 + &(&self.gamma_z * &m.0))
    }

    /// `ad_{γ_ψ(-e1)} + der^{V,(1)}_ψ`.
    pub fn gamma_der_v1(&self, a: &VElem) -> VElem {
        let ad = &(&self.gamma_e1 * a) - &(a * &self.gamma_e1);
        &self.der_v1(a) + &ad
    }

    /// Restriction of [`Self::gamma_der_v1`] to `W`.
    pub fn gamma_der_w1(&self, w: &WElem) -> Result<WElem> {
        v_to_w(&self.gamma_der_v1(&w_to_v(w)))
    }

    /// Route A: `ϖ^{-1} ∘ ^γder^{W,(1)}_ψ ∘ ϖ`.
    pub fn gamma_d_y_conjugated(&self, y: &YSeries) -> Result<YSeries> {
        Ok(varpi_inv(&self.gamma_der_w1(&varpi(y))?))
    }

    /// Route B, generator image:
    /// `q_Y((ψ x0^{n-1} - x0^{n-1} t_g(ψ)) x_g) + q_Y((γ_ψ(x1) x0^{n-1} - x0^{n-1} γ_ψ(x_g)) x_g)`.
    pub fn gamma_d_y_generator(&self, y: YLetter) -> YSeries {
        let group = self.psi.group();
        let cap = self.psi.cap();
        let (n, g) = (y.n as usize, y.g as usize);
        let x0n = x0_pow(group, cap, n - 1);
        let xg = XSeries::letter(group, cap, XLetter::g(g));
        let gamma_x1 = gamma_lower_x1(&self.psi);
        let first = &(&self.psi * &x0n) - &(&x0n * &t_action(g, &self.psi));
        let second = &(&gamma_x1 * &x0n) - &(&x0n * &t_action(g, &gamma_x1));
        let total = &(&first + &second) * &xg;
        let mut out = YSeries::zero(group, cap);
        for (w, c) in total.terms() {
            out.add_term(x_word_to_y(w).expect("every word ends in x_g"), c.clone());
        }
        q_y(&out)
    }

    /// Route B: the explicit generator formula extended by Leibniz.
    pub fn gamma_d_y_explicit(&self, y: &YSeries) -> YSeries {
        let images: HashMap<YLetter, YSeries> =
            y_letters(y.group(), y.cap()).into_iter().map(|l| (l, self.gamma_d_y_generator(l))).collect();
        apply_derivation(y, |l| images[&l].clone())
    }
}

/// `der^{V,(0)}_ψ(a)`.
pub fn der_v0(psi: &XSeries, a: &VElem) -> VElem {
    CrossedDerivation::new(psi).der_v0(a)
}

/// `der^{V,(1)}_ψ(a)`.
pub fn der_v1(psi: &XSeries, a: &VElem) -> VElem {
    CrossedDerivation::new(psi).der_v1(a)
}

/// `end^{V,(10)}_ψ(a)`.
pub fn end_v10(psi: &XSeries, a: &VElem) -> VElem {
    CrossedDerivation::new(psi).end_v10(a)
}

/// `end^{M,(10)}_ψ(m)`.
pub fn end_m10(psi: &XSeries, m: &MElem) -> MElem {
    CrossedDerivation::new(psi).end_m10(m)
}

/// `^γend^{M,(10)}_ψ(m)`.
pub fn gamma_end_m10(psi: &XSeries, m: &MElem) -> MElem {
    CrossedDerivation::new(psi).gamma_end_m10(m)
}

/// `^γder^{V,(1)}_ψ(a)`.
pub fn gamma_der_v1(psi: &XSeries, a: &VElem) -> VElem {
    CrossedDerivation::new(psi).gamma_der_v1(a)
}

/// `^γder^{W,(1)}_ψ(w)`.
pub fn gamma_der_w1(psi: &XSeries, w: &WElem) -> Result<WElem> {
    CrossedDerivation::new(psi).gamma_der_w1(w)
}

/// `^γd^Y_ψ(y)` by the explicit formula.
pub fn gamma_d_y(psi: &XSeries, y: &YSeries) -> YSeries {
    CrossedDerivation::new(psi).gamma_d_y_explicit(y)
}

/// Checks `(D⊗id + id⊗D)(Δ(l)) = Δ(D(l))` on letters for a derivation `D`.
fn check_derivation_on_generators<L: Letter>(
    letters: &[L],
    images: &HashMap<L, Series<L>>,
    delta_letter: impl Fn(L) -> Tensor<L>,
    delta: impl Fn(&Series<L>) -> Tensor<L>,
) -> Option<(L, Tensor<L>)> {
    let d = |w: &Word<L>| -> Series<L> {
        let (group, cap) = {
            let any = images.values().next().expect("nonempty alphabet");
            (any.group().clone(), any.cap())
        };
        let single = Series::monomial(&group, cap, w.clone(), Rational::one());
        apply_derivation(&single, |l| images[&l].clone())
    };
    for &l in letters {
        let lhs = tensor_derivation(&delta_letter(l), d);
        let diff = &lhs - &delta(&images[&l]);
        if !diff.is_zero() {
            return Some((l, diff));
        }
    }
    None
}

/// Membership in the stabilizer Lie algebra of `Δ^W`: checked on the
/// generators `z_{n,g}`, then audited on `audit_words` random `z`-words
/// (seeded) where `^γder^{W,(1)}_ψ` is evaluated directly.
pub fn stab_w_lie_membership(psi: &XSeries, audit_words: usize, seed: u64) -> Result<Verdict> {
    require_primitive(psi)?;
    let group = psi.group().clone();
    let cap = psi.cap();
    let op = CrossedDerivation::new(psi);
    let letters = z_letters(&group, cap);
    let mut images = HashMap::new();
    for &z in &letters {
        images.insert(z, op.gamma_der_w1(&WElem::letter(&group, cap, z))?);
    }
    let mut v = Verdict::new("stab(Δ^W)");
    let fail = check_derivation_on_generators(&letters, &images, |z| delta_w_generator(&group, cap, z), delta_w);
    v.record("(^γder^W⊗id + id⊗^γder^W)∘Δ^W = Δ^W∘^γder^W on generators", fail.is_none(), || {
        let (z, d) = fail.unwrap();
        format!("generator {}: {}", encode_word(&[z], &group), first_tensor_term(&d))
    });
    if audit_words > 0 {
        let mut basis: Vec<Word<ZLetter>> = words_up_to(&letters, cap).into_iter().filter(|w| w.len() >= 2).collect();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        basis.shuffle(&mut rng);
        basis.truncate(audit_words);
        // The check evaluates the derivation on both coproduct factors of
        // every sampled word, so those factors need images too.
        let mut needed: Vec<Word<ZLetter>> = basis.clone();
        for w in &basis {
            for ((u, x), _) in delta_w(&WElem::monomial(&group, cap, w.clone(), Rational::one())).terms() {
                needed.push(u.clone());
                needed.push(x.clone());
            }
        }
        let mut word_images = HashMap::new();
        for w in needed {
            if !word_images.contains_key(&w) {
                let image = op.gamma_der_w1(&WElem::monomial(&group, cap, w.clone(), Rational::one()))?;
                word_images.insert(w, image);
            }
        }
        let fail = check_derivation_commutation(&basis, &word_images, delta_w);
        v.record("audit: commutation on sampled z-words", fail.is_none(), || {
            let (w, d) = fail.unwrap();
            format!("basis word {} (degree {}): {}", encode_word(&w, &group), word_degree(&w), first_tensor_term(&d))
        });
    }
    Ok(v)
}

/// Membership in the stabilizer Lie algebra of `Δ^M`, on the full `z`-word
/// module basis.
pub fn stab_m_lie_membership(psi: &XSeries) -> Result<Verdict> {
    require_primitive(psi)?;
    let group = psi.group().clone();
    let cap = psi.cap();
    let op = CrossedDerivation::new(psi);
    let basis = words_up_to(&z_letters(&group, cap), cap);
    let images = basis_images(&basis, |w| {
        op.gamma_end_m10(&MElem(WElem::monomial(&group, cap, w.clone(), Rational::one()))).0
    });
    let mut v = Verdict::new("stab(Δ^M)");
    let fail = check_derivation_commutation(&basis, &images, |w| delta_m(&MElem(w.clone())));
    v.record("(^γend^M⊗id + id⊗^γend^M)∘Δ^M = Δ^M∘^γend^M on all z-words", fail.is_none(), || {
        let (w, d) = fail.unwrap();
        format!("basis word {} (degree {}): {}", encode_word(&w, &group), word_degree(&w), first_tensor_term(&d))
    });
    Ok(v)
}

/// Membership in the stabilizer Lie algebra of the harmonic coproduct of
/// the `Y` algebra under `^γd^Y_ψ` (explicit formula), on generators.
pub fn stab_alg_lie_membership(psi: &XSeries) -> Result<Verdict> {
    require_primitive(psi)?;
    let group = psi.group().clone();
    let cap = psi.cap();
    let op = CrossedDerivation::new(psi);
    let letters = y_letters(&group, cap);
    let images: HashMap<_, _> = letters.iter().map(|&y| (y, op.gamma_d_y_generator(y))).collect();
    let mut v = Verdict::new("stab(Δ★alg)");
    let fail = check_derivation_on_generators(
        &letters,
        &images,
        |y| harmonic_generator_image(&group, cap, y.n as usize, y.g as usize, YLetter::new),
        y_harmonic_coproduct,
    );
    v.record("(^γd^Y⊗id + id⊗^γd^Y)∘Δ★alg = Δ★alg∘^γd^Y on generators", fail.is_none(), || {
        let (y, d) = fail.unwrap();
        format!("generator {}: {}", encode_word(&[y], &group), first_tensor_term(&d))
    });
    Ok(v)
}

/// `[a, b]` in the crossed product.
pub fn v_commutator(a: &VElem, b: &VElem) -> VElem {
    &(a * b) - &(b * a)
}

