//! Stabilizers of the coproducts of `W`, `M` and of the harmonic coproduct
//! of the `Y` algebra under the `Γ`-corrected actions.

use std::collections::HashMap;

use crate::error::{AlgebraError, Result};
use crate::racinet_group::{basis_images, check_coproduct_commutation, first_tensor_term};
use crate::verdict::Verdict;
use crate::word_algebras::{
    encode_word, word_degree, words_up_to, x_is_grouplike, y_harmonic_coproduct, y_letters,
    z_letters, Letter, Series, Tensor, Word, XSeries, ZLetter,
};

use super::actions::CrossedAction;
use super::velem::{delta_m, delta_w, delta_w_generator, MElem, WElem};

fn require_grouplike(psi: &XSeries) -> Result<()> {
    if !x_is_grouplike(psi) {
        return Err(AlgebraError::Domain("stabilizer membership requires a grouplike series".into()));
    }
    Ok(())
}

/// Checks `(A⊗A)(Δ(l)) = Δ(A(l))` on letters, for an algebra morphism `A`
/// given by letter images and a coproduct given on letters. Both sides are
/// algebra morphisms, so agreement on generators gives agreement everywhere.
fn check_on_generators<L: Letter>(
    letters: &[L],
    images: &HashMap<L, Series<L>>,
    delta_letter: impl Fn(L) -> Tensor<L>,
    delta: impl Fn(&Series<L>) -> Tensor<L>,
) -> Option<(L, Tensor<L>)> {
    let group = images.values().next()?.group().clone();
    let cap = images.values().next()?.cap();
    let apply = |w: &Word<L>| {
        let mut acc = Series::one(&group, cap);
        for l in w.iter() {
            acc = &acc * &images[l];
        }
        acc
    };
    for &l in letters {
        let lhs = delta_letter(l).map_each(apply, apply);
        let rhs = delta(&images[&l]);
        let d = &lhs - &rhs;
        if !d.is_zero() {
            return Some((l, d));
        }
    }
    None
}

/// Membership in the stabilizer of `Δ^W` under `^Γaut^{W,(1)}_Ψ`.
///
/// The default check runs on the generators `z_{n,g}`; `audit` additionally
/// evaluates the action directly on every `z`-word up to the cap.
pub fn stab_w_membership(psi: &XSeries, audit: bool) -> Result<Verdict> {
    require_grouplike(psi)?;
    let group = psi.group().clone();
    let cap = psi.cap();
    let act = CrossedAction::new(psi)?;
    let letters = z_letters(&group, cap);
    let mut images = HashMap::new();
    for &z in &letters {
        let single = WElem::letter(&group, cap, z);
        images.insert(z, act.gamma_aut_w1(&single)?);
    }
    let mut v = Verdict::new("Stab(Δ^W)");
    let fail = check_on_generators(&letters, &images, |z| delta_w_generator(&group, cap, z), delta_w);
    v.record("(^Γaut^W ⊗ ^Γaut^W)∘Δ^W = Δ^W∘^Γaut^W on generators", fail.is_none(), || {
        let (z, d) = fail.unwrap();
        format!("generator {}: {}", encode_word(&[z], &group), first_tensor_term(&d))
    });
    if audit {
        let basis = words_up_to(&letters, cap);
        let word_images: Vec<(Word<ZLetter>, Result<WElem>)> = basis
            .iter()
            .map(|w| (w.clone(), act.gamma_aut_w1(&WElem::monomial(&group, cap, w.clone(), num_traits::One::one()))))
            .collect();
        let mut map = HashMap::new();
        for (w, img) in word_images {
            map.insert(w, img?);
        }
        let unit = WElem::one(&group, cap);
        let fail = check_coproduct_commutation(&basis, &map, delta_w, &unit);
        v.record("audit: commutation on every z-word", fail.is_none(), || word_witness(fail.unwrap(), &group));
    }
    Ok(v)
}

fn word_witness<L: Letter>((w, d): (Word<L>, Tensor<L>), group: &crate::foundations::GroupSpec) -> String {
    format!("basis word {} (degree {}): {}", encode_word(&w, group), word_degree(&w), first_tensor_term(&d))
}

/// Membership in the stabilizer of `Δ^M` under `^Γaut^{M,(10)}_Ψ`, checked
/// on the full `z`-word module basis (the action is only a module map).
pub fn stab_m_membership(psi: &XSeries) -> Result<Verdict> {
    require_grouplike(psi)?;
    let group = psi.group().clone();
    let cap = psi.cap();
    let act = CrossedAction::new(psi)?;
    let basis = words_up_to(&z_letters(&group, cap), cap);
    let images = basis_images(&basis, |w| {
        act.gamma_aut_m10(&MElem(WElem::monomial(&group, cap, w.clone(), num_traits::One::one()))).0
    });
    let unit = WElem::one(&group, cap);
    let mut v = Verdict::new("Stab(Δ^M)");
    let fail = check_coproduct_commutation(&basis, &images, |w| delta_m(&MElem(w.clone())), &unit);
    v.record("(^Γaut^M ⊗ ^Γaut^M)∘Δ^M = Δ^M∘^Γaut^M on all z-words", fail.is_none(), || {
        word_witness(fail.unwrap(), &group)
    });
    Ok(v)
}

/// Membership in the stabilizer of the harmonic coproduct of the `Y`
/// algebra under `^Γaut^Y_Ψ` (explicit formula), checked on generators.
pub fn stab_alg_membership(psi: &XSeries) -> Result<Verdict> {
    require_grouplike(psi)?;
    let group = psi.group().clone();
    let cap = psi.cap();
    let act = CrossedAction::new(psi)?;
    let letters = y_letters(&group, cap);
    let images: HashMap<_, _> = letters.iter().map(|&y| (y, act.gamma_aut_y_generator(y))).collect();
    let mut v = Verdict::new("Stab(Δ★alg)");
    let fail = check_on_generators(
        &letters,
        &images,
        |y| {
            crate::word_algebras::harmonic_generator_image(
                &group,
                cap,
                y.n as usize,
                y.g as usize,
                crate::word_algebras::YLetter::new,
            )
        },
        y_harmonic_coproduct,
    );
    v.record("(^Γaut^Y ⊗ ^Γaut^Y)∘Δ★alg = Δ★alg∘^Γaut^Y on generators", fail.is_none(), || {
        let (y, d) = fail.unwrap();
        format!("generator {}: {}", encode_word(&[y], &group), first_tensor_term(&d))
    });
    Ok(v)
}

