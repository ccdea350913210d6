//! Twisted actions of a grouplike `Ψ` on the crossed product, on `W` and on
//! `M`, their `Γ`-corrected versions, and the induced automorphism of the
//! `Y` series algebra (two independent routes).

use crate::error::Result;
use crate::foundations::GroupSpec;
use crate::racinet_group::{aut_letter_images, correction_x1, gamma_of, gamma_inv_x1};
use crate::word_algebras::{
    q_y, t_action, x0_pow, x_word_to_y, XLetter, XSeries, YLetter, YSeries,
};

use super::velem::{m_project, v_to_w, varpi, varpi_inv, w_to_v, z11_pow, MElem, VElem, WElem};

/// Everything derived from `Ψ` that the crossed-product actions reuse.
#[derive(Debug, Clone)]
pub struct CrossedAction {
    psi: XSeries,
    images: Vec<XSeries>,
    beta: VElem,
    beta_inv: VElem,
    corr_z: WElem,
    corr_e1: VElem,
    corr_inv_e1: VElem,
}

/// `f(z_{1,1}) = Σ c_k z_{1,1}^k` inside `W`.
fn uni_at_z11(f: &crate::foundations::UniSeries, group: &GroupSpec, cap: usize) -> WElem {
    let mut out = WElem::zero(group, cap);
    for (k, c) in f.coeffs().iter().enumerate() {
        out.add_scaled(&z11_pow(group, cap, k), c).expect("same cap");
    }
    out
}

impl CrossedAction {
    pub fn new(psi: &XSeries) -> Result<Self> {
        let group = psi.group();
        let cap = psi.cap();
        let gamma = gamma_of(psi);
        let corr_z = uni_at_z11(&gamma, group, cap);
        Ok(CrossedAction {
            psi: psi.clone(),
            images: aut_letter_images(psi)?,
            beta: VElem::from_x(psi),
            beta_inv: VElem::from_x(&psi.inverse()?),
            corr_e1: w_to_v(&corr_z),
            corr_inv_e1: w_to_v(&uni_at_z11(&gamma.inv()?, group, cap)),
            corr_z,
        })
    }

    pub fn psi(&self) -> &XSeries {
        &self.psi
    }

    /// The correction factor `Γ_Ψ(z_{1,1}) = Γ_Ψ(-e1)` inside `W`.
    pub fn correction_z11(&self) -> &WElem {
        &self.corr_z
    }

    /// `aut^{V,(0)}_Ψ`: `aut_Ψ` on each component; fixes `e0` and every `g`.
    pub fn aut_v0(&self, a: &VElem) -> VElem {
        let cap = a.cap();
        a.map_comps(|c| c.substitute(cap, |l| self.images[l.0 as usize].clone()))
    }

    /// `aut^{V,(1)}_Ψ = Ad_{β(Ψ⊗1)} ∘ aut^{V,(0)}_Ψ`.
    pub fn aut_v1(&self, a: &VElem) -> VElem {
        &(&self.beta * &self.aut_v0(a)) * &self.beta_inv
    }

    /// `aut^{V,(10)}_Ψ = ℓ_{β(Ψ⊗1)} ∘ aut^{V,(0)}_Ψ`.
    pub fn aut_v10(&self, a: &VElem) -> VElem {
        &self.beta * &self.aut_v0(a)
    }

    /// Restriction of `aut^{V,(1)}_Ψ` to `W`.
    pub fn aut_w1(&self, w: &WElem) -> Result<WElem> {
        v_to_w(&self.aut_v1(&w_to_v(w)))
    }

    /// `aut^{M,(10)}_Ψ`: lift to `V`, apply `aut^{V,(10)}_Ψ`, project.
    pub fn aut_m10(&self, m: &MElem) -> MElem {
        m_project(&self.aut_v10(&w_to_v(&m.0)))
    }

    /// `Ad_{Γ_Ψ(-e1)} ∘ aut^{V,(1)}_Ψ`.
    pub fn gamma_aut_v1(&self, a: &VElem) -> VElem {
        &(&self.corr_e1 * &self.aut_v1(a)) * &self.corr_inv_e1
    }

    /// Restriction of the `Γ`-corrected action to `W`.
    pub fn gamma_aut_w1(&self, w: &WElem) -> Result<WElem> {
        v_to_w(&self.gamma_aut_v1(&w_to_v(w)))
    }

    /// `ℓ_{Γ_Ψ(-e1)} ∘ aut^{M,(10)}_Ψ`.
    pub fn gamma_aut_m10(&self, m: &MElem) -> MElem {
        MElem(&self.corr_z * &self.aut_m10(m).0)
    }

    /// Route A: `ϖ^{-1} ∘ ^Γaut^{W,(1)}_Ψ ∘ ϖ`.
    pub fn gamma_aut_y_conjugated(&self, y: &YSeries) -> Result<YSeries> {
        Ok(varpi_inv(&self.gamma_aut_w1(&varpi(y))?))
    }

    /// Route B, generator image:
    /// `y_{n,g} ↦ q_Y(Γ_Ψ(x1) Ψ x0^{n-1} t_g(Ψ^{-1} Γ_Ψ^{-1}(x1)) x_g)`.
    pub fn gamma_aut_y_generator(&self, y: YLetter) -> YSeries {
        let group = self.psi.group();
        let cap = self.psi.cap();
        let n = y.n as usize;
        let g = y.g as usize;
        let right = t_action(g, &(&self.psi.inverse().expect("grouplike") * &gamma_inv_x1(&self.psi)));
        let xg = XSeries::letter(group, cap, XLetter::g(g));
        let prod = &(&(&(&correction_x1(&self.psi) * &self.psi) * &x0_pow(group, cap, n - 1)) * &right) * &xg;
        let mut out = YSeries::zero(group, cap);
        for (w, c) in prod.terms() {
            let yw = x_word_to_y(w).expect("every word ends in x_g");
            out.add_term(yw, c.clone());
        }
        q_y(&out)
    }

    /// Route B: the explicit generator formula extended multiplicatively.
    pub fn gamma_aut_y_explicit(&self, y: &YSeries) -> YSeries {
        y.substitute(y.cap(), |l| self.gamma_aut_y_generator(l))
    }
}

/// `aut^{V,(0)}_Ψ(a)`.
pub fn aut_v0(psi: &XSeries, a: &VElem) -> Result<VElem> {
    Ok(CrossedAction::new(psi)?.aut_v0(a))
}

/// `aut^{V,(1)}_Ψ(a)`.
pub fn aut_v1(psi: &XSeries, a: &VElem) -> Result<VElem> {
    Ok(CrossedAction::new(psi)?.aut_v1(a))
}

/// `aut^{V,(10)}_Ψ(a)`.
pub fn aut_v10(psi: &XSeries, a: &VElem) -> Result<VElem> {
    Ok(CrossedAction::new(psi)?.aut_v10(a))
}

/// `aut^{W,(1)}_Ψ(w)`.
pub fn aut_w1(psi: &XSeries, w: &WElem) -> Result<WElem> {
    CrossedAction::new(psi)?.aut_w1(w)
}

/// `aut^{M,(10)}_Ψ(m)`.
pub fn aut_m10(psi: &XSeries, m: &MElem) -> Result<MElem> {
    Ok(CrossedAction::new(psi)?.aut_m10(m))
}

/// `^Γaut^{V,(1)}_Ψ(a)`.
pub fn gamma_aut_v1(psi: &XSeries, a: &VElem) -> Result<VElem> {
    Ok(CrossedAction::new(psi)?.gamma_aut_v1(a))
}

/// `^Γaut^{W,(1)}_Ψ(w)`.
pub fn gamma_aut_w1(psi: &XSeries, w: &WElem) -> Result<WElem> {
    CrossedAction::new(psi)?.gamma_aut_w1(w)
}

/// `^Γaut^{M,(10)}_Ψ(m)`.
pub fn gamma_aut_m10(psi: &XSeries, m: &MElem) -> Result<MElem> {
    Ok(CrossedAction::new(psi)?.gamma_aut_m10(m))
}

/// `^Γaut^Y_Ψ(y)` by the explicit formula; see
/// [`CrossedAction::gamma_aut_y_conjugated`] for the other route.
pub fn gamma_aut_y(psi: &XSeries, y: &YSeries) -> Result<YSeries> {
    Ok(CrossedAction::new(psi)?.gamma_aut_y_explicit(y))
}
