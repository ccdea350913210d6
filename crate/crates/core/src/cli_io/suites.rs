//! Named identity suites: randomized exact checks of the structural
//! identities the library relies on, with a counterexample dump on failure.
//!
//! Every identity draws its own inputs from a sampler seeded by the run seed
//! and the identity name, so a failing identity can be replayed alone.

use std::fmt;

use crate::crossed_product::{stab_alg_membership, 
    canonical_basis, delta_m, delta_w, from_canonical_basis, kappa, kappa_inv, m_project, stab_m_membership,
    stab_w_membership, v_to_w, varpi, varpi_inv, w_to_v, CrossedAction, MElem, VElem, WElem,
};
use crate::error::Result;
use crate::foundations::rational::{q, Rational};
use crate::foundations::{matrix_nullspace, GroupSpec, UniSeries};
use crate::graded_solver::{condition_matrix_for, Family};
use crate::lie_side::{
    cbh_bracket, exp_circledast, gamma_s_y_lie, lie_bracket, log_circledast, lyndon_basis, s_psi,
    s_y_psi, theta_lie, CrossedDerivation, LieElem,
};
use crate::perturbation::{infinitesimal, Linear};
use crate::racinet_group::{
    aut_psi, circledast, circledast_inverse, gamma_of, gamma_s_y, s_big, s_y,
    stab_mod_membership, theta_of,
};
use crate::sampling::Sampler;
use crate::word_algebras::{
    delta_star_mod, pi_y, q_inv, q_y, t_action, t_letter, words_up_to, x_coproduct, x_letters,
    y_harmonic_coproduct, y_inject, z_letters, Letter, Series, Tensor, XLetter, XSeries, YSeries,
};

/// Expected number of terms in a random sparse series.
const SPARSE_TERMS: f64 = 10.0;
/// Longest rendering of one value in a dump.
const DUMP_LIMIT: usize = 800;

/// Text rendering for counterexample dumps.
pub trait Shown {
    fn shown(&self) -> String;
}

impl<L: Letter> Shown for Series<L> {
    fn shown(&self) -> String {
        self.display()
    }
}

impl<L: Letter> Shown for Tensor<L> {
    fn shown(&self) -> String {
        self.display()
    }
}

impl Shown for VElem {
    fn shown(&self) -> String {
        self.display()
    }
}

impl Shown for MElem {
    fn shown(&self) -> String {
        self.0.display()
    }
}

impl Shown for UniSeries {
    fn shown(&self) -> String {
        self.display()
    }
}

fn clip(s: String) -> String {
    if s.chars().count() <= DUMP_LIMIT {
        s
    } else {
        let head: String = s.chars().take(DUMP_LIMIT).collect();
        format!("{head} ... ({} chars)", s.chars().count())
    }
}

/// Result of one trial: `None` on success, a dump on failure.
pub type TrialOutcome = Option<String>;

/// Compares two sides and renders the inputs and both sides on mismatch.
pub fn expect_eq<T: PartialEq + Shown>(inputs: &[(&str, &dyn Shown)], lhs: &T, rhs: &T) -> TrialOutcome {
    if lhs == rhs {
        return None;
    }
    let mut out = String::new();
    for (name, v) in inputs {
        out.push_str(&format!("  input {name} = {}\n", clip(v.shown())));
    }
    out.push_str(&format!("  lhs = {}\n", clip(lhs.shown())));
    out.push_str(&format!("  rhs = {}\n", clip(rhs.shown())));
    Some(out)
}

/// Inputs and cached data shared by the trials of one identity.
pub struct TrialContext {
    pub group: GroupSpec,
    pub cap: usize,
    pub sampler: Sampler,
    stab_kernel: Option<Vec<XSeries>>,
}

impl TrialContext {
    pub fn new(group: &GroupSpec, cap: usize, seed: u64) -> Self {
        TrialContext { group: group.clone(), cap, sampler: Sampler::new(seed), stab_kernel: None }
    }

    fn density(len: usize) -> f64 {
        (SPARSE_TERMS / len.max(1) as f64).min(0.6)
    }

    /// Sparse random `X` series with zero constant term and degree `≤ max_degree`.
    pub fn x_series(&mut self, max_degree: usize) -> XSeries {
        let words: Vec<_> = words_up_to(&x_letters(&self.group), max_degree.min(self.cap))
            .into_iter()
            .filter(|w| !w.is_empty())
            .collect();
        let d = Self::density(words.len());
        let s = self.sampler.series(&self.group, self.cap, &words, d);
        if s.is_zero() {
            XSeries::letter(&self.group, self.cap, XLetter::X1)
        } else {
            s
        }
    }

    /// Random Lie element with sparse Lyndon coordinates.
    pub fn lie(&mut self) -> XSeries {
        let (group, cap) = (self.group.clone(), self.cap);
        let total: usize = (1..=cap).map(|n| lyndon_basis(&group, n, cap).len()).sum();
        let d = (6.0 / total as f64).min(0.6);
        let s = self.sampler.lie(&group, cap, 1, d);
        if s.is_zero() {
            XSeries::letter(&group, cap, XLetter::X1)
        } else {
            s
        }
    }

    /// Random grouplike series `exp(ψ)`.
    pub fn grouplike(&mut self) -> XSeries {
        self.lie().exp().expect("zero constant term")
    }

    /// Random element of the crossed product.
    pub fn v_elem(&mut self) -> VElem {
        let mut v = VElem::zero(&self.group.clone(), self.cap);
        for g in 0..self.group.order() {
            if g == 0 || self.sampler.coin(0.5) {
                let a = self.x_series(self.cap);
                v = &v + &VElem::from_pair(&a, g);
            }
        }
        v
    }

    /// Random element of `W` with zero constant term.
    pub fn w_elem(&mut self) -> WElem {
        let words: Vec<_> =
            words_up_to(&z_letters(&self.group, self.cap), self.cap).into_iter().filter(|w| !w.is_empty()).collect();
        let d = Self::density(words.len());
        self.sampler.series(&self.group, self.cap, &words, d)
    }

    /// Random `Y` series with zero constant term.
    pub fn y_series(&mut self) -> YSeries {
        varpi_inv(&self.w_elem())
    }

    pub fn index(&mut self, n: usize) -> usize {
        self.sampler.index(n)
    }

    /// Kernel vectors of the `stab_mod` conditions in every degree up to
    /// the cap, expanded as Lie elements. Computed once per context.
    pub fn stab_kernel(&mut self) -> &[XSeries] {
        if self.stab_kernel.is_none() {
            let mut out = Vec::new();
            for n in 1..=self.cap {
                let basis = lyndon_basis(&self.group, n, self.cap);
                for v in matrix_nullspace(&condition_matrix_for(Family::StabMod, &basis)) {
                    out.push(basis.combine(&v));
                }
            }
            self.stab_kernel = Some(out);
        }
        self.stab_kernel.as_deref().expect("just filled")
    }

    /// Random element of the `stab_mod` Lie algebra: a random combination of
    /// kernel vectors, never zero when the kernel is nonzero.
    pub fn stab_lie(&mut self) -> XSeries {
        let kernel = self.stab_kernel().to_vec();
        let mut psi = XSeries::zero(&self.group, self.cap);
        for (i, k) in kernel.iter().enumerate() {
            if self.sampler.coin(0.6) || (i + 1 == kernel.len() && psi.is_zero()) {
                let c = self.sampler.rational();
                psi.add_scaled(k, &c).expect("same cap");
            }
        }
        psi
    }
}

type Check = fn(&mut TrialContext) -> Result<TrialOutcome>;

/// One randomized identity.
pub struct Identity {
    pub name: &'static str,
    check: Check,
}

/// A named group of identities.
pub struct Suite {
    pub name: &'static str,
    pub summary: &'static str,
    /// Whether `--suite all` runs it; false only for the negative control.
    pub in_all: bool,
    identities: Vec<Identity>,
}

impl Suite {
    pub fn identity_names(&self) -> Vec<&'static str> {
        self.identities.iter().map(|i| i.name).collect()
    }
}

fn id(name: &'static str, check: Check) -> Identity {
    Identity { name, check }
}

fn v_act_m(a: &VElem, m: &MElem) -> MElem {
    m_project(&(a * &w_to_v(&m.0)))
}

// ---- word algebras -------------------------------------------------------

fn delta_tg(c: &mut TrialContext) -> Result<TrialOutcome> {
    let a = c.x_series(c.cap);
    let g = c.index(c.group.order());
    let group = c.group.clone();
    let lhs = x_coproduct(&t_action(g, &a));
    let rhs = x_coproduct(&a).map_letters(|l| t_letter(&group, g, l));
    Ok(expect_eq(&[("a", &a)], &lhs, &rhs).map(|d| format!("  g = {}\n{d}", group.element(g))))
}

fn commut_t_aut(c: &mut TrialContext) -> Result<TrialOutcome> {
    let psi = c.grouplike();
    let a = c.x_series(c.cap);
    let g = c.index(c.group.order());
    let lhs = aut_psi(&psi, &t_action(g, &a))?;
    let rhs = t_action(g, &aut_psi(&psi, &a)?);
    Ok(expect_eq(&[("Ψ", &psi), ("a", &a)], &lhs, &rhs))
}

fn aut_group_morph(c: &mut TrialContext) -> Result<TrialOutcome> {
    let (psi, phi, a) = (c.grouplike(), c.grouplike(), c.x_series(c.cap));
    let lhs = aut_psi(&circledast(&psi, &phi)?, &a)?;
    let rhs = aut_psi(&psi, &aut_psi(&phi, &a)?)?;
    Ok(expect_eq(&[("Ψ", &psi), ("Φ", &phi), ("a", &a)], &lhs, &rhs))
}

fn s_group_morph(c: &mut TrialContext) -> Result<TrialOutcome> {
    let (psi, phi, a) = (c.grouplike(), c.grouplike(), c.x_series(c.cap));
    let lhs = s_big(&circledast(&psi, &phi)?, &a)?;
    let rhs = s_big(&psi, &s_big(&phi, &a)?)?;
    Ok(expect_eq(&[("Ψ", &psi), ("Φ", &phi), ("a", &a)], &lhs, &rhs))
}

fn gamma_aut(c: &mut TrialContext) -> Result<TrialOutcome> {
    let (psi, phi) = (c.grouplike(), c.grouplike());
    let lhs = gamma_of(&circledast(&psi, &phi)?);
    let rhs = gamma_of(&psi).mul(&gamma_of(&phi))?;
    Ok(expect_eq(&[("Ψ", &psi), ("Φ", &phi)], &lhs, &rhs))
}

fn link_ef0_yad(c: &mut TrialContext) -> Result<TrialOutcome> {
    let (psi, m) = (c.grouplike(), c.y_series());
    let lhs = gamma_s_y(&psi, &m)?;
    let rhs = s_y(&theta_of(&psi), &m)?;
    Ok(expect_eq(&[("Ψ", &psi), ("m", &m)], &lhs, &rhs))
}

fn gamma_s_s_theta(c: &mut TrialContext) -> Result<TrialOutcome> {
    let (psi, m) = (c.lie(), c.y_series());
    let lhs = gamma_s_y_lie(&psi, &m)?;
    let rhs = s_y_psi(&theta_lie(&psi), &m)?;
    Ok(expect_eq(&[("ψ", &psi), ("m", &m)], &lhs, &rhs))
}

// ---- crossed product -----------------------------------------------------

fn iso_basis_round_trip(c: &mut TrialContext) -> Result<TrialOutcome> {
    let v = c.v_elem();
    let back = from_canonical_basis(&c.group, c.cap, &canonical_basis(&v))?;
    Ok(expect_eq(&[], &back, &v))
}

fn iso_w_round_trip(c: &mut TrialContext) -> Result<TrialOutcome> {
    let w = c.w_elem();
    let back = v_to_w(&w_to_v(&w))?;
    Ok(expect_eq(&[], &back, &w))
}

fn iso_w_morphism(c: &mut TrialContext) -> Result<TrialOutcome> {
    let (a, b) = (c.w_elem(), c.w_elem());
    let lhs = w_to_v(&(&a * &b));
    let rhs = &w_to_v(&a) * &w_to_v(&b);
    Ok(expect_eq(&[("a", &a), ("b", &b)], &lhs, &rhs))
}

fn iso_varpi_kappa_round_trip(c: &mut TrialContext) -> Result<TrialOutcome> {
    let y = c.y_series();
    if let Some(d) = expect_eq(&[], &varpi_inv(&varpi(&y)), &y) {
        return Ok(Some(format!("  ϖ⁻¹∘ϖ\n{d}")));
    }
    Ok(expect_eq(&[], &kappa_inv(&kappa(&y)), &y).map(|d| format!("  κ⁻¹∘κ\n{d}")))
}

fn iso_generator_images(c: &mut TrialContext) -> Result<TrialOutcome> {
    let (group, cap) = (c.group.clone(), c.cap);
    let g = c.index(group.order());
    let e1 = VElem::e1(&group, cap);
    let lhs = (&(&VElem::grp(&group, cap, g) * &e1) * &VElem::grp(&group, cap, group.inv_idx(g))).scale(&q(-1));
    let rhs = VElem::from_x(&XSeries::letter(&group, cap, XLetter::g(g)));
    Ok(expect_eq(&[], &lhs, &rhs).map(|d| format!("  g = {}\n{d}", group.element(g))))
}

fn rel_aut_v10_v0(c: &mut TrialContext) -> Result<TrialOutcome> {
    let psi = c.grouplike();
    let (a, b) = (c.v_elem(), c.v_elem());
    let act = CrossedAction::new(&psi)?;
    let lhs = act.aut_v10(&(&a * &b));
    let rhs = &act.aut_v10(&a) * &act.aut_v0(&b);
    Ok(expect_eq(&[("Ψ", &psi), ("a", &a), ("b", &b)], &lhs, &rhs))
}

fn rel_aut_v1_v10(c: &mut TrialContext) -> Result<TrialOutcome> {
    let psi = c.grouplike();
    let (a, b) = (c.v_elem(), c.v_elem());
    let act = CrossedAction::new(&psi)?;
    let lhs = act.aut_v10(&(&a * &b));
    let rhs = &act.aut_v1(&a) * &act.aut_v10(&b);
    Ok(expect_eq(&[("Ψ", &psi), ("a", &a), ("b", &b)], &lhs, &rhs))
}

fn compat_mv(c: &mut TrialContext) -> Result<TrialOutcome> {
    let psi = c.grouplike();
    let (a, m) = (c.v_elem(), MElem(c.w_elem()));
    let act = CrossedAction::new(&psi)?;
    let lhs = act.aut_m10(&v_act_m(&a, &m));
    let rhs = v_act_m(&act.aut_v1(&a), &act.aut_m10(&m));
    Ok(expect_eq(&[("Ψ", &psi), ("a", &a), ("m", &m)], &lhs, &rhs))
}

fn compat_gamma_mv(c: &mut TrialContext) -> Result<TrialOutcome> {
    let psi = c.grouplike();
    let (a, m) = (c.v_elem(), MElem(c.w_elem()));
    let act = CrossedAction::new(&psi)?;
    let lhs = act.gamma_aut_m10(&v_act_m(&a, &m));
    let rhs = v_act_m(&act.gamma_aut_v1(&a), &act.gamma_aut_m10(&m));
    Ok(expect_eq(&[("Ψ", &psi), ("a", &a), ("m", &m)], &lhs, &rhs))
}

fn beta_and_q(c: &mut TrialContext) -> Result<TrialOutcome> {
    let (group, cap) = (c.group.clone(), c.cap);
    let mut a = c.x_series(cap - 1);
    a.add_term(Default::default(), c.sampler.rational());
    let g = c.index(group.order());
    let axg = &a * &XSeries::letter(&group, cap, XLetter::g(g));
    let lhs = v_to_w(&VElem::from_pair(&axg, g))?;
    let rhs = varpi(&q_y(&pi_y(&axg)));
    Ok(expect_eq(&[("a", &a)], &lhs, &rhs).map(|d| format!("  g = {}\n{d}", group.element(g))))
}

fn explicit_auty(c: &mut TrialContext) -> Result<TrialOutcome> {
    let (psi, y) = (c.grouplike(), c.y_series());
    let act = CrossedAction::new(&psi)?;
    let lhs = act.gamma_aut_y_conjugated(&y)?;
    let rhs = act.gamma_aut_y_explicit(&y);
    Ok(expect_eq(&[("Ψ", &psi), ("y", &y)], &lhs, &rhs))
}

fn link_gammasy_gammaautm10(c: &mut TrialContext) -> Result<TrialOutcome> {
    let (psi, m) = (c.grouplike(), c.y_series());
    let act = CrossedAction::new(&psi)?;
    let lhs = kappa(&gamma_s_y(&psi, &m)?);
    let rhs = act.gamma_aut_m10(&kappa(&m));
    Ok(expect_eq(&[("Ψ", &psi), ("m", &m)], &lhs, &rhs))
}

fn link_sy_autm10(c: &mut TrialContext) -> Result<TrialOutcome> {
    let (psi, m) = (c.grouplike(), c.y_series());
    let act = CrossedAction::new(&psi)?;
    let lhs = kappa(&s_y(&psi, &m)?);
    let rhs = act.aut_m10(&kappa(&m));
    Ok(expect_eq(&[("Ψ", &psi), ("m", &m)], &lhs, &rhs))
}

fn action_law_v1(c: &mut TrialContext) -> Result<TrialOutcome> {
    let (psi, phi, a) = (c.grouplike(), c.grouplike(), c.v_elem());
    let lhs = CrossedAction::new(&circledast(&psi, &phi)?)?.aut_v1(&a);
    let rhs = CrossedAction::new(&psi)?.aut_v1(&CrossedAction::new(&phi)?.aut_v1(&a));
    Ok(expect_eq(&[("Ψ", &psi), ("Φ", &phi), ("a", &a)], &lhs, &rhs))
}

fn action_law_gamma_m10(c: &mut TrialContext) -> Result<TrialOutcome> {
    let (psi, phi, m) = (c.grouplike(), c.grouplike(), MElem(c.w_elem()));
    let lhs = CrossedAction::new(&circledast(&psi, &phi)?)?.gamma_aut_m10(&m);
    let rhs = CrossedAction::new(&psi)?.gamma_aut_m10(&CrossedAction::new(&phi)?.gamma_aut_m10(&m));
    Ok(expect_eq(&[("Ψ", &psi), ("Φ", &phi), ("m", &m)], &lhs, &rhs))
}

// ---- diagrams ------------------------------------------------------------

fn diag_coproduct_mod(c: &mut TrialContext) -> Result<TrialOutcome> {
    let (y, m) = (c.y_series(), c.y_series());
    let ym = &y * &m;
    let lhs = delta_star_mod(&pi_y(&y_inject(&ym)));
    let rhs = &y_harmonic_coproduct(&y) * &delta_star_mod(&m);
    Ok(expect_eq(&[("y", &y), ("m", &m)], &lhs, &rhs))
}

fn diag_iso_mg(c: &mut TrialContext) -> Result<TrialOutcome> {
    let mut a = c.x_series(c.cap);
    a.add_term(Default::default(), c.sampler.rational());
    let lhs = kappa(&q_y(&pi_y(&a)));
    let rhs = m_project(&VElem::from_x(&a));
    Ok(expect_eq(&[("a", &a)], &lhs, &rhs))
}

fn diag_projections(c: &mut TrialContext) -> Result<TrialOutcome> {
    let y = c.y_series();
    let lhs = m_project(&w_to_v(&varpi(&y)));
    let rhs = m_project(&VElem::from_x(&q_inv(&y_inject(&y))));
    Ok(expect_eq(&[("y", &y)], &lhs, &rhs))
}

fn diag_delta_w_m(c: &mut TrialContext) -> Result<TrialOutcome> {
    let w = c.w_elem();
    let lhs = delta_m(&m_project(&w_to_v(&w)));
    let rhs = delta_w(&w);
    Ok(expect_eq(&[("w", &w)], &lhs, &rhs))
}

fn compat_delta_w_m(c: &mut TrialContext) -> Result<TrialOutcome> {
    let (w, m) = (c.w_elem(), MElem(c.w_elem()));
    let lhs = delta_m(&MElem::act(&w, &m)?);
    let rhs = &delta_w(&w) * &delta_m(&m);
    Ok(expect_eq(&[("w", &w), ("m", &m)], &lhs, &rhs))
}

fn link_delta_w_star(c: &mut TrialContext) -> Result<TrialOutcome> {
    let y = c.y_series();
    let lhs = delta_w(&varpi(&y));
    let rhs = y_harmonic_coproduct(&y).map_letters(|l| crate::word_algebras::ZLetter::new(l.n as usize, l.g as usize));
    Ok(expect_eq(&[("y", &y)], &lhs, &rhs))
}

fn diag_beta_auts(c: &mut TrialContext) -> Result<TrialOutcome> {
    let psi = c.grouplike();
    let a = c.x_series(c.cap);
    let g = c.index(c.group.order());
    let lhs = VElem::from_pair(&aut_psi(&psi, &a)?, g);
    let rhs = CrossedAction::new(&psi)?.aut_v0(&VElem::from_pair(&a, g));
    Ok(expect_eq(&[("Ψ", &psi), ("a", &a)], &lhs, &rhs))
}

// ---- group and Lie axioms ------------------------------------------------

fn law_associative(c: &mut TrialContext) -> Result<TrialOutcome> {
    let (a, b, d) = (c.grouplike(), c.grouplike(), c.grouplike());
    let lhs = circledast(&circledast(&a, &b)?, &d)?;
    let rhs = circledast(&a, &circledast(&b, &d)?)?;
    Ok(expect_eq(&[("Ψ", &a), ("Φ", &b), ("Ξ", &d)], &lhs, &rhs))
}

fn law_unit(c: &mut TrialContext) -> Result<TrialOutcome> {
    let a = c.grouplike();
    let one = XSeries::one(&c.group, c.cap);
    if let Some(d) = expect_eq(&[("Ψ", &a)], &circledast(&one, &a)?, &a) {
        return Ok(Some(d));
    }
    Ok(expect_eq(&[("Ψ", &a)], &circledast(&a, &one)?, &a))
}

fn law_inverse(c: &mut TrialContext) -> Result<TrialOutcome> {
    let a = c.grouplike();
    let inv = circledast_inverse(&a)?;
    let one = XSeries::one(&c.group, c.cap);
    if let Some(d) = expect_eq(&[("Ψ", &a)], &circledast(&a, &inv)?, &one) {
        return Ok(Some(d));
    }
    Ok(expect_eq(&[("Ψ", &a)], &circledast(&inv, &a)?, &one))
}

fn bracket_antisymmetric(c: &mut TrialContext) -> Result<TrialOutcome> {
    let (a, b) = (LieElem::new(c.lie())?, LieElem::new(c.lie())?);
    let lhs = lie_bracket(&a, &b)?.into_series();
    let rhs = lie_bracket(&b, &a)?.into_series().scale(&q(-1));
    Ok(expect_eq(&[("ψ", a.series()), ("φ", b.series())], &lhs, &rhs))
}

fn bracket_jacobi(c: &mut TrialContext) -> Result<TrialOutcome> {
    let (a, b, d) = (LieElem::new(c.lie())?, LieElem::new(c.lie())?, LieElem::new(c.lie())?);
    let cyc = |x: &LieElem, y: &LieElem, z: &LieElem| -> Result<XSeries> {
        Ok(lie_bracket(x, &lie_bracket(y, z)?)?.into_series())
    };
    let sum = &(&cyc(&a, &b, &d)? + &cyc(&b, &d, &a)?) + &cyc(&d, &a, &b)?;
    let zero = XSeries::zero(&c.group, c.cap);
    Ok(expect_eq(&[("ψ", a.series()), ("φ", b.series()), ("χ", d.series())], &sum, &zero))
}

fn exp_log_inverse(c: &mut TrialContext) -> Result<TrialOutcome> {
    let psi = c.lie();
    let back = log_circledast(&exp_circledast(&LieElem::new(psi.clone())?)?)?.into_series();
    if let Some(d) = expect_eq(&[("ψ", &psi)], &back, &psi) {
        return Ok(Some(format!("  log∘exp\n{d}")));
    }
    let a = c.grouplike();
    let again = exp_circledast(&log_circledast(&a)?)?;
    Ok(expect_eq(&[("Ψ", &a)], &again, &a).map(|d| format!("  exp∘log\n{d}")))
}

fn exp_intertwines(c: &mut TrialContext) -> Result<TrialOutcome> {
    let (psi, a) = (c.lie(), c.x_series(c.cap));
    let big = exp_circledast(&LieElem::new(psi.clone())?)?;
    let lhs = s_big(&big, &a)?;
    let mut term = a.clone();
    let mut rhs = a.clone();
    for k in 1..=c.cap {
        term = s_psi(&psi, &term)?.scale(&(Rational::from_integer(1.into()) / q(k as i64)));
        rhs = &rhs + &term;
    }
    Ok(expect_eq(&[("ψ", &psi), ("a", &a)], &lhs, &rhs))
}

fn cbh_degree_two(c: &mut TrialContext) -> Result<TrialOutcome> {
    let (a, b) = (LieElem::new(c.lie())?, LieElem::new(c.lie())?);
    let lhs = cbh_bracket(&a, &b)?.into_series().with_cap(2);
    let half = lie_bracket(&a, &b)?.into_series().scale(&(Rational::from_integer(1.into()) / q(2)));
    let rhs = (&(a.series() + b.series()) + &half).with_cap(2);
    Ok(expect_eq(&[("ψ", a.series()), ("φ", b.series())], &lhs, &rhs))
}

fn cbh_intertwines(c: &mut TrialContext) -> Result<TrialOutcome> {
    let (a, b) = (LieElem::new(c.lie())?, LieElem::new(c.lie())?);
    let lhs = exp_circledast(&cbh_bracket(&a, &b)?)?;
    let rhs = circledast(&exp_circledast(&a)?, &exp_circledast(&b)?)?;
    Ok(expect_eq(&[("ψ", a.series()), ("φ", b.series())], &lhs, &rhs))
}

// ---- stabilizers -----------------------------------------------------------

fn stab_inclusion(c: &mut TrialContext) -> Result<TrialOutcome> {
    let psi = c.stab_lie();
    let big = exp_circledast(&LieElem::new(psi.clone())?)?;
    let m = stab_m_membership(&big)?;
    if !m.is_member() {
        return Ok(Some(format!("  input ψ = {}\n  exp(ψ) failed Stab(Δ^M):\n{m}", clip(psi.display()))));
    }
    let w = stab_w_membership(&big, false)?;
    Ok((!w.is_member()).then(|| format!("  input ψ = {}\n  exp(ψ) in Stab(Δ^M) but not Stab(Δ^W):\n{w}", clip(psi.display()))))
}

/// A grouplike test point: on even trials a random series, on odd trials the
/// exponential of a `stab_mod` kernel combination (a stabilizer member).
fn mixed_grouplike(c: &mut TrialContext) -> Result<(XSeries, &'static str)> {
    if c.sampler.coin(0.5) {
        let psi = c.stab_lie();
        Ok((exp_circledast(&LieElem::new(psi)?)?, "stabilizer exponential"))
    } else {
        Ok((c.grouplike(), "random grouplike"))
    }
}

fn agree_m_mod(c: &mut TrialContext) -> Result<TrialOutcome> {
    let (psi, kind) = mixed_grouplike(c)?;
    let (a, b) = (stab_m_membership(&psi)?, stab_mod_membership(&psi)?);
    Ok((a.is_member() != b.is_member())
        .then(|| format!("  {kind} Ψ = {}\n{a}{b}", clip(psi.display()))))
}

fn agree_w_alg(c: &mut TrialContext) -> Result<TrialOutcome> {
    let (psi, kind) = mixed_grouplike(c)?;
    let (a, b) = (stab_w_membership(&psi, false)?, stab_alg_membership(&psi)?);
    Ok((a.is_member() != b.is_member())
        .then(|| format!("  {kind} Ψ = {}\n{a}{b}", clip(psi.display()))))
}

// ---- first-order parts -----------------------------------------------------

fn eps_part<T: Linear + Shown>(
    psi: &XSeries,
    group_map: impl Fn(&XSeries) -> Result<T>,
    lie_map: T,
) -> Result<TrialOutcome> {
    let lhs = infinitesimal(psi, group_map)?;
    Ok(expect_eq(&[("ψ", psi)], &lhs, &lie_map))
}

fn eps_v0(c: &mut TrialContext) -> Result<TrialOutcome> {
    let (psi, a) = (c.lie(), c.v_elem());
    let lie = CrossedDerivation::new(&psi).der_v0(&a);
    eps_part(&psi, |p| Ok(CrossedAction::new(p)?.aut_v0(&a)), lie)
}

fn eps_v1(c: &mut TrialContext) -> Result<TrialOutcome> {
    let (psi, a) = (c.lie(), c.v_elem());
    let lie = CrossedDerivation::new(&psi).der_v1(&a);
    eps_part(&psi, |p| Ok(CrossedAction::new(p)?.aut_v1(&a)), lie)
}

fn eps_v10(c: &mut TrialContext) -> Result<TrialOutcome> {
    let (psi, a) = (c.lie(), c.v_elem());
    let lie = CrossedDerivation::new(&psi).end_v10(&a);
    eps_part(&psi, |p| Ok(CrossedAction::new(p)?.aut_v10(&a)), lie)
}

fn eps_m10(c: &mut TrialContext) -> Result<TrialOutcome> {
    let (psi, m) = (c.lie(), MElem(c.w_elem()));
    let lie = CrossedDerivation::new(&psi).end_m10(&m);
    eps_part(&psi, |p| Ok(CrossedAction::new(p)?.aut_m10(&m)), lie)
}

/// The group-level correction `Γ` starts in degree 2, its Lie counterpart
/// `γ` in degree 1, so the first-order part of a `Γ`-twist is the
/// `γ`-twist minus the `(ψ|x1)`-term.
fn x1_coeff(psi: &XSeries) -> Rational {
    psi.coeff(&[XLetter::X1])
}

fn eps_gamma_v1(c: &mut TrialContext) -> Result<TrialOutcome> {
    let (psi, a) = (c.lie(), c.v_elem());
    let e1 = w_to_v(&crate::crossed_product::z11_pow(&c.group, c.cap, 1)).scale(&x1_coeff(&psi));
    let ad = &(&e1 * &a) - &(&a * &e1);
    let lie = &CrossedDerivation::new(&psi).gamma_der_v1(&a) - &ad;
    eps_part(&psi, |p| Ok(CrossedAction::new(p)?.gamma_aut_v1(&a)), lie)
}

fn eps_gamma_m10(c: &mut TrialContext) -> Result<TrialOutcome> {
    let (psi, m) = (c.lie(), MElem(c.w_elem()));
    let z = crate::crossed_product::z11_pow(&c.group, c.cap, 1).scale(&x1_coeff(&psi));
    let lie = MElem(&CrossedDerivation::new(&psi).gamma_end_m10(&m).0 - &(&z * &m.0));
    eps_part(&psi, |p| Ok(CrossedAction::new(p)?.gamma_aut_m10(&m)), lie)
}

fn eps_gamma_y(c: &mut TrialContext) -> Result<TrialOutcome> {
    let (psi, y) = (c.lie(), c.y_series());
    let z = crate::crossed_product::z11_pow(&c.group, c.cap, 1).scale(&x1_coeff(&psi));
    let wy = varpi(&y);
    let ad = varpi_inv(&(&(&z * &wy) - &(&wy * &z)));
    let lie = &CrossedDerivation::new(&psi).gamma_d_y_explicit(&y) - &ad;
    eps_part(&psi, |p| Ok(CrossedAction::new(p)?.gamma_aut_y_explicit(&y)), lie)
}

fn eps_gamma_s_y(c: &mut TrialContext) -> Result<TrialOutcome> {
    let (psi, m) = (c.lie(), c.y_series());
    let x1 = XSeries::letter(&c.group, c.cap, XLetter::X1).scale(&x1_coeff(&psi));
    let left = pi_y(&(&x1 * &y_inject(&m)));
    let lie = &gamma_s_y_lie(&psi, &m)? - &left;
    eps_part(&psi, |p| gamma_s_y(p, &m), lie)
}

// ---- negative control ------------------------------------------------------

/// `S_Ψ = ℓ_Ψ ∘ aut_Ψ` is not multiplicative: for `Ψ = exp(x1 + ...)` and
/// degree-1 `a, b`, `S_Ψ(ab) - S_Ψ(a)S_Ψ(b) = -Ψ aut_Ψ(a) (Ψ - 1) aut_Ψ(b)`
/// is nonzero in degree 3.
fn fixture_s_multiplicative(c: &mut TrialContext) -> Result<TrialOutcome> {
    let x1 = XSeries::letter(&c.group, c.cap, XLetter::X1);
    let psi = (&x1 + &c.lie()).exp()?;
    let (a, b) = (c.x_series(1), c.x_series(1));
    let lhs = s_big(&psi, &(&a * &b))?;
    let rhs = &s_big(&psi, &a)? * &s_big(&psi, &b)?;
    Ok(expect_eq(&[("Ψ", &psi), ("a", &a), ("b", &b)], &lhs, &rhs))
}

/// Every suite, in run order.
pub fn all_suites() -> Vec<Suite> {
    vec![
        Suite {
            name: "delta-tg",
            summary: "the unshuffle coproduct commutes with the group action t_g",
            in_all: true,
            identities: vec![id("Δ∘t_g = t_g⊗t_g∘Δ", delta_tg)],
        },
        Suite {
            name: "commut-t-aut",
            summary: "aut_Ψ commutes with t_g",
            in_all: true,
            identities: vec![id("aut_Ψ∘t_g = t_g∘aut_Ψ", commut_t_aut)],
        },
        Suite {
            name: "group-morphs",
            summary: "aut and S turn ⊛ into composition",
            in_all: true,
            identities: vec![
                id("aut_{Ψ⊛Φ} = aut_Ψ∘aut_Φ", aut_group_morph),
                id("S_{Ψ⊛Φ} = S_Ψ∘S_Φ", s_group_morph),
            ],
        },
        Suite {
            name: "gamma-aut",
            summary: "Γ is multiplicative for ⊛",
            in_all: true,
            identities: vec![id("Γ_{Ψ⊛Φ} = Γ_Ψ·Γ_Φ", gamma_aut)],
        },
        Suite {
            name: "rel-aut-alg-mod",
            summary: "module and algebra twisted automorphisms braid",
            in_all: true,
            identities: vec![
                id("aut^(10)(ab) = aut^(10)(a)·aut^(0)(b)", rel_aut_v10_v0),
                id("aut^(10)(ab) = aut^(1)(a)·aut^(10)(b)", rel_aut_v1_v10),
            ],
        },
        Suite {
            name: "compat-mv",
            summary: "aut^{M,(10)} is semilinear over aut^{V,(1)}",
            in_all: true,
            identities: vec![id("aut^M(a·m) = aut^(1)(a)·aut^M(m)", compat_mv)],
        },
        Suite {
            name: "compat-gamma-mv",
            summary: "the Γ-twisted module action is semilinear over the Γ-twisted algebra action",
            in_all: true,
            identities: vec![id("^Γaut^M(a·m) = ^Γaut^(1)(a)·^Γaut^M(m)", compat_gamma_mv)],
        },
        Suite {
            name: "beta-and-q",
            summary: "words ending in x_g map into W through q_Y",
            in_all: true,
            identities: vec![id("(a·x_g, g) = ϖ(q_Y(a·x_g))", beta_and_q)],
        },
        Suite {
            name: "gamma-s-s-theta",
            summary: "the γ-corrected infinitesimal action is s^Y at θ(ψ)",
            in_all: true,
            identities: vec![id("^γs^Y_ψ = s^Y_{θ(ψ)}", gamma_s_s_theta)],
        },
        Suite {
            name: "iso-vg",
            summary: "representation round trips of the crossed product, W and M",
            in_all: true,
            identities: vec![
                id("e-basis coordinates round trip", iso_basis_round_trip),
                id("W → V → W round trip", iso_w_round_trip),
                id("W → V is multiplicative", iso_w_morphism),
                id("ϖ and κ round trips", iso_varpi_kappa_round_trip),
                id("x_g ↦ -g·e1·g⁻¹", iso_generator_images),
            ],
        },
        Suite {
            name: "link-ef0-yad",
            summary: "the Γ-corrected action is S^Y at Θ(Ψ)",
            in_all: true,
            identities: vec![id("^ΓS^Y_Ψ = S^Y_{Θ(Ψ)}", link_ef0_yad)],
        },
        Suite {
            name: "explicit-auty",
            summary: "the two constructions of ^Γaut^Y agree",
            in_all: true,
            identities: vec![id("ϖ⁻¹∘^Γaut^W∘ϖ = explicit formula", explicit_auty)],
        },
        Suite {
            name: "link-gammasy-gammaautm10",
            summary: "κ intertwines the quotient-module actions with the M actions",
            in_all: true,
            identities: vec![
                id("κ∘^ΓS^Y = ^Γaut^M∘κ", link_gammasy_gammaautm10),
                id("κ∘S^Y = aut^M∘κ", link_sy_autm10),
            ],
        },
        Suite {
            name: "action-laws",
            summary: "twisted actions are ⊛-actions",
            in_all: true,
            identities: vec![
                id("aut^(1)_{Ψ⊛Φ} = aut^(1)_Ψ∘aut^(1)_Φ", action_law_v1),
                id("^Γaut^M_{Ψ⊛Φ} = ^Γaut^M_Ψ∘^Γaut^M_Φ", action_law_gamma_m10),
            ],
        },
        Suite {
            name: "diag-coproduct-mod",
            summary: "the quotient coproduct is transported from the harmonic coproduct and is a module coproduct",
            in_all: true,
            identities: vec![id("Δ★mod(π_Y(y·m)) = Δ★alg(y)·Δ★mod(m)", diag_coproduct_mod)],
        },
        Suite {
            name: "diag-iso-mg",
            summary: "κ and ϖ commute with the projections onto M",
            in_all: true,
            identities: vec![
                id("κ(π_Y a) = (a ⊗ 1)·1_M", diag_iso_mg),
                id("ϖ(y)·1_M = κ∘q̄⁻¹∘π_Y(y)", diag_projections),
            ],
        },
        Suite {
            name: "diag-delta-w-m",
            summary: "Δ^M is transported from Δ^W, compatibly with the module structure, and ϖ carries Δ★alg to Δ^W",
            in_all: true,
            identities: vec![
                id("Δ^M(w·1_M) = Δ^W(w)", diag_delta_w_m),
                id("Δ^M(w·m) = Δ^W(w)·Δ^M(m)", compat_delta_w_m),
                id("Δ^W∘ϖ = ϖ⊗ϖ∘Δ★alg", link_delta_w_star),
            ],
        },
        Suite {
            name: "diag-beta-auts",
            summary: "aut^{V,(0)} is aut_Ψ ⊗ id on the crossed product",
            in_all: true,
            identities: vec![id("aut^(0)(a ⊗ g) = aut_Ψ(a) ⊗ g", diag_beta_auts)],
        },
        Suite {
            name: "axioms",
            summary: "group law, bracket and exponential",
            in_all: true,
            identities: vec![
                id("⊛ is associative", law_associative),
                id("1 is a two-sided ⊛-unit", law_unit),
                id("⊛-inverse is two-sided", law_inverse),
                id("⟨ψ,φ⟩ = -⟨φ,ψ⟩", bracket_antisymmetric),
                id("Jacobi identity for ⟨·,·⟩", bracket_jacobi),
                id("exp_⊛ and log_⊛ are inverse", exp_log_inverse),
                id("S_{exp ψ} = exp(s_ψ)", exp_intertwines),
                id("exp(cbh(ψ,φ)) = exp ψ ⊛ exp φ", cbh_intertwines),
                id("cbh(ψ,φ) = ψ + φ + ⟨ψ,φ⟩/2 up to degree 2", cbh_degree_two),
            ],
        },
        Suite {
            name: "stab-inclusion",
            summary: "exponentials of stab_mod elements lie in Stab(Δ^M) and Stab(Δ^W)",
            in_all: true,
            identities: vec![id("Stab(Δ^M) ⊆ Stab(Δ^W) on sampled members", stab_inclusion)],
        },
        Suite {
            name: "stab-agreement",
            summary: "crossed-product and word-algebra stabilizer tests agree",
            in_all: true,
            identities: vec![
                id("Stab(Δ^M) verdict = Stab(Δ★mod) verdict", agree_m_mod),
                id("Stab(Δ^W) verdict = Stab(Δ★alg) verdict", agree_w_alg),
            ],
        },
        Suite {
            name: "perturbation",
            summary: "Lie-side operators are the first-order parts of the group-side actions",
            in_all: true,
            identities: vec![
                id("d/dε aut^(0) = der^(0)", eps_v0),
                id("d/dε aut^(1) = der^(1)", eps_v1),
                id("d/dε aut^(10) = end^(10)", eps_v10),
                id("d/dε aut^M = end^M", eps_m10),
                id("d/dε ^Γaut^(1) = ^γder^(1) - (ψ|x1)·ad_{z11}", eps_gamma_v1),
                id("d/dε ^Γaut^M = ^γend^M - (ψ|x1)·ℓ_{z11}", eps_gamma_m10),
                id("d/dε ^Γaut^Y = ^γd^Y - (ψ|x1)·ad_{y11}", eps_gamma_y),
                id("d/dε ^ΓS^Y = ^γs^Y - (ψ|x1)·ℓ_{x1}", eps_gamma_s_y),
            ],
        },
        Suite {
            name: "fixture-fail",
            summary: "negative control: asserts that S_Ψ is multiplicative, must fail",
            in_all: false,
            identities: vec![id("S_Ψ(ab) = S_Ψ(a)·S_Ψ(b) (false)", fixture_s_multiplicative)],
        },
    ]
}

/// Run parameters.
#[derive(Debug, Clone)]
pub struct SuiteConfig {
    pub group: GroupSpec,
    pub cap: usize,
    pub seed: u64,
    pub trials: usize,
}

/// Outcome of one identity over all trials.
#[derive(Debug, Clone)]
pub struct IdentityOutcome {
    pub suite: &'static str,
    pub identity: &'static str,
    /// Trials run, including the failing one.
    pub trials: usize,
    pub dump: Option<String>,
}

impl IdentityOutcome {
    pub fn passed(&self) -> bool {
        self.dump.is_none()
    }
}

/// Outcomes of a suite run.
#[derive(Debug, Clone)]
pub struct VerifyReport {
    pub config: SuiteConfig,
    pub outcomes: Vec<IdentityOutcome>,
}

impl VerifyReport {
    pub fn all_passed(&self) -> bool {
        self.outcomes.iter().all(|o| o.passed())
    }

    pub fn failures(&self) -> usize {
        self.outcomes.iter().filter(|o| !o.passed()).count()
    }
}

impl fmt::Display for VerifyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "verify-report v1")?;
        writeln!(f, "group: {}", self.config.group)?;
        writeln!(f, "cap: {}", self.config.cap)?;
        writeln!(f, "seed: {}", self.config.seed)?;
        writeln!(f, "trials: {}", self.config.trials)?;
        for o in &self.outcomes {
            match &o.dump {
                None => writeln!(f, "[pass] {} :: {} ({} trials)", o.suite, o.identity, o.trials)?,
                Some(d) => {
                    writeln!(f, "[FAIL] {} :: {} (trial {})", o.suite, o.identity, o.trials)?;
                    write!(f, "{d}")?;
                    if !d.ends_with('\n') {
                        writeln!(f)?;
                    }
                }
            }
        }
        writeln!(f, "summary: {} passed, {} failed", self.outcomes.len() - self.failures(), self.failures())
    }
}

/// Stable 64-bit FNV-1a hash, for per-identity seeds.
fn fnv1a(s: &str) -> u64 {
    let mut h: u64 = 0xcbf2_9ce4_8422_2325;
    for b in s.bytes() {
        h ^= b as u64;
        h = h.wrapping_mul(0x0100_0000_01b3);
    }
    h
}

/// Suites selected by name; `all` selects every suite except the negative
/// control.
pub fn select_suites(name: &str) -> Result<Vec<Suite>> {
    let suites = all_suites();
    if name == "all" {
        return Ok(suites.into_iter().filter(|s| s.in_all).collect());
    }
    let known: Vec<&str> = suites.iter().map(|s| s.name).collect();
    let picked: Vec<Suite> = suites.into_iter().filter(|s| s.name == name).collect();
    if picked.is_empty() {
        return Err(crate::AlgebraError::Unsupported(format!(
            "unknown suite '{name}'; known suites: all, {}",
            known.join(", ")
        )));
    }
    Ok(picked)
}

/// Runs `trials` trials of every identity in `suites`, stopping an identity
/// at its first failure. An operation error counts as a failure.
pub fn run_suites(suites: &[Suite], config: &SuiteConfig) -> Result<VerifyReport> {
    if config.cap < 2 {
        return Err(crate::AlgebraError::Domain("identity suites need cap ≥ 2".into()));
    }
    let mut outcomes = Vec::new();
    for suite in suites {
        for identity in &suite.identities {
            let seed = config.seed ^ fnv1a(&format!("{}/{}", suite.name, identity.name));
            let mut ctx = TrialContext::new(&config.group, config.cap, seed);
            let mut outcome =
                IdentityOutcome { suite: suite.name, identity: identity.name, trials: 0, dump: None };
            for _ in 0..config.trials {
                outcome.trials += 1;
                let dump = match (identity.check)(&mut ctx) {
                    Ok(d) => d,
                    Err(e) => Some(format!("  error: {e}\n")),
                };
                if dump.is_some() {
                    outcome.dump = dump;
                    break;
                }
            }
            outcomes.push(outcome);
        }
    }
    Ok(VerifyReport { config: config.clone(), outcomes })
}
