//! The crossed product `k⟨⟨X⟩⟩ ⋊ G`, its subalgebra `W` freely generated by
//! the `z_{n,g}`, and the rank-one module `M`.
//!
//! An element is stored as one `X` series per group element:
//! `a = Σ_g a_g ⊗ g`, with `(a ⊗ g)(b ⊗ h) = a t_g(b) ⊗ gh`.

use std::collections::BTreeMap;

use num_traits::{One, Zero};

use crate::error::{AlgebraError, Result};
use crate::foundations::rational::{sign, Rational};
use crate::foundations::GroupSpec;
use crate::word_algebras::series::{check_compat, coproduct_by_generators};
use crate::word_algebras::{
    harmonic_generator_image, t_action, t_letter, Series, Tensor,
    XLetter, XSeries, XWord, YLetter, YSeries, ZLetter, ZWord,
};

pub type WElem = Series<ZLetter>;
pub type ZTensor = Tensor<ZLetter>;

/// Element of the module `M`, represented by the `W` element `w` with
/// `m = w · 1_M`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MElem(pub WElem);

impl MElem {
    pub fn as_w(&self) -> &WElem {
        &self.0
    }

    /// `1_M`.
    pub fn unit(group: &GroupSpec, cap: usize) -> Self {
        MElem(WElem::one(group, cap))
    }

    /// `w · m`.
    pub fn act(w: &WElem, m: &MElem) -> Result<MElem> {
        Ok(MElem(w.try_mul(&m.0)?))
    }
}

/// Element of `k⟨⟨X⟩⟩ ⋊ G`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VElem {
    group: GroupSpec,
    cap: usize,
    comps: Vec<XSeries>,
}

impl VElem {
    pub fn zero(group: &GroupSpec, cap: usize) -> Self {
        VElem { group: group.clone(), cap, comps: vec![XSeries::zero(group, cap); group.order()] }
    }

    /// `1 ⊗ 1`.
    pub fn one(group: &GroupSpec, cap: usize) -> Self {
        Self::grp(group, cap, 0)
    }

    /// `a ⊗ g` for the element of index `g`.
    pub fn from_pair(a: &XSeries, g: usize) -> Self {
        let mut v = Self::zero(a.group(), a.cap());
        v.comps[g] = a.clone();
        v
    }

    /// `a ⊗ 1`.
    pub fn from_x(a: &XSeries) -> Self {
        Self::from_pair(a, 0)
    }

    /// `1 ⊗ g`.
    pub fn grp(group: &GroupSpec, cap: usize, g: usize) -> Self {
        Self::from_pair(&XSeries::one(group, cap), g)
    }

    /// `e0 = x0 ⊗ 1`.
    pub fn e0(group: &GroupSpec, cap: usize) -> Self {
        Self::from_x(&XSeries::letter(group, cap, XLetter::X0))
    }

    /// `e1 = -x1 ⊗ 1`.
    pub fn e1(group: &GroupSpec, cap: usize) -> Self {
        Self::from_x(&-&XSeries::letter(group, cap, XLetter::X1))
    }

    pub fn group(&self) -> &GroupSpec {
        &self.group
    }

    pub fn cap(&self) -> usize {
        self.cap
    }

    /// Component `a_g` of `Σ a_g ⊗ g`.
    pub fn comp(&self, g: usize) -> &XSeries {
        &self.comps[g]
    }

    pub fn is_zero(&self) -> bool {
        self.comps.iter().all(|c| c.is_zero())
    }

    /// Number of stored `(word, g)` terms.
    pub fn len(&self) -> usize {
        self.comps.iter().map(|c| c.len()).sum()
    }

    /// All `(word, g, coefficient)` terms.
    pub fn terms(&self) -> impl Iterator<Item = (&XWord, usize, &Rational)> {
        self.comps.iter().enumerate().flat_map(|(g, s)| s.terms().map(move |(w, c)| (w, g, c)))
    }

    fn check(&self, other: &Self) -> Result<()> {
        check_compat(&self.group, self.cap, &other.group, other.cap)
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(VElem {
            group: self.group.clone(),
            cap: self.cap,
            comps: self.comps.iter().zip(&other.comps).map(|(a, b)| a + b).collect(),
        })
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(VElem {
            group: self.group.clone(),
            cap: self.cap,
            comps: self.comps.iter().zip(&other.comps).map(|(a, b)| a - b).collect(),
        })
    }

    pub fn scale(&self, c: &Rational) -> Self {
        VElem {
            group: self.group.clone(),
            cap: self.cap,
            comps: self.comps.iter().map(|a| a.scale(c)).collect(),
        }
    }

    /// Crossed-product multiplication, truncated.
    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let mut out = Self::zero(&self.group, self.cap);
        for (g, a) in self.comps.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (h, b) in other.comps.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                let gh = self.group.mul_idx(g, h);
                let prod = a * &t_action(g, b);
                out.comps[gh].add_scaled(&prod, &Rational::one())?;
            }
        }
        Ok(out)
    }

    /// Applies a map to every component: `Σ a_g ⊗ g ↦ Σ f(a_g) ⊗ g`.
    pub fn map_comps(&self, mut f: impl FnMut(&XSeries) -> XSeries) -> Self {
        VElem { group: self.group.clone(), cap: self.cap, comps: self.comps.iter().map(|a| f(a)).collect() }
    }

    pub fn display(&self) -> String {
        let parts: Vec<String> = self
            .comps
            .iter()
            .enumerate()
            .filter(|(_, a)| !a.is_zero())
            .map(|(g, a)| format!("({}) ⊗ {}", a.display(), self.group.element(g)))
            .collect();
        if parts.is_empty() {
            "0".into()
        } else {
            parts.join(" + ")
        }
    }
}

impl std::ops::Add for &VElem {
    type Output = VElem;
    fn add(self, rhs: Self) -> VElem {
        self.try_add(rhs).expect("crossed-product sum")
    }
}

impl std::ops::Sub for &VElem {
    type Output = VElem;
    fn sub(self, rhs: Self) -> VElem {
        self.try_sub(rhs).expect("crossed-product difference")
    }
}

impl std::ops::Mul for &VElem {
    type Output = VElem;
    fn mul(self, rhs: Self) -> VElem {
        self.try_mul(rhs).expect("crossed-product product")
    }
}

/// Index of a basis element `e0^{n1-1} g1 e1 ⋯ e0^{nr-1} gr e1 e0^{n_{r+1}-1} g_{r+1}`:
/// `ns = (n1, ..., n_{r+1})`, `gs = (g1, ..., g_{r+1})` as element indices.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct EBasisKey {
    pub ns: Vec<u8>,
    pub gs: Vec<u8>,
}

impl EBasisKey {
    /// Number `r` of `e1` letters.
    pub fn r(&self) -> usize {
        self.ns.len() - 1
    }
}

/// Coordinates in the `e0 / g e1` word basis.
///
/// The term `x0^{n1-1} x_{h1} ⋯ x0^{nr-1} x_{hr} x0^{n_{r+1}-1} ⊗ k` equals
/// `(-1)^r` times the basis element with `g1 = h1`, `g_i = h_i h_{i-1}^{-1}`
/// and `g_{r+1} = k h_r^{-1}`.
pub fn canonical_basis(a: &VElem) -> BTreeMap<EBasisKey, Rational> {
    let group = a.group();
    let mut out = BTreeMap::new();
    for (w, k, c) in a.terms() {
        let mut ns = Vec::new();
        let mut gs = Vec::new();
        let mut run = 1u8;
        let mut prev = 0usize;
        for &l in w.iter() {
            match l.group_index() {
                None => run += 1,
                Some(h) => {
                    ns.push(run);
                    gs.push(group.div_idx(h, prev) as u8);
                    prev = h;
                    run = 1;
                }
            }
        }
        let r = ns.len();
        ns.push(run);
        gs.push(group.div_idx(k, prev) as u8);
        *out.entry(EBasisKey { ns, gs }).or_insert_with(Rational::zero) += sign(r) * c;
    }
    out.retain(|_, c| !c.is_zero());
    out
}

/// Inverse of [`canonical_basis`].
pub fn from_canonical_basis(
    group: &GroupSpec,
    cap: usize,
    coords: &BTreeMap<EBasisKey, Rational>,
) -> Result<VElem> {
    let mut v = VElem::zero(group, cap);
    for (key, c) in coords {
        if key.ns.len() != key.gs.len() || key.ns.is_empty() || key.ns.iter().any(|&n| n == 0) {
            return Err(AlgebraError::Structural(format!("malformed basis key {key:?}")));
        }
        let r = key.r();
        let mut w = XWord::new();
        let mut h = 0usize;
        for i in 0..r {
            for _ in 1..key.ns[i] {
                w.push(XLetter::X0);
            }
            h = group.mul_idx(h, key.gs[i] as usize);
            w.push(XLetter::g(h));
        }
        for _ in 1..key.ns[r] {
            w.push(XLetter::X0);
        }
        let k = group.mul_idx(h, key.gs[r] as usize);
        v.comps[k].add_term(w, sign(r) * c);
    }
    Ok(v)
}

/// Image of a `z`-word: `z_{n,g} ↦ -e0^{n-1} g e1 = x0^{n-1} x_g ⊗ g`.
pub fn z_word_to_pair(group: &GroupSpec, w: &[ZLetter]) -> (XWord, usize) {
    let mut word = XWord::new();
    let mut acc = 0usize;
    for z in w {
        for _ in 1..z.n {
            word.push(XLetter::X0);
        }
        word.push(t_letter(group, acc, XLetter::g(z.g as usize)));
        acc = group.mul_idx(acc, z.g as usize);
    }
    (word, acc)
}

/// Inclusion `W → V` (an algebra morphism).
pub fn w_to_v(w: &WElem) -> VElem {
    let group = w.group();
    let mut v = VElem::zero(group, w.cap());
    for (zw, c) in w.terms() {
        let (xw, g) = z_word_to_pair(group, zw);
        v.comps[g].add_term(xw, c.clone());
    }
    v
}

/// Pulls an element of `k ⊕ V e1` back to `W`; errors if it lies outside.
pub fn v_to_w(v: &VElem) -> Result<WElem> {
    let group = v.group().clone();
    let mut out = WElem::zero(&group, v.cap());
    for (key, c) in canonical_basis(v) {
        let r = key.r();
        let in_w = if r == 0 {
            key.ns[0] == 1 && key.gs[0] == 0
        } else {
            key.ns[r] == 1 && key.gs[r] == 0
        };
        if !in_w {
            return Err(AlgebraError::Internal(format!(
                "element has a component outside k ⊕ V e1 (basis key {key:?})"
            )));
        }
        out.add_term(basis_key_to_z(&key), sign(r) * c);
    }
    Ok(out)
}

fn basis_key_to_z(key: &EBasisKey) -> ZWord {
    (0..key.r()).map(|i| ZLetter::new(key.ns[i] as usize, key.gs[i] as usize)).collect()
}

/// Projection `V → M`, `v ↦ v · 1_M`: basis elements with a trailing `e0`
/// vanish, the trailing group element is forgotten, and the rest is
/// `(-1)^r z_{n1,g1} ⋯ z_{nr,gr}`.
pub fn m_project(v: &VElem) -> MElem {
    let mut out = WElem::zero(v.group(), v.cap());
    for (key, c) in canonical_basis(v) {
        let r = key.r();
        if key.ns[r] != 1 {
            continue;
        }
        out.add_term(basis_key_to_z(&key), sign(r) * c);
    }
    MElem(out)
}

/// `ϖ : y_{n,g} ↦ z_{n,g}` (an algebra isomorphism `k⟨⟨Y⟩⟩ → W`).
pub fn varpi(y: &YSeries) -> WElem {
    y.map_letters(|l| ZLetter::new(l.n as usize, l.g as usize))
}

pub fn varpi_inv(w: &WElem) -> YSeries {
    w.map_letters(|l| YLetter::new(l.n as usize, l.g as usize))
}

/// The module isomorphism from the quotient (in `Y` form, after `q̄^{-1}`)
/// to `M`: the same renaming `y_{n,g} ↦ z_{n,g}`.
pub fn kappa(m: &YSeries) -> MElem {
    MElem(varpi(m))
}

pub fn kappa_inv(m: &MElem) -> YSeries {
    varpi_inv(&m.0)
}

/// Coproduct of `W`: on generators the harmonic formula in `z`, extended
/// multiplicatively.
pub fn delta_w(w: &WElem) -> ZTensor {
    let group = w.group().clone();
    let cap = w.cap();
    coproduct_by_generators(w, |z| delta_w_generator(&group, cap, z))
}

/// Coproduct of `M`, transported from `W` along `w ↦ w · 1_M`.
pub fn delta_m(m: &MElem) -> ZTensor {
    delta_w(&m.0)
}

/// `z_{1,1}^k`.
pub fn z11_pow(group: &GroupSpec, cap: usize, k: usize) -> WElem {
    let w: ZWord = std::iter::repeat(ZLetter::new(1, 0)).take(k).collect();
    WElem::monomial(group, cap, w, Rational::one())
}

/// Generator image of the `W` coproduct.
pub fn delta_w_generator(group: &GroupSpec, cap: usize, z: ZLetter) -> ZTensor {
    harmonic_generator_image(group, cap, z.n as usize, z.g as usize, ZLetter::new)
}
