//! The linear membership conditions for `dmr0`, `stab(Δ★mod)` and
//! `stab(Δ★alg)`, assembled degree by degree as exact matrices in Lyndon
//! coordinates, with kernels, dimensions and subspace containments.
//!
//! Each column is the condition defect of one Lyndon basis element, obtained
//! by applying the exact operator from `lie_side`; rows are the coefficients
//! of the defect on a spanning set of output words. The conditions are
//! linear in `ψ`, so the kernel is the graded piece of the Lie algebra up to
//! the truncation cap.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_traits::Zero;
use rayon::prelude::*;

use crate::error::{AlgebraError, Result};
use crate::foundations::rational::{format_rational, sign, Rational};
use crate::foundations::{matrix_nullspace, subspace_contained, GroupSpec, QMatrix};
use crate::lie_side::{
    dmr0_lie_membership, lyndon_basis_ordered, psi_star_lie, stab_alg_lie_membership,
    stab_mod_lie_membership, tensor_derivation, CrossedDerivation, LyndonBasis, SY,
};
use crate::racinet_group::y_basis;
use crate::verdict::Verdict;
use crate::word_algebras::{
    delta_star_mod, harmonic_generator_image, word_degree, y_harmonic_coproduct, y_letters, Tensor,
    XLetter, YLetter, YSeries, YWord,
};

/// Condition family.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    Dmr0,
    StabMod,
    StabAlg,
}

impl Family {
    pub fn tag(self) -> &'static str {
        match self {
            Family::Dmr0 => "dmr0",
            Family::StabMod => "stab_mod",
            Family::StabAlg => "stab_alg",
        }
    }

    pub fn parse(s: &str) -> Result<Self> {
        match s {
            "dmr0" => Ok(Family::Dmr0),
            "stab_mod" | "stab-mod" => Ok(Family::StabMod),
            "stab_alg" | "stab-alg" => Ok(Family::StabAlg),
            _ => Err(AlgebraError::Unsupported(format!("unknown condition family '{s}'"))),
        }
    }

    pub const ALL: [Family; 3] = [Family::Dmr0, Family::StabMod, Family::StabAlg];
}

/// Row index of a condition matrix.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
enum RowKey {
    Scalar(u8, YWord),
    Tensor(YWord, YWord, YWord),
}

type Defect = BTreeMap<RowKey, Rational>;

fn add_tensor(out: &mut Defect, source: &YWord, t: &Tensor<YLetter>) {
    for ((u, v), c) in t.terms() {
        *out.entry(RowKey::Tensor(source.clone(), u.clone(), v.clone())).or_insert_with(Rational::zero) += c;
    }
}

fn dmr0_defect(psi: &crate::word_algebras::XSeries) -> Defect {
    let group = psi.group();
    let cap = psi.cap();
    let mut out = Defect::new();
    out.insert(RowKey::Scalar(0, YWord::new()), psi.coeff(&[XLetter::X0]));
    out.insert(RowKey::Scalar(1, YWord::new()), psi.coeff(&[XLetter::X1]));
    let star = psi_star_lie(psi);
    let one = YSeries::one(group, cap);
    let prim = &(&delta_star_mod(&star) - &Tensor::from_pair(&star, &one).expect("same cap"))
        - &Tensor::from_pair(&one, &star).expect("same cap");
    add_tensor(&mut out, &YWord::new(), &prim);
    let pairs: Vec<(usize, usize)> = match group.order() {
        1 => (1..=cap).map(|n| (n, 0)).collect(),
        2 => if cap >= 2 { vec![(2, 0)] } else { vec![] },
        k => (0..k).map(|g| (1, g)).collect(),
    };
    for (n, g) in pairs {
        let y = YLetter::new(n, g);
        let yi = YLetter::new(n, group.inv_idx(g));
        let d = star.coeff(&[y]) - sign(n - 1) * star.coeff(&[yi]);
        out.insert(RowKey::Scalar(2, smallvec::smallvec![y]), d);
    }
    out
}

fn stab_mod_defect(psi: &crate::word_algebras::XSeries, n: usize) -> Defect {
    let group = psi.group();
    let cap = psi.cap();
    let op = SY::new(psi);
    let words: Vec<YWord> = y_basis(group, cap).into_iter().filter(|w| word_degree(w) + n <= cap).collect();
    let images: HashMap<YWord, YSeries> = words.iter().map(|w| (w.clone(), op.gamma_s_y_word(w))).collect();
    let mut out = Defect::new();
    for w in &words {
        let single = YSeries::monomial(group, cap, w.clone(), num_traits::One::one());
        let lhs = tensor_derivation(&delta_star_mod(&single), |u| images[u].clone());
        add_tensor(&mut out, w, &(&lhs - &delta_star_mod(&images[w])));
    }
    out
}

fn stab_alg_defect(psi: &crate::word_algebras::XSeries, n: usize) -> Defect {
    let group = psi.group();
    let cap = psi.cap();
    let op = CrossedDerivation::new(psi);
    let letters: Vec<YLetter> = y_letters(group, cap).into_iter().filter(|l| l.n as usize + n <= cap).collect();
    let images: HashMap<YLetter, YSeries> = letters.iter().map(|&l| (l, op.gamma_d_y_generator(l))).collect();
    let mut out = Defect::new();
    for &l in &letters {
        let gen = harmonic_generator_image(group, cap, l.n as usize, l.g as usize, YLetter::new);
        let lhs = tensor_derivation(&gen, |u| {
            if u.is_empty() {
                YSeries::zero(group, cap)
            } else {
                images[&u[0]].clone()
            }
        });
        add_tensor(&mut out, &smallvec::smallvec![l], &(&lhs - &y_harmonic_coproduct(&images[&l])));
    }
    out
}

fn defect(family: Family, psi: &crate::word_algebras::XSeries, n: usize) -> Defect {
    match family {
        Family::Dmr0 => dmr0_defect(psi),
        Family::StabMod => stab_mod_defect(psi, n),
        Family::StabAlg => stab_alg_defect(psi, n),
    }
}

fn check_request(family: Family, n: usize, group: &GroupSpec, cap: usize) -> Result<()> {
    if n == 0 || n > cap {
        return Err(AlgebraError::Domain(format!("degree {n} must satisfy 1 ≤ n ≤ cap = {cap}")));
    }
    if family == Family::Dmr0 && !group.is_cyclic() {
        return Err(AlgebraError::Unsupported(format!("dmr0 needs a cyclic group, got {group}")));
    }
    Ok(())
}

/// Condition matrix in the coordinates of a given Lyndon basis.
pub fn condition_matrix_for(family: Family, basis: &LyndonBasis) -> QMatrix {
    let n = basis.degree;
    let columns: Vec<Defect> = basis.expansions.par_iter().map(|e| defect(family, e, n)).collect();
    let mut rows: BTreeMap<&RowKey, Vec<Rational>> = BTreeMap::new();
    for (j, col) in columns.iter().enumerate() {
        for (k, c) in col {
            if !c.is_zero() {
                rows.entry(k).or_insert_with(|| vec![Rational::zero(); columns.len()])[j] = c.clone();
            }
        }
    }
    let rows: Vec<Vec<Rational>> = rows.into_values().collect();
    QMatrix::from_rows(columns.len(), &rows).expect("rows have the basis length")
}

/// Condition matrix for `family` on the degree-`n` piece, natural letter order.
pub fn condition_matrix(family: Family, n: usize, group: &GroupSpec, cap: usize) -> Result<QMatrix> {
    check_request(family, n, group, cap)?;
    let order: Vec<usize> = (0..=group.order()).collect();
    Ok(condition_matrix_for(family, &lyndon_basis_ordered(group, n, cap, &order)))
}

/// Kernel of one condition family in one degree.
#[derive(Debug, Clone)]
pub struct GradedKernelReport {
    pub group: GroupSpec,
    pub cap: usize,
    pub degree: usize,
    pub family: Family,
    pub dimension: usize,
    /// Lyndon basis labels, e.g. `[x0,x[1]]`.
    pub coordinates: Vec<String>,
    /// Kernel basis in Lyndon coordinates.
    pub basis: Vec<Vec<Rational>>,
    /// Whether every kernel vector passed the membership operation.
    pub reverified: bool,
}

impl fmt::Display for GradedKernelReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "kernel-report v1")?;
        writeln!(f, "group: {}", self.group)?;
        writeln!(f, "cap: {}", self.cap)?;
        writeln!(f, "degree: {}", self.degree)?;
        writeln!(f, "family: {}", self.family.tag())?;
        writeln!(f, "dimension: {}", self.dimension)?;
        writeln!(f, "reverified: {}", self.reverified)?;
        writeln!(f, "coordinates: {}", self.coordinates.join(" "))?;
        for v in &self.basis {
            let parts: Vec<String> = v.iter().map(format_rational).collect();
            writeln!(f, "vector: {}", parts.join(" "))?;
        }
        Ok(())
    }
}

/// Runs the membership operation matching `family` on an expanded vector.
pub fn membership(family: Family, psi: &crate::word_algebras::XSeries) -> Result<Verdict> {
    match family {
        Family::Dmr0 => dmr0_lie_membership(psi),
        Family::StabMod => stab_mod_lie_membership(psi),
        Family::StabAlg => stab_alg_lie_membership(psi),
    }
}

/// Kernel, dimension, and re-verification of each kernel vector.
pub fn kernel_report(family: Family, n: usize, group: &GroupSpec, cap: usize) -> Result<GradedKernelReport> {
    check_request(family, n, group, cap)?;
    let order: Vec<usize> = (0..=group.order()).collect();
    let basis = lyndon_basis_ordered(group, n, cap, &order);
    let kernel = matrix_nullspace(&condition_matrix_for(family, &basis));
    let mut reverified = true;
    for v in &kernel {
        if !membership(family, &basis.combine(v))?.is_member() {
            reverified = false;
        }
    }
    Ok(GradedKernelReport {
        group: group.clone(),
        cap,
        degree: n,
        family,
        dimension: kernel.len(),
        coordinates: basis.labels.clone(),
        basis: kernel,
        reverified,
    })
}

/// Kernel dimension for a permuted alphabet order.
pub fn kernel_dimension_with_order(
    family: Family,
    n: usize,
    group: &GroupSpec,
    cap: usize,
    order: &[usize],
) -> Result<usize> {
    check_request(family, n, group, cap)?;
    Ok(matrix_nullspace(&condition_matrix_for(family, &lyndon_basis_ordered(group, n, cap, order))).len())
}

/// `kernel(stab_mod) ⊆ kernel(stab_alg)` and, for cyclic `G`,
/// `kernel(dmr0) ⊆ kernel(stab_mod)` in degree `n`.
pub fn inclusion_check(n: usize, group: &GroupSpec, cap: usize) -> Result<Verdict> {
    let km = kernel_report(Family::StabMod, n, group, cap)?;
    let ka = kernel_report(Family::StabAlg, n, group, cap)?;
    let mut v = Verdict::new(format!("inclusions in degree {n}"));
    v.record("stab_mod ⊆ stab_alg", subspace_contained(&km.basis, &ka.basis)?, || {
        format!("dim stab_mod = {}, dim stab_alg = {}", km.dimension, ka.dimension)
    });
    if group.is_cyclic() {
        let kd = kernel_report(Family::Dmr0, n, group, cap)?;
        v.record("dmr0 ⊆ stab_mod", subspace_contained(&kd.basis, &km.basis)?, || {
            format!("dim dmr0 = {}, dim stab_mod = {}", kd.dimension, km.dimension)
        });
    }
    Ok(v)
}

/// Containment of two kernels given by their condition matrices, for
/// fixtures that modify a matrix before comparing.
pub fn kernels_contained(a: &QMatrix, b: &QMatrix) -> Result<bool> {
    subspace_contained(&matrix_nullspace(a), &matrix_nullspace(b))
}
