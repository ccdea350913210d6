//! Floating-point multiple L-values, for numeric sanity checks only.
//!
//! `L_{(k1..kr)}(z1..zr) = Σ_{0<m1<...<mr} Π z_j^{m_j} / m_j^{k_j}`, with
//! `z_j = exp(2πi a_j / N)`. Partial sums are recorded at nested checkpoints
//! `M, M/2, M/4, ...` (multiples of `N`) and extrapolated to `M → ∞` by a
//! fit in the tail basis `1, log M / M, 1/M, log M / M², 1/M²`. This is the
//! only floating-point code in the crate.

use num_complex::Complex64;

use crate::error::{AlgebraError, Result};
use crate::foundations::GroupSpec;
use crate::word_algebras::YWord;

/// Number of checkpoints in the extrapolation.
const CHECKPOINTS: usize = 5;

/// One multiple L-value query.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MlvQuery {
    /// Exponents `k1..kr`, all positive.
    pub ks: Vec<u32>,
    /// Root residues `a1..ar`: `z_j = exp(2πi a_j / N)`.
    pub roots: Vec<u32>,
    /// Root order `N ≥ 1`.
    pub order: u32,
    /// Summation bound `M`.
    pub bound: u64,
}

impl MlvQuery {
    /// Multiple zeta value `ζ(k1..kr)` in the `m1 < ... < mr` convention.
    pub fn zeta(ks: &[u32], bound: u64) -> Self {
        MlvQuery { ks: ks.to_vec(), roots: vec![0; ks.len()], order: 1, bound }
    }

    fn validate(&self) -> Result<()> {
        if self.ks.is_empty() || self.ks.len() != self.roots.len() {
            return Err(AlgebraError::Domain("need as many root residues as exponents, at least one".into()));
        }
        if self.ks.contains(&0) || self.order == 0 {
            return Err(AlgebraError::Domain("exponents and the root order must be positive".into()));
        }
        let r = self.ks.len() - 1;
        if self.ks[r] == 1 && self.roots[r] % self.order == 0 {
            return Err(AlgebraError::Domain(
                "divergent series: convergence requires (k_r, z_r) ≠ (1, 1)".into(),
            ));
        }
        if self.bound < (self.order as u64) << (CHECKPOINTS + 4) {
            return Err(AlgebraError::Domain(format!("summation bound {} is too small", self.bound)));
        }
        Ok(())
    }
}

/// Extrapolated value with a crude error estimate.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MlvEstimate {
    pub value: Complex64,
    /// Raw partial sum at the bound.
    pub partial_sum: Complex64,
    /// Gap between the full fit and the fit with one fewer tail term, plus
    /// rounding slack.
    pub error_bound: f64,
}

/// Evaluates the truncated nested sum and extrapolates its tail.
pub fn mlv_eval(query: &MlvQuery) -> Result<MlvEstimate> {
    query.validate()?;
    let n = query.order as u64;
    let roots: Vec<Complex64> = (0..n)
        .map(|k| Complex64::from_polar(1.0, 2.0 * std::f64::consts::PI * k as f64 / n as f64))
        .collect();
    let top = query.bound / n * n;
    let marks: Vec<u64> = (0..CHECKPOINTS).map(|j| (top >> j) / n * n).collect();
    let depth = query.ks.len();
    // running[j] = Σ over 0 < m_1 < ... < m_{j+1} ≤ m of the first j+1 factors.
    let mut running = vec![Complex64::new(0.0, 0.0); depth];
    let mut at_marks = vec![Complex64::new(0.0, 0.0); CHECKPOINTS];
    for m in 1..=top {
        let mf = m as f64;
        for j in (0..depth).rev() {
            let prev = if j == 0 { Complex64::new(1.0, 0.0) } else { running[j - 1] };
            let z = roots[((query.roots[j] as u64 * m) % n) as usize];
            running[j] += z * prev * mf.powi(-(query.ks[j] as i32));
        }
        if let Some(i) = marks.iter().position(|&k| k == m) {
            at_marks[i] = running[depth - 1];
        }
    }
    let full = extrapolate(&marks, &at_marks, CHECKPOINTS);
    let reduced = extrapolate(&marks[1..], &at_marks[1..], CHECKPOINTS - 1);
    let slack = 1e-12 * (1.0 + full.norm());
    Ok(MlvEstimate { value: full, partial_sum: at_marks[0], error_bound: (full - reduced).norm() + slack })
}

fn tail_basis(m: f64, k: usize) -> f64 {
    match k {
        0 => 1.0,
        1 => m.ln() / m,
        2 => 1.0 / m,
        3 => m.ln() / (m * m),
        _ => 1.0 / (m * m),
    }
}

/// Constant term of the interpolant of `values` in the first `terms` tail
/// basis functions, solved by Gaussian elimination with partial pivoting.
fn extrapolate(marks: &[u64], values: &[Complex64], terms: usize) -> Complex64 {
    let mut a: Vec<Vec<f64>> = marks[..terms].iter().map(|&m| (0..terms).map(|k| tail_basis(m as f64, k)).collect()).collect();
    let mut b: Vec<Complex64> = values[..terms].to_vec();
    for col in 0..terms {
        let piv = (col..terms).max_by(|&i, &j| a[i][col].abs().total_cmp(&a[j][col].abs())).expect("nonempty");
        a.swap(col, piv);
        b.swap(col, piv);
        for row in col + 1..terms {
            let f = a[row][col] / a[col][col];
            for k in col..terms {
                a[row][k] -= f * a[col][k];
            }
            let bc = b[col];
            b[row] -= bc * f;
        }
    }
    let mut x = vec![Complex64::new(0.0, 0.0); terms];
    for row in (0..terms).rev() {
        let mut s = b[row];
        for k in row + 1..terms {
            s -= x[k] * a[row][k];
        }
        x[row] = s / a[row][row];
    }
    x[0]
}

/// The query of a `Y` word over `Z/N`: `y_{k1,g1} ⋯ y_{kr,gr}` is read as
/// `L_{(k1..kr)}(z_{g1}..z_{gr})` with `z_g = exp(2πi g / N)`.
pub fn word_query(group: &GroupSpec, w: &YWord, bound: u64) -> Result<MlvQuery> {
    if !group.is_cyclic() {
        return Err(AlgebraError::Unsupported(format!("numeric values need a cyclic group, got {group}")));
    }
    let order = group.order() as u32;
    let roots = w
        .iter()
        .map(|y| group.element(y.g as usize).residues().first().copied().unwrap_or(0))
        .collect();
    Ok(MlvQuery { ks: w.iter().map(|y| y.n as u32).collect(), roots, order, bound })
}
