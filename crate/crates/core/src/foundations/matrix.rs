//! Dense exact matrices over the rationals.
//!
//! Rank and kernels use fraction-free (Bareiss) elimination on an integer
//! copy of the matrix: every row is first scaled by the lcm of its
//! denominators, which does not change the row space.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::rational::Rational;
use crate::error::{AlgebraError, Result};

/// Row-major dense rational matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Rational>,
}

impl QMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        QMatrix { rows, cols, entries: vec![Rational::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Rational::one());
        }
        m
    }

    /// Builds from rows; all rows must have length `cols`.
    pub fn from_rows(cols: usize, rows: &[Vec<Rational>]) -> Result<Self> {
        let mut m = Self::zeros(rows.len(), cols);
        for (i, r) in rows.iter().enumerate() {
            if r.len() != cols {
                return Err(AlgebraError::Structural(format!(
                    "row {i} has length {}, expected {cols}",
                    r.len()
                )));
            }
            for (j, v) in r.iter().enumerate() {
                m.set(i, j, v.clone());
            }
        }
        Ok(m)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Rational {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Rational) {
        self.entries[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[Rational] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    /// `self * v`.
    pub fn apply(&self, v: &[Rational]) -> Result<Vec<Rational>> {
        if v.len() != self.cols {
            return Err(AlgebraError::Structural("vector length differs from column count".into()));
        }
        Ok((0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .filter(|(a, _)| !a.is_zero())
                    .fold(Rational::zero(), |acc, (a, b)| acc + a * b)
            })
            .collect())
    }

    /// Integer rows spanning the same row space, zero rows dropped.
    fn integer_rows(&self) -> Vec<Vec<BigInt>> {
        let mut out = Vec::new();
        for i in 0..self.rows {
            let row = self.row(i);
            if row.iter().all(|x| x.is_zero()) {
                continue;
            }
            let l = row.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
            out.push(row.iter().map(|x| x.numer() * (&l / x.denom())).collect());
        }
        out
    }
}

/// Echelon data from fraction-free elimination.
struct Echelon {
    rows: Vec<Vec<BigInt>>,
    pivots: Vec<usize>,
}

/// Bareiss elimination to row echelon form.
///
/// After step k, every entry below the pivot rows is a k x k minor, so the
/// division by the previous pivot is exact.
fn bareiss(mut a: Vec<Vec<BigInt>>, cols: usize) -> Echelon {
    let nrows = a.len();
    let mut pivots = Vec::new();
    let mut prev = BigInt::one();
    let mut r = 0;
    for c in 0..cols {
        if r == nrows {
            break;
        }
        let Some(p) = (r..nrows).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        let (top, bottom) = a.split_at_mut(r + 1);
        let pr = &top[r];
        for row in bottom.iter_mut() {
            if row[c].is_zero() {
                for x in row.iter_mut().skip(c + 1) {
                    *x = &*x * &pr[c] / &prev;
                }
                continue;
            }
            let f = row[c].clone();
            for j in c + 1..cols {
                let v = &row[j] * &pr[c] - &f * &pr[j];
                row[j] = v / &prev;
            }
            row[c] = BigInt::zero();
        }
        prev = a[r][c].clone();
        pivots.push(c);
        r += 1;
    }
    a.truncate(r);
    Echelon { rows: a, pivots }
}

/// Exact rank.
pub fn matrix_rank(m: &QMatrix) -> usize {
    bareiss(m.integer_rows(), m.cols).pivots.len()
}

/// Basis of the right kernel, one primitive integer vector per free column.
///
/// The vector for free column `f` has entry 1 (before content removal) at
/// `f`, zero at the other free columns, and is solved by back substitution.
pub fn matrix_nullspace(m: &QMatrix) -> Vec<Vec<Rational>> {
    let ech = bareiss(m.integer_rows(), m.cols);
    let is_pivot: Vec<bool> = {
        let mut v = vec![false; m.cols];
        for &p in &ech.pivots {
            v[p] = true;
        }
        v
    };
    let mut basis = Vec::new();
    for f in (0..m.cols).filter(|&c| !is_pivot[c]) {
        let mut x = vec![Rational::zero(); m.cols];
        x[f] = Rational::one();
        for (k, &pc) in ech.pivots.iter().enumerate().rev() {
            let row = &ech.rows[k];
            let mut s = Rational::zero();
            for j in pc + 1..m.cols {
                if !row[j].is_zero() && !x[j].is_zero() {
                    s += Rational::from_integer(row[j].clone()) * &x[j];
                }
            }
            x[pc] = -s / Rational::from_integer(row[pc].clone());
        }
        basis.push(primitive(x));
    }
    basis
}

/// Rescales to coprime integers with a positive leading entry.
fn primitive(v: Vec<Rational>) -> Vec<Rational> {
    let l = v.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let ints: Vec<BigInt> = v.iter().map(|x| x.numer() * (&l / x.denom())).collect();
    let mut g = ints.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    if g.is_zero() {
        return v;
    }
    if ints.iter().find(|x| !x.is_zero()).map(|x| x.is_negative()).unwrap_or(false) {
        g = -g;
    }
    ints.into_iter().map(|x| Rational::from_integer(x / &g)).collect()
}

/// Whether `span(a) ⊆ span(b)`, by comparing ranks of `b` and `b ∪ a`.
pub fn subspace_contained(a: &[Vec<Rational>], b: &[Vec<Rational>]) -> Result<bool> {
    if a.is_empty() {
        return Ok(true);
    }
    let dim = a[0].len();
    if a.iter().chain(b).any(|v| v.len() != dim) {
        return Err(AlgebraError::Structural("vectors of different ambient dimension".into()));
    }
    let mb = QMatrix::from_rows(dim, b)?;
    let stacked: Vec<Vec<Rational>> = b.iter().chain(a).cloned().collect();
    let mab = QMatrix::from_rows(dim, &stacked)?;
    Ok(matrix_rank(&mb) == matrix_rank(&mab))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::foundations::rational::q;

    fn mat(rows: &[&[i64]]) -> QMatrix {
        let cols = rows[0].len();
        let rs: Vec<Vec<Rational>> = rows.iter().map(|r| r.iter().map(|&x| q(x)).collect()).collect();
        QMatrix::from_rows(cols, &rs).unwrap()
    }

    #[test]
    fn identity_has_trivial_kernel() {
        assert!(matrix_nullspace(&QMatrix::identity(3)).is_empty());
    }

    #[test]
    fn zero_matrix_kernel_is_everything() {
        assert_eq!(matrix_nullspace(&QMatrix::zeros(2, 3)).len(), 3);
    }

    #[test]
    fn hand_reduced_kernel() {
        let k = matrix_nullspace(&mat(&[&[1, 1, 0], &[0, 1, 1]]));
        assert_eq!(k, vec![vec![q(1), q(-1), q(1)]]);
    }

    #[test]
    fn containment_cases() {
        let e1 = vec![q(1), q(0)];
        let e2 = vec![q(0), q(1)];
        assert!(subspace_contained(&[], &[e2.clone()]).unwrap());
        assert!(subspace_contained(&[e1.clone()], &[e1.clone()]).unwrap());
        assert!(!subspace_contained(&[e1.clone()], &[e2.clone()]).unwrap());
        assert!(subspace_contained(&[e1], &[vec![q(1), q(0), q(0)]]).is_err());
    }
}
