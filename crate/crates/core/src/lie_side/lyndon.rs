//! Lyndon words over `x0 < x_{g_0} < x_{g_1} < ...` and their standard
//! bracketings: a basis of each graded piece of the free Lie algebra.

use crate::foundations::rational::Rational;
use crate::foundations::GroupSpec;
use crate::word_algebras::{Letter, XLetter, XSeries, XWord};

use super::lie::commutator;

/// Lyndon words of length `n` over `k` letters, in lexicographic order
/// (Duval's generation algorithm).
pub fn lyndon_words(k: usize, n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if k == 0 || n == 0 {
        return out;
    }
    let mut w: Vec<usize> = vec![0];
    loop {
        if w.len() == n {
            out.push(w.clone());
        }
        // Extend periodically to length n, then increment the last letter.
        let m = w.len();
        while w.len() < n {
            w.push(w[w.len() - m]);
        }
        while let Some(&last) = w.last() {
            if last == k - 1 {
                w.pop();
            } else {
                break;
            }
        }
        match w.last_mut() {
            None => break,
            Some(l) => *l += 1,
        }
    }
    out
}

/// Longest proper suffix of `w` that is a Lyndon word; `w = u v` with this
/// `v` is the standard factorization.
fn standard_split(w: &[usize]) -> usize {
    (1..w.len()).find(|&i| is_lyndon(&w[i..])).expect("length ≥ 2 has a Lyndon suffix")
}

/// `w` is strictly smaller than all its proper rotations.
pub fn is_lyndon(w: &[usize]) -> bool {
    if w.is_empty() {
        return false;
    }
    (1..w.len()).all(|i| {
        let rot: Vec<usize> = w[i..].iter().chain(&w[..i]).copied().collect();
        w < rot.as_slice()
    })
}

/// Standard bracketing `P(w) = [P(u), P(v)]` expanded as a series; letter
/// `i` of `w` stands for the `X` letter `order[i]`.
pub fn bracketing(group: &GroupSpec, cap: usize, w: &[usize], order: &[usize]) -> XSeries {
    if w.len() == 1 {
        return XSeries::letter(group, cap, XLetter(order[w[0]] as u8));
    }
    let i = standard_split(w);
    commutator(&bracketing(group, cap, &w[..i], order), &bracketing(group, cap, &w[i..], order))
}

/// Text form of the standard bracketing, e.g. `[x0,[x0,x[1]]]`.
pub fn bracketing_text(group: &GroupSpec, w: &[usize], order: &[usize]) -> String {
    if w.len() == 1 {
        return XLetter(order[w[0]] as u8).encode(group);
    }
    let i = standard_split(w);
    format!("[{},{}]", bracketing_text(group, &w[..i], order), bracketing_text(group, &w[i..], order))
}

/// Lyndon basis of the degree-`n` piece of the free Lie algebra on `X`.
#[derive(Debug, Clone)]
pub struct LyndonBasis {
    pub group: GroupSpec,
    pub cap: usize,
    pub degree: usize,
    pub words: Vec<XWord>,
    pub expansions: Vec<XSeries>,
    pub labels: Vec<String>,
}

impl LyndonBasis {
    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    /// `Σ c_i P(w_i)`.
    pub fn combine(&self, coords: &[Rational]) -> XSeries {
        let mut out = XSeries::zero(&self.group, self.cap);
        for (c, e) in coords.iter().zip(&self.expansions) {
            out.add_scaled(e, c).expect("same cap");
        }
        out
    }
}

/// Lyndon basis in degree `n`, with expansions truncated at `cap ≥ n`.
/// `order` permutes the alphabet: rank `i` in the word order is the `X`
/// letter `order[i]`.
pub fn lyndon_basis_ordered(group: &GroupSpec, n: usize, cap: usize, order: &[usize]) -> LyndonBasis {
    let k = group.order() + 1;
    let mut words = Vec::new();
    let mut expansions = Vec::new();
    let mut labels = Vec::new();
    for w in lyndon_words(k, n) {
        expansions.push(bracketing(group, cap, &w, order));
        labels.push(bracketing_text(group, &w, order));
        words.push(w.iter().map(|&i| XLetter(order[i] as u8)).collect());
    }
    LyndonBasis { group: group.clone(), cap, degree: n, words, expansions, labels }
}

/// Lyndon basis in degree `n` for the natural letter order.
pub fn lyndon_basis(group: &GroupSpec, n: usize, cap: usize) -> LyndonBasis {
    let order: Vec<usize> = (0..=group.order()).collect();
    lyndon_basis_ordered(group, n, cap, &order)
}

/// Witt's necklace count `(1/n) Σ_{d | n} μ(d) k^{n/d}`.
pub fn witt_dimension(k: usize, n: usize) -> usize {
    let mut total: i128 = 0;
    for d in 1..=n {
        if n % d == 0 {
            total += mobius(d) as i128 * (k as i128).pow((n / d) as u32);
        }
    }
    (total / n as i128) as usize
}

fn mobius(mut n: usize) -> i32 {
    let mut result = 1;
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            n /= p;
            if n % p == 0 {
                return 0;
            }
            result = -result;
        }
        p += 1;
    }
    if n > 1 {
        result = -result;
    }
    result
}
