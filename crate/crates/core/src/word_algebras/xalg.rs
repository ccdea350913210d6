//! The series algebra over `X`: product, unshuffle coproduct, the `t_g`
//! action, the relabeling `q`, and the passage to and from `Y`.

use num_traits::One;

use crate::error::Result;
use crate::foundations::rational::Rational;
use crate::foundations::GroupSpec;

use super::letters::{XLetter, XSeries, XTensor, XWord, YLetter, YSeries, YWord};
use super::series::{check_compat, Tensor, Word};

/// Concatenation product.
pub fn x_mul(a: &XSeries, b: &XSeries) -> Result<XSeries> {
    a.try_mul(b)
}

/// Coproduct making every letter primitive: on a word, the sum over all
/// splittings of its positions into an ordered left and right subword.
pub fn x_coproduct(a: &XSeries) -> XTensor {
    let mut t = Tensor::zero(a.group(), a.cap());
    for (w, c) in a.terms() {
        let n = w.len();
        for mask in 0u32..(1u32 << n) {
            let mut l = XWord::new();
            let mut r = XWord::new();
            for (i, &x) in w.iter().enumerate() {
                if mask & (1 << i) != 0 {
                    l.push(x);
                } else {
                    r.push(x);
                }
            }
            t.add_term(l, r, c.clone());
        }
    }
    t
}

/// Constant term 1 and `Δ(a) = a ⊗ a` up to the cap.
pub fn x_is_grouplike(a: &XSeries) -> bool {
    a.constant().is_one() && x_coproduct(a) == Tensor::from_pair(a, a).expect("same cap")
}

/// `Δ(a) = a ⊗ 1 + 1 ⊗ a` up to the cap.
pub fn x_is_primitive(a: &XSeries) -> bool {
    let one = XSeries::one(a.group(), a.cap());
    let rhs = &Tensor::from_pair(a, &one).expect("same cap") + &Tensor::from_pair(&one, a).expect("same cap");
    x_coproduct(a) == rhs
}

/// `t_g` on a single letter.
#[inline]
pub fn t_letter(group: &GroupSpec, g: usize, l: XLetter) -> XLetter {
    match l.group_index() {
        None => l,
        Some(h) => XLetter::g(group.mul_idx(g, h)),
    }
}

/// The automorphism `t_g`: fixes `x0`, sends `x_h` to `x_{gh}`.
pub fn t_action(g: usize, a: &XSeries) -> XSeries {
    let group = a.group().clone();
    a.map_letters(|l| t_letter(&group, g, l))
}

/// `t_g` for a group element given by value.
pub fn t_action_elem(g: &crate::foundations::GroupElement, a: &XSeries) -> Result<XSeries> {
    let i = a.group().index_of(g)?;
    Ok(t_action(i, a))
}

/// `q` on one word: the group labels `g1, ..., gr` of the `x_g` letters
/// become `g1, g2 g1^{-1}, ..., gr g_{r-1}^{-1}`; `x0` runs are kept.
pub fn q_word(group: &GroupSpec, w: &[XLetter]) -> XWord {
    let mut prev = 0usize;
    w.iter()
        .map(|&l| match l.group_index() {
            None => l,
            Some(g) => {
                let out = XLetter::g(group.div_idx(g, prev));
                prev = g;
                out
            }
        })
        .collect()
}

/// Inverse of [`q_word`]: labels become cumulative products.
pub fn q_inv_word(group: &GroupSpec, w: &[XLetter]) -> XWord {
    let mut acc = 0usize;
    w.iter()
        .map(|&l| match l.group_index() {
            None => l,
            Some(g) => {
                acc = group.mul_idx(acc, g);
                XLetter::g(acc)
            }
        })
        .collect()
}

pub fn q_map(a: &XSeries) -> XSeries {
    let group = a.group().clone();
    a.map_words(|w| q_word(&group, w))
}

pub fn q_inv(a: &XSeries) -> XSeries {
    let group = a.group().clone();
    a.map_words(|w| q_inv_word(&group, w))
}

/// Parses a word not ending in `x0` into `y`-letters; `None` if it ends in `x0`.
pub fn x_word_to_y(w: &[XLetter]) -> Option<YWord> {
    if w.last().is_some_and(|l| l.is_x0()) {
        return None;
    }
    let mut out = YWord::new();
    let mut run = 0usize;
    for &l in w {
        match l.group_index() {
            None => run += 1,
            Some(g) => {
                out.push(YLetter::new(run + 1, g));
                run = 0;
            }
        }
    }
    Some(out)
}

/// Substitutes `y_{n,g} = x0^{n-1} x_g`.
pub fn y_word_to_x(w: &[YLetter]) -> XWord {
    let mut out = XWord::new();
    for y in w {
        for _ in 1..y.n {
            out.push(XLetter::X0);
        }
        out.push(XLetter::g(y.g as usize));
    }
    out
}

/// Projection to the quotient by the left ideal generated by `x0`, in the
/// `Y` representation: words ending in `x0` are dropped, the rest rewritten.
pub fn pi_y(a: &XSeries) -> YSeries {
    let mut out = YSeries::zero(a.group(), a.cap());
    for (w, c) in a.terms() {
        if let Some(y) = x_word_to_y(w) {
            out.add_term(y, c.clone());
        }
    }
    out
}

/// Inclusion of the `Y` series algebra into the `X` series algebra.
pub fn y_inject(a: &YSeries) -> XSeries {
    a.map_words(|w| y_word_to_x(w))
}

/// Shuffle product: sum over interleavings, dual to [`x_coproduct`].
pub fn shuffle_product(a: &XSeries, b: &XSeries) -> Result<XSeries> {
    check_compat(a.group(), a.cap(), b.group(), b.cap())?;
    let mut out = XSeries::zero(a.group(), a.cap());
    for (u, cu) in a.terms() {
        for (v, cv) in b.terms() {
            let n = u.len() + v.len();
            if n > a.cap() {
                continue;
            }
            let c = cu * cv;
            for w in shuffle_words(u, v) {
                out.add_term(w, c.clone());
            }
        }
    }
    Ok(out)
}

/// All interleavings of two words, with multiplicity.
pub fn shuffle_words<L: super::series::Letter>(u: &[L], v: &[L]) -> Vec<Word<L>>
{
    let n = u.len() + v.len();
    let mut out = Vec::new();
    for mask in 0u32..(1u32 << n) {
        if mask.count_ones() as usize != u.len() {
            continue;
        }
        let (mut i, mut j) = (0, 0);
        let mut w = Word::<L>::new();
        for p in 0..n {
            if mask & (1 << p) != 0 {
                w.push(u[i]);
                i += 1;
            } else {
                w.push(v[j]);
                j += 1;
            }
        }
        out.push(w);
    }
    out
}

/// `x0^k` as a series.
pub fn x0_pow(group: &GroupSpec, cap: usize, k: usize) -> XSeries {
    let w: XWord = std::iter::repeat(XLetter::X0).take(k).collect();
    XSeries::monomial(group, cap, w, Rational::one())
}
