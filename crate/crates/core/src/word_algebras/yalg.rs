//! The series algebra over `Y`: the harmonic coproduct, its dual quasi-shuffle
//! product, and the relabeling `q_Y`.
//!
//! The coproduct splits `y_{n,g}` into `y_{k,h} ⊗ y_{n-k,h'}` with `h h' = g`,
//! so that it is coassociative for every abelian group.

use std::collections::HashMap;

use num_traits::One;

use crate::error::Result;
use crate::foundations::rational::Rational;
use crate::foundations::GroupSpec;

use super::letters::{YLetter, YSeries, YTensor, YWord};
use super::series::{check_compat, coproduct_by_generators, Letter, Series, Tensor, Word};

/// Right label of a split of group label `g` whose left label is `h`.
#[inline]
pub fn split_partner(group: &GroupSpec, h: usize, g: usize) -> usize {
    group.mul_idx(group.inv_idx(h), g)
}

/// Image of one generator of degree `n` and label `g` under the harmonic
/// coproduct, for any alphabet shaped like `Y`.
pub fn harmonic_generator_image<L: Letter>(
    group: &GroupSpec,
    cap: usize,
    n: usize,
    g: usize,
    make: impl Fn(usize, usize) -> L,
) -> Tensor<L> {
    let mut t = Tensor::zero(group, cap);
    let l: Word<L> = smallvec::smallvec![make(n, g)];
    t.add_term(l.clone(), Word::new(), Rational::one());
    t.add_term(Word::new(), l, Rational::one());
    for k in 1..n {
        for h in 0..group.order() {
            t.add_term(
                smallvec::smallvec![make(k, h)],
                smallvec::smallvec![make(n - k, split_partner(group, h, g))],
                Rational::one(),
            );
        }
    }
    t
}

/// Harmonic coproduct on the `Y` series algebra (an algebra morphism).
pub fn y_harmonic_coproduct(a: &YSeries) -> YTensor {
    let group = a.group().clone();
    let cap = a.cap();
    coproduct_by_generators(a, |y| {
        harmonic_generator_image(&group, cap, y.n as usize, y.g as usize, YLetter::new)
    })
}

/// Coproduct of the quotient module in its `Y` representation; it agrees with
/// the harmonic coproduct of the representing series.
pub fn delta_star_mod(m: &YSeries) -> YTensor {
    y_harmonic_coproduct(m)
}

/// Successive-ratio relabeling of group labels along a `Y`-word.
pub fn q_y_word(group: &GroupSpec, w: &[YLetter]) -> YWord {
    let mut prev = 0usize;
    w.iter()
        .map(|y| {
            let out = YLetter::new(y.n as usize, group.div_idx(y.g as usize, prev));
            prev = y.g as usize;
            out
        })
        .collect()
}

/// Cumulative-product relabeling, inverse to [`q_y_word`].
pub fn q_y_inv_word(group: &GroupSpec, w: &[YLetter]) -> YWord {
    let mut acc = 0usize;
    w.iter()
        .map(|y| {
            acc = group.mul_idx(acc, y.g as usize);
            YLetter::new(y.n as usize, acc)
        })
        .collect()
}

pub fn q_y(a: &YSeries) -> YSeries {
    let group = a.group().clone();
    a.map_words(|w| q_y_word(&group, w))
}

pub fn q_y_inv(a: &YSeries) -> YSeries {
    let group = a.group().clone();
    a.map_words(|w| q_y_inv_word(&group, w))
}

/// Quasi-shuffle product of two words over a `Y`-shaped alphabet:
/// `au * bv = a(u * bv) + b(au * v) + [ab](u * v)`, where `[ab]` adds the
/// degrees and multiplies the labels.
pub fn quasi_shuffle_words<L: Letter>(
    group: &GroupSpec,
    u: &[L],
    v: &[L],
    split: &impl Fn(L) -> (usize, usize),
    make: &impl Fn(usize, usize) -> L,
    memo: &mut HashMap<(Word<L>, Word<L>), Vec<(Word<L>, Rational)>>,
) -> Vec<(Word<L>, Rational)> {
    if u.is_empty() {
        return vec![(Word::from_slice(v), Rational::one())];
    }
    if v.is_empty() {
        return vec![(Word::from_slice(u), Rational::one())];
    }
    let key = (Word::from_slice(u), Word::from_slice(v));
    if let Some(r) = memo.get(&key) {
        return r.clone();
    }
    let mut acc: HashMap<Word<L>, Rational> = HashMap::new();
    let mut push = |head: L, tail: Vec<(Word<L>, Rational)>| {
        for (w, c) in tail {
            let mut x: Word<L> = smallvec::smallvec![head];
            x.extend_from_slice(&w);
            *acc.entry(x).or_insert_with(|| Rational::from_integer(0.into())) += c;
        }
    };
    let t1 = quasi_shuffle_words(group, &u[1..], v, split, make, memo);
    push(u[0], t1);
    let t2 = quasi_shuffle_words(group, u, &v[1..], split, make, memo);
    push(v[0], t2);
    let (n, g) = split(u[0]);
    let (m, h) = split(v[0]);
    let t3 = quasi_shuffle_words(group, &u[1..], &v[1..], split, make, memo);
    push(make(n + m, group.mul_idx(g, h)), t3);
    let out: Vec<(Word<L>, Rational)> =
        acc.into_iter().filter(|(_, c)| !num_traits::Zero::is_zero(c)).collect();
    memo.insert(key, out.clone());
    out
}

/// Harmonic (quasi-shuffle) product, dual to [`y_harmonic_coproduct`].
pub fn harmonic_product(a: &YSeries, b: &YSeries) -> Result<YSeries> {
    check_compat(a.group(), a.cap(), b.group(), b.cap())?;
    let group = a.group().clone();
    let mut memo = HashMap::new();
    let split = |y: YLetter| (y.n as usize, y.g as usize);
    let mut out = Series::zero(&group, a.cap());
    for (u, cu) in a.terms() {
        for (v, cv) in b.terms() {
            if super::series::word_degree(u) + super::series::word_degree(v) > a.cap() {
                continue;
            }
            let c = cu * cv;
            for (w, k) in quasi_shuffle_words(&group, u, v, &split, &YLetter::new, &mut memo) {
                out.add_term(w, &k * &c);
            }
        }
    }
    Ok(out)
}
