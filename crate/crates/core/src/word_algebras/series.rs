//! Sparse truncated series over a word alphabet, and their tensor squares.
//!
//! A series maps words to nonzero rationals; every stored word has degree at
//! most `cap`. All binary operations require equal caps and equal groups.

use std::collections::HashMap;
use std::fmt::Debug;
use std::hash::Hash;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};
use smallvec::SmallVec;

use crate::error::{AlgebraError, Result};
use crate::foundations::rational::{format_rational, inv_factorial, Rational};
use crate::foundations::GroupSpec;

/// A letter of a graded alphabet.
pub trait Letter: Copy + Eq + Ord + Hash + Debug + Send + Sync + 'static {
    /// Degree of the letter (positive).
    fn degree(self) -> usize;
    /// Human-readable and parseable encoding, e.g. `x0`, `x[1]`, `y[2;1]`.
    fn encode(self, group: &GroupSpec) -> String;
}

/// Finite word; the empty word is the unit.
pub type Word<L> = SmallVec<[L; 12]>;

/// Degree of a word.
pub fn word_degree<L: Letter>(w: &[L]) -> usize {
    w.iter().map(|l| l.degree()).sum()
}

/// Encodes a word as letters joined by `*`, the empty word as `1`.
pub fn encode_word<L: Letter>(w: &[L], group: &GroupSpec) -> String {
    if w.is_empty() {
        return "1".into();
    }
    w.iter().map(|l| l.encode(group)).collect::<Vec<_>>().join("*")
}

/// Canonical order: by degree, then lexicographically on letters.
pub fn canonical_cmp<L: Letter>(a: &[L], b: &[L]) -> std::cmp::Ordering {
    word_degree(a).cmp(&word_degree(b)).then_with(|| a.cmp(b))
}

/// Truncated noncommutative series.
#[derive(Clone, Debug)]
pub struct Series<L: Letter> {
    group: GroupSpec,
    cap: usize,
    terms: HashMap<Word<L>, Rational>,
}

impl<L: Letter> PartialEq for Series<L> {
    fn eq(&self, other: &Self) -> bool {
        self.cap == other.cap && self.group == other.group && self.terms == other.terms
    }
}
impl<L: Letter> Eq for Series<L> {}

pub(crate) fn check_compat(
    g1: &GroupSpec,
    c1: usize,
    g2: &GroupSpec,
    c2: usize,
) -> Result<()> {
    if c1 != c2 {
        return Err(AlgebraError::CapMismatch { left: c1, right: c2 });
    }
    if g1 != g2 {
        return Err(AlgebraError::Structural(format!("group mismatch: {g1} vs {g2}")));
    }
    Ok(())
}

impl<L: Letter> Series<L> {
    pub fn zero(group: &GroupSpec, cap: usize) -> Self {
        Series { group: group.clone(), cap, terms: HashMap::new() }
    }

    pub fn one(group: &GroupSpec, cap: usize) -> Self {
        Self::monomial(group, cap, Word::new(), Rational::one())
    }

    /// `c * w`, or zero when `deg w > cap`.
    pub fn monomial(group: &GroupSpec, cap: usize, w: Word<L>, c: Rational) -> Self {
        let mut s = Self::zero(group, cap);
        s.add_term(w, c);
        s
    }

    /// The single-letter series `l`.
    pub fn letter(group: &GroupSpec, cap: usize, l: L) -> Self {
        Self::monomial(group, cap, smallvec::smallvec![l], Rational::one())
    }

    /// Builds from `(word, coefficient)` pairs, summing repeats.
    pub fn from_terms(
        group: &GroupSpec,
        cap: usize,
        terms: impl IntoIterator<Item = (Word<L>, Rational)>,
    ) -> Self {
        let mut s = Self::zero(group, cap);
        for (w, c) in terms {
            s.add_term(w, c);
        }
        s
    }

    pub fn group(&self) -> &GroupSpec {
        &self.group
    }

    pub fn cap(&self) -> usize {
        self.cap
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Word<L>, &Rational)> {
        self.terms.iter()
    }

    /// Terms in canonical order (degree, then lexicographic).
    pub fn sorted_terms(&self) -> Vec<(&Word<L>, &Rational)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|a, b| canonical_cmp(a.0, b.0));
        v
    }

    /// Coefficient `(self | w)`.
    pub fn coeff(&self, w: &[L]) -> Rational {
        self.terms.get(w).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn constant(&self) -> Rational {
        self.coeff(&[])
    }

    /// Adds `c * w` in place; words above the cap are discarded.
    pub fn add_term(&mut self, w: Word<L>, c: Rational) {
        if c.is_zero() || word_degree(&w) > self.cap {
            return;
        }
        use std::collections::hash_map::Entry;
        match self.terms.entry(w) {
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
            Entry::Vacant(e) => {
                e.insert(c);
            }
        }
    }

    /// `self += c * other` in place.
    pub fn add_scaled(&mut self, other: &Self, c: &Rational) -> Result<()> {
        check_compat(&self.group, self.cap, &other.group, other.cap)?;
        if c.is_zero() {
            return Ok(());
        }
        for (w, v) in &other.terms {
            self.add_term(w.clone(), v * c);
        }
        Ok(())
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        let mut s = self.clone();
        s.add_scaled(other, &Rational::one())?;
        Ok(s)
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        let mut s = self.clone();
        s.add_scaled(other, &-Rational::one())?;
        Ok(s)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero(&self.group, self.cap);
        }
        Series {
            group: self.group.clone(),
            cap: self.cap,
            terms: self.terms.iter().map(|(w, v)| (w.clone(), v * c)).collect(),
        }
    }

    /// Concatenation product, truncated.
    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        check_compat(&self.group, self.cap, &other.group, other.cap)?;
        let mut by_deg: Vec<Vec<(&Word<L>, &Rational)>> = vec![Vec::new(); self.cap + 1];
        for (w, c) in &other.terms {
            by_deg[word_degree(w)].push((w, c));
        }
        let mut out = Self::zero(&self.group, self.cap);
        for (a, ca) in &self.terms {
            let da = word_degree(a);
            for bucket in by_deg.iter().take(self.cap - da + 1) {
                for (b, cb) in bucket {
                    let mut w = a.clone();
                    w.extend_from_slice(b);
                    out.add_term(w, ca * *cb);
                }
            }
        }
        Ok(out)
    }

    /// Homogeneous component of degree `d`.
    pub fn degree_part(&self, d: usize) -> Self {
        Series {
            group: self.group.clone(),
            cap: self.cap,
            terms: self
                .terms
                .iter()
                .filter(|(w, _)| word_degree(w) == d)
                .map(|(w, c)| (w.clone(), c.clone()))
                .collect(),
        }
    }

    /// Lowest degree carrying a nonzero coefficient.
    pub fn min_degree(&self) -> Option<usize> {
        self.terms.keys().map(|w| word_degree(w)).min()
    }

    /// Same terms under a different cap; terms above the new cap are dropped.
    pub fn with_cap(&self, cap: usize) -> Self {
        Series::from_terms(&self.group, cap, self.terms.iter().map(|(w, c)| (w.clone(), c.clone())))
    }

    /// `self^k`.
    pub fn pow(&self, k: usize) -> Self {
        let mut out = Self::one(&self.group, self.cap);
        for _ in 0..k {
            out = &out * self;
        }
        out
    }

    /// Multiplicative inverse; requires a nonzero constant term.
    pub fn inverse(&self) -> Result<Self> {
        let c = self.constant();
        if c.is_zero() {
            return Err(AlgebraError::Domain("series with zero constant term is not invertible".into()));
        }
        let cinv = c.recip();
        // self = c (1 - u)  =>  self^{-1} = c^{-1} Σ u^k
        let mut u = self.scale(&-&cinv);
        u.add_term(Word::new(), Rational::one());
        let mut out = Self::one(&self.group, self.cap);
        let mut pow = Self::one(&self.group, self.cap);
        for _ in 0..self.cap {
            pow = &pow * &u;
            if pow.is_zero() {
                break;
            }
            out = &out + &pow;
        }
        Ok(out.scale(&cinv))
    }

    /// `Σ_{k ≤ cap} a^k / k!`; requires a zero constant term.
    pub fn exp(&self) -> Result<Self> {
        if !self.constant().is_zero() {
            return Err(AlgebraError::Domain("exp needs a zero constant term".into()));
        }
        let mut out = Self::one(&self.group, self.cap);
        let mut pow = Self::one(&self.group, self.cap);
        for k in 1..=self.cap {
            pow = &pow * self;
            if pow.is_zero() {
                break;
            }
            out.add_scaled(&pow, &inv_factorial(k))?;
        }
        Ok(out)
    }

    /// `Σ_{k≥1} (-1)^{k+1} (a-1)^k / k`; requires constant term 1.
    pub fn log(&self) -> Result<Self> {
        if !self.constant().is_one() {
            return Err(AlgebraError::Domain("log needs constant term 1".into()));
        }
        let mut u = self.clone();
        u.terms.remove(&Word::<L>::new());
        let mut out = Self::zero(&self.group, self.cap);
        let mut pow = Self::one(&self.group, self.cap);
        for k in 1..=self.cap {
            pow = &pow * &u;
            if pow.is_zero() {
                break;
            }
            let c = Rational::new(1.into(), (k as i64).into());
            out.add_scaled(&pow, &if k % 2 == 1 { c } else { -c })?;
        }
        Ok(out)
    }

    /// Image under the linear map determined on words by `f`.
    ///
    /// `f` must return series over the target alphabet with cap `cap`.
    pub fn map_linear<M: Letter>(
        &self,
        cap: usize,
        mut f: impl FnMut(&Word<L>) -> Series<M>,
    ) -> Series<M> {
        let mut out = Series::<M>::zero(&self.group, cap);
        for (w, c) in self.terms.iter() {
            let img = f(w);
            for (u, v) in img.terms {
                out.add_term(u, v * c);
            }
        }
        out
    }

    /// Image under the algebra morphism sending each letter to `image(letter)`.
    pub fn substitute<M: Letter>(
        &self,
        cap: usize,
        mut image: impl FnMut(L) -> Series<M>,
    ) -> Series<M> {
        let mut memo: HashMap<L, Series<M>> = HashMap::new();
        let group = self.group.clone();
        self.map_linear(cap, |w| {
            let mut acc = Series::<M>::one(&group, cap);
            for &l in w.iter() {
                let img = memo.entry(l).or_insert_with(|| image(l));
                acc = &acc * &*img;
                if acc.is_zero() {
                    break;
                }
            }
            acc
        })
    }

    /// Relabels letters of every word; `f` must preserve degrees.
    pub fn map_letters<M: Letter>(&self, f: impl Fn(L) -> M) -> Series<M> {
        Series {
            group: self.group.clone(),
            cap: self.cap,
            terms: self
                .terms
                .iter()
                .map(|(w, c)| (w.iter().map(|&l| f(l)).collect(), c.clone()))
                .collect(),
        }
    }

    /// Relabels whole words; `f` must be injective and degree preserving.
    pub fn map_words<M: Letter>(&self, f: impl Fn(&Word<L>) -> Word<M>) -> Series<M> {
        Series {
            group: self.group.clone(),
            cap: self.cap,
            terms: self.terms.iter().map(|(w, c)| (f(w), c.clone())).collect(),
        }
    }

    /// Keeps only the words satisfying `pred`.
    pub fn filter_words(&self, pred: impl Fn(&Word<L>) -> bool) -> Self {
        Series {
            group: self.group.clone(),
            cap: self.cap,
            terms: self
                .terms
                .iter()
                .filter(|(w, _)| pred(w))
                .map(|(w, c)| (w.clone(), c.clone()))
                .collect(),
        }
    }

    /// Text form in canonical order, e.g. `1 + 2*x0*x[1]`.
    pub fn display(&self) -> String {
        if self.is_zero() {
            return "0".into();
        }
        self.sorted_terms()
            .iter()
            .map(|(w, c)| {
                if w.is_empty() {
                    format_rational(c)
                } else if c.is_one() {
                    encode_word(w, &self.group)
                } else {
                    format!("{}*{}", format_rational(c), encode_word(w, &self.group))
                }
            })
            .collect::<Vec<_>>()
            .join(" + ")
    }
}

impl<L: Letter> Add for &Series<L> {
    type Output = Series<L>;
    /// Panics on cap or group mismatch; use `try_add` for a checked sum.
    fn add(self, rhs: Self) -> Series<L> {
        self.try_add(rhs).expect("series sum")
    }
}

impl<L: Letter> Sub for &Series<L> {
    type Output = Series<L>;
    fn sub(self, rhs: Self) -> Series<L> {
        self.try_sub(rhs).expect("series difference")
    }
}

impl<L: Letter> Mul for &Series<L> {
    type Output = Series<L>;
    fn mul(self, rhs: Self) -> Series<L> {
        self.try_mul(rhs).expect("series product")
    }
}

impl<L: Letter> Neg for &Series<L> {
    type Output = Series<L>;
    fn neg(self) -> Series<L> {
        self.scale(&-Rational::one())
    }
}

/// Truncated element of the completed tensor square, keyed by word pairs.
#[derive(Clone, Debug)]
pub struct Tensor<L: Letter> {
    group: GroupSpec,
    cap: usize,
    terms: HashMap<(Word<L>, Word<L>), Rational>,
}

impl<L: Letter> PartialEq for Tensor<L> {
    fn eq(&self, other: &Self) -> bool {
        self.cap == other.cap && self.group == other.group && self.terms == other.terms
    }
}
impl<L: Letter> Eq for Tensor<L> {}

impl<L: Letter> Tensor<L> {
    pub fn zero(group: &GroupSpec, cap: usize) -> Self {
        Tensor { group: group.clone(), cap, terms: HashMap::new() }
    }

    /// `1 ⊗ 1`.
    pub fn one(group: &GroupSpec, cap: usize) -> Self {
        let mut t = Self::zero(group, cap);
        t.add_term(Word::new(), Word::new(), Rational::one());
        t
    }

    pub fn group(&self) -> &GroupSpec {
        &self.group
    }

    pub fn cap(&self) -> usize {
        self.cap
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(Word<L>, Word<L>), &Rational)> {
        self.terms.iter()
    }

    /// Terms sorted by total degree, then by the pair of words.
    pub fn sorted_terms(&self) -> Vec<(&(Word<L>, Word<L>), &Rational)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|a, b| {
            let da = word_degree(&a.0 .0) + word_degree(&a.0 .1);
            let db = word_degree(&b.0 .0) + word_degree(&b.0 .1);
            da.cmp(&db).then_with(|| a.0.cmp(b.0))
        });
        v
    }

    pub fn coeff(&self, u: &[L], v: &[L]) -> Rational {
        self.terms
            .get(&(Word::from_slice(u), Word::from_slice(v)))
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    /// Adds `c * (u ⊗ v)`; dropped if the total degree exceeds the cap.
    pub fn add_term(&mut self, u: Word<L>, v: Word<L>, c: Rational) {
        if c.is_zero() || word_degree(&u) + word_degree(&v) > self.cap {
            return;
        }
        use std::collections::hash_map::Entry;
        match self.terms.entry((u, v)) {
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
            Entry::Vacant(e) => {
                e.insert(c);
            }
        }
    }

    pub fn add_scaled(&mut self, other: &Self, c: &Rational) -> Result<()> {
        check_compat(&self.group, self.cap, &other.group, other.cap)?;
        for ((u, v), x) in &other.terms {
            self.add_term(u.clone(), v.clone(), x * c);
        }
        Ok(())
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        let mut t = self.clone();
        t.add_scaled(other, &Rational::one())?;
        Ok(t)
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        let mut t = self.clone();
        t.add_scaled(other, &-Rational::one())?;
        Ok(t)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        let mut t = Self::zero(&self.group, self.cap);
        for ((u, v), x) in &self.terms {
            t.add_term(u.clone(), v.clone(), x * c);
        }
        t
    }

    /// `a ⊗ b`, truncated by total degree.
    pub fn from_pair(a: &Series<L>, b: &Series<L>) -> Result<Self> {
        check_compat(a.group(), a.cap(), b.group(), b.cap())?;
        let mut t = Self::zero(a.group(), a.cap());
        for (u, x) in a.terms() {
            let du = word_degree(u);
            for (v, y) in b.terms() {
                if du + word_degree(v) <= a.cap() {
                    t.add_term(u.clone(), v.clone(), x * y);
                }
            }
        }
        Ok(t)
    }

    /// Componentwise product `(u⊗v)(u'⊗v') = uu' ⊗ vv'`, truncated.
    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        check_compat(&self.group, self.cap, &other.group, other.cap)?;
        let mut by_deg: Vec<Vec<(&(Word<L>, Word<L>), &Rational)>> = vec![Vec::new(); self.cap + 1];
        for (k, c) in &other.terms {
            by_deg[word_degree(&k.0) + word_degree(&k.1)].push((k, c));
        }
        let mut out = Self::zero(&self.group, self.cap);
        for ((u, v), x) in &self.terms {
            let d = word_degree(u) + word_degree(v);
            for bucket in by_deg.iter().take(self.cap - d + 1) {
                for ((u2, v2), y) in bucket {
                    let mut a = u.clone();
                    a.extend_from_slice(u2);
                    let mut b = v.clone();
                    b.extend_from_slice(v2);
                    out.add_term(a, b, x * *y);
                }
            }
        }
        Ok(out)
    }

    /// `(f ⊗ g)(self)` for linear maps given on words.
    pub fn map_each(
        &self,
        mut f: impl FnMut(&Word<L>) -> Series<L>,
        mut g: impl FnMut(&Word<L>) -> Series<L>,
    ) -> Self {
        let mut out = Self::zero(&self.group, self.cap);
        for ((u, v), x) in &self.terms {
            let fu = f(u);
            let gv = g(v);
            for (a, y) in fu.terms() {
                let da = word_degree(a);
                for (b, z) in gv.terms() {
                    if da + word_degree(b) <= self.cap {
                        out.add_term(a.clone(), b.clone(), x * y * z);
                    }
                }
            }
        }
        out
    }

    /// Swaps the two tensor factors.
    pub fn flip(&self) -> Self {
        Tensor {
            group: self.group.clone(),
            cap: self.cap,
            terms: self.terms.iter().map(|((u, v), c)| ((v.clone(), u.clone()), c.clone())).collect(),
        }
    }

    /// Renames letters in both factors.
    pub fn map_letters<M: Letter>(&self, f: impl Fn(L) -> M) -> Tensor<M> {
        Tensor {
            group: self.group.clone(),
            cap: self.cap,
            terms: self
                .terms
                .iter()
                .map(|((u, v), c)| {
                    ((u.iter().map(|&l| f(l)).collect(), v.iter().map(|&l| f(l)).collect()), c.clone())
                })
                .collect(),
        }
    }

    pub fn display(&self) -> String {
        if self.is_zero() {
            return "0".into();
        }
        self.sorted_terms()
            .iter()
            .map(|((u, v), c)| {
                format!(
                    "{}*({} ⊗ {})",
                    format_rational(c),
                    encode_word(u, &self.group),
                    encode_word(v, &self.group)
                )
            })
            .collect::<Vec<_>>()
            .join(" + ")
    }
}

impl<L: Letter> Add for &Tensor<L> {
    type Output = Tensor<L>;
    fn add(self, rhs: Self) -> Tensor<L> {
        self.try_add(rhs).expect("tensor sum")
    }
}

impl<L: Letter> Sub for &Tensor<L> {
    type Output = Tensor<L>;
    fn sub(self, rhs: Self) -> Tensor<L> {
        self.try_sub(rhs).expect("tensor difference")
    }
}

impl<L: Letter> Mul for &Tensor<L> {
    type Output = Tensor<L>;
    fn mul(self, rhs: Self) -> Tensor<L> {
        self.try_mul(rhs).expect("tensor product")
    }
}

/// Image of a series under the algebra morphism into the tensor square
/// determined by letter images.
pub fn coproduct_by_generators<L: Letter>(
    a: &Series<L>,
    mut gen: impl FnMut(L) -> Tensor<L>,
) -> Tensor<L> {
    let mut memo: HashMap<L, Tensor<L>> = HashMap::new();
    let mut out = Tensor::zero(a.group(), a.cap());
    for (w, c) in a.terms() {
        let mut acc = Tensor::one(a.group(), a.cap());
        for &l in w.iter() {
            let img = memo.entry(l).or_insert_with(|| gen(l));
            acc = &acc * &*img;
        }
        out.add_scaled(&acc, c).expect("same cap");
    }
    out
}

/// Pairing `(a | b) = Σ_w (a|w)(b|w)` against the word basis.
pub fn pairing<L: Letter>(a: &Series<L>, b: &Series<L>) -> Result<Rational> {
    check_compat(a.group(), a.cap(), b.group(), b.cap())?;
    Ok(a.terms().fold(Rational::zero(), |acc, (w, c)| acc + c * b.coeff(w)))
}

/// Pairing of a tensor with `u ⊗ v`.
pub fn tensor_pairing<L: Letter>(t: &Tensor<L>, u: &Series<L>, v: &Series<L>) -> Result<Rational> {
    check_compat(t.group(), t.cap(), u.group(), u.cap())?;
    check_compat(t.group(), t.cap(), v.group(), v.cap())?;
    Ok(t.terms().fold(Rational::zero(), |acc, ((a, b), c)| acc + c * u.coeff(a) * v.coeff(b)))
}
