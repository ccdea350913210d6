//! The three alphabets: `X = {x0} ∪ {x_g}`, `Y = {y_{n,g}}` and the
//! crossed-product generators `z_{n,g}`.
//!
//! Group elements inside letters are stored by their index in
//! [`GroupSpec::elements`]; index 0 is the identity.

use crate::foundations::GroupSpec;

use super::series::{Letter, Series, Tensor, Word};

/// Letter of `X`: index 0 is `x0`, index `k ≥ 1` is `x_g` for the element
/// with index `k - 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct XLetter(pub u8);

impl XLetter {
    pub const X0: XLetter = XLetter(0);
    /// `x1 = x_identity`.
    pub const X1: XLetter = XLetter(1);

    /// `x_g` for the element of index `g`.
    #[inline]
    pub fn g(g: usize) -> XLetter {
        XLetter(g as u8 + 1)
    }

    /// Group index of `x_g`, `None` for `x0`.
    #[inline]
    pub fn group_index(self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            Some(self.0 as usize - 1)
        }
    }

    pub fn is_x0(self) -> bool {
        self.0 == 0
    }
}

fn residues(group: &GroupSpec, g: usize) -> String {
    let r: Vec<String> = group.element(g).residues().iter().map(|x| x.to_string()).collect();
    r.join(",")
}

impl Letter for XLetter {
    fn degree(self) -> usize {
        1
    }
    fn encode(self, group: &GroupSpec) -> String {
        match self.group_index() {
            None => "x0".into(),
            Some(g) => format!("x[{}]", residues(group, g)),
        }
    }
}

/// `y_{n,g} = x0^{n-1} x_g`, degree `n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct YLetter {
    pub n: u8,
    pub g: u8,
}

impl YLetter {
    pub fn new(n: usize, g: usize) -> Self {
        YLetter { n: n as u8, g: g as u8 }
    }
}

impl Letter for YLetter {
    fn degree(self) -> usize {
        self.n as usize
    }
    fn encode(self, group: &GroupSpec) -> String {
        format!("y[{};{}]", self.n, residues(group, self.g as usize))
    }
}

/// Free generator `z_{n,g} = -e0^{n-1} g e1` of the subalgebra `W`, degree `n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ZLetter {
    pub n: u8,
    pub g: u8,
}

impl ZLetter {
    pub fn new(n: usize, g: usize) -> Self {
        ZLetter { n: n as u8, g: g as u8 }
    }
}

impl Letter for ZLetter {
    fn degree(self) -> usize {
        self.n as usize
    }
    fn encode(self, group: &GroupSpec) -> String {
        format!("z[{};{}]", self.n, residues(group, self.g as usize))
    }
}

pub type XWord = Word<XLetter>;
pub type YWord = Word<YLetter>;
pub type ZWord = Word<ZLetter>;
pub type XSeries = Series<XLetter>;
pub type YSeries = Series<YLetter>;
pub type XTensor = Tensor<XLetter>;
pub type YTensor = Tensor<YLetter>;

/// All X-letters of a group: `x0` then `x_g` in element order.
pub fn x_letters(group: &GroupSpec) -> Vec<XLetter> {
    (0..=group.order()).map(|i| XLetter(i as u8)).collect()
}

/// All words over the letters, of degree at most `cap`, in canonical order.
pub fn words_up_to<L: Letter>(letters: &[L], cap: usize) -> Vec<Word<L>> {
    let mut out: Vec<Word<L>> = vec![Word::new()];
    let mut by_deg: Vec<Vec<Word<L>>> = vec![vec![Word::new()]];
    for d in 1..=cap {
        let mut level = Vec::new();
        for &l in letters {
            let dl = l.degree();
            if dl > d {
                continue;
            }
            for w in &by_deg[d - dl] {
                let mut v: Word<L> = smallvec::smallvec![l];
                v.extend_from_slice(w);
                level.push(v);
            }
        }
        level.sort_by(|a, b| super::series::canonical_cmp(a, b));
        out.extend(level.iter().cloned());
        by_deg.push(level);
    }
    out
}

/// All Y-letters of degree at most `cap`.
pub fn y_letters(group: &GroupSpec, cap: usize) -> Vec<YLetter> {
    let mut v = Vec::new();
    for n in 1..=cap {
        for g in 0..group.order() {
            v.push(YLetter::new(n, g));
        }
    }
    v
}

/// All z-letters of degree at most `cap`.
pub fn z_letters(group: &GroupSpec, cap: usize) -> Vec<ZLetter> {
    y_letters(group, cap).into_iter().map(|y| ZLetter::new(y.n as usize, y.g as usize)).collect()
}
