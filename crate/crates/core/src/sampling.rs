//! Seeded random test points: rationals, Lie elements in Lyndon
//! coordinates, and grouplike series as their exponentials.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::foundations::rational::Rational;
use crate::foundations::GroupSpec;
use crate::lie_side::lyndon_basis;
use crate::word_algebras::{XSeries, YSeries, Series, Letter, Word};

/// Deterministic generator for test points.
pub struct Sampler {
    rng: ChaCha8Rng,
}

impl Sampler {
    pub fn new(seed: u64) -> Self {
        Sampler { rng: ChaCha8Rng::seed_from_u64(seed) }
    }

    /// A small nonzero rational `p/q` with `|p| ≤ 3`, `1 ≤ q ≤ 3`.
    pub fn rational(&mut self) -> Rational {
        loop {
            let p: i64 = self.rng.gen_range(-3..=3);
            if p != 0 {
                let q: i64 = self.rng.gen_range(1..=3);
                return Rational::new(p.into(), q.into());
            }
        }
    }

    pub fn index(&mut self, n: usize) -> usize {
        self.rng.gen_range(0..n)
    }

    pub fn coin(&mut self, p: f64) -> bool {
        self.rng.gen_bool(p)
    }

    /// Random Lie element: each Lyndon basis element of degree in
    /// `min_degree..=cap` enters with probability `density`.
    pub fn lie(&mut self, group: &GroupSpec, cap: usize, min_degree: usize, density: f64) -> XSeries {
        let mut out = XSeries::zero(group, cap);
        for n in min_degree.max(1)..=cap {
            let basis = lyndon_basis(group, n, cap);
            for e in &basis.expansions {
                if self.coin(density) {
                    let c = self.rational();
                    out.add_scaled(e, &c).expect("same cap");
                }
            }
        }
        out
    }

    /// Random grouplike series `exp(ψ)` for a random Lie element `ψ`.
    pub fn grouplike(&mut self, group: &GroupSpec, cap: usize) -> XSeries {
        self.lie(group, cap, 1, 0.5).exp().expect("zero constant term")
    }

    /// Random series over any alphabet: each given word enters with
    /// probability `density`.
    pub fn series<L: Letter>(&mut self, group: &GroupSpec, cap: usize, words: &[Word<L>], density: f64) -> Series<L> {
        let mut out = Series::zero(group, cap);
        for w in words {
            if self.coin(density) {
                let c = self.rational();
                out.add_term(w.clone(), c);
            }
        }
        out
    }

    /// Random `Y` series over all words up to the cap.
    pub fn y_series(&mut self, group: &GroupSpec, cap: usize, density: f64) -> YSeries {
        let words = crate::racinet_group::y_basis(group, cap);
        self.series(group, cap, &words, density)
    }
}
