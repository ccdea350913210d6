//! Lyndon bases and the Lie-side membership test on a degree-three element.

use dshuffle::foundations::{q, GroupSpec};
use dshuffle::lie_side::{commutator, dmr0_lie_membership, lyndon_basis, witt_dimension};
use dshuffle::word_algebras::{XLetter, XSeries};

fn main() -> dshuffle::Result<()> {
    let g = GroupSpec::cyclic(2);
    for n in 1..=4 {
        println!("Z2 degree {n}: {} Lyndon words (Witt {})", lyndon_basis(&g, n, 4).len(), witt_dimension(3, n));
    }
    let t = GroupSpec::trivial();
    let (x0, x1) = (XSeries::letter(&t, 5, XLetter::X0), XSeries::letter(&t, 5, XLetter::X1));
    let a = commutator(&x0, &commutator(&x0, &x1));
    let b = commutator(&x1, &commutator(&x1, &x0));
    for c in [1, 2] {
        let psi = &a + &b.scale(&q(c));
        print!("c = {c}: {}", dmr0_lie_membership(&psi)?);
    }
    Ok(())
}
