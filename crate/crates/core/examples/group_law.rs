//! The twisted group law on group-like series: product, inverse and the
//! automorphism it induces.

use dshuffle::foundations::GroupSpec;
use dshuffle::racinet_group::{aut_psi, circledast, circledast_inverse, gamma_of};
use dshuffle::sampling::Sampler;
use dshuffle::word_algebras::{XLetter, XSeries};

fn main() -> dshuffle::Result<()> {
    let g = GroupSpec::cyclic(3);
    let mut s = Sampler::new(7);
    let (a, b) = (s.grouplike(&g, 3), s.grouplike(&g, 3));
    let ab = circledast(&a, &b)?;
    println!("a ⊛ b = {}", ab.display());
    let unit = circledast(&a, &circledast_inverse(&a)?)?;
    assert_eq!(unit, XSeries::one(&g, 3));
    println!("a ⊛ a⁻¹ = {}", unit.display());
    let x0 = XSeries::letter(&g, 3, XLetter::X0);
    println!("aut_a(x0) = {}", aut_psi(&a, &x0)?.display());
    println!("Γ_a = {}", gamma_of(&a).display());
    Ok(())
}
