//! Group-side membership tests with their per-check verdicts.

use dshuffle::crossed_product::stab_alg_membership;
use dshuffle::foundations::GroupSpec;
use dshuffle::racinet_group::{dmr0_membership, stab_mod_membership};
use dshuffle::word_algebras::{XLetter, XSeries};

fn main() -> dshuffle::Result<()> {
    let t = GroupSpec::trivial();
    for (name, psi) in [
        ("1", XSeries::one(&t, 4)),
        ("exp(x0)", XSeries::letter(&t, 4, XLetter::X0).exp()?),
        ("exp(x1)", XSeries::letter(&t, 4, XLetter::X1).exp()?),
    ] {
        println!("== {name}");
        print!("{}", dmr0_membership(&psi)?);
        print!("{}", stab_mod_membership(&psi)?);
        print!("{}", stab_alg_membership(&psi)?);
    }
    Ok(())
}
