//! Elements of the crossed product: multiplication by group elements,
//! the canonical basis and the passage to the W and M pictures.

use dshuffle::crossed_product::{canonical_basis, m_project, v_to_w, w_to_v, VElem};
use dshuffle::foundations::GroupSpec;
use dshuffle::word_algebras::{XLetter, XSeries};

fn main() -> dshuffle::Result<()> {
    let g = GroupSpec::cyclic(2);
    let x1 = XSeries::letter(&g, 3, XLetter::X1);
    let a = VElem::from_x(&x1).try_mul(&VElem::grp(&g, 3, 1))?;
    let b = VElem::grp(&g, 3, 1).try_mul(&VElem::from_x(&x1))?;
    println!("x1·g = {}", a.display());
    println!("g·x1 = {}", b.display());
    for (k, c) in canonical_basis(&b) {
        println!("  {k:?}: {c}");
    }
    let w = v_to_w(&a.try_mul(&VElem::e1(&g, 3))?)?;
    println!("in W: {}", w.display());
    assert_eq!(v_to_w(&w_to_v(&w))?, w);
    println!("M projection: {}", m_project(&w_to_v(&w)).as_w().display());
    Ok(())
}
