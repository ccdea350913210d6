//! Frozen examples for the `X` and `Y` word algebras.

use dshuffle::foundations::{q, GroupSpec, Rational};
use dshuffle::word_algebras::{
    harmonic_product, pairing, pi_y, q_inv_word, q_map, q_word, q_y, shuffle_product, t_action, x_coproduct,
    x_is_grouplike, x_is_primitive, x_mul, y_harmonic_coproduct, y_inject, Letter, Series, Tensor, Word, XLetter,
    XSeries, YLetter, YSeries,
};

const X0: XLetter = XLetter::X0;
const X1: XLetter = XLetter::X1;

fn series<L: Letter>(g: &GroupSpec, cap: usize, terms: &[(&[L], i64)]) -> Series<L> {
    Series::from_terms(g, cap, terms.iter().map(|(w, c)| (Word::from_slice(w), q(*c))))
}

fn tensor<L: Letter>(g: &GroupSpec, cap: usize, terms: &[(&[L], &[L], i64)]) -> Tensor<L> {
    let mut t = Tensor::zero(g, cap);
    for (u, v, c) in terms {
        t.add_term(Word::from_slice(u), Word::from_slice(v), q(*c));
    }
    t
}

fn y(n: usize, g: usize) -> YLetter {
    YLetter::new(n, g)
}

#[test]
fn concatenation_product() {
    let g = GroupSpec::cyclic(2);
    let xu = XLetter::g(1);
    let a = series(&g, 3, &[(&[X0], 1), (&[xu], 2)]);
    assert_eq!(x_mul(&XSeries::one(&g, 3), &a).unwrap(), a);
    let p = x_mul(&series(&g, 3, &[(&[X0], 1)]), &series(&g, 3, &[(&[xu], 1)])).unwrap();
    assert_eq!(p, series(&g, 3, &[(&[X0, xu], 1)]));
    let l = series(&g, 2, &[(&[], 1), (&[X0], 1)]);
    let r = series(&g, 2, &[(&[], 1), (&[X0], -1)]);
    assert_eq!(x_mul(&l, &r).unwrap(), series(&g, 2, &[(&[], 1), (&[X0, X0], -1)]));
}

#[test]
fn products_reject_mismatched_operands() {
    let a = XSeries::one(&GroupSpec::trivial(), 3);
    assert!(x_mul(&a, &XSeries::one(&GroupSpec::trivial(), 4)).is_err());
    assert!(x_mul(&a, &XSeries::one(&GroupSpec::cyclic(2), 3)).is_err());
}

#[test]
fn coproduct_examples() {
    let g = GroupSpec::cyclic(2);
    let xg = XLetter::g(1);
    let d0 = x_coproduct(&series(&g, 3, &[(&[X0], 1)]));
    assert_eq!(d0, tensor(&g, 3, &[(&[X0], &[], 1), (&[], &[X0], 1)]));
    assert_eq!(x_coproduct(&XSeries::one(&g, 3)), Tensor::one(&g, 3));
    let d = x_coproduct(&series(&g, 3, &[(&[X0, xg], 1)]));
    let expected =
        tensor(&g, 3, &[(&[X0, xg], &[], 1), (&[X0], &[xg], 1), (&[xg], &[X0], 1), (&[], &[X0, xg], 1)]);
    assert_eq!(d, expected);
}

#[test]
fn grouplike_and_primitive_examples() {
    let g = GroupSpec::cyclic(2);
    let xg = XLetter::g(1);
    assert!(x_is_grouplike(&XSeries::one(&g, 4)));
    assert!(x_is_grouplike(&series(&g, 4, &[(&[X0], 1)]).exp().unwrap()));
    assert!(!x_is_grouplike(&series(&g, 4, &[(&[], 1), (&[X0, xg], 1)])));
    assert!(x_is_primitive(&series(&g, 4, &[(&[xg], 1)])));
    assert!(x_is_primitive(&series(&g, 4, &[(&[X0, xg], 1), (&[xg, X0], -1)])));
    assert!(!x_is_primitive(&series(&g, 4, &[(&[X0, xg], 1)])));
}

#[test]
fn group_action_relabels_letters() {
    let g = GroupSpec::cyclic(2);
    let xu = XLetter::g(1);
    let a = series(&g, 3, &[(&[X1, xu], 1), (&[X0], 3)]);
    assert_eq!(t_action(0, &a), a);
    assert_eq!(t_action(1, &a), series(&g, 3, &[(&[xu, X1], 1), (&[X0], 3)]));
}

#[test]
fn ratio_relabeling_examples() {
    let z3 = GroupSpec::cyclic(3);
    let (a, a2) = (XLetter::g(1), XLetter::g(2));
    assert_eq!(q_word(&z3, &[X0, X0, X0]).as_slice(), &[X0, X0, X0]);
    assert_eq!(q_word(&z3, &[a, a2]).as_slice(), &[a, a]);
    assert_eq!(q_inv_word(&z3, &[a, a]).as_slice(), &[a, a2]);
    let s = series(&z3, 4, &[(&[a, X0, a2], 2), (&[X0, a2, a], -1)]);
    assert_eq!(dshuffle::word_algebras::q_inv(&q_map(&s)), s);
}

#[test]
fn projection_to_y_examples() {
    let g = GroupSpec::cyclic(2);
    let (xg, xh) = (XLetter::g(1), XLetter::g(0));
    assert!(pi_y(&series(&g, 3, &[(&[X0], 1)])).is_zero());
    assert_eq!(pi_y(&series(&g, 3, &[(&[X0, xg], 1)])), series(&g, 3, &[(&[y(2, 1)], 1)]));
    assert_eq!(pi_y(&series(&g, 3, &[(&[xg, X0, xh], 1)])), series(&g, 3, &[(&[y(1, 1), y(2, 0)], 1)]));
    let m = series(&g, 3, &[(&[y(1, 1), y(2, 0)], 5)]);
    assert_eq!(y_inject(&m), series(&g, 3, &[(&[xg, X0, xh], 5)]));
    assert_eq!(pi_y(&y_inject(&m)), m);
}

#[test]
fn harmonic_coproduct_examples() {
    let g = GroupSpec::cyclic(2);
    let d1 = y_harmonic_coproduct(&series(&g, 3, &[(&[y(1, 1)], 1)]));
    assert_eq!(d1, tensor(&g, 3, &[(&[y(1, 1)], &[], 1), (&[], &[y(1, 1)], 1)]));
    let d2 = y_harmonic_coproduct(&series(&g, 3, &[(&[y(2, 1)], 1)]));
    let expected = tensor(
        &g,
        3,
        &[(&[y(2, 1)], &[], 1), (&[], &[y(2, 1)], 1), (&[y(1, 0)], &[y(1, 1)], 1), (&[y(1, 1)], &[y(1, 0)], 1)],
    );
    assert_eq!(d2, expected);
    let a = series(&g, 3, &[(&[y(1, 1)], 1)]);
    let b = series(&g, 3, &[(&[y(1, 0)], 1)]);
    let ab = y_harmonic_coproduct(&(&a * &b));
    assert_eq!(ab, &y_harmonic_coproduct(&a) * &y_harmonic_coproduct(&b));
}

#[test]
fn y_ratio_relabeling_example() {
    let z3 = GroupSpec::cyclic(3);
    let s = series(&z3, 2, &[(&[y(1, 1)], 1)]);
    assert_eq!(q_y(&s), s);
    let w = series(&z3, 2, &[(&[y(1, 1), y(1, 2)], 1)]);
    assert_eq!(q_y(&w), series(&z3, 2, &[(&[y(1, 1), y(1, 1)], 1)]));
}

#[test]
fn shuffle_examples() {
    let g = GroupSpec::cyclic(2);
    let xg = XLetter::g(1);
    let p = shuffle_product(&series(&g, 3, &[(&[X0], 1)]), &series(&g, 3, &[(&[xg], 1)])).unwrap();
    assert_eq!(p, series(&g, 3, &[(&[X0, xg], 1), (&[xg, X0], 1)]));
    let a = series(&g, 3, &[(&[X0, xg], 2), (&[xg], 1)]);
    assert_eq!(shuffle_product(&XSeries::one(&g, 3), &a).unwrap(), a);
}

#[test]
fn harmonic_product_examples() {
    let t = GroupSpec::trivial();
    let a = series(&t, 3, &[(&[y(2, 0), y(1, 0)], 1)]);
    assert_eq!(harmonic_product(&YSeries::one(&t, 3), &a).unwrap(), a);
    let p = harmonic_product(&series(&t, 3, &[(&[y(2, 0)], 1)]), &series(&t, 3, &[(&[y(1, 0)], 1)])).unwrap();
    assert_eq!(p, series(&t, 3, &[(&[y(2, 0), y(1, 0)], 1), (&[y(1, 0), y(2, 0)], 1), (&[y(3, 0)], 1)]));
    let z2 = GroupSpec::cyclic(2);
    let p = harmonic_product(&series(&z2, 2, &[(&[y(1, 1)], 1)]), &series(&z2, 2, &[(&[y(1, 1)], 1)])).unwrap();
    assert_eq!(p, series(&z2, 2, &[(&[y(1, 1), y(1, 1)], 2), (&[y(2, 0)], 1)]));
}

#[test]
fn pairing_examples() {
    let g = GroupSpec::cyclic(2);
    let xg = XLetter::g(1);
    let x0 = series(&g, 3, &[(&[X0], 1)]);
    assert_eq!(pairing(&x0, &x0).unwrap(), q(1));
    let a = series(&g, 3, &[(&[], 1), (&[X0, xg], 2)]);
    assert_eq!(pairing(&a, &series(&g, 3, &[(&[X0, xg], 1)])).unwrap(), q(2));
    assert_eq!(pairing(&a, &x0).unwrap(), Rational::from_integer(0.into()));
}
