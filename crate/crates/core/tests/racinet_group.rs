//! Frozen examples for the twisted group law and the group-level
//! membership tests.

use dshuffle::foundations::{q, qf, GroupSpec, UniSeries};
use dshuffle::graded_solver::{kernel_report, Family};
use dshuffle::lie_side::{exp_circledast, lyndon_basis, LieElem};
use dshuffle::racinet_group::{
    aut_letter_images, aut_psi, circledast, circledast_inverse, dmr0_membership, gamma_of, gamma_s_y, psi_star,
    s_big, s_y, stab_mod_membership, theta_of,
};
use dshuffle::sampling::Sampler;
use dshuffle::word_algebras::{Word, XLetter, XSeries, YSeries};
use num_traits::Zero;

const X0: XLetter = XLetter::X0;
const X1: XLetter = XLetter::X1;

fn x(g: &GroupSpec, cap: usize, terms: &[(&[XLetter], i64)]) -> XSeries {
    XSeries::from_terms(g, cap, terms.iter().map(|(w, c)| (Word::from_slice(w), q(*c))))
}

fn exp_letter(g: &GroupSpec, cap: usize, l: XLetter) -> XSeries {
    XSeries::letter(g, cap, l).exp().unwrap()
}

#[test]
fn aut_of_one_is_identity() {
    let g = GroupSpec::cyclic(2);
    let a = Sampler::new(1).grouplike(&g, 4);
    let one = XSeries::one(&g, 4);
    assert_eq!(aut_psi(&one, &a).unwrap(), a);
    assert_eq!(s_big(&one, &a).unwrap(), a);
}

#[test]
fn aut_of_exp_x0_conjugates_x1() {
    let g = GroupSpec::trivial();
    let images = aut_letter_images(&exp_letter(&g, 2, X0)).unwrap();
    let expected = x(&g, 2, &[(&[X1], 1), (&[X1, X0], 1), (&[X0, X1], -1)]);
    assert_eq!(images[1], expected);
    assert_eq!(images[0], XSeries::letter(&g, 2, X0));
}

#[test]
fn aut_rejects_non_invertible_input() {
    let g = GroupSpec::trivial();
    assert!(aut_psi(&XSeries::letter(&g, 3, X0), &XSeries::one(&g, 3)).is_err());
}

#[test]
fn group_law_unit_and_inverse() {
    let g = GroupSpec::cyclic(3);
    let mut s = Sampler::new(7);
    let psi = s.grouplike(&g, 4);
    let one = XSeries::one(&g, 4);
    assert_eq!(circledast(&one, &psi).unwrap(), psi);
    assert_eq!(circledast(&psi, &one).unwrap(), psi);
    assert_eq!(circledast_inverse(&one).unwrap(), one);
    assert_eq!(circledast(&psi, &circledast_inverse(&psi).unwrap()).unwrap(), one);
}

#[test]
fn inverse_of_exp_x0_is_exp_minus_x0() {
    let g = GroupSpec::trivial();
    let e = exp_letter(&g, 4, X0);
    let expected = XSeries::letter(&g, 4, X0).scale(&q(-1)).exp().unwrap();
    assert_eq!(circledast_inverse(&e).unwrap(), expected);
}

#[test]
fn correction_function_examples() {
    let g = GroupSpec::trivial();
    assert_eq!(gamma_of(&XSeries::one(&g, 4)), UniSeries::one(4));
    let psi = x(&g, 4, &[(&[], 1), (&[X0, X1], 3)]);
    assert_eq!(gamma_of(&psi).log().unwrap().coeff(2), qf(-3, 2));
}

#[test]
fn y_actions_of_one_are_identity() {
    let g = GroupSpec::cyclic(2);
    let m = Sampler::new(3).y_series(&g, 4, 0.3);
    let one = XSeries::one(&g, 4);
    assert_eq!(s_y(&one, &m).unwrap(), m);
    assert_eq!(gamma_s_y(&one, &m).unwrap(), m);
}

#[test]
fn theta_examples() {
    let g = GroupSpec::cyclic(2);
    assert_eq!(theta_of(&XSeries::one(&g, 4)), XSeries::one(&g, 4));
    let psi = Sampler::new(11).grouplike(&g, 4);
    assert!(theta_of(&psi).coeff(&[X0]).is_zero());
}

#[test]
fn star_examples() {
    let t = GroupSpec::trivial();
    assert_eq!(psi_star(&XSeries::one(&t, 4)), YSeries::one(&t, 4));
    assert_eq!(psi_star(&exp_letter(&t, 4, X0)), YSeries::one(&t, 4));
    let psi = exp_circledast(&LieElem::new(x(&t, 4, &[(&[X0, X1], 1), (&[X1, X0], -1)])).unwrap()).unwrap();
    assert!(psi_star(&psi).degree_part(1).is_zero());
}

#[test]
fn dmr0_examples() {
    let t = GroupSpec::trivial();
    assert!(dmr0_membership(&XSeries::one(&t, 4)).unwrap().is_member());
    let v = dmr0_membership(&exp_letter(&t, 4, X1)).unwrap();
    let f = v.first_failure().expect("exp(x1) is not a member");
    assert!(v.checks.iter().any(|c| c.name.starts_with("(i)") && !c.passed), "{v}");
    assert!(f.witness.is_some());
    assert!(dmr0_membership(&XSeries::one(&GroupSpec::new(&[2, 2]).unwrap(), 3)).is_err());
}

#[test]
fn dmr0_accepts_the_degree_three_solver_witness() {
    let t = GroupSpec::trivial();
    let report = kernel_report(Family::Dmr0, 3, &t, 5).unwrap();
    assert_eq!(report.dimension, 1);
    let psi = lyndon_basis(&t, 3, 5).combine(&report.basis[0]);
    let big = exp_circledast(&LieElem::new(psi).unwrap()).unwrap();
    let v = dmr0_membership(&big).unwrap();
    assert!(v.is_member(), "{v}");
}

#[test]
fn stab_mod_examples() {
    let g = GroupSpec::cyclic(2);
    assert!(stab_mod_membership(&XSeries::one(&g, 4)).unwrap().is_member());
    assert!(stab_mod_membership(&exp_letter(&g, 4, X0)).unwrap().is_member());
    let psi = Sampler::new(5).grouplike(&g, 4);
    assert!(!stab_mod_membership(&psi).unwrap().is_member());
}
