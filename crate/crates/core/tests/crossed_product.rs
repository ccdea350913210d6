//! Frozen examples for the crossed-product algebra, its subalgebra and
//! module, and the group actions on them.

use std::collections::BTreeMap;

use dshuffle::cli_io::suites::TrialContext;
use dshuffle::crossed_product::{
    canonical_basis, delta_w, from_canonical_basis, m_project, stab_alg_membership, stab_m_membership,
    stab_w_membership, w_to_v, CrossedAction, EBasisKey, MElem, VElem, WElem,
};
use dshuffle::foundations::{q, GroupSpec};
use dshuffle::word_algebras::{Word, XLetter, XSeries, ZLetter};

fn z(g: &GroupSpec, cap: usize, n: usize, h: usize) -> WElem {
    WElem::letter(g, cap, ZLetter::new(n, h))
}

#[test]
fn group_elements_twist_letters() {
    let g = GroupSpec::cyclic(3);
    for a in 0..3 {
        for b in 0..3 {
            let lhs = &VElem::grp(&g, 3, a) * &VElem::from_x(&XSeries::letter(&g, 3, XLetter::g(b)));
            let rhs = VElem::from_pair(&XSeries::letter(&g, 3, XLetter::g(g.mul_idx(a, b))), a);
            assert_eq!(lhs, rhs, "g = {a}, h = {b}");
        }
    }
}

#[test]
fn unit_is_neutral() {
    let g = GroupSpec::cyclic(2);
    let a = TrialContext::new(&g, 4, 3).v_elem();
    let one = VElem::one(&g, 4);
    assert_eq!(&one * &a, a);
    assert_eq!(&a * &one, a);
    assert_eq!(VElem::from_x(&XSeries::one(&g, 4)), one);
}

#[test]
fn canonical_basis_examples() {
    let g = GroupSpec::cyclic(3);
    let unit = canonical_basis(&VElem::one(&g, 3));
    assert_eq!(unit, BTreeMap::from([(EBasisKey { ns: vec![1], gs: vec![0] }, q(1))]));
    for h in 0..3 {
        let b = canonical_basis(&VElem::from_x(&XSeries::letter(&g, 3, XLetter::g(h))));
        let key = EBasisKey { ns: vec![1, 1], gs: vec![h as u8, g.inv_idx(h) as u8] };
        assert_eq!(b, BTreeMap::from([(key, q(-1))]));
    }
}

#[test]
fn canonical_basis_round_trip() {
    for g in [GroupSpec::trivial(), GroupSpec::cyclic(2), GroupSpec::cyclic(3)] {
        let mut ctx = TrialContext::new(&g, 4, 17);
        for _ in 0..10 {
            let a = ctx.v_elem();
            assert_eq!(from_canonical_basis(&g, 4, &canonical_basis(&a)).unwrap(), a);
        }
    }
}

#[test]
fn malformed_basis_key_is_rejected() {
    let g = GroupSpec::cyclic(2);
    let bad = BTreeMap::from([(EBasisKey { ns: vec![1, 0], gs: vec![0, 0] }, q(1))]);
    assert!(from_canonical_basis(&g, 3, &bad).is_err());
}

#[test]
fn subalgebra_inclusion_examples() {
    let g = GroupSpec::cyclic(2);
    let cap = 3;
    assert_eq!(w_to_v(&WElem::one(&g, cap)), VElem::one(&g, cap));
    let e1 = VElem::e1(&g, cap);
    assert_eq!(w_to_v(&z(&g, cap, 1, 0)), e1.scale(&q(-1)));
    for h in 0..2 {
        let expected = (&(&VElem::e0(&g, cap) * &VElem::grp(&g, cap, h)) * &e1).scale(&q(-1));
        assert_eq!(w_to_v(&z(&g, cap, 2, h)), expected, "h = {h}");
    }
}

#[test]
fn module_projection_examples() {
    let g = GroupSpec::cyclic(3);
    let cap = 4;
    assert!(m_project(&VElem::e0(&g, cap)).as_w().is_zero());
    for h in 0..3 {
        assert_eq!(m_project(&VElem::grp(&g, cap, h)), MElem::unit(&g, cap));
    }
    let mut ctx = TrialContext::new(&g, cap, 5);
    for _ in 0..10 {
        let w = ctx.w_elem();
        assert_eq!(m_project(&w_to_v(&w)).as_w(), &w);
    }
}

#[test]
fn subalgebra_coproduct_examples() {
    let g = GroupSpec::cyclic(2);
    let cap = 3;
    for h in 0..2 {
        let d = delta_w(&z(&g, cap, 1, h));
        let mut expected = dshuffle::crossed_product::ZTensor::zero(&g, cap);
        expected.add_term(Word::from_slice(&[ZLetter::new(1, h)]), Word::new(), q(1));
        expected.add_term(Word::new(), Word::from_slice(&[ZLetter::new(1, h)]), q(1));
        assert_eq!(d, expected);
    }
    let d = delta_w(&z(&g, cap, 2, 1));
    let (z10, z11) = (ZLetter::new(1, 0), ZLetter::new(1, 1));
    assert_eq!(d.coeff(&[z10], &[z11]), q(1));
    assert_eq!(d.coeff(&[z11], &[z10]), q(1));
    assert_eq!(delta_w(&WElem::one(&g, cap)), dshuffle::crossed_product::ZTensor::one(&g, cap));
}

#[test]
fn actions_of_one_are_identities() {
    let g = GroupSpec::cyclic(3);
    let cap = 4;
    let act = CrossedAction::new(&XSeries::one(&g, cap)).unwrap();
    let mut ctx = TrialContext::new(&g, cap, 9);
    for _ in 0..5 {
        let a = ctx.v_elem();
        assert_eq!(act.aut_v0(&a), a);
        assert_eq!(act.aut_v1(&a), a);
        assert_eq!(act.aut_v10(&a), a);
        assert_eq!(act.gamma_aut_v1(&a), a);
        let w = ctx.w_elem();
        assert_eq!(act.aut_w1(&w).unwrap(), w);
        assert_eq!(act.gamma_aut_w1(&w).unwrap(), w);
        let m = MElem(w);
        assert_eq!(act.aut_m10(&m), m);
        assert_eq!(act.gamma_aut_m10(&m), m);
        let y = ctx.y_series();
        assert_eq!(act.gamma_aut_y_explicit(&y), y);
        assert_eq!(act.gamma_aut_y_conjugated(&y).unwrap(), y);
    }
}

#[test]
fn stabilizer_tests_accept_one() {
    for g in [GroupSpec::trivial(), GroupSpec::cyclic(2), GroupSpec::cyclic(3)] {
        let one = XSeries::one(&g, 4);
        assert!(stab_w_membership(&one, true).unwrap().is_member());
        assert!(stab_m_membership(&one).unwrap().is_member());
        assert!(stab_alg_membership(&one).unwrap().is_member());
    }
}

#[test]
fn stabilizer_tests_reject_a_generic_series() {
    let g = GroupSpec::cyclic(2);
    let psi = TrialContext::new(&g, 4, 21).grouplike();
    assert!(!stab_m_membership(&psi).unwrap().is_member());
    assert!(!stab_w_membership(&psi, false).unwrap().is_member());
}
