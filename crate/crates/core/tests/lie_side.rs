//! Frozen examples for the Lie side: Lyndon bases, the twisted bracket,
//! the exponential, the infinitesimal actions and the Lie membership tests.

use dshuffle::cli_io::suites::TrialContext;
use dshuffle::crossed_product::{MElem, VElem};
use dshuffle::foundations::{q, GroupSpec};
use dshuffle::graded_solver::{kernel_report, Family};
use dshuffle::lie_side::{
    cbh_bracket, commutator, dmr0_lie_membership, exp_circledast, gamma_lower, is_lyndon, lie_bracket,
    log_circledast, lyndon_basis, lyndon_words, s_psi, stab_alg_lie_membership, stab_m_lie_membership,
    stab_mod_lie_membership, stab_w_lie_membership, theta_lie, witt_dimension, CrossedDerivation, LieElem,
};
use dshuffle::word_algebras::{x_is_primitive, XLetter, XSeries};

const X0: XLetter = XLetter::X0;
const X1: XLetter = XLetter::X1;

fn letter(g: &GroupSpec, cap: usize, l: XLetter) -> XSeries {
    XSeries::letter(g, cap, l)
}

fn lie(s: XSeries) -> LieElem {
    LieElem::new(s).unwrap()
}

#[test]
fn lyndon_word_examples() {
    assert_eq!(lyndon_words(2, 3), vec![vec![0, 0, 1], vec![0, 1, 1]]);
    assert!(is_lyndon(&[0, 1, 1]));
    assert!(!is_lyndon(&[1, 0]));
    assert!(!is_lyndon(&[0, 1, 0, 1]));
}

#[test]
fn lyndon_basis_sizes() {
    let t = GroupSpec::trivial();
    assert_eq!(lyndon_basis(&t, 1, 3).len(), 2);
    assert_eq!(lyndon_basis(&t, 2, 3).len(), 1);
    assert_eq!(lyndon_basis(&t, 3, 3).len(), 2);
    for g in [GroupSpec::cyclic(2), GroupSpec::cyclic(3)] {
        let k = g.order() + 1;
        assert_eq!(lyndon_basis(&g, 1, 4).len(), k);
        for n in 1..=4 {
            assert_eq!(lyndon_basis(&g, n, 4).len(), witt_dimension(k, n), "{g} degree {n}");
        }
    }
}

#[test]
fn lyndon_basis_elements_are_primitive() {
    let g = GroupSpec::cyclic(2);
    for n in 1..=4 {
        for e in &lyndon_basis(&g, n, 4).expansions {
            assert!(x_is_primitive(e));
        }
    }
}

#[test]
fn trivial_degree_two_basis_is_the_bracket() {
    let t = GroupSpec::trivial();
    let b = lyndon_basis(&t, 2, 3);
    let bracket = commutator(&letter(&t, 3, X0), &letter(&t, 3, X1));
    assert!(b.expansions[0] == bracket || b.expansions[0] == bracket.scale(&q(-1)));
}

#[test]
fn non_primitive_input_is_rejected() {
    let t = GroupSpec::trivial();
    let s = &letter(&t, 3, X0) * &letter(&t, 3, X1);
    assert!(LieElem::new(s).is_err());
}

#[test]
fn bracket_is_alternating() {
    let g = GroupSpec::cyclic(2);
    let a = lie(TrialContext::new(&g, 4, 2).lie());
    assert!(lie_bracket(&a, &a).unwrap().series().is_zero());
}

#[test]
fn s_of_one_is_psi() {
    let g = GroupSpec::cyclic(3);
    let psi = TrialContext::new(&g, 4, 4).lie();
    assert_eq!(s_psi(&psi, &XSeries::one(&g, 4)).unwrap(), psi);
}

#[test]
fn exponential_examples() {
    let t = GroupSpec::trivial();
    let zero = lie(XSeries::zero(&t, 4));
    assert_eq!(exp_circledast(&zero).unwrap(), XSeries::one(&t, 4));
    let x0 = letter(&t, 4, X0);
    assert_eq!(exp_circledast(&lie(x0.clone())).unwrap(), x0.exp().unwrap());
    for seed in 0..5 {
        let psi = TrialContext::new(&t, 4, seed).lie();
        let back = log_circledast(&exp_circledast(&lie(psi.clone())).unwrap()).unwrap();
        assert_eq!(back.series(), &psi);
    }
}

#[test]
fn cbh_with_zero() {
    let g = GroupSpec::cyclic(2);
    let psi = lie(TrialContext::new(&g, 4, 6).lie());
    let zero = lie(XSeries::zero(&g, 4));
    assert_eq!(cbh_bracket(&psi, &zero).unwrap().series(), psi.series());
    assert_eq!(cbh_bracket(&zero, &psi).unwrap().series(), psi.series());
}

#[test]
fn zero_gives_zero_operators() {
    let g = GroupSpec::cyclic(2);
    let zero = XSeries::zero(&g, 4);
    assert!(gamma_lower(&zero).coeffs().iter().all(num_traits::Zero::is_zero));
    assert!(theta_lie(&zero).is_zero());
    let d = CrossedDerivation::new(&zero);
    let mut ctx = TrialContext::new(&g, 4, 8);
    let a = ctx.v_elem();
    assert!(d.der_v0(&a).is_zero());
    assert!(d.der_v1(&a).is_zero());
    assert!(d.end_v10(&a).is_zero());
    let m = MElem(ctx.w_elem());
    assert!(d.end_m10(&m).as_w().is_zero());
    assert!(d.gamma_end_m10(&m).as_w().is_zero());
    let y = ctx.y_series();
    assert!(d.gamma_d_y_explicit(&y).is_zero());
}

#[test]
fn der_v0_kills_e0_and_group_elements() {
    let g = GroupSpec::cyclic(3);
    let psi = TrialContext::new(&g, 4, 10).lie();
    let d = CrossedDerivation::new(&psi);
    assert!(d.der_v0(&VElem::e0(&g, 4)).is_zero());
    for h in 0..3 {
        assert!(d.der_v0(&VElem::grp(&g, 4, h)).is_zero());
    }
}

#[test]
fn dmr0_lie_examples() {
    let t = GroupSpec::trivial();
    assert!(dmr0_lie_membership(&XSeries::zero(&t, 4)).unwrap().is_member());
    let v = dmr0_lie_membership(&letter(&t, 4, X0)).unwrap();
    assert!(!v.is_member());
    assert!(v.first_failure().unwrap().name.starts_with("(i)"));
}

#[test]
fn solver_pins_the_degree_three_element() {
    // ψ_c = [x0,[x0,x1]] + c [x1,[x1,x0]]; the kernel is spanned by c = 1.
    let t = GroupSpec::trivial();
    let (x0, x1) = (letter(&t, 5, X0), letter(&t, 5, X1));
    let a = commutator(&x0, &commutator(&x0, &x1));
    let b = commutator(&x1, &commutator(&x1, &x0));
    let psi = |c: i64| &a + &b.scale(&q(c));
    assert!(dmr0_lie_membership(&psi(1)).unwrap().is_member());
    for c in [0, -1, 2] {
        assert!(!dmr0_lie_membership(&psi(c)).unwrap().is_member(), "c = {c}");
    }
    let report = kernel_report(Family::Dmr0, 3, &t, 5).unwrap();
    let k = lyndon_basis(&t, 3, 5).combine(&report.basis[0]);
    let lead = k.coeff(&[X0, X0, X1]);
    assert_eq!(k.scale(&lead.recip()), psi(1));
}

#[test]
fn stab_mod_lie_examples() {
    for g in [GroupSpec::trivial(), GroupSpec::cyclic(2), GroupSpec::cyclic(3)] {
        assert!(stab_mod_lie_membership(&XSeries::zero(&g, 4)).unwrap().is_member());
        assert!(stab_mod_lie_membership(&letter(&g, 4, X0)).unwrap().is_member());
    }
}

#[test]
fn dmr0_kernel_vectors_lie_in_stab_mod() {
    for g in [GroupSpec::trivial(), GroupSpec::cyclic(2), GroupSpec::cyclic(3)] {
        for n in 1..=3 {
            let basis = lyndon_basis(&g, n, n + 2);
            for v in kernel_report(Family::Dmr0, n, &g, n + 2).unwrap().basis {
                let psi = basis.combine(&v);
                assert!(stab_mod_lie_membership(&psi).unwrap().is_member(), "{g} degree {n}");
            }
        }
    }
}

#[test]
fn crossed_lie_stabilizers_accept_zero_and_stab_m_members() {
    for g in [GroupSpec::trivial(), GroupSpec::cyclic(2)] {
        let zero = XSeries::zero(&g, 4);
        assert!(stab_m_lie_membership(&zero).unwrap().is_member());
        assert!(stab_w_lie_membership(&zero, 8, 0).unwrap().is_member());
        let mut ctx = TrialContext::new(&g, 4, 12);
        for _ in 0..3 {
            let psi = ctx.stab_lie();
            assert!(stab_m_lie_membership(&psi).unwrap().is_member());
            assert!(stab_w_lie_membership(&psi, 8, 1).unwrap().is_member());
            assert!(stab_alg_lie_membership(&psi).unwrap().is_member());
        }
    }
}

#[test]
fn crossed_lie_stabilizers_reject_a_generic_element() {
    let g = GroupSpec::cyclic(2);
    let psi = TrialContext::new(&g, 4, 14).lie();
    assert!(!stab_m_lie_membership(&psi).unwrap().is_member());
    assert!(!stab_w_lie_membership(&psi, 16, 0).unwrap().is_member());
    assert!(!stab_alg_lie_membership(&psi).unwrap().is_member());
}
