//! Frozen examples for the graded condition matrices and kernels.

use dshuffle::foundations::{matrix_nullspace, subspace_contained, GroupSpec, QMatrix, Rational};
use dshuffle::graded_solver::{
    condition_matrix, inclusion_check, kernel_dimension_with_order, kernel_report, kernels_contained, membership,
    Family,
};
use dshuffle::lie_side::lyndon_basis;

/// Lyndon coordinates of the degree-one letters, in basis order.
fn letter_coordinates(group: &GroupSpec) -> Vec<Vec<Rational>> {
    let k = group.order() + 1;
    (0..k).map(|i| (0..k).map(|j| Rational::from_integer(((i == j) as i64).into())).collect()).collect()
}

#[test]
fn degree_one_kernels() {
    let t = GroupSpec::trivial();
    let m = kernel_report(Family::StabMod, 1, &t, 3).unwrap();
    assert!(subspace_contained(&letter_coordinates(&t), &m.basis).unwrap());
    assert_eq!(kernel_report(Family::Dmr0, 1, &t, 3).unwrap().dimension, 0);
}

#[test]
fn trivial_dmr0_spot_values() {
    let t = GroupSpec::trivial();
    assert_eq!(kernel_report(Family::Dmr0, 2, &t, 4).unwrap().dimension, 0);
    let r = kernel_report(Family::Dmr0, 3, &t, 5).unwrap();
    assert_eq!(r.dimension, 1);
    assert!(r.reverified);
}

#[test]
fn kernel_vectors_are_reverified_members() {
    for g in [GroupSpec::cyclic(2), GroupSpec::cyclic(3)] {
        for family in Family::ALL {
            for n in 1..=3 {
                let r = kernel_report(family, n, &g, n + 2).unwrap();
                assert!(r.reverified, "{g} {} degree {n}", family.tag());
                let basis = lyndon_basis(&g, n, n + 2);
                for v in &r.basis {
                    assert!(membership(family, &basis.combine(v)).unwrap().is_member());
                }
            }
        }
    }
}

#[test]
fn stab_mod_never_exceeds_stab_alg() {
    for g in [GroupSpec::trivial(), GroupSpec::cyclic(2), GroupSpec::cyclic(3)] {
        for n in 1..=3 {
            let m = kernel_report(Family::StabMod, n, &g, n + 2).unwrap().dimension;
            let a = kernel_report(Family::StabAlg, n, &g, n + 2).unwrap().dimension;
            assert!(m <= a, "{g} degree {n}: {m} > {a}");
        }
    }
}

#[test]
fn dimensions_do_not_depend_on_the_letter_order() {
    let g = GroupSpec::cyclic(2);
    for family in Family::ALL {
        let natural = kernel_report(family, 3, &g, 5).unwrap().dimension;
        let permuted = kernel_dimension_with_order(family, 3, &g, 5, &[2, 0, 1]).unwrap();
        assert_eq!(natural, permuted, "{}", family.tag());
    }
}

#[test]
fn matrix_entries_are_exact_with_small_denominators() {
    let g = GroupSpec::cyclic(2);
    let m = condition_matrix(Family::Dmr0, 3, &g, 5).unwrap();
    let bound = num_bigint::BigInt::from(120);
    for i in 0..m.rows() {
        for j in 0..m.cols() {
            let d = m.get(i, j).denom();
            assert!(&bound % d == num_bigint::BigInt::from(0), "denominator {d}");
        }
    }
}

#[test]
fn inclusions_hold_in_low_degree() {
    for g in [GroupSpec::trivial(), GroupSpec::cyclic(2), GroupSpec::cyclic(3)] {
        for n in 1..=3 {
            assert!(inclusion_check(n, &g, n + 2).unwrap().is_member(), "{g} degree {n}");
        }
    }
}

#[test]
fn perturbed_matrix_breaks_containment() {
    // Negative control: adding the stab_mod kernel vector as a row of the
    // stab_alg matrix removes it from the larger kernel.
    let t = GroupSpec::trivial();
    let m = condition_matrix(Family::StabMod, 3, &t, 5).unwrap();
    let a = condition_matrix(Family::StabAlg, 3, &t, 5).unwrap();
    assert!(kernels_contained(&m, &a).unwrap());
    let v = matrix_nullspace(&m).pop().expect("one kernel vector");
    let mut rows: Vec<Vec<Rational>> = (0..a.rows()).map(|i| a.row(i).to_vec()).collect();
    rows.push(v);
    let perturbed = QMatrix::from_rows(a.cols(), &rows).unwrap();
    assert!(!kernels_contained(&m, &perturbed).unwrap());
}

#[test]
fn request_errors() {
    let v4 = GroupSpec::new(&[2, 2]).unwrap();
    assert!(kernel_report(Family::Dmr0, 2, &v4, 4).is_err());
    assert!(kernel_report(Family::StabMod, 2, &v4, 4).is_ok());
    assert!(kernel_report(Family::StabMod, 5, &GroupSpec::trivial(), 4).is_err());
    assert!(Family::parse("nope").is_err());
    assert_eq!(Family::parse("stab-mod").unwrap(), Family::StabMod);
}
