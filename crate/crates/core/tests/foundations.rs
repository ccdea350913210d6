//! Frozen examples for groups, rationals, univariate series and matrices.

use dshuffle::foundations::{
    matrix_nullspace, matrix_rank, parse_rational, q, qf, subspace_contained, GroupSpec, QMatrix, Rational, UniSeries,
};
use num_traits::Zero;

fn elem(g: &GroupSpec, r: &[i64]) -> dshuffle::foundations::GroupElement {
    g.make(r).unwrap()
}

#[test]
fn group_products() {
    let z3 = GroupSpec::cyclic(3);
    assert_eq!(z3.group_mul(&elem(&z3, &[1]), &elem(&z3, &[2])).unwrap(), z3.identity());
    let v4 = GroupSpec::new(&[2, 2]).unwrap();
    assert_eq!(v4.group_mul(&elem(&v4, &[1, 0]), &elem(&v4, &[0, 1])).unwrap(), elem(&v4, &[1, 1]));
    let z6 = GroupSpec::cyclic(6);
    assert_eq!(z6.group_mul(&elem(&z6, &[4]), &elem(&z6, &[5])).unwrap(), elem(&z6, &[3]));
}

#[test]
fn group_mismatch_is_structural() {
    let z2 = GroupSpec::cyclic(2);
    let z3 = GroupSpec::cyclic(3);
    assert!(z2.group_mul(&elem(&z2, &[1]), &elem(&z3, &[1])).is_err());
}

#[test]
fn group_inverses() {
    let t = GroupSpec::trivial();
    assert_eq!(t.group_inv(&t.identity()).unwrap(), t.identity());
    let z3 = GroupSpec::cyclic(3);
    assert_eq!(z3.group_inv(&elem(&z3, &[1])).unwrap(), elem(&z3, &[2]));
    let g = GroupSpec::new(&[2, 4]).unwrap();
    assert_eq!(g.group_inv(&elem(&g, &[1, 3])).unwrap(), elem(&g, &[1, 1]));
}

#[test]
fn group_enumeration() {
    assert_eq!(GroupSpec::trivial().elements().len(), 1);
    let z2 = GroupSpec::cyclic(2);
    assert_eq!(z2.elements().iter().map(|e| e.residues().to_vec()).collect::<Vec<_>>(), vec![vec![0], vec![1]]);
    let v4 = GroupSpec::new(&[2, 2]).unwrap();
    assert_eq!(v4.elements().len(), 4);
    assert_eq!(v4.elements()[0], v4.identity());
}

#[test]
fn group_index_tables_agree_with_elements() {
    let g = GroupSpec::new(&[2, 3]).unwrap();
    for i in 0..g.order() {
        for j in 0..g.order() {
            let p = g.group_mul(g.element(i), g.element(j)).unwrap();
            assert_eq!(g.index_of(&p).unwrap(), g.mul_idx(i, j));
        }
        assert_eq!(g.mul_idx(i, g.inv_idx(i)), 0);
    }
}

#[test]
fn group_parse() {
    assert_eq!(GroupSpec::parse("trivial").unwrap(), GroupSpec::trivial());
    assert_eq!(GroupSpec::parse("Z3").unwrap(), GroupSpec::cyclic(3));
    assert!(GroupSpec::parse("nonsense").is_err());
}

#[test]
fn rationals_are_canonical() {
    let r = qf(6, -4);
    assert_eq!(r, qf(-3, 2));
    assert!(r.denom() > &num_bigint::BigInt::zero());
    assert_eq!(parse_rational("-3/2").unwrap(), r);
    assert_eq!(parse_rational("0/5").unwrap(), Rational::zero());
    assert!(parse_rational("1/0").is_err());
}

fn uni(cap: usize, c: &[Rational]) -> UniSeries {
    UniSeries::from_coeffs(cap, c)
}

#[test]
fn uniseries_exp_examples() {
    assert_eq!(UniSeries::zero(3).exp().unwrap(), UniSeries::one(3));
    let e = UniSeries::x(3).exp().unwrap();
    assert_eq!(e, uni(3, &[q(1), q(1), qf(1, 2), qf(1, 6)]));
    let p = uni(4, &[q(0), q(0), q(1), q(-1)]);
    assert_eq!(p.exp().unwrap(), uni(4, &[q(1), q(0), q(1), q(-1), qf(1, 2)]));
    assert!(UniSeries::one(3).exp().is_err());
}

#[test]
fn uniseries_inverse_examples() {
    assert_eq!(UniSeries::one(2).inv().unwrap(), UniSeries::one(2));
    assert_eq!(uni(2, &[q(1), q(1)]).inv().unwrap(), uni(2, &[q(1), q(-1), q(1)]));
    assert_eq!(uni(2, &[q(1), qf(1, 2), q(1)]).inv().unwrap(), uni(2, &[q(1), qf(-1, 2), qf(-3, 4)]));
    assert!(UniSeries::x(2).inv().is_err());
}

#[test]
fn uniseries_log_examples() {
    assert_eq!(UniSeries::one(3).log().unwrap(), UniSeries::zero(3));
    let x = UniSeries::x(5);
    assert_eq!(x.exp().unwrap().log().unwrap(), x);
    assert_eq!(uni(3, &[q(1), q(1)]).log().unwrap(), uni(3, &[q(0), q(1), qf(-1, 2), qf(1, 3)]));
    assert!(uni(3, &[q(2)]).log().is_err());
}

#[test]
fn uniseries_cap_mismatch() {
    assert!(UniSeries::x(2).add(&UniSeries::x(3)).is_err());
}

fn matrix(cols: usize, rows: &[&[i64]]) -> QMatrix {
    let rows: Vec<Vec<Rational>> = rows.iter().map(|r| r.iter().map(|&x| q(x)).collect()).collect();
    QMatrix::from_rows(cols, &rows).unwrap()
}

#[test]
fn nullspace_examples() {
    assert!(matrix_nullspace(&QMatrix::identity(3)).is_empty());
    assert_eq!(matrix_nullspace(&QMatrix::zeros(2, 3)).len(), 3);
    let m = matrix(3, &[&[1, 1, 0], &[0, 1, 1]]);
    let k = matrix_nullspace(&m);
    assert_eq!(k.len(), 1);
    assert!(subspace_contained(&k, &[vec![q(1), q(-1), q(1)]]).unwrap());
    assert_eq!(matrix_rank(&m), 2);
}

#[test]
fn nullspace_vectors_are_in_the_kernel() {
    let m = matrix(4, &[&[1, 2, 3, 4], &[2, 4, 6, 8], &[0, 1, 0, -1]]);
    let k = matrix_nullspace(&m);
    assert_eq!(k.len() + matrix_rank(&m), 4);
    for v in &k {
        assert!(m.apply(v).unwrap().iter().all(Zero::is_zero));
    }
}

#[test]
fn containment_examples() {
    let b = vec![vec![q(1), q(2)]];
    assert!(subspace_contained(&[], &b).unwrap());
    assert!(subspace_contained(&b, &b).unwrap());
    assert!(!subspace_contained(&[vec![q(1), q(0)]], &[vec![q(0), q(1)]]).unwrap());
    assert!(subspace_contained(&[vec![q(1), q(0)]], &[vec![q(1), q(1)], vec![q(0), q(1)]]).unwrap());
    assert!(subspace_contained(&[vec![q(1), q(0), q(0)]], &b).is_err());
}

#[test]
fn ragged_rows_are_rejected() {
    assert!(QMatrix::from_rows(2, &[vec![q(1)]]).is_err());
}
