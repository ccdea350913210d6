//! Shared helpers for the integration tests.

#![allow(dead_code)]

use std::collections::HashMap;

use dshuffle::cli_io::commands::{dims_table, DimsRequest};
use dshuffle::foundations::{matrix_nullspace, q, qf, GroupSpec, QMatrix, Rational};
use dshuffle::graded_solver::Family;
use num_traits::Zero;

/// Path of the committed dimension table.
pub const GOLDEN_DIMS: &str = concat!(env!("CARGO_MANIFEST_DIR"), "/tests/golden_dims.txt");

/// Groups covered by the golden table, in file order.
pub fn golden_groups() -> Vec<GroupSpec> {
    vec![GroupSpec::trivial(), GroupSpec::cyclic(2), GroupSpec::cyclic(3)]
}

/// Dimension lines of the golden table for `group`, recomputed.
pub fn dimension_lines(group: &GroupSpec) -> String {
    let req = DimsRequest {
        group: group.clone(),
        max_degree: 4,
        families: vec![Family::Dmr0, Family::StabMod, Family::StabAlg],
        cap: None,
    };
    dims_table(&req).expect("dims table").dimension_lines()
}

/// The committed golden lines, without comment lines.
pub fn golden_lines() -> String {
    std::fs::read_to_string(GOLDEN_DIMS)
        .expect("golden table present")
        .lines()
        .filter(|l| !l.starts_with('#') && !l.trim().is_empty())
        .map(|l| format!("{l}\n"))
        .collect()
}

/// Words over `{0, 1}` of length `n`, letter 0 standing for `x0`.
fn binary_words(n: usize) -> Vec<Vec<u8>> {
    (0..1usize << n).map(|m| (0..n).map(|i| ((m >> (n - 1 - i)) & 1) as u8).collect()).collect()
}

/// Shuffle of two words with multiplicities.
fn shuffle(u: &[u8], v: &[u8]) -> HashMap<Vec<u8>, i64> {
    if u.is_empty() || v.is_empty() {
        return HashMap::from([([u, v].concat(), 1)]);
    }
    let mut out = HashMap::new();
    for (head, rest) in [(u[0], shuffle(&u[1..], v)), (v[0], shuffle(u, &v[1..]))] {
        for (w, c) in rest {
            let mut k = vec![head];
            k.extend(w);
            *out.entry(k).or_insert(0) += c;
        }
    }
    out
}

/// Stuffle of two compositions with multiplicities.
fn stuffle(a: &[usize], b: &[usize]) -> HashMap<Vec<usize>, i64> {
    if a.is_empty() || b.is_empty() {
        return HashMap::from([([a, b].concat(), 1)]);
    }
    let mut out = HashMap::new();
    let parts = [(a[0], stuffle(&a[1..], b)), (b[0], stuffle(a, &b[1..])), (a[0] + b[0], stuffle(&a[1..], &b[1..]))];
    for (head, rest) in parts {
        for (w, c) in rest {
            let mut k = vec![head];
            k.extend(w);
            *out.entry(k).or_insert(0) += c;
        }
    }
    out
}

/// Compositions of `n` into positive parts.
fn compositions(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    (1..=n)
        .flat_map(|k| compositions(n - k).into_iter().map(move |mut c| {
            c.insert(0, k);
            c
        }))
        .collect()
}

/// The `X` word `x0^{n1-1} x1 ... x0^{nr-1} x1` of a composition.
fn composition_word(c: &[usize]) -> Vec<u8> {
    c.iter().flat_map(|&k| std::iter::repeat(0).take(k - 1).chain([1])).collect()
}

/// Dimension of the degree-`n` part of the double shuffle Lie algebra for
/// trivial `G`, by brute force over all `2^n` words:
/// shuffle-primitivity of `ψ`, vanishing degree-one coefficients,
/// stuffle-primitivity of `ψ★ = π_Y ψ + Σ ((-1)^{n-1}/n)(ψ|x0^{n-1}x1) y1^n`,
/// and `(ψ★|y_n) = 0` for even `n`.
pub fn brute_force_dmr0_dimension(n: usize) -> usize {
    let words = binary_words(n);
    let col: HashMap<Vec<u8>, usize> = words.iter().cloned().enumerate().map(|(i, w)| (w, i)).collect();
    let mut rows: Vec<Vec<Rational>> = Vec::new();
    let mut push = |entries: Vec<(usize, Rational)>| {
        let mut r = vec![Rational::zero(); words.len()];
        for (j, c) in entries {
            r[j] += c;
        }
        if r.iter().any(|c| !c.is_zero()) {
            rows.push(r);
        }
    };
    // Shuffle-primitive: orthogonal to every u ⧢ v with u, v nonempty.
    for k in 1..n {
        for u in binary_words(k) {
            for v in binary_words(n - k) {
                push(shuffle(&u, &v).into_iter().map(|(w, c)| (col[&w], q(c))).collect());
            }
        }
    }
    if n == 1 {
        push(vec![(col[&vec![0]], q(1))]);
        push(vec![(col[&vec![1]], q(1))]);
    }
    // Coefficient of a composition in ψ★ as a linear form on ψ.
    let star = |c: &[usize]| -> Vec<(usize, Rational)> {
        let mut e = vec![(col[&composition_word(c)], q(1))];
        if c.len() == n && n >= 2 {
            let s = if n % 2 == 1 { 1 } else { -1 };
            e.push((col[&composition_word(&[n])], qf(s, n as i64)));
        }
        e
    };
    for k in 1..n {
        for a in compositions(k) {
            for b in compositions(n - k) {
                let mut e = Vec::new();
                for (w, c) in stuffle(&a, &b) {
                    e.extend(star(&w).into_iter().map(|(j, x)| (j, x * q(c))));
                }
                push(e);
            }
        }
    }
    if n % 2 == 0 {
        push(star(&[n]));
    }
    let m = QMatrix::from_rows(words.len(), &rows).expect("rectangular");
    matrix_nullspace(&m).len()
}
