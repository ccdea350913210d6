//! Acceptance run: one pass/fail line per criterion, exit status 1 if any
//! criterion fails.

mod common;

use std::sync::OnceLock;
use std::time::Instant;

use common::{brute_force_dmr0_dimension, golden_groups, golden_lines};
use dshuffle::cli_io::commands::{dims_table, DimsRequest, DimsTable};
use dshuffle::cli_io::mlv::word_query;
use dshuffle::cli_io::{mlv_eval, run_suites, select_suites, MlvQuery, SuiteConfig, VerifyReport};
use dshuffle::foundations::{q, GroupSpec};
use dshuffle::graded_solver::{kernel_report, Family};
use dshuffle::word_algebras::{harmonic_product, YLetter, YSeries};
use num_traits::ToPrimitive;

/// Outcome of one criterion: `Ok(detail)` or `Err(reason)`.
type Criterion = std::result::Result<String, String>;

const CAP: usize = 4;
const TRIALS: usize = 20;
const SEED: u64 = 0;

/// Suites of the identity criterion; the rest of `all` belongs to later
/// criteria.
const IDENTITY_SUITES: &[&str] = &[
    "delta-tg",
    "commut-t-aut",
    "group-morphs",
    "gamma-aut",
    "rel-aut-alg-mod",
    "compat-mv",
    "compat-gamma-mv",
    "beta-and-q",
    "gamma-s-s-theta",
    "iso-vg",
    "link-ef0-yad",
    "explicit-auty",
    "link-gammasy-gammaautm10",
    "action-laws",
    "diag-coproduct-mod",
    "diag-iso-mg",
    "diag-delta-w-m",
    "diag-beta-auts",
];

fn run_named(names: &[&str], trials: usize) -> Criterion {
    let mut passed = 0;
    for group in golden_groups() {
        let config = SuiteConfig { group: group.clone(), cap: CAP, seed: SEED, trials };
        for name in names {
            let suites = select_suites(name).map_err(|e| e.to_string())?;
            let report: VerifyReport = run_suites(&suites, &config).map_err(|e| e.to_string())?;
            if !report.all_passed() {
                return Err(format!("group {group}, suite {name}:\n{report}"));
            }
            passed += report.outcomes.len();
        }
    }
    Ok(format!("{passed} identity runs over trivial, Z2, Z3 at cap {CAP}, {trials} trials each"))
}

fn identities() -> Criterion {
    run_named(IDENTITY_SUITES, TRIALS)
}

fn axioms() -> Criterion {
    run_named(&["axioms"], TRIALS)
}

/// Dimension tables for n ≤ 4 over every test group, computed once.
fn tables() -> std::result::Result<&'static [DimsTable], String> {
    static TABLES: OnceLock<std::result::Result<Vec<DimsTable>, String>> = OnceLock::new();
    let t = TABLES.get_or_init(|| {
        golden_groups()
            .into_iter()
            .map(|group| {
                let families = vec![Family::Dmr0, Family::StabMod, Family::StabAlg];
                dims_table(&DimsRequest { group, max_degree: 4, families, cap: None }).map_err(|e| e.to_string())
            })
            .collect()
    });
    t.as_deref().map_err(Clone::clone)
}

fn inclusion_failures(statement: &str) -> std::result::Result<Vec<String>, String> {
    let mut bad = Vec::new();
    for table in tables()? {
        for row in &table.rows {
            for (s, ok) in &row.inclusions {
                if s == statement && !ok {
                    bad.push(format!("{} degree {}", table.request.group, row.degree));
                }
            }
        }
    }
    Ok(bad)
}

fn stab_inclusion() -> Criterion {
    let bad = inclusion_failures("stab_mod ⊆ stab_alg")?;
    if !bad.is_empty() {
        return Err(format!("kernel(stab_mod) ⊄ kernel(stab_alg) at {}", bad.join(", ")));
    }
    run_named(&["stab-inclusion"], 5)?;
    Ok("kernel(stab_mod) ⊆ kernel(stab_alg) for n ≤ 4; 5 sampled exponentials per group in Stab(Δ^W)".into())
}

fn dmr0_inclusion() -> Criterion {
    let bad = inclusion_failures("dmr0 ⊆ stab_mod")?;
    if bad.is_empty() {
        Ok("kernel(dmr0) ⊆ kernel(stab_mod) for n ≤ 4, |G| ≤ 3".into())
    } else {
        Err(format!("kernel(dmr0) ⊄ kernel(stab_mod) at {}", bad.join(", ")))
    }
}

fn agreement() -> Criterion {
    run_named(&["stab-agreement"], TRIALS)
}

fn perturbation() -> Criterion {
    run_named(&["perturbation"], TRIALS)
}

fn golden() -> Criterion {
    let now: String = tables()?.iter().map(DimsTable::dimension_lines).collect();
    if now != golden_lines() {
        return Err(format!("table differs from the committed one:\n{now}"));
    }
    let g = GroupSpec::trivial();
    let mut spots = Vec::new();
    for (n, expected) in [(1, 0), (2, 0), (3, 1)] {
        let solver = kernel_report(Family::Dmr0, n, &g, n + 2).map_err(|e| e.to_string())?.dimension;
        let oracle = brute_force_dmr0_dimension(n);
        if solver != expected || oracle != expected {
            return Err(format!("trivial dmr0 degree {n}: solver {solver}, oracle {oracle}, expected {expected}"));
        }
        spots.push(solver.to_string());
    }
    Ok(format!("golden table reproduced; trivial dmr0 n=1..3: {}", spots.join(", ")))
}

fn zeta(ks: &[u32]) -> std::result::Result<f64, String> {
    Ok(mlv_eval(&MlvQuery::zeta(ks, 1_000_000)).map_err(|e| e.to_string())?.value.re)
}

fn numeric() -> Criterion {
    let start = Instant::now();
    // L_{(2,1)}(1) in the decreasing-index convention is ζ(1,2) here.
    let d1 = (zeta(&[1, 2])? - zeta(&[3])?).abs();
    let g = GroupSpec::trivial();
    let y2 = YSeries::letter(&g, 4, YLetter::new(2, 0));
    let prod = harmonic_product(&y2, &y2).map_err(|e| e.to_string())?;
    let mut rhs = 0.0;
    for (w, c) in prod.terms() {
        let v = mlv_eval(&word_query(&g, w, 1_000_000).map_err(|e| e.to_string())?).map_err(|e| e.to_string())?;
        rhs += c.to_f64().unwrap_or(f64::NAN) * v.value.re;
    }
    let z2 = zeta(&[2])?;
    let d2 = (z2 * z2 - rhs).abs();
    let coeffs_ok = prod.len() == 2
        && prod.coeff(&[YLetter::new(2, 0), YLetter::new(2, 0)]) == q(2)
        && prod.coeff(&[YLetter::new(4, 0)]) == q(1);
    let secs = start.elapsed().as_secs_f64();
    let detail = format!("|ζ(1,2) − ζ(3)| = {d1:.1e}, |ζ(2)² − 2ζ(2,2) − ζ(4)| = {d2:.1e}");
    if d1 < 1e-6 && d2 < 1e-6 && coeffs_ok && secs <= 30.0 {
        Ok(detail)
    } else if !coeffs_ok {
        Err(format!("y2 ∗ y2 = {} is not 2 y2y2 + y4", prod.display()))
    } else {
        Err(detail)
    }
}

fn main() {
    let criteria: [(&str, fn() -> Criterion); 8] = [
        ("identity suites", identities),
        ("group and Lie axioms", axioms),
        ("stabilizer inclusion", stab_inclusion),
        ("dmr0 inside stab_mod", dmr0_inclusion),
        ("stabilizer test agreement", agreement),
        ("infinitesimal consistency", perturbation),
        ("golden dimension table", golden),
        ("numeric sanity", numeric),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = run();
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("[pass] criterion {}: {name} ({detail}; {secs:.1} s)", i + 1),
            Err(reason) => {
                failed += 1;
                println!("[FAIL] criterion {}: {name} ({secs:.1} s)\n{reason}", i + 1);
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
