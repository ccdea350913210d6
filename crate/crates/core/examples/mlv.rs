//! Numerical multiple values: ζ(2), ζ(2,1) and an alternating value.

use dshuffle::cli_io::{mlv_eval, MlvQuery};

fn main() -> dshuffle::Result<()> {
    let z2 = mlv_eval(&MlvQuery::zeta(&[2], 1_000_000))?;
    println!("ζ(2) ≈ {:.12} (π²/6 = {:.12})", z2.value.re, std::f64::consts::PI.powi(2) / 6.0);
    let z21 = mlv_eval(&MlvQuery::zeta(&[1, 2], 1_000_000))?;
    println!("ζ(2,1) ≈ {:.12} ± {:.1e}", z21.value.re, z21.error_bound);
    let alt = mlv_eval(&MlvQuery { ks: vec![1], roots: vec![1], order: 2, bound: 100_000 })?;
    println!("Li_1(-1) ≈ {:.12} (-ln 2 = {:.12})", alt.value.re, -std::f64::consts::LN_2);
    Ok(())
}
