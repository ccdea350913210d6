//! Runs the randomized identity suites for one group.

use dshuffle::cli_io::{all_suites, run_suites, SuiteConfig};
use dshuffle::foundations::GroupSpec;

fn main() -> dshuffle::Result<()> {
    let config = SuiteConfig { group: GroupSpec::cyclic(2), cap: 3, seed: 1, trials: 3 };
    let suites: Vec<_> = all_suites().into_iter().filter(|s| s.name != "fixture-fail").collect();
    print!("{}", run_suites(&suites, &config)?);
    Ok(())
}
