//! Graded kernel dimensions for the cyclic groups of order up to three.

use dshuffle::cli_io::commands::{dims_table, DimsRequest};
use dshuffle::foundations::GroupSpec;
use dshuffle::graded_solver::Family;

fn main() -> dshuffle::Result<()> {
    for group in [GroupSpec::trivial(), GroupSpec::cyclic(2), GroupSpec::cyclic(3)] {
        let req = DimsRequest { group, max_degree: 3, families: Family::ALL.to_vec(), cap: None };
        print!("{}", dims_table(&req)?);
    }
    Ok(())
}
