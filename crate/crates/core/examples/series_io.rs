//! Writes a group-like series as a document and reads it back.

use dshuffle::cli_io::{emit_series, parse_series, TypedSeries};
use dshuffle::foundations::GroupSpec;
use dshuffle::word_algebras::{XLetter, XSeries};

fn main() -> dshuffle::Result<()> {
    let g = GroupSpec::cyclic(2);
    let psi = XSeries::letter(&g, 3, XLetter::g(1)).exp()?;
    let text = emit_series(&TypedSeries::X(psi.clone()));
    print!("{text}");
    match parse_series(&text)? {
        TypedSeries::X(back) => assert_eq!(back, psi),
        _ => unreachable!("an X document parses as an X series"),
    }
    println!("round trip ok");
    Ok(())
}
