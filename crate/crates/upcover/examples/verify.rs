//! Verify cyclic partial words as universal partial cycles.
//!
//! Run with `cargo run --example verify`.

use upcover::words::{verify_upcycle, Alphabet, CyclicPartialWord};

fn main() -> upcover::Result<()> {
    let a2 = Alphabet::new(2)?;

    // Covers every binary word of length 4 exactly once in half the length
    // of a De Bruijn cycle.
    let u = CyclicPartialWord::parse("001*110*", a2)?;
    let report = verify_upcycle(&u, 4)?;
    println!(
        "{}: valid={} diamondicity={:?}",
        u.to_text(),
        report.valid,
        report.diamondicity
    );

    // Flip one letter and the coverage breaks: some words go missing and
    // others are covered twice.
    let broken = CyclicPartialWord::parse("001*100*", a2)?;
    let report = verify_upcycle(&broken, 4)?;
    println!(
        "{}: valid={} missing={} duplicated={}",
        broken.to_text(),
        report.valid,
        report.missing_total,
        report.duplicated_total
    );

    // The same machinery verifies total words: a De Bruijn cycle is just an
    // upcycle without wildcards.
    let db = CyclicPartialWord::parse("0000100110101111", a2)?;
    println!("{}: valid={}", db.to_text(), verify_upcycle(&db, 4)?.valid);
    Ok(())
}
