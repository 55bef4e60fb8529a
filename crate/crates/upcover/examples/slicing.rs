//! Slice an upcycle into a family and exhaustively enumerate block-aligned
//! slicings.
//!
//! Run with `cargo run --example slicing`.

use upcover::families::{enumerate_slicings, slice, verify_family, CutSet};
use upcover::fixtures;

fn main() -> upcover::Result<()> {
    let u = fixtures::eq1_upcycle(); // 64 symbols over {0,1,2,3}

    // Cutting every 8 symbols yields an 8-member family whose members also
    // each cover their share of words exactly once.
    let cuts = CutSet::new((0..8).map(|j| j * 8).collect(), u.len())?;
    let family = slice(&u, &cuts)?;
    let report = verify_family(&family, 4)?;
    println!(
        "8 cuts -> {} members, valid={}, kind={:?}",
        family.members().len(),
        report.report.valid,
        report.kind
    );

    // Unequal pieces can still work: this is a quasi-family.
    let cuts = CutSet::new(vec![0, 8], u.len())?;
    let family = slice(&u, &cuts)?;
    let report = verify_family(&family, 4)?;
    println!(
        "2 cuts -> lengths {:?}, valid={}, kind={:?}",
        family.members().iter().map(|m| m.len()).collect::<Vec<_>>(),
        report.report.valid,
        report.kind
    );

    // Scan all 128 subsets of the 8-aligned cut positions.
    let scan = enumerate_slicings(&u, 8, 4)?;
    println!(
        "scanned {} cut subsets: {} valid including the whole cycle, {} excluding it",
        scan.combinations_scanned, scan.valid_including_whole, scan.valid_excluding_whole
    );
    Ok(())
}
