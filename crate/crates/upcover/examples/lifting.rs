//! Lift a diamondicity-1 cyclic word onto its full alphabet, and run the
//! pipeline that builds a torus whose windows have unequal diamond counts.
//!
//! Run with `cargo run --example lifting`.

use upcover::construct::{build_no_diamondicity, lift};
use upcover::fixtures;
use upcover::grids::WindowShape;

fn main() -> upcover::Result<()> {
    // Each window of the input has exactly one wildcard; lifting replaces
    // the wildcards across 4 concatenated copies with 0..0 1..1 2..2 3..3,
    // preserving the covered multiset exactly.
    let u = fixtures::lift_input();
    let lifted = lift(&u, 4)?;
    println!("lift({}) = {}", u.to_text(), lifted.to_text());

    // A quasi-family with one long member and four short ones: lifting the
    // short members yields an upfamily, and the torus built from it mixes
    // 0-diamond and 3-diamond windows.
    let quasi = fixtures::upqf_five_member();
    let outcome = build_no_diamondicity(&quasi, 4, 2)?;
    println!(
        "torus: {}x{}, valid={}, diamondicity={:?}",
        outcome.torus.rows(),
        outcome.torus.cols(),
        outcome.report.valid,
        outcome.report.diamondicity
    );
    let shape = WindowShape::new(3, 4)?;
    let d0 = outcome.torus.subarray(0, 0, shape)?.diamond_count();
    println!("window at (0,0) has {d0} diamonds");
    Ok(())
}
