//! Roll an upcycle into a torus with a De Bruijn cycle of row rotations,
//! then find a window in it without scanning.
//!
//! Run with `cargo run --example torus_from_upcycle`.

use upcover::construct::{certify_m_us, locate, locate_by_scan};
use upcover::fixtures;

fn main() -> upcover::Result<()> {
    let u = fixtures::u4(); // 001*110*, an upcycle for binary windows of 4
    let s = fixtures::s64(); // a De Bruijn cycle over {0..7}^2

    // Row n of the torus is u rotated by the prefix sum of s. The result
    // covers every binary 3x4 matrix exactly once.
    let (torus, report) = certify_m_us(&u, &s, 4, 2)?;
    println!(
        "torus is {}x{}, valid={}, diamondicity={:?}",
        torus.rows(),
        torus.cols(),
        report.valid,
        report.diamondicity
    );
    for row in torus.row_texts().iter().take(4) {
        println!("  {row}");
    }
    println!("  ... ({} more rows)", torus.rows() - 4);

    // The locator works from u and s alone; the scan confirms it.
    let p = fixtures::locate_p();
    let fast = locate(&p, &u, &s)?;
    let slow = locate_by_scan(&p, &torus)?;
    assert_eq!(fast, slow);
    println!(
        "window {:?} found at row {} col {}",
        p.row_texts(),
        fast.row,
        fast.col
    );
    Ok(())
}
