//! Build a torus from a family of cyclic partial words using an alternating
//! De Bruijn cycle of (member, rotation) choices.
//!
//! Run with `cargo run --example torus_from_family`.

use upcover::construct::certify_m_w;
use upcover::fixtures;

fn main() -> upcover::Result<()> {
    // Eight cyclic words over {0,1,2,3} that jointly cover every word of
    // length 4 exactly once.
    let family = fixtures::family_f();
    for m in family.members() {
        println!("member: {}", m.to_text());
    }

    // y = 1 uses an order-3 alternating cycle (the member count is even),
    // giving a 512x8 torus covering every 2x4 matrix over four letters.
    let (torus, report) = certify_m_w(&family, 4, 1)?;
    println!(
        "order-3 torus: {}x{}, valid={}",
        torus.rows(),
        torus.cols(),
        report.valid
    );

    // y = 2 uses an order-5 cycle: a 32768x8 torus for 3x4 windows.
    let (torus, report) = certify_m_w(&family, 4, 2)?;
    println!(
        "order-5 torus: {}x{}, valid={}",
        torus.rows(),
        torus.cols(),
        report.valid
    );
    Ok(())
}
