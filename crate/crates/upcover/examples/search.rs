//! Exhaustively search for small universal partial tori.
//!
//! Run with `cargo run --example search`.

use upcover::grids::{GridMode, WindowShape};
use upcover::search::{search_nontrivial, SearchSpec};

fn main() -> upcover::Result<()> {
    let window = WindowShape::new(2, 2)?;

    // 3x4 is the smallest nontrivial binary uptorus for 2x2 windows; 3x3
    // provably has none, and the search confirms it by exhaustion.
    for (rows, cols) in [(3, 3), (3, 4)] {
        let mut spec = SearchSpec::new(2, window, rows, cols, GridMode::Torus);
        spec.dedup = true;
        let catalog = search_nontrivial(&spec)?;
        println!(
            "{rows}x{cols} torus: {} solutions in {} equivalence classes ({} nodes)",
            catalog.raw_count, catalog.canonical_count, catalog.nodes_explored
        );
        for g in &catalog.solutions {
            for row in g.row_texts() {
                println!("  {row}");
            }
            println!();
        }
    }
    Ok(())
}
