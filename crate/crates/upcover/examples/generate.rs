//! Generate De Bruijn cycles, alternating De Bruijn cycles, and perfect
//! necklaces.
//!
//! Run with `cargo run --example generate`.

use upcover::generate::{
    alternating_debruijn, count_debruijn_bruteforce, debruijn_cycle, perfect_necklace,
    unroll_alternating,
};

fn main() -> upcover::Result<()> {
    // Lexicographically least De Bruijn cycles.
    for (a, n) in [(2u32, 3usize), (2, 4), (3, 2)] {
        println!("debruijn({a},{n}) = {}", debruijn_cycle(a, n)?.to_text());
    }
    println!(
        "there are {} distinct De Bruijn cycles for two letters, order 3",
        count_debruijn_bruteforce(2, 3)?
    );

    // An alternating cycle interleaves two alphabets so that every
    // alternating word of odd length appears exactly once; unrolling it
    // gives the (member, rotation) streams used by the torus construction.
    let cycle = alternating_debruijn(2, 2, 1);
    let w = unroll_alternating(&cycle);
    println!("alternating(2,2,1): a-items {:?}, b-items {:?}", w.a_items, w.b_items);

    // The necklace that lifting substitutes for wildcards.
    println!("necklace(4,2) = {}", perfect_necklace(4, 2)?.to_text());
    Ok(())
}
