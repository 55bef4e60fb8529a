//! Export grids as PPM images: letter 0 is black, higher letters are greys,
//! wildcards are red.
//!
//! Run with `cargo run --example render_image`; images land in the current
//! directory.

use std::fs::File;

use upcover::construct::build_m_us;
use upcover::fixtures;
use upcover::render::write_ppm;

fn main() -> upcover::Result<()> {
    let minimal = fixtures::minimal_uptorus();
    let mut out = File::create("minimal_uptorus.ppm")?;
    write_ppm(&mut out, &minimal, 16, false)?;
    println!("wrote minimal_uptorus.ppm ({}x{} cells at scale 16)", minimal.rows(), minimal.cols());

    // The 64x8 torus is tall and thin; transpose it into a strip.
    let torus = build_m_us(&fixtures::u4(), &fixtures::s64())?;
    let mut out = File::create("torus_64x8.ppm")?;
    write_ppm(&mut out, &torus, 4, true)?;
    println!("wrote torus_64x8.ppm (transposed)");
    Ok(())
}
