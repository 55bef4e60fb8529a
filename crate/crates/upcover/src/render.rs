//! Binary PPM (P6) export of partial grids.
//!
//! One pixel per cell, optionally scaled by an integer factor: letter 0 is
//! black, letters 1..a-1 are evenly spaced greys ending at (200,200,200),
//! and the wildcard is red.

use std::io::Write;

use crate::error::{Error, Result};
use crate::grids::PartialGrid;
use crate::words::Symbol;

fn color(symbol: Symbol, alphabet_size: u32) -> [u8; 3] {
    match symbol {
        Symbol::Diamond => [255, 0, 0],
        Symbol::Letter(0) => [0, 0, 0],
        Symbol::Letter(l) => {
            let g = (200 * l as u32 / (alphabet_size - 1)) as u8;
            [g, g, g]
        }
    }
}

/// Writes `grid` as a P6 PPM image, `scale` pixels per cell.
pub fn write_ppm<W: Write>(
    out: &mut W,
    grid: &PartialGrid,
    scale: usize,
    transpose: bool,
) -> Result<()> {
    if scale == 0 {
        return Err(Error::Parse("scale must be at least 1".into()));
    }
    let grid = if transpose {
        grid.transposed()
    } else {
        grid.clone()
    };
    let (rows, cols) = (grid.rows(), grid.cols());
    let a = grid.alphabet().size();
    write!(out, "P6\n{} {}\n255\n", cols * scale, rows * scale)?;
    let mut scanline = Vec::with_capacity(cols * scale * 3);
    for r in 0..rows {
        scanline.clear();
        for c in 0..cols {
            let px = color(grid.get_wrapped(r as i64, c as i64), a);
            for _ in 0..scale {
                scanline.extend_from_slice(&px);
            }
        }
        for _ in 0..scale {
            out.write_all(&scanline)?;
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::grids::GridMode;
    use crate::words::Alphabet;

    fn render(grid: &PartialGrid, scale: usize, transpose: bool) -> Vec<u8> {
        let mut buf = Vec::new();
        write_ppm(&mut buf, grid, scale, transpose).unwrap();
        buf
    }

    #[test]
    fn single_black_pixel() {
        let g = PartialGrid::from_rows(&["0"], Alphabet::new(1).unwrap(), GridMode::Matrix)
            .unwrap();
        assert_eq!(render(&g, 1, false), b"P6\n1 1\n255\n\0\0\0");
    }

    #[test]
    fn minimal_uptorus_image() {
        let g = fixtures::minimal_uptorus();
        let img = render(&g, 16, false);
        let header = b"P6\n64 48\n255\n";
        assert_eq!(&img[..header.len()], header);
        assert_eq!(img.len(), header.len() + 64 * 48 * 3);
        // Exactly one 16x16 red block: 256 red pixels.
        let body = &img[header.len()..];
        let red = body
            .chunks_exact(3)
            .filter(|px| px == &[255, 0, 0])
            .count();
        assert_eq!(red, 256);
    }

    #[test]
    fn grey_ramp_ends_at_200() {
        let g = PartialGrid::from_rows(&["0123"], Alphabet::new(4).unwrap(), GridMode::Matrix)
            .unwrap();
        let img = render(&g, 1, false);
        let body = &img[img.len() - 12..];
        assert_eq!(body, [0, 0, 0, 66, 66, 66, 133, 133, 133, 200, 200, 200]);
    }

    #[test]
    fn transpose_swaps_dimensions() {
        let g = fixtures::minimal_uptorus();
        let img = render(&g, 1, true);
        assert!(img.starts_with(b"P6\n3 4\n255\n"));
    }
}
