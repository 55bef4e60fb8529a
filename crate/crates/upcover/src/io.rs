//! Plain-text file formats for words, grids, and families.
//!
//! Word: one line of symbols (letters 0-9 then a-z, `*` for the wildcard).
//! Grid: header `R C a mode` (mode is `matrix` or `torus`), then R rows.
//! Family: header `count x a`, then one member per line.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::families::Family;
use crate::grids::{GridMode, PartialGrid};
use crate::words::{Alphabet, CyclicPartialWord, PartialWord};

fn parse_usize(token: Option<&str>, what: &str) -> Result<usize> {
    token
        .ok_or_else(|| Error::Parse(format!("missing {what}")))?
        .parse()
        .map_err(|_| Error::Parse(format!("bad {what}")))
}

fn parse_alphabet(token: Option<&str>) -> Result<Alphabet> {
    let size = parse_usize(token, "alphabet size")? as u32;
    Alphabet::new(size)
}

pub fn word_to_text(w: &PartialWord) -> String {
    let mut s = w.to_text();
    s.push('\n');
    s
}

pub fn word_from_text(text: &str, alphabet: Alphabet) -> Result<PartialWord> {
    PartialWord::parse(text.trim(), alphabet)
}

pub fn cycle_from_text(text: &str, alphabet: Alphabet) -> Result<CyclicPartialWord> {
    CyclicPartialWord::parse(text.trim(), alphabet)
}

pub fn grid_to_text(g: &PartialGrid) -> String {
    let mode = match g.mode() {
        GridMode::Matrix => "matrix",
        GridMode::Torus => "torus",
    };
    let mut out = String::new();
    let _ = writeln!(
        out,
        "{} {} {} {}",
        g.rows(),
        g.cols(),
        g.alphabet().size(),
        mode
    );
    for row in g.row_texts() {
        out.push_str(&row);
        out.push('\n');
    }
    out
}

pub fn grid_from_text(text: &str) -> Result<PartialGrid> {
    let mut lines = text.lines().filter(|l| !l.trim().is_empty());
    let header = lines
        .next()
        .ok_or_else(|| Error::Parse("empty grid file".into()))?;
    let mut tokens = header.split_whitespace();
    let rows = parse_usize(tokens.next(), "row count")?;
    let cols = parse_usize(tokens.next(), "column count")?;
    let alphabet = parse_alphabet(tokens.next())?;
    let mode = match tokens.next() {
        Some("matrix") => GridMode::Matrix,
        Some("torus") => GridMode::Torus,
        other => {
            return Err(Error::Parse(format!(
                "bad grid mode {:?} (expected matrix or torus)",
                other
            )))
        }
    };
    let row_lines: Vec<&str> = lines.map(str::trim).collect();
    if row_lines.len() != rows {
        return Err(Error::Parse(format!(
            "grid header declares {rows} rows but {} follow",
            row_lines.len()
        )));
    }
    if let Some(bad) = row_lines.iter().find(|l| l.chars().count() != cols) {
        return Err(Error::Parse(format!(
            "grid row `{bad}` does not have {cols} symbols"
        )));
    }
    PartialGrid::from_rows(&row_lines, alphabet, mode)
}

pub fn family_to_text(f: &Family, x: usize) -> String {
    let mut out = String::new();
    let _ = writeln!(
        out,
        "{} {} {}",
        f.members().len(),
        x,
        f.alphabet().size()
    );
    for member in f.members() {
        out.push_str(&member.to_text());
        out.push('\n');
    }
    out
}

/// Parses a family file, returning the family and its declared window length.
pub fn family_from_text(text: &str) -> Result<(Family, usize)> {
    let mut lines = text.lines().filter(|l| !l.trim().is_empty());
    let header = lines
        .next()
        .ok_or_else(|| Error::Parse("empty family file".into()))?;
    let mut tokens = header.split_whitespace();
    let count = parse_usize(tokens.next(), "member count")?;
    let x = parse_usize(tokens.next(), "window length")?;
    let alphabet = parse_alphabet(tokens.next())?;
    let members: Vec<CyclicPartialWord> = lines
        .map(|l| CyclicPartialWord::parse(l.trim(), alphabet))
        .collect::<Result<_>>()?;
    if members.len() != count {
        return Err(Error::Parse(format!(
            "family header declares {count} members but {} follow",
            members.len()
        )));
    }
    Ok((Family::new(members, alphabet)?, x))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn grid_round_trip() {
        for name in ["minimal", "trivial-8x8", "upmatrix-2x11"] {
            let g = match fixtures::get(name).unwrap() {
                fixtures::Fixture::Grid(g) => g,
                _ => unreachable!(),
            };
            let text = grid_to_text(&g);
            assert_eq!(grid_from_text(&text).unwrap(), g);
        }
    }

    #[test]
    fn grid_text_layout() {
        let g = fixtures::minimal_uptorus();
        assert_eq!(grid_to_text(&g), "3 4 2 torus\n*001\n1100\n1100\n");
    }

    #[test]
    fn family_round_trip() {
        let f = fixtures::family_f();
        let text = family_to_text(&f, 4);
        let (back, x) = family_from_text(&text).unwrap();
        assert_eq!(back, f);
        assert_eq!(x, 4);
    }

    #[test]
    fn word_round_trip() {
        let w = fixtures::universal_word_3();
        assert_eq!(
            word_from_text(&word_to_text(&w), w.alphabet()).unwrap(),
            w
        );
    }

    #[test]
    fn bad_headers_rejected() {
        assert!(grid_from_text("").is_err());
        assert!(grid_from_text("2 2 2 ring\n00\n00\n").is_err());
        assert!(grid_from_text("2 2 2 torus\n00\n").is_err());
        assert!(grid_from_text("1 3 2 matrix\n00\n").is_err());
        assert!(family_from_text("3 4 4\n001*110*\n").is_err());
    }
}
