//! Built-in corpus of published universal-partial-object examples.
//!
//! Every explicit word, grid, family, and rotation sequence used by the
//! tests and examples is constructed here from its exact text form, so the
//! test suite and the CLI (`fixture:<name>`) run with no external data.

use crate::construct::RotationSequence;
use crate::error::{Error, Result};
use crate::families::Family;
use crate::grids::{GridMode, PartialGrid};
use crate::words::{Alphabet, CyclicPartialWord, PartialWord};

fn a(size: u32) -> Alphabet {
    Alphabet::new(size).expect("fixture alphabet")
}

fn cycle(text: &str, size: u32) -> CyclicPartialWord {
    CyclicPartialWord::parse(text, a(size)).expect("fixture cycle")
}

fn word(text: &str, size: u32) -> PartialWord {
    PartialWord::parse(text, a(size)).expect("fixture word")
}

fn grid(rows: &[&str], size: u32, mode: GridMode) -> PartialGrid {
    PartialGrid::from_rows(rows, a(size), mode).expect("fixture grid")
}

fn family(members: &[&str], size: u32) -> Family {
    let alphabet = a(size);
    let members = members
        .iter()
        .map(|m| CyclicPartialWord::parse(m, alphabet).expect("fixture family member"))
        .collect();
    Family::new(members, alphabet).expect("fixture family")
}

/// The length-8 binary upcycle for window 4 with diamondicity 1.
pub fn u4() -> CyclicPartialWord {
    cycle("001*110*", 2)
}

/// The classic binary De Bruijn cycle of order 4.
pub fn db16() -> CyclicPartialWord {
    cycle("0000100110101111", 2)
}

/// A universal (linear) word for {0,1,2}^2.
pub fn universal_word_3() -> PartialWord {
    word("0120221100", 3)
}

/// The 64-symbol quaternary upcycle obtained from u4 by alphabet doubling.
pub fn eq1_upcycle() -> CyclicPartialWord {
    cycle(EQ1_TEXT, 4)
}

const EQ1_TEXT: &str =
    "001*110*003*112*021*130*023*132*201*310*203*312*221*330*223*332*";

/// The published 64-digit De Bruijn cycle over {0..7}^2 used to build the
/// 64x8 uptorus from u4.
pub fn s64() -> RotationSequence {
    let values = "0017020304050607112722313733414247445152535755616263646776654321"
        .bytes()
        .map(|b| (b - b'0') as u32)
        .collect();
    RotationSequence::new(values, 8).expect("fixture rotation sequence")
}

/// The 8x8 quaternary grid whose rows are the upfamily members; a trivial
/// uptorus for window 1x4.
pub fn trivial_8x8() -> PartialGrid {
    grid(&FAMILY_F_TEXT, 4, GridMode::Torus)
}

/// First published binary 3x5 upmatrix for window 2x2.
pub fn upmatrix_a() -> PartialGrid {
    grid(&["00110", "0*1*0", "10011"], 2, GridMode::Matrix)
}

/// Second published binary 3x6 upmatrix for window 2x2.
pub fn upmatrix_b() -> PartialGrid {
    grid(&["000111", "011001", "*1**00"], 2, GridMode::Matrix)
}

/// Third published binary 4x5 upmatrix for window 2x2.
pub fn upmatrix_c() -> PartialGrid {
    grid(&["*001*", "11001", "11001", "*001*"], 2, GridMode::Matrix)
}

/// The published binary 2x11 upmatrix for window 2x2.
pub fn upmatrix_2x11() -> PartialGrid {
    grid(&["00000101*1*", "0011001*011"], 2, GridMode::Matrix)
}

/// The minimal nontrivial binary uptorus (3x4, window 2x2, one diamond).
pub fn minimal_uptorus() -> PartialGrid {
    grid(&["*001", "1100", "1100"], 2, GridMode::Torus)
}

/// Equivalent forms of the minimal uptorus published alongside it.
pub fn minimal_uptorus_equivalents() -> Vec<PartialGrid> {
    vec![
        grid(&["*110", "0011", "0011"], 2, GridMode::Torus),
        grid(&["100*", "0011", "0011"], 2, GridMode::Torus),
        grid(&["1100", "1100", "*001"], 2, GridMode::Torus),
        grid(&["*11", "011", "000", "100"], 2, GridMode::Torus),
    ]
}

const FAMILY_F_TEXT: [&str; 8] = [
    "001*110*", "003*112*", "021*130*", "023*132*", "201*310*", "203*312*", "221*330*",
    "223*332*",
];

/// The 8-member quaternary upfamily for window 4 (slices of the 64-symbol
/// upcycle starting at index 0).
pub fn family_f() -> Family {
    family(&FAMILY_F_TEXT, 4)
}

/// Same slicing shifted by one position.
pub fn family_f_prime() -> Family {
    family(
        &[
            "01*110*0", "03*112*0", "21*130*0", "23*132*2", "01*310*2", "03*312*2",
            "21*330*2", "23*332*0",
        ],
        4,
    )
}

/// Same slicing shifted by two positions.
pub fn family_f_double_prime() -> Family {
    family(
        &[
            "1*110*00", "3*112*02", "1*130*02", "3*132*20", "1*310*20", "3*312*22",
            "1*330*22", "3*332*00",
        ],
        4,
    )
}

/// Four-member upfamily: length-16 slices of the 64-symbol upcycle.
pub fn family_four_member() -> Family {
    family(
        &[
            "001*110*003*112*",
            "021*130*023*132*",
            "201*310*203*312*",
            "221*330*223*332*",
        ],
        4,
    )
}

/// A valid two-member quasi-family: one length-8 piece plus the remaining 56
/// symbols of the 64-symbol upcycle.
pub fn upqf_two_member() -> Family {
    family(
        &[
            "001*110*",
            "003*112*021*130*023*132*201*310*203*312*221*330*223*332*",
        ],
        4,
    )
}

/// A published invalid candidate set: both members cover 32*2.
pub fn invalid_s() -> Family {
    family(
        &[
            "223*332*",
            "001*110*003*112*021*130*023*132*201*310*203*312*221*330*",
        ],
        4,
    )
}

/// The published five-member quasi-family used to build a torus with no
/// well-defined diamondicity.
pub fn upqf_five_member() -> Family {
    family(
        &[
            "001*110*003*112*021*130*023*132*",
            "201*310*",
            "203*312*",
            "221*330*",
            "223*332*",
        ],
        4,
    )
}

/// The lifts of the four short members of the five-member quasi-family.
pub fn family_f2_lifted() -> Family {
    family(
        &[
            "20103100201131012012310220133103",
            "20303120203131212032312220333123",
            "22103300221133012212330222133303",
            "22303320223133212232332222333323",
        ],
        4,
    )
}

/// Worked lifting example: input cycle.
pub fn lift_input() -> CyclicPartialWord {
    cycle("003*112*", 4)
}

/// Worked lifting example: expected total output.
pub fn lift_output() -> CyclicPartialWord {
    cycle("00301120003111210032112200331123", 4)
}

/// The 3x4 matrix located in the worked locator example.
pub fn locate_p() -> PartialGrid {
    grid(&["0011", "1010", "1001"], 2, GridMode::Matrix)
}

/// A named fixture object of any supported kind.
#[derive(Debug, Clone)]
pub enum Fixture {
    Word(PartialWord),
    Cycle(CyclicPartialWord),
    Grid(PartialGrid),
    Family(Family),
    Rotation(RotationSequence),
}

/// All fixture names, in listing order.
pub const NAMES: [&str; 26] = [
    "u4",
    "db16",
    "universal-word-3",
    "eq1",
    "s64",
    "trivial-8x8",
    "upmatrix-a",
    "upmatrix-b",
    "upmatrix-c",
    "upmatrix-2x11",
    "minimal",
    "minimal-alt-1",
    "minimal-alt-2",
    "minimal-alt-3",
    "minimal-4x3",
    "F",
    "F-prime",
    "F-double-prime",
    "F-four",
    "upqf-2",
    "S_invalid",
    "upqf-5",
    "lift-in",
    "lift-out",
    "F2",
    "locate-P",
];

/// Looks up a fixture by name, accepting an optional `fixture:` prefix.
pub fn get(name: &str) -> Result<Fixture> {
    let name = name.strip_prefix("fixture:").unwrap_or(name);
    let f = match name {
        "u4" => Fixture::Cycle(u4()),
        "db16" => Fixture::Cycle(db16()),
        "universal-word-3" => Fixture::Word(universal_word_3()),
        "eq1" => Fixture::Cycle(eq1_upcycle()),
        "s64" => Fixture::Rotation(s64()),
        "trivial-8x8" => Fixture::Grid(trivial_8x8()),
        "upmatrix-a" => Fixture::Grid(upmatrix_a()),
        "upmatrix-b" => Fixture::Grid(upmatrix_b()),
        "upmatrix-c" => Fixture::Grid(upmatrix_c()),
        "upmatrix-2x11" => Fixture::Grid(upmatrix_2x11()),
        "minimal" => Fixture::Grid(minimal_uptorus()),
        "minimal-alt-1" => Fixture::Grid(minimal_uptorus_equivalents()[0].clone()),
        "minimal-alt-2" => Fixture::Grid(minimal_uptorus_equivalents()[1].clone()),
        "minimal-alt-3" => Fixture::Grid(minimal_uptorus_equivalents()[2].clone()),
        "minimal-4x3" => Fixture::Grid(minimal_uptorus_equivalents()[3].clone()),
        "F" => Fixture::Family(family_f()),
        "F-prime" => Fixture::Family(family_f_prime()),
        "F-double-prime" => Fixture::Family(family_f_double_prime()),
        "F-four" => Fixture::Family(family_four_member()),
        "upqf-2" => Fixture::Family(upqf_two_member()),
        "S_invalid" => Fixture::Family(invalid_s()),
        "upqf-5" => Fixture::Family(upqf_five_member()),
        "lift-in" => Fixture::Cycle(lift_input()),
        "lift-out" => Fixture::Cycle(lift_output()),
        "F2" => Fixture::Family(family_f2_lifted()),
        "locate-P" => Fixture::Grid(locate_p()),
        _ => return Err(Error::Parse(format!("unknown fixture `{name}`"))),
    };
    Ok(f)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_listed_name_resolves() {
        for name in NAMES {
            assert!(get(name).is_ok(), "{name}");
            assert!(get(&format!("fixture:{name}")).is_ok(), "{name}");
        }
        assert!(get("no-such-fixture").is_err());
    }

    #[test]
    fn eq1_is_the_concatenation_of_family_f_in_order() {
        let joined: String = FAMILY_F_TEXT.concat();
        assert_eq!(joined, EQ1_TEXT);
    }

    #[test]
    fn lengths_and_alphabets() {
        assert_eq!(u4().len(), 8);
        assert_eq!(eq1_upcycle().len(), 64);
        assert_eq!(s64().values().len(), 64);
        assert_eq!(trivial_8x8().rows(), 8);
        assert_eq!(trivial_8x8().cols(), 8);
        assert_eq!(family_f().members().len(), 8);
        assert_eq!(upqf_five_member().members().len(), 5);
        assert_eq!(family_f2_lifted().members().len(), 4);
        assert_eq!(lift_output().len(), 32);
    }
}
