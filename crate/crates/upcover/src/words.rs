//! Partial words and cyclic partial words: rotation, window extraction, the
//! covers relation, and verification of upwords and upcycles.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::ledger::CoverageLedger;

/// Report lists are truncated to this many entries; totals are kept exact.
pub const REPORT_CAP: usize = 32;

/// A finite alphabet {0, .., a-1}. Letters render as 0-9 then a-z, which caps
/// the size at 36.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct Alphabet {
    size: u32,
}

impl Alphabet {
    pub fn new(size: u32) -> Result<Self> {
        if (1..=36).contains(&size) {
            Ok(Alphabet { size })
        } else {
            Err(Error::BadAlphabet(size))
        }
    }

    pub fn size(&self) -> u32 {
        self.size
    }
}

/// A letter or the wildcard. The wildcard covers every letter.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum Symbol {
    Letter(u8),
    Diamond,
}

impl Symbol {
    pub fn is_diamond(self) -> bool {
        self == Symbol::Diamond
    }

    /// True if this symbol, viewed as a pattern position, covers `other`.
    pub fn covers(self, other: Symbol) -> bool {
        self == Symbol::Diamond || self == other
    }

    pub fn to_char(self) -> char {
        match self {
            Symbol::Diamond => '*',
            Symbol::Letter(v) if v < 10 => (b'0' + v) as char,
            Symbol::Letter(v) => (b'a' + v - 10) as char,
        }
    }

    pub fn from_char(c: char) -> Result<Self> {
        match c {
            '*' => Ok(Symbol::Diamond),
            '0'..='9' => Ok(Symbol::Letter(c as u8 - b'0')),
            'a'..='z' => Ok(Symbol::Letter(c as u8 - b'a' + 10)),
            _ => Err(Error::Parse(format!("invalid symbol character {c:?}"))),
        }
    }
}

fn check_symbols(symbols: &[Symbol], alphabet: Alphabet) -> Result<()> {
    for &sym in symbols {
        if let Symbol::Letter(v) = sym {
            if v as u32 >= alphabet.size() {
                return Err(Error::LetterOutOfRange {
                    letter: v as u32,
                    alphabet: alphabet.size(),
                });
            }
        }
    }
    Ok(())
}

fn symbols_from_text(text: &str) -> Result<Vec<Symbol>> {
    text.chars().map(Symbol::from_char).collect()
}

fn symbols_to_text(symbols: &[Symbol]) -> String {
    symbols.iter().map(|s| s.to_char()).collect()
}

/// A linear sequence of symbols over an alphabet plus the wildcard.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PartialWord {
    symbols: Vec<Symbol>,
    alphabet: Alphabet,
}

impl PartialWord {
    pub fn new(symbols: Vec<Symbol>, alphabet: Alphabet) -> Result<Self> {
        check_symbols(&symbols, alphabet)?;
        Ok(PartialWord { symbols, alphabet })
    }

    pub fn parse(text: &str, alphabet: Alphabet) -> Result<Self> {
        Self::new(symbols_from_text(text)?, alphabet)
    }

    pub fn to_text(&self) -> String {
        symbols_to_text(&self.symbols)
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    pub fn symbols(&self) -> &[Symbol] {
        &self.symbols
    }

    pub fn alphabet(&self) -> Alphabet {
        self.alphabet
    }

    pub fn is_total(&self) -> bool {
        !self.symbols.contains(&Symbol::Diamond)
    }

    pub fn diamond_count(&self) -> usize {
        self.symbols.iter().filter(|s| s.is_diamond()).count()
    }

    /// The |w| - n + 1 linear windows of length n, in index order.
    pub fn linear_windows(&self, n: usize) -> Result<Vec<PartialWord>> {
        if n < 1 || n > self.len() {
            return Err(Error::BadWindowLength(n));
        }
        Ok((0..=self.len() - n)
            .map(|i| PartialWord {
                symbols: self.symbols[i..i + n].to_vec(),
                alphabet: self.alphabet,
            })
            .collect())
    }

    pub fn coverage_ledger(&self, n: usize) -> Result<CoverageLedger> {
        let mut ledger = CoverageLedger::new(self.alphabet.size(), n)?;
        for w in self.linear_windows(n)? {
            ledger.add_pattern(w.symbols());
        }
        Ok(ledger)
    }
}

/// A nonempty cyclic sequence of symbols, stored with an explicit start
/// index. No automatic canonicalization: constructions rely on stable
/// relative rotations.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CyclicPartialWord {
    symbols: Vec<Symbol>,
    alphabet: Alphabet,
}

impl CyclicPartialWord {
    pub fn new(symbols: Vec<Symbol>, alphabet: Alphabet) -> Result<Self> {
        if symbols.is_empty() {
            return Err(Error::Parse("cyclic word must be nonempty".into()));
        }
        check_symbols(&symbols, alphabet)?;
        Ok(CyclicPartialWord { symbols, alphabet })
    }

    pub fn parse(text: &str, alphabet: Alphabet) -> Result<Self> {
        Self::new(symbols_from_text(text)?, alphabet)
    }

    pub fn to_text(&self) -> String {
        symbols_to_text(&self.symbols)
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn symbols(&self) -> &[Symbol] {
        &self.symbols
    }

    pub fn alphabet(&self) -> Alphabet {
        self.alphabet
    }

    pub fn is_total(&self) -> bool {
        !self.symbols.contains(&Symbol::Diamond)
    }

    pub fn diamond_count(&self) -> usize {
        self.symbols.iter().filter(|s| s.is_diamond()).count()
    }

    pub fn get(&self, index: i64) -> Symbol {
        let len = self.len() as i64;
        self.symbols[index.rem_euclid(len) as usize]
    }

    /// sigma^i: result_j = c_{(j+i) mod |c|}. Negative i rotates backwards.
    pub fn rotate(&self, i: i64) -> CyclicPartialWord {
        let len = self.len() as i64;
        let shift = i.rem_euclid(len) as usize;
        let mut symbols = Vec::with_capacity(self.len());
        symbols.extend_from_slice(&self.symbols[shift..]);
        symbols.extend_from_slice(&self.symbols[..shift]);
        CyclicPartialWord {
            symbols,
            alphabet: self.alphabet,
        }
    }

    /// The |c| cyclic windows of length n, in index order. The window length
    /// may exceed |c|; indexing wraps as many times as needed.
    pub fn windows(&self, n: usize) -> Result<Vec<PartialWord>> {
        if n < 1 {
            return Err(Error::BadWindowLength(n));
        }
        let len = self.len();
        Ok((0..len)
            .map(|i| PartialWord {
                symbols: (0..n).map(|j| self.symbols[(i + j) % len]).collect(),
                alphabet: self.alphabet,
            })
            .collect())
    }

    pub fn coverage_ledger(&self, n: usize) -> Result<CoverageLedger> {
        let mut ledger = CoverageLedger::new(self.alphabet.size(), n)?;
        for w in self.windows(n)? {
            ledger.add_pattern(w.symbols());
        }
        Ok(ledger)
    }

    /// True iff `other` is a rotation of `self`. This is the equality used
    /// for family membership.
    pub fn cyclically_equal(&self, other: &CyclicPartialWord) -> bool {
        self.alphabet == other.alphabet
            && self.len() == other.len()
            && (0..self.len() as i64).any(|i| self.rotate(i).symbols == other.symbols)
    }

    /// The lexicographically least rotation, used as a deterministic
    /// representative for catalogs and family ordering.
    pub fn canonical_rotation(&self) -> CyclicPartialWord {
        (0..self.len() as i64)
            .map(|i| self.rotate(i))
            .min_by(|a, b| a.symbols.cmp(&b.symbols))
            .unwrap()
    }
}

/// Triviality classes for verified objects.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Triviality {
    NontrivialPartial,
    NoDiamonds,
    AllDiamonds,
    DegenerateShape,
}

#[derive(Debug, Clone, Serialize)]
pub struct VerificationReport {
    pub valid: bool,
    pub missing: Vec<u64>,
    pub missing_total: u64,
    pub duplicated: Vec<(u64, u16)>,
    pub duplicated_total: u64,
    pub diamondicity: Option<u32>,
    pub triviality: Triviality,
}

impl VerificationReport {
    pub(crate) fn from_ledger(
        ledger: &CoverageLedger,
        diamondicity: Option<u32>,
        triviality: Triviality,
    ) -> Self {
        let audit = ledger.audit(REPORT_CAP);
        VerificationReport {
            valid: audit.missing_total == 0 && audit.duplicated_total == 0,
            missing: audit.missing,
            missing_total: audit.missing_total,
            duplicated: audit.duplicated,
            duplicated_total: audit.duplicated_total,
            diamondicity,
            triviality,
        }
    }
}

pub(crate) fn common_diamond_count<'a, I>(windows: I) -> Option<u32>
where
    I: IntoIterator<Item = &'a PartialWord>,
{
    let mut counts = windows.into_iter().map(|w| w.diamond_count() as u32);
    let first = counts.next()?;
    counts.all(|c| c == first).then_some(first)
}

fn word_triviality(diamonds: usize, total_len: usize) -> Triviality {
    if diamonds == 0 {
        Triviality::NoDiamonds
    } else if diamonds == total_len {
        Triviality::AllDiamonds
    } else {
        Triviality::NontrivialPartial
    }
}

/// True iff `cover` covers `target` positionwise: at every position the
/// cover has a diamond or the identical letter. Both words must have the
/// same length and `target` must be total.
pub fn covers_word(cover: &PartialWord, target: &PartialWord) -> Result<bool> {
    if cover.len() != target.len() {
        return Err(Error::LengthMismatch {
            cover: cover.len(),
            target: target.len(),
        });
    }
    if !target.is_total() {
        return Err(Error::TargetNotTotal);
    }
    Ok(cover
        .symbols()
        .iter()
        .zip(target.symbols())
        .all(|(&c, &t)| c.covers(t)))
}

/// Checks that `w` covers every word in A^n exactly once among its linear
/// windows.
pub fn verify_upword(w: &PartialWord, n: usize) -> Result<VerificationReport> {
    let windows = w.linear_windows(n)?;
    let ledger = w.coverage_ledger(n)?;
    Ok(VerificationReport::from_ledger(
        &ledger,
        common_diamond_count(&windows),
        word_triviality(w.diamond_count(), w.len()),
    ))
}

/// Checks that `u` covers every word in A^n exactly once among its cyclic
/// windows.
pub fn verify_upcycle(u: &CyclicPartialWord, n: usize) -> Result<VerificationReport> {
    let windows = u.windows(n)?;
    let ledger = u.coverage_ledger(n)?;
    Ok(VerificationReport::from_ledger(
        &ledger,
        common_diamond_count(&windows),
        word_triviality(u.diamond_count(), u.len()),
    ))
}

/// The common diamond count of all n-windows of `u`, when it exists.
pub fn diamondicity_of(u: &CyclicPartialWord, n: usize) -> Result<Option<u32>> {
    Ok(common_diamond_count(&u.windows(n)?))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cyclic(text: &str, a: u32) -> CyclicPartialWord {
        CyclicPartialWord::parse(text, Alphabet::new(a).unwrap()).unwrap()
    }

    fn word(text: &str, a: u32) -> PartialWord {
        PartialWord::parse(text, Alphabet::new(a).unwrap()).unwrap()
    }

    #[test]
    fn covers_word_examples() {
        assert!(covers_word(&word("****", 2), &word("0110", 2)).unwrap());
        assert!(!covers_word(&word("003*", 4), &word("2000", 4)).unwrap());
        assert!(covers_word(&word("2*", 4), &word("20", 4)).unwrap());
        // Within 003*112* the cyclic window at position 6 is 2*00 and covers 2000.
        let u = cyclic("003*112*", 4);
        let w6 = &u.windows(4).unwrap()[6];
        assert_eq!(w6.to_text(), "2*00");
        assert!(covers_word(w6, &word("2000", 4)).unwrap());
        assert!(covers_word(&word("001*", 2), &word("0010", 2)).unwrap());
        assert!(!covers_word(&word("001*", 2), &word("0110", 2)).unwrap());
    }

    #[test]
    fn covers_word_errors() {
        assert!(matches!(
            covers_word(&word("00", 2), &word("000", 2)),
            Err(Error::LengthMismatch { .. })
        ));
        assert!(matches!(
            covers_word(&word("00", 2), &word("0*", 2)),
            Err(Error::TargetNotTotal)
        ));
    }

    #[test]
    fn rotation_examples() {
        let u = cyclic("001*110*", 2);
        assert_eq!(u.rotate(5).to_text(), "10*001*1");
        assert_eq!(u.rotate(0), u);
        assert_eq!(u.rotate(8), u);
        assert_eq!(u.rotate(-3), u.rotate(5));
        assert_eq!(u.rotate(2).rotate(3), u.rotate(5));
    }

    #[test]
    fn window_examples() {
        let u = cyclic("001*110*", 2);
        let ws = u.windows(4).unwrap();
        assert_eq!(ws.len(), 8);
        assert_eq!(ws[0].to_text(), "001*");
        let single = cyclic("0", 2).windows(1).unwrap();
        assert_eq!(single.len(), 1);
        assert_eq!(single[0].to_text(), "0");
        let pair = cyclic("0*", 2).windows(2).unwrap();
        assert_eq!(pair[0].to_text(), "0*");
        assert_eq!(pair[1].to_text(), "*0");
        assert!(matches!(u.windows(0), Err(Error::BadWindowLength(0))));
    }

    #[test]
    fn coverage_examples() {
        let ledger = cyclic("001*110*", 2).coverage_ledger(4).unwrap();
        assert!(ledger.is_exactly_once());
        assert_eq!(ledger.total_mass(), 16);

        let ledger = cyclic("0000100110101111", 2).coverage_ledger(4).unwrap();
        assert!(ledger.is_exactly_once());

        let ledger = cyclic("001*110*", 2).coverage_ledger(3).unwrap();
        assert!((0..8).any(|code| ledger.count(code) >= 2));
    }

    #[test]
    fn verify_upword_examples() {
        let report = verify_upword(&word("0120221100", 3), 2).unwrap();
        assert!(report.valid);
        assert_eq!(report.diamondicity, Some(0));
        assert_eq!(report.triviality, Triviality::NoDiamonds);

        let report = verify_upword(&word("**", 2), 2).unwrap();
        assert!(report.valid);
        assert_eq!(report.triviality, Triviality::AllDiamonds);

        let report = verify_upword(&word("0011", 2), 2).unwrap();
        assert!(!report.valid);
        // 10 needs the wraparound, which linear windows do not have.
        assert!(report.missing.contains(&0b10));
    }

    #[test]
    fn verify_upcycle_examples() {
        let report = verify_upcycle(&cyclic("001*110*", 2), 4).unwrap();
        assert!(report.valid);
        assert_eq!(report.diamondicity, Some(1));
        assert_eq!(report.triviality, Triviality::NontrivialPartial);

        let report = verify_upcycle(&cyclic("0011", 2), 4).unwrap();
        assert!(!report.valid);
    }

    #[test]
    fn diamondicity_examples() {
        assert_eq!(diamondicity_of(&cyclic("001*110*", 2), 4).unwrap(), Some(1));
        assert_eq!(diamondicity_of(&cyclic("0011", 2), 2).unwrap(), Some(0));
        assert_eq!(diamondicity_of(&cyclic("0*11", 2), 2).unwrap(), None);
    }

    #[test]
    fn cyclic_equality_and_canonical_rotation() {
        let u = cyclic("001*110*", 2);
        assert!(u.cyclically_equal(&u.rotate(5)));
        assert!(!u.cyclically_equal(&cyclic("0011110*", 2)));
        assert_eq!(u.canonical_rotation(), u.rotate(5).canonical_rotation());
    }

    #[test]
    fn report_caps_hold() {
        // Wildly invalid input: a constant word misses almost everything.
        let report = verify_upcycle(&cyclic("000000000", 2), 8).unwrap();
        assert!(!report.valid);
        assert!(report.missing.len() <= REPORT_CAP);
        assert_eq!(report.missing_total, 255);
    }
}
