//! Exact multiset of covered total words (or matrices), keyed by base-`a`
//! integer codes. Dense array up to 2^26 codes, hash table beyond that.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::words::Symbol;

const DENSE_LIMIT: u64 = 1 << 26;
const SPACE_LIMIT: u128 = 1 << 40;

enum Storage {
    Dense(Vec<u16>),
    Sparse(HashMap<u64, u16>),
}

/// Counts how many (window, diamond-assignment) pairs produce each total word.
/// Codes are base-`a`, most-significant symbol first. Counts saturate at
/// `u16::MAX`; validity only needs to distinguish 0, 1, and >1. The exact
/// total coverage mass is tracked separately.
pub struct CoverageLedger {
    slots: usize,
    alphabet_size: u64,
    space: u64,
    storage: Storage,
    total_mass: u128,
}

impl CoverageLedger {
    pub fn new(alphabet_size: u32, slots: usize) -> Result<Self> {
        let a = alphabet_size as u128;
        let mut space: u128 = 1;
        for _ in 0..slots {
            space = space.checked_mul(a).filter(|&s| s <= SPACE_LIMIT).ok_or(
                Error::ShapeTooLarge {
                    w: 1,
                    l: slots,
                    reason: format!("{alphabet_size}^{slots} codes exceed the ledger limit"),
                },
            )?;
        }
        let space = space as u64;
        let storage = if space <= DENSE_LIMIT {
            Storage::Dense(vec![0; space as usize])
        } else {
            Storage::Sparse(HashMap::new())
        };
        Ok(CoverageLedger {
            slots,
            alphabet_size: alphabet_size as u64,
            space,
            storage,
            total_mass: 0,
        })
    }

    pub fn slots(&self) -> usize {
        self.slots
    }

    pub fn space(&self) -> u64 {
        self.space
    }

    /// Total coverage mass: sum over added windows of a^(diamonds in window).
    pub fn total_mass(&self) -> u128 {
        self.total_mass
    }

    pub fn count(&self, code: u64) -> u16 {
        match &self.storage {
            Storage::Dense(v) => v[code as usize],
            Storage::Sparse(m) => m.get(&code).copied().unwrap_or(0),
        }
    }

    fn increment(&mut self, code: u64) {
        match &mut self.storage {
            Storage::Dense(v) => {
                let c = &mut v[code as usize];
                *c = c.saturating_add(1);
            }
            Storage::Sparse(m) => {
                let c = m.entry(code).or_insert(0);
                *c = c.saturating_add(1);
            }
        }
    }

    /// Commits one window: every total word the pattern covers gets one count.
    pub fn add_pattern(&mut self, symbols: &[Symbol]) {
        debug_assert_eq!(symbols.len(), self.slots);
        let a = self.alphabet_size;
        let mut base: u64 = 0;
        let mut diamond_weights: Vec<u64> = Vec::new();
        for &sym in symbols {
            base = base * a
                + match sym {
                    Symbol::Letter(v) => v as u64,
                    Symbol::Diamond => 0,
                };
            for w in &mut diamond_weights {
                *w *= a;
            }
            if sym == Symbol::Diamond {
                diamond_weights.push(1);
            }
        }
        let d = diamond_weights.len();
        let expansions = a.pow(d as u32);
        self.total_mass += expansions as u128;
        if d == 0 {
            self.increment(base);
            return;
        }
        // Odometer over the diamond positions.
        let mut digits = vec![0u64; d];
        let mut code = base;
        loop {
            self.increment(code);
            let mut i = 0;
            loop {
                if i == d {
                    return;
                }
                digits[i] += 1;
                code += diamond_weights[i];
                if digits[i] < a {
                    break;
                }
                code -= diamond_weights[i] * a;
                digits[i] = 0;
                i += 1;
            }
        }
    }

    /// Adds one count for a single total-word code.
    pub fn add_pattern_code(&mut self, code: u64) {
        self.total_mass += 1;
        self.increment(code);
    }

    /// Iterates codes with a nonzero count. For sparse storage the order is
    /// unspecified.
    pub fn iter_nonzero(&self) -> Box<dyn Iterator<Item = (u64, u16)> + '_> {
        match &self.storage {
            Storage::Dense(v) => Box::new(
                v.iter()
                    .enumerate()
                    .filter(|(_, &c)| c > 0)
                    .map(|(i, &c)| (i as u64, c)),
            ),
            Storage::Sparse(m) => Box::new(m.iter().map(|(&k, &v)| (k, v))),
        }
    }

    pub fn covered_codes(&self) -> u64 {
        self.iter_nonzero().count() as u64
    }

    /// Missing and duplicated codes, each list capped at `cap` entries, with
    /// full totals alongside. Sparse ledgers do not enumerate missing codes.
    pub fn audit(&self, cap: usize) -> LedgerAudit {
        let mut missing = Vec::new();
        let mut missing_total: u64 = 0;
        let mut duplicated = Vec::new();
        let mut duplicated_total: u64 = 0;
        match &self.storage {
            Storage::Dense(v) => {
                for (code, &c) in v.iter().enumerate() {
                    if c == 0 {
                        missing_total += 1;
                        if missing.len() < cap {
                            missing.push(code as u64);
                        }
                    } else if c > 1 {
                        duplicated_total += 1;
                        if duplicated.len() < cap {
                            duplicated.push((code as u64, c));
                        }
                    }
                }
            }
            Storage::Sparse(m) => {
                missing_total = self.space - m.len() as u64;
                let mut dups: Vec<_> = m.iter().filter(|(_, &c)| c > 1).collect();
                dups.sort();
                for (&code, &c) in dups {
                    duplicated_total += 1;
                    if duplicated.len() < cap {
                        duplicated.push((code, c));
                    }
                }
            }
        }
        LedgerAudit {
            missing,
            missing_total,
            duplicated,
            duplicated_total,
        }
    }

    pub fn is_exactly_once(&self) -> bool {
        let audit = self.audit(1);
        audit.missing_total == 0 && audit.duplicated_total == 0
    }
}

pub struct LedgerAudit {
    pub missing: Vec<u64>,
    pub missing_total: u64,
    pub duplicated: Vec<(u64, u16)>,
    pub duplicated_total: u64,
}

/// Base-`a` code of a total symbol sequence, most-significant symbol first.
pub fn code_of(symbols: &[Symbol], alphabet_size: u32) -> Option<u64> {
    let a = alphabet_size as u64;
    let mut code = 0u64;
    for &sym in symbols {
        match sym {
            Symbol::Letter(v) => code = code * a + v as u64,
            Symbol::Diamond => return None,
        }
    }
    Some(code)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::words::Symbol::{Diamond, Letter};

    #[test]
    fn pattern_expansion_counts() {
        let mut ledger = CoverageLedger::new(2, 3).unwrap();
        ledger.add_pattern(&[Letter(0), Diamond, Letter(1)]);
        // 001 and 011
        assert_eq!(ledger.count(0b001), 1);
        assert_eq!(ledger.count(0b011), 1);
        assert_eq!(ledger.count(0b000), 0);
        assert_eq!(ledger.total_mass(), 2);
    }

    #[test]
    fn all_diamond_pattern_covers_everything() {
        let mut ledger = CoverageLedger::new(3, 2).unwrap();
        ledger.add_pattern(&[Diamond, Diamond]);
        assert!(ledger.is_exactly_once());
        assert_eq!(ledger.total_mass(), 9);
    }

    #[test]
    fn saturating_counts() {
        let mut ledger = CoverageLedger::new(2, 1).unwrap();
        for _ in 0..70000 {
            ledger.add_pattern(&[Letter(0)]);
        }
        assert_eq!(ledger.count(0), u16::MAX);
        assert_eq!(ledger.total_mass(), 70000);
    }
}
