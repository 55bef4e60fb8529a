//! Upfamilies and universal partial quasi-families: verification, slicing an
//! upcycle by cut sets, and exhaustive slicing enumeration.

use std::collections::HashMap;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::ledger::CoverageLedger;
use crate::words::{
    common_diamond_count, Alphabet, CyclicPartialWord, Triviality, VerificationReport, REPORT_CAP,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum FamilyKind {
    /// All member lengths equal.
    Upfamily,
    /// Mixed lengths: a candidate quasi-family.
    QuasiFamily,
}

/// A set of cyclic partial words. Members are stored in canonical rotation,
/// sorted lexicographically; membership is cyclic equality.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Family {
    members: Vec<CyclicPartialWord>,
    alphabet: Alphabet,
}

impl Family {
    pub fn new(members: Vec<CyclicPartialWord>, alphabet: Alphabet) -> Result<Self> {
        let mut canonical: Vec<CyclicPartialWord> = members
            .iter()
            .map(|m| m.canonical_rotation())
            .collect();
        canonical.sort_by(|a, b| a.symbols().cmp(b.symbols()).then(a.len().cmp(&b.len())));
        for pair in canonical.windows(2) {
            if pair[0] == pair[1] {
                return Err(Error::Parse(
                    "family members must be pairwise cyclically distinct".into(),
                ));
            }
        }
        Ok(Family {
            members: canonical,
            alphabet,
        })
    }

    pub fn members(&self) -> &[CyclicPartialWord] {
        &self.members
    }

    pub fn alphabet(&self) -> Alphabet {
        self.alphabet
    }

    pub fn equal_lengths(&self) -> bool {
        self.members
            .windows(2)
            .all(|pair| pair[0].len() == pair[1].len())
    }

    pub fn kind(&self) -> FamilyKind {
        if self.equal_lengths() {
            FamilyKind::Upfamily
        } else {
            FamilyKind::QuasiFamily
        }
    }

    pub fn contains(&self, word: &CyclicPartialWord) -> bool {
        let canon = word.canonical_rotation();
        self.members.iter().any(|m| *m == canon)
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct FamilyReport {
    pub report: VerificationReport,
    pub kind: FamilyKind,
    /// Per-member diamondicity, reported when the member is longer than x.
    pub per_member_diamondicity: Vec<Option<u32>>,
    /// Codes covered by two distinct members (code, member, member), capped.
    pub cross_member_duplicates: Vec<(u64, usize, usize)>,
    /// Codes covered twice within one member (code, member), capped.
    pub within_member_duplicates: Vec<(u64, usize)>,
}

/// Checks that every word in A^x is covered by exactly one member and
/// exactly once within that member.
pub fn verify_family(f: &Family, x: usize) -> Result<FamilyReport> {
    if x < 1 {
        return Err(Error::BadWindowLength(x));
    }
    let mut combined = CoverageLedger::new(f.alphabet().size(), x)?;
    let mut owner: HashMap<u64, usize> = HashMap::new();
    let mut cross = Vec::new();
    let mut within = Vec::new();
    let mut per_member_diamondicity = Vec::with_capacity(f.members().len());
    for (idx, member) in f.members().iter().enumerate() {
        let ledger = member.coverage_ledger(x)?;
        for (code, count) in ledger.iter_nonzero() {
            if count > 1 && within.len() < REPORT_CAP {
                within.push((code, idx));
            }
            match owner.get(&code) {
                Some(&prev) if prev != idx => {
                    if cross.len() < REPORT_CAP {
                        cross.push((code, prev, idx));
                    }
                }
                _ => {
                    owner.insert(code, idx);
                }
            }
            for _ in 0..count {
                combined.add_pattern_code(code);
            }
        }
        per_member_diamondicity.push(if member.len() > x {
            common_diamond_count(&member.windows(x)?)
        } else {
            None
        });
    }
    let diamonds: usize = f.members().iter().map(|m| m.diamond_count()).sum();
    let cells: usize = f.members().iter().map(|m| m.len()).sum();
    let triviality = if diamonds == 0 {
        Triviality::NoDiamonds
    } else if diamonds == cells {
        Triviality::AllDiamonds
    } else {
        Triviality::NontrivialPartial
    };
    let report = VerificationReport::from_ledger(&combined, None, triviality);
    Ok(FamilyReport {
        report,
        kind: f.kind(),
        per_member_diamondicity,
        cross_member_duplicates: cross,
        within_member_duplicates: within,
    })
}

/// Cut positions in 0..|u|, strictly increasing.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CutSet {
    indices: Vec<usize>,
    source_len: usize,
}

impl CutSet {
    pub fn new(mut indices: Vec<usize>, source_len: usize) -> Result<Self> {
        indices.sort_unstable();
        indices.dedup();
        if indices.is_empty() {
            return Err(Error::BadCut(0, source_len));
        }
        if let Some(&bad) = indices.iter().find(|&&i| i >= source_len) {
            return Err(Error::BadCut(bad, source_len));
        }
        Ok(CutSet {
            indices,
            source_len,
        })
    }

    pub fn indices(&self) -> &[usize] {
        &self.indices
    }
}

/// The arcs of `u` between consecutive cut indices, wrapping from the last
/// cut back to the first, in cut order. The raw representations are kept so
/// that concatenating them in order reproduces `u` starting at the first cut.
pub fn slice_arcs(u: &CyclicPartialWord, cuts: &CutSet) -> Result<Vec<CyclicPartialWord>> {
    if cuts.source_len != u.len() {
        return Err(Error::BadCut(cuts.source_len, u.len()));
    }
    let idx = cuts.indices();
    let mut arcs = Vec::with_capacity(idx.len());
    for (j, &start) in idx.iter().enumerate() {
        let end = if j + 1 < idx.len() {
            idx[j + 1]
        } else {
            idx[0] + u.len()
        };
        let symbols = (start..end).map(|i| u.symbols()[i % u.len()]).collect();
        arcs.push(CyclicPartialWord::new(symbols, u.alphabet())?);
    }
    Ok(arcs)
}

pub fn slice(u: &CyclicPartialWord, cuts: &CutSet) -> Result<Family> {
    Family::new(slice_arcs(u, cuts)?, u.alphabet())
}

#[derive(Debug, Clone, Serialize)]
pub struct SlicingVerdict {
    pub cuts: Vec<usize>,
    pub member_lengths: Vec<usize>,
    pub valid: bool,
    pub equal_lengths: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct SlicingReport {
    pub source_len: usize,
    pub block: usize,
    pub x: usize,
    pub combinations_scanned: usize,
    /// Valid slicings counting the no-extra-cut case (the whole cycle).
    pub valid_including_whole: usize,
    /// Valid slicings with at least two members.
    pub valid_excluding_whole: usize,
    pub whole_cycle_valid: bool,
    pub equal_length_valid: usize,
    /// True when every valid equal-length slicing is an upfamily (it always
    /// is; kept as an explicitly checked claim).
    pub equal_length_all_upfamilies: bool,
    pub verdicts: Vec<SlicingVerdict>,
}

/// Scans every subset of the block boundaries (index 0 always cut) and
/// verifies each resulting slicing as a UPQF.
pub fn enumerate_slicings(u: &CyclicPartialWord, block: usize, x: usize) -> Result<SlicingReport> {
    if block == 0 || u.len() % block != 0 {
        return Err(Error::BadBlock(block, u.len()));
    }
    let boundaries = u.len() / block - 1;
    if boundaries > 24 {
        return Err(Error::TooLarge(format!(
            "{} optional boundaries is beyond the enumeration budget",
            boundaries
        )));
    }
    let mut verdicts = Vec::with_capacity(1 << boundaries);
    let mut valid_including = 0;
    let mut valid_excluding = 0;
    let mut whole_valid = false;
    let mut equal_valid = 0;
    let mut equal_all_upfamilies = true;
    for mask in 0u32..(1 << boundaries) {
        let mut indices = vec![0usize];
        for j in 0..boundaries {
            if mask & (1 << j) != 0 {
                indices.push(block * (j + 1));
            }
        }
        let cuts = CutSet::new(indices.clone(), u.len())?;
        let family = slice(u, &cuts)?;
        let report = verify_family(&family, x)?;
        let valid = report.report.valid;
        let equal_lengths = family.equal_lengths();
        if valid {
            valid_including += 1;
            if indices.len() >= 2 {
                valid_excluding += 1;
            } else {
                whole_valid = true;
            }
            if equal_lengths {
                equal_valid += 1;
                if report.kind != FamilyKind::Upfamily {
                    equal_all_upfamilies = false;
                }
            }
        }
        verdicts.push(SlicingVerdict {
            cuts: indices,
            member_lengths: family.members().iter().map(|m| m.len()).collect(),
            valid,
            equal_lengths,
        });
    }
    Ok(SlicingReport {
        source_len: u.len(),
        block,
        x,
        combinations_scanned: verdicts.len(),
        valid_including_whole: valid_including,
        valid_excluding_whole: valid_excluding,
        whole_cycle_valid: whole_valid,
        equal_length_valid: equal_valid,
        equal_length_all_upfamilies: equal_all_upfamilies,
        verdicts,
    })
}

/// Evidence probe for equal-length slicings at every start offset.
pub fn probe_equal_slicings(
    u: &CyclicPartialWord,
    piece_len: usize,
    x: usize,
    all_offsets: bool,
) -> Result<Vec<(usize, bool)>> {
    if piece_len == 0 || u.len() % piece_len != 0 {
        return Err(Error::BadBlock(piece_len, u.len()));
    }
    let limit = if all_offsets { u.len() } else { piece_len };
    let mut results = Vec::with_capacity(limit);
    for offset in 0..limit {
        let indices: Vec<usize> = (0..u.len() / piece_len)
            .map(|j| (offset + j * piece_len) % u.len())
            .collect();
        let cuts = CutSet::new(indices, u.len())?;
        let family = slice(u, &cuts)?;
        let valid = verify_family(&family, x)?.report.valid;
        results.push((offset, valid));
    }
    Ok(results)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn slice_reproduces_published_families() {
        let u = fixtures::eq1_upcycle();
        let cuts = CutSet::new((0..8).map(|j| j * 8).collect(), 64).unwrap();
        let family = slice(&u, &cuts).unwrap();
        assert_eq!(family, fixtures::family_f());

        let cuts = CutSet::new((0..8).map(|j| j * 8 + 1).collect(), 64).unwrap();
        assert_eq!(slice(&u, &cuts).unwrap(), fixtures::family_f_prime());

        let cuts = CutSet::new((0..8).map(|j| j * 8 + 2).collect(), 64).unwrap();
        assert_eq!(slice(&u, &cuts).unwrap(), fixtures::family_f_double_prime());

        let cuts = CutSet::new(vec![0, 8], 64).unwrap();
        assert_eq!(slice(&u, &cuts).unwrap(), fixtures::upqf_two_member());
    }

    #[test]
    fn slicing_conservation() {
        let u = fixtures::eq1_upcycle();
        let cuts = CutSet::new(vec![3, 17, 40], 64).unwrap();
        let arcs = slice_arcs(&u, &cuts).unwrap();
        let mut rebuilt = Vec::new();
        for arc in &arcs {
            rebuilt.extend_from_slice(arc.symbols());
        }
        assert_eq!(rebuilt, u.rotate(3).symbols());
    }

    #[test]
    fn verify_family_examples() {
        let report = verify_family(&fixtures::family_f(), 4).unwrap();
        assert!(report.report.valid);
        assert_eq!(report.kind, FamilyKind::Upfamily);
        assert!(report
            .per_member_diamondicity
            .iter()
            .all(|&d| d == Some(1)));

        let report = verify_family(&fixtures::invalid_s(), 4).unwrap();
        assert!(!report.report.valid);
        assert!(!report.cross_member_duplicates.is_empty());
        // 32*2 expands to 3202, 3212, 3222, 3232; all are double-covered
        // across the two members.
        let code_3202 = 3 * 64 + 2 * 16 + 0 * 4 + 2;
        assert!(report
            .cross_member_duplicates
            .iter()
            .any(|&(code, _, _)| code == code_3202));

        let report = verify_family(&fixtures::family_four_member(), 4).unwrap();
        assert!(report.report.valid);
    }

    #[test]
    fn enumerate_slicings_small() {
        let u = fixtures::u4();
        let report = enumerate_slicings(&u, 4, 4).unwrap();
        assert_eq!(report.combinations_scanned, 2);
        // The whole upcycle always verifies.
        assert!(report.whole_cycle_valid);
    }

    #[test]
    fn probe_equal_slicings_examples() {
        let u = fixtures::eq1_upcycle();
        let probed = probe_equal_slicings(&u, 8, 4, false).unwrap();
        assert!(probed.iter().take(3).all(|&(_, valid)| valid));

        let probed = probe_equal_slicings(&u, 16, 4, false).unwrap();
        assert!(probed[0].1);
    }

    #[test]
    fn nontrivial_member_lengths_exceed_window() {
        for family in [
            fixtures::family_f(),
            fixtures::family_f_prime(),
            fixtures::family_four_member(),
        ] {
            assert!(verify_family(&family, 4).unwrap().report.valid);
            assert!(family.members().iter().all(|m| m.len() > 4));
        }
    }
}
