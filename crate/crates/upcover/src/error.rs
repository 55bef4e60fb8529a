use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("alphabet size {0} out of range (1..=36)")]
    BadAlphabet(u32),
    #[error("letter {letter} out of range for alphabet of size {alphabet}")]
    LetterOutOfRange { letter: u32, alphabet: u32 },
    #[error("length mismatch: cover has {cover} symbols, target has {target}")]
    LengthMismatch { cover: usize, target: usize },
    #[error("target word contains a diamond")]
    TargetNotTotal,
    #[error("bad window length {0} (must be >= 1 and fit the object)")]
    BadWindowLength(usize),
    #[error("subarray anchor ({r},{c}) out of bounds for matrix mode")]
    OutOfBounds { r: i64, c: i64 },
    #[error("window shape {w}x{l} too large: {reason}")]
    ShapeTooLarge { w: usize, l: usize, reason: String },
    #[error("row count p = {0} must be at least 2")]
    BadP(usize),
    #[error("word is not an upword for the requested window length")]
    NotAnUpword,
    #[error("cyclic word is not an upcycle for the requested window length")]
    NotAnUpcycle,
    #[error("rotation value {value} out of range for row length {len}")]
    RotationOutOfRange { value: u32, len: usize },
    #[error("rotation sequence is not a De Bruijn cycle over {{0..{modulus}}}^{order}")]
    NotADeBruijnCycle { modulus: usize, order: usize },
    #[error("matrix contains a diamond; locate requires a total matrix")]
    NotTotal,
    #[error("shape mismatch: expected {expected_rows}x{expected_cols}, got {rows}x{cols}")]
    ShapeMismatch {
        expected_rows: usize,
        expected_cols: usize,
        rows: usize,
        cols: usize,
    },
    #[error("matrix is not covered by the torus")]
    NotCovered,
    #[error("first and last rows differ; the alternating sequence does not close up")]
    LemmaViolation,
    #[error("family members have unequal lengths")]
    UnequalFamilyLengths,
    #[error("window at position {0} has {1} diamonds; lifting requires exactly 1 per window")]
    DiamondicityNotOne(usize, usize),
    #[error("input covers some word more than once")]
    DoubleCoverage,
    #[error("quasi-family does not meet condition ({condition}): {detail}")]
    ConditionsNotMet { condition: char, detail: String },
    #[error("cut index {0} out of range for word of length {1}")]
    BadCut(usize, usize),
    #[error("block size {0} does not divide the word length {1}")]
    BadBlock(usize, usize),
    #[error("instance too large for brute force: {0}")]
    TooLarge(String),
    #[error("search space too large: {0}")]
    SpecTooLarge(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
