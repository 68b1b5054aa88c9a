use thiserror::Error;

use crate::group::Family;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("rank {n} is below the minimum {min} for {family}")]
    RankTooSmall { family: Family, n: usize, min: usize },
    #[error("generator index {0} is outside 0..=n")]
    BadGenerator(usize),
    #[error("base window must have {expected} entries, got {got}")]
    WindowLength { expected: usize, got: usize },
    #[error("entries {0} and {1} share a residue mod N")]
    ResidueClash(i64, i64),
    #[error("entry {0} is divisible by N")]
    ZeroResidue(i64),
    #[error("w({i}) + w(N-{i}) = {sum}, expected N")]
    BalanceViolation { i: usize, sum: i64 },
    #[error("level vector must have {expected} entries, got {got}")]
    LevelsLength { expected: usize, got: usize },
    #[error("levels on runners {0} and N-{0} do not cancel")]
    Unbalanced(usize),
    #[error("parity condition fails for this family")]
    ParityViolation,
    #[error("element is not a minimal coset representative")]
    NotMinimal,
    #[error("position {0} is not an active bead")]
    NotActiveBead(i64),
    #[error("position {0} is divisible by N")]
    InvalidPosition(i64),
    #[error("partition rows must be positive and weakly decreasing")]
    NotAPartition,
    #[error("partition is not a (2n)-core")]
    NotACore,
    #[error("partition is not symmetric")]
    NotSymmetric,
    #[error("box ({0},{1}) lies outside the partition")]
    BoxOutside(usize, usize),
    #[error("central peeling found no descent")]
    StuckPeel,
    #[error("malformed bounded partition: {0}")]
    MalformedBounded(String),
    #[error("word is not reduced or not a coset representative word")]
    NonReducedWord,
    #[error("element is not present in the length table")]
    NotEnumerated,
    #[error("coordinate vector must have {expected} entries, got {got}")]
    CoordsLength { expected: usize, got: usize },
    #[error("unknown {kind} `{name}`")]
    Unknown { kind: &'static str, name: String },
    #[error("parse error: {0}")]
    Parse(String),
    #[error("length bound {requested} exceeds the supported maximum {bound}")]
    LengthBound { requested: usize, bound: usize },
    #[error("cannot render {0}")]
    UnrenderableCombination(String),
}

pub type Result<T> = std::result::Result<T, Error>;
