use thiserror::Error;

use crate::coalition::Coalition;
use crate::lp::LpError;
use crate::rational::Rational;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("player count {0} outside 1..=16")]
    InvalidPlayerCount(usize),
    #[error("expected {expected} entries, found {found}")]
    LengthMismatch { expected: usize, found: usize },
    #[error("the empty coalition must have value 0")]
    NonZeroEmpty,
    #[error("coalition {0} does not fit the player set")]
    CoalitionOutOfRange(Coalition),
    #[error("player {0} out of range")]
    PlayerOutOfRange(usize),
    #[error("games have different player counts ({0} vs {1})")]
    PlayerCountMismatch(usize, usize),
    #[error("known set is not minimal (exactly the empty set, singletons and N)")]
    NotMinimal,
    #[error("known set lacks the grand coalition or some N\\i")]
    NoUpperVector,
    #[error("coalition {0} is not known")]
    MissingCoalition(Coalition),
    #[error("not 1-convex extendable: {0}")]
    NotExtendable(String),
    #[error("game is not 1-convex")]
    NotOneConvex,
    #[error("game is not quasi-balanced")]
    NotQuasiBalanced,
    #[error("imputation set is empty: v(N) < sum of v(i)")]
    EmptyImputationSet,
    #[error("player {0} already belongs to the coalition")]
    PlayerInCoalition(usize),
    #[error("the extension set has no extreme rays")]
    NoRays,
    #[error("n = {n} exceeds the limit {max} for this computation")]
    TooLarge { n: usize, max: usize },
    #[error("game disagrees with the known values at {0}")]
    DisagreesOnKnown(Coalition),
    #[error("negative scaling factor {0}")]
    NegativeAlpha(Rational),
    #[error("unsupported known-set shape for this operation")]
    UnsupportedShape,
    #[error("games in a pair do not share the same known set")]
    IncompatiblePair,
    #[error("axiom {axiom} does not apply to value {value}")]
    AxiomDomain { axiom: String, value: String },
    #[error(transparent)]
    Lp(#[from] LpError),
}

pub type Result<T> = std::result::Result<T, Error>;
