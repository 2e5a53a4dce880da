use thiserror::Error;

use crate::freealg::GenSymbol;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("indeterminate `{0}` has no value in the assignment")]
    MissingIndeterminate(String),
    #[error("denominator vanishes at the evaluation point")]
    PoleAtPoint,
    #[error("symbolic coefficient cannot be converted without a numeric value for q")]
    SymbolicInNumericMode,
    #[error("rank must be at least 1, got {0}")]
    InvalidRank(usize),
    #[error("index {index} out of range 1..={n}")]
    IndexOutOfRange { index: usize, n: usize },
    #[error("symbol {0} is not in the alphabet `{1}`")]
    AlphabetMismatch(GenSymbol, String),
    #[error("symbol {0} has no star partner")]
    NoStarTable(GenSymbol),
    #[error("symbol {0} has no image under this map")]
    UnassignedSymbol(GenSymbol),
    #[error("matrix dimensions differ: {0} vs {1}")]
    DimensionMismatch(usize, usize),
    #[error("numeric q must not be 0, 1 or -1 (got {0})")]
    InvalidNumericQ(String),
    #[error("representation failed its own relation check: {0}")]
    RepresentationInvalid(String),
    #[error("state {0:?} is not a basis state of this module")]
    StateOutsideModule(Vec<u32>),
    #[error("no closed form implemented: {0}")]
    NoClosedForm(String),
    #[error("no relation with id `{0}`")]
    UnknownRelation(String),
}
