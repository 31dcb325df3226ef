//! Error types shared across the crate.

use thiserror::Error;

/// Errors from diagram construction, validation and local moves.
#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum DiagramError {
    #[error("component index {index} out of range 1..={count}")]
    ComponentOutOfRange { index: usize, count: usize },
    #[error("arc id {0} does not exist")]
    UnknownArc(usize),
    #[error("crossing id {0} does not exist")]
    UnknownCrossing(usize),
    #[error("diagram has no components")]
    Empty,
    #[error("arc successor structure is not a disjoint union of cycles")]
    BrokenCycles,
    #[error("arc {arc} has inconsistent crossing incidence: {detail}")]
    BadIncidence { arc: usize, detail: String },
    #[error("crossing {crossing} is inconsistent: {detail}")]
    BadCrossing { crossing: usize, detail: String },
    #[error("invalid move site: {0}")]
    InvalidSite(String),
    #[error("self-crossing change requires both strands on one component, crossing {0} is inter-component")]
    NotSelfCrossing(usize),
    #[error("band sum needs equal component counts, got {0} and {1}")]
    ComponentMismatch(usize, usize),
    #[error("equal component indices; use the writhe for self-linking")]
    EqualComponents,
}

/// Errors from parsing PD-code text.
#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum PdError {
    #[error("syntax error at byte {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("arc label {label} used {count} times, expected exactly two crossing slots")]
    BadArcCount { label: usize, count: usize },
    #[error("arc labels must cover 1..={expected} consecutively, found {found}")]
    BadLabelRange { expected: usize, found: usize },
    #[error("orientation inconsistency: {0}")]
    Orientation(String),
    #[error(transparent)]
    Diagram(#[from] DiagramError),
}

/// Errors from parsing braid words.
#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum BraidError {
    #[error("cannot read braid letter {0:?}")]
    BadLetter(String),
    #[error("generator {letter} out of range for {strands} strands")]
    GeneratorOutOfRange { letter: i32, strands: usize },
    #[error("braid needs at least one strand")]
    NoStrands,
    #[error(transparent)]
    Diagram(#[from] DiagramError),
}

/// Errors from truncated series arithmetic.
#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum SeriesError {
    #[error("series parameters differ: {0} vs {1} variables, bounds {2} vs {3}")]
    Mismatch(usize, usize, usize, usize),
    #[error("letter {0} out of range for {1} variables")]
    LetterOutOfRange(usize, usize),
    #[error("index sequence of length {0} exceeds truncation bound {1}")]
    SequenceTooLong(usize, usize),
    #[error("series is not invertible: constant term must be 1")]
    NotInvertible,
}

/// Errors from the Milnor-invariant pipeline.
#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum MilnorError {
    #[error("index sequences need length >= 2, got {0}")]
    SequenceTooShort(usize),
    #[error("sequence index {index} out of range 1..={count}")]
    IndexOutOfRange { index: usize, count: usize },
    #[error("sequence has no repeated index")]
    NoRepeatedIndex,
    #[error("table of {sequences} sequences exceeds the resource guard of {limit}; pass force to override")]
    ResourceGuard { sequences: u128, limit: u128 },
    #[error("series fixed point did not stabilize within {0} sweeps")]
    IterationBudget(usize),
    #[error(transparent)]
    Diagram(#[from] DiagramError),
    #[error(transparent)]
    Series(#[from] SeriesError),
}
