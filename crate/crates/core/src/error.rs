use crate::diagram::LeViolation;
use crate::necklace::AxiomFailure;
use crate::shape::Square;
use thiserror::Error;

/// Errors from constructors, conversions, and diagram queries.
///
/// Validation outcomes are not errors: `LeDiagram::validate` and
/// `GrassmannNecklace::validate` return reports instead. The variants here
/// cover rejected arguments, necklaces that cannot index any diagram, and
/// internal invariant breaches that indicate a filling was not Le-valid.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid type: k = {k}, n = {n} (require 0 < k < n)")]
    InvalidType { k: u32, n: u32 },

    #[error("label {label} outside the ground set 1..={n}")]
    LabelOutOfRange { label: u32, n: u32 },

    #[error("duplicate label {label}")]
    DuplicateLabel { label: u32 },

    #[error("expected {expected} distinct labels, got {got}")]
    WrongCardinality { expected: usize, got: usize },

    #[error("expected {expected} necklace terms, got {got}")]
    TermCountMismatch { expected: usize, got: usize },

    #[error("square {square} is not in the shape")]
    OutOfShape { square: Square },

    #[error("index {index} outside {min}..={max}")]
    IndexOutOfRange { index: u32, min: u32, max: u32 },

    /// The nearest-northwest candidates from `at` are not totally ordered:
    /// `rival` is not weakly northwest of the chosen square. Cannot happen
    /// on a filling that passes the Le check.
    #[error("nearest-northwest from {at} is not unique: picked {chosen}, but {rival} is not weakly northwest of it (the filling violates the Le condition)")]
    DominanceBreach {
        at: Square,
        chosen: Square,
        rival: Square,
    },

    #[error("internal: term {index} came out with {got} labels, expected {expected}")]
    TermSizeBroken {
        index: u32,
        expected: usize,
        got: usize,
    },

    /// The necklace fails the exchange axioms under lenient checking.
    #[error("necklace fails the exchange axiom at index {}{}", .failures.first().map(|f| f.index).unwrap_or(0), if .failures.len() > 1 { " (and others)" } else { "" })]
    InvalidNecklace { failures: Vec<AxiomFailure> },

    /// A term forces a plus outside the shape of the first term.
    #[error("inconsistent necklace: term {index} forces square {square} outside the shape")]
    InconsistentNecklace { index: u32, square: Square },

    /// The forced filling breaks the Le condition, so no Le diagram
    /// corresponds to this term sequence.
    #[error("inconsistent necklace: the forced filling violates the Le condition ({} violation{})", .violations.len(), if .violations.len() == 1 { "" } else { "s" })]
    NotLeDiagram { violations: Vec<LeViolation> },

    /// Enumeration refused: the ground set exceeds the guard. Raise the
    /// limit explicitly with the `_with_limit` variant to proceed.
    #[error("ground set n = {n} exceeds the enumeration guard {limit}; raise the limit explicitly to proceed")]
    EnumerationLimit { n: u32, limit: u32 },
}
