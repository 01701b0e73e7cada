//! Error type shared by all modules of the crate.

use std::fmt;

use crate::monomial::Var;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Polynomial division left a remainder.
    InexactDivision,
    /// Division by the zero polynomial.
    DivisionByZero,
    /// Determinant of a non-square matrix.
    NonSquareMatrix { rows: usize, cols: usize },
    /// Matrix/vector shapes do not line up.
    DimensionMismatch { expected: usize, got: usize },
    /// Resultant of a zero polynomial.
    ZeroResultant,
    /// Discriminant needs degree at least 2.
    DiscriminantDegree { degree: usize },
    /// Evaluation hit a variable with no assigned value.
    MissingValue(Var),
    /// Text input did not conform to the polynomial grammar.
    Parse {
        line: usize,
        col: usize,
        msg: String,
    },
    /// A table derivation was applied beyond its declared support.
    SupportBoundExceeded { index: u32, bound: u32 },
    /// The iterated series did not terminate within the cap.
    NilpotencyCapExceeded { cap: u32 },
    /// The map is not of unipotent triangular shape x_n + (linear form in x_0..x_{n-1}).
    NotTriangular { index: u32 },
    /// A derivation image is not a linear form in lower-index variables.
    NotTriangularLinear { index: u32 },
    /// The intertwining system has no unique solution.
    IntertwiningSingular { index: u32 },
    /// Cayley generators start at index 2.
    CayleyIndex { k: u32 },
    /// A polynomial mentions a variable index beyond the working bound.
    BoundExceeded { needed: u32, bound: u32 },
    /// Transform input shorter than the evaluated term requires.
    InsufficientPrefix {
        transform: String,
        term: u32,
        required: usize,
        got: usize,
    },
    /// Transform invoked with the wrong number of input sequences.
    ArityMismatch {
        transform: String,
        expected: u8,
        got: u8,
    },
    /// A family was asked for a term below its start index.
    IndexBelowStart {
        transform: String,
        start: u32,
        term: u32,
    },
    /// Requested zero output terms.
    EmptyCount,
    /// Sequences must hold at least one term.
    EmptySequence,
    /// The binomial parameter must be a rational or a scalar parameter.
    InvalidMu,
    /// Transform name not in the registry.
    UnknownTransform(String),
    /// Malformed name:key=value transform spec.
    BadTransformSpec(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::InexactDivision => write!(f, "inexact division"),
            Error::DivisionByZero => write!(f, "division by zero polynomial"),
            Error::NonSquareMatrix { rows, cols } => {
                write!(f, "non-square matrix ({rows}x{cols})")
            }
            Error::DimensionMismatch { expected, got } => {
                write!(f, "dimension mismatch: expected {expected}, got {got}")
            }
            Error::ZeroResultant => write!(f, "zero polynomial has no resultant"),
            Error::DiscriminantDegree { degree } => {
                write!(f, "discriminant requires degree >= 2, got {degree}")
            }
            Error::MissingValue(v) => write!(f, "no value assigned to variable {v}"),
            Error::Parse { line, col, msg } => {
                write!(f, "syntax error at line {line}, column {col}: {msg}")
            }
            Error::SupportBoundExceeded { index, bound } => write!(
                f,
                "derivation support bound exceeded: x{index} is beyond declared bound {bound}"
            ),
            Error::NilpotencyCapExceeded { cap } => {
                write!(f, "nilpotency cap exceeded (cap {cap})")
            }
            Error::NotTriangular { index } => write!(
                f,
                "not a triangular transformation: image of x{index} must be x{index} plus a linear form in lower variables"
            ),
            Error::NotTriangularLinear { index } => write!(
                f,
                "derivation is not triangular-linear at x{index}"
            ),
            Error::IntertwiningSingular { index } => {
                write!(f, "intertwining system singular at x{index}")
            }
            Error::CayleyIndex { k } => {
                write!(f, "cayley generator index must be >= 2, got {k}")
            }
            Error::BoundExceeded { needed, bound } => {
                write!(f, "variable index {needed} exceeds bound {bound}")
            }
            Error::InsufficientPrefix {
                transform,
                term,
                required,
                got,
            } => write!(
                f,
                "transform '{transform}' term {term} requires {required} input terms, got {got}"
            ),
            Error::ArityMismatch {
                transform,
                expected,
                got,
            } => write!(
                f,
                "transform '{transform}' takes {expected} input sequence(s), got {got}"
            ),
            Error::IndexBelowStart { transform, start, term } => write!(
                f,
                "transform '{transform}' starts at index {start}, term {term} requested"
            ),
            Error::EmptyCount => write!(f, "term count must be at least 1"),
            Error::EmptySequence => write!(f, "sequence must hold at least one term"),
            Error::InvalidMu => write!(
                f,
                "binomial parameter must be a rational constant or a scalar parameter"
            ),
            Error::UnknownTransform(name) => write!(f, "unknown transform name '{name}'"),
            Error::BadTransformSpec(spec) => write!(f, "malformed transform spec '{spec}'"),
        }
    }
}

impl std::error::Error for Error {}
