//! Density-matrix simulation of measure-only quantum finite automata.

mod automaton;
mod construction;
mod density;
mod emit;
mod matrix;
mod observable;
pub mod random;

pub use automaton::{recognizes_with_cutpoint, CutpointReport, Mon1qfa, WordVerdict};
pub use construction::{
    build_down_projector, build_mon1qfa, build_up_projector, cutpoint_params,
    cutpoint_params_for_len, PtSpec, SpecError, ACCEPT, DOWN, PASS, REJECT, UP,
};
pub use density::{measure, DensityMatrix, StateDefect};
pub use emit::{emit_mon1qfa, parse_mon1qfa};
pub use matrix::ComplexMatrix;
pub use observable::{validate_observable, Observable, Outcome, Violation};

use crate::Symbol;

/// Tolerance for every numeric invariant check.
pub const EPS: f64 = 1e-9;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum QuantumError {
    #[error("bad matrix shape: {0}")]
    Shape(String),
    #[error("matrix entries must be finite")]
    NonFinite,
    #[error("dimension mismatch: expected {expected}, got {found}")]
    DimensionMismatch { expected: usize, found: String },
    #[error("invalid observable: {0}")]
    InvalidObservable(String),
    #[error("invalid density matrix: {0}")]
    InvalidState(String),
    #[error("initial vector must have unit norm, has norm {0}")]
    InitialNorm(f64),
    #[error("symbol `{0}` is not in the automaton's alphabet")]
    ForeignSymbol(Symbol),
    #[error("symbol `{0}` has two observables")]
    DuplicateSymbol(Symbol),
    #[error("accepting label `{0}` is not an outcome of the end observable")]
    UnknownLabel(String),
    #[error("letter `{0}` does not occur in the pattern")]
    LetterNotInPattern(Symbol),
    #[error("isolation radius must be positive, got {0}")]
    InvalidCutpoint(f64),
    #[error("line {line}: {message}")]
    Format { line: usize, message: String },
}
