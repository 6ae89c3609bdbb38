use std::collections::HashSet;
use std::fmt;

use super::{ComplexMatrix, QuantumError};

/// One measurement outcome: an opaque label and its orthogonal projector.
#[derive(Clone, Debug, PartialEq)]
pub struct Outcome {
    pub label: String,
    pub projector: ComplexMatrix,
}

/// A finite family of projectors, one per outcome.
///
/// Construction only checks shapes. The numeric invariants (Hermitian,
/// idempotent, pairwise orthogonal, summing to the identity) are reported by
/// [`Observable::validate`].
#[derive(Clone, Debug, PartialEq)]
pub struct Observable {
    dimension: usize,
    outcomes: Vec<Outcome>,
}

/// A numeric or labelling defect found by [`Observable::validate`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    NotHermitian(String),
    NotIdempotent(String),
    NotOrthogonal(String, String),
    Incomplete,
    DuplicateLabel(String),
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::NotHermitian(l) => write!(f, "projector `{l}` is not Hermitian"),
            Violation::NotIdempotent(l) => write!(f, "projector `{l}` is not idempotent"),
            Violation::NotOrthogonal(a, b) => {
                write!(f, "projectors `{a}` and `{b}` are not orthogonal")
            }
            Violation::Incomplete => write!(f, "projectors do not sum to the identity"),
            Violation::DuplicateLabel(l) => write!(f, "outcome label `{l}` appears twice"),
        }
    }
}

impl Observable {
    pub fn new(
        dimension: usize,
        outcomes: impl IntoIterator<Item = (String, ComplexMatrix)>,
    ) -> Result<Self, QuantumError> {
        let outcomes: Vec<Outcome> = outcomes
            .into_iter()
            .map(|(label, projector)| Outcome { label, projector })
            .collect();
        for o in &outcomes {
            if o.projector.rows() != dimension || o.projector.cols() != dimension {
                return Err(QuantumError::DimensionMismatch {
                    expected: dimension,
                    found: format!(
                        "{}x{} projector for outcome `{}`",
                        o.projector.rows(),
                        o.projector.cols(),
                        o.label
                    ),
                });
            }
        }
        Ok(Observable {
            dimension,
            outcomes,
        })
    }

    /// The single-outcome observable whose projector is the identity.
    pub fn trivial(dimension: usize, label: &str) -> Self {
        Observable {
            dimension,
            outcomes: vec![Outcome {
                label: label.to_string(),
                projector: ComplexMatrix::identity(dimension),
            }],
        }
    }

    pub fn dimension(&self) -> usize {
        self.dimension
    }

    pub fn outcomes(&self) -> &[Outcome] {
        &self.outcomes
    }

    pub fn labels(&self) -> impl Iterator<Item = &str> {
        self.outcomes.iter().map(|o| o.label.as_str())
    }

    pub fn projector(&self, label: &str) -> Option<&ComplexMatrix> {
        self.outcomes
            .iter()
            .find(|o| o.label == label)
            .map(|o| &o.projector)
    }

    /// Lists every violated invariant; an empty list means the family is a
    /// valid projective measurement within `eps`.
    pub fn validate(&self, eps: f64) -> Vec<Violation> {
        let mut report = Vec::new();
        let mut seen = HashSet::new();
        for o in &self.outcomes {
            if !seen.insert(o.label.as_str()) {
                report.push(Violation::DuplicateLabel(o.label.clone()));
            }
        }
        for o in &self.outcomes {
            let p = &o.projector;
            if !p.is_hermitian(eps) {
                report.push(Violation::NotHermitian(o.label.clone()));
            }
            if !(p * p).approx_eq(p, eps) {
                report.push(Violation::NotIdempotent(o.label.clone()));
            }
        }
        for (i, a) in self.outcomes.iter().enumerate() {
            for b in &self.outcomes[i + 1..] {
                if (&a.projector * &b.projector).max_abs() > eps {
                    report.push(Violation::NotOrthogonal(a.label.clone(), b.label.clone()));
                }
            }
        }
        let sum = self.outcomes.iter().fold(
            ComplexMatrix::zeros(self.dimension, self.dimension),
            |acc, o| &acc + &o.projector,
        );
        if !sum.approx_eq(&ComplexMatrix::identity(self.dimension), eps) {
            report.push(Violation::Incomplete);
        }
        report
    }

    pub fn is_valid(&self, eps: f64) -> bool {
        self.validate(eps).is_empty()
    }

    /// The same observable with its outcomes listed in another order.
    pub fn permuted(&self, order: &[usize]) -> Self {
        Observable {
            dimension: self.dimension,
            outcomes: order.iter().map(|&i| self.outcomes[i].clone()).collect(),
        }
    }
}

/// Free-function form of [`Observable::validate`].
pub fn validate_observable(obs: &Observable, eps: f64) -> Vec<Violation> {
    obs.validate(eps)
}
