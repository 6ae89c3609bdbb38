use num_complex::Complex64;

use super::{measure, ComplexMatrix, DensityMatrix, Observable, QuantumError, EPS};
use crate::Symbol;

/// A measure-only one-way quantum finite automaton.
///
/// Reading a symbol applies that symbol's observable as a nonselective
/// measurement; after the whole word the end observable is measured and the
/// word is accepted when the outcome lies in the accepting label set.
#[derive(Clone, Debug, PartialEq)]
pub struct Mon1qfa {
    dimension: usize,
    initial: Vec<Complex64>,
    alphabet: Vec<Symbol>,
    observables: Vec<Observable>,
    end_observable: Observable,
    accepting: Vec<String>,
    accepting_projector: ComplexMatrix,
}

impl Mon1qfa {
    /// Validates every invariant (unit initial vector, valid observables of
    /// the right dimension, accepting labels drawn from the end observable).
    pub fn new(
        initial: Vec<Complex64>,
        observables: Vec<(Symbol, Observable)>,
        end_observable: Observable,
        accepting: Vec<String>,
    ) -> Result<Self, QuantumError> {
        let dimension = initial.len();
        let norm: f64 = initial.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
        if (norm - 1.0).abs() > EPS
            || initial
                .iter()
                .any(|z| !z.re.is_finite() || !z.im.is_finite())
        {
            return Err(QuantumError::InitialNorm(norm));
        }
        let mut alphabet = Vec::with_capacity(observables.len());
        let mut obs = Vec::with_capacity(observables.len());
        for (sym, o) in observables {
            if alphabet.contains(&sym) {
                return Err(QuantumError::DuplicateSymbol(sym));
            }
            check_observable(&o, dimension, &format!("observable `{sym}`"))?;
            alphabet.push(sym);
            obs.push(o);
        }
        check_observable(&end_observable, dimension, "end observable")?;
        let mut accepting_projector = ComplexMatrix::zeros(dimension, dimension);
        for (i, label) in accepting.iter().enumerate() {
            if accepting[..i].contains(label) {
                return Err(QuantumError::UnknownLabel(format!(
                    "{label} (listed twice)"
                )));
            }
            let p = end_observable
                .projector(label)
                .ok_or_else(|| QuantumError::UnknownLabel(label.clone()))?;
            accepting_projector = &accepting_projector + p;
        }
        Ok(Mon1qfa {
            dimension,
            initial,
            alphabet,
            observables: obs,
            end_observable,
            accepting,
            accepting_projector,
        })
    }

    pub fn dimension(&self) -> usize {
        self.dimension
    }

    pub fn alphabet(&self) -> &[Symbol] {
        &self.alphabet
    }

    pub fn initial(&self) -> &[Complex64] {
        &self.initial
    }

    pub fn observable(&self, sym: Symbol) -> Option<&Observable> {
        self.alphabet
            .iter()
            .position(|&s| s == sym)
            .map(|i| &self.observables[i])
    }

    pub fn observables(&self) -> impl Iterator<Item = (Symbol, &Observable)> {
        self.alphabet.iter().copied().zip(&self.observables)
    }

    pub fn end_observable(&self) -> &Observable {
        &self.end_observable
    }

    pub fn accepting(&self) -> &[String] {
        &self.accepting
    }

    pub fn initial_state(&self) -> DensityMatrix {
        DensityMatrix::pure(&self.initial)
    }

    /// Applies one symbol's measurement to `rho`.
    pub fn step(&self, rho: &DensityMatrix, sym: Symbol) -> Result<DensityMatrix, QuantumError> {
        let obs = self
            .observable(sym)
            .ok_or(QuantumError::ForeignSymbol(sym))?;
        measure(rho, obs)
    }

    /// The state after the measurement cascade of `word`, before the end
    /// observable.
    pub fn final_state(&self, word: &[Symbol]) -> Result<DensityMatrix, QuantumError> {
        word.iter()
            .try_fold(self.initial_state(), |rho, &sym| self.step(&rho, sym))
    }

    /// Probability that the end observable yields an accepting label,
    /// clamped to `[0, 1]`.
    pub fn acceptance_probability(&self, word: &[Symbol]) -> Result<f64, QuantumError> {
        Ok(self.accepting_mass(&self.final_state(word)?))
    }

    /// `Σ_{r∈F} tr(P_r ρ P_r)` for a state reached by some cascade, clamped
    /// to `[0, 1]`.
    pub fn accepting_mass(&self, rho: &DensityMatrix) -> f64 {
        (&self.accepting_projector * rho.matrix())
            .trace()
            .re
            .clamp(0.0, 1.0)
    }

    /// Replaces the outcome order of one observable; `None` selects the end
    /// observable. Acceptance probabilities do not depend on this order.
    pub fn with_permuted_outcomes(&self, sym: Option<Symbol>, order: &[usize]) -> Self {
        let mut out = self.clone();
        match sym {
            None => out.end_observable = self.end_observable.permuted(order),
            Some(s) => {
                let i = self.alphabet.iter().position(|&a| a == s).expect("symbol");
                out.observables[i] = self.observables[i].permuted(order);
            }
        }
        out
    }
}

fn check_observable(obs: &Observable, dimension: usize, what: &str) -> Result<(), QuantumError> {
    if obs.dimension() != dimension {
        return Err(QuantumError::DimensionMismatch {
            expected: dimension,
            found: format!("{what} of dimension {}", obs.dimension()),
        });
    }
    let violations = obs.validate(EPS);
    if let Some(v) = violations.first() {
        return Err(QuantumError::InvalidObservable(format!("{what}: {v}")));
    }
    Ok(())
}

/// Per-word outcome of a cut-point check.
#[derive(Clone, Debug, PartialEq)]
pub struct WordVerdict {
    pub word: Vec<Symbol>,
    pub probability: f64,
    pub member: bool,
    pub accepted: bool,
    pub isolated: bool,
}

#[derive(Clone, Debug, PartialEq)]
pub struct CutpointReport {
    pub lambda: f64,
    pub delta: f64,
    pub words: Vec<WordVerdict>,
}

impl CutpointReport {
    pub fn passed(&self) -> bool {
        self.words
            .iter()
            .all(|w| w.member == w.accepted && w.isolated)
    }
}

/// Checks on a finite word set that `a` recognizes `member` with cut point
/// `lambda` isolated by `delta`: `p > λ ⇔ member` and `|p − λ| ≥ δ`
/// (up to [`EPS`] of floating-point slack).
pub fn recognizes_with_cutpoint<'w>(
    a: &Mon1qfa,
    lambda: f64,
    delta: f64,
    member: impl Fn(&[Symbol]) -> bool,
    words: impl IntoIterator<Item = &'w [Symbol]>,
) -> Result<CutpointReport, QuantumError> {
    if delta.is_nan() || delta <= 0.0 {
        return Err(QuantumError::InvalidCutpoint(delta));
    }
    let mut verdicts = Vec::new();
    for w in words {
        let p = a.acceptance_probability(w)?;
        verdicts.push(WordVerdict {
            word: w.to_vec(),
            probability: p,
            member: member(w),
            accepted: p > lambda,
            isolated: (p - lambda).abs() >= delta - EPS,
        });
    }
    Ok(CutpointReport {
        lambda,
        delta,
        words: verdicts,
    })
}
