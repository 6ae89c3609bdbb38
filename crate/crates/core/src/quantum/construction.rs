//! The measure-only automaton `A[a₁,…,aₖ]` for the shuffle ideal
//! `Σ*a₁Σ*…Σ*aₖΣ*`.
//!
//! The state space has one coordinate per prefix length `0..=k`. For a letter
//! `α`, every position `j` with `a_{j+1} = α` (0-based here) couples
//! coordinates `j` and `j+1` through the 2×2 projectors
//! `½[[1,1],[1,1]]` ("up") and `½[[1,−1],[−1,1]]` ("down"); all other
//! coordinates are left alone by "up" and annihilated by "down". Because
//! adjacent pattern letters differ, the coupled pairs of one letter never
//! overlap.

use std::fmt;

use num_complex::Complex64;

use super::{ComplexMatrix, Mon1qfa, Observable, QuantumError};
use crate::Symbol;

pub const UP: &str = "up";
pub const DOWN: &str = "down";
pub const PASS: &str = "pass";
pub const ACCEPT: &str = "accept";
pub const REJECT: &str = "reject";

/// A subsequence pattern `a₁…aₖ` over an ordered alphabet, with no two
/// adjacent pattern letters equal.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PtSpec {
    letters: Vec<Symbol>,
    alphabet: Vec<Symbol>,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SpecError {
    #[error("adjacent pattern letters must differ, found `{0}{0}` at position {1}")]
    AdjacentRepeat(Symbol, usize),
    #[error("pattern letter `{0}` is not in the alphabet")]
    LetterNotInAlphabet(Symbol),
    #[error("alphabet lists `{0}` more than once")]
    DuplicateSymbol(Symbol),
}

impl PtSpec {
    pub fn new(letters: Vec<Symbol>, alphabet: Vec<Symbol>) -> Result<Self, SpecError> {
        for (i, s) in alphabet.iter().enumerate() {
            if alphabet[..i].contains(s) {
                return Err(SpecError::DuplicateSymbol(*s));
            }
        }
        for (i, pair) in letters.windows(2).enumerate() {
            if pair[0] == pair[1] {
                return Err(SpecError::AdjacentRepeat(pair[0], i + 1));
            }
        }
        if let Some(&bad) = letters.iter().find(|l| !alphabet.contains(l)) {
            return Err(SpecError::LetterNotInAlphabet(bad));
        }
        Ok(PtSpec { letters, alphabet })
    }

    /// Convenience constructor from two strings of single-character symbols.
    pub fn parse(letters: &str, alphabet: &str) -> Result<Self, SpecError> {
        Self::new(letters.chars().collect(), alphabet.chars().collect())
    }

    pub fn letters(&self) -> &[Symbol] {
        &self.letters
    }

    pub fn alphabet(&self) -> &[Symbol] {
        &self.alphabet
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Whether `alpha` occurs in the pattern.
    pub fn uses(&self, alpha: Symbol) -> bool {
        self.letters.contains(&alpha)
    }

    /// 0-based positions `j` with `letters[j] == alpha`; each couples
    /// coordinates `j` and `j + 1`.
    pub fn positions(&self, alpha: Symbol) -> Vec<usize> {
        self.letters
            .iter()
            .enumerate()
            .filter(|&(_, &l)| l == alpha)
            .map(|(j, _)| j)
            .collect()
    }
}

impl fmt::Display for PtSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, l) in self.letters.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{l}")?;
        }
        write!(f, "] over {{")?;
        for (i, l) in self.alphabet.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{l}")?;
        }
        write!(f, "}}")
    }
}

fn coupled_block(spec: &PtSpec, alpha: Symbol) -> Result<Vec<Option<usize>>, QuantumError> {
    let positions = spec.positions(alpha);
    if positions.is_empty() {
        return Err(QuantumError::LetterNotInPattern(alpha));
    }
    // block[r] = Some(j) when coordinate r belongs to the pair {j, j+1}.
    let mut block = vec![None; spec.len() + 1];
    for j in positions {
        block[j] = Some(j);
        block[j + 1] = Some(j);
    }
    Ok(block)
}

/// The "up" projector for `alpha`: `½` on every coupled 2×2 block, identity
/// on uncoupled coordinates.
pub fn build_up_projector(spec: &PtSpec, alpha: Symbol) -> Result<ComplexMatrix, QuantumError> {
    let block = coupled_block(spec, alpha)?;
    let n = block.len();
    let mut m = ComplexMatrix::zeros(n, n);
    for r in 0..n {
        for s in 0..n {
            m[(r, s)] = match (block[r], block[s]) {
                (Some(x), Some(y)) if x == y => Complex64::new(0.5, 0.0),
                (None, None) if r == s => Complex64::new(1.0, 0.0),
                _ => continue,
            };
        }
    }
    Ok(m)
}

/// The "down" projector for `alpha`: `½` on the diagonal and `−½` off the
/// diagonal of every coupled block, zero elsewhere.
pub fn build_down_projector(spec: &PtSpec, alpha: Symbol) -> Result<ComplexMatrix, QuantumError> {
    let block = coupled_block(spec, alpha)?;
    let n = block.len();
    let mut m = ComplexMatrix::zeros(n, n);
    for r in 0..n {
        for s in 0..n {
            if let (Some(x), Some(y)) = (block[r], block[s]) {
                if x == y {
                    let v = if r == s { 0.5 } else { -0.5 };
                    m[(r, s)] = Complex64::new(v, 0.0);
                }
            }
        }
    }
    Ok(m)
}

fn basis_vector(n: usize, i: usize) -> Vec<Complex64> {
    let mut v = vec![Complex64::new(0.0, 0.0); n];
    v[i] = Complex64::new(1.0, 0.0);
    v
}

/// Builds `A[a₁,…,aₖ]`: dimension `k+1`, initial state `e₁`, an up/down
/// observable for every pattern letter, the identity for every other letter,
/// and an end observable accepting on the last coordinate only.
pub fn build_mon1qfa(spec: &PtSpec) -> Result<Mon1qfa, QuantumError> {
    let n = spec.len() + 1;
    let mut observables = Vec::with_capacity(spec.alphabet().len());
    for &sym in spec.alphabet() {
        let obs = if spec.uses(sym) {
            Observable::new(
                n,
                [
                    (UP.to_string(), build_up_projector(spec, sym)?),
                    (DOWN.to_string(), build_down_projector(spec, sym)?),
                ],
            )?
        } else {
            Observable::trivial(n, PASS)
        };
        observables.push((sym, obs));
    }
    let last = ComplexMatrix::outer(&basis_vector(n, n - 1));
    let rest = &ComplexMatrix::identity(n) - &last;
    let end = Observable::new(n, [(ACCEPT.to_string(), last), (REJECT.to_string(), rest)])?;
    Mon1qfa::new(
        basis_vector(n, 0),
        observables,
        end,
        vec![ACCEPT.to_string()],
    )
}

/// Cut point `λ = 2^−(2k+1)` and isolation radius `δ = 2^−(2k+2)` for a
/// pattern of length `k`.
pub fn cutpoint_params(spec: &PtSpec) -> (f64, f64) {
    cutpoint_params_for_len(spec.len())
}

pub fn cutpoint_params_for_len(k: usize) -> (f64, f64) {
    let k = k as i32;
    (2f64.powi(-(2 * k + 1)), 2f64.powi(-(2 * k + 2)))
}
