use num_complex::Complex64;

use super::{ComplexMatrix, Observable, QuantumError};

/// A mixed quantum state: Hermitian, positive semidefinite, unit trace.
#[derive(Clone, Debug, PartialEq)]
pub struct DensityMatrix {
    matrix: ComplexMatrix,
}

/// Which density-matrix invariant a candidate matrix breaks.
#[derive(Clone, Debug, PartialEq)]
pub enum StateDefect {
    NotSquare,
    NotHermitian,
    Trace(f64),
    NegativeEigenvalue(f64),
}

impl DensityMatrix {
    /// Checks every invariant within `eps`.
    pub fn new(matrix: ComplexMatrix, eps: f64) -> Result<Self, QuantumError> {
        let state = DensityMatrix { matrix };
        match state.defects(eps).into_iter().next() {
            None => Ok(state),
            Some(d) => Err(QuantumError::InvalidState(format!("{d:?}"))),
        }
    }

    /// The pure state `π† π` of a unit row vector.
    pub fn pure(vector: &[Complex64]) -> Self {
        DensityMatrix {
            matrix: ComplexMatrix::outer(vector),
        }
    }

    pub(crate) fn from_matrix_unchecked(matrix: ComplexMatrix) -> Self {
        DensityMatrix { matrix }
    }

    pub fn dimension(&self) -> usize {
        self.matrix.rows()
    }

    pub fn matrix(&self) -> &ComplexMatrix {
        &self.matrix
    }

    pub fn trace(&self) -> f64 {
        self.matrix.trace().re
    }

    pub fn smallest_eigenvalue(&self) -> f64 {
        if self.dimension() == 0 {
            return 0.0;
        }
        // Symmetrise first so round-off in the imaginary parts cannot
        // push the solver off the Hermitian path.
        let m = self.matrix.to_nalgebra();
        let h = (&m + m.adjoint()) * Complex64::new(0.5, 0.0);
        nalgebra::SymmetricEigen::new(h)
            .eigenvalues
            .iter()
            .copied()
            .fold(f64::INFINITY, f64::min)
    }

    pub fn defects(&self, eps: f64) -> Vec<StateDefect> {
        let m = &self.matrix;
        if !m.is_square() {
            return vec![StateDefect::NotSquare];
        }
        let mut out = Vec::new();
        if !m.is_hermitian(eps) {
            out.push(StateDefect::NotHermitian);
        }
        let tr = m.trace();
        if (tr.re - 1.0).abs() > eps || tr.im.abs() > eps {
            out.push(StateDefect::Trace(tr.re));
        }
        let low = self.smallest_eigenvalue();
        if low < -eps {
            out.push(StateDefect::NegativeEigenvalue(low));
        }
        out
    }

    pub fn is_valid(&self, eps: f64) -> bool {
        self.defects(eps).is_empty()
    }

    /// Probability of landing in the range of `projector`: `tr(P ρ P)`.
    pub fn probability(&self, projector: &ComplexMatrix) -> f64 {
        (&(projector * &self.matrix) * projector).trace().re
    }
}

/// Nonselective projective measurement: `ρ ↦ Σᵢ Pᵢ ρ Pᵢ`.
pub fn measure(rho: &DensityMatrix, obs: &Observable) -> Result<DensityMatrix, QuantumError> {
    if rho.dimension() != obs.dimension() {
        return Err(QuantumError::DimensionMismatch {
            expected: obs.dimension(),
            found: format!("state of dimension {}", rho.dimension()),
        });
    }
    let n = rho.dimension();
    let out = obs
        .outcomes()
        .iter()
        .fold(ComplexMatrix::zeros(n, n), |acc, o| {
            let p = &o.projector;
            &acc + &(&(p * rho.matrix()) * p)
        });
    Ok(DensityMatrix::from_matrix_unchecked(out))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64) -> Complex64 {
        Complex64::new(re, 0.0)
    }

    fn a_observable() -> Observable {
        let up = ComplexMatrix::from_real_rows(&[&[0.5, 0.5], &[0.5, 0.5]]).unwrap();
        let down = ComplexMatrix::from_real_rows(&[&[0.5, -0.5], &[-0.5, 0.5]]).unwrap();
        Observable::new(2, [("up".into(), up), ("down".into(), down)]).unwrap()
    }

    #[test]
    fn measuring_e1_with_up_down_gives_maximally_mixed_state() {
        let rho = DensityMatrix::pure(&[c(1.0), c(0.0)]);
        let out = measure(&rho, &a_observable()).unwrap();
        let expected = ComplexMatrix::from_real_rows(&[&[0.5, 0.0], &[0.0, 0.5]]).unwrap();
        assert!(out.matrix().approx_eq(&expected, 1e-12));
        assert!(out.is_valid(1e-9));
    }

    #[test]
    fn identity_observable_leaves_state_unchanged() {
        let s = std::f64::consts::FRAC_1_SQRT_2;
        let rho = DensityMatrix::pure(&[Complex64::new(s, 0.0), Complex64::new(0.0, s)]);
        let out = measure(&rho, &Observable::trivial(2, "pass")).unwrap();
        assert!(out.matrix().approx_eq(rho.matrix(), 1e-12));
    }

    #[test]
    fn measurement_is_idempotent() {
        let rho = DensityMatrix::pure(&[Complex64::new(0.6, 0.0), Complex64::new(0.0, 0.8)]);
        let once = measure(&rho, &a_observable()).unwrap();
        let twice = measure(&once, &a_observable()).unwrap();
        assert!(once.matrix().approx_eq(twice.matrix(), 1e-12));
    }

    #[test]
    fn dimension_mismatch_is_an_error() {
        let rho = DensityMatrix::pure(&[c(1.0), c(0.0), c(0.0)]);
        assert!(measure(&rho, &a_observable()).is_err());
    }

    #[test]
    fn rejects_invalid_states() {
        let neg = ComplexMatrix::from_real_rows(&[&[1.5, 0.0], &[0.0, -0.5]]).unwrap();
        let d = DensityMatrix::from_matrix_unchecked(neg.clone());
        assert!(matches!(
            d.defects(1e-9)[..],
            [StateDefect::NegativeEigenvalue(_)]
        ));
        assert!(DensityMatrix::new(neg, 1e-9).is_err());
        let half = ComplexMatrix::from_real_rows(&[&[0.5, 0.0], &[0.0, 0.0]]).unwrap();
        assert!(DensityMatrix::new(half, 1e-9).is_err());
    }
}
