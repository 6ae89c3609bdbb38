use num_complex::Complex64;
use rand::Rng;

use super::{ComplexMatrix, Mon1qfa, Observable};
use crate::Symbol;

fn random_vector<R: Rng>(rng: &mut R, n: usize) -> Vec<Complex64> {
    (0..n)
        .map(|_| Complex64::new(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0)))
        .collect()
}

fn normalize(v: &mut [Complex64]) -> f64 {
    let norm = v.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
    for z in v.iter_mut() {
        *z /= norm;
    }
    norm
}

/// A random orthonormal basis of `Cⁿ` (Gram–Schmidt on random vectors).
pub fn random_basis<R: Rng>(rng: &mut R, n: usize) -> Vec<Vec<Complex64>> {
    let mut basis: Vec<Vec<Complex64>> = Vec::with_capacity(n);
    while basis.len() < n {
        let mut v = random_vector(rng, n);
        for b in &basis {
            // <b, v> with the first argument conjugated
            let dot: Complex64 = b.iter().zip(&v).map(|(x, y)| x.conj() * y).sum();
            for (vi, bi) in v.iter_mut().zip(b) {
                *vi -= dot * bi;
            }
        }
        if normalize(&mut v) > 1e-3 {
            basis.push(v);
        }
    }
    basis
}

/// Random observable: the basis vectors of a random orthonormal basis are
/// split into `1..=n` nonempty groups, each group's span giving one outcome.
pub fn random_observable<R: Rng>(rng: &mut R, n: usize) -> Observable {
    let basis = random_basis(rng, n);
    let groups = rng.random_range(1..=n);
    // Every group gets one vector, the rest are scattered.
    let mut assignment: Vec<usize> = (0..n)
        .map(|i| {
            if i < groups {
                i
            } else {
                rng.random_range(0..groups)
            }
        })
        .collect();
    for i in (1..n).rev() {
        let j = rng.random_range(0..=i);
        assignment.swap(i, j);
    }
    let outcomes = (0..groups).map(|g| {
        let p = basis
            .iter()
            .zip(&assignment)
            .filter(|&(_, &a)| a == g)
            .fold(ComplexMatrix::zeros(n, n), |acc, (b, _)| {
                // outer() forms v†v for a row vector; use the conjugate so
                // the projector is onto span(b).
                let row: Vec<Complex64> = b.iter().map(|z| z.conj()).collect();
                &acc + &ComplexMatrix::outer(&row)
            });
        (format!("r{g}"), p)
    });
    Observable::new(n, outcomes).expect("square projectors")
}

/// A random valid automaton of the given dimension over `alphabet`, with a
/// random unit initial vector and a random nonempty subset of end outcomes
/// accepting.
pub fn random_mon1qfa<R: Rng>(rng: &mut R, dimension: usize, alphabet: &[Symbol]) -> Mon1qfa {
    assert!(dimension >= 1, "dimension must be positive");
    let mut initial = random_vector(rng, dimension);
    normalize(&mut initial);
    let observables = alphabet
        .iter()
        .map(|&s| (s, random_observable(rng, dimension)))
        .collect();
    let end = random_observable(rng, dimension);
    let labels: Vec<String> = end.labels().map(str::to_string).collect();
    let mut accepting: Vec<String> = labels
        .iter()
        .filter(|_| rng.random_bool(0.5))
        .cloned()
        .collect();
    if accepting.is_empty() {
        accepting.push(labels[0].clone());
    }
    Mon1qfa::new(initial, observables, end, accepting).expect("random automaton is valid")
}
