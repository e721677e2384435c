//! Seeded random generators for property checks over Gaussian rationals.

use num_rational::BigRational;
use rand::seq::SliceRandom;
use rand::Rng;

use crate::bub_clifton::{Eigenpair, Observable, PureState};
use crate::linalg::{gram_schmidt, Subspace};
use crate::scalar::QuadComplex;

type S = QuadComplex;

/// Entry shape for random vectors.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Entries {
    /// Integers in `[-bound, bound]`.
    Rational(i64),
    /// `a + b·i` with `a, b` in `[-bound, bound]`.
    Gaussian(i64),
}

pub fn scalar<R: Rng>(rng: &mut R, entries: Entries) -> S {
    match entries {
        Entries::Rational(b) => S::integer(rng.gen_range(-b..=b)),
        Entries::Gaussian(b) => S::integer(rng.gen_range(-b..=b)) + S::integer(rng.gen_range(-b..=b)) * S::i(),
    }
}

/// A random vector; about a third of the entries are forced to zero so that
/// coordinate-aligned coincidences show up often.
pub fn vector<R: Rng>(rng: &mut R, n: usize, entries: Entries) -> Vec<S> {
    (0..n)
        .map(|_| if rng.gen_ratio(1, 3) { S::integer(0) } else { scalar(rng, entries) })
        .collect()
}

pub fn nonzero_vector<R: Rng>(rng: &mut R, n: usize, entries: Entries) -> Vec<S> {
    loop {
        let v = vector(rng, n, entries);
        if v.iter().any(|x| *x != S::integer(0)) {
            return v;
        }
    }
}

/// Span of up to `n` random vectors, so any rank from 0 to `n` can appear.
pub fn subspace<R: Rng>(rng: &mut R, n: usize, entries: Entries) -> Subspace<S> {
    let count = rng.gen_range(0..=n);
    let vs: Vec<Vec<S>> = (0..count).map(|_| vector(rng, n, entries)).collect();
    Subspace::canonicalize(&vs, n).expect("vectors have length n")
}

pub fn ray<R: Rng>(rng: &mut R, n: usize, entries: Entries) -> Subspace<S> {
    Subspace::ray(&nonzero_vector(rng, n, entries))
}

/// An orthogonal basis of the whole space, in random order.
pub fn orthogonal_basis<R: Rng>(rng: &mut R, n: usize, entries: Entries) -> Vec<Vec<S>> {
    loop {
        let vs: Vec<Vec<S>> = (0..n).map(|_| vector(rng, n, entries)).collect();
        let mut basis = gram_schmidt(&vs);
        if basis.len() == n {
            basis.shuffle(rng);
            return basis;
        }
    }
}

/// Distinct small rationals, one per eigenspace.
pub fn eigenvalues<R: Rng>(rng: &mut R, count: usize) -> Vec<BigRational> {
    let mut out: Vec<BigRational> = Vec::with_capacity(count);
    while out.len() < count {
        let v = BigRational::new(rng.gen_range(-9i64..=9).into(), rng.gen_range(1i64..=3).into());
        if !out.contains(&v) {
            out.push(v);
        }
    }
    out
}

/// A non-degenerate observable with a random orthogonal eigenbasis.
pub fn maximal_observable<R: Rng>(rng: &mut R, n: usize, entries: Entries) -> Observable<S> {
    let basis = orthogonal_basis(rng, n, entries);
    let values = eigenvalues(rng, n);
    let pairs = basis
        .iter()
        .zip(values)
        .map(|(v, value)| Eigenpair {
            value,
            space: Subspace::ray(v),
        })
        .collect();
    Observable::new(n, pairs).expect("orthogonal basis with distinct eigenvalues")
}

/// A state that is a random combination of a random non-empty subset of
/// `basis`, so it is orthogonal to the remaining basis vectors.
pub fn state_in_span<R: Rng>(rng: &mut R, basis: &[Vec<S>], entries: Entries) -> PureState<S> {
    let n = basis[0].len();
    loop {
        let mut psi = vec![S::integer(0); n];
        for b in basis {
            if rng.gen_bool(0.6) {
                let c = scalar(rng, entries);
                for (x, y) in psi.iter_mut().zip(b) {
                    *x = x.clone() + c.clone() * y;
                }
            }
        }
        if let Ok(state) = PureState::new(psi) {
            return state;
        }
    }
}
