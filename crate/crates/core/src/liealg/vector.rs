//! Dense coordinate vectors.

use crate::scalars::{Conjugate, Ring};

pub type Vector<S> = Vec<S>;

pub fn zeros<S: Ring>(n: usize) -> Vector<S> {
    vec![S::zero(); n]
}

pub fn unit<S: Ring>(n: usize, i: usize) -> Vector<S> {
    let mut v = zeros(n);
    v[i] = S::one();
    v
}

pub fn add<S: Ring>(a: &[S], b: &[S]) -> Vector<S> {
    a.iter().zip(b).map(|(x, y)| x.add(y)).collect()
}

pub fn sub<S: Ring>(a: &[S], b: &[S]) -> Vector<S> {
    a.iter().zip(b).map(|(x, y)| x.sub(y)).collect()
}

pub fn scale<S: Ring>(c: &S, a: &[S]) -> Vector<S> {
    a.iter().map(|x| c.mul(x)).collect()
}

pub fn neg<S: Ring>(a: &[S]) -> Vector<S> {
    a.iter().map(|x| x.neg()).collect()
}

/// `y += c·x`
pub fn axpy<S: Ring>(y: &mut [S], c: &S, x: &[S]) {
    if c.is_zero() {
        return;
    }
    for (yi, xi) in y.iter_mut().zip(x) {
        yi.add_mul(c, xi);
    }
}

pub fn dot<S: Ring>(a: &[S], b: &[S]) -> S {
    let mut acc = S::zero();
    for (x, y) in a.iter().zip(b) {
        acc.add_mul(x, y);
    }
    acc
}

pub fn is_zero<S: Ring>(a: &[S]) -> bool {
    a.iter().all(Ring::is_zero)
}

/// Linear combination `Σ cᵢ vᵢ`.
pub fn combine<S: Ring>(n: usize, terms: &[(S, &[S])]) -> Vector<S> {
    let mut out = zeros(n);
    for (c, v) in terms {
        axpy(&mut out, c, v);
    }
    out
}

/// Coordinatewise conjugation.
pub fn conj<S: Ring + Conjugate>(a: &[S]) -> Vector<S> {
    a.iter().map(Conjugate::conj).collect()
}
