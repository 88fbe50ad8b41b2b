//! Exact scalars: rationals, Gaussian rationals and polynomials over ℚ(i).
//!
//! Generic code in this crate is written against [`Ring`] and [`Field`]
//! rather than the operator traits, so the same routine serves ℚ, ℚ(i) and
//! the symbolic polynomial ring.

mod gauss;
mod poly;
mod rational;

use std::fmt;

pub use gauss::GaussRational;
pub use poly::{Assignment, Monomial, Poly, Reducer, Var};
pub use rational::Rational;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ScalarError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("inconsistent conjugate assignment for {0}")]
    InconsistentAssignment(String),
    #[error("variable {0} is already assigned")]
    AlreadyAssigned(String),
    #[error("cannot parse scalar from {0:?}")]
    Parse(String),
}

/// A commutative ring with exact equality.
pub trait Ring: Clone + PartialEq + fmt::Debug + fmt::Display + Send + Sync + 'static {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    fn from_rational(q: &Rational) -> Self;

    fn from_int(n: i64) -> Self {
        Self::from_rational(&Rational::from(n))
    }

    fn is_one(&self) -> bool {
        *self == Self::one()
    }

    fn add_assign(&mut self, other: &Self) {
        *self = Ring::add(self, other);
    }

    fn sub_assign(&mut self, other: &Self) {
        *self = Ring::sub(self, other);
    }

    /// `self += a * b`
    fn add_mul(&mut self, a: &Self, b: &Self) {
        let p = a.mul(b);
        self.add_assign(&p);
    }

    fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }
}

pub trait Field: Ring {
    fn inv(&self) -> Result<Self, ScalarError>;

    fn div(&self, other: &Self) -> Result<Self, ScalarError> {
        Ok(self.mul(&other.inv()?))
    }
}

/// Complex conjugation; the identity on real scalars.
pub trait Conjugate {
    fn conj(&self) -> Self;
}

/// Rings containing ℚ(i).
pub trait ComplexRing: Ring + Conjugate {
    fn from_gauss(z: &GaussRational) -> Self;

    fn i() -> Self {
        Self::from_gauss(&GaussRational::i())
    }
}

/// Real and imaginary parts of a scalar that carries a Gaussian-rational value.
pub trait Parts {
    fn re_part(&self) -> Rational;
    fn im_part(&self) -> Rational;
}
