//! Scalars: involutive commutative semirings with capability flags.
//!
//! Every other module of the crate is generic over [`Scalar`]. A backend is a
//! concrete carrier type (Boolean bit, exact rational, Gaussian rational,
//! prime-field residue, quadratic extension by sqrt(2), complex double) in a
//! canonical form that makes equality decidable.

mod boolean;
mod complex64;
mod gaussian;
mod modular;
mod quadratic;
mod rational;

pub use boolean::Bool;
pub use complex64::Cx64;
pub use gaussian::Gauss;
pub use modular::{F2, F3, F5, Fp};
pub use quadratic::Sqrt2Ext;
pub use rational::Rat;

use crate::error::{QcatError, Result};
use crate::rng::Rng;
use std::fmt::{Debug, Display};

/// What a backend can and cannot do, plus its equality tolerance.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CapabilitySet {
    pub has_additive_inverse: bool,
    pub has_multiplicative_inverse_of_nonzero: bool,
    /// No zero divisors: x * y = 0 implies x = 0 or y = 0.
    pub is_regular: bool,
    /// An element r != 1 with r * r = 1 (and then 1 + r = 0).
    pub has_minus_one: bool,
    /// An element r with r * r = 1 + 1.
    pub has_sqrt2: bool,
    /// Sums of elements of the form s* . s vanish only when every term does.
    pub has_definite_norms: bool,
    pub is_exact: bool,
    /// 0 for exact backends.
    pub tolerance: f64,
}

impl CapabilitySet {
    /// Additive and multiplicative inverses together: Gaussian elimination,
    /// rank, and proportionality tests are available.
    pub fn is_field(&self) -> bool {
        self.has_additive_inverse && self.has_multiplicative_inverse_of_nonzero
    }
}

/// An involutive commutative semiring element in canonical form.
///
/// Laws (checked by the law suite, not by the compiler): `add` and `mul` are
/// associative and commutative, `mul` distributes over `add`, `zero`
/// annihilates, `one` is the unit, and `star` is a self-inverse homomorphism
/// for both operations.
pub trait Scalar: Clone + PartialEq + Debug + Display + Send + Sync + 'static {
    /// Identifier used by the CLI and the arrow file format.
    const BACKEND: &'static str;

    fn caps() -> CapabilitySet;

    fn zero() -> Self;
    fn one() -> Self;
    fn add(&self, rhs: &Self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;

    /// The involution.
    fn star(&self) -> Self;

    /// Additive inverse, when the backend has one.
    fn neg(&self) -> Option<Self>;

    /// Multiplicative inverse. `None` when `self` is zero or the backend
    /// lacks inverses.
    fn inv(&self) -> Option<Self>;

    /// The element `r != 1` with `r * r = 1`, when one exists.
    fn minus_one() -> Option<Self>;

    /// An element `r` with `r * r = 1 + 1`, when one exists.
    fn sqrt2() -> Option<Self>;

    /// A scalar `s` with `s* . s = self`, when one can be found in the
    /// backend. Drives normalization of preparations.
    fn sqrt_norm(&self) -> Option<Self>;

    /// Equality up to the backend tolerance. Coincides with `==` on exact
    /// backends.
    fn approx_eq(&self, rhs: &Self) -> bool {
        self == rhs
    }

    fn is_zero(&self) -> bool {
        self.approx_eq(&Self::zero())
    }

    fn is_one(&self) -> bool {
        self.approx_eq(&Self::one())
    }

    /// All elements of a finite backend, `None` for infinite carriers.
    fn enumerate_all() -> Option<Vec<Self>>;

    /// The per-backend random entry law used by instance generators.
    fn random(rng: &mut Rng) -> Self;

    fn from_integer(n: i64) -> Self;

    /// Parse the literal syntax of this backend.
    fn parse_literal(text: &str) -> Result<Self>;

    fn two() -> Self {
        Self::one().add(&Self::one())
    }
}

/// Checked wrapper around [`Scalar::inv`] with the error split the operations
/// report.
pub fn scalar_inverse<S: Scalar>(x: &S) -> Result<S> {
    if x.is_zero() {
        return Err(QcatError::ZeroNotInvertible);
    }
    if !S::caps().has_multiplicative_inverse_of_nonzero {
        return Err(QcatError::CapabilityMissing {
            backend: S::BACKEND,
            capability: "has_multiplicative_inverse_of_nonzero",
        });
    }
    x.inv().ok_or(QcatError::ZeroNotInvertible)
}

/// Checked wrapper around [`Scalar::minus_one`].
pub fn scalar_minus_one<S: Scalar>() -> Result<S> {
    S::minus_one().ok_or(QcatError::CapabilityMissing {
        backend: S::BACKEND,
        capability: "has_minus_one",
    })
}

pub(crate) fn bad_literal<S: Scalar>(literal: &str, reason: &str) -> QcatError {
    QcatError::BadScalarLiteral {
        backend: S::BACKEND,
        literal: literal.to_string(),
        reason: reason.to_string(),
    }
}
