//! The two-element lattice: join, meet, identity involution. Matrices over
//! it are exactly the finite relations.

use super::{bad_literal, CapabilitySet, Scalar};
use crate::error::Result;
use crate::rng::Rng;
use std::fmt;

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct Bool(pub bool);

impl fmt::Display for Bool {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", u8::from(self.0))
    }
}

impl Scalar for Bool {
    const BACKEND: &'static str = "bool";

    fn caps() -> CapabilitySet {
        CapabilitySet {
            has_additive_inverse: false,
            // the only nonzero element is 1, its own inverse
            has_multiplicative_inverse_of_nonzero: true,
            is_regular: true,
            has_minus_one: false,
            // 1 + 1 = 1 and 1 * 1 = 1, so 1 is formally a root of "2"
            has_sqrt2: true,
            has_definite_norms: true,
            is_exact: true,
            tolerance: 0.0,
        }
    }

    fn zero() -> Self {
        Bool(false)
    }

    fn one() -> Self {
        Bool(true)
    }

    fn add(&self, rhs: &Self) -> Self {
        Bool(self.0 || rhs.0)
    }

    fn mul(&self, rhs: &Self) -> Self {
        Bool(self.0 && rhs.0)
    }

    fn star(&self) -> Self {
        *self
    }

    fn neg(&self) -> Option<Self> {
        None
    }

    fn inv(&self) -> Option<Self> {
        if self.0 {
            Some(Bool(true))
        } else {
            None
        }
    }

    fn minus_one() -> Option<Self> {
        // the only self-inverse element is 1 itself, which is excluded
        None
    }

    fn sqrt2() -> Option<Self> {
        Some(Bool(true))
    }

    fn sqrt_norm(&self) -> Option<Self> {
        Some(*self)
    }

    fn enumerate_all() -> Option<Vec<Self>> {
        Some(vec![Bool(false), Bool(true)])
    }

    fn random(rng: &mut Rng) -> Self {
        Bool(rng.bool())
    }

    fn from_integer(n: i64) -> Self {
        Bool(n != 0)
    }

    fn parse_literal(text: &str) -> Result<Self> {
        match text.trim() {
            "0" => Ok(Bool(false)),
            "1" => Ok(Bool(true)),
            _ => Err(bad_literal::<Bool>(text, "expected 0 or 1")),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lattice_join_idempotent() {
        // 1 + 1 = 1
        assert_eq!(Bool(true).add(&Bool(true)), Bool(true));
    }

    #[test]
    fn zero_not_invertible() {
        assert!(Bool(false).inv().is_none());
    }
}
