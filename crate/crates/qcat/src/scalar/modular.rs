//! Prime fields with residues in `[0, P)` and the identity involution.

use super::{bad_literal, CapabilitySet, Scalar};
use crate::error::Result;
use crate::rng::Rng;
use std::fmt;

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct Fp<const P: u64> {
    value: u64,
}

pub type F2 = Fp<2>;
pub type F3 = Fp<3>;
pub type F5 = Fp<5>;

impl<const P: u64> Fp<P> {
    pub fn new(value: u64) -> Self {
        Fp { value: value % P }
    }

    pub fn value(&self) -> u64 {
        self.value
    }

    fn pow(&self, mut e: u64) -> Self {
        let mut base = *self;
        let mut acc = Fp::new(1);
        while e > 0 {
            if e & 1 == 1 {
                acc = Scalar::mul(&acc, &base);
            }
            base = Scalar::mul(&base, &base);
            e >>= 1;
        }
        acc
    }
}

impl<const P: u64> fmt::Display for Fp<P> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

impl<const P: u64> Scalar for Fp<P> {
    const BACKEND: &'static str = {
        match P {
            2 => "f2",
            3 => "f3",
            5 => "f5",
            _ => "fp",
        }
    };

    fn caps() -> CapabilitySet {
        CapabilitySet {
            has_additive_inverse: true,
            has_multiplicative_inverse_of_nonzero: true,
            is_regular: true,
            // 1- must differ from 1, which rules out characteristic 2.
            has_minus_one: P != 2,
            has_sqrt2: Self::sqrt2().is_some(),
            // Sums of squares can vanish without each term vanishing, e.g.
            // 1 + 4 = 0 mod 5.
            has_definite_norms: false,
            is_exact: true,
            tolerance: 0.0,
        }
    }

    fn zero() -> Self {
        Fp::new(0)
    }

    fn one() -> Self {
        Fp::new(1)
    }

    fn add(&self, rhs: &Self) -> Self {
        Fp::new(self.value + rhs.value)
    }

    fn mul(&self, rhs: &Self) -> Self {
        Fp::new(self.value * rhs.value)
    }

    fn star(&self) -> Self {
        *self
    }

    fn neg(&self) -> Option<Self> {
        Some(Fp::new(P - self.value))
    }

    fn inv(&self) -> Option<Self> {
        if self.value == 0 {
            None
        } else {
            // Fermat: x^(P-2) for prime P.
            Some(self.pow(P - 2))
        }
    }

    fn minus_one() -> Option<Self> {
        if P == 2 {
            None
        } else {
            Some(Fp::new(P - 1))
        }
    }

    fn sqrt2() -> Option<Self> {
        let two = Fp::<P>::new(2);
        (0..P).map(Fp::<P>::new).find(|r| Scalar::mul(r, r) == two)
    }

    fn sqrt_norm(&self) -> Option<Self> {
        // Identity involution: a square root of self, by scan.
        (0..P).map(Fp::<P>::new).find(|r| Scalar::mul(r, r) == *self)
    }

    fn enumerate_all() -> Option<Vec<Self>> {
        Some((0..P).map(Fp::new).collect())
    }

    fn random(rng: &mut Rng) -> Self {
        Fp::new(rng.below(P))
    }

    fn from_integer(n: i64) -> Self {
        Fp::new(n.rem_euclid(P as i64) as u64)
    }

    fn parse_literal(text: &str) -> Result<Self> {
        let n: i64 = text
            .trim()
            .parse()
            .map_err(|_| bad_literal::<Self>(text, "expected an integer residue"))?;
        Ok(Self::from_integer(n))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn spec_arithmetic_cases() {
        // 3 + 4 = 2 mod 5
        assert_eq!(F5::new(3).add(&F5::new(4)), F5::new(2));
        // 3 * 2 = 1 mod 5
        assert_eq!(F5::new(3).mul(&F5::new(2)), F5::new(1));
        // extended-Euclid oracle: inverse of 3 mod 5 is 2, cross-checked by
        // exhaustive search
        let inv3 = F5::new(3).inv().unwrap();
        assert_eq!(inv3, F5::new(2));
        let brute = F5::enumerate_all()
            .unwrap()
            .into_iter()
            .find(|x| F5::new(3).mul(x) == F5::new(1))
            .unwrap();
        assert_eq!(inv3, brute);
    }

    #[test]
    fn minus_one_cases() {
        // 4 * 4 = 16 = 1 mod 5 and 1 + 4 = 0 mod 5
        let m = F5::minus_one().unwrap();
        assert_eq!(m, F5::new(4));
        assert_eq!(m.mul(&m), F5::new(1));
        assert!(m.add(&F5::new(1)).is_zero());
        // forced 1- = 1 in characteristic 2
        assert!(F2::minus_one().is_none());
    }

    #[test]
    fn no_sqrt2_mod_5() {
        assert!(F5::sqrt2().is_none());
        // but 2 = 0 mod 2 has the root 0
        assert_eq!(F2::sqrt2(), Some(F2::new(0)));
        // and 2 mod 7 has root 3 or 4
        let r = Fp::<7>::sqrt2().unwrap();
        assert_eq!(r.mul(&r), Fp::<7>::new(2));
    }
}
