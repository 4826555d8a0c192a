//! Exact rationals with reduced canonical form, on arbitrary-precision
//! integers: Gaussian elimination and characteristic polynomials compound
//! numerators fast enough to leave any fixed-width integer.

use super::{bad_literal, CapabilitySet, Scalar};
use crate::error::Result;
use crate::rng::Rng;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use std::fmt;

/// A reduced fraction with positive denominator.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Rat(BigRational);

impl Rat {
    pub fn new(num: i128, den: i128) -> Self {
        assert!(den != 0, "zero denominator");
        Rat(BigRational::new(BigInt::from(num), BigInt::from(den)))
    }

    pub fn int(n: i128) -> Self {
        Rat(BigRational::from_integer(BigInt::from(n)))
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn checked_neg(&self) -> Rat {
        Rat(-self.0.clone())
    }

    pub fn sub(&self, rhs: &Rat) -> Rat {
        Rat(&self.0 - &rhs.0)
    }

    pub fn to_f64(&self) -> f64 {
        self.0.to_f64().unwrap_or(f64::NAN)
    }

    /// Exact square root, when the fraction is a perfect square.
    pub fn exact_sqrt(&self) -> Option<Rat> {
        if self.0.is_negative() {
            return None;
        }
        let n = big_sqrt(self.0.numer())?;
        let d = big_sqrt(self.0.denom())?;
        Some(Rat(BigRational::new(n, d)))
    }

    pub(crate) fn parse(text: &str) -> Option<Rat> {
        let text = text.trim();
        if let Some((n, d)) = text.split_once('/') {
            let n: BigInt = n.trim().parse().ok()?;
            let d: BigInt = d.trim().parse().ok()?;
            if d.is_zero() {
                return None;
            }
            Some(Rat(BigRational::new(n, d)))
        } else {
            let n: BigInt = text.parse().ok()?;
            Some(Rat(BigRational::from_integer(n)))
        }
    }
}

/// Integer square root when exact.
pub(crate) fn big_sqrt(n: &BigInt) -> Option<BigInt> {
    if n.is_negative() {
        return None;
    }
    let r = n.sqrt();
    if &(&r * &r) == n {
        Some(r)
    } else {
        None
    }
}

impl fmt::Display for Rat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.denom().is_one() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl Scalar for Rat {
    const BACKEND: &'static str = "rat";

    fn caps() -> CapabilitySet {
        CapabilitySet {
            has_additive_inverse: true,
            has_multiplicative_inverse_of_nonzero: true,
            is_regular: true,
            has_minus_one: true,
            has_sqrt2: false,
            has_definite_norms: true,
            is_exact: true,
            tolerance: 0.0,
        }
    }

    fn zero() -> Self {
        Rat(BigRational::zero())
    }

    fn one() -> Self {
        Rat(BigRational::one())
    }

    fn add(&self, rhs: &Self) -> Self {
        Rat(&self.0 + &rhs.0)
    }

    fn mul(&self, rhs: &Self) -> Self {
        Rat(&self.0 * &rhs.0)
    }

    fn star(&self) -> Self {
        self.clone()
    }

    fn neg(&self) -> Option<Self> {
        Some(self.checked_neg())
    }

    fn inv(&self) -> Option<Self> {
        if self.0.is_zero() {
            None
        } else {
            Some(Rat(self.0.recip()))
        }
    }

    fn minus_one() -> Option<Self> {
        Some(Rat::int(-1))
    }

    fn sqrt2() -> Option<Self> {
        None
    }

    fn sqrt_norm(&self) -> Option<Self> {
        // identity involution: need s with s^2 = self
        self.exact_sqrt()
    }

    fn enumerate_all() -> Option<Vec<Self>> {
        None
    }

    fn random(rng: &mut Rng) -> Self {
        let num = rng.int_in(-9, 9) as i128;
        let den = loop {
            let d = rng.int_in(-9, 9);
            if d != 0 {
                break d as i128;
            }
        };
        Rat::new(num, den)
    }

    fn from_integer(n: i64) -> Self {
        Rat::int(n as i128)
    }

    fn parse_literal(text: &str) -> Result<Self> {
        Rat::parse(text).ok_or_else(|| bad_literal::<Rat>(text, "expected p or p/q"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_form() {
        assert_eq!(Rat::new(2, 4), Rat::new(1, 2));
        assert_eq!(Rat::new(1, -2), Rat::new(-1, 2));
        assert_eq!(Rat::new(0, -7), Rat::int(0));
        assert_eq!(Rat::new(-3, -9).to_string(), "1/3");
    }

    #[test]
    fn spec_arithmetic_cases() {
        // 1/2 + 1/3 = 5/6
        assert_eq!(Rat::new(1, 2).add(&Rat::new(1, 3)), Rat::new(5, 6));
        // inverse of 2 is 1/2
        assert_eq!(Rat::int(2).inv().unwrap(), Rat::new(1, 2));
        // involution is the identity
        assert_eq!(Rat::new(3, 4).star(), Rat::new(3, 4));
    }

    #[test]
    fn exact_sqrt_cases() {
        assert_eq!(Rat::new(9, 4).exact_sqrt(), Some(Rat::new(3, 2)));
        assert_eq!(Rat::int(2).exact_sqrt(), None);
        assert_eq!(Rat::int(-1).exact_sqrt(), None);
        assert_eq!(Rat::int(0).exact_sqrt(), Some(Rat::int(0)));
    }

    #[test]
    fn no_overflow_on_compounding_products() {
        // repeated squaring would leave any machine integer
        let mut x = Rat::new(9, 7);
        for _ in 0..8 {
            x = x.mul(&x);
        }
        assert!(x.to_string().len() > 30);
    }
}
