//! Gaussian rationals a + bi with conjugation as the involution.

use super::rational::Rat;
use super::{bad_literal, CapabilitySet, Scalar};
use crate::error::Result;
use crate::rng::Rng;
use num_traits::ToPrimitive;
use std::fmt;

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Gauss {
    pub re: Rat,
    pub im: Rat,
}

impl Gauss {
    pub fn new(re: Rat, im: Rat) -> Self {
        Gauss { re, im }
    }

    pub fn i() -> Self {
        Gauss::new(Rat::int(0), Rat::int(1))
    }

    pub fn from_rat(r: Rat) -> Self {
        Gauss::new(r, Rat::int(0))
    }
}

impl fmt::Display for Gauss {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im == Rat::int(0) {
            write!(f, "{}", self.re)
        } else if self.im.is_negative() {
            write!(f, "{}-{}i", self.re, self.im.checked_neg())
        } else {
            write!(f, "{}+{}i", self.re, self.im)
        }
    }
}

fn int_sqrt(n: i128) -> Option<i128> {
    if n < 0 {
        return None;
    }
    let r = (n as f64).sqrt() as i128;
    (r.saturating_sub(2)..=r + 2).find(|&c| c >= 0 && c * c == n)
}

/// Writes `n >= 0` as a sum of two integer squares, when possible.
/// Trial-division factorization; a prime congruent to 3 mod 4 must occur
/// to an even power.
fn two_squares(n: i128) -> Option<(i128, i128)> {
    if n < 0 {
        return None;
    }
    if n == 0 {
        return Some((0, 0));
    }
    let mut rest = n;
    let mut acc = (1i128, 0i128); // Gaussian-integer accumulator
    let mut scale = 1i128;
    let mut p = 2i128;
    while p * p <= rest {
        if rest % p == 0 {
            let mut e = 0u32;
            while rest % p == 0 {
                rest /= p;
                e += 1;
            }
            if p % 4 == 3 {
                if !e.is_multiple_of(2) {
                    return None;
                }
                scale *= p.pow(e / 2);
            } else {
                let rep = prime_two_squares(p)?;
                for _ in 0..e {
                    acc = (acc.0 * rep.0 - acc.1 * rep.1, acc.0 * rep.1 + acc.1 * rep.0);
                }
            }
        }
        p += 1;
    }
    if rest > 1 {
        if rest % 4 == 3 {
            return None;
        }
        let rep = prime_two_squares(rest)?;
        acc = (acc.0 * rep.0 - acc.1 * rep.1, acc.0 * rep.1 + acc.1 * rep.0);
    }
    Some((acc.0.abs() * scale, acc.1.abs() * scale))
}

fn prime_two_squares(p: i128) -> Option<(i128, i128)> {
    let mut a = 0i128;
    while a * a <= p {
        if let Some(b) = int_sqrt(p - a * a) {
            return Some((a, b));
        }
        a += 1;
    }
    None
}

impl Scalar for Gauss {
    const BACKEND: &'static str = "gauss";

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
        Gauss::from_rat(Rat::int(0))
    }

    fn one() -> Self {
        Gauss::from_rat(Rat::int(1))
    }

    fn add(&self, rhs: &Self) -> Self {
        Gauss::new(Scalar::add(&self.re, &rhs.re), Scalar::add(&self.im, &rhs.im))
    }

    fn mul(&self, rhs: &Self) -> Self {
        Gauss::new(
            self.re.mul(&rhs.re).sub(&self.im.mul(&rhs.im)),
            self.re.mul(&rhs.im).add(&self.im.mul(&rhs.re)),
        )
    }

    fn star(&self) -> Self {
        Gauss::new(self.re.clone(), self.im.checked_neg())
    }

    fn neg(&self) -> Option<Self> {
        Some(Gauss::new(self.re.checked_neg(), self.im.checked_neg()))
    }

    fn inv(&self) -> Option<Self> {
        let norm = self.re.mul(&self.re).add(&self.im.mul(&self.im));
        let inv_norm = Scalar::inv(&norm)?;
        Some(Gauss::new(
            self.re.mul(&inv_norm),
            self.im.checked_neg().mul(&inv_norm),
        ))
    }

    fn minus_one() -> Option<Self> {
        Some(Gauss::from_rat(Rat::int(-1)))
    }

    fn sqrt2() -> Option<Self> {
        // (a+bi)^2 = 2 forces b = 0 and a^2 = 2, impossible in the rationals
        None
    }

    fn sqrt_norm(&self) -> Option<Self> {
        // Conjugation involution: need s with |s|^2 = self, so self must be
        // a nonnegative rational expressible as a sum of two rational
        // squares: (u/q)^2 + (v/q)^2 = p/q with u^2 + v^2 = p*q. The
        // factorization search is bounded to machine-sized inputs.
        if self.im != Rat::int(0) || self.re.is_negative() {
            return None;
        }
        let p = self.re.numer().to_i128()?;
        let q = self.re.denom().to_i128()?;
        let (u, v) = two_squares(p.checked_mul(q)?)?;
        Some(Gauss::new(Rat::new(u, q), Rat::new(v, q)))
    }

    fn enumerate_all() -> Option<Vec<Self>> {
        None
    }

    fn random(rng: &mut Rng) -> Self {
        Gauss::new(Rat::random(rng), Rat::random(rng))
    }

    fn from_integer(n: i64) -> Self {
        Gauss::from_rat(Rat::int(n as i128))
    }

    fn parse_literal(text: &str) -> Result<Self> {
        parse_gauss(text).ok_or_else(|| bad_literal::<Gauss>(text, "expected a, a+bi or a-bi"))
    }
}

fn parse_gauss(text: &str) -> Option<Gauss> {
    let text = text.trim();
    if let Some(body) = text.strip_suffix('i') {
        let bytes = body.as_bytes();
        for k in (1..bytes.len()).rev() {
            let c = bytes[k] as char;
            if (c == '+' || c == '-') && bytes[k - 1] as char != '/' {
                let re = Rat::parse(&body[..k])?;
                let im_text = &body[k..];
                let im = if im_text == "+" {
                    Rat::int(1)
                } else if im_text == "-" {
                    Rat::int(-1)
                } else {
                    Rat::parse(im_text)?
                };
                return Some(Gauss::new(re, im));
            }
        }
        // pure imaginary, e.g. `3/4i` or `i`
        let im = if body.is_empty() {
            Rat::int(1)
        } else {
            Rat::parse(body)?
        };
        Some(Gauss::new(Rat::int(0), im))
    } else {
        Some(Gauss::from_rat(Rat::parse(text)?))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn conjugation() {
        let z = Gauss::new(Rat::int(2), Rat::int(3));
        assert_eq!(z.star(), Gauss::new(Rat::int(2), Rat::int(-3)));
        assert_eq!(z.star().star(), z);
    }

    #[test]
    fn i_squared() {
        let i = Gauss::i();
        assert_eq!(i.mul(&i), Gauss::from_rat(Rat::int(-1)));
    }

    #[test]
    fn two_squares_cases() {
        assert_eq!(two_squares(0), Some((0, 0)));
        let (a, b) = two_squares(2).unwrap();
        assert_eq!(a * a + b * b, 2);
        let (a, b) = two_squares(25).unwrap();
        assert_eq!(a * a + b * b, 25);
        assert_eq!(two_squares(3), None);
        assert_eq!(two_squares(21), None); // 3 * 7, both 3 mod 4, odd powers
        assert_eq!(two_squares(9), Some((3, 0)));
        let (a, b) = two_squares(45).unwrap(); // 9 * 5
        assert_eq!(a * a + b * b, 45);
    }

    #[test]
    fn sqrt_norm_finds_gaussian_roots() {
        // 2 = |1+i|^2 even though sqrt(2) is not rational
        let s = Gauss::from_rat(Rat::int(2)).sqrt_norm().unwrap();
        assert_eq!(s.star().mul(&s), Gauss::from_rat(Rat::int(2)));
        assert!(Gauss::from_rat(Rat::int(3)).sqrt_norm().is_none());
        assert!(Gauss::i().sqrt_norm().is_none());
    }

    #[test]
    fn literal_forms() {
        assert_eq!(parse_gauss("2+3i").unwrap(), Gauss::new(Rat::int(2), Rat::int(3)));
        assert_eq!(parse_gauss("2-3i").unwrap(), Gauss::new(Rat::int(2), Rat::int(-3)));
        assert_eq!(
            parse_gauss("1/2-3/4i").unwrap(),
            Gauss::new(Rat::new(1, 2), Rat::new(-3, 4))
        );
        assert_eq!(parse_gauss("i").unwrap(), Gauss::i());
        assert_eq!(parse_gauss("-5").unwrap(), Gauss::from_rat(Rat::int(-5)));
    }
}
