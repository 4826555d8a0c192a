//! The quadratic extension a + b*sqrt(2) over the rationals, identity
//! involution. Written `a+b~2` in literals.

use super::rational::Rat;
use super::{bad_literal, CapabilitySet, Scalar};
use crate::error::Result;
use crate::rng::Rng;
use std::fmt;

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Sqrt2Ext {
    pub a: Rat,
    pub b: Rat,
}

impl Sqrt2Ext {
    pub fn new(a: Rat, b: Rat) -> Self {
        Sqrt2Ext { a, b }
    }

    pub fn from_rat(a: Rat) -> Self {
        Sqrt2Ext::new(a, Rat::int(0))
    }

    /// 1/sqrt(2) = (1/2) sqrt(2).
    pub fn inv_sqrt2() -> Self {
        Sqrt2Ext::new(Rat::int(0), Rat::new(1, 2))
    }

    /// Exact square root within the extension, when one exists.
    ///
    /// (u + v sqrt2)^2 = u^2 + 2 v^2 + 2uv sqrt2, so a root of a + b sqrt2
    /// needs u^2 + 2 v^2 = a and 2uv = b; eliminating v gives
    /// u^2 = (a +- sqrt(a^2 - 2 b^2)) / 2 with a rational inner root.
    fn exact_sqrt(&self) -> Option<Sqrt2Ext> {
        let (a, b) = (self.a.clone(), self.b.clone());
        if b == Rat::int(0) {
            if let Some(u) = a.exact_sqrt() {
                return Some(Sqrt2Ext::new(u, Rat::int(0)));
            }
            // a = 2 v^2: root is v sqrt2.
            if let Some(v) = a.mul(&Rat::new(1, 2)).exact_sqrt() {
                return Some(Sqrt2Ext::new(Rat::int(0), v));
            }
            return None;
        }
        let disc = a.mul(&a).sub(&Rat::int(2).mul(&b.mul(&b)));
        let d = disc.exact_sqrt()?;
        for sign in [d.clone(), d.checked_neg()] {
            let u2 = a.add(&sign).mul(&Rat::new(1, 2));
            if let Some(u) = u2.exact_sqrt() {
                if u != Rat::int(0) {
                    let v = b.mul(&Scalar::inv(&Rat::int(2).mul(&u))?);
                    let cand = Sqrt2Ext::new(u, v);
                    if cand.mul(&cand) == *self {
                        return Some(cand);
                    }
                }
            }
        }
        None
    }

    /// Sign of the real number a + b sqrt2.
    fn is_nonnegative(&self) -> bool {
        let a = self.a.to_f64();
        let b = self.b.to_f64();
        a + b * std::f64::consts::SQRT_2 >= -1e-12
    }
}

impl fmt::Display for Sqrt2Ext {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.b == Rat::int(0) {
            write!(f, "{}", self.a)
        } else if self.b.is_negative() {
            write!(f, "{}-{}~2", self.a, self.b.checked_neg())
        } else {
            write!(f, "{}+{}~2", self.a, self.b)
        }
    }
}

impl Scalar for Sqrt2Ext {
    const BACKEND: &'static str = "qsqrt2";

    fn caps() -> CapabilitySet {
        CapabilitySet {
            has_additive_inverse: true,
            has_multiplicative_inverse_of_nonzero: true,
            is_regular: true,
            has_minus_one: true,
            has_sqrt2: true,
            has_definite_norms: true,
            is_exact: true,
            tolerance: 0.0,
        }
    }

    fn zero() -> Self {
        Sqrt2Ext::from_rat(Rat::int(0))
    }

    fn one() -> Self {
        Sqrt2Ext::from_rat(Rat::int(1))
    }

    fn add(&self, rhs: &Self) -> Self {
        Sqrt2Ext::new(Scalar::add(&self.a, &rhs.a), Scalar::add(&self.b, &rhs.b))
    }

    fn mul(&self, rhs: &Self) -> Self {
        Sqrt2Ext::new(
            self.a
                .mul(&rhs.a)
                .add(&Rat::int(2).mul(&self.b.mul(&rhs.b))),
            self.a.mul(&rhs.b).add(&self.b.mul(&rhs.a)),
        )
    }

    fn star(&self) -> Self {
        self.clone()
    }

    fn neg(&self) -> Option<Self> {
        Some(Sqrt2Ext::new(self.a.checked_neg(), self.b.checked_neg()))
    }

    fn inv(&self) -> Option<Self> {
        // (a + b sqrt2)(a - b sqrt2) = a^2 - 2 b^2, nonzero for nonzero
        // elements since sqrt2 is irrational.
        let norm = self.a.mul(&self.a).sub(&Rat::int(2).mul(&self.b.mul(&self.b)));
        let inv_norm = Scalar::inv(&norm)?;
        Some(Sqrt2Ext::new(
            self.a.mul(&inv_norm),
            self.b.checked_neg().mul(&inv_norm),
        ))
    }

    fn minus_one() -> Option<Self> {
        Some(Sqrt2Ext::from_rat(Rat::int(-1)))
    }

    fn sqrt2() -> Option<Self> {
        Some(Sqrt2Ext::new(Rat::int(0), Rat::int(1)))
    }

    fn sqrt_norm(&self) -> Option<Self> {
        // Identity involution: need s with s^2 = self, and self must be
        // a nonnegative real for a real root to exist.
        if !self.is_nonnegative() {
            return None;
        }
        self.exact_sqrt()
    }

    fn enumerate_all() -> Option<Vec<Self>> {
        None
    }

    fn random(rng: &mut Rng) -> Self {
        Sqrt2Ext::new(Rat::random(rng), Rat::random(rng))
    }

    fn from_integer(n: i64) -> Self {
        Sqrt2Ext::from_rat(Rat::int(n as i128))
    }

    fn parse_literal(text: &str) -> Result<Self> {
        parse_sqrt2(text).ok_or_else(|| bad_literal::<Sqrt2Ext>(text, "expected a, a+b~2 or a-b~2"))
    }
}

fn parse_sqrt2(text: &str) -> Option<Sqrt2Ext> {
    let text = text.trim();
    if let Some(body) = text.strip_suffix("~2") {
        let bytes = body.as_bytes();
        for k in (1..bytes.len()).rev() {
            let c = bytes[k] as char;
            if (c == '+' || c == '-') && bytes[k - 1] as char != '/' {
                let a = Rat::parse(&body[..k])?;
                let b_text = &body[k..];
                let b = if b_text == "+" {
                    Rat::int(1)
                } else if b_text == "-" {
                    Rat::int(-1)
                } else {
                    Rat::parse(b_text)?
                };
                return Some(Sqrt2Ext::new(a, b));
            }
        }
        let b = if body.is_empty() {
            Rat::int(1)
        } else {
            Rat::parse(body)?
        };
        Some(Sqrt2Ext::new(Rat::int(0), b))
    } else {
        Some(Sqrt2Ext::from_rat(Rat::parse(text)?))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inv_sqrt2_squares_to_half() {
        let x = Sqrt2Ext::inv_sqrt2();
        assert_eq!(x.mul(&x), Sqrt2Ext::from_rat(Rat::new(1, 2)));
    }

    #[test]
    fn sqrt2_times_itself() {
        let r = Sqrt2Ext::sqrt2().unwrap();
        assert_eq!(r.mul(&r), Sqrt2Ext::from_rat(Rat::int(2)));
    }

    #[test]
    fn inverse() {
        let x = Sqrt2Ext::new(Rat::int(1), Rat::int(1));
        let y = x.inv().unwrap();
        assert!(x.mul(&y).is_one());
        // 1/sqrt2 is the inverse of sqrt2
        assert_eq!(Sqrt2Ext::sqrt2().unwrap().inv().unwrap(), Sqrt2Ext::inv_sqrt2());
    }

    #[test]
    fn sqrt_norm_cases() {
        // root of 2 is sqrt2 itself
        assert_eq!(
            Sqrt2Ext::from_rat(Rat::int(2)).sqrt_norm(),
            Some(Sqrt2Ext::new(Rat::int(0), Rat::int(1)))
        );
        // root of 3 + 2 sqrt2 is 1 + sqrt2
        let x = Sqrt2Ext::new(Rat::int(3), Rat::int(2));
        let s = x.sqrt_norm().unwrap();
        assert_eq!(s.mul(&s), x);
        // 3 has no root here
        assert!(Sqrt2Ext::from_rat(Rat::int(3)).sqrt_norm().is_none());
        // negative reals have no root
        assert!(Sqrt2Ext::from_rat(Rat::int(-2)).sqrt_norm().is_none());
        assert!(Sqrt2Ext::new(Rat::int(1), Rat::int(-1)).sqrt_norm().is_none());
    }

    #[test]
    fn literal_forms() {
        assert_eq!(
            parse_sqrt2("0+1/2~2").unwrap(),
            Sqrt2Ext::new(Rat::int(0), Rat::new(1, 2))
        );
        assert_eq!(
            parse_sqrt2("3-2~2").unwrap(),
            Sqrt2Ext::new(Rat::int(3), Rat::int(-2))
        );
        assert_eq!(parse_sqrt2("7/3").unwrap(), Sqrt2Ext::from_rat(Rat::new(7, 3)));
        assert_eq!(parse_sqrt2("~2").unwrap(), Sqrt2Ext::sqrt2().unwrap());
    }
}
