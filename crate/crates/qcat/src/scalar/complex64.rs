//! Complex double precision with conjugation and a fixed equality tolerance.
//! The only inexact backend; every law that runs here also runs exactly on
//! an exact backend.

use super::{bad_literal, CapabilitySet, Scalar};
use crate::error::Result;
use crate::rng::Rng;
use std::fmt;

pub const CX64_TOLERANCE: f64 = 1e-9;

#[derive(Clone, Copy, PartialEq, Debug)]
pub struct Cx64 {
    pub re: f64,
    pub im: f64,
}

impl Cx64 {
    pub fn new(re: f64, im: f64) -> Self {
        // Fold negative zero so canonical printing is unambiguous.
        let fix = |x: f64| if x == 0.0 { 0.0 } else { x };
        Cx64 {
            re: fix(re),
            im: fix(im),
        }
    }
}

impl fmt::Display for Cx64 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im < 0.0 {
            write!(f, "{:?}-{:?}i", self.re, -self.im)
        } else {
            write!(f, "{:?}+{:?}i", self.re, self.im)
        }
    }
}

impl Scalar for Cx64 {
    const BACKEND: &'static str = "cplx64";

    fn caps() -> CapabilitySet {
        CapabilitySet {
            has_additive_inverse: true,
            has_multiplicative_inverse_of_nonzero: true,
            is_regular: true,
            has_minus_one: true,
            has_sqrt2: true,
            has_definite_norms: true,
            is_exact: false,
            tolerance: CX64_TOLERANCE,
        }
    }

    fn zero() -> Self {
        Cx64::new(0.0, 0.0)
    }

    fn one() -> Self {
        Cx64::new(1.0, 0.0)
    }

    fn add(&self, rhs: &Self) -> Self {
        Cx64::new(self.re + rhs.re, self.im + rhs.im)
    }

    fn mul(&self, rhs: &Self) -> Self {
        Cx64::new(
            self.re * rhs.re - self.im * rhs.im,
            self.re * rhs.im + self.im * rhs.re,
        )
    }

    fn star(&self) -> Self {
        Cx64::new(self.re, -self.im)
    }

    fn neg(&self) -> Option<Self> {
        Some(Cx64::new(-self.re, -self.im))
    }

    fn inv(&self) -> Option<Self> {
        let n = self.re * self.re + self.im * self.im;
        if n == 0.0 {
            None
        } else {
            Some(Cx64::new(self.re / n, -self.im / n))
        }
    }

    fn minus_one() -> Option<Self> {
        Some(Cx64::new(-1.0, 0.0))
    }

    fn sqrt2() -> Option<Self> {
        Some(Cx64::new(std::f64::consts::SQRT_2, 0.0))
    }

    fn sqrt_norm(&self) -> Option<Self> {
        // self should be a (nearly) real nonnegative number.
        if self.im.abs() > CX64_TOLERANCE || self.re < -CX64_TOLERANCE {
            return None;
        }
        Some(Cx64::new(self.re.max(0.0).sqrt(), 0.0))
    }

    fn approx_eq(&self, rhs: &Self) -> bool {
        (self.re - rhs.re).abs() <= CX64_TOLERANCE && (self.im - rhs.im).abs() <= CX64_TOLERANCE
    }

    fn enumerate_all() -> Option<Vec<Self>> {
        None
    }

    fn random(rng: &mut Rng) -> Self {
        Cx64::new(rng.normal(), rng.normal())
    }

    fn from_integer(n: i64) -> Self {
        Cx64::new(n as f64, 0.0)
    }

    fn parse_literal(text: &str) -> Result<Self> {
        parse_cx(text).ok_or_else(|| bad_literal::<Cx64>(text, "expected x.y, x.y+u.vi or x.y-u.vi"))
    }
}

fn parse_cx(text: &str) -> Option<Cx64> {
    let text = text.trim();
    if let Some(body) = text.strip_suffix('i') {
        let bytes = body.as_bytes();
        for k in (1..bytes.len()).rev() {
            let c = bytes[k] as char;
            // not the sign of an exponent like 1e-3
            let prev = bytes[k - 1] as char;
            if (c == '+' || c == '-') && prev != 'e' && prev != 'E' {
                let re: f64 = body[..k].parse().ok()?;
                let im: f64 = match &body[k..] {
                    "+" => 1.0,
                    "-" => -1.0,
                    rest => rest.parse().ok()?,
                };
                return Some(Cx64::new(re, im));
            }
        }
        let im: f64 = if body.is_empty() { 1.0 } else { body.parse().ok()? };
        Some(Cx64::new(0.0, im))
    } else {
        Some(Cx64::new(text.parse().ok()?, 0.0))
    }
}
