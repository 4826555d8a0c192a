//! Characteristic polynomials over field backends, computed division-free
//! by cofactor expansion of the shifted matrix. Desk-scale sizes only.

use crate::arrow::Arrow;
use crate::error::{QcatError, Result};
use crate::scalar::Scalar;
use std::fmt;

/// Dense polynomial, coefficients ascending by degree.
#[derive(Clone, Debug, PartialEq)]
pub struct Poly<S: Scalar> {
    pub coeffs: Vec<S>,
}

impl<S: Scalar> Poly<S> {
    pub fn constant(c: S) -> Self {
        Poly { coeffs: vec![c] }
    }

    pub fn zero() -> Self {
        Poly::constant(S::zero())
    }

    /// c + x, i.e. the monic linear polynomial with constant term `c`.
    pub fn linear(c: S) -> Self {
        Poly {
            coeffs: vec![c, S::one()],
        }
    }

    pub fn add(&self, rhs: &Poly<S>) -> Poly<S> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let get = |p: &Poly<S>, k: usize| p.coeffs.get(k).cloned().unwrap_or_else(S::zero);
        Poly {
            coeffs: (0..n).map(|k| get(self, k).add(&get(rhs, k))).collect(),
        }
    }

    pub fn mul(&self, rhs: &Poly<S>) -> Poly<S> {
        let mut out = vec![S::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].add(&a.mul(b));
            }
        }
        Poly { coeffs: out }
    }

    pub fn scale(&self, s: &S) -> Poly<S> {
        Poly {
            coeffs: self.coeffs.iter().map(|c| c.mul(s)).collect(),
        }
    }

    pub fn neg(&self) -> Option<Poly<S>> {
        let coeffs: Option<Vec<S>> = self.coeffs.iter().map(S::neg).collect();
        Some(Poly { coeffs: coeffs? })
    }

    /// Multiply by x^k.
    pub fn shift(&self, k: usize) -> Poly<S> {
        let mut coeffs = vec![S::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Poly { coeffs }
    }

    /// Equality up to the backend tolerance, ignoring trailing zeros.
    pub fn eq_approx(&self, rhs: &Poly<S>) -> bool {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let get = |p: &Poly<S>, k: usize| p.coeffs.get(k).cloned().unwrap_or_else(S::zero);
        (0..n).all(|k| get(self, k).approx_eq(&get(rhs, k)))
    }
}

impl<S: Scalar> fmt::Display for Poly<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(k, c)| format!("({c})x^{k}"))
            .collect();
        write!(f, "{}", terms.join(" + "))
    }
}

/// Smallest `k <= bound` with `k . 1 = 0`, if any. Detects small prime
/// characteristics without extra trait surface.
pub fn characteristic_at_most<S: Scalar>(bound: usize) -> Option<usize> {
    let mut acc = S::zero();
    for k in 1..=bound {
        acc = acc.add(&S::one());
        if acc.is_zero() {
            return Some(k);
        }
    }
    None
}

/// det(xI - M) via cofactor expansion over the polynomial ring. Division
/// free, so no characteristic hazards; cost n! limits it to small n, which
/// is all the crate ever needs.
pub fn charpoly<S: Scalar>(m: &Arrow<S>) -> Result<Poly<S>> {
    if m.dom() != m.cod() {
        return Err(QcatError::ObjectMismatch {
            context: "charpoly",
            expected: "an endo arrow".into(),
            found: format!("{} -> {}", m.dom(), m.cod()),
        });
    }
    if !S::caps().has_additive_inverse {
        return Err(QcatError::CapabilityMissing {
            backend: S::BACKEND,
            capability: "has_additive_inverse",
        });
    }
    let n = m.dom().len();
    if n > 8 {
        return Err(QcatError::PreconditionViolated(
            "characteristic polynomial limited to 8x8".into(),
        ));
    }
    // entries of xI - M; rows indexed by codomain so the determinant is the
    // usual one of the square table
    let mut table: Vec<Vec<Poly<S>>> = Vec::with_capacity(n);
    for i in 0..n {
        let mut row = Vec::with_capacity(n);
        for j in 0..n {
            let neg = m.entry(j, i).neg().expect("checked above");
            if i == j {
                row.push(Poly::linear(neg));
            } else {
                row.push(Poly::constant(neg));
            }
        }
        table.push(row);
    }
    Ok(det(&table))
}

fn det<S: Scalar>(table: &[Vec<Poly<S>>]) -> Poly<S> {
    let n = table.len();
    if n == 1 {
        return table[0][0].clone();
    }
    let mut acc = Poly::zero();
    for (row, cell) in table.iter().enumerate() {
        let minor: Vec<Vec<Poly<S>>> = table
            .iter()
            .enumerate()
            .filter(|(r, _)| *r != row)
            .map(|(_, cols)| cols[1..].to_vec())
            .collect();
        let term = cell[0].mul(&det(&minor));
        let signed = if row % 2 == 0 {
            term
        } else {
            term.neg().expect("field backend")
        };
        acc = acc.add(&signed);
    }
    acc
}
