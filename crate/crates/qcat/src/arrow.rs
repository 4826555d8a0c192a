//! Arrows of the matrix category: total scalar tables indexed by
//! (domain label, codomain label), with composition, identities, adjoints,
//! zero arrows, entrywise addition and the unitarity predicates.

use crate::error::{QcatError, Result};
use crate::object::FinObject;
use crate::scalar::Scalar;
use std::fmt;

/// A matrix of scalars with declared domain and codomain. Entry `(a, b)` is
/// stored row-major with rows indexed by domain labels.
///
/// Equality is structural: domain labels, codomain labels and entries must
/// all match. Objects carrying different labels are different objects even
/// when unitarily related.
#[derive(Clone, PartialEq, Debug)]
pub struct Arrow<S: Scalar> {
    dom: FinObject,
    cod: FinObject,
    entries: Vec<S>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct UnitarityFlags {
    pub self_adjoint: bool,
    pub left_unitary: bool,
    pub right_unitary: bool,
    pub unitary: bool,
}

impl<S: Scalar> Arrow<S> {
    pub fn new(dom: FinObject, cod: FinObject, entries: Vec<S>) -> Result<Self> {
        if entries.len() != dom.len() * cod.len() {
            return Err(QcatError::PreconditionViolated(format!(
                "entry table has {} values, expected {}x{}",
                entries.len(),
                dom.len(),
                cod.len()
            )));
        }
        Ok(Arrow { dom, cod, entries })
    }

    pub fn from_fn(dom: FinObject, cod: FinObject, mut f: impl FnMut(usize, usize) -> S) -> Self {
        let mut entries = Vec::with_capacity(dom.len() * cod.len());
        for i in 0..dom.len() {
            for j in 0..cod.len() {
                entries.push(f(i, j));
            }
        }
        Arrow { dom, cod, entries }
    }

    pub fn dom(&self) -> &FinObject {
        &self.dom
    }

    pub fn cod(&self) -> &FinObject {
        &self.cod
    }

    pub fn entry(&self, dom_idx: usize, cod_idx: usize) -> &S {
        &self.entries[dom_idx * self.cod.len() + cod_idx]
    }

    pub fn entries(&self) -> &[S] {
        &self.entries
    }

    pub fn entry_by_labels(&self, dom_label: &str, cod_label: &str) -> Result<&S> {
        let i = self.dom.require_index(dom_label)?;
        let j = self.cod.require_index(cod_label)?;
        Ok(self.entry(i, j))
    }

    pub fn identity(object: &FinObject) -> Self {
        Arrow::from_fn(object.clone(), object.clone(), |i, j| {
            if i == j {
                S::one()
            } else {
                S::zero()
            }
        })
    }

    pub fn zero(dom: &FinObject, cod: &FinObject) -> Self {
        Arrow::from_fn(dom.clone(), cod.clone(), |_, _| S::zero())
    }

    /// g after f: `g.compose_after(f)` is the matrix of first applying `f`.
    /// Entry `(a, c)` is the sum over middle labels of
    /// `g(b, c) * f(a, b)`.
    pub fn compose(g: &Arrow<S>, f: &Arrow<S>) -> Result<Arrow<S>> {
        if f.cod != g.dom {
            return Err(QcatError::ObjectMismatch {
                context: "compose",
                expected: f.cod.to_string(),
                found: g.dom.to_string(),
            });
        }
        let mid = f.cod.len();
        Ok(Arrow::from_fn(f.dom.clone(), g.cod.clone(), |a, c| {
            let mut acc = S::zero();
            for b in 0..mid {
                acc = acc.add(&g.entry(b, c).mul(f.entry(a, b)));
            }
            acc
        }))
    }

    /// The adjoint: domain and codomain swap, entry `(b, a)` is the
    /// involution of entry `(a, b)`.
    pub fn adjoint(&self) -> Arrow<S> {
        Arrow::from_fn(self.cod.clone(), self.dom.clone(), |b, a| {
            self.entry(a, b).star()
        })
    }

    /// Entrywise sum of parallel arrows.
    pub fn add(&self, other: &Arrow<S>) -> Result<Arrow<S>> {
        if self.dom != other.dom || self.cod != other.cod {
            return Err(QcatError::ObjectMismatch {
                context: "add_arrows",
                expected: format!("{} -> {}", self.dom, self.cod),
                found: format!("{} -> {}", other.dom, other.cod),
            });
        }
        Ok(Arrow::from_fn(self.dom.clone(), self.cod.clone(), |i, j| {
            self.entry(i, j).add(other.entry(i, j))
        }))
    }

    /// Entrywise scaling. For a preparation `a` this equals `a . s`, the
    /// composition with the scalar on the right.
    pub fn scale(&self, s: &S) -> Arrow<S> {
        Arrow::from_fn(self.dom.clone(), self.cod.clone(), |i, j| {
            self.entry(i, j).mul(s)
        })
    }

    /// Equality up to the backend tolerance; coincides with `==` on exact
    /// backends. Every law check compares arrows through this.
    pub fn eq_approx(&self, other: &Arrow<S>) -> bool {
        self.dom == other.dom
            && self.cod == other.cod
            && self
                .entries
                .iter()
                .zip(&other.entries)
                .all(|(x, y)| x.approx_eq(y))
    }

    pub fn is_zero_arrow(&self) -> bool {
        self.entries.iter().all(|x| x.is_zero())
    }

    /// The 0/1 matrix of a total map on labels. Right-unitary exactly when
    /// the map is injective, unitary exactly when it is bijective.
    pub fn functional(dom: &FinObject, cod: &FinObject, map: &[usize]) -> Result<Arrow<S>> {
        if map.len() != dom.len() || map.iter().any(|&j| j >= cod.len()) {
            return Err(QcatError::PreconditionViolated(
                "functional arrow needs a total map into the codomain".into(),
            ));
        }
        Ok(Arrow::from_fn(dom.clone(), cod.clone(), |i, j| {
            if map[i] == j {
                S::one()
            } else {
                S::zero()
            }
        }))
    }

    /// Same as [`Arrow::functional`] but the map is given on labels.
    pub fn functional_by_labels(
        dom: &FinObject,
        cod: &FinObject,
        map: impl Fn(&str) -> String,
    ) -> Result<Arrow<S>> {
        let idx_map: Result<Vec<usize>> = dom
            .labels()
            .iter()
            .map(|l| cod.require_index(&map(l)))
            .collect();
        Arrow::functional(dom, cod, &idx_map?)
    }

    pub fn is_right_unitary(&self) -> bool {
        Arrow::compose(&self.adjoint(), self)
            .map(|m| m.eq_approx(&Arrow::identity(&self.dom)))
            .unwrap_or(false)
    }

    pub fn is_left_unitary(&self) -> bool {
        Arrow::compose(self, &self.adjoint())
            .map(|m| m.eq_approx(&Arrow::identity(&self.cod)))
            .unwrap_or(false)
    }

    /// All four flags at once. `self_adjoint` is reported `false` on
    /// non-endo arrows rather than erroring.
    pub fn unitarity_flags(&self) -> UnitarityFlags {
        let left = self.is_left_unitary();
        let right = self.is_right_unitary();
        UnitarityFlags {
            self_adjoint: self.dom == self.cod && self.eq_approx(&self.adjoint()),
            left_unitary: left,
            right_unitary: right,
            unitary: left && right,
        }
    }

    pub fn is_unitary(&self) -> bool {
        let f = self.unitarity_flags();
        f.unitary
    }
}

/// Eigenvector test: `x` must be right-unitary and satisfy
/// `f . x = x . s` for the inner arrow `s` on the domain of `x`.
pub fn is_eigenvector<S: Scalar>(f: &Arrow<S>, x: &Arrow<S>, s: &Arrow<S>) -> Result<bool> {
    if f.dom() != f.cod() || x.cod() != f.dom() || s.dom() != x.dom() || s.cod() != x.dom() {
        return Err(QcatError::ObjectMismatch {
            context: "is_eigenvector",
            expected: format!("f: A->A, x: B->A, s: B->B with A={}", f.dom()),
            found: format!("f: {}->{}, x: {}->{}, s: {}->{}",
                f.dom(), f.cod(), x.dom(), x.cod(), s.dom(), s.cod()),
        });
    }
    if !x.is_right_unitary() {
        return Ok(false);
    }
    let lhs = Arrow::compose(f, x)?;
    let rhs = Arrow::compose(x, s)?;
    Ok(lhs.eq_approx(&rhs))
}

impl<S: Scalar> fmt::Display for Arrow<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{} -> {}", self.dom, self.cod)?;
        for i in 0..self.dom.len() {
            let row: Vec<String> = (0..self.cod.len())
                .map(|j| self.entry(i, j).to_string())
                .collect();
            writeln!(f, "  {}", row.join(" "))?;
        }
        Ok(())
    }
}
