//! Entangled preparations: one-sided contractions, the induced generalized
//! operations on each component, spectrum comparison, product-state
//! detection, superposition analysis, and the cloning analyzer.

use crate::arrow::Arrow;
use crate::charpoly::{characteristic_at_most, charpoly};
use crate::error::{QcatError, Result};
use crate::linalg;
use crate::object::FinObject;
use crate::scalar::Scalar;
use crate::tensor::{kappa, tensor_arrows, tensor_object, unit_left_relabel, unit_right_relabel};
use crate::unit::{delta_preps, point_prep, unit_object};

fn check_entangled<S: Scalar>(
    a_obj: &FinObject,
    b_obj: &FinObject,
    c: &Arrow<S>,
    context: &'static str,
) -> Result<()> {
    let expected = tensor_object(a_obj, b_obj);
    if c.dom().len() != 1 || c.cod() != &expected {
        return Err(QcatError::ObjectMismatch {
            context,
            expected: format!("preparation of {expected}"),
            found: format!("{} -> {}", c.dom(), c.cod()),
        });
    }
    Ok(())
}

/// Entrywise involution without transposition; the action antilinear
/// operations apply to their argument first.
fn entrywise_star<S: Scalar>(a: &Arrow<S>) -> Arrow<S> {
    Arrow::from_fn(a.dom().clone(), a.cod().clone(), |i, j| a.entry(i, j).star())
}

/// A generalized quantic operation: a matrix together with a linearity
/// flag. Antilinear operations involute the input's entries before the
/// matrix acts, which realizes `apply(a . s) = apply(a) . s*`.
#[derive(Clone, Debug)]
pub struct Gqo<S: Scalar> {
    pub matrix: Arrow<S>,
    pub antilinear: bool,
}

impl<S: Scalar> Gqo<S> {
    pub fn apply(&self, a: &Arrow<S>) -> Result<Arrow<S>> {
        let input = if self.antilinear {
            entrywise_star(a)
        } else {
            a.clone()
        };
        Arrow::compose(&self.matrix, &input)
    }
}

/// The left contraction packaged as a generalized operation: antilinear,
/// with the coefficient matrix as its carrier. Applying it to `a` equals
/// [`contract_left`].
pub fn left_contraction_operator<S: Scalar>(
    a_obj: &FinObject,
    b_obj: &FinObject,
    c: &Arrow<S>,
) -> Result<Gqo<S>> {
    Ok(Gqo {
        matrix: coefficient_matrix(a_obj, b_obj, c)?,
        antilinear: true,
    })
}

/// The right contraction as an antilinear generalized operation. Its
/// carrier is the plain transpose of the coefficient matrix; the
/// involution lives in the antilinear application rule.
pub fn right_contraction_operator<S: Scalar>(
    a_obj: &FinObject,
    b_obj: &FinObject,
    c: &Arrow<S>,
) -> Result<Gqo<S>> {
    let m = coefficient_matrix(a_obj, b_obj, c)?;
    let transposed = Arrow::from_fn(b_obj.clone(), a_obj.clone(), |b, a| m.entry(a, b).clone());
    Ok(Gqo {
        matrix: transposed,
        antilinear: true,
    })
}

/// The coefficient matrix of an entangled preparation: entry `(a, b)` is
/// the amplitude on the pair label.
pub fn coefficient_matrix<S: Scalar>(
    a_obj: &FinObject,
    b_obj: &FinObject,
    c: &Arrow<S>,
) -> Result<Arrow<S>> {
    check_entangled(a_obj, b_obj, c, "coefficient_matrix")?;
    let nb = b_obj.len();
    Ok(Arrow::from_fn(a_obj.clone(), b_obj.clone(), |i, j| {
        c.entry(0, i * nb + j).clone()
    }))
}

/// Project the left factor of `c` onto `a`: the preparation of the right
/// component `(a* (x) id) . c`, antilinear in `a`.
pub fn contract_left<S: Scalar>(
    a_obj: &FinObject,
    b_obj: &FinObject,
    c: &Arrow<S>,
    a: &Arrow<S>,
) -> Result<Arrow<S>> {
    check_entangled(a_obj, b_obj, c, "contract_left")?;
    if a.dom().len() != 1 || a.cod() != a_obj {
        return Err(QcatError::ObjectMismatch {
            context: "contract_left",
            expected: format!("preparation of {a_obj}"),
            found: format!("{} -> {}", a.dom(), a.cod()),
        });
    }
    let contracted = Arrow::compose(
        &tensor_arrows(&a.adjoint(), &Arrow::identity(b_obj)),
        c,
    )?;
    Arrow::compose(&unit_left_relabel(b_obj), &contracted)
}

/// Project the right factor of `c` onto `b`: `(id (x) b*) . c`.
pub fn contract_right<S: Scalar>(
    a_obj: &FinObject,
    b_obj: &FinObject,
    c: &Arrow<S>,
    b: &Arrow<S>,
) -> Result<Arrow<S>> {
    check_entangled(a_obj, b_obj, c, "contract_right")?;
    if b.dom().len() != 1 || b.cod() != b_obj {
        return Err(QcatError::ObjectMismatch {
            context: "contract_right",
            expected: format!("preparation of {b_obj}"),
            found: format!("{} -> {}", b.dom(), b.cod()),
        });
    }
    let contracted = Arrow::compose(
        &tensor_arrows(&Arrow::identity(a_obj), &b.adjoint()),
        c,
    )?;
    Arrow::compose(&unit_right_relabel(a_obj), &contracted)
}

/// The linear operation induced on the left component: contracting left
/// then right. Its matrix is the Gram matrix of the coefficient rows.
pub fn partial_trace_left<S: Scalar>(
    a_obj: &FinObject,
    b_obj: &FinObject,
    c: &Arrow<S>,
) -> Result<Gqo<S>> {
    check_entangled(a_obj, b_obj, c, "partial_trace_left")?;
    let m = coefficient_matrix(a_obj, b_obj, c)?;
    let nb = b_obj.len();
    let matrix = Arrow::from_fn(a_obj.clone(), a_obj.clone(), |row, col| {
        let mut acc = S::zero();
        for b in 0..nb {
            acc = acc.add(&m.entry(row, b).star().mul(m.entry(col, b)));
        }
        acc
    });
    Ok(Gqo {
        matrix,
        antilinear: false,
    })
}

/// The linear operation induced on the right component.
pub fn partial_trace_right<S: Scalar>(
    a_obj: &FinObject,
    b_obj: &FinObject,
    c: &Arrow<S>,
) -> Result<Gqo<S>> {
    check_entangled(a_obj, b_obj, c, "partial_trace_right")?;
    let m = coefficient_matrix(a_obj, b_obj, c)?;
    let na = a_obj.len();
    let matrix = Arrow::from_fn(b_obj.clone(), b_obj.clone(), |row, col| {
        let mut acc = S::zero();
        for a in 0..na {
            acc = acc.add(&m.entry(a, row).star().mul(m.entry(a, col)));
        }
        acc
    });
    Ok(Gqo {
        matrix,
        antilinear: false,
    })
}

/// Compare the nonzero spectra of the two induced operations through the
/// padded characteristic-polynomial identity
/// `char(left) . x^|B| = char(right) . x^|A|`, which stays inside the
/// backend field even when the eigenvalues do not.
pub fn spectra_match<S: Scalar>(
    a_obj: &FinObject,
    b_obj: &FinObject,
    c: &Arrow<S>,
) -> Result<bool> {
    check_entangled(a_obj, b_obj, c, "spectra_match")?;
    if !S::caps().is_field() {
        return Err(QcatError::CapabilityMissing {
            backend: S::BACKEND,
            capability: "field scalars",
        });
    }
    let n = a_obj.len().max(b_obj.len());
    if characteristic_at_most::<S>(n).is_some() {
        return Err(QcatError::CapabilityMissing {
            backend: S::BACKEND,
            capability: "characteristic 0 or exceeding the object sizes",
        });
    }
    let pa = charpoly(&partial_trace_left(a_obj, b_obj, c)?.matrix)?;
    let pb = charpoly(&partial_trace_right(a_obj, b_obj, c)?.matrix)?;
    Ok(pa.shift(b_obj.len()).eq_approx(&pb.shift(a_obj.len())))
}

/// Is `c` a product `a (x) b`? Decided by the rank of the coefficient
/// matrix; the zero preparation counts as a (degenerate) product.
pub fn is_product_state<S: Scalar>(
    a_obj: &FinObject,
    b_obj: &FinObject,
    c: &Arrow<S>,
) -> Result<bool> {
    check_entangled(a_obj, b_obj, c, "is_product_state")?;
    if !S::caps().is_field() {
        return Err(QcatError::CapabilityMissing {
            backend: S::BACKEND,
            capability: "field scalars (rank computation)",
        });
    }
    let m = coefficient_matrix(a_obj, b_obj, c)?;
    let rows: Vec<Vec<S>> = (0..a_obj.len())
        .map(|i| (0..b_obj.len()).map(|j| m.entry(i, j).clone()).collect())
        .collect();
    Ok(linalg::rank(&rows) <= 1)
}

/// When `c` has rank at most one, produce preparations with
/// `c = a (x) b`.
pub fn split_product_state<S: Scalar>(
    a_obj: &FinObject,
    b_obj: &FinObject,
    c: &Arrow<S>,
) -> Result<Option<(Arrow<S>, Arrow<S>)>> {
    if !is_product_state(a_obj, b_obj, c)? {
        return Ok(None);
    }
    let m = coefficient_matrix(a_obj, b_obj, c)?;
    let i = unit_object();
    if c.is_zero_arrow() {
        return Ok(Some((
            Arrow::zero(&i, a_obj),
            Arrow::zero(&i, b_obj),
        )));
    }
    // find a nonzero row: it is b up to scale; the column of coefficients
    // against it is a
    let (r0, c0) = (0..a_obj.len())
        .flat_map(|r| (0..b_obj.len()).map(move |c| (r, c)))
        .find(|(r, c)| !m.entry(*r, *c).is_zero())
        .expect("nonzero state has a nonzero entry");
    let pivot_inv = m.entry(r0, c0).inv().expect("field backend");
    let b = Arrow::from_fn(i.clone(), b_obj.clone(), |_, j| m.entry(r0, j).clone());
    let a = Arrow::from_fn(i, a_obj.clone(), |_, j| {
        m.entry(j, c0).mul(&pivot_inv)
    });
    Ok(Some((a, b)))
}

/// Outcome of analyzing `(a1 (x) b1) + (a2 (x) b2)`.
#[derive(Clone, Debug)]
pub struct SuperpositionReport<S: Scalar> {
    pub is_product: bool,
    pub branch: Option<SuperpositionBranch<S>>,
}

#[derive(Clone, Debug, PartialEq)]
pub enum SuperpositionBranch<S: Scalar> {
    /// `a2 = a1 . s`; the sum is `a1 (x) (b1 + b2 . s)`.
    LeftScaled(S),
    /// `b2 = b1 . s`; the sum is `(a1 + a2 . s) (x) b1`.
    RightScaled(S),
}

/// Decide whether a superposition of two product preparations is itself a
/// product, and exhibit the proportionality branch when it is.
pub fn superposition_decide<S: Scalar>(
    a1: &Arrow<S>,
    b1: &Arrow<S>,
    a2: &Arrow<S>,
    b2: &Arrow<S>,
) -> Result<SuperpositionReport<S>> {
    if !S::caps().is_field() {
        return Err(QcatError::CapabilityMissing {
            backend: S::BACKEND,
            capability: "field scalars",
        });
    }
    let first = kappa(a1, b1)?;
    if first.is_zero_arrow() {
        return Err(QcatError::PreconditionViolated(
            "the first product preparation must be nonzero".into(),
        ));
    }
    let sum = first.add(&kappa(a2, b2)?)?;
    let is_product = is_product_state(a1.cod(), b1.cod(), &sum)?;
    let branch = if let Some(s) = linalg::proportional_factor(a1.entries(), a2.entries()) {
        Some(SuperpositionBranch::LeftScaled(s))
    } else {
        linalg::proportional_factor(b1.entries(), b2.entries())
            .map(SuperpositionBranch::RightScaled)
    };
    Ok(SuperpositionReport { is_product, branch })
}

/// Cloning data for a unit object: the copying arrow, the ancilla object
/// and its reference preparation.
#[derive(Clone, Debug)]
pub struct Cloner<S: Scalar> {
    pub system: FinObject,
    pub ancilla: FinObject,
    /// `system (x) ancilla -> (system (x) system) (x) ancilla`
    pub arrow: Arrow<S>,
    pub ancilla_prep: Arrow<S>,
}

/// Construct a cloner for a unit (one-label) object: the relabelling
/// bijection `(x, w) -> ((x, x), w)` with a delta ancilla preparation.
pub fn build_cloner<S: Scalar>(object: &FinObject) -> Result<Cloner<S>> {
    if object.len() != 1 {
        return Err(QcatError::NotUnitObject(object.to_string()));
    }
    let ancilla = FinObject::from_names(&["w0", "w1"]);
    let dom = tensor_object(object, &ancilla);
    let cod = tensor_object(&tensor_object(object, object), &ancilla);
    let map: Vec<usize> = (0..dom.len()).collect();
    let arrow = Arrow::functional(&dom, &cod, &map)?;
    let ancilla_prep = point_prep(&ancilla, "w0")?;
    Ok(Cloner {
        system: object.clone(),
        ancilla,
        arrow,
        ancilla_prep,
    })
}

/// The ancilla leftover for a given preparation of the unit object:
/// `w . s^{-1}` for amplitude `s`, and the zero preparation when `s = 0`.
pub fn cloner_witness<S: Scalar>(cloner: &Cloner<S>, a: &Arrow<S>) -> Result<Arrow<S>> {
    if a.dom().len() != 1 || a.cod() != &cloner.system {
        return Err(QcatError::ObjectMismatch {
            context: "cloner_witness",
            expected: format!("preparation of {}", cloner.system),
            found: format!("{} -> {}", a.dom(), a.cod()),
        });
    }
    let amplitude = a.entry(0, 0).clone();
    if amplitude.is_zero() {
        return Ok(Arrow::zero(&unit_object(), &cloner.ancilla));
    }
    let inv = amplitude.inv().ok_or(QcatError::ZeroNotInvertible)?;
    Ok(cloner.ancilla_prep.scale(&inv))
}

#[derive(Clone, Debug)]
pub enum CloneOutcome<S: Scalar> {
    Ok,
    Counterexample(CloneWitness<S>),
}

impl<S: Scalar> CloneOutcome<S> {
    pub fn is_ok(&self) -> bool {
        matches!(self, CloneOutcome::Ok)
    }
}

/// A probe on which the cloning equation fails: `lhs` is the candidate's
/// output, `rhs` the closest legal copying output; they differ.
#[derive(Clone, Debug)]
pub struct CloneWitness<S: Scalar> {
    /// The two delta components of the probe; equal for single-delta
    /// probes.
    pub probe_a: Arrow<S>,
    pub probe_b: Arrow<S>,
    /// The probe preparation itself (a scaled delta or a sum of deltas).
    pub probe: Arrow<S>,
    pub lhs: Arrow<S>,
    pub rhs: Arrow<S>,
}

/// Check a candidate cloning arrow against the probe set that the
/// superposition analysis makes decisive: every delta, one scaled delta,
/// and every pairwise sum of deltas. For each probe `p` the output
/// `c . (p (x) w)` must be `(x (x) x) (x) w'` with `x` proportional to
/// `p` and `w'` nonzero. On a one-label object the probe set covers all
/// preparations up to scaling, so an `Ok` verdict is complete there; on
/// larger objects the sum probes are guaranteed to expose any linear
/// candidate.
pub fn verify_cloner<S: Scalar>(
    object: &FinObject,
    candidate: &Arrow<S>,
    ancilla_prep: &Arrow<S>,
) -> Result<CloneOutcome<S>> {
    if !S::caps().is_field() {
        return Err(QcatError::CapabilityMissing {
            backend: S::BACKEND,
            capability: "field scalars",
        });
    }
    let ancilla = ancilla_prep.cod().clone();
    let dom = tensor_object(object, &ancilla);
    let cod = tensor_object(&tensor_object(object, object), &ancilla);
    if candidate.dom() != &dom || candidate.cod() != &cod {
        return Err(QcatError::ObjectMismatch {
            context: "verify_cloner",
            expected: format!("{dom} -> {cod}"),
            found: format!("{} -> {}", candidate.dom(), candidate.cod()),
        });
    }

    let deltas = delta_preps::<S>(object);
    let mut probes: Vec<(Arrow<S>, Arrow<S>, Arrow<S>)> = Vec::new();
    for d in &deltas {
        probes.push((d.clone(), d.clone(), d.clone()));
    }
    // one scaled delta, when the backend has a scalar beyond 0 and 1
    let two = S::two();
    if !two.is_zero() && !two.is_one() {
        let scaled = deltas[0].scale(&two);
        probes.push((deltas[0].clone(), deltas[0].clone(), scaled));
    }
    for (i, di) in deltas.iter().enumerate() {
        for dj in &deltas[..i] {
            probes.push((dj.clone(), di.clone(), dj.add(di)?));
        }
    }

    for (pa, pb, probe) in probes {
        let lhs = Arrow::compose(candidate, &kappa(&probe, ancilla_prep)?)?;
        let (ok, rhs) = probe_output_is_copy(&ancilla, &probe, &lhs)?;
        if !ok {
            return Ok(CloneOutcome::Counterexample(CloneWitness {
                probe_a: pa,
                probe_b: pb,
                probe,
                lhs,
                rhs,
            }));
        }
    }
    Ok(CloneOutcome::Ok)
}

/// Is `lhs = (x (x) x) (x) w'` with `x` proportional to `probe` and
/// `w'` nonzero? Returns the verdict together with the closest legal
/// output (the best-candidate right-hand side used in witnesses).
fn probe_output_is_copy<S: Scalar>(
    ancilla: &FinObject,
    probe: &Arrow<S>,
    lhs: &Arrow<S>,
) -> Result<(bool, Arrow<S>)> {
    let doubled = kappa(probe, probe)?;
    // solve w' from the anchor row where (probe (x) probe) is nonzero
    let anchor = doubled.entries().iter().position(|e| !e.is_zero());
    let nm = ancilla.len();
    let rhs_for = |w: &Arrow<S>| -> Result<Arrow<S>> { kappa(&doubled, w) };
    let Some(anchor) = anchor else {
        // probe (x) probe = 0 can only happen for a zero probe, which is
        // never in the probe set
        return Ok((false, Arrow::zero(lhs.dom(), lhs.cod())));
    };
    let coeff_inv = doubled.entries()[anchor]
        .inv()
        .ok_or(QcatError::ZeroNotInvertible)?;
    let w = Arrow::from_fn(unit_object(), ancilla.clone(), |_, v| {
        lhs.entry(0, anchor * nm + v).mul(&coeff_inv)
    });
    let rhs = rhs_for(&w)?;
    let ok = !w.is_zero_arrow() && lhs.eq_approx(&rhs);
    Ok((ok, rhs))
}
