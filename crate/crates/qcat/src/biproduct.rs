//! Direct sums as coproducts with right-unitary orthogonal injections,
//! block matrices, the diagonal/codiagonal route to Hom addition, the
//! orthogonal-decomposition rule for preparations, bases, and the
//! tensor-over-sum distribution unitaries.

use crate::arrow::Arrow;
use crate::error::{QcatError, Result};
use crate::linalg;
use crate::object::FinObject;
use crate::scalar::Scalar;
use crate::tensor::{tensor_arrows, tensor_object};
use crate::unit::{delta_preps, scalar_product, sqnorm};

/// A disjoint-union object with its two injections. Labels from the left
/// component are tagged `L:`, from the right `R:`; nested sums nest tags.
#[derive(Clone, Debug)]
pub struct DirectSum<S: Scalar> {
    pub object: FinObject,
    pub left: FinObject,
    pub right: FinObject,
    pub inj_left: Arrow<S>,
    pub inj_right: Arrow<S>,
}

pub fn left_tag(label: &str) -> String {
    format!("L:{label}")
}

pub fn right_tag(label: &str) -> String {
    format!("R:{label}")
}

pub fn direct_sum<S: Scalar>(a: &FinObject, b: &FinObject) -> DirectSum<S> {
    let mut labels: Vec<String> = a.labels().iter().map(|l| left_tag(l)).collect();
    labels.extend(b.labels().iter().map(|l| right_tag(l)));
    let object = FinObject::new(labels).expect("tagged disjoint union");
    let inj_left = Arrow::functional(a, &object, &(0..a.len()).collect::<Vec<_>>())
        .expect("left injection");
    let inj_right = Arrow::functional(
        b,
        &object,
        &(a.len()..a.len() + b.len()).collect::<Vec<_>>(),
    )
    .expect("right injection");
    DirectSum {
        object,
        left: a.clone(),
        right: b.clone(),
        inj_left,
        inj_right,
    }
}

/// `[f g]`: the unique arrow out of the sum with `[f g] . u = f` and
/// `[f g] . v = g`.
pub fn copair<S: Scalar>(f: &Arrow<S>, g: &Arrow<S>, ds: &DirectSum<S>) -> Result<Arrow<S>> {
    if f.dom() != &ds.left || g.dom() != &ds.right || f.cod() != g.cod() {
        return Err(QcatError::ObjectMismatch {
            context: "copair",
            expected: format!("{} -> X and {} -> X", ds.left, ds.right),
            found: format!("{} -> {}, {} -> {}", f.dom(), f.cod(), g.dom(), g.cod()),
        });
    }
    let na = ds.left.len();
    Ok(Arrow::from_fn(ds.object.clone(), f.cod().clone(), |c, x| {
        if c < na {
            f.entry(c, x).clone()
        } else {
            g.entry(c - na, x).clone()
        }
    }))
}

/// `(f g)`: the unique arrow into the sum with `u* . (f g) = f` and
/// `v* . (f g) = g`; the adjoint-dual of [`copair`].
pub fn pair<S: Scalar>(f: &Arrow<S>, g: &Arrow<S>, ds: &DirectSum<S>) -> Result<Arrow<S>> {
    if f.cod() != &ds.left || g.cod() != &ds.right || f.dom() != g.dom() {
        return Err(QcatError::ObjectMismatch {
            context: "pair",
            expected: format!("X -> {} and X -> {}", ds.left, ds.right),
            found: format!("{} -> {}, {} -> {}", f.dom(), f.cod(), g.dom(), g.cod()),
        });
    }
    Ok(copair(&f.adjoint(), &g.adjoint(), ds)?.adjoint())
}

/// The unique arrow with the four prescribed corners:
/// `u_cod* . x . u_dom = tl`, `v_cod* . x . u_dom = bl`,
/// `u_cod* . x . v_dom = tr`, `v_cod* . x . v_dom = br`.
pub fn block<S: Scalar>(
    tl: &Arrow<S>,
    bl: &Arrow<S>,
    tr: &Arrow<S>,
    br: &Arrow<S>,
    ds_dom: &DirectSum<S>,
    ds_cod: &DirectSum<S>,
) -> Result<Arrow<S>> {
    let top = copair(
        &Arrow::compose(&ds_cod.inj_left, tl)?,
        &Arrow::compose(&ds_cod.inj_left, tr)?,
        ds_dom,
    )?;
    let bottom = copair(
        &Arrow::compose(&ds_cod.inj_right, bl)?,
        &Arrow::compose(&ds_cod.inj_right, br)?,
        ds_dom,
    )?;
    top.add(&bottom)
}

/// The endo block matrix on one sum: blocks `a: A -> A`, `f: A -> B`,
/// `g: B -> A`, `b: B -> B`.
pub fn block_matrix<S: Scalar>(
    a: &Arrow<S>,
    f: &Arrow<S>,
    g: &Arrow<S>,
    b: &Arrow<S>,
    ds: &DirectSum<S>,
) -> Result<Arrow<S>> {
    block(a, f, g, b, ds, ds)
}

/// The sum of arrows `f (+) g` as the block diagonal.
pub fn oplus_arrows<S: Scalar>(
    f: &Arrow<S>,
    g: &Arrow<S>,
    ds_dom: &DirectSum<S>,
    ds_cod: &DirectSum<S>,
) -> Result<Arrow<S>> {
    block(
        f,
        &Arrow::zero(f.dom(), g.cod()),
        &Arrow::zero(g.dom(), f.cod()),
        g,
        ds_dom,
        ds_cod,
    )
}

/// The diagonal `A -> A (+) A`: both projections are the identity.
pub fn diagonal<S: Scalar>(a: &FinObject) -> Arrow<S> {
    let ds = direct_sum::<S>(a, a);
    pair(&Arrow::identity(a), &Arrow::identity(a), &ds).expect("identities agree")
}

/// The codiagonal `A (+) A -> A`, the adjoint of the diagonal.
pub fn codiagonal<S: Scalar>(a: &FinObject) -> Arrow<S> {
    let ds = direct_sum::<S>(a, a);
    copair(&Arrow::identity(a), &Arrow::identity(a), &ds).expect("identities agree")
}

/// Hom addition through the sum: `codiagonal . (f (+) g) . diagonal`.
/// Agrees with entrywise addition; the agreement is itself one of the
/// registered checks rather than an assumption.
pub fn hom_add_via_biproduct<S: Scalar>(f: &Arrow<S>, g: &Arrow<S>) -> Result<Arrow<S>> {
    if f.dom() != g.dom() || f.cod() != g.cod() {
        return Err(QcatError::ObjectMismatch {
            context: "hom_add_via_biproduct",
            expected: format!("{} -> {}", f.dom(), f.cod()),
            found: format!("{} -> {}", g.dom(), g.cod()),
        });
    }
    let ds_dom = direct_sum::<S>(f.dom(), f.dom());
    let ds_cod = direct_sum::<S>(f.cod(), f.cod());
    let middle = oplus_arrows(f, g, &ds_dom, &ds_cod)?;
    Arrow::compose(
        &codiagonal(f.cod()),
        &Arrow::compose(&middle, &diagonal(f.dom()))?,
    )
}

#[derive(Clone, Debug)]
pub struct BornDecomposition<S: Scalar> {
    /// `u . u* . x`
    pub left_part: Arrow<S>,
    /// `v . v* . x`
    pub right_part: Arrow<S>,
    pub sqnorm_left: S,
    pub sqnorm_right: S,
    pub sqnorm_total: S,
}

/// Split a preparation of `A (+) B` into its two orthogonal legs. The two
/// squared norms always sum to the squared norm of the input.
pub fn born_decompose<S: Scalar>(
    x: &Arrow<S>,
    ds: &DirectSum<S>,
) -> Result<BornDecomposition<S>> {
    if x.dom().len() != 1 || x.cod() != &ds.object {
        return Err(QcatError::ObjectMismatch {
            context: "born_decompose",
            expected: format!("preparation of {}", ds.object),
            found: format!("{} -> {}", x.dom(), x.cod()),
        });
    }
    let u = &ds.inj_left;
    let v = &ds.inj_right;
    let left_part = Arrow::compose(u, &Arrow::compose(&u.adjoint(), x)?)?;
    let right_part = Arrow::compose(v, &Arrow::compose(&v.adjoint(), x)?)?;
    Ok(BornDecomposition {
        sqnorm_left: sqnorm(&left_part)?,
        sqnorm_right: sqnorm(&right_part)?,
        sqnorm_total: sqnorm(x)?,
        left_part,
        right_part,
    })
}

#[derive(Clone, Debug)]
pub struct Basis<S: Scalar> {
    pub preps: Vec<Arrow<S>>,
    /// False when the backend could not produce unit norms; the list is
    /// then orthogonal but unnormalized.
    pub normalized: bool,
}

/// Basis test: normalized, pairwise orthogonal, and maximal. Maximality is
/// decided exactly: over a field by the rank of the coefficient matrix,
/// over the Boolean backend by label coverage.
pub fn is_basis<S: Scalar>(preps: &[Arrow<S>], object: &FinObject) -> Result<bool> {
    for p in preps {
        if p.dom().len() != 1 || p.cod() != object {
            return Err(QcatError::ObjectMismatch {
                context: "is_basis",
                expected: format!("preparations of {object}"),
                found: format!("{} -> {}", p.dom(), p.cod()),
            });
        }
        if !sqnorm(p)?.is_one() {
            return Ok(false);
        }
    }
    for (i, p) in preps.iter().enumerate() {
        for q in &preps[..i] {
            if !scalar_product(p, q)?.is_zero() {
                return Ok(false);
            }
        }
    }
    maximal(preps, object)
}

fn maximal<S: Scalar>(preps: &[Arrow<S>], object: &FinObject) -> Result<bool> {
    let caps = S::caps();
    if caps.is_field() {
        let rows: Vec<Vec<S>> = preps.iter().map(|p| p.entries().to_vec()).collect();
        Ok(linalg::rank(&rows) == object.len())
    } else {
        // Boolean model: a nonzero preparation orthogonal to all members
        // exists exactly when some label is not covered by any support.
        Ok((0..object.len()).all(|j| preps.iter().any(|p| !p.entry(0, j).is_zero())))
    }
}

/// Greedy orthogonalization: keep the supplied partial family, then sweep
/// the delta preparations in label order, keeping each candidate's
/// component orthogonal to everything so far and skipping dependents.
/// Requires a field; normalization of the members is attempted and the
/// `normalized` flag reports whether it succeeded for all of them.
pub fn complete_basis<S: Scalar>(
    object: &FinObject,
    partial: &[Arrow<S>],
) -> Result<Basis<S>> {
    if !S::caps().is_field() {
        return Err(QcatError::CapabilityMissing {
            backend: S::BACKEND,
            capability: "field scalars (Gaussian elimination)",
        });
    }
    let mut ortho: Vec<Arrow<S>> = partial.to_vec();
    for p in &ortho {
        if p.dom().len() != 1 || p.cod() != object {
            return Err(QcatError::ObjectMismatch {
                context: "complete_basis",
                expected: format!("preparations of {object}"),
                found: format!("{} -> {}", p.dom(), p.cod()),
            });
        }
    }
    for candidate in delta_preps::<S>(object) {
        let mut residual = candidate;
        for member in &ortho {
            let coeff = scalar_product(member, &residual)?;
            let norm = sqnorm(member)?;
            let inv = norm.inv().ok_or_else(|| {
                QcatError::PreconditionViolated(format!(
                    "member with non-invertible squared norm {norm} obstructs orthogonalization"
                ))
            })?;
            let neg = coeff.mul(&inv).neg().ok_or(QcatError::CapabilityMissing {
                backend: S::BACKEND,
                capability: "has_additive_inverse",
            })?;
            residual = residual.add(&member.scale(&neg))?;
        }
        if !residual.is_zero_arrow() {
            ortho.push(residual);
        }
        if ortho.len() == object.len() {
            break;
        }
    }
    let mut normalized = true;
    let preps = ortho
        .into_iter()
        .map(|p| match crate::unit::normalize(&p) {
            Ok(r) => r.normalized,
            Err(_) => {
                normalized = false;
                p
            }
        })
        .collect();
    Ok(Basis { preps, normalized })
}

/// Recover the two components of a tagged sum object from its `L:`/`R:`
/// label prefixes.
pub fn infer_sum_components(object: &FinObject) -> Option<(FinObject, FinObject)> {
    let mut left = Vec::new();
    let mut right = Vec::new();
    for l in object.labels() {
        if let Some(rest) = l.strip_prefix("L:") {
            if !right.is_empty() {
                return None;
            }
            left.push(rest.to_string());
        } else {
            right.push(l.strip_prefix("R:")?.to_string());
        }
    }
    Some((FinObject::new(left).ok()?, FinObject::new(right).ok()?))
}

/// The distribution unitary
/// `(A (x) B) (+) (A (x) C) -> A (x) (B (+) C)`, characterized by
/// composing the injections into `id_A (x) u` and `id_A (x) v`.
pub fn distributor_x<S: Scalar>(
    a: &FinObject,
    b: &FinObject,
    c: &FinObject,
) -> Arrow<S> {
    let inner: DirectSum<S> = direct_sum(b, c);
    let outer: DirectSum<S> = direct_sum(&tensor_object(a, b), &tensor_object(a, c));
    let ida = Arrow::identity(a);
    copair(
        &tensor_arrows(&ida, &inner.inj_left),
        &tensor_arrows(&ida, &inner.inj_right),
        &outer,
    )
    .expect("objects line up by construction")
}

/// The mirrored distribution unitary
/// `(B (x) A) (+) (C (x) A) -> (B (+) C) (x) A`.
pub fn distributor_y<S: Scalar>(
    a: &FinObject,
    b: &FinObject,
    c: &FinObject,
) -> Arrow<S> {
    let inner: DirectSum<S> = direct_sum(b, c);
    let outer: DirectSum<S> = direct_sum(&tensor_object(b, a), &tensor_object(c, a));
    let ida = Arrow::identity(a);
    copair(
        &tensor_arrows(&inner.inj_left, &ida),
        &tensor_arrows(&inner.inj_right, &ida),
        &outer,
    )
    .expect("objects line up by construction")
}
