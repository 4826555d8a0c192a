//! The unit object, preparations and destructions, scalar products, the
//! global scalar action, and normalization.
//!
//! A preparation is an arrow out of the unit object `I`; a destruction is an
//! arrow into it; an arrow `I -> I` is a scalar. All preparations in the
//! crate share one fixed singleton `I` labelled `*`; any other singleton is
//! unitarily related to it, so nothing is lost.

use crate::arrow::Arrow;
use crate::error::{QcatError, Result};
use crate::object::FinObject;
use crate::scalar::Scalar;

pub const UNIT_LABEL: &str = "*";

/// The canonical one-label object `{*}`.
pub fn unit_object() -> FinObject {
    FinObject::from_names(&[UNIT_LABEL])
}

/// Embed a scalar as a 1x1 arrow on the unit object.
pub fn scalar_arrow<S: Scalar>(s: S) -> Arrow<S> {
    let i = unit_object();
    Arrow::new(i.clone(), i, vec![s]).expect("1x1 table")
}

/// Extract the single entry from a scalar arrow.
pub fn scalar_of<S: Scalar>(f: &Arrow<S>) -> Result<S> {
    if f.dom().len() != 1 || f.cod().len() != 1 {
        return Err(QcatError::ObjectMismatch {
            context: "scalar_of",
            expected: "1x1 arrow".into(),
            found: format!("{} -> {}", f.dom(), f.cod()),
        });
    }
    Ok(f.entry(0, 0).clone())
}

fn require_preparation<S: Scalar>(a: &Arrow<S>, context: &'static str) -> Result<()> {
    if a.dom().len() != 1 {
        return Err(QcatError::ObjectMismatch {
            context,
            expected: "a preparation (domain is the unit object)".into(),
            found: format!("{} -> {}", a.dom(), a.cod()),
        });
    }
    Ok(())
}

/// The delta preparation concentrated on one label. Normalized.
pub fn point_prep<S: Scalar>(object: &FinObject, label: &str) -> Result<Arrow<S>> {
    let target = object.require_index(label)?;
    Ok(Arrow::from_fn(unit_object(), object.clone(), |_, j| {
        if j == target {
            S::one()
        } else {
            S::zero()
        }
    }))
}

/// All delta preparations of an object, in label order.
pub fn delta_preps<S: Scalar>(object: &FinObject) -> Vec<Arrow<S>> {
    object
        .labels()
        .iter()
        .map(|l| point_prep(object, l).expect("label of the same object"))
        .collect()
}

/// `<b | a>` is the scalar `b* . a`.
pub fn scalar_product<S: Scalar>(b: &Arrow<S>, a: &Arrow<S>) -> Result<S> {
    require_preparation(a, "scalar_product")?;
    require_preparation(b, "scalar_product")?;
    if a.cod() != b.cod() {
        return Err(QcatError::ObjectMismatch {
            context: "scalar_product",
            expected: b.cod().to_string(),
            found: a.cod().to_string(),
        });
    }
    scalar_of(&Arrow::compose(&b.adjoint(), a)?)
}

/// The scalar product of a preparation with itself.
pub fn sqnorm<S: Scalar>(a: &Arrow<S>) -> Result<S> {
    scalar_product(a, a)
}

pub fn orthogonal<S: Scalar>(a: &Arrow<S>, b: &Arrow<S>) -> Result<bool> {
    Ok(scalar_product(a, b)?.is_zero())
}

/// The global action `s_A = s . id_A`: the unique arrow with
/// `a . s = s_A . a` for every preparation `a`.
pub fn lift_scalar<S: Scalar>(s: &S, object: &FinObject) -> Arrow<S> {
    Arrow::from_fn(object.clone(), object.clone(), |i, j| {
        if i == j {
            s.clone()
        } else {
            S::zero()
        }
    })
}

/// In the matrix model unit objects are exactly the singletons.
pub fn is_unit_object(object: &FinObject) -> bool {
    object.len() == 1
}

#[derive(Debug, Clone)]
pub struct NormalizationResult<S: Scalar> {
    pub normalized: Arrow<S>,
    pub factor: S,
}

/// Split a preparation into a normalized preparation and a scalar factor,
/// `a = normalized . factor`.
///
/// Partial on exact backends: succeeds exactly when the backend can produce
/// a scalar `s` with `s* . s = sqnorm(a)`. Failure means the decomposition
/// does not exist inside this backend, not that anything is wrong with the
/// preparation. The zero preparation returns factor 0 with the first delta
/// as its (arbitrary, fixed) normalized part.
pub fn normalize<S: Scalar>(a: &Arrow<S>) -> Result<NormalizationResult<S>> {
    require_preparation(a, "normalize")?;
    if a.is_zero_arrow() {
        return Ok(NormalizationResult {
            normalized: point_prep(a.cod(), &a.cod().labels()[0])?,
            factor: S::zero(),
        });
    }
    let n = sqnorm(a)?;
    let factor = n.sqrt_norm().ok_or(QcatError::NotNormalizableInBackend {
        backend: S::BACKEND,
        sqnorm: n.to_string(),
    })?;
    let inv = factor.inv().ok_or(QcatError::NotNormalizableInBackend {
        backend: S::BACKEND,
        sqnorm: n.to_string(),
    })?;
    let normalized = a.scale(&inv);
    Ok(NormalizationResult { normalized, factor })
}

/// Composition `a . s` of a preparation with a scalar.
pub fn prep_scale<S: Scalar>(a: &Arrow<S>, s: &S) -> Arrow<S> {
    a.scale(s)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{Bool, F5, Gauss, Rat, Scalar, Sqrt2Ext};

    fn xy() -> FinObject {
        FinObject::from_names(&["x", "y"])
    }

    #[test]
    fn unit_object_shape() {
        assert_eq!(unit_object().labels(), &["*".to_string()]);
        assert!(is_unit_object(&unit_object()));
        assert!(!is_unit_object(&xy()));
        // identity on I is the scalar 1
        let id: Arrow<Rat> = Arrow::identity(&unit_object());
        assert_eq!(scalar_of(&id).unwrap(), Rat::int(1));
    }

    #[test]
    fn boolean_unit_has_two_scalars() {
        let all = Bool::enumerate_all().unwrap();
        assert_eq!(all.len(), 2);
    }

    #[test]
    fn point_preps_are_orthonormal() {
        let a = xy();
        let px: Arrow<Rat> = point_prep(&a, "x").unwrap();
        let py: Arrow<Rat> = point_prep(&a, "y").unwrap();
        assert_eq!(px.entries(), &[Rat::int(1), Rat::int(0)]);
        assert!(px.unitarity_flags().right_unitary);
        assert_eq!(scalar_product(&px, &px).unwrap(), Rat::int(1));
        assert_eq!(scalar_product(&px, &py).unwrap(), Rat::int(0));
        assert!(point_prep::<Rat>(&a, "zz").is_err());
    }

    #[test]
    fn scalar_product_cases() {
        let a = xy();
        let i = unit_object();
        // a = (1, i), b = (1, 0): <b|a> = 1
        let va = Arrow::new(i.clone(), a.clone(), vec![Gauss::one(), Gauss::i()]).unwrap();
        let vb = Arrow::new(i.clone(), a.clone(), vec![Gauss::one(), Gauss::zero()]).unwrap();
        assert_eq!(scalar_product(&vb, &va).unwrap(), Gauss::one());
        // sqnorm (1, i) = 1 + (-i)(i) = 2
        assert_eq!(sqnorm(&va).unwrap(), Gauss::from_integer(2));
        // adjoint symmetry
        assert_eq!(
            scalar_product(&vb, &va).unwrap(),
            scalar_product(&va, &vb).unwrap().star()
        );
        // zero preparation has sqnorm 0
        let z: Arrow<Gauss> = Arrow::zero(&i, &a);
        assert!(sqnorm(&z).unwrap().is_zero());
    }

    #[test]
    fn lifting_to_the_unit_object_is_the_scalar() {
        for s in [Rat::new(2, 3), Rat::int(0), Rat::int(-7)] {
            assert!(lift_scalar(&s, &unit_object()).eq_approx(&scalar_arrow(s)));
        }
    }

    #[test]
    fn lift_scalar_cases() {
        let a = xy();
        assert!(lift_scalar(&Rat::int(1), &a).eq_approx(&Arrow::identity(&a)));
        assert!(lift_scalar(&Rat::int(0), &a).eq_approx(&Arrow::zero(&a, &a)));
        // (t.s)_A = t_A . s_A on a couple of scalars
        let s = Rat::new(2, 3);
        let t = Rat::new(-5, 7);
        let lhs = lift_scalar(&t.mul(&s), &a);
        let rhs = Arrow::compose(&lift_scalar(&t, &a), &lift_scalar(&s, &a)).unwrap();
        assert!(lhs.eq_approx(&rhs));
        // a . s = s_A . a for deltas
        let p: Arrow<Rat> = point_prep(&a, "y").unwrap();
        assert!(p.scale(&s).eq_approx(&Arrow::compose(&lift_scalar(&s, &a), &p).unwrap()));
    }

    #[test]
    fn normalize_cases() {
        let a = xy();
        let i = unit_object();
        // delta normalizes to itself with factor 1
        let p: Arrow<Rat> = point_prep(&a, "x").unwrap();
        let r = normalize(&p).unwrap();
        assert!(r.normalized.eq_approx(&p));
        assert_eq!(r.factor, Rat::int(1));

        // (1, 1) over the sqrt2 extension: factor sqrt2
        let v = Arrow::new(i.clone(), a.clone(), vec![Sqrt2Ext::one(), Sqrt2Ext::one()]).unwrap();
        let r = normalize(&v).unwrap();
        assert_eq!(r.factor, Sqrt2Ext::sqrt2().unwrap());
        assert_eq!(sqnorm(&r.normalized).unwrap(), Sqrt2Ext::one());
        assert!(r.normalized.scale(&r.factor).eq_approx(&v));

        // (1, 1) over the rationals: no rational root of 2
        let w = Arrow::new(i.clone(), a.clone(), vec![Rat::int(1), Rat::int(1)]).unwrap();
        assert!(matches!(
            normalize(&w),
            Err(QcatError::NotNormalizableInBackend { .. })
        ));

        // zero preparation: factor 0, fixed delta
        let z: Arrow<Rat> = Arrow::zero(&i, &a);
        let r = normalize(&z).unwrap();
        assert!(r.factor.is_zero());
        assert_eq!(sqnorm(&r.normalized).unwrap(), Rat::int(1));

        // (1, 2) over F5 is isotropic and nonzero: not normalizable
        let f = Arrow::new(i.clone(), a.clone(), vec![F5::new(1), F5::new(2)]).unwrap();
        assert!(sqnorm(&f).unwrap().is_zero());
        assert!(normalize(&f).is_err());
    }

    #[test]
    fn rational_two_is_not_normalized() {
        // the backend keeps non-normalized scalars around, so hom-sets do
        // not collapse; doubling squares to four, not one
        let two = Rat::int(2);
        assert!(!two.star().mul(&two).is_one());
        // while 0 and 1 behave as expected
        assert!(Rat::one().star().mul(&Rat::one()).is_one());
        assert!(!Rat::zero().star().mul(&Rat::zero()).is_one());
    }

    #[test]
    fn separation_by_deltas_reads_entries() {
        // two arrows differing in one entry disagree on the delta there
        let a = xy();
        let f = Arrow::new(a.clone(), a.clone(),
            vec![Rat::int(1), Rat::int(2), Rat::int(3), Rat::int(4)]).unwrap();
        let mut entries = f.entries().to_vec();
        entries[2] = Rat::int(9);
        let g = Arrow::new(a.clone(), a.clone(), entries).unwrap();
        let disagree = delta_preps::<Rat>(&a).into_iter().any(|p| {
            !Arrow::compose(&f, &p).unwrap().eq_approx(&Arrow::compose(&g, &p).unwrap())
        });
        assert!(disagree);
    }
}
