//! Normalization is honest about its backend: splitting a preparation into
//! a unit-norm part and a factor needs a scalar whose star-square is the
//! squared norm, and different carriers have different such scalars.
//!
//! Run with `cargo run --example normalize_and_bases`.

use qcat::biproduct::{complete_basis, is_basis};
use qcat::error::QcatError;
use qcat::scalar::{Gauss, Rat, Scalar, Sqrt2Ext};
use qcat::unit::{delta_preps, normalize, sqnorm, unit_object};
use qcat::{Arrow, FinObject};

fn main() {
    let a = FinObject::from_names(&["x", "y"]);

    // the diagonal direction (1, 1) has squared norm 2
    let diag_rat = Arrow::new(unit_object(), a.clone(), vec![Rat::one(), Rat::one()]).unwrap();
    match normalize(&diag_rat) {
        Err(QcatError::NotNormalizableInBackend { backend, sqnorm }) => {
            println!("rat: (1,1) has sqnorm {sqnorm}; no rational square root, so `{backend}` refuses");
        }
        other => panic!("expected a refusal, got {other:?}"),
    }

    // the sqrt2 extension factors it through the scalar sqrt2
    let diag_s = Arrow::new(unit_object(), a.clone(), vec![Sqrt2Ext::one(), Sqrt2Ext::one()]).unwrap();
    let r = normalize(&diag_s).unwrap();
    println!(
        "qsqrt2: (1,1) = normalized . {}, normalized sqnorm = {}",
        r.factor,
        sqnorm(&r.normalized).unwrap()
    );

    // the gaussians use 1+1i, whose conjugate square is also 2
    let diag_g = Arrow::new(unit_object(), a.clone(), vec![Gauss::one(), Gauss::one()]).unwrap();
    let r = normalize(&diag_g).unwrap();
    println!("gauss: (1,1) = normalized . ({})", r.factor);

    // greedy completion: start from the normalized diagonal direction and
    // fill up to a maximal orthogonal family
    let start = r.normalized.clone();
    let basis = complete_basis(&a, &[start]).unwrap();
    assert!(basis.normalized);
    assert!(is_basis(&basis.preps, &a).unwrap());
    println!("gauss: completed to an orthonormal basis of {} preparations", basis.preps.len());

    // over the plain rationals the same start is kept unnormalized, and
    // the flag says so
    let basis = complete_basis(&a, &[diag_rat]).unwrap();
    println!(
        "rat: completion is orthogonal and maximal, normalized = {}",
        basis.normalized
    );

    // deltas are always the easy orthonormal basis
    assert!(is_basis(&delta_preps::<Rat>(&a), &a).unwrap());
    println!("deltas form a basis on every backend");
}
