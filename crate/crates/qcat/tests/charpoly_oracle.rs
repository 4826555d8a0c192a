//! Cross-check the crate's division-free characteristic polynomial against
//! an independent trace-recursion computation. The oracle lives here, in
//! test code only, and shares nothing with the implementation path.

use qcat::arrow::Arrow;
use qcat::charpoly::{charpoly, Poly};
use qcat::object::FinObject;
use qcat::rng::Rng;
use qcat::scalar::{F5, Gauss, Rat, Scalar};

fn mat_mul<S: Scalar>(a: &[Vec<S>], b: &[Vec<S>]) -> Vec<Vec<S>> {
    let n = a.len();
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    let mut acc = S::zero();
                    for k in 0..n {
                        acc = acc.add(&a[i][k].mul(&b[k][j]));
                    }
                    acc
                })
                .collect()
        })
        .collect()
}

fn trace<S: Scalar>(m: &[Vec<S>]) -> S {
    let mut acc = S::zero();
    for (i, row) in m.iter().enumerate() {
        acc = acc.add(&row[i]);
    }
    acc
}

/// Trace recursion: c_n = 1; M_1 = M; and for k = 1..n,
/// c_{n-k} = -tr(M_k)/k with M_{k+1} = M (M_k + c_{n-k} I).
/// Needs 1..n invertible, which holds on the backends exercised here at
/// these sizes.
fn charpoly_oracle<S: Scalar>(m: &Arrow<S>) -> Poly<S> {
    let n = m.dom().len();
    let mat: Vec<Vec<S>> = (0..n)
        .map(|i| (0..n).map(|j| m.entry(j, i).clone()).collect())
        .collect();
    let mut coeffs = vec![S::zero(); n + 1];
    coeffs[n] = S::one();
    let mut mk = mat.clone();
    for k in 1..=n {
        let k_scalar = S::from_integer(k as i64);
        let c = trace(&mk)
            .mul(&k_scalar.inv().expect("k invertible"))
            .neg()
            .expect("field backend");
        coeffs[n - k] = c.clone();
        if k < n {
            let mut shifted = mk.clone();
            for (i, row) in shifted.iter_mut().enumerate() {
                row[i] = row[i].add(&c);
            }
            mk = mat_mul(&mat, &shifted);
        }
    }
    Poly { coeffs }
}

fn agree_on_random<S: Scalar>(seed: u64, max_size: usize, trials: u32) {
    let mut rng = Rng::new(seed);
    for t in 0..trials {
        let n = 1 + (t as usize % max_size);
        let o = FinObject::new((0..n).map(|k| format!("x{k}")).collect()).unwrap();
        let m = Arrow::from_fn(o.clone(), o, |_, _| S::random(&mut rng));
        let direct = charpoly(&m).unwrap();
        let oracle = charpoly_oracle(&m);
        assert!(
            direct.eq_approx(&oracle),
            "routes disagree on {} at size {n}: {direct} vs {oracle}",
            S::BACKEND
        );
    }
}

#[test]
fn division_free_route_matches_trace_recursion() {
    agree_on_random::<Rat>(1, 4, 60);
    agree_on_random::<Gauss>(2, 4, 60);
    // residues stay clear of the characteristic at these sizes
    agree_on_random::<F5>(3, 4, 200);
}

#[test]
fn padded_identity_against_oracle_polynomials() {
    // the two induced operations of an entangled preparation have the same
    // nonzero spectrum: verified here with the oracle polynomials alone
    use qcat::mixed::{partial_trace_left, partial_trace_right};
    use qcat::tensor::tensor_object;
    use qcat::unit::unit_object;
    let mut rng = Rng::new(4);
    for _ in 0..40 {
        let a = FinObject::from_names(&["a0", "a1"]);
        let b = FinObject::from_names(&["b0", "b1", "b2"]);
        let c = Arrow::from_fn(unit_object(), tensor_object(&a, &b), |_, _| {
            Gauss::random(&mut rng)
        });
        let left = charpoly_oracle(&partial_trace_left(&a, &b, &c).unwrap().matrix);
        let right = charpoly_oracle(&partial_trace_right(&a, &b, &c).unwrap().matrix);
        assert!(left.shift(3).eq_approx(&right.shift(2)));
    }
}
