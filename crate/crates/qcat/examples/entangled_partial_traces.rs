//! An entangled preparation induces an operation on each component: the
//! double contraction. For the Bell-type preparation both induced
//! operations are exactly half the identity, and in general their nonzero
//! spectra agree.
//!
//! Run with `cargo run --example entangled_partial_traces`.

use qcat::charpoly::charpoly;
use qcat::format::print_arrow;
use qcat::mixed::{
    contract_left, is_product_state, partial_trace_left, partial_trace_right, spectra_match,
};
use qcat::rng::Rng;
use qcat::scalar::{Scalar, Sqrt2Ext};
use qcat::tensor::tensor_object;
use qcat::unit::{point_prep, unit_object};
use qcat::{Arrow, FinObject};

fn main() {
    let a = FinObject::from_names(&["a0", "a1"]);
    let b = FinObject::from_names(&["b0", "b1"]);
    let pair = tensor_object(&a, &b);

    // amplitudes 1/sqrt2 on the two matching labels
    let h = Sqrt2Ext::inv_sqrt2();
    let bell = Arrow::new(
        unit_object(),
        pair.clone(),
        vec![h.clone(), Sqrt2Ext::zero(), Sqrt2Ext::zero(), h],
    )
    .unwrap();
    print!("{}", print_arrow("bell", &bell));
    assert!(!is_product_state(&a, &b, &bell).unwrap());
    println!("bell is entangled: the coefficient matrix has rank 2");

    // projecting the left component onto a delta steers the right one
    let steered = contract_left(&a, &b, &bell, &point_prep(&a, "a0").unwrap()).unwrap();
    print!("{}", print_arrow("steered_right", &steered));

    // both induced operations are (1/2) id, exactly
    let da = partial_trace_left(&a, &b, &bell).unwrap();
    let db = partial_trace_right(&a, &b, &bell).unwrap();
    print!("{}", print_arrow("induced_left", &da.matrix));
    let half = Sqrt2Ext::from_rat(qcat::scalar::Rat::new(1, 2));
    assert!(da.matrix.eq_approx(&qcat::unit::lift_scalar(&half, &a)));
    assert!(db.matrix.eq_approx(&qcat::unit::lift_scalar(&half, &b)));
    println!(
        "charpoly of the induced operation: {}",
        charpoly(&da.matrix).unwrap()
    );

    // random states on mismatched component sizes still share the nonzero
    // spectrum, seen through the padded polynomial identity
    let c3 = FinObject::from_names(&["c0", "c1", "c2"]);
    let mut rng = Rng::new(7);
    for _ in 0..5 {
        let state = Arrow::from_fn(unit_object(), tensor_object(&a, &c3), |_, _| {
            Sqrt2Ext::random(&mut rng)
        });
        assert!(spectra_match(&a, &c3, &state).unwrap());
    }
    println!("nonzero spectra of both partial traces agree on random 2x3 states");
}
