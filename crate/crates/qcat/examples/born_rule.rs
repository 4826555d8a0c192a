//! Direct sums carry right-unitary orthogonal injections, and every
//! preparation of a sum splits into two orthogonal legs whose squared
//! norms add up to the whole.
//!
//! Run with `cargo run --example born_rule`.

use qcat::biproduct::{born_decompose, direct_sum, hom_add_via_biproduct};
use qcat::format::print_arrow;
use qcat::rng::Rng;
use qcat::scalar::{Gauss, Rat, Scalar};
use qcat::unit::unit_object;
use qcat::{Arrow, FinObject};

fn main() {
    let a = FinObject::from_names(&["p"]);
    let b = FinObject::from_names(&["q"]);
    let ds = direct_sum::<Gauss>(&a, &b);
    println!("sum object: {}", ds.object);

    // the completeness identity u u* + v v* = id
    let uu = Arrow::compose(&ds.inj_left, &ds.inj_left.adjoint()).unwrap();
    let vv = Arrow::compose(&ds.inj_right, &ds.inj_right.adjoint()).unwrap();
    assert!(uu.add(&vv).unwrap().eq_approx(&Arrow::identity(&ds.object)));
    println!("u.u* + v.v* = id");

    // the classic example: amplitudes 1 and i split into legs of norm 1
    let x = Arrow::new(
        unit_object(),
        ds.object.clone(),
        vec![Gauss::one(), Gauss::i()],
    )
    .unwrap();
    let d = born_decompose(&x, &ds).unwrap();
    print!("{}", print_arrow("x", &x));
    print!("{}", print_arrow("left_leg", &d.left_part));
    print!("{}", print_arrow("right_leg", &d.right_part));
    println!(
        "sqnorms: left={} right={} total={}",
        d.sqnorm_left, d.sqnorm_right, d.sqnorm_total
    );
    assert_eq!(
        d.sqnorm_left.add(&d.sqnorm_right),
        d.sqnorm_total,
        "norms add exactly"
    );

    // the sum route to addition agrees with entrywise addition
    let mut rng = Rng::new(6);
    let c = FinObject::from_names(&["c0", "c1", "c2"]);
    let f = Arrow::from_fn(c.clone(), a.clone(), |_, _| Rat::random(&mut rng));
    let g = Arrow::from_fn(c.clone(), a.clone(), |_, _| Rat::random(&mut rng));
    let via_sum = hom_add_via_biproduct(&f, &g).unwrap();
    assert!(via_sum.eq_approx(&f.add(&g).unwrap()));
    println!("codiagonal . (f (+) g) . diagonal = f + g, entry for entry");
}
