//! Tensor products are defined by what they do: every bilinear assignment
//! of preparations factors uniquely through the canonical one. The swap
//! and the factorization mediator fall out of that property.
//!
//! Run with `cargo run --example tensor_universal_property`.

use qcat::format::print_arrow;
use qcat::rng::Rng;
use qcat::scalar::{F5, Scalar};
use qcat::tensor::{kappa, swap_unitary, tensor_object, BiArrow};
use qcat::unit::{delta_preps, scalar_product, unit_object};
use qcat::{Arrow, FinObject};

fn main() {
    let a = FinObject::from_names(&["a0", "a1"]);
    let b = FinObject::from_names(&["b0", "b1"]);
    let pair = tensor_object(&a, &b);
    println!("pair object: {pair}");

    // the canonical bi-arrow on two random preparations
    let mut rng = Rng::new(5);
    let p = Arrow::from_fn(unit_object(), a.clone(), |_, _| F5::random(&mut rng));
    let q = Arrow::from_fn(unit_object(), b.clone(), |_, _| F5::random(&mut rng));
    let k = kappa(&p, &q).unwrap();
    print!("{}", print_arrow("kappa(p,q)", &k));

    // its inner products multiply componentwise
    let p2 = Arrow::from_fn(unit_object(), a.clone(), |_, _| F5::random(&mut rng));
    let q2 = Arrow::from_fn(unit_object(), b.clone(), |_, _| F5::random(&mut rng));
    let lhs = scalar_product(&k, &kappa(&p2, &q2).unwrap()).unwrap();
    let rhs = scalar_product(&p, &p2).unwrap().mul(&scalar_product(&q, &q2).unwrap());
    assert_eq!(lhs, rhs);
    println!("<p(x)q | p2(x)q2> = <p|p2>.<q|q2> = {lhs}");

    // a random bilinear table factors through kappa as a unique arrow
    let x = FinObject::from_names(&["x0", "x1", "x2"]);
    let table: Vec<Arrow<F5>> = (0..4)
        .map(|_| Arrow::from_fn(unit_object(), x.clone(), |_, _| F5::random(&mut rng)))
        .collect();
    let alpha = BiArrow::from_table(a.clone(), b.clone(), x.clone(), table).unwrap();
    let mediator = alpha.factorize();
    print!("{}", print_arrow("mediator", &mediator));
    for (i, da) in delta_preps::<F5>(&a).iter().enumerate() {
        for (j, db) in delta_preps::<F5>(&b).iter().enumerate() {
            let via = Arrow::compose(&mediator, &kappa(da, db).unwrap()).unwrap();
            assert!(via.eq_approx(alpha.generator(i, j)));
        }
    }
    println!("mediator . kappa reproduces the table on every generator pair");

    // the swap is the unitary mediating between kappa and its flip
    let sw: Arrow<F5> = swap_unitary(&a, &b);
    assert!(sw.unitarity_flags().unitary);
    let swapped = Arrow::compose(&sw, &k).unwrap();
    assert!(swapped.eq_approx(&kappa(&q, &p).unwrap()));
    println!("swap . kappa(p,q) = kappa(q,p), and the swap is unitary");
}
