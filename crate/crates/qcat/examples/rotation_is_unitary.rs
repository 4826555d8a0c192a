//! Arrows are matrices indexed by labels; the adjoint is the involuted
//! transpose. The 2x2 rotation with entries 1/sqrt2 is exactly unitary
//! over the sqrt2 extension, while doubling is an isomorphism that is not.
//!
//! Run with `cargo run --example rotation_is_unitary`.

use qcat::format::print_arrow;
use qcat::scalar::{Rat, Scalar, Sqrt2Ext};
use qcat::unit::scalar_arrow;
use qcat::{Arrow, FinObject};

fn main() {
    let a = FinObject::from_names(&["a", "b"]);
    let h = Sqrt2Ext::inv_sqrt2();
    let m = h.neg().unwrap();
    let u = Arrow::new(a.clone(), a.clone(), vec![h.clone(), h.clone(), m, h]).unwrap();
    print!("{}", print_arrow("u", &u));
    print!("{}", print_arrow("u_adjoint", &u.adjoint()));

    let flags = u.unitarity_flags();
    println!("flags: {flags:?}");
    assert!(flags.unitary && !flags.self_adjoint);

    let id = Arrow::identity(&a);
    assert!(Arrow::compose(&u, &u.adjoint()).unwrap().eq_approx(&id));
    assert!(Arrow::compose(&u.adjoint(), &u).unwrap().eq_approx(&id));
    println!("u . u* = u* . u = id, exactly");

    // multiplication by 2 over the rationals: invertible but not unitary
    let two = scalar_arrow(Rat::from_integer(2));
    let f = two.unitarity_flags();
    assert!(f.self_adjoint && !f.unitary);
    println!("[2] over rat: self-adjoint, invertible, not unitary: {f:?}");

    // functional arrows: injectivity and bijectivity decide the flags
    let b = FinObject::from_names(&["x", "y", "z"]);
    let inj: Arrow<Rat> = Arrow::functional(&a, &b, &[0, 2]).unwrap();
    println!("injection flags: {:?}", inj.unitarity_flags());
    assert!(inj.unitarity_flags().right_unitary);
    assert!(!inj.unitarity_flags().left_unitary);
}
