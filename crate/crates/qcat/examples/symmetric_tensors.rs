//! The tensor square of an object splits orthogonally into a symmetric
//! part (multiset labels, dimension n(n+1)/2) and an antisymmetric part
//! (strict pairs, dimension n(n-1)/2). Needs a backend with 1/sqrt2.
//!
//! Run with `cargo run --example symmetric_tensors`.

use qcat::format::print_arrow;
use qcat::scalar::{Rat, Sqrt2Ext};
use qcat::tensor::{a_tensor, kappa, s_tensor, tensor_object};
use qcat::unit::delta_preps;
use qcat::{Arrow, FinObject};

fn main() {
    let a = FinObject::from_names(&["u", "d"]);
    let sym = s_tensor::<Sqrt2Ext>(&a).unwrap();
    let asym = a_tensor::<Sqrt2Ext>(&a).unwrap();
    println!("symmetric object: {} (dim {})", sym.object, sym.object.len());
    println!("antisymmetric object: {} (dim {})", asym.object, asym.object.len());
    print!("{}", print_arrow("sym_projection", &sym.projection));
    print!("{}", print_arrow("asym_projection", &asym.projection));

    // the projections are left-unitary and jointly complete
    let p = &sym.projection;
    let q = &asym.projection;
    assert!(Arrow::compose(p, &p.adjoint()).unwrap().eq_approx(&Arrow::identity(&sym.object)));
    let pp = Arrow::compose(&p.adjoint(), p).unwrap();
    let qq = Arrow::compose(&q.adjoint(), q).unwrap();
    assert!(pp.add(&qq).unwrap().eq_approx(&Arrow::identity(&tensor_object(&a, &a))));
    println!("p*p + q*q = id on the pair object");

    // generator values: symmetric under exchange, antisymmetric with sign
    let deltas = delta_preps::<Sqrt2Ext>(&a);
    let s01 = sym.sigma.eval(&deltas[0], &deltas[1]).unwrap();
    let s10 = sym.sigma.eval(&deltas[1], &deltas[0]).unwrap();
    assert!(s01.eq_approx(&s10));
    let t01 = asym.sigma.eval(&deltas[0], &deltas[1]).unwrap();
    let t10 = asym.sigma.eval(&deltas[1], &deltas[0]).unwrap();
    assert!(t01.eq_approx(&t10.scale(&Sqrt2Ext::from_rat(Rat::int(-1)))));
    print!("{}", print_arrow("sigma(u,d)", &s01));
    print!("{}", print_arrow("tau(u,d)", &t01));

    // every generator of kappa is recovered from its two parts
    for da in &deltas {
        for db in &deltas {
            let k = kappa(da, db).unwrap();
            let back = Arrow::compose(&p.adjoint(), &sym.sigma.eval(da, db).unwrap())
                .unwrap()
                .add(&Arrow::compose(&q.adjoint(), &asym.sigma.eval(da, db).unwrap()).unwrap())
                .unwrap();
            assert!(back.eq_approx(&k));
        }
    }
    println!("kappa = p*.sigma + q*.tau on every generator pair");
}
