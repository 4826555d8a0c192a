//! Tour of the scalar backends: canonical literals, capabilities, and the
//! involution on each carrier.
//!
//! Run with `cargo run --example backends_and_scalars`.

use qcat::scalar::{Bool, Cx64, F2, F5, Gauss, Rat, Scalar, Sqrt2Ext};

fn describe<S: Scalar>(sample: S) {
    let caps = S::caps();
    println!(
        "{:<8} sample={:<12} star(sample)={:<12} field={} minus-one={} sqrt2={} exact={}",
        S::BACKEND,
        sample.to_string(),
        sample.star().to_string(),
        caps.is_field(),
        caps.has_minus_one,
        caps.has_sqrt2,
        caps.is_exact,
    );
}

fn main() {
    describe(Bool(true));
    describe(Rat::new(-3, 4));
    describe(Gauss::parse_literal("1/2-3/4i").unwrap());
    describe(F2::new(1));
    describe(F5::new(3));
    describe(Sqrt2Ext::parse_literal("1+1/2~2").unwrap());
    describe(Cx64::new(0.25, -1.5));

    // exact arithmetic on the quadratic extension: (1/sqrt2)^2 = 1/2
    let h = Sqrt2Ext::inv_sqrt2();
    assert_eq!(h.mul(&h), Sqrt2Ext::parse_literal("1/2").unwrap());
    println!("\n(0+1/2~2)^2 = {}", h.mul(&h));

    // the sign scalar where it exists: squares to one, cancels the unit
    for (backend, minus) in [
        ("rat", Rat::minus_one().map(|m| m.to_string())),
        ("f5", F5::minus_one().map(|m| m.to_string())),
        ("f2", F2::minus_one().map(|m| m.to_string())),
        ("bool", Bool::minus_one().map(|m| m.to_string())),
    ] {
        match minus {
            Some(m) => println!("{backend}: sign scalar {m}"),
            None => println!("{backend}: no sign scalar (characteristic 2 or lattice)"),
        }
    }

    // normalization data: a scalar s with s* . s = 2 exists over the
    // gaussians (1+1i) and over the sqrt2 extension (0+1~2), but not over
    // the plain rationals
    println!("\nsqrt-norm of 2:");
    println!("  gauss  -> {:?}", Gauss::from_integer(2).sqrt_norm().map(|s| s.to_string()));
    println!("  qsqrt2 -> {:?}", Sqrt2Ext::from_integer(2).sqrt_norm().map(|s| s.to_string()));
    println!("  rat    -> {:?}", Rat::from_integer(2).sqrt_norm().map(|s| s.to_string()));
}
