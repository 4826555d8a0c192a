//! The term calculator: parse, type-check, evaluate, and pretty-print
//! categorical expressions against a workspace of named arrows.
//!
//! Run with `cargo run --example dsl_calculator`.

use qcat::dsl::{eval, infer_types, parse, pretty, Workspace};
use qcat::format::print_arrow;
use qcat::rng::Rng;
use qcat::scalar::{Rat, Scalar};
use qcat::{Arrow, FinObject};

fn main() {
    let mut ws: Workspace<Rat> = Workspace::new();
    let a = FinObject::from_names(&["a0", "a1"]);
    let b = FinObject::from_names(&["b0", "b1"]);
    ws.insert_object("A", a.clone());
    ws.insert_object("B", b.clone());
    let mut rng = Rng::new(3);
    ws.insert_arrow("f", Arrow::from_fn(a.clone(), b.clone(), |_, _| Rat::random(&mut rng)));
    ws.insert_arrow("g", Arrow::from_fn(b.clone(), a.clone(), |_, _| Rat::random(&mut rng)));

    for text in [
        "f ; g",                     // diagrammatic: f first
        "g o f",                     // applicative: the same arrow
        "(f (*) g)*",                // adjoint of a Kronecker product
        "f + zero(A,B)",             // additive unit
        "delta(A) ; nabla(A)",       // doubles the identity
        "lift(1/2,A) ; f",           // the scalar action
        "swap(A,B) ; swap(B,A)",     // back and forth across the tensor
        "distx(A,A,B)",              // distribution arrow
    ] {
        let term = parse(text).unwrap();
        let (dom, cod) = infer_types(&term, &ws).unwrap();
        let arrow = eval(&term, &ws).unwrap();
        println!("term:   {text}");
        println!("pretty: {}", pretty(&term));
        println!("type:   {dom} -> {cod}");
        print!("{}", print_arrow("value", &arrow));
        println!();
    }

    // ill-typed terms are rejected before evaluation
    let bad = parse("f ; f").unwrap();
    println!("f ; f  =>  {}", infer_types(&bad, &ws).unwrap_err());
}
