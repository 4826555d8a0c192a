//! Cloning: a one-label object admits a copying arrow that works on every
//! preparation, while any candidate on a two-label object is defeated, at
//! the latest, by a superposition probe.
//!
//! Run with `cargo run --example no_cloning`.

use qcat::format::print_arrow;
use qcat::mixed::{build_cloner, cloner_witness, verify_cloner, CloneOutcome};
use qcat::rng::Rng;
use qcat::scalar::{Gauss, Scalar};
use qcat::tensor::{kappa, tensor_object};
use qcat::unit::point_prep;
use qcat::{Arrow, FinObject};

fn main() {
    // the unit object clones: the relabelling arrow copies its one label
    let one = FinObject::from_names(&["x"]);
    let cloner = build_cloner::<Gauss>(&one).unwrap();
    print!("{}", print_arrow("cloner", &cloner.arrow));
    assert!(verify_cloner(&one, &cloner.arrow, &cloner.ancilla_prep)
        .unwrap()
        .is_ok());
    // the defining equation at a concrete preparation
    let prep = Arrow::new(qcat::unit::unit_object(), one.clone(), vec![Gauss::i()]).unwrap();
    let leftover = cloner_witness(&cloner, &prep).unwrap();
    let lhs = Arrow::compose(&cloner.arrow, &kappa(&prep, &cloner.ancilla_prep).unwrap()).unwrap();
    let rhs = kappa(&kappa(&prep, &prep).unwrap(), &leftover).unwrap();
    assert!(lhs.eq_approx(&rhs));
    println!("unit object: cloning equation holds exactly, leftover = ancilla scaled by 1/amplitude\n");

    // a two-label object: the classical copier handles the deltas but not
    // their superposition
    let qubit = FinObject::from_names(&["0", "1"]);
    let ancilla = FinObject::from_names(&["w"]);
    let dom = tensor_object(&qubit, &ancilla);
    let cod = tensor_object(&tensor_object(&qubit, &qubit), &ancilla);
    let copy_map: Vec<usize> = (0..2).map(|i| i * 2 + i).collect();
    let copier: Arrow<Gauss> = Arrow::functional(&dom, &cod, &copy_map).unwrap();
    let w = point_prep::<Gauss>(&ancilla, "w").unwrap();
    match verify_cloner(&qubit, &copier, &w).unwrap() {
        CloneOutcome::Ok => unreachable!("a two-label object never clones"),
        CloneOutcome::Counterexample(cw) => {
            print!("{}", print_arrow("probe", &cw.probe));
            print!("{}", print_arrow("copier_output", &cw.lhs));
            print!("{}", print_arrow("required_shape", &cw.rhs));
            println!("the copier entangles the superposition instead of copying it\n");
        }
    }

    // random candidates fare no better
    let mut rng = Rng::new(9);
    let mut defeated = 0;
    for _ in 0..20 {
        let candidate = Arrow::from_fn(dom.clone(), cod.clone(), |_, _| Gauss::random(&mut rng));
        if !verify_cloner(&qubit, &candidate, &w).unwrap().is_ok() {
            defeated += 1;
        }
    }
    assert_eq!(defeated, 20);
    println!("20 random candidates, 20 counterexamples");
}
