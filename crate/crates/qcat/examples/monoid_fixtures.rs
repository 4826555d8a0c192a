//! One-object categories from commutative monoids: the minimal worked
//! examples that separate the layers of structure. Every fixture has
//! adjoints; only some have zero arrows; none but the singleton has an
//! orthogonal coproduct.
//!
//! Run with `cargo run --example monoid_fixtures`.

use qcat::laws::{monoid_fixture_laws, MonoidFixture};

fn main() {
    for fixture in [
        MonoidFixture::z4(),
        MonoidFixture::capped_counter(),
        MonoidFixture::singleton(),
    ] {
        let r = monoid_fixture_laws(&fixture);
        println!("fixture `{}` (size {}):", fixture.name, fixture.size());
        println!("  adjoint axioms hold: {}", r.adjoint_axioms);
        println!("  unitary elements (self-inverse): {:?}", r.unitary_elements);
        println!("  zero-arrow family (absorbing element): {}", r.has_zero_family);
        println!("  orthogonal coproduct pair: {:?}", r.u_coproduct);
        println!("  trivial category: {}", r.trivial);
        println!();
    }
}
