//! Reproducible random instance generation: one seed, one arrow.

use crate::arrow::Arrow;
use crate::object::FinObject;
use crate::rng::Rng;
use crate::scalar::Scalar;

/// A reproducible random matrix with the backend's entry law: fair bits
/// for the Boolean backend, uniform residues for the prime fields, small
/// fractions for the exact fields, standard normal components for complex
/// doubles.
pub fn generate_arrow<S: Scalar>(dom: &FinObject, cod: &FinObject, seed: u64) -> Arrow<S> {
    let mut rng = Rng::new(seed);
    Arrow::from_fn(dom.clone(), cod.clone(), |_, _| S::random(&mut rng))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{Bool, Rat};

    #[test]
    fn deterministic_per_seed() {
        let a = FinObject::from_names(&["a", "b"]);
        let f: Arrow<Rat> = generate_arrow(&a, &a, 7);
        let g: Arrow<Rat> = generate_arrow(&a, &a, 7);
        assert_eq!(f, g);
        let h: Arrow<Rat> = generate_arrow(&a, &a, 8);
        assert_ne!(f, h);
    }

    #[test]
    fn boolean_seed7_matches_golden() {
        let a = FinObject::from_names(&["a", "b"]);
        let f: Arrow<Bool> = generate_arrow(&a, &a, 7);
        let text = crate::format::print_arrow("g", &f);
        let golden = include_str!("../../tests/golden/bool_2x2_seed7.arrow");
        assert_eq!(text, golden);
    }
}
