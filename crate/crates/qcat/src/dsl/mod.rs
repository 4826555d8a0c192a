//! A small calculator language for categorical terms over one backend.
//!
//! ```text
//! term := sum
//! sum  := comp { "+" comp }
//! comp := fact { (";" | "o") fact }          ; is diagrammatic, o applicative
//! fact := prim { ("(*)" | "(+)") prim }
//! prim := atom { "*" }
//! atom := NAME | id(A) | zero(A,B) | delta(A) | nabla(A) | swap(A,B)
//!       | distx(A,B,C) | lift(scalar,A) | ( term )
//! ```
//!
//! Postfix `*` (adjoint) binds tightest, then `(*)` and `(+)`, then
//! composition (right-associative), then `+`. `f ; g` applies `f` first;
//! `g o f` is the same arrow written applicatively.

mod ast;
mod eval;
mod parser;
mod pretty;

pub use ast::Term;
pub use eval::{eval, infer_types, Workspace};
pub use parser::parse;
pub use pretty::pretty;

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arrow::Arrow;
    use crate::object::FinObject;
    use crate::rng::Rng;
    use crate::scalar::{Rat, Scalar};

    fn ws() -> Workspace<Rat> {
        let mut w = Workspace::new();
        let a = FinObject::from_names(&["a0", "a1"]);
        let b = FinObject::from_names(&["b0", "b1", "b2"]);
        w.insert_object("A", a.clone());
        w.insert_object("B", b.clone());
        let mut rng = Rng::new(77);
        w.insert_arrow("f", Arrow::from_fn(a.clone(), b.clone(), |_, _| Rat::random(&mut rng)));
        w.insert_arrow("g", Arrow::from_fn(b.clone(), a.clone(), |_, _| Rat::random(&mut rng)));
        w.insert_arrow("h", Arrow::from_fn(a.clone(), b.clone(), |_, _| Rat::random(&mut rng)));
        w
    }

    #[test]
    fn parse_shapes() {
        // diagrammatic ; and applicative o denote the same composite
        let t1 = parse("f ; g").unwrap();
        let t2 = parse("g o f").unwrap();
        let w = ws();
        assert!(eval(&t1, &w).unwrap().eq_approx(&eval(&t2, &w).unwrap()));

        let t = parse("(f (*) g)*").unwrap();
        assert_eq!(pretty(&t), "(f (*) g)*");

        let t = parse("f + zero(A,B)").unwrap();
        assert!(eval(&t, &w).unwrap().eq_approx(&eval(&parse("f").unwrap(), &w).unwrap()));
    }

    #[test]
    fn precedence() {
        // postfix star binds tighter than the tensor
        let t = parse("f (*) g*").unwrap();
        assert_eq!(pretty(&t), "f (*) g*");
        // composition binds tighter than +
        let t = parse("f ; g ; f + h ; g ; f").unwrap();
        assert_eq!(pretty(&t), "f ; g ; f + h ; g ; f");
        let w = ws();
        let lhs = eval(&t, &w).unwrap();
        let direct = eval(&parse("(f ; (g ; f)) + (h ; (g ; f))").unwrap(), &w).unwrap();
        assert!(lhs.eq_approx(&direct));
    }

    #[test]
    fn syntax_errors_carry_positions() {
        let err = parse("f ; (g").unwrap_err();
        match err {
            crate::error::QcatError::SyntaxError { .. } => {}
            other => panic!("expected a syntax error, got {other}"),
        }
        assert!(parse("").is_err());
        assert!(parse("f ) g").is_err());
    }

    #[test]
    fn golden_identities() {
        let w = ws();
        let identities = [
            // adjoint reverses composition
            ("(f ; g)*", "g* ; f*"),
            // identities are neutral
            ("id(A) ; f", "f"),
            // adjoint distributes over the tensor
            ("(f (*) g)*", "f* (*) g*"),
            // adjoint distributes over the sum of arrows
            ("(f (+) g)*", "f* (+) g*"),
            // diagonal then codiagonal doubles
            ("delta(A) ; nabla(A)", "id(A) + id(A)"),
            // tensor distributes over addition
            ("g (*) (f + h)", "(g (*) f) + (g (*) h)"),
            // composition distributes over addition
            ("(f + h) ; g", "(f ; g) + (h ; g)"),
            // zero is neutral
            ("f + zero(A,B)", "f"),
            // the scalar action is natural
            ("lift(2,A) ; f", "f ; lift(2,B)"),
            // zero arrows absorb
            ("zero(B,A) o f", "zero(A,A)"),
            // the mixed product law
            ("(f (*) g) ; (g (*) f)", "(f ; g) (*) (g ; f)"),
        ];
        for (lhs, rhs) in identities {
            let l = eval(&parse(lhs).unwrap(), &w).unwrap();
            let r = eval(&parse(rhs).unwrap(), &w).unwrap();
            assert!(l.eq_approx(&r), "identity failed: {lhs} = {rhs}");
        }
    }

    #[test]
    fn typing_soundness() {
        // a term that type-checks evaluates without object mismatches
        let w = ws();
        for text in ["f ; g ; f", "(f + h)* ; f", "swap(A,B) ; swap(B,A)", "distx(A,A,B)"] {
            let t = parse(text).unwrap();
            let types = infer_types(&t, &w).unwrap();
            let arrow = eval(&t, &w).unwrap();
            assert_eq!(arrow.dom(), &types.0);
            assert_eq!(arrow.cod(), &types.1);
        }
        // and an ill-typed term is rejected by inference
        assert!(infer_types(&parse("f ; f").unwrap(), &ws()).is_err());
        assert!(eval(&parse("f ; f").unwrap(), &ws()).is_err());
    }

    #[test]
    fn workspace_text_round_trip() {
        let mut w: Workspace<Rat> = Workspace::new();
        w.load_text(
            "object A : x, y\narrow f : x,y -> x,y @ rat\n1 2\n3 4\n\nobject B : z\n",
        )
        .unwrap();
        assert_eq!(w.object("A").unwrap().len(), 2);
        assert_eq!(w.object("B").unwrap().len(), 1);
        assert_eq!(w.arrow("f").unwrap().entry(1, 0), &Rat::int(3));
        assert!(w.object("C").is_err());
        assert!(w.arrow("g").is_err());
    }

    #[test]
    fn roundtrip_random_terms() {
        let mut rng = Rng::new(2024);
        for _ in 0..1000 {
            let t = ast::random_term(&mut rng, 0);
            let text = pretty(&t);
            let back = parse(&text).unwrap_or_else(|e| panic!("reparse `{text}`: {e}"));
            assert_eq!(back, t, "round trip failed on `{text}`");
        }
    }
}
