//! Canonical printing with minimal parentheses. `parse(pretty(t))`
//! reproduces `t` for every tree, including shapes the parser itself
//! would not build (right-nested sums get their parentheses back).

use super::ast::Term;

// precedence levels: + is 1, composition 2, (*) and (+) 3, postfix * 4
fn level(t: &Term) -> u8 {
    match t {
        Term::Add(..) => 1,
        Term::Compose { .. } => 2,
        Term::Tensor(..) | Term::Oplus(..) => 3,
        Term::Adjoint(..) => 4,
        _ => 5,
    }
}

fn print_at(t: &Term, min: u8, out: &mut String) {
    let wrap = level(t) < min;
    if wrap {
        out.push('(');
    }
    match t {
        Term::Name(n) => out.push_str(n),
        Term::Id(a) => {
            out.push_str("id(");
            out.push_str(a);
            out.push(')');
        }
        Term::Zero(a, b) => {
            out.push_str("zero(");
            out.push_str(a);
            out.push(',');
            out.push_str(b);
            out.push(')');
        }
        Term::Delta(a) => {
            out.push_str("delta(");
            out.push_str(a);
            out.push(')');
        }
        Term::Nabla(a) => {
            out.push_str("nabla(");
            out.push_str(a);
            out.push(')');
        }
        Term::Swap(a, b) => {
            out.push_str("swap(");
            out.push_str(a);
            out.push(',');
            out.push_str(b);
            out.push(')');
        }
        Term::DistX(a, b, c) => {
            out.push_str("distx(");
            out.push_str(a);
            out.push(',');
            out.push_str(b);
            out.push(',');
            out.push_str(c);
            out.push(')');
        }
        Term::Lift(lit, a) => {
            out.push_str("lift(");
            out.push_str(lit);
            out.push(',');
            out.push_str(a);
            out.push(')');
        }
        Term::Adjoint(inner) => {
            print_at(inner, 4, out);
            out.push('*');
        }
        Term::Tensor(l, r) => {
            print_at(l, 3, out);
            out.push_str(" (*) ");
            print_at(r, 4, out);
        }
        Term::Oplus(l, r) => {
            print_at(l, 3, out);
            out.push_str(" (+) ");
            print_at(r, 4, out);
        }
        Term::Compose { first, then } => {
            print_at(first, 3, out);
            out.push_str(" ; ");
            print_at(then, 2, out);
        }
        Term::Add(l, r) => {
            print_at(l, 1, out);
            out.push_str(" + ");
            print_at(r, 2, out);
        }
    }
    if wrap {
        out.push(')');
    }
}

pub fn pretty(t: &Term) -> String {
    let mut out = String::new();
    print_at(t, 0, &mut out);
    out
}
