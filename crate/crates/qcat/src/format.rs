//! The arrow text format.
//!
//! One arrow per block:
//!
//! ```text
//! arrow <name> : <dom labels comma-sep> -> <cod labels comma-sep> @ <backend>
//! <row of |cod| scalar literals>     (one line per dom label, in order)
//! ```
//!
//! Labels may nest brackets (pair labels like `(a,b)`), so the comma split
//! is bracket-aware. Printing is canonical and `parse(print(f)) = f`.

use crate::arrow::Arrow;
use crate::error::{QcatError, Result};
use crate::object::{split_labels, FinObject};
use crate::scalar::Scalar;

#[derive(Clone, Debug)]
pub struct NamedArrow<S: Scalar> {
    pub name: String,
    pub arrow: Arrow<S>,
}

pub fn print_arrow<S: Scalar>(name: &str, arrow: &Arrow<S>) -> String {
    let mut out = format!(
        "arrow {} : {} -> {} @ {}\n",
        name,
        arrow.dom().labels().join(","),
        arrow.cod().labels().join(","),
        S::BACKEND
    );
    for i in 0..arrow.dom().len() {
        let row: Vec<String> = (0..arrow.cod().len())
            .map(|j| arrow.entry(i, j).to_string())
            .collect();
        out.push_str(&row.join(" "));
        out.push('\n');
    }
    out
}

/// Backend id named in an arrow block header, without committing to a
/// scalar type yet.
pub fn peek_backend(text: &str) -> Result<String> {
    let header = text
        .lines()
        .find(|l| l.trim().starts_with("arrow "))
        .ok_or_else(|| QcatError::BadArrowFile("no arrow header line".into()))?;
    let (_, backend) = header
        .rsplit_once('@')
        .ok_or_else(|| QcatError::BadArrowFile("header lacks `@ <backend>`".into()))?;
    Ok(backend.trim().to_string())
}

/// Parse the first arrow block in the text.
pub fn parse_arrow<S: Scalar>(text: &str) -> Result<NamedArrow<S>> {
    let mut arrows = parse_arrows::<S>(text)?;
    if arrows.is_empty() {
        return Err(QcatError::BadArrowFile("no arrow block found".into()));
    }
    Ok(arrows.remove(0))
}

/// Parse every arrow block in the text.
pub fn parse_arrows<S: Scalar>(text: &str) -> Result<Vec<NamedArrow<S>>> {
    let mut out = Vec::new();
    let mut lines = text.lines().peekable();
    while let Some(line) = lines.next() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let Some(rest) = line.strip_prefix("arrow ") else {
            return Err(QcatError::BadArrowFile(format!(
                "expected `arrow` header, found `{line}`"
            )));
        };
        let (name, rest) = rest
            .split_once(':')
            .ok_or_else(|| QcatError::BadArrowFile("header lacks `:`".into()))?;
        let (objects, backend) = rest
            .rsplit_once('@')
            .ok_or_else(|| QcatError::BadArrowFile("header lacks `@ <backend>`".into()))?;
        if backend.trim() != S::BACKEND {
            return Err(QcatError::BadArrowFile(format!(
                "backend mismatch: file says `{}`, expected `{}`",
                backend.trim(),
                S::BACKEND
            )));
        }
        let (dom_text, cod_text) = objects
            .split_once("->")
            .ok_or_else(|| QcatError::BadArrowFile("header lacks `->`".into()))?;
        let dom = FinObject::new(split_labels(dom_text))?;
        let cod = FinObject::new(split_labels(cod_text))?;
        let mut entries = Vec::with_capacity(dom.len() * cod.len());
        for row in 0..dom.len() {
            let row_line = lines.next().ok_or_else(|| {
                QcatError::BadArrowFile(format!("missing row {row} of `{}`", name.trim()))
            })?;
            let cells: Vec<&str> = row_line.split_whitespace().collect();
            if cells.len() != cod.len() {
                return Err(QcatError::BadArrowFile(format!(
                    "row {row} of `{}` has {} entries, expected {}",
                    name.trim(),
                    cells.len(),
                    cod.len()
                )));
            }
            for cell in cells {
                entries.push(S::parse_literal(cell)?);
            }
        }
        out.push(NamedArrow {
            name: name.trim().to_string(),
            arrow: Arrow::new(dom, cod, entries)?,
        });
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rng::Rng;
    use crate::scalar::{Cx64, Gauss, Rat, Sqrt2Ext};
    use crate::tensor::tensor_object;

    #[test]
    fn round_trip_value_level() {
        let mut rng = Rng::new(40);
        let a = FinObject::from_names(&["a", "b"]);
        let t = tensor_object(&a, &a);
        let f: Arrow<Gauss> = Arrow::from_fn(a.clone(), t, |_, _| Gauss::random(&mut rng));
        let text = print_arrow("f", &f);
        let back = parse_arrow::<Gauss>(&text).unwrap();
        assert_eq!(back.name, "f");
        assert!(back.arrow.eq_approx(&f));
        assert_eq!(back.arrow, f);
    }

    #[test]
    fn round_trip_bit_exact() {
        let mut rng = Rng::new(41);
        let a = FinObject::from_names(&["x", "y", "z"]);
        let f: Arrow<Sqrt2Ext> = Arrow::from_fn(a.clone(), a.clone(), |_, _| Sqrt2Ext::random(&mut rng));
        let text = print_arrow("g", &f);
        let reprinted = print_arrow("g", &parse_arrow::<Sqrt2Ext>(&text).unwrap().arrow);
        assert_eq!(text, reprinted);
    }

    #[test]
    fn complex_doubles_round_trip() {
        let mut rng = Rng::new(42);
        let a = FinObject::from_names(&["p", "q"]);
        let f: Arrow<Cx64> = Arrow::from_fn(a.clone(), a.clone(), |_, _| Cx64::random(&mut rng));
        let text = print_arrow("h", &f);
        let back = parse_arrow::<Cx64>(&text).unwrap().arrow;
        // f64 display round-trips exactly
        assert_eq!(back, f);
    }

    #[test]
    fn backend_mismatch_is_reported() {
        let a = FinObject::from_names(&["a"]);
        let f: Arrow<Rat> = Arrow::identity(&a);
        let text = print_arrow("f", &f);
        assert_eq!(peek_backend(&text).unwrap(), "rat");
        assert!(parse_arrow::<Gauss>(&text).is_err());
    }

    #[test]
    fn multiple_blocks_and_comments() {
        let text = "# two arrows\narrow one : a -> a @ rat\n1\n\narrow two : a -> a,b @ rat\n1/2 -3\n";
        let arrows = parse_arrows::<Rat>(text).unwrap();
        assert_eq!(arrows.len(), 2);
        assert_eq!(arrows[1].arrow.cod().len(), 2);
    }
}
