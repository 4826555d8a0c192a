//! Evaluation against a workspace of named objects and arrows, with a
//! separate type-inference pass mirroring the evaluation rules.
//!
//! The tensor operator adapts to its operands: two scalars multiply, two
//! preparations combine through the canonical bi-arrow (staying on the
//! unit domain), two destructions dually, and general arrows take the
//! plain Kronecker product.

use super::ast::Term;
use crate::arrow::Arrow;
use crate::biproduct::{codiagonal, diagonal, direct_sum, distributor_x, oplus_arrows};
use crate::error::{QcatError, Result};
use crate::object::FinObject;
use crate::scalar::Scalar;
use crate::tensor::{kappa, swap_unitary, tensor_arrows, tensor_object};
use crate::unit::{lift_scalar, scalar_arrow, unit_object};
use std::collections::BTreeMap;

#[derive(Clone, Debug, Default)]
pub struct Workspace<S: Scalar> {
    objects: BTreeMap<String, FinObject>,
    arrows: BTreeMap<String, Arrow<S>>,
}

impl<S: Scalar> Workspace<S> {
    pub fn new() -> Self {
        Workspace {
            objects: BTreeMap::new(),
            arrows: BTreeMap::new(),
        }
    }

    pub fn insert_object(&mut self, name: &str, object: FinObject) {
        self.objects.insert(name.to_string(), object);
    }

    pub fn insert_arrow(&mut self, name: &str, arrow: Arrow<S>) {
        self.arrows.insert(name.to_string(), arrow);
    }

    pub fn object(&self, name: &str) -> Result<&FinObject> {
        self.objects
            .get(name)
            .ok_or_else(|| QcatError::UnknownName(name.to_string()))
    }

    pub fn arrow(&self, name: &str) -> Result<&Arrow<S>> {
        self.arrows
            .get(name)
            .ok_or_else(|| QcatError::UnknownName(name.to_string()))
    }

    pub fn objects(&self) -> impl Iterator<Item = (&String, &FinObject)> {
        self.objects.iter()
    }

    pub fn arrows(&self) -> impl Iterator<Item = (&String, &Arrow<S>)> {
        self.arrows.iter()
    }

    /// Load declarations from workspace text: `object NAME : labels` lines
    /// interleaved with arrow blocks in the arrow text format.
    pub fn load_text(&mut self, text: &str) -> Result<()> {
        let mut arrow_text = String::new();
        for line in text.lines() {
            let trimmed = line.trim();
            if let Some(rest) = trimmed.strip_prefix("object ") {
                let (name, labels) = rest.split_once(':').ok_or_else(|| {
                    QcatError::BadArrowFile(format!("object line lacks `:`: {trimmed}"))
                })?;
                let object = FinObject::new(crate::object::split_labels(labels))?;
                self.insert_object(name.trim(), object);
            } else {
                arrow_text.push_str(line);
                arrow_text.push('\n');
            }
        }
        for named in crate::format::parse_arrows::<S>(&arrow_text)? {
            self.insert_arrow(&named.name, named.arrow);
        }
        Ok(())
    }

    /// Load every `.qcat` file in a directory, in name order.
    pub fn load_dir(&mut self, dir: &std::path::Path) -> Result<()> {
        let mut paths: Vec<_> = std::fs::read_dir(dir)
            .map_err(|e| QcatError::BadArrowFile(format!("{}: {e}", dir.display())))?
            .filter_map(|e| e.ok())
            .map(|e| e.path())
            .filter(|p| p.extension().is_some_and(|x| x == "qcat"))
            .collect();
        paths.sort();
        for path in paths {
            let text = std::fs::read_to_string(&path)
                .map_err(|e| QcatError::BadArrowFile(format!("{}: {e}", path.display())))?;
            self.load_text(&text)?;
        }
        Ok(())
    }
}

fn is_unit(o: &FinObject) -> bool {
    o == &unit_object()
}

/// How the tensor operator treats its operands, decided by their types.
#[derive(Clone, Copy, PartialEq, Debug)]
enum TensorMode {
    Scalars,
    Preparations,
    Destructions,
    Kronecker,
}

fn tensor_mode(ld: &FinObject, lc: &FinObject, rd: &FinObject, rc: &FinObject) -> TensorMode {
    if is_unit(ld) && is_unit(lc) && is_unit(rd) && is_unit(rc) {
        TensorMode::Scalars
    } else if is_unit(ld) && is_unit(rd) {
        TensorMode::Preparations
    } else if is_unit(lc) && is_unit(rc) {
        TensorMode::Destructions
    } else {
        TensorMode::Kronecker
    }
}

/// The (domain, codomain) a term will evaluate to, or a typing error.
/// Evaluation never raises an object mismatch on a term this accepts.
pub fn infer_types<S: Scalar>(t: &Term, ws: &Workspace<S>) -> Result<(FinObject, FinObject)> {
    match t {
        Term::Name(n) => {
            let a = ws.arrow(n)?;
            Ok((a.dom().clone(), a.cod().clone()))
        }
        Term::Id(a) => {
            let o = ws.object(a)?;
            Ok((o.clone(), o.clone()))
        }
        Term::Zero(a, b) => Ok((ws.object(a)?.clone(), ws.object(b)?.clone())),
        Term::Delta(a) => {
            let o = ws.object(a)?;
            Ok((o.clone(), direct_sum::<S>(o, o).object))
        }
        Term::Nabla(a) => {
            let o = ws.object(a)?;
            Ok((direct_sum::<S>(o, o).object, o.clone()))
        }
        Term::Swap(a, b) => {
            let (oa, ob) = (ws.object(a)?, ws.object(b)?);
            Ok((tensor_object(oa, ob), tensor_object(ob, oa)))
        }
        Term::DistX(a, b, c) => {
            let (oa, ob, oc) = (ws.object(a)?, ws.object(b)?, ws.object(c)?);
            let dom = direct_sum::<S>(&tensor_object(oa, ob), &tensor_object(oa, oc)).object;
            let cod = tensor_object(oa, &direct_sum::<S>(ob, oc).object);
            Ok((dom, cod))
        }
        Term::Lift(lit, a) => {
            S::parse_literal(lit)?;
            let o = ws.object(a)?;
            Ok((o.clone(), o.clone()))
        }
        Term::Adjoint(inner) => {
            let (d, c) = infer_types(inner, ws)?;
            Ok((c, d))
        }
        Term::Tensor(l, r) => {
            let (ld, lc) = infer_types(l, ws)?;
            let (rd, rc) = infer_types(r, ws)?;
            match tensor_mode(&ld, &lc, &rd, &rc) {
                TensorMode::Scalars => Ok((unit_object(), unit_object())),
                TensorMode::Preparations => Ok((unit_object(), tensor_object(&lc, &rc))),
                TensorMode::Destructions => Ok((tensor_object(&ld, &rd), unit_object())),
                TensorMode::Kronecker => {
                    Ok((tensor_object(&ld, &rd), tensor_object(&lc, &rc)))
                }
            }
        }
        Term::Oplus(l, r) => {
            let (ld, lc) = infer_types(l, ws)?;
            let (rd, rc) = infer_types(r, ws)?;
            Ok((
                direct_sum::<S>(&ld, &rd).object,
                direct_sum::<S>(&lc, &rc).object,
            ))
        }
        Term::Compose { first, then } => {
            let (fd, fc) = infer_types(first, ws)?;
            let (td, tc) = infer_types(then, ws)?;
            if fc != td {
                return Err(QcatError::TypeMismatch {
                    context: "composition",
                    left: format!("{fd} -> {fc}"),
                    right: format!("{td} -> {tc}"),
                });
            }
            Ok((fd, tc))
        }
        Term::Add(l, r) => {
            let (ld, lc) = infer_types(l, ws)?;
            let (rd, rc) = infer_types(r, ws)?;
            if ld != rd || lc != rc {
                return Err(QcatError::TypeMismatch {
                    context: "addition",
                    left: format!("{ld} -> {lc}"),
                    right: format!("{rd} -> {rc}"),
                });
            }
            Ok((ld, lc))
        }
    }
}

pub fn eval<S: Scalar>(t: &Term, ws: &Workspace<S>) -> Result<Arrow<S>> {
    match t {
        Term::Name(n) => Ok(ws.arrow(n)?.clone()),
        Term::Id(a) => Ok(Arrow::identity(ws.object(a)?)),
        Term::Zero(a, b) => Ok(Arrow::zero(ws.object(a)?, ws.object(b)?)),
        Term::Delta(a) => Ok(diagonal(ws.object(a)?)),
        Term::Nabla(a) => Ok(codiagonal(ws.object(a)?)),
        Term::Swap(a, b) => Ok(swap_unitary(ws.object(a)?, ws.object(b)?)),
        Term::DistX(a, b, c) => Ok(distributor_x(
            ws.object(a)?,
            ws.object(b)?,
            ws.object(c)?,
        )),
        Term::Lift(lit, a) => Ok(lift_scalar(&S::parse_literal(lit)?, ws.object(a)?)),
        Term::Adjoint(inner) => Ok(eval(inner, ws)?.adjoint()),
        Term::Tensor(l, r) => {
            let fl = eval(l, ws)?;
            let fr = eval(r, ws)?;
            match tensor_mode(fl.dom(), fl.cod(), fr.dom(), fr.cod()) {
                TensorMode::Scalars => {
                    Ok(scalar_arrow(fl.entry(0, 0).mul(fr.entry(0, 0))))
                }
                TensorMode::Preparations => kappa(&fl, &fr),
                TensorMode::Destructions => Ok(kappa(&fl.adjoint(), &fr.adjoint())?.adjoint()),
                TensorMode::Kronecker => Ok(tensor_arrows(&fl, &fr)),
            }
        }
        Term::Oplus(l, r) => {
            let fl = eval(l, ws)?;
            let fr = eval(r, ws)?;
            let ds_dom = direct_sum::<S>(fl.dom(), fr.dom());
            let ds_cod = direct_sum::<S>(fl.cod(), fr.cod());
            oplus_arrows(&fl, &fr, &ds_dom, &ds_cod)
        }
        Term::Compose { first, then } => {
            let f = eval(first, ws)?;
            let g = eval(then, ws)?;
            Arrow::compose(&g, &f)
        }
        Term::Add(l, r) => eval(l, ws)?.add(&eval(r, ws)?),
    }
}
