//! Counterexample shrinking: zero out entries first, then drop labels,
//! keeping every step that still falsifies the law.

use super::FailCase;
use crate::arrow::Arrow;
use crate::object::FinObject;
use crate::scalar::Scalar;

pub fn shrink_case<S: Scalar>(case: FailCase<S>) -> FailCase<S> {
    let FailCase {
        note,
        mut arrows,
        recheck,
    } = case;
    if !recheck(&arrows) {
        // the recheck does not reproduce the failure; keep the original
        return FailCase {
            note: format!("{note} (unshrunk)"),
            arrows,
            recheck,
        };
    }
    arrows = zero_entries(arrows, recheck);
    arrows = drop_labels(arrows, recheck);
    FailCase {
        note,
        arrows,
        recheck,
    }
}

fn zero_entries<S: Scalar>(
    mut arrows: Vec<Arrow<S>>,
    recheck: fn(&[Arrow<S>]) -> bool,
) -> Vec<Arrow<S>> {
    let mut changed = true;
    while changed {
        changed = false;
        for a in 0..arrows.len() {
            let (rows, cols) = (arrows[a].dom().len(), arrows[a].cod().len());
            for i in 0..rows {
                for j in 0..cols {
                    if arrows[a].entry(i, j).is_zero() {
                        continue;
                    }
                    let mut candidate = arrows.clone();
                    let orig = &arrows[a];
                    candidate[a] =
                        Arrow::from_fn(orig.dom().clone(), orig.cod().clone(), |r, c| {
                            if (r, c) == (i, j) {
                                S::zero()
                            } else {
                                orig.entry(r, c).clone()
                            }
                        });
                    if recheck(&candidate) {
                        arrows = candidate;
                        changed = true;
                    }
                }
            }
        }
    }
    arrows
}

fn restrict_object(object: &FinObject, drop: usize) -> Option<FinObject> {
    if object.len() <= 1 {
        return None;
    }
    let labels: Vec<String> = object
        .labels()
        .iter()
        .enumerate()
        .filter(|(k, _)| *k != drop)
        .map(|(_, l)| l.clone())
        .collect();
    FinObject::new(labels).ok()
}

fn drop_labels<S: Scalar>(
    mut arrows: Vec<Arrow<S>>,
    recheck: fn(&[Arrow<S>]) -> bool,
) -> Vec<Arrow<S>> {
    let mut changed = true;
    while changed {
        changed = false;
        // distinct objects appearing as a dom or cod
        let mut objects: Vec<FinObject> = Vec::new();
        for a in &arrows {
            for o in [a.dom(), a.cod()] {
                if !objects.contains(o) {
                    objects.push(o.clone());
                }
            }
        }
        'outer: for object in &objects {
            for k in 0..object.len() {
                let Some(smaller) = restrict_object(object, k) else {
                    continue;
                };
                let candidate: Vec<Arrow<S>> = arrows
                    .iter()
                    .map(|a| restrict_arrow(a, object, k, &smaller))
                    .collect();
                if recheck(&candidate) {
                    arrows = candidate;
                    changed = true;
                    break 'outer;
                }
            }
        }
    }
    arrows
}

/// Delete the row/column of the dropped label wherever `object` occurs.
fn restrict_arrow<S: Scalar>(
    arrow: &Arrow<S>,
    object: &FinObject,
    drop: usize,
    smaller: &FinObject,
) -> Arrow<S> {
    let dom_hit = arrow.dom() == object;
    let cod_hit = arrow.cod() == object;
    if !dom_hit && !cod_hit {
        return arrow.clone();
    }
    let new_dom = if dom_hit {
        smaller.clone()
    } else {
        arrow.dom().clone()
    };
    let new_cod = if cod_hit {
        smaller.clone()
    } else {
        arrow.cod().clone()
    };
    let fix = |idx: usize, hit: bool| if hit && idx >= drop { idx + 1 } else { idx };
    Arrow::from_fn(new_dom, new_cod, |i, j| {
        arrow.entry(fix(i, dom_hit), fix(j, cod_hit)).clone()
    })
}
