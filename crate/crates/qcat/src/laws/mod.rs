//! The executable law registry: every algebraic fact the category
//! construction promises, as a seed-deterministic randomized (or exact)
//! check with a serializable counterexample on failure.

mod fixtures;
mod gen;
mod registry;
mod shrink;

pub use fixtures::{monoid_fixture_laws, FixtureResult, MonoidFixture};
pub use gen::generate_arrow;

use crate::arrow::Arrow;
use crate::error::Result;
use crate::format::print_arrow;
use crate::object::FinObject;
use crate::rng::Rng;
use crate::scalar::{CapabilitySet, Scalar};
use crate::unit::unit_object;
use std::fmt;
use std::time::{Duration, Instant};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LawGroup {
    Adjoint,
    Unit,
    Tensor,
    Biproduct,
    Interaction,
    Cloning,
    Fixture,
}

impl LawGroup {
    pub fn name(&self) -> &'static str {
        match self {
            LawGroup::Adjoint => "adjoint",
            LawGroup::Unit => "unit",
            LawGroup::Tensor => "tensor",
            LawGroup::Biproduct => "biproduct",
            LawGroup::Interaction => "interaction",
            LawGroup::Cloning => "cloning",
            LawGroup::Fixture => "fixture",
        }
    }
}

/// A failing case: the witness arrows plus a pure predicate that re-tests
/// them, which drives shrinking and re-validation. Scalar parameters ride
/// along as 1x1 arrows.
pub struct FailCase<S: Scalar> {
    pub note: String,
    pub arrows: Vec<Arrow<S>>,
    /// Returns true while the case still falsifies the law.
    pub recheck: fn(&[Arrow<S>]) -> bool,
}

pub enum Check<S: Scalar> {
    Pass,
    Fail(FailCase<S>),
    Skip(&'static str),
}

pub struct Law<S: Scalar> {
    pub id: &'static str,
    /// What the law asserts, in one line.
    pub statement: &'static str,
    pub group: LawGroup,
    /// `Some(missing)` when the backend lacks a needed capability.
    pub applicable: fn(&CapabilitySet) -> Option<&'static str>,
    pub check: fn(&mut Ctx<S>) -> Check<S>,
}

#[derive(Clone, Copy, Debug)]
pub struct LawBounds {
    pub max_size: usize,
    pub trials: u32,
}

impl Default for LawBounds {
    fn default() -> Self {
        LawBounds {
            max_size: 3,
            trials: 200,
        }
    }
}

/// Per-law context: an independent RNG stream, the size bounds, and the
/// count of non-degenerate instances exercised. A law that passes without
/// touching a single instance is reported as vacuous, which is a failure.
pub struct Ctx<'a, S: Scalar> {
    pub rng: Rng,
    pub bounds: &'a LawBounds,
    instances: u32,
    _marker: std::marker::PhantomData<S>,
}

impl<'a, S: Scalar> Ctx<'a, S> {
    fn new(rng: Rng, bounds: &'a LawBounds) -> Self {
        Ctx {
            rng,
            bounds,
            instances: 0,
            _marker: std::marker::PhantomData,
        }
    }

    /// Record one non-degenerate instance.
    pub fn tick(&mut self) {
        self.instances += 1;
    }

    pub fn trials(&self) -> u32 {
        self.bounds.trials
    }

    /// A fresh object with `tag`-prefixed labels and random size within
    /// bounds.
    pub fn obj(&mut self, tag: &str) -> FinObject {
        let n = 1 + self.rng.below(self.bounds.max_size as u64) as usize;
        self.obj_sized(tag, n)
    }

    /// An object with at least two labels, for laws that need room.
    pub fn obj_at_least2(&mut self, tag: &str) -> FinObject {
        let max = self.bounds.max_size.max(2);
        let n = 2 + self.rng.below((max - 1) as u64) as usize;
        self.obj_sized(tag, n)
    }

    pub fn obj_sized(&mut self, tag: &str, n: usize) -> FinObject {
        FinObject::new((0..n).map(|k| format!("{tag}{k}")).collect()).expect("nonempty")
    }

    pub fn arrow(&mut self, dom: &FinObject, cod: &FinObject) -> Arrow<S> {
        Arrow::from_fn(dom.clone(), cod.clone(), |_, _| S::random(&mut self.rng))
    }

    pub fn endo(&mut self, object: &FinObject) -> Arrow<S> {
        self.arrow(&object.clone(), object)
    }

    pub fn prep(&mut self, object: &FinObject) -> Arrow<S> {
        self.arrow(&unit_object(), object)
    }

    pub fn scalar(&mut self) -> S {
        S::random(&mut self.rng)
    }

    pub fn nonzero_scalar(&mut self) -> S {
        loop {
            let s = S::random(&mut self.rng);
            if !s.is_zero() {
                return s;
            }
        }
    }

    pub fn nonzero_prep(&mut self, object: &FinObject) -> Arrow<S> {
        loop {
            let p = self.prep(object);
            if !p.is_zero_arrow() {
                return p;
            }
        }
    }

    /// A self-adjoint random endo arrow.
    pub fn self_adjoint(&mut self, object: &FinObject) -> Arrow<S> {
        let raw = self.endo(object);
        Arrow::from_fn(object.clone(), object.clone(), |i, j| {
            if i == j {
                // force a star-fixed diagonal
                raw.entry(i, j).add(&raw.entry(i, j).star())
            } else if i < j {
                raw.entry(i, j).clone()
            } else {
                raw.entry(j, i).star()
            }
        })
    }

    /// A random permutation unitary on `object`.
    pub fn permutation_unitary(&mut self, object: &FinObject) -> Arrow<S> {
        let n = object.len();
        let mut map: Vec<usize> = (0..n).collect();
        for i in (1..n).rev() {
            let j = self.rng.below((i + 1) as u64) as usize;
            map.swap(i, j);
        }
        Arrow::functional(object, object, &map).expect("permutation")
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LawStatus {
    Pass,
    Fail,
    NotApplicable(&'static str),
}

#[derive(Clone, Debug)]
pub struct LawResult {
    pub id: &'static str,
    pub statement: &'static str,
    pub group: LawGroup,
    pub status: LawStatus,
    pub instances: u32,
    /// Shrunk counterexample in the arrow text format, present on failure.
    pub witness: Option<String>,
}

#[derive(Debug)]
pub struct LawReport {
    pub backend: &'static str,
    pub seed: u64,
    pub bounds: LawBounds,
    pub results: Vec<LawResult>,
    pub wall: Duration,
}

impl LawReport {
    pub fn failures(&self) -> Vec<&LawResult> {
        self.results
            .iter()
            .filter(|r| r.status == LawStatus::Fail)
            .collect()
    }

    pub fn passed(&self) -> usize {
        self.results
            .iter()
            .filter(|r| r.status == LawStatus::Pass)
            .count()
    }

    /// Deterministic serialization: identical inputs give byte-identical
    /// text. Wall time is deliberately excluded.
    pub fn canonical_text(&self) -> String {
        let mut out = format!(
            "backend={} seed={} max-size={} trials={}\n",
            self.backend, self.seed, self.bounds.max_size, self.bounds.trials
        );
        for r in &self.results {
            match &r.status {
                LawStatus::Pass => {
                    out.push_str(&format!("{} PASS instances={}\n", r.id, r.instances));
                }
                LawStatus::Fail => {
                    out.push_str(&format!(
                        "{} FAIL instances={} witness={}.witness\n",
                        r.id, r.instances, r.id
                    ));
                }
                LawStatus::NotApplicable(missing) => {
                    out.push_str(&format!("{} N/A instances=0 missing={}\n", r.id, missing));
                }
            }
        }
        out
    }
}

impl fmt::Display for LawReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.canonical_text())?;
        writeln!(f, "wall-time={:.3}s", self.wall.as_secs_f64())
    }
}

/// All registered laws for one backend.
pub fn all_laws<S: Scalar>() -> Vec<Law<S>> {
    registry::build()
}

fn run_law<S: Scalar>(law: &Law<S>, bounds: &LawBounds, seed: u64) -> LawResult {
    let caps = S::caps();
    if let Some(missing) = (law.applicable)(&caps) {
        return LawResult {
            id: law.id,
            statement: law.statement,
            group: law.group,
            status: LawStatus::NotApplicable(missing),
            instances: 0,
            witness: None,
        };
    }
    let mut ctx = Ctx::new(Rng::derived(seed, law.id), bounds);
    match (law.check)(&mut ctx) {
        Check::Pass => {
            if ctx.instances == 0 {
                LawResult {
                    id: law.id,
                    statement: law.statement,
                    group: law.group,
                    status: LawStatus::Fail,
                    instances: 0,
                    witness: Some("# vacuous: no non-degenerate instance exercised\n".into()),
                }
            } else {
                LawResult {
                    id: law.id,
                    statement: law.statement,
                    group: law.group,
                    status: LawStatus::Pass,
                    instances: ctx.instances,
                    witness: None,
                }
            }
        }
        Check::Fail(case) => {
            let shrunk = shrink::shrink_case(case);
            let mut text = format!("# {}\n", shrunk.note);
            for (k, w) in shrunk.arrows.iter().enumerate() {
                text.push_str(&print_arrow(&format!("w{k}"), w));
            }
            LawResult {
                id: law.id,
                statement: law.statement,
                group: law.group,
                status: LawStatus::Fail,
                instances: ctx.instances,
                witness: Some(text),
            }
        }
        Check::Skip(missing) => LawResult {
            id: law.id,
            statement: law.statement,
            group: law.group,
            status: LawStatus::NotApplicable(missing),
            instances: 0,
            witness: None,
        },
    }
}

/// Run every applicable law, or a single law by id, or some groups.
/// Each law draws from its own sub-seed derived from `(seed, law id)`,
/// so the selection does not change individual outcomes.
pub fn run_suite_filtered<S: Scalar>(
    bounds: &LawBounds,
    seed: u64,
    law_id: Option<&str>,
    groups: Option<&[LawGroup]>,
) -> Result<LawReport> {
    let start = Instant::now();
    let mut results = Vec::new();
    for law in all_laws::<S>() {
        if let Some(want) = law_id {
            if law.id != want {
                continue;
            }
        }
        if let Some(gs) = groups {
            if !gs.contains(&law.group) {
                continue;
            }
        }
        results.push(run_law(&law, bounds, seed));
    }
    if results.is_empty() {
        if let Some(want) = law_id {
            return Err(crate::error::QcatError::UnknownName(want.to_string()));
        }
    }
    Ok(LawReport {
        backend: S::BACKEND,
        seed,
        bounds: *bounds,
        results,
        wall: start.elapsed(),
    })
}

pub fn run_suite<S: Scalar>(bounds: &LawBounds, seed: u64) -> LawReport {
    run_suite_filtered::<S>(bounds, seed, None, None).expect("unfiltered run cannot fail")
}

/// The checked-in id/group/statement table. A test pins the registry to
/// it in both directions, so renaming or dropping a law is a visible,
/// versioned change.
pub const MANIFEST: &str = include_str!("manifest.tsv");

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{Bool, F2, Gauss, Rat};

    #[test]
    fn at_least_forty_laws() {
        assert!(all_laws::<Rat>().len() >= 40, "registry too small");
    }

    #[test]
    fn manifest_matches_registry_bidirectionally() {
        let laws = all_laws::<Rat>();
        let manifest: Vec<(&str, &str, &str)> = MANIFEST
            .lines()
            .filter(|l| !l.trim().is_empty())
            .map(|l| {
                let mut parts = l.splitn(3, '\t');
                (
                    parts.next().expect("id"),
                    parts.next().expect("group"),
                    parts.next().expect("statement"),
                )
            })
            .collect();
        // every registered law appears in the manifest with its statement
        for law in &laws {
            let row = manifest
                .iter()
                .find(|(id, _, _)| *id == law.id)
                .unwrap_or_else(|| panic!("law {} missing from the manifest", law.id));
            assert_eq!(row.1, law.group.name(), "{}", law.id);
            assert_eq!(row.2, law.statement, "{}", law.id);
        }
        // and every manifest row names a registered law
        for (id, _, _) in &manifest {
            assert!(
                laws.iter().any(|l| l.id == *id),
                "manifest row {id} has no registered law"
            );
        }
        assert_eq!(laws.len(), manifest.len());
    }

    #[test]
    fn stable_unique_ids() {
        let laws = all_laws::<Rat>();
        for (i, a) in laws.iter().enumerate() {
            for b in &laws[..i] {
                assert_ne!(a.id, b.id, "duplicate law id");
            }
        }
        for id in ["thm-scalar-com", "thm-nocloning", "lemma-dense", "qcat-minus-one"] {
            assert!(laws.iter().any(|l| l.id == id), "missing law id {id}");
        }
    }

    #[test]
    fn suite_deterministic() {
        let bounds = LawBounds {
            max_size: 2,
            trials: 8,
        };
        let a = run_suite::<Gauss>(&bounds, 99).canonical_text();
        let b = run_suite::<Gauss>(&bounds, 99).canonical_text();
        assert_eq!(a, b);
    }

    #[test]
    fn quantic_laws_gated_off_without_minus_one() {
        let bounds = LawBounds {
            max_size: 2,
            trials: 4,
        };
        for report in [run_suite::<Bool>(&bounds, 7), run_suite::<F2>(&bounds, 7)] {
            assert!(report.failures().is_empty(), "{}", report.canonical_text());
            let q = report
                .results
                .iter()
                .find(|r| r.id == "qcat-minus-one")
                .unwrap();
            assert_eq!(q.status, LawStatus::NotApplicable("has_minus_one"));
        }
    }
}
