//! Term syntax. Scalar literals are kept as raw text so the tree stays
//! backend-agnostic; they are parsed at evaluation time.

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Term {
    Name(String),
    Id(String),
    Zero(String, String),
    Delta(String),
    Nabla(String),
    Swap(String, String),
    DistX(String, String, String),
    Lift(String, String),
    Adjoint(Box<Term>),
    Tensor(Box<Term>, Box<Term>),
    Oplus(Box<Term>, Box<Term>),
    /// Diagrammatic composition: `first`, then `then`.
    Compose {
        first: Box<Term>,
        then: Box<Term>,
    },
    Add(Box<Term>, Box<Term>),
}

impl Term {
    pub fn compose(first: Term, then: Term) -> Term {
        Term::Compose {
            first: Box::new(first),
            then: Box::new(then),
        }
    }
}

#[cfg(test)]
pub(crate) fn random_term(rng: &mut crate::rng::Rng, depth: usize) -> Term {
    let names = ["f", "g", "h", "k"];
    let objects = ["A", "B", "C"];
    let pick = |rng: &mut crate::rng::Rng, pool: &[&str]| -> String {
        pool[rng.below(pool.len() as u64) as usize].to_string()
    };
    let leaf = depth >= 4 || rng.below(3) == 0;
    if leaf {
        match rng.below(6) {
            0 => Term::Name(pick(rng, &names)),
            1 => Term::Id(pick(rng, &objects)),
            2 => Term::Zero(pick(rng, &objects), pick(rng, &objects)),
            3 => Term::Delta(pick(rng, &objects)),
            4 => Term::Swap(pick(rng, &objects), pick(rng, &objects)),
            _ => Term::Lift("1/2".into(), pick(rng, &objects)),
        }
    } else {
        match rng.below(5) {
            0 => Term::Adjoint(Box::new(random_term(rng, depth + 1))),
            1 => Term::Tensor(
                Box::new(random_term(rng, depth + 1)),
                Box::new(random_term(rng, depth + 1)),
            ),
            2 => Term::Oplus(
                Box::new(random_term(rng, depth + 1)),
                Box::new(random_term(rng, depth + 1)),
            ),
            3 => Term::compose(random_term(rng, depth + 1), random_term(rng, depth + 1)),
            _ => Term::Add(
                Box::new(random_term(rng, depth + 1)),
                Box::new(random_term(rng, depth + 1)),
            ),
        }
    }
}
