//! One-object categories built from finite commutative monoids, with the
//! identity involution. They are not matrix categories, so they get their
//! own small checker: the adjoint axioms always hold, a family of zero
//! arrows exists exactly when the monoid has an absorbing element, and
//! only the singleton admits an orthogonal coproduct pair.

/// A finite commutative monoid given by its operation table.
#[derive(Clone, Debug)]
pub struct MonoidFixture {
    pub name: &'static str,
    /// `table[i][j]` is the index of `i + j`.
    pub table: Vec<Vec<usize>>,
    pub neutral: usize,
}

impl MonoidFixture {
    pub fn size(&self) -> usize {
        self.table.len()
    }

    pub fn op(&self, i: usize, j: usize) -> usize {
        self.table[i][j]
    }

    /// The cyclic group of order four, written additively.
    pub fn z4() -> Self {
        let table = (0..4)
            .map(|i| (0..4).map(|j| (i + j) % 4).collect())
            .collect();
        MonoidFixture {
            name: "z4",
            table,
            neutral: 0,
        }
    }

    /// {0, 1, 2, top} with saturating addition; top is absorbing.
    pub fn capped_counter() -> Self {
        let table = (0..4)
            .map(|i: usize| (0..4).map(|j| (i + j).min(3)).collect())
            .collect();
        MonoidFixture {
            name: "capped-counter",
            table,
            neutral: 0,
        }
    }

    pub fn singleton() -> Self {
        MonoidFixture {
            name: "singleton",
            table: vec![vec![0]],
            neutral: 0,
        }
    }

    fn is_commutative_monoid(&self) -> bool {
        let n = self.size();
        (0..n).all(|i| self.op(i, self.neutral) == i)
            && (0..n).all(|i| (0..n).all(|j| self.op(i, j) == self.op(j, i)))
            && (0..n).all(|i| {
                (0..n).all(|j| (0..n).all(|k| self.op(self.op(i, j), k) == self.op(i, self.op(j, k))))
            })
    }

    /// Elements `a` with `a + a = 0`: the unitary arrows of the fixture.
    pub fn unitary_elements(&self) -> Vec<usize> {
        (0..self.size())
            .filter(|&a| self.op(a, a) == self.neutral)
            .collect()
    }

    /// An element absorbing under the operation, if any: the would-be zero
    /// arrow of the one-object category.
    pub fn absorbing_element(&self) -> Option<usize> {
        (0..self.size()).find(|&w| (0..self.size()).all(|m| self.op(m, w) == w))
    }

    /// Search for a pair (u, v) that would be an orthogonal coproduct:
    /// both self-inverse (right-unitary under the identity involution),
    /// mutually absorbing-orthogonal, and jointly universal.
    pub fn u_coproduct_pair(&self) -> Option<(usize, usize)> {
        let zero = self.absorbing_element()?;
        let n = self.size();
        for u in 0..n {
            for v in 0..n {
                if self.op(u, u) != self.neutral || self.op(v, v) != self.neutral {
                    continue;
                }
                if self.op(u, v) != zero {
                    continue;
                }
                // universality: for all f, g a unique x with x+u = f, x+v = g
                let universal = (0..n).all(|f| {
                    (0..n).all(|g| {
                        let solutions: Vec<usize> = (0..n)
                            .filter(|&x| self.op(x, u) == f && self.op(x, v) == g)
                            .collect();
                        solutions.len() == 1
                    })
                });
                if universal {
                    return Some((u, v));
                }
            }
        }
        None
    }
}

#[derive(Clone, Debug)]
pub struct FixtureResult {
    pub name: &'static str,
    pub adjoint_axioms: bool,
    pub unitary_elements: Vec<usize>,
    pub has_zero_family: bool,
    pub u_coproduct: Option<(usize, usize)>,
    pub trivial: bool,
}

/// Run the one-object checks on a fixture.
pub fn monoid_fixture_laws(fixture: &MonoidFixture) -> FixtureResult {
    // With the identity involution the adjoint axioms reduce to the
    // commutative monoid axioms themselves: (a+b)* = b* + a* needs
    // commutativity, and a** = a is immediate.
    let adjoint_axioms = fixture.is_commutative_monoid();
    FixtureResult {
        name: fixture.name,
        adjoint_axioms,
        unitary_elements: fixture.unitary_elements(),
        has_zero_family: fixture.absorbing_element().is_some(),
        u_coproduct: fixture.u_coproduct_pair(),
        trivial: fixture.size() == 1,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn z4_fixture() {
        let r = monoid_fixture_laws(&MonoidFixture::z4());
        assert!(r.adjoint_axioms);
        // self-inverse elements of z4 are 0 and 2
        assert_eq!(r.unitary_elements, vec![0, 2]);
        // a group has no absorbing element unless it is the singleton
        assert!(!r.has_zero_family);
        assert!(r.u_coproduct.is_none());
        assert!(!r.trivial);
    }

    #[test]
    fn capped_counter_fixture() {
        let r = monoid_fixture_laws(&MonoidFixture::capped_counter());
        assert!(r.adjoint_axioms);
        assert!(r.has_zero_family);
        // still no orthogonal coproduct pair
        assert!(r.u_coproduct.is_none());
    }

    #[test]
    fn singleton_fixture_is_trivial() {
        let r = monoid_fixture_laws(&MonoidFixture::singleton());
        assert!(r.adjoint_axioms);
        assert!(r.trivial);
        assert!(r.has_zero_family);
        // the singleton does admit the degenerate coproduct
        assert_eq!(r.u_coproduct, Some((0, 0)));
    }
}
