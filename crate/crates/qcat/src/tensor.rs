//! Tensor products through their universal property: bi-arrows, the
//! canonical product-of-preparations bi-arrow, Kronecker products of arrows,
//! the swap unitary, and the symmetric / antisymmetric tensor squares.

use crate::arrow::Arrow;
use crate::error::{QcatError, Result};
use crate::object::FinObject;
use crate::scalar::{Scalar, scalar_minus_one};
use crate::unit::{delta_preps, unit_object};

pub fn pair_label(a: &str, b: &str) -> String {
    format!("({a},{b})")
}

/// The pair-labelled object `A (x) B`, lexicographic in the component
/// orders. Index of `(i, j)` is `i * |B| + j`.
pub fn tensor_object(a: &FinObject, b: &FinObject) -> FinObject {
    let mut labels = Vec::with_capacity(a.len() * b.len());
    for la in a.labels() {
        for lb in b.labels() {
            labels.push(pair_label(la, lb));
        }
    }
    FinObject::new(labels).expect("components are valid objects")
}

/// The canonical bi-arrow on preparations: entrywise product,
/// `kappa(a, b)(*, (x, y)) = a(*, x) . b(*, y)`.
pub fn kappa<S: Scalar>(a: &Arrow<S>, b: &Arrow<S>) -> Result<Arrow<S>> {
    if a.dom().len() != 1 || b.dom().len() != 1 {
        return Err(QcatError::ObjectMismatch {
            context: "kappa",
            expected: "two preparations".into(),
            found: format!("{} -> {}, {} -> {}", a.dom(), a.cod(), b.dom(), b.cod()),
        });
    }
    let cod = tensor_object(a.cod(), b.cod());
    let nb = b.cod().len();
    Ok(Arrow::from_fn(unit_object(), cod, |_, k| {
        a.entry(0, k / nb).mul(b.entry(0, k % nb))
    }))
}

/// Kronecker product of arrows: the unique arrow with
/// `(f (x) g) . kappa = kappa . (f, g)`.
pub fn tensor_arrows<S: Scalar>(f: &Arrow<S>, g: &Arrow<S>) -> Arrow<S> {
    let dom = tensor_object(f.dom(), g.dom());
    let cod = tensor_object(f.cod(), g.cod());
    let (gd, gc) = (g.dom().len(), g.cod().len());
    Arrow::from_fn(dom, cod, |r, c| {
        f.entry(r / gd, c / gc).mul(g.entry(r % gd, c % gc))
    })
}

/// A bi-arrow stored by its generator table: the preparation assigned to
/// each pair of delta preparations. The table determines the bi-arrow; the
/// one-sided witnesses are derived on demand, never stored.
#[derive(Clone, Debug)]
pub struct BiArrow<S: Scalar> {
    dom_left: FinObject,
    dom_right: FinObject,
    cod: FinObject,
    /// `table[i * |B| + j]` is the value on the i-th and j-th deltas.
    table: Vec<Arrow<S>>,
}

impl<S: Scalar> BiArrow<S> {
    pub fn from_table(
        dom_left: FinObject,
        dom_right: FinObject,
        cod: FinObject,
        table: Vec<Arrow<S>>,
    ) -> Result<Self> {
        if table.len() != dom_left.len() * dom_right.len() {
            let idx = table.len().min(dom_left.len() * dom_right.len() - 1);
            let i = (idx / dom_right.len()).min(dom_left.len() - 1);
            let j = idx % dom_right.len();
            return Err(QcatError::IncompleteTable(
                dom_left.labels()[i].clone(),
                dom_right.labels()[j].clone(),
            ));
        }
        for p in &table {
            if p.dom().len() != 1 || p.cod() != &cod {
                return Err(QcatError::ObjectMismatch {
                    context: "biarrow_from_table",
                    expected: format!("preparations of {cod}"),
                    found: format!("{} -> {}", p.dom(), p.cod()),
                });
            }
        }
        Ok(BiArrow {
            dom_left,
            dom_right,
            cod,
            table,
        })
    }

    pub fn dom_left(&self) -> &FinObject {
        &self.dom_left
    }

    pub fn dom_right(&self) -> &FinObject {
        &self.dom_right
    }

    pub fn cod(&self) -> &FinObject {
        &self.cod
    }

    pub fn generator(&self, i: usize, j: usize) -> &Arrow<S> {
        &self.table[i * self.dom_right.len() + j]
    }

    /// The canonical tensor bi-arrow for `A`, `B`.
    pub fn kappa_biarrow(a: &FinObject, b: &FinObject) -> Self {
        let cod = tensor_object(a, b);
        let mut table = Vec::new();
        for pa in delta_preps::<S>(a) {
            for pb in delta_preps::<S>(b) {
                table.push(kappa(&pa, &pb).expect("deltas are preparations"));
            }
        }
        BiArrow {
            dom_left: a.clone(),
            dom_right: b.clone(),
            cod,
            table,
        }
    }

    /// Bilinear extension of the generator table: on deltas it returns the
    /// table entry exactly.
    pub fn eval(&self, i: &Arrow<S>, j: &Arrow<S>) -> Result<Arrow<S>> {
        if i.cod() != &self.dom_left || j.cod() != &self.dom_right
            || i.dom().len() != 1 || j.dom().len() != 1
        {
            return Err(QcatError::ObjectMismatch {
                context: "eval_biarrow",
                expected: format!("preparations of {} and {}", self.dom_left, self.dom_right),
                found: format!("{} -> {}, {} -> {}", i.dom(), i.cod(), j.dom(), j.cod()),
            });
        }
        let mut acc = Arrow::zero(&unit_object(), &self.cod);
        for (a, ia) in i.entries().iter().enumerate() {
            for (b, jb) in j.entries().iter().enumerate() {
                let coeff = ia.mul(jb);
                if !coeff.is_zero() {
                    acc = acc.add(&self.generator(a, b).scale(&coeff))?;
                }
            }
        }
        Ok(acc)
    }

    /// The unique arrow `f : A (x) B -> cod` with `f . kappa = self`;
    /// its entries are read straight off the generator table.
    pub fn factorize(&self) -> Arrow<S> {
        let dom = tensor_object(&self.dom_left, &self.dom_right);
        let nb = self.dom_right.len();
        Arrow::from_fn(dom, self.cod.clone(), |k, x| {
            self.generator(k / nb, k % nb).entry(0, x).clone()
        })
    }
}

/// Recover the two components of a pair-labelled object, when the labels
/// form a full cartesian grid in row-major order.
pub fn infer_tensor_factors(object: &FinObject) -> Option<(FinObject, FinObject)> {
    let mut left: Vec<String> = Vec::new();
    let mut right: Vec<String> = Vec::new();
    for label in object.labels() {
        let inner = label.strip_prefix('(')?.strip_suffix(')')?;
        let parts = crate::object::split_labels(inner);
        if parts.len() != 2 {
            return None;
        }
        if !left.contains(&parts[0]) {
            left.push(parts[0].clone());
        }
        if !right.contains(&parts[1]) {
            right.push(parts[1].clone());
        }
    }
    let left = FinObject::new(left).ok()?;
    let right = FinObject::new(right).ok()?;
    let rebuilt = tensor_object(&left, &right);
    if &rebuilt == object {
        Some((left, right))
    } else {
        None
    }
}

/// The permutation unitary `(a, b) -> (b, a)`.
pub fn swap_unitary<S: Scalar>(a: &FinObject, b: &FinObject) -> Arrow<S> {
    let dom = tensor_object(a, b);
    let cod = tensor_object(b, a);
    let (na, nb) = (a.len(), b.len());
    let map: Vec<usize> = (0..na * nb).map(|k| (k % nb) * na + k / nb).collect();
    Arrow::functional(&dom, &cod, &map).expect("bijection on pair labels")
}

/// The relabelling unitary `((a, b), c) -> (a, (b, c))`. The general
/// categorical associativity question is open; this is the matrix-model
/// coherence arrow only.
pub fn model_associator<S: Scalar>(a: &FinObject, b: &FinObject, c: &FinObject) -> Arrow<S> {
    let dom = tensor_object(&tensor_object(a, b), c);
    let cod = tensor_object(a, &tensor_object(b, c));
    // ((i, j), k) at index (i*|B| + j)*|C| + k maps to (i, (j, k)) at
    // i*(|B||C|) + j*|C| + k, which is the same linear index.
    let map: Vec<usize> = (0..dom.len()).collect();
    Arrow::functional(&dom, &cod, &map).expect("bijection on labels")
}

/// The canonical unitary `I (x) A -> A`. The model never silently
/// identifies the two objects; this arrow is the identification.
pub fn unit_left_relabel<S: Scalar>(a: &FinObject) -> Arrow<S> {
    let dom = tensor_object(&unit_object(), a);
    let map: Vec<usize> = (0..a.len()).collect();
    Arrow::functional(&dom, a, &map).expect("bijection")
}

/// The canonical unitary `A (x) I -> A`.
pub fn unit_right_relabel<S: Scalar>(a: &FinObject) -> Arrow<S> {
    let dom = tensor_object(a, &unit_object());
    let map: Vec<usize> = (0..a.len()).collect();
    Arrow::functional(&dom, a, &map).expect("bijection")
}

/// Result of the symmetric or antisymmetric tensor-square construction.
#[derive(Clone, Debug)]
pub struct SymTensorResult<S: Scalar> {
    /// Multiset-labelled (symmetric) or strict-pair-labelled
    /// (antisymmetric) object.
    pub object: FinObject,
    /// The (anti)symmetric bi-arrow sigma = p . kappa.
    pub sigma: BiArrow<S>,
    /// The projection `A (x) A -> object`, left-unitary.
    pub projection: Arrow<S>,
}

fn sym_label(a: &str, b: &str) -> String {
    format!("{{{a},{b}}}")
}

fn antisym_label(a: &str, b: &str) -> String {
    format!("({a}<{b})")
}

fn sqrt2_caps_check<S: Scalar>() -> Result<(S, S)> {
    let caps = S::caps();
    if !caps.has_multiplicative_inverse_of_nonzero {
        return Err(QcatError::CapabilityMissing {
            backend: S::BACKEND,
            capability: "has_multiplicative_inverse_of_nonzero",
        });
    }
    let minus = scalar_minus_one::<S>()?;
    let root2 = S::sqrt2().ok_or(QcatError::CapabilityMissing {
        backend: S::BACKEND,
        capability: "has_sqrt2",
    })?;
    let half_root2 = root2.inv().ok_or(QcatError::ZeroNotInvertible)?;
    Ok((minus, half_root2))
}

/// Symmetric tensor square: object labelled by multisets `{a,b}` with
/// `a <= b` in label order, dimension n(n+1)/2. The projection sends the
/// diagonal pair `(a,a)` to `{a,a}` with weight 1 and each off-diagonal
/// pair to its multiset with weight 1/sqrt2.
pub fn s_tensor<S: Scalar>(a: &FinObject) -> Result<SymTensorResult<S>> {
    let (_, inv_root2) = sqrt2_caps_check::<S>()?;
    build_special_tensor(a, true, &inv_root2)
}

/// Antisymmetric tensor square: object labelled by strict pairs `(a<b)`,
/// dimension n(n-1)/2. Requires at least two labels; a single-label object
/// has no antisymmetric square in a category without empty objects.
pub fn a_tensor<S: Scalar>(a: &FinObject) -> Result<SymTensorResult<S>> {
    let (_, inv_root2) = sqrt2_caps_check::<S>()?;
    if a.len() < 2 {
        return Err(QcatError::EmptyObject);
    }
    build_special_tensor(a, false, &inv_root2)
}

fn build_special_tensor<S: Scalar>(
    a: &FinObject,
    symmetric: bool,
    inv_root2: &S,
) -> Result<SymTensorResult<S>> {
    let n = a.len();
    let labels = a.labels();
    let mut out_labels = Vec::new();
    for i in 0..n {
        for j in i..n {
            if symmetric {
                out_labels.push(sym_label(&labels[i], &labels[j]));
            } else if i < j {
                out_labels.push(antisym_label(&labels[i], &labels[j]));
            }
        }
    }
    let object = FinObject::new(out_labels)?;
    let pair_obj = tensor_object(a, a);
    let minus = scalar_minus_one::<S>()?;

    // column index in `object` for the unordered pair {i, j}, i <= j
    let slot = |i: usize, j: usize| -> Option<usize> {
        let (lo, hi) = if i <= j { (i, j) } else { (j, i) };
        if symmetric {
            // row-major upper triangle including the diagonal
            Some((0..lo).map(|r| n - r).sum::<usize>() + (hi - lo))
        } else if lo == hi {
            None
        } else {
            Some((0..lo).map(|r| n - 1 - r).sum::<usize>() + (hi - lo - 1))
        }
    };

    let projection = Arrow::from_fn(pair_obj, object.clone(), |k, col| {
        let (i, j) = (k / n, k % n);
        match slot(i, j) {
            Some(c) if c == col => {
                if symmetric && i == j {
                    S::one()
                } else if symmetric || i < j {
                    inv_root2.clone()
                } else {
                    // antisymmetric, swapped slot
                    minus.mul(inv_root2)
                }
            }
            _ => S::zero(),
        }
    });

    // sigma = p . kappa as a generator table
    let deltas = delta_preps::<S>(a);
    let mut table = Vec::new();
    for pa in &deltas {
        for pb in &deltas {
            let k = kappa(pa, pb)?;
            table.push(Arrow::compose(&projection, &k)?);
        }
    }
    let sigma = BiArrow::from_table(a.clone(), a.clone(), object.clone(), table)?;
    Ok(SymTensorResult {
        object,
        sigma,
        projection,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rng::Rng;
    use crate::scalar::{F5, Gauss, Rat, Scalar, Sqrt2Ext};
    use crate::unit::{point_prep, scalar_product, sqnorm};

    fn ab() -> FinObject {
        FinObject::from_names(&["a", "b"])
    }

    fn cd() -> FinObject {
        FinObject::from_names(&["c", "d"])
    }

    fn rand_arrow<S: Scalar>(rng: &mut Rng, d: &FinObject, c: &FinObject) -> Arrow<S> {
        Arrow::from_fn(d.clone(), c.clone(), |_, _| S::random(rng))
    }

    #[test]
    fn tensor_object_labels() {
        let t = tensor_object(&FinObject::from_names(&["x"]), &FinObject::from_names(&["y"]));
        assert_eq!(t.labels(), &["(x,y)".to_string()]);
        let t2 = tensor_object(&ab(), &cd());
        assert_eq!(t2.labels(), &["(a,c)", "(a,d)", "(b,c)", "(b,d)"]);
        let ti = tensor_object(&unit_object(), &ab());
        assert_eq!(ti.len(), 2);
    }

    #[test]
    fn kappa_of_deltas_is_pair_delta() {
        let pa: Arrow<Rat> = point_prep(&ab(), "a").unwrap();
        let pc: Arrow<Rat> = point_prep(&cd(), "c").unwrap();
        let k = kappa(&pa, &pc).unwrap();
        let expect = point_prep(&tensor_object(&ab(), &cd()), "(a,c)").unwrap();
        assert!(k.eq_approx(&expect));
    }

    #[test]
    fn kappa_respects_scalar_products() {
        // <a (x) b | a' (x) b'> = <a|a'> . <b|b'> on random quadruples
        let mut rng = Rng::new(21);
        let i = unit_object();
        for _ in 0..40 {
            let a = rand_arrow::<Gauss>(&mut rng, &i, &ab());
            let a2 = rand_arrow::<Gauss>(&mut rng, &i, &ab());
            let b = rand_arrow::<Gauss>(&mut rng, &i, &cd());
            let b2 = rand_arrow::<Gauss>(&mut rng, &i, &cd());
            let lhs = scalar_product(&kappa(&a, &b).unwrap(), &kappa(&a2, &b2).unwrap()).unwrap();
            let rhs = scalar_product(&a, &a2).unwrap().mul(&scalar_product(&b, &b2).unwrap());
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn kappa_with_zero_is_zero() {
        let i = unit_object();
        let a: Arrow<Rat> = point_prep(&ab(), "a").unwrap();
        let z = Arrow::zero(&i, &cd());
        assert!(kappa(&a, &z).unwrap().is_zero_arrow());
    }

    #[test]
    fn kronecker_identity_and_bifunctoriality() {
        let ida: Arrow<Rat> = Arrow::identity(&ab());
        let idc: Arrow<Rat> = Arrow::identity(&cd());
        let t = tensor_arrows(&ida, &idc);
        assert!(t.eq_approx(&Arrow::identity(&tensor_object(&ab(), &cd()))));

        let mut rng = Rng::new(33);
        let e = FinObject::from_names(&["e1", "e2", "e3"]);
        for _ in 0..20 {
            let f: Arrow<F5> = rand_arrow(&mut rng, &ab(), &cd());
            let f2: Arrow<F5> = rand_arrow(&mut rng, &e, &ab());
            let g: Arrow<F5> = rand_arrow(&mut rng, &cd(), &ab());
            let g2: Arrow<F5> = rand_arrow(&mut rng, &ab(), &cd());
            // (f . f2) (x) (g . g2) = (f (x) g) . (f2 (x) g2)
            let lhs = tensor_arrows(
                &Arrow::compose(&f, &f2).unwrap(),
                &Arrow::compose(&g, &g2).unwrap(),
            );
            let rhs = Arrow::compose(&tensor_arrows(&f, &g), &tensor_arrows(&f2, &g2)).unwrap();
            assert!(lhs.eq_approx(&rhs));
            // adjoint compatibility
            assert!(tensor_arrows(&f, &g).adjoint().eq_approx(
                &tensor_arrows(&f.adjoint(), &g.adjoint())
            ));
        }
    }

    #[test]
    fn scalar_tensor_is_composition() {
        // 1x1 arrows: s (x) t has the single entry s.t
        let s: Arrow<Rat> = crate::unit::scalar_arrow(Rat::new(2, 3));
        let t: Arrow<Rat> = crate::unit::scalar_arrow(Rat::new(-1, 5));
        let st = tensor_arrows(&s, &t);
        assert_eq!(st.entries()[0], Rat::new(-2, 15));
    }

    #[test]
    fn biarrow_eval_and_factorize() {
        // the kappa generator table evaluates as kappa and factorizes to id
        let b: BiArrow<Rat> = BiArrow::kappa_biarrow(&ab(), &cd());
        let f = b.factorize();
        assert!(f.eq_approx(&Arrow::identity(&tensor_object(&ab(), &cd()))));

        let mut rng = Rng::new(9);
        let i = unit_object();
        let p = rand_arrow::<Rat>(&mut rng, &i, &ab());
        let q = rand_arrow::<Rat>(&mut rng, &i, &cd());
        assert!(b.eval(&p, &q).unwrap().eq_approx(&kappa(&p, &q).unwrap()));

        // bilinearity in the first argument: eval(a.s, b) = eval(a, b).s
        let s = Rat::new(3, 7);
        assert!(b
            .eval(&p.scale(&s), &q)
            .unwrap()
            .eq_approx(&b.eval(&p, &q).unwrap().scale(&s)));
    }

    #[test]
    fn random_biarrow_factorization_checks_on_generators() {
        // f . kappa = alpha on every generator pair, f read off the table
        let mut rng = Rng::new(55);
        let x = FinObject::from_names(&["x1", "x2"]);
        let table: Vec<Arrow<F5>> = (0..4)
            .map(|_| rand_arrow(&mut rng, &unit_object(), &x))
            .collect();
        let alpha = BiArrow::from_table(ab(), cd(), x.clone(), table).unwrap();
        let f = alpha.factorize();
        for (i, pa) in delta_preps::<F5>(&ab()).iter().enumerate() {
            for (j, pb) in delta_preps::<F5>(&cd()).iter().enumerate() {
                let via_f = Arrow::compose(&f, &kappa(pa, pb).unwrap()).unwrap();
                assert!(via_f.eq_approx(alpha.generator(i, j)));
            }
        }
    }

    #[test]
    fn swap_properties() {
        let sw: Arrow<Rat> = swap_unitary(&ab(), &cd());
        assert!(sw.unitarity_flags().unitary);
        let back: Arrow<Rat> = swap_unitary(&cd(), &ab());
        assert!(Arrow::compose(&back, &sw)
            .unwrap()
            .eq_approx(&Arrow::identity(&tensor_object(&ab(), &cd()))));
        // swap . (a (x) b) = b (x) a
        let mut rng = Rng::new(77);
        let a = rand_arrow::<Rat>(&mut rng, &unit_object(), &ab());
        let b = rand_arrow::<Rat>(&mut rng, &unit_object(), &cd());
        let lhs = Arrow::compose(&sw, &kappa(&a, &b).unwrap()).unwrap();
        assert!(lhs.eq_approx(&kappa(&b, &a).unwrap()));
    }

    #[test]
    fn associator_is_unitary_and_coherent() {
        let e = FinObject::from_names(&["e"]);
        let one: Arrow<Rat> = model_associator(&e, &e, &e);
        assert_eq!(one.entries(), &[Rat::int(1)]);
        let assoc: Arrow<Rat> = model_associator(&ab(), &cd(), &FinObject::from_names(&["z", "w"]));
        assert!(assoc.unitarity_flags().unitary);
    }

    #[test]
    fn sym_tensor_dimensions() {
        let a3 = FinObject::from_names(&["a", "b", "c"]);
        let s = s_tensor::<Sqrt2Ext>(&a3).unwrap();
        assert_eq!(s.object.len(), 6); // 3 * 4 / 2
        let t = a_tensor::<Sqrt2Ext>(&a3).unwrap();
        assert_eq!(t.object.len(), 3); // 3 * 2 / 2
        let s2 = s_tensor::<Sqrt2Ext>(&ab()).unwrap();
        assert_eq!(s2.object.len(), 3);
        let t2 = a_tensor::<Sqrt2Ext>(&ab()).unwrap();
        assert_eq!(t2.object.len(), 1);
        // rationals lack sqrt2
        assert!(matches!(
            s_tensor::<Rat>(&ab()),
            Err(QcatError::CapabilityMissing { .. })
        ));
        // one-label object has no antisymmetric square
        assert!(a_tensor::<Sqrt2Ext>(&FinObject::from_names(&["a"])).is_err());
    }

    #[test]
    fn sym_projection_is_left_unitary() {
        let a3 = FinObject::from_names(&["a", "b", "c"]);
        for res in [s_tensor::<Sqrt2Ext>(&a3).unwrap(), a_tensor::<Sqrt2Ext>(&a3).unwrap()] {
            let p = &res.projection;
            let pp = Arrow::compose(p, &p.adjoint()).unwrap();
            assert!(pp.eq_approx(&Arrow::identity(&res.object)));
        }
    }

    #[test]
    fn sigma_symmetry_and_tau_antisymmetry() {
        let a3 = FinObject::from_names(&["a", "b", "c"]);
        let deltas = delta_preps::<Sqrt2Ext>(&a3);
        let s = s_tensor::<Sqrt2Ext>(&a3).unwrap();
        let t = a_tensor::<Sqrt2Ext>(&a3).unwrap();
        let minus = Sqrt2Ext::minus_one().unwrap();
        for i in 0..3 {
            for j in 0..3 {
                let sij = s.sigma.eval(&deltas[i], &deltas[j]).unwrap();
                let sji = s.sigma.eval(&deltas[j], &deltas[i]).unwrap();
                assert!(sij.eq_approx(&sji));
                let tij = t.sigma.eval(&deltas[i], &deltas[j]).unwrap();
                let tji = t.sigma.eval(&deltas[j], &deltas[i]).unwrap();
                assert!(tij.eq_approx(&tji.scale(&minus)));
            }
        }
    }

    #[test]
    fn kappa_splits_into_sym_and_antisym() {
        // id on A (x) A equals p* . p + q* . q, the matrix form of the
        // splitting of kappa
        for n in [2usize, 3] {
            let labels: Vec<String> = (0..n).map(|k| format!("x{k}")).collect();
            let a = FinObject::new(labels).unwrap();
            let s = s_tensor::<Sqrt2Ext>(&a).unwrap();
            let t = a_tensor::<Sqrt2Ext>(&a).unwrap();
            let ps = Arrow::compose(&s.projection.adjoint(), &s.projection).unwrap();
            let qs = Arrow::compose(&t.projection.adjoint(), &t.projection).unwrap();
            let sum = ps.add(&qs).unwrap();
            assert!(sum.eq_approx(&Arrow::identity(&tensor_object(&a, &a))));
        }
    }

    #[test]
    fn special_tensor_inner_product_condition() {
        // sigma*(a,b) . sigma(a',b') . 2 = <a|a'><b|b'> + <a|b'><b|a'>
        // and the antisymmetric variant with the second term negated.
        let a2 = ab();
        let mut rng = Rng::new(4242);
        let s = s_tensor::<Sqrt2Ext>(&a2).unwrap();
        let t = a_tensor::<Sqrt2Ext>(&a2).unwrap();
        let two = Sqrt2Ext::two();
        let minus = Sqrt2Ext::minus_one().unwrap();
        for _ in 0..30 {
            let a = rand_arrow::<Sqrt2Ext>(&mut rng, &unit_object(), &a2);
            let b = rand_arrow::<Sqrt2Ext>(&mut rng, &unit_object(), &a2);
            let a2p = rand_arrow::<Sqrt2Ext>(&mut rng, &unit_object(), &a2);
            let b2p = rand_arrow::<Sqrt2Ext>(&mut rng, &unit_object(), &a2);
            let cross = |alpha: &BiArrow<Sqrt2Ext>| {
                scalar_product(
                    &alpha.eval(&a, &b).unwrap(),
                    &alpha.eval(&a2p, &b2p).unwrap(),
                )
                .unwrap()
                .mul(&two)
            };
            let direct = scalar_product(&a, &a2p).unwrap()
                .mul(&scalar_product(&b, &b2p).unwrap());
            let exchanged = scalar_product(&a, &b2p).unwrap()
                .mul(&scalar_product(&b, &a2p).unwrap());
            assert_eq!(cross(&s.sigma), direct.add(&exchanged));
            assert_eq!(cross(&t.sigma), direct.add(&exchanged.mul(&minus)));
        }
    }

    #[test]
    fn normalized_sym_generators() {
        // sigma on two distinct deltas has sqnorm 1/2, scaled by sqrt2 it
        // is normalized; the diagonal generator is already normalized
        let s = s_tensor::<Sqrt2Ext>(&ab()).unwrap();
        let deltas = delta_preps::<Sqrt2Ext>(&ab());
        let off = s.sigma.eval(&deltas[0], &deltas[1]).unwrap();
        assert_eq!(sqnorm(&off).unwrap(), Sqrt2Ext::from_rat(crate::scalar::Rat::new(1, 2)));
        let diag = s.sigma.eval(&deltas[0], &deltas[0]).unwrap();
        assert_eq!(sqnorm(&diag).unwrap(), Sqrt2Ext::one());
    }
}
