use std::sync::Arc;

use num_traits::One;

use super::{fresh_name, GradedManifold};
use crate::superalg::{Algebra, AlgebraError, AlgebraMorphism, Derivation, Element, GenSpec, Monomial, Parity, Scalar};

/// The iterated odd tangent bundle `(ΠT)^k X`.
///
/// Level `j` appends a copy of all previous generators, shifted up by one in
/// degree with flipped parity. A single application uses the prefix `d`;
/// iterated ones use `d1`, `d2`, ... so `x` at level two produces `d1x`,
/// `d2x` and `d2d1x`.
#[derive(Clone, Debug)]
pub struct OddTangent {
    base: GradedManifold,
    total: GradedManifold,
    prefixes: Vec<String>,
    differentials: Vec<Derivation>,
    eulers: Vec<Derivation>,
}

/// `ΠT X` with coordinates `x` and `dx`.
pub fn pit(x: &GradedManifold) -> OddTangent {
    build(x, vec!["d".to_string()])
}

/// `(ΠT)^k X`.
pub fn pit_iter(x: &GradedManifold, k: usize) -> OddTangent {
    build(x, (1..=k).map(|j| format!("d{j}")).collect())
}

fn build(x: &GradedManifold, prefixes: Vec<String>) -> OddTangent {
    let mut alg = x.algebra().clone();
    let mut differentials: Vec<Derivation> = Vec::new();
    let mut eulers: Vec<Derivation> = Vec::new();
    for prefix in &prefixes {
        let n = alg.len();
        let shifted: Vec<GenSpec> = alg
            .gens()
            .iter()
            .map(|g| GenSpec::new(format!("{prefix}{}", g.name), g.degree + 1, g.parity.flip()))
            .collect();
        let next = alg.extend(shifted).expect("prefixed names are fresh");
        let mut d_vals = vec![Element::zero(&next); 2 * n];
        let mut e_vals = vec![Element::zero(&next); 2 * n];
        for i in 0..n {
            d_vals[i] = Element::generator(&next, n + i);
            e_vals[n + i] = Element::generator(&next, n + i);
        }
        let d_new = Derivation::new(&next, 1, Parity::Odd, d_vals).expect("same algebra");
        let e_new = Derivation::new(&next, 0, Parity::Even, e_vals).expect("same algebra");
        differentials = differentials.iter().map(|v| lift(v, &next, &d_new)).collect();
        eulers = eulers.iter().map(|v| lift(v, &next, &d_new)).collect();
        differentials.push(d_new);
        eulers.push(e_new);
        alg = next;
    }
    OddTangent {
        base: x.clone(),
        total: GradedManifold::from_algebra(alg),
        prefixes,
        differentials,
        eulers,
    }
}

/// Extends a vector field on the previous level so that it commutes with the
/// new differential: `V(dg) = (-1)^{|V|} d(V(g))`.
fn lift(v: &Derivation, next: &Arc<Algebra>, d_new: &Derivation) -> Derivation {
    let n = v.algebra().len();
    let mut values = vec![Element::zero(next); 2 * n];
    for i in 0..n {
        let vg = v.value(i).transport(next).expect("previous level is a prefix");
        let dvg = d_new.apply(&vg);
        values[n + i] = if v.parity().is_odd() { -dvg } else { dvg };
        values[i] = vg;
    }
    Derivation::new(next, v.degree(), v.parity(), values).expect("same algebra")
}

impl OddTangent {
    pub fn base(&self) -> &GradedManifold {
        &self.base
    }

    pub fn manifold(&self) -> &GradedManifold {
        &self.total
    }

    pub fn algebra(&self) -> &Arc<Algebra> {
        self.total.algebra()
    }

    pub fn levels(&self) -> usize {
        self.prefixes.len()
    }

    /// The differential of level `j` (1-based).
    pub fn differential(&self, j: usize) -> &Derivation {
        &self.differentials[j - 1]
    }

    /// The degree operator of level `j` (1-based), counting the `j`-th shifts.
    pub fn euler(&self, j: usize) -> &Derivation {
        &self.eulers[j - 1]
    }

    /// The de Rham differential of a single `ΠT`.
    pub fn d(&self) -> &Derivation {
        self.differential(self.levels())
    }

    pub fn differentials(&self) -> &[Derivation] {
        &self.differentials
    }

    pub fn eulers(&self) -> &[Derivation] {
        &self.eulers
    }

    fn single(&self) {
        assert_eq!(self.levels(), 1, "operation defined on a single odd tangent bundle");
    }

    /// The algebra of functions on `ΠT X` with extra parameter generators appended.
    pub fn with_parameters(&self, params: Vec<GenSpec>) -> Result<Arc<Algebra>, AlgebraError> {
        self.algebra().extend(params)
    }

    /// The endomorphism `x ↦ x + dx·β`, `dx ↦ a·dx` of functions on `ΠT X`
    /// with coefficients in the parameters of `ext`, which it fixes.
    pub fn semigroup_act(&self, ext: &Arc<Algebra>, g: &SemigroupElement) -> Result<AlgebraMorphism, AlgebraError> {
        self.single();
        let n = self.base.dim();
        let a = g.a.transport(ext)?;
        let beta = g.beta.transport(ext)?;
        let mut images: Vec<Element> = (0..ext.len()).map(|i| Element::generator(ext, i)).collect();
        for i in 0..n {
            images[i] = Element::generator(ext, i) + Element::generator(ext, n + i) * &beta;
            images[n + i] = &a * Element::generator(ext, n + i);
        }
        AlgebraMorphism::new_ungraded(ext, ext, images)
    }

    /// Coefficient of `β` on the right in the action of `(1, β)`, read as a
    /// vector field; this is the de Rham differential.
    pub fn infinitesimal_translation(&self) -> Derivation {
        self.single();
        let alg = self.algebra();
        let name = fresh_name(alg, "β");
        let ext = self
            .with_parameters(vec![GenSpec::odd(name.clone(), -1)])
            .expect("fresh name");
        let b = ext.len() - 1;
        let g = SemigroupElement::new(Element::one(&ext), Element::generator(&ext, b));
        let phi = self.semigroup_act(&ext, &g).expect("same algebra");
        let values = (0..alg.len())
            .map(|i| {
                phi.image(i)
                    .right_coefficient(&Monomial::generator(b), |k| k == b)
                    .transport(alg)
                    .expect("coefficient free of β")
            })
            .collect();
        Derivation::new(alg, 1, Parity::Odd, values).expect("same algebra")
    }

    /// Coefficient of `ε` in the action of `(1 + ε, 0)`; this is the degree operator.
    pub fn infinitesimal_scaling(&self) -> Derivation {
        self.single();
        let alg = self.algebra();
        let name = fresh_name(alg, "ε");
        let ext = self.with_parameters(vec![GenSpec::even(name, 0)]).expect("fresh name");
        let e = ext.len() - 1;
        let a = Element::one(&ext) + Element::generator(&ext, e);
        let g = SemigroupElement::new(a, Element::zero(&ext));
        let phi = self.semigroup_act(&ext, &g).expect("same algebra");
        let values = (0..alg.len())
            .map(|i| {
                phi.image(i)
                    .right_coefficient(&Monomial::generator(e), |k| k == e)
                    .transport(alg)
                    .expect("coefficient free of ε")
            })
            .collect();
        Derivation::new(alg, 0, Parity::Even, values).expect("same algebra")
    }

    /// The universal map `ℝ^{0|1} → X` in Taylor form `x(θ) = x + dx·θ`,
    /// returned in the algebra of `ΠT X` with an odd `θ` appended.
    pub fn taylor_map(&self) -> (Arc<Algebra>, Vec<Element>) {
        self.single();
        let alg = self.algebra();
        let n = self.base.dim();
        let ext = self
            .with_parameters(vec![GenSpec::odd(fresh_name(alg, "θ"), -1)])
            .expect("fresh name");
        let t = ext.len() - 1;
        let images = (0..n)
            .map(|i| Element::generator(&ext, i) + Element::generator(&ext, n + i) * Element::generator(&ext, t))
            .collect();
        (ext, images)
    }
}

/// Splits each `x(θ)` as `x(0) + ξ·θ`, returning the pairs `(x(0), ξ)`.
///
/// Fails when some component has no such form, i.e. is not affine in `θ`.
pub fn taylor_coefficients(images: &[Element], theta: usize) -> Option<Vec<(Element, Element)>> {
    images
        .iter()
        .map(|x| {
            let parts = x.split_right(|k| k == theta);
            let alg = x.algebra();
            if parts.keys().any(|m| !m.is_one() && *m != Monomial::generator(theta)) {
                return None;
            }
            let at_zero = parts
                .get(&Monomial::one())
                .cloned()
                .unwrap_or_else(|| Element::zero(alg));
            let slope = parts
                .get(&Monomial::generator(theta))
                .cloned()
                .unwrap_or_else(|| Element::zero(alg));
            Some((at_zero, slope))
        })
        .collect()
}

/// The lift of a map `X → Y` (pullback `phi` from functions on `Y` to
/// functions on `X`) to `ΠT X → ΠT Y`: `y ↦ φ(y)`, `dy ↦ d(φ(y))`.
pub fn pit_map(x: &OddTangent, y: &OddTangent, phi: &AlgebraMorphism) -> Result<AlgebraMorphism, AlgebraError> {
    x.single();
    y.single();
    if !Algebra::same(phi.source(), y.base.algebra()) || !Algebra::same(phi.target(), x.base.algebra()) {
        return Err(AlgebraError::AlgebraMismatch);
    }
    let target = x.algebra();
    let pulled: Vec<Element> = phi
        .images()
        .iter()
        .map(|e| e.transport(target))
        .collect::<Result<_, _>>()?;
    let differentials: Vec<Element> = pulled.iter().map(|e| x.d().apply(e)).collect();
    let images = pulled.into_iter().chain(differentials).collect();
    AlgebraMorphism::new(y.algebra(), target, images)
}

/// A self-map `θ ↦ aθ + β` of the odd line, with `a` even and `β` odd
/// elements of a coefficient algebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SemigroupElement {
    pub a: Element,
    pub beta: Element,
}

impl SemigroupElement {
    pub fn new(a: Element, beta: Element) -> Self {
        SemigroupElement { a, beta }
    }

    pub fn identity(alg: &Arc<Algebra>) -> Self {
        SemigroupElement::new(Element::scalar(alg, Scalar::one()), Element::zero(alg))
    }

    /// `self ∘ other` as maps of the odd line: `(a, β)∘(a', β') = (aa', aβ' + β)`.
    pub fn compose(&self, other: &SemigroupElement) -> SemigroupElement {
        SemigroupElement::new(&self.a * &other.a, &self.a * &other.beta + &self.beta)
    }
}
