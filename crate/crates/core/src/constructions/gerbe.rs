use std::sync::Arc;

use super::ConstructionError;
use crate::dgman::{relative_forms, GradedManifold};
use crate::superalg::{copy_algebra, Algebra, AlgebraMorphism, Derivation, Element, GenSpec};

/// Additive descent data `h(x, y, z)` on the fiber `ℚ^p`, checked to satisfy
/// `h(x,x,y) = h(x,y,y) = 0` and `h(x,y,z) + h(x,z,w) = h(x,y,w) + h(y,z,w)`.
///
/// `h` is written in the copies `name[1]`, `name[2]`, `name[3]` for `x`, `y`, `z`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GerbeCocycle {
    base: Vec<GenSpec>,
    h: Element,
    forms: Arc<Algebra>,
    d: Derivation,
}

fn base_of(names: &[&str]) -> Vec<GenSpec> {
    names.iter().map(|n| GenSpec::even(*n, 0)).collect()
}

/// Substitutes copy `j` of the fiber coordinates by the list `args[j]` of
/// copy indices in `target`, where copy `k` of `target` is its `k`-th block.
fn recopy(f: &Element, p: usize, target: &Arc<Algebra>, args: &[usize]) -> Element {
    let images = args
        .iter()
        .flat_map(|&k| (0..p).map(move |i| Element::generator(target, k * p + i)))
        .collect();
    AlgebraMorphism::new(f.algebra(), target, images)
        .expect("copies of the same fiber")
        .apply(f)
}

/// Restricts a function of several fiber copies to the diagonal in the
/// algebra of fiber forms.
fn diagonal(f: &Element, p: usize, forms: &Arc<Algebra>) -> Element {
    let k = f.algebra().len() / p.max(1);
    let images = (0..k)
        .flat_map(|_| (0..p).map(|i| Element::generator(forms, i)))
        .collect();
    AlgebraMorphism::new(f.algebra(), forms, images)
        .expect("fiber coordinates are even of degree 0")
        .apply(f)
}

impl GerbeCocycle {
    pub fn new(names: &[&str], h: Element) -> Result<Self, ConstructionError> {
        let base = base_of(names);
        let p = base.len();
        let three = copy_algebra(&base, 3)?;
        let h = h.transport(&three)?;
        let four = copy_algebra(&base, 4)?;
        let at = |args: [usize; 3]| recopy(&h, p, &four, &args);
        let conditions: [(&'static str, Element); 3] = [
            ("h(x,x,y) = 0", at([0, 0, 1])),
            ("h(x,y,y) = 0", at([0, 1, 1])),
            (
                "h(x,y,z) + h(x,z,w) = h(x,y,w) + h(y,z,w)",
                at([0, 1, 2]) + at([0, 2, 3]) - at([0, 1, 3]) - at([1, 2, 3]),
            ),
        ];
        for (condition, defect) in conditions {
            if !defect.is_zero() {
                return Err(ConstructionError::GerbeCocycle {
                    condition,
                    defect: defect.to_string(),
                });
            }
        }
        let fiber = GradedManifold::new(base.clone())?;
        let (forms, d) = relative_forms(&fiber, Vec::new())?;
        Ok(GerbeCocycle { base, h, forms, d })
    }

    pub fn parse(names: &[&str], h: &str) -> Result<Self, ConstructionError> {
        let three = copy_algebra(&base_of(names), 3)?;
        Self::new(names, Element::parse(&three, h)?)
    }

    pub fn h(&self) -> &Element {
        &self.h
    }

    /// Functions and forms on the fiber: `x_i` then `dx_i`.
    pub fn forms(&self) -> &Arc<Algebra> {
        &self.forms
    }

    /// The fiberwise de Rham differential on [`Self::forms`].
    pub fn de_rham(&self) -> &Derivation {
        &self.d
    }
}

/// `ω = Σ_{i<j} ω_ij dx^i dx^j` with `ω_ij = ∂_{y_i} ∂_{z_j} h − ∂_{y_j} ∂_{z_i} h` at `x = y = z`.
pub fn gerbe_two_form(h: &GerbeCocycle) -> Element {
    let p = h.base.len();
    let alg = h.h.algebra();
    let forms = &h.forms;
    let mixed = |i: usize, j: usize| {
        let dz = Derivation::partial(alg, 2 * p + j).apply(&h.h);
        diagonal(&Derivation::partial(alg, p + i).apply(&dz), p, forms)
    };
    let mut omega = Element::zero(forms);
    for i in 0..p {
        for j in i + 1..p {
            let w = mixed(i, j) - mixed(j, i);
            omega = omega + w * Element::generator(forms, p + i) * Element::generator(forms, p + j);
        }
    }
    omega
}

/// `h = δa`, i.e. `h(x, y, z) = a(y, z) − a(x, z) + a(x, y)`, for `a` written
/// in the copies `name[1]`, `name[2]`.
pub fn gerbe_coboundary(names: &[&str], a: &Element) -> Result<GerbeCocycle, ConstructionError> {
    let base = base_of(names);
    let p = base.len();
    let a = a.transport(&copy_algebra(&base, 2)?)?;
    let three = copy_algebra(&base, 3)?;
    let h = recopy(&a, p, &three, &[1, 2]) - recopy(&a, p, &three, &[0, 2]) + recopy(&a, p, &three, &[0, 1]);
    GerbeCocycle::new(names, h)
}

/// The 1-form `θ = Σ_j ∂_{y_j} a(x, y)|_{y=x} dx^j` in the forms algebra of
/// `gerbe`; when `gerbe` is `δa` with `a(x, x) = 0`, `dθ` is its two-form.
pub fn gerbe_potential(gerbe: &GerbeCocycle, a: &Element) -> Result<Element, ConstructionError> {
    let p = gerbe.base.len();
    let a = a.transport(&copy_algebra(&gerbe.base, 2)?)?;
    let forms = &gerbe.forms;
    Ok((0..p).fold(Element::zero(forms), |acc, j| {
        let dy = Derivation::partial(a.algebra(), p + j).apply(&a);
        acc + diagonal(&dy, p, forms) * Element::generator(forms, p + j)
    }))
}
