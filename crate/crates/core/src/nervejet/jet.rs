use std::collections::BTreeMap;
use std::sync::Arc;

use super::{NerveError, PolyGroupLaw};
use crate::linfty::{ce_from_lie, dual_coordinate};
use crate::solve::{eliminate, Pivot};
use crate::superalg::{Algebra, AlgebraMorphism, Derivation, Element, GenSpec, Monomial, Parity};

/// The 1-jet of the nerve of a polynomial group: a Q-manifold together with
/// its isomorphism to the Chevalley–Eilenberg manifold of the Lie algebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NerveJet {
    stages: Vec<Vec<String>>,
    algebra: Arc<Algebra>,
    q: Derivation,
    to_ce: AlgebraMorphism,
    ce: Derivation,
}

impl NerveJet {
    /// Coordinate names of `H^(0)`, `H^(1)` and `H^(2)` in the working chart.
    pub fn stages(&self) -> &[Vec<String>] {
        &self.stages
    }

    pub fn algebra(&self) -> &Arc<Algebra> {
        &self.algebra
    }

    /// The vector field induced by the action of the odd line's endomorphisms.
    pub fn q(&self) -> &Derivation {
        &self.q
    }

    /// The Chevalley–Eilenberg field of the group's Lie algebra.
    pub fn ce(&self) -> &Derivation {
        &self.ce
    }

    /// A degree-preserving linear pullback from the CE coordinates to these,
    /// intertwining [`Self::ce`] with [`Self::q`].
    pub fn to_ce(&self) -> &AlgebraMorphism {
        &self.to_ce
    }
}

/// Slots of `γ(θ₁, θ₂)`: coefficients of `1`, `θ₁`, `θ₂`, `θ₁θ₂`.
const SLOTS: [(&str, Parity); 4] = [
    ("u", Parity::Even),
    ("p", Parity::Odd),
    ("r", Parity::Odd),
    ("w", Parity::Even),
];

/// Builds `H^(1)` from the degeneracy condition `γ(θ, θ) = e` and `H^(2)`
/// from the 2-simplex condition `γ(θ₁,θ₂)·γ(θ₂,θ₃) = γ(θ₁,θ₃)`, each by
/// eliminating unknowns that occur linearly. `pivot` fixes which coefficients
/// are kept as coordinates. `Q` is the right `β`-coefficient of the action
/// `θ ↦ sθ + β` at `s = 1`, and degrees are the weights in `s`.
pub fn nerve_one_jet_with(law: &PolyGroupLaw, pivot: Pivot) -> Result<NerveJet, NerveError> {
    let n = law.dim();
    let names = law.names();
    // slot-major so that, per group coordinate, u < p < r < w in declaration order
    let mut gens: Vec<GenSpec> = SLOTS
        .iter()
        .flat_map(|(slot, par)| names.iter().map(move |x| GenSpec::new(format!("{slot}_{x}"), 0, *par)))
        .collect();
    let c = gens.len();
    gens.extend([
        GenSpec::odd("θ₁", 0),
        GenSpec::odd("θ₂", 0),
        GenSpec::odd("θ₃", 0),
        GenSpec::even("s", 0),
        GenSpec::odd("β", 0),
    ]);
    let work = Algebra::new(gens).map_err(NerveError::Algebra)?;
    let g = |i: usize| Element::generator(&work, i);
    let (t1, t2, t3, s, beta) = (c, c + 1, c + 2, c + 3, c + 4);
    let coef = |slot: usize, k: usize| g(slot * n + k);
    let gamma = |a: &Element, b: &Element| -> Vec<Element> {
        (0..n)
            .map(|k| coef(0, k) + coef(1, k) * a + coef(2, k) * b + coef(3, k) * a * b)
            .collect()
    };
    let structural = |i: usize| i >= c;
    let unknowns: Vec<usize> = (0..c).collect();

    let degenerate: Vec<Element> = gamma(&g(t1), &g(t1));
    let h1 = eliminate(&degenerate, &unknowns, structural, pivot)?;
    let g12 = gamma(&g(t1), &g(t2));
    let g23 = gamma(&g(t2), &g(t3));
    let g13 = gamma(&g(t1), &g(t3));
    let cocycle: Vec<Element> = law
        .multiply_in(&work, &g12, &g23)
        .into_iter()
        .zip(&g13)
        .map(|(l, r)| h1.apply(&(l - r)))
        .collect();
    let h2_eqs: Vec<Element> = degenerate.iter().chain(&cocycle).cloned().collect();
    let h2 = eliminate(&h2_eqs, &unknowns, structural, pivot)?;
    let names_of = |v: &[usize]| v.iter().map(|&i| work.gen(i).name.clone()).collect::<Vec<_>>();
    let stages = vec![Vec::new(), names_of(&h1.free), names_of(&h2.free)];

    // the chart reads each free unknown off its slot of γ
    let free = &h2.free;
    let mut acted: Vec<Element> = (0..work.len()).map(g).collect();
    acted[t1] = g(s) * g(t1) + g(beta);
    acted[t2] = g(s) * g(t2) + g(beta);
    let act = AlgebraMorphism::new_ungraded(&work, &work, acted).expect("parity preserved");
    let mut at_one: Vec<Element> = (0..work.len()).map(g).collect();
    at_one[s] = Element::one(&work);
    let at_one = AlgebraMorphism::new_ungraded(&work, &work, at_one).expect("parity preserved");
    let slot_monomial = |slot: usize| match slot {
        0 => Monomial::one(),
        1 => Monomial::generator(t1),
        2 => Monomial::generator(t2),
        _ => Monomial::from_factors(vec![(t1, 1), (t2, 1)]),
    };
    let generic = gamma(&g(t1), &g(t2)).iter().map(|e| h2.apply(e)).collect::<Vec<_>>();
    let mut owners = BTreeMap::new();
    let mut q_values = Vec::new();
    let mut weights = Vec::new();
    for &f in free {
        let (slot, k) = (f / n, f % n);
        if owners.insert(k, f).is_some() {
            return Err(NerveError::Chart(format!("two coordinates for `{}`", names[k])));
        }
        let moved = act.apply(&generic[k]).split_right(|i| i == t1 || i == t2);
        let read = moved
            .get(&slot_monomial(slot))
            .cloned()
            .unwrap_or_else(|| Element::zero(&work));
        q_values.push(
            at_one
                .apply(&read)
                .right_coefficient(&Monomial::generator(beta), |i| i == beta),
        );
        let scaled = read.filter(|m| m.exponent(beta) == 0);
        let weight = match scaled.terms().iter().collect::<Vec<_>>().as_slice() {
            [(m, _)] if m.exponent(f) == 1 => m.exponent(s),
            _ => {
                return Err(NerveError::Chart(format!(
                    "`{}` does not scale homogeneously",
                    work.gen(f).name
                )))
            }
        };
        weights.push(weight as i32);
    }
    if owners.len() != n {
        return Err(NerveError::Chart(
            "H^(2) is not parametrized by one coordinate per group coordinate".into(),
        ));
    }
    let final_gens: Vec<GenSpec> = (0..n)
        .map(|k| {
            let f = owners[&k];
            let j = free.iter().position(|x| *x == f).expect("owner is free");
            GenSpec::new(dual_coordinate(&names[k]), weights[j], work.gen(f).parity)
        })
        .collect();
    let algebra = Algebra::new(final_gens).map_err(NerveError::Algebra)?;
    let project = AlgebraMorphism::new_ungraded(
        &work,
        &algebra,
        (0..work.len())
            .map(|i| match free.iter().position(|x| *x == i) {
                Some(j) => Element::generator(&algebra, f_index(&owners, free[j])),
                None => Element::zero(&algebra),
            })
            .collect(),
    )
    .expect("parities match");
    let mut values = vec![Element::zero(&algebra); n];
    for (j, &f) in free.iter().enumerate() {
        values[f_index(&owners, f)] = project.apply(&q_values[j]);
    }
    let q = Derivation::new(&algebra, 1, Parity::Odd, values).map_err(NerveError::Algebra)?;

    let ce = ce_from_lie(&law.lie_algebra())?;
    // the CE coordinate dual to x is the θ₁-coefficient of γ^x
    let images = (0..n).map(|k| project.apply(&h2.apply(&coef(1, k)))).collect();
    let to_ce = AlgebraMorphism::new(ce.algebra(), &algebra, images).map_err(NerveError::Algebra)?;
    Ok(NerveJet {
        stages,
        algebra,
        q,
        to_ce,
        ce,
    })
}

/// Position of the final coordinate owning the free unknown `f`.
fn f_index(owners: &BTreeMap<usize, usize>, f: usize) -> usize {
    owners
        .iter()
        .find(|(_, v)| **v == f)
        .map(|(k, _)| *k)
        .expect("free unknown has an owner")
}

/// [`nerve_one_jet_with`] keeping the `θ₁`-coefficients as coordinates.
pub fn nerve_one_jet(law: &PolyGroupLaw) -> Result<NerveJet, NerveError> {
    nerve_one_jet_with(law, Pivot::Last)
}
