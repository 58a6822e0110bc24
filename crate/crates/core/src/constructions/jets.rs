use std::collections::BTreeMap;
use std::sync::Arc;

use num_traits::{One, Zero};

use crate::dgman::{pit, GradedManifold};
use crate::linalg::Matrix;
use crate::superalg::{Algebra, AlgebraMorphism, Derivation, Element, GenSpec, Monomial, Parity};

/// The first jet of the presheaf of maps out of the pair groupoid of the odd
/// line, as a Q-manifold with coordinates `x, ξ, τ, t` per fiber coordinate.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairMapsJet {
    algebra: Arc<Algebra>,
    raw: Derivation,
    canonical: Derivation,
    change: AlgebraMorphism,
}

impl PairMapsJet {
    pub fn algebra(&self) -> &Arc<Algebra> {
        &self.algebra
    }

    /// The vector field read off from the action on `f(θ₁, θ₂) = x + ξθ₁ + τθ₂ + tθ₁θ₂`:
    /// `Qx = ξ + τ`, `Qξ = -t`, `Qτ = t`, `Qt = 0`.
    pub fn raw(&self) -> &Derivation {
        &self.raw
    }

    /// The same field after `ξ ↦ ξ + τ`: `dx = ξ`, `dξ = 0`, `dτ = t`, `dt = 0`.
    pub fn canonical(&self) -> &Derivation {
        &self.canonical
    }

    /// The pullback sending the canonical `ξ` to `ξ + τ`; it intertwines
    /// [`Self::canonical`] with [`Self::raw`].
    pub fn change(&self) -> &AlgebraMorphism {
        &self.change
    }
}

fn suffixed(stem: &str, i: usize, p: usize) -> String {
    if p == 1 {
        stem.to_string()
    } else {
        format!("{stem}{}", i + 1)
    }
}

/// Derives the Q-structure from the action `θ_k ↦ aθ_k + β` of the
/// semigroup of the odd line on both arguments: `Q` is the right
/// `β`-coefficient at `a = 1` and degrees are the weights in `a`.
pub fn pair_maps_jet(p: usize) -> PairMapsJet {
    const STEMS: [(&str, Parity); 4] = [
        ("x", Parity::Even),
        ("ξ", Parity::Odd),
        ("τ", Parity::Odd),
        ("t", Parity::Even),
    ];
    let mut gens: Vec<GenSpec> = (0..p)
        .flat_map(|i| {
            STEMS
                .iter()
                .map(move |(s, par)| GenSpec::new(suffixed(s, i, p), 0, *par))
        })
        .collect();
    let m = gens.len();
    gens.extend([
        GenSpec::odd("θ₁", 0),
        GenSpec::odd("θ₂", 0),
        GenSpec::even("a", 0),
        GenSpec::odd("β", 0),
    ]);
    let work = Algebra::new(gens).expect("distinct names");
    let (th1, th2, a, beta) = (m, m + 1, m + 2, m + 3);
    let g = |i: usize| Element::generator(&work, i);
    let mut images: Vec<Element> = (0..work.len()).map(g).collect();
    images[th1] = g(a) * g(th1) + g(beta);
    images[th2] = g(a) * g(th2) + g(beta);
    let act = AlgebraMorphism::new_ungraded(&work, &work, images).expect("parity preserved");
    let mut at_one: Vec<Element> = (0..work.len()).map(g).collect();
    at_one[a] = Element::one(&work);
    let at_one = AlgebraMorphism::new_ungraded(&work, &work, at_one).expect("parity preserved");
    let mut no_beta: Vec<Element> = (0..work.len()).map(g).collect();
    no_beta[beta] = Element::zero(&work);
    let no_beta = AlgebraMorphism::new_ungraded(&work, &work, no_beta).expect("parity preserved");

    let theta_parts = [
        Monomial::one(),
        Monomial::generator(th1),
        Monomial::generator(th2),
        Monomial::from_factors(vec![(th1, 1), (th2, 1)]),
    ];
    let mut q_values = vec![Element::zero(&work); m];
    let mut weights = vec![0u32; m];
    for i in 0..p {
        let f = g(4 * i) + g(4 * i + 1) * g(th1) + g(4 * i + 2) * g(th2) + g(4 * i + 3) * g(th1) * g(th2);
        let moved = act.apply(&f).split_right(|k| k == th1 || k == th2);
        for (c, part) in theta_parts.iter().enumerate() {
            let coeff = moved.get(part).cloned().unwrap_or_else(|| Element::zero(&work));
            let generator = 4 * i + c;
            q_values[generator] = at_one
                .apply(&coeff)
                .right_coefficient(&Monomial::generator(beta), |k| k == beta);
            let scaled = no_beta.apply(&coeff);
            let (mono, _) = scaled
                .terms()
                .iter()
                .next()
                .expect("the action fixes the β-free part up to scale");
            weights[generator] = mono.exponent(a);
        }
    }

    let graded: Vec<GenSpec> = (0..m)
        .map(|i| {
            let spec = work.gen(i);
            let degree = weights[i] as i32;
            assert_eq!(
                spec.parity,
                Parity::of_degree(degree),
                "weight parity matches coordinate parity"
            );
            GenSpec::new(spec.name.clone(), degree, spec.parity)
        })
        .collect();
    let algebra = Algebra::new(graded).expect("distinct names");
    let project = AlgebraMorphism::new_ungraded(
        &work,
        &algebra,
        (0..work.len())
            .map(|i| {
                if i < m {
                    Element::generator(&algebra, i)
                } else {
                    Element::zero(&algebra)
                }
            })
            .collect(),
    )
    .expect("parity preserved");
    let raw = Derivation::new(
        &algebra,
        1,
        Parity::Odd,
        q_values.iter().map(|v| project.apply(v)).collect(),
    )
    .expect("same algebra");

    let h = |i: usize| Element::generator(&algebra, i);
    let mut forward: Vec<Element> = (0..m).map(h).collect();
    let mut backward = forward.clone();
    for i in 0..p {
        forward[4 * i + 1] = h(4 * i + 1) + h(4 * i + 2);
        backward[4 * i + 1] = h(4 * i + 1) - h(4 * i + 2);
    }
    let change = AlgebraMorphism::new(&algebra, &algebra, forward).expect("degree-preserving change");
    let inverse = AlgebraMorphism::new(&algebra, &algebra, backward).expect("degree-preserving change");
    let canonical = Derivation::new(
        &algebra,
        1,
        Parity::Odd,
        (0..m).map(|i| inverse.apply(&raw.apply(change.image(i)))).collect(),
    )
    .expect("same algebra");
    PairMapsJet {
        algebra,
        raw,
        canonical,
        change,
    }
}

/// Closed `k`-forms on `ℝ^{0|n}`, computed as the kernel of `d` on forms of
/// degree `k` in `Λ[θ] ⊗ ℚ[dθ]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClosedForms {
    pub algebra: Arc<Algebra>,
    pub form_degree: u32,
    /// Dimension of all `k`-forms.
    pub ambient_dim: usize,
    /// A basis of the closed forms, each scaled to have leading coefficient 1.
    pub basis: Vec<Element>,
}

impl ClosedForms {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }
}

/// All monomials in `θ_1..θ_n` (exponent ≤ 1) and `dθ_1..dθ_n` with total `dθ`-degree `k`.
pub(crate) fn form_monomials(n: usize, k: u32) -> Vec<Monomial> {
    fn dtheta(n: usize, start: usize, left: u32, cur: &mut Vec<(usize, u32)>, out: &mut Vec<Vec<(usize, u32)>>) {
        if start == n {
            if left == 0 {
                out.push(cur.clone());
            }
            return;
        }
        for e in (0..=left).rev() {
            if e > 0 {
                cur.push((n + start, e));
            }
            dtheta(n, start + 1, left - e, cur, out);
            if e > 0 {
                cur.pop();
            }
        }
    }
    let mut ds = Vec::new();
    dtheta(n, 0, k, &mut Vec::new(), &mut ds);
    let mut out = Vec::new();
    for subset in 0..(1u32 << n) {
        for d in &ds {
            let mut f: Vec<(usize, u32)> = (0..n).filter(|i| subset & (1 << i) != 0).map(|i| (i, 1)).collect();
            f.extend(d.iter().copied());
            out.push(Monomial::from_factors(f));
        }
    }
    out
}

pub fn closed_forms(n: usize, k: u32) -> ClosedForms {
    let names: Vec<GenSpec> = (0..n)
        .map(|i| {
            GenSpec::odd(
                if n == 1 {
                    "θ".to_string()
                } else {
                    format!("θ{}", i + 1)
                },
                0,
            )
        })
        .collect();
    let tangent = pit(&GradedManifold::new(names).expect("distinct names"));
    let alg = tangent.algebra().clone();
    let d = tangent.d();
    let monos = form_monomials(n, k);
    let images: Vec<Element> = monos
        .iter()
        .map(|m| d.apply(&Element::monomial(&alg, m.clone(), One::one())))
        .collect();
    let mut rows: BTreeMap<Monomial, usize> = BTreeMap::new();
    for e in &images {
        for m in e.terms().keys() {
            let next = rows.len();
            rows.entry(m.clone()).or_insert(next);
        }
    }
    let mut matrix = Matrix::zeros(rows.len(), monos.len());
    for (c, e) in images.iter().enumerate() {
        for (m, v) in e.terms() {
            matrix.set(rows[m], c, v.clone());
        }
    }
    let basis = matrix
        .nullspace()
        .into_iter()
        .map(|v| {
            let lead = v
                .iter()
                .find(|x| !x.is_zero())
                .cloned()
                .expect("nullspace vectors are nonzero");
            Element::from_terms(&alg, monos.iter().cloned().zip(v.into_iter().map(|x| x / &lead)))
        })
        .collect();
    ClosedForms {
        algebra: alg,
        form_degree: k,
        ambient_dim: monos.len(),
        basis,
    }
}

/// Closed `k`-forms on the odd line `ℝ^{0|1}`: spanned by `(dθ)^k`.
pub fn closed_forms_jet(k: u32) -> ClosedForms {
    closed_forms(1, k)
}
