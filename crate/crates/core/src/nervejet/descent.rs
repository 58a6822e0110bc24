use std::sync::Arc;

use super::{NerveError, PolyGroupLaw};
use crate::dgman::{relative_forms, GradedManifold};
use crate::linfty::mc_residual;
use crate::solve::{eliminate, Elimination, Pivot};
use crate::superalg::{Algebra, AlgebraMorphism, Derivation, Element, GenSpec, Monomial, Parity};

/// Descent data and flat connections on the fiber `ℝ^{0|1}` over the odd
/// parameter space `ℝ^{0|q}`, both solved for generically.
///
/// A descent datum is `g(θ₁, θ₂)` with `g(θ, θ) = e` and
/// `g(θ₁,θ₂)·g(θ₂,θ₃) = g(θ₁,θ₃)`; a connection is `α = (A₀ + A₁θ)dθ`
/// satisfying the Maurer–Cartan equation. Every coefficient is expanded in
/// the parameters `p₁, …, p_q` with an unknown rational coefficient.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DescentMc {
    law: PolyGroupLaw,
    q: usize,
    alg: Arc<Algebra>,
    d: Derivation,
    descent: Elimination,
    connection: Elimination,
    generic_descent: Vec<Element>,
    generic_connection: Vec<Element>,
}

/// Outcome of checking that the two solution sets correspond.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BijectionReport {
    pub q: usize,
    /// Number of free rational coordinates on the descent data.
    pub descent_dim: usize,
    /// Number of free rational coordinates on the flat connections.
    pub connection_dim: usize,
    /// The generic descent datum maps to a flat connection.
    pub forward_ok: bool,
    /// The generic flat connection maps to a descent datum.
    pub backward_ok: bool,
    /// Both composites are the identity on the generic solutions.
    pub round_trip_ok: bool,
}

impl BijectionReport {
    pub fn is_ok(&self) -> bool {
        self.forward_ok && self.backward_ok && self.round_trip_ok && self.descent_dim == self.connection_dim
    }
}

/// Parameter monomials `p^I` with `|I|` of the given parity, as index sets.
fn subsets(q: usize, parity: Parity) -> Vec<Vec<usize>> {
    (0..1usize << q)
        .filter(|m| (m.count_ones() % 2 == 1) == parity.is_odd())
        .map(|m| (0..q).filter(|i| m & (1 << i) != 0).collect())
        .collect()
}

fn tag(set: &[usize]) -> String {
    set.iter().map(|i| (i + 1).to_string()).collect()
}

// fixed generator positions: θ, dθ, θ₁, θ₂, θ₃, then the parameters
const THETA: usize = 0;
const DTHETA: usize = 1;
const T1: usize = 2;
const T2: usize = 3;
const T3: usize = 4;
const P0: usize = 5;

impl DescentMc {
    pub fn new(law: &PolyGroupLaw, q: usize) -> Result<Self, NerveError> {
        let names = law.names();
        let mut params = vec![GenSpec::odd("θ₁", 0), GenSpec::odd("θ₂", 0), GenSpec::odd("θ₃", 0)];
        params.extend((1..=q).map(|i| GenSpec::odd(format!("p{i}"), 0)));
        // (component, slot, parameter set, symbol name)
        let mut descent_slots = Vec::new();
        for (slot, parity) in [
            ("u", Parity::Even),
            ("a", Parity::Odd),
            ("b", Parity::Odd),
            ("w", Parity::Even),
        ] {
            for (k, x) in names.iter().enumerate() {
                for set in subsets(q, parity) {
                    descent_slots.push((k, slot, set.clone(), format!("g{slot}_{x}_{}", tag(&set))));
                }
            }
        }
        let mut connection_slots = Vec::new();
        for (slot, parity) in [("0", Parity::Odd), ("1", Parity::Even)] {
            for (k, x) in names.iter().enumerate() {
                for set in subsets(q, parity) {
                    connection_slots.push((k, slot, set.clone(), format!("A{slot}_{x}_{}", tag(&set))));
                }
            }
        }
        let first_symbol = P0 + q;
        params.extend(
            descent_slots
                .iter()
                .chain(&connection_slots)
                .map(|s| GenSpec::even(s.3.clone(), 0)),
        );
        let fiber = GradedManifold::new(vec![GenSpec::odd("θ", 0)]).map_err(NerveError::Algebra)?;
        let (alg, d) = relative_forms(&fiber, params).map_err(NerveError::Algebra)?;
        let gen = |i: usize| Element::generator(&alg, i);
        let pmono = |set: &[usize]| set.iter().fold(Element::one(&alg), |acc, i| acc * gen(P0 + i));
        let n = law.dim();
        let descent_symbols: Vec<usize> = (first_symbol..first_symbol + descent_slots.len()).collect();
        let connection_symbols: Vec<usize> =
            (first_symbol + descent_slots.len()..first_symbol + descent_slots.len() + connection_slots.len()).collect();

        let mut g_slots = vec![
            [
                Element::zero(&alg),
                Element::zero(&alg),
                Element::zero(&alg),
                Element::zero(&alg)
            ];
            n
        ];
        for (idx, (k, slot, set, _)) in descent_slots.iter().enumerate() {
            let s = ["u", "a", "b", "w"].iter().position(|x| x == slot).expect("known slot");
            g_slots[*k][s] = &g_slots[*k][s] + gen(descent_symbols[idx]) * pmono(set);
        }
        let gamma = |x: &Element, y: &Element| -> Vec<Element> {
            g_slots
                .iter()
                .map(|c| &c[0] + &c[1] * x + &c[2] * y + &c[3] * x * y)
                .collect()
        };
        let generic_g = gamma(&gen(T1), &gen(T2));

        let mut a_slots = vec![[Element::zero(&alg), Element::zero(&alg)]; n];
        for (idx, (k, slot, set, _)) in connection_slots.iter().enumerate() {
            let s = usize::from(*slot == "1");
            a_slots[*k][s] = &a_slots[*k][s] + gen(connection_symbols[idx]) * pmono(set);
        }
        let generic_a: Vec<Element> = a_slots
            .iter()
            .map(|c| (&c[0] + &c[1] * gen(THETA)) * gen(DTHETA))
            .collect();

        let mut out = DescentMc {
            law: law.clone(),
            q,
            alg: alg.clone(),
            d,
            descent: Elimination {
                solved: Default::default(),
                free: Vec::new(),
            },
            connection: Elimination {
                solved: Default::default(),
                free: Vec::new(),
            },
            generic_descent: Vec::new(),
            generic_connection: Vec::new(),
        };
        let structural = |i: usize| i < first_symbol;
        out.descent = eliminate(
            &out.descent_defects(&generic_g),
            &descent_symbols,
            structural,
            Pivot::Last,
        )?;
        out.connection = eliminate(
            &out.mc_defects(&generic_a)?,
            &connection_symbols,
            structural,
            Pivot::Last,
        )?;
        out.generic_descent = generic_g.iter().map(|e| out.descent.apply(e)).collect();
        out.generic_connection = generic_a.iter().map(|e| out.connection.apply(e)).collect();
        Ok(out)
    }

    pub fn algebra(&self) -> &Arc<Algebra> {
        &self.alg
    }

    /// The fiberwise de Rham differential.
    pub fn d(&self) -> &Derivation {
        &self.d
    }

    /// The parameter `p_i`, counted from 1.
    pub fn parameter(&self, i: usize) -> Element {
        assert!((1..=self.q).contains(&i), "parameter index out of range");
        Element::generator(&self.alg, P0 + i - 1)
    }

    /// `g(θ₁, θ₂)` with the descent equations solved; free symbols remain.
    pub fn generic_descent(&self) -> &[Element] {
        &self.generic_descent
    }

    /// `α` with the Maurer–Cartan equation solved; free symbols remain.
    pub fn generic_connection(&self) -> &[Element] {
        &self.generic_connection
    }

    pub fn descent_dim(&self) -> usize {
        self.descent.free.len()
    }

    pub fn connection_dim(&self) -> usize {
        self.connection.free.len()
    }

    fn restrict(&self, e: &Element, images: &[(usize, usize)]) -> Element {
        let mut all: Vec<Element> = (0..self.alg.len()).map(|i| Element::generator(&self.alg, i)).collect();
        for &(from, to) in images {
            all[from] = Element::generator(&self.alg, to);
        }
        AlgebraMorphism::new(&self.alg, &self.alg, all)
            .expect("θ variables share degree and parity")
            .apply(e)
    }

    /// Degeneracy `g(θ, θ)` followed by the cocycle defect
    /// `g(θ₁,θ₂)·g(θ₂,θ₃) - g(θ₁,θ₃)`, for `g` written in `θ₁, θ₂`.
    pub fn descent_defects(&self, g: &[Element]) -> Vec<Element> {
        let at = |x: usize, y: usize| -> Vec<Element> {
            g.iter()
                .map(|e| {
                    // route through θ₃ so that swapped targets do not collide
                    let parked = self.restrict(e, &[(T2, T3)]);
                    let first = self.restrict(&parked, &[(T1, x)]);
                    self.restrict(&first, &[(T3, y)])
                })
                .collect()
        };
        let diag = at(T1, T1);
        let prod = self.law.multiply_in(&self.alg, &at(T1, T2), &at(T2, T3));
        diag.into_iter()
            .chain(prod.into_iter().zip(at(T1, T3)).map(|(l, r)| l - r))
            .collect()
    }

    /// The Maurer–Cartan residual of `α` for the Lie algebra of the group.
    pub fn mc_defects(&self, alpha: &[Element]) -> Result<Vec<Element>, NerveError> {
        Ok(mc_residual(alpha, &self.law.lie_algebra().linfty(), &self.d)?)
    }

    /// `α = (∂_{θ₂} g)(θ, θ)·dθ`.
    pub fn to_connection(&self, g: &[Element]) -> Vec<Element> {
        let partial = Derivation::partial(&self.alg, T2);
        g.iter()
            .map(|e| {
                self.restrict(&partial.apply(e), &[(T1, THETA), (T2, THETA)]) * Element::generator(&self.alg, DTHETA)
            })
            .collect()
    }

    /// `g(θ₁, θ₂) = A₀(θ₁ - θ₂) - A₁θ₁θ₂` for `α = (A₀ + A₁θ)dθ`, with `A₀` odd on the left.
    pub fn to_descent(&self, alpha: &[Element]) -> Vec<Element> {
        let t = |i: usize| Element::generator(&self.alg, i);
        alpha
            .iter()
            .map(|e| {
                let x = e.right_coefficient(&Monomial::generator(DTHETA), |i| i == DTHETA);
                let a1 = x.right_coefficient(&Monomial::generator(THETA), |i| i == THETA);
                let a0 = x.filter(|m| m.exponent(THETA) == 0);
                a0 * (t(T1) - t(T2)) - a1 * t(T1) * t(T2)
            })
            .collect()
    }

    pub fn report(&self) -> Result<BijectionReport, NerveError> {
        let forward = self.to_connection(&self.generic_descent);
        let backward = self.to_descent(&self.generic_connection);
        let forward_ok = self.mc_defects(&forward)?.iter().all(Element::is_zero);
        let backward_ok = self.descent_defects(&backward).iter().all(Element::is_zero);
        let round_trip_ok = self.to_descent(&forward) == self.generic_descent
            && self.to_connection(&backward) == self.generic_connection;
        Ok(BijectionReport {
            q: self.q,
            descent_dim: self.descent_dim(),
            connection_dim: self.connection_dim(),
            forward_ok,
            backward_ok,
            round_trip_ok,
        })
    }
}

pub fn descent_mc_bijection(law: &PolyGroupLaw, q: usize) -> Result<BijectionReport, NerveError> {
    DescentMc::new(law, q)?.report()
}
