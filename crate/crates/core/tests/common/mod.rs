#![allow(dead_code)]

use std::sync::Arc;

use jetalg::superalg::{int, Algebra, Derivation, Element, GenSpec, Monomial, Parity};
use proptest::prelude::*;

/// Generators of mixed degree and parity, including an odd degree-0 one.
pub fn mixed_algebra() -> Arc<Algebra> {
    Algebra::new(vec![
        GenSpec::even("x", 0),
        GenSpec::odd("a", 1),
        GenSpec::odd("θ", 0),
        GenSpec::even("e", 1),
        GenSpec::odd("b", -1),
        GenSpec::even("y", 2),
    ])
    .unwrap()
}

pub type ElementSpec = Vec<(Vec<u32>, i64)>;

pub fn element_spec(gens: usize) -> impl Strategy<Value = ElementSpec> {
    prop::collection::vec((prop::collection::vec(0u32..3, gens), -3i64..=3), 0..4)
}

/// Builds `Σ c·Π g_i^{e_i}`, keeping only monomials of the requested parity.
pub fn element_from(alg: &Arc<Algebra>, spec: &ElementSpec, parity: Option<Parity>) -> Element {
    let mut out = Element::zero(alg);
    for (exps, c) in spec {
        let factors: Vec<(usize, u32)> = exps
            .iter()
            .enumerate()
            .map(|(g, &e)| (g, if alg.gen(g).parity.is_odd() { e.min(1) } else { e }))
            .filter(|f| f.1 > 0)
            .collect();
        let m = Monomial::from_factors(factors);
        if parity.is_none_or(|p| m.parity(alg) == p) {
            out = out + Element::monomial(alg, m, int(*c));
        }
    }
    out
}

/// A derivation of the given parity whose values have matching parity.
pub fn derivation_from(alg: &Arc<Algebra>, specs: &[ElementSpec], parity: Parity, degree: i32) -> Derivation {
    let values = (0..alg.len())
        .map(|i| element_from(alg, &specs[i], Some(alg.gen(i).parity + parity)))
        .collect();
    Derivation::new(alg, degree, parity, values).unwrap()
}

pub fn parity_strategy() -> impl Strategy<Value = Parity> {
    prop_oneof![Just(Parity::Even), Just(Parity::Odd)]
}
