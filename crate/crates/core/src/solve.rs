//! Exact solution of polynomial systems that are affine in a set of
//! scalar unknowns.
//!
//! Unknowns are even generators of degree 0 standing for rational numbers.
//! Each equation is expanded in the remaining generators, and every
//! coefficient gives one linear equation in the unknowns.

use std::collections::BTreeMap;
use std::sync::Arc;

use num_traits::{One, Zero};
use thiserror::Error;

use crate::linalg::Matrix;
use crate::superalg::{Algebra, AlgebraMorphism, Element, Monomial, Parity, Scalar};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SolveError {
    #[error("unknown `{0}` must be an even generator of degree 0")]
    BadUnknown(String),
    #[error("equation is not affine in the unknowns: term `{0}`")]
    NonLinear(String),
    #[error("no unknown can be eliminated from the remaining equation `{0}`")]
    Stuck(String),
    #[error("eliminating `{unknown}` changes parity")]
    Parity { unknown: String },
}

/// A solution with free unknowns set to zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AffineSolution {
    pub values: Vec<(usize, Scalar)>,
    /// Dimension of the solution space.
    pub nullity: usize,
}

impl AffineSolution {
    /// Substitutes the solved values into `e`.
    pub fn apply(&self, e: &Element) -> Element {
        let alg = e.algebra();
        let mut images: Vec<Element> = (0..alg.len()).map(|i| Element::generator(alg, i)).collect();
        for (u, v) in &self.values {
            images[*u] = Element::scalar(alg, v.clone());
        }
        AlgebraMorphism::new(alg, alg, images)
            .expect("scalars have degree 0 and even parity")
            .apply(e)
    }
}

/// Solves `equations = 0` for the `unknowns`, or returns `None` when the
/// system is inconsistent.
pub fn solve_affine(
    alg: &Arc<Algebra>,
    equations: &[Element],
    unknowns: &[usize],
) -> Result<Option<AffineSolution>, SolveError> {
    for &u in unknowns {
        let g = alg.gen(u);
        if g.degree != 0 || g.parity != Parity::Even {
            return Err(SolveError::BadUnknown(g.name.clone()));
        }
    }
    let col: BTreeMap<usize, usize> = unknowns.iter().enumerate().map(|(k, &u)| (u, k)).collect();
    // (equation, monomial in other generators) -> (coefficients, constant)
    let mut rows: BTreeMap<(usize, Monomial), (Vec<Scalar>, Scalar)> = BTreeMap::new();
    for (q, eq) in equations.iter().enumerate() {
        for (m, c) in eq.terms() {
            let (_, rest, picked) = m.split_right(alg, |g| col.contains_key(&g));
            let entry = rows
                .entry((q, rest))
                .or_insert_with(|| (vec![Scalar::zero(); unknowns.len()], Scalar::zero()));
            match picked.factors() {
                [] => entry.1 -= c,
                [(u, 1)] => entry.0[col[u]] += c,
                _ => {
                    return Err(SolveError::NonLinear(
                        Element::monomial(alg, m.clone(), c.clone()).to_string(),
                    ))
                }
            }
        }
    }
    let (a, b): (Vec<Vec<Scalar>>, Vec<Scalar>) = rows.into_values().unzip();
    let matrix = if a.is_empty() {
        Matrix::zeros(0, unknowns.len())
    } else {
        Matrix::from_rows(a)
    };
    let Some(x) = matrix.solve(&b) else {
        return Ok(None);
    };
    let nullity = unknowns.len() - matrix.rank();
    Ok(Some(AffineSolution {
        values: unknowns.iter().copied().zip(x).collect(),
        nullity,
    }))
}

/// Which unknown to eliminate when a row offers several; this fixes the
/// splitting of the solution space into pivots and free coordinates.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Pivot {
    /// The last eligible unknown in declaration order; earlier ones stay free.
    #[default]
    Last,
    First,
}

/// A polynomial parametrization of a solution set by its free unknowns.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Elimination {
    /// Each eliminated unknown as a polynomial in the free unknowns.
    pub solved: BTreeMap<usize, Element>,
    /// Unknowns left as coordinates on the solution set, in declaration order.
    pub free: Vec<usize>,
}

impl Elimination {
    /// Substitutes every eliminated unknown into `e`.
    pub fn apply(&self, e: &Element) -> Element {
        substitution(e.algebra(), &self.solved).apply(e)
    }
}

fn substitution(alg: &Arc<Algebra>, values: &BTreeMap<usize, Element>) -> AlgebraMorphism {
    let images = (0..alg.len())
        .map(|i| values.get(&i).cloned().unwrap_or_else(|| Element::generator(alg, i)))
        .collect();
    AlgebraMorphism::new_ungraded(alg, alg, images).expect("eliminations preserve parity")
}

/// Coefficient `c` when `row = c·u + R` with `R` free of `u` and `c` a nonzero scalar.
fn linear_coefficient(row: &Element, u: usize) -> Option<Scalar> {
    let target = Monomial::generator(u);
    let mut found = None;
    for (m, c) in row.terms() {
        if m.exponent(u) > 0 {
            if *m != target {
                return None;
            }
            found = Some(c.clone());
        }
    }
    found
}

/// Solves polynomial equations by repeatedly eliminating an unknown that
/// occurs in some row only as `c·u` with `c` a nonzero scalar.
///
/// Each equation is first split into rows, one per monomial in the
/// `structural` generators (read as a right factor). Unknowns may have any
/// parity. Fails when rows remain that admit no such elimination.
pub fn eliminate(
    equations: &[Element],
    unknowns: &[usize],
    structural: impl Fn(usize) -> bool,
    pivot: Pivot,
) -> Result<Elimination, SolveError> {
    let Some(alg) = equations.first().map(|e| e.algebra().clone()) else {
        return Ok(Elimination {
            solved: BTreeMap::new(),
            free: unknowns.to_vec(),
        });
    };
    let mut rows: Vec<Element> = equations
        .iter()
        .flat_map(|e| e.split_right(&structural).into_values())
        .filter(|r| !r.is_zero())
        .collect();
    let order: Vec<usize> = match pivot {
        Pivot::Last => unknowns.iter().rev().copied().collect(),
        Pivot::First => unknowns.to_vec(),
    };
    let mut solved: BTreeMap<usize, Element> = BTreeMap::new();
    loop {
        let choice = rows.iter().find_map(|row| {
            order
                .iter()
                .filter(|u| !solved.contains_key(u))
                .find_map(|&u| linear_coefficient(row, u).map(|c| (row.clone(), u, c)))
        });
        let Some((row, u, c)) = choice else { break };
        let value = (Element::generator(&alg, u).scale(&c) - &row).scale(&(Scalar::one() / c));
        if value.parity().is_some_and(|p| p != alg.gen(u).parity) {
            return Err(SolveError::Parity {
                unknown: alg.gen(u).name.clone(),
            });
        }
        let step = substitution(&alg, &BTreeMap::from([(u, value.clone())]));
        for v in solved.values_mut() {
            *v = step.apply(v);
        }
        solved.insert(u, value);
        rows = rows.iter().map(|r| step.apply(r)).filter(|r| !r.is_zero()).collect();
    }
    if let Some(r) = rows.first() {
        return Err(SolveError::Stuck(r.to_string()));
    }
    let free = unknowns.iter().copied().filter(|u| !solved.contains_key(u)).collect();
    Ok(Elimination { solved, free })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::superalg::{frac, GenSpec};

    #[test]
    fn solves_with_odd_coefficients() {
        let alg = Algebra::new(vec![
            GenSpec::even("u", 0),
            GenSpec::even("v", 0),
            GenSpec::odd("p", 0),
            GenSpec::odd("q", 0),
        ])
        .unwrap();
        let eqs = [
            Element::parse(&alg, "2*u*p*q - p*q").unwrap(),
            Element::parse(&alg, "p*v + 3*p").unwrap(),
        ];
        let sol = solve_affine(&alg, &eqs, &[0, 1]).unwrap().unwrap();
        assert_eq!(sol.values, vec![(0, frac(1, 2)), (1, frac(-3, 1))]);
        assert_eq!(sol.nullity, 0);
        assert!(eqs.iter().all(|e| sol.apply(e).is_zero()));
    }

    #[test]
    fn inconsistent_and_nonlinear() {
        let alg = Algebra::new(vec![GenSpec::even("u", 0), GenSpec::odd("p", 0)]).unwrap();
        let eqs = [
            Element::parse(&alg, "u - 1").unwrap(),
            Element::parse(&alg, "u - 2").unwrap(),
        ];
        assert_eq!(solve_affine(&alg, &eqs, &[0]).unwrap(), None);
        let sq = [Element::parse(&alg, "u^2").unwrap()];
        assert!(matches!(solve_affine(&alg, &sq, &[0]), Err(SolveError::NonLinear(_))));
        assert!(matches!(solve_affine(&alg, &sq, &[1]), Err(SolveError::BadUnknown(_))));
    }
}

#[cfg(test)]
mod elimination_tests {
    use super::*;
    use crate::superalg::GenSpec;

    #[test]
    fn eliminates_with_polynomial_right_hand_sides() {
        let alg = Algebra::new(vec![
            GenSpec::odd("a", 0),
            GenSpec::odd("b", 0),
            GenSpec::even("w", 0),
            GenSpec::odd("θ", 0),
        ])
        .unwrap();
        // (a + b)θ = 0 and w = a b
        let eqs = [
            Element::parse(&alg, "a*θ + b*θ").unwrap(),
            Element::parse(&alg, "2*w - 2*a*b").unwrap(),
        ];
        let last = eliminate(&eqs, &[0, 1, 2], |g| g == 3, Pivot::Last).unwrap();
        assert_eq!(last.free, vec![0]);
        assert_eq!(last.solved[&1], Element::parse(&alg, "-a").unwrap());
        // a b with b = -a vanishes
        assert!(last.solved[&2].is_zero());
        let first = eliminate(&eqs, &[0, 1, 2], |g| g == 3, Pivot::First).unwrap();
        assert_eq!(first.free, vec![1]);
        assert!(eqs.iter().all(|e| first.apply(e).is_zero()));
    }

    #[test]
    fn reports_stuck_rows() {
        let alg = Algebra::new(vec![GenSpec::even("u", 0)]).unwrap();
        let eqs = [Element::parse(&alg, "u^2 - 1").unwrap()];
        assert!(matches!(
            eliminate(&eqs, &[0], |_| false, Pivot::Last),
            Err(SolveError::Stuck(_))
        ));
    }
}
