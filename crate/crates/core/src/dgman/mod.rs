//! Graded manifolds in a single polynomial chart, the odd tangent functor
//! `ΠT`, and the action of the semigroup of self-maps of the odd line.
//!
//! A map `f: X → Y` is represented by its pullback on coordinates, i.e. an
//! [`AlgebraMorphism`] from the functions on `Y` to the functions on `X`.

mod tangent;

use std::sync::Arc;

use crate::superalg::{
    Algebra, AlgebraError, AlgebraMorphism, Derivation, Element, GenSpec, GradingViolation, Parity, Scalar,
};

pub use tangent::{pit, pit_iter, pit_map, taylor_coefficients, OddTangent, SemigroupElement};

/// A graded manifold with one global chart; functions form the free graded
/// supercommutative algebra on the coordinates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedManifold {
    alg: Arc<Algebra>,
}

impl GradedManifold {
    pub fn new(coordinates: Vec<GenSpec>) -> Result<Self, AlgebraError> {
        Ok(GradedManifold {
            alg: Algebra::new(coordinates)?,
        })
    }

    pub fn from_algebra(alg: Arc<Algebra>) -> Self {
        GradedManifold { alg }
    }

    pub fn algebra(&self) -> &Arc<Algebra> {
        &self.alg
    }

    pub fn coordinates(&self) -> &[GenSpec] {
        self.alg.gens()
    }

    pub fn dim(&self) -> usize {
        self.alg.len()
    }

    pub fn coordinate(&self, name: &str) -> Element {
        Element::var(&self.alg, name)
    }

    /// Every coordinate has parity equal to its degree mod 2.
    pub fn is_dg_manifold(&self) -> bool {
        self.alg.parity_follows_degree()
    }

    pub fn is_nonnegatively_graded(&self) -> bool {
        self.alg.gens().iter().all(|g| g.degree >= 0)
    }
}

pub fn is_dg_manifold(x: &GradedManifold) -> bool {
    x.is_dg_manifold()
}

/// A grading problem found while checking a homological vector field.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GradingIssue {
    DeclaredDegree(i32),
    DeclaredParity(Parity),
    Value(GradingViolation),
}

impl std::fmt::Display for GradingIssue {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            GradingIssue::DeclaredDegree(d) => write!(f, "vector field has degree {d}, expected 1"),
            GradingIssue::DeclaredParity(p) => write!(f, "vector field is {p}, expected odd"),
            GradingIssue::Value(v) => write!(
                f,
                "value on `{}` is `{}`, expected degree {} and {} parity",
                v.generator, v.value, v.expected_degree, v.expected_parity
            ),
        }
    }
}

/// Outcome of [`check_q`]. Grading issues and the failure of `Q² = 0` are
/// reported independently.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QCheck {
    pub grading: Vec<GradingIssue>,
    /// First coordinate `x` with `Q(Q(x)) ≠ 0`, together with that value.
    pub square_witness: Option<(String, Element)>,
}

impl QCheck {
    pub fn is_ok(&self) -> bool {
        self.grading.is_empty() && self.square_witness.is_none()
    }
}

/// Checks that `q` is a homological vector field: odd, of degree 1, and
/// squaring to zero on every coordinate.
pub fn check_q(q: &Derivation) -> QCheck {
    let mut grading = Vec::new();
    if q.degree() != 1 {
        grading.push(GradingIssue::DeclaredDegree(q.degree()));
    }
    if q.parity() != Parity::Odd {
        grading.push(GradingIssue::DeclaredParity(q.parity()));
    }
    grading.extend(q.grading_violations().into_iter().map(GradingIssue::Value));
    let alg = q.algebra();
    let square_witness = (0..alg.len()).find_map(|i| {
        let qq = q.apply(q.value(i));
        (!qq.is_zero()).then(|| (alg.gen(i).name.clone(), qq))
    });
    QCheck {
        grading,
        square_witness,
    }
}

/// A graded manifold with a homological vector field.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QManifold {
    manifold: GradedManifold,
    q: Derivation,
}

impl QManifold {
    /// Fails with the full check report when `q` is not homological.
    pub fn new(q: Derivation) -> Result<Self, Box<QCheck>> {
        let report = check_q(&q);
        if !report.is_ok() {
            return Err(Box::new(report));
        }
        Ok(QManifold {
            manifold: GradedManifold::from_algebra(q.algebra().clone()),
            q,
        })
    }

    pub fn manifold(&self) -> &GradedManifold {
        &self.manifold
    }

    pub fn q(&self) -> &Derivation {
        &self.q
    }
}

/// A name not yet used in `alg`, built from `stem` by appending primes.
pub(crate) fn fresh_name(alg: &Algebra, stem: &str) -> String {
    let mut name = stem.to_string();
    while alg.find(&name).is_some() {
        name.push('\'');
    }
    name
}

/// The Euler (degree) derivation: each generator is scaled by its degree.
pub fn degree_derivation(alg: &Arc<Algebra>) -> Derivation {
    let values = (0..alg.len())
        .map(|i| Element::generator(alg, i).scale(&Scalar::from_integer(alg.gen(i).degree.into())))
        .collect();
    Derivation::new(alg, 0, Parity::Even, values).expect("values built in the same algebra")
}

/// Relative differential forms `Ω(M → N)` for a fiber chart `M` and
/// parameters `N`: functions on `ΠT M` with the parameter generators
/// appended, and the fiberwise de Rham differential, which kills parameters.
pub fn relative_forms(
    fiber: &GradedManifold,
    params: Vec<GenSpec>,
) -> Result<(Arc<Algebra>, Derivation), AlgebraError> {
    let t = pit(fiber);
    let alg = t.with_parameters(params)?;
    let n = t.algebra().len();
    let values = (0..alg.len())
        .map(|i| {
            if i < n {
                t.d().value(i).transport(&alg).expect("prefix algebra")
            } else {
                Element::zero(&alg)
            }
        })
        .collect();
    Ok((alg.clone(), Derivation::new(&alg, 1, Parity::Odd, values)?))
}

/// The pullback of a coordinate change, checked to be invertible by
/// composing with the proposed inverse in both orders.
pub fn is_inverse_pair(f: &AlgebraMorphism, g: &AlgebraMorphism) -> bool {
    match (f.compose(g), g.compose(f)) {
        (Ok(fg), Ok(gf)) => fg == AlgebraMorphism::identity(g.source()) && gf == AlgebraMorphism::identity(f.source()),
        _ => false,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zero_field_is_homological() {
        let x = GradedManifold::new(vec![GenSpec::even("x", 0), GenSpec::odd("dx", 1)]).unwrap();
        let q = Derivation::zero(x.algebra(), 1, Parity::Odd);
        assert!(check_q(&q).is_ok());
    }

    #[test]
    fn swap_field_fails_both_ways() {
        let x = GradedManifold::new(vec![GenSpec::even("x", 0), GenSpec::odd("dx", 1)]).unwrap();
        let alg = x.algebra();
        let q = Derivation::from_named(
            alg,
            1,
            Parity::Odd,
            [("x", x.coordinate("dx")), ("dx", x.coordinate("x"))],
        )
        .unwrap();
        let report = check_q(&q);
        assert_eq!(report.square_witness, Some(("x".to_string(), x.coordinate("x"))));
        assert_eq!(report.grading.len(), 1);
        assert!(matches!(&report.grading[0], GradingIssue::Value(v) if v.generator == "dx"));
        assert!(QManifold::new(q).is_err());
    }

    #[test]
    fn declared_grading_checked() {
        let x = GradedManifold::new(vec![GenSpec::even("x", 0)]).unwrap();
        let q = Derivation::zero(x.algebra(), 2, Parity::Even);
        let report = check_q(&q);
        assert_eq!(
            report.grading,
            vec![
                GradingIssue::DeclaredDegree(2),
                GradingIssue::DeclaredParity(Parity::Even)
            ]
        );
        assert!(report.square_witness.is_none());
    }

    #[test]
    fn dg_manifold_predicate() {
        let lie = GradedManifold::new(vec![GenSpec::odd("ξ1", 1), GenSpec::odd("ξ2", 1)]).unwrap();
        assert!(is_dg_manifold(&lie));
        let superpoint = GradedManifold::new(vec![GenSpec::odd("θ", 0)]).unwrap();
        assert!(!is_dg_manifold(&superpoint));
        assert!(superpoint.is_nonnegatively_graded());
    }
}
