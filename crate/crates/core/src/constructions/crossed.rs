use std::fmt;

use super::ConstructionError;
use crate::linfty::{dual_coordinate, vector, BasisVector, LInftyAlgebra, LieAlgebra, Vector};
use crate::superalg::{format_scalar, int, Scalar};

/// The identities a crossed module of Lie algebras must satisfy.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CrossedModuleAxiom {
    JacobiG,
    JacobiH,
    /// `m([h, h']) = [m h, m h']`
    LieMap,
    /// `m(μ(x) h) = [x, m h]`
    Equivariance,
    /// `μ(m h) h' = [h, h']`
    Peiffer,
    /// `μ(x)[h, h'] = [μ(x) h, h'] + [h, μ(x) h']`
    ActsByDerivations,
    /// `μ([x, y]) = μ(x) μ(y) - μ(y) μ(x)`
    Representation,
}

impl fmt::Display for CrossedModuleAxiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CrossedModuleAxiom::JacobiG => "Jacobi identity of g",
            CrossedModuleAxiom::JacobiH => "Jacobi identity of h",
            CrossedModuleAxiom::LieMap => "m is a Lie algebra map: m([h,h']) = [m h, m h']",
            CrossedModuleAxiom::Equivariance => "equivariance: m(mu(x) h) = [x, m h]",
            CrossedModuleAxiom::Peiffer => "Peiffer identity: mu(m h) h' = [h, h']",
            CrossedModuleAxiom::ActsByDerivations => {
                "mu acts by derivations: mu(x)[h,h'] = [mu(x)h, h'] + [h, mu(x)h']"
            }
            CrossedModuleAxiom::Representation => "mu is a representation: mu([x,y]) = [mu(x), mu(y)]",
        })
    }
}

/// A crossed module of Lie algebras `m: 𝔥 → 𝔤` with an action `μ` of `𝔤` on `𝔥`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CrossedModule {
    g: LieAlgebra,
    h: LieAlgebra,
    /// `m[a]` is the image of the basis vector `h_a` in `𝔤`.
    m: Vec<Vector>,
    /// `mu[x][a]` is `μ(g_x)(h_a)` in `𝔥`.
    mu: Vec<Vec<Vector>>,
}

fn scale(v: &Vector, c: &Scalar) -> Vector {
    vector(v.iter().map(|(i, x)| (*i, x * c)))
}

fn add(a: &Vector, b: &Vector) -> Vector {
    vector(a.iter().chain(b).map(|(i, x)| (*i, x.clone())))
}

fn sub(a: &Vector, b: &Vector) -> Vector {
    add(a, &scale(b, &int(-1)))
}

impl CrossedModule {
    /// Checks every axiom; the error lists each violated identity with a witness.
    pub fn new(g: LieAlgebra, h: LieAlgebra, m: Vec<Vector>, mu: Vec<Vec<Vector>>) -> Result<Self, ConstructionError> {
        let cm = Self::new_unchecked(g, h, m, mu);
        let violations = cm.violations();
        if !violations.is_empty() {
            return Err(ConstructionError::CrossedModule(violations));
        }
        Ok(cm)
    }

    /// Skips the axiom checks, so that `to_dgla` can be exercised on broken data.
    pub fn new_unchecked(g: LieAlgebra, h: LieAlgebra, m: Vec<Vector>, mu: Vec<Vec<Vector>>) -> Self {
        assert_eq!(m.len(), h.dim(), "m needs one image per basis vector of h");
        assert!(
            mu.len() == g.dim() && mu.iter().all(|r| r.len() == h.dim()),
            "mu must be dim g × dim h"
        );
        CrossedModule { g, h, m, mu }
    }

    pub fn m(&self) -> &[Vector] {
        &self.m
    }

    pub fn mu(&self) -> &[Vec<Vector>] {
        &self.mu
    }

    pub fn g(&self) -> &LieAlgebra {
        &self.g
    }

    pub fn h(&self) -> &LieAlgebra {
        &self.h
    }

    /// `m` applied to a vector of `𝔥`.
    pub fn m_of(&self, v: &Vector) -> Vector {
        vector(
            v.iter()
                .flat_map(|(a, c)| self.m[*a].iter().map(move |(x, y)| (*x, c * y))),
        )
    }

    /// `μ(u)(v)` for `u ∈ 𝔤`, `v ∈ 𝔥`.
    pub fn act(&self, u: &Vector, v: &Vector) -> Vector {
        vector(u.iter().flat_map(|(x, c)| {
            v.iter()
                .flat_map(move |(a, d)| self.mu[*x][*a].iter().map(move |(b, y)| (*b, c * d * y)))
        }))
    }

    /// All violated axioms, in a fixed order, with a witness for each.
    pub fn violations(&self) -> Vec<(CrossedModuleAxiom, String)> {
        let e = |i: usize| vector([(i, int(1))]);
        let show = |v: &Vector| {
            v.iter()
                .map(|(i, c)| format!("{}:{}", i, format_scalar(c)))
                .collect::<Vec<_>>()
                .join(",")
        };
        let gn = self.g.names();
        let hn = self.h.names();
        let mut out = Vec::new();
        if let Some((i, j, k, v)) = self.g.jacobi_violation() {
            out.push((
                CrossedModuleAxiom::JacobiG,
                format!("({}, {}, {}) gives [{}]", gn[i], gn[j], gn[k], show(&v)),
            ));
        }
        if let Some((i, j, k, v)) = self.h.jacobi_violation() {
            out.push((
                CrossedModuleAxiom::JacobiH,
                format!("({}, {}, {}) gives [{}]", hn[i], hn[j], hn[k], show(&v)),
            ));
        }
        let (ng, nh) = (self.g.dim(), self.h.dim());
        let mut first = |axiom: CrossedModuleAxiom, witness: Option<String>| {
            if let Some(w) = witness {
                out.push((axiom, w));
            }
        };
        let pairs_h = || (0..nh).flat_map(move |a| (0..nh).map(move |b| (a, b)));
        let pairs_gh = || (0..ng).flat_map(move |x| (0..nh).map(move |a| (x, a)));
        first(
            CrossedModuleAxiom::LieMap,
            pairs_h()
                .find(|&(a, b)| {
                    self.m_of(self.h.bracket(a, b)) != self.g.bracket_vectors(&self.m_of(&e(a)), &self.m_of(&e(b)))
                })
                .map(|(a, b)| format!("h = {}, h' = {}", hn[a], hn[b])),
        );
        first(
            CrossedModuleAxiom::Equivariance,
            pairs_gh()
                .find(|&(x, a)| self.m_of(&self.act(&e(x), &e(a))) != self.g.bracket_vectors(&e(x), &self.m_of(&e(a))))
                .map(|(x, a)| format!("x = {}, h = {}", gn[x], hn[a])),
        );
        first(
            CrossedModuleAxiom::Peiffer,
            pairs_h()
                .find(|&(a, b)| &self.act(&self.m_of(&e(a)), &e(b)) != self.h.bracket(a, b))
                .map(|(a, b)| format!("h = {}, h' = {}", hn[a], hn[b])),
        );
        first(
            CrossedModuleAxiom::ActsByDerivations,
            (0..ng)
                .flat_map(|x| pairs_h().map(move |(a, b)| (x, a, b)))
                .find(|&(x, a, b)| {
                    let lhs = self.act(&e(x), self.h.bracket(a, b));
                    let rhs = add(
                        &self.h.bracket_vectors(&self.act(&e(x), &e(a)), &e(b)),
                        &self.h.bracket_vectors(&e(a), &self.act(&e(x), &e(b))),
                    );
                    lhs != rhs
                })
                .map(|(x, a, b)| format!("x = {}, h = {}, h' = {}", gn[x], hn[a], hn[b])),
        );
        first(
            CrossedModuleAxiom::Representation,
            (0..ng)
                .flat_map(|x| (0..ng).flat_map(move |y| (0..nh).map(move |a| (x, y, a))))
                .find(|&(x, y, a)| {
                    let lhs = self.act(self.g.bracket(x, y), &e(a));
                    let rhs = sub(
                        &self.act(&e(x), &self.act(&e(y), &e(a))),
                        &self.act(&e(y), &self.act(&e(x), &e(a))),
                    );
                    lhs != rhs
                })
                .map(|(x, y, a)| format!("x = {}, y = {}, h = {}", gn[x], gn[y], hn[a])),
        );
        out
    }

    /// The DGLA `𝔥 → 𝔤` with `𝔥` in degree -1: `l_1 = m`, `l_2` the bracket
    /// of `𝔤` and `l_2(x, h) = μ(x) h`.
    pub fn to_dgla(&self) -> LInftyAlgebra {
        let ng = self.g.dim();
        let basis: Vec<BasisVector> = self
            .g
            .names()
            .iter()
            .map(|n| BasisVector::graded(n.clone(), dual_coordinate(n), 0))
            .chain(
                self.h
                    .names()
                    .iter()
                    .map(|n| BasisVector::graded(n.clone(), dual_coordinate(n), -1)),
            )
            .collect();
        let mut l = LInftyAlgebra::new(basis).expect("crossed module basis names must be distinct");
        for a in 0..self.h.dim() {
            l.set_bracket(&[ng + a], self.m[a].clone()).expect("degree-consistent");
        }
        for x in 0..ng {
            for y in x + 1..ng {
                l.set_bracket(&[x, y], self.g.bracket(x, y).clone())
                    .expect("degree-consistent");
            }
            for a in 0..self.h.dim() {
                let shifted = self.mu[x][a].iter().map(|(b, c)| (ng + b, c.clone()));
                l.set_bracket(&[x, ng + a], vector(shifted)).expect("degree-consistent");
            }
        }
        l
    }
}

pub fn crossed_to_dgla(cm: &CrossedModule) -> LInftyAlgebra {
    cm.to_dgla()
}

/// `𝔥 = 𝔤` with `m = id` and `μ = ad`.
pub fn adjoint_crossed_module(g: &LieAlgebra, h_names: Vec<String>) -> Result<CrossedModule, ConstructionError> {
    let n = g.dim();
    let h = LieAlgebra::from_brackets(
        h_names,
        &(0..n)
            .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
            .map(|(i, j)| (i, j, g.bracket(i, j).clone()))
            .collect::<Vec<_>>(),
    );
    let m = (0..n).map(|a| vector([(a, int(1))])).collect();
    let mu = (0..n)
        .map(|x| (0..n).map(|a| g.bracket(x, a).clone()).collect())
        .collect();
    CrossedModule::new(g.clone(), h, m, mu)
}
