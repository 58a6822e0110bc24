//! L∞ algebras as homological vector fields on `V[1]`.
//!
//! A basis vector `e_a` of degree `|e_a|` and parity `p_a` gives the
//! coordinate `ξ^a` on `V[1]` of degree `1 - |e_a|` and parity `p_a + 1`.
//! The k-ary bracket `l_k` has degree `2 - k` and parity `k mod 2`, and is
//! graded antisymmetric with respect to the parities of its arguments.
//!
//! Tables are stored on nondecreasing index tuples, i.e. on monomials in the
//! coordinates: an index may repeat only when `e_a` is odd, because then
//! `ξ^a` is even and `l_k(…, e_a, e_a, …)` need not vanish.
//!
//! The vector field is
//! `Q(ξ^c) = -Σ_I ε(I) · l_k(e_{i_1}, …, e_{i_k})^c / m(I) · ξ^{i_1}⋯ξ^{i_k}`
//! summed over nondecreasing `I`, where `ε(I) = (-1)^{Σ_j (k-j)·p_{i_j}}` is the
//! décalage sign and `m(I)` is the product of factorials of the multiplicities.
//! For a Lie algebra this is the Chevalley–Eilenberg differential
//! `Q(ξ^k) = -½ c^k_{ij} ξ^i ξ^j`.

mod lie;
mod mc;

use std::collections::BTreeMap;
use std::sync::Arc;

use num_traits::{One, Zero};
use thiserror::Error;

use crate::superalg::{format_scalar, Algebra, AlgebraError, Derivation, Element, GenSpec, Monomial, Parity, Scalar};

pub(crate) use lie::dual_coordinate;
pub use lie::{ce_from_lie, LieAlgebra};
pub use mc::{dga_morphism_check, mc_check, mc_residual, McVerdict, MorphismVerdict};

/// A sparse vector in the basis of `V`.
pub type Vector = BTreeMap<usize, Scalar>;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BasisVector {
    pub name: String,
    /// Name of the dual coordinate on `V[1]`.
    pub coordinate: String,
    pub degree: i32,
    pub parity: Parity,
}

impl BasisVector {
    pub fn new(name: impl Into<String>, coordinate: impl Into<String>, degree: i32, parity: Parity) -> Self {
        BasisVector {
            name: name.into(),
            coordinate: coordinate.into(),
            degree,
            parity,
        }
    }

    /// Parity read off from the degree.
    pub fn graded(name: impl Into<String>, coordinate: impl Into<String>, degree: i32) -> Self {
        Self::new(name, coordinate, degree, Parity::of_degree(degree))
    }

    /// The basis vector dual to a coordinate on `V[1]`, named after it.
    pub fn from_coordinate(g: &GenSpec) -> Self {
        Self::new(g.name.clone(), g.name.clone(), 1 - g.degree, g.parity.flip())
    }

    pub fn coordinate_spec(&self) -> GenSpec {
        GenSpec::new(self.coordinate.clone(), 1 - self.degree, self.parity.flip())
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LInftyError {
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error("basis vector `{name}` has positive degree {degree}")]
    PositiveDegree { name: String, degree: i32 },
    #[error("basis index {0} out of range")]
    BadIndex(usize),
    #[error("bracket of ({args}) into `{output}` must have degree {degree} and {parity} parity")]
    Inconsistent {
        args: String,
        output: String,
        degree: i32,
        parity: Parity,
    },
    #[error("bracket of ({0}) repeats an even argument and must vanish")]
    VanishingRepeat(String),
    #[error("vector field has a constant term on `{0}`")]
    Curvature(String),
    #[error("vector field is not defined on the coordinates of this basis")]
    NotCoordinates,
    #[error("structure constants are not antisymmetric: c({i},{j})^{k} = {a}, c({j},{i})^{k} = {b}")]
    NotAntisymmetric {
        i: String,
        j: String,
        k: String,
        a: String,
        b: String,
    },
    #[error("component `{component}` of the Maurer–Cartan element must have degree {degree} and {parity} parity, got `{value}`")]
    Inhomogeneous {
        component: String,
        degree: i32,
        parity: Parity,
        value: String,
    },
}

/// A finite-dimensional L∞ algebra on a non-positively graded `V`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LInftyAlgebra {
    basis: Vec<BasisVector>,
    coords: Arc<Algebra>,
    brackets: BTreeMap<Vec<usize>, Vector>,
}

/// Sorts `args` into nondecreasing order, returning whether the Koszul sign
/// of graded antisymmetry is negative. Returns `None` when the bracket is
/// forced to vanish by a repeated even argument.
pub fn koszul_sort(args: &[usize], parity: impl Fn(usize) -> Parity) -> Option<(bool, Vec<usize>)> {
    let mut v = args.to_vec();
    let mut negate = false;
    for i in 1..v.len() {
        let mut j = i;
        while j > 0 && v[j - 1] > v[j] {
            // swapping x, y in an antisymmetric bracket gives -(-1)^{|x||y|}
            negate ^= !parity(v[j - 1]).sign_with(parity(v[j]));
            v.swap(j - 1, j);
            j -= 1;
        }
    }
    if v.windows(2).any(|w| w[0] == w[1] && !parity(w[0]).is_odd()) {
        return None;
    }
    Some((negate, v))
}

/// `(-1)^{Σ_j (k-j) p_{i_j}}` for 1-based `j`.
fn decalage_negative(args: &[usize], parity: impl Fn(usize) -> Parity) -> bool {
    let k = args.len();
    args.iter()
        .enumerate()
        .filter(|&(j, &a)| parity(a).is_odd() && (k - 1 - j) % 2 == 1)
        .count()
        % 2
        == 1
}

fn multiplicity_factorial(sorted: &[usize]) -> Scalar {
    let mut out = Scalar::one();
    let mut run = 1i64;
    for w in sorted.windows(2) {
        if w[0] == w[1] {
            run += 1;
            out *= Scalar::from_integer(run.into());
        } else {
            run = 1;
        }
    }
    out
}

fn monomial_of(sorted: &[usize]) -> Monomial {
    let mut factors: Vec<(usize, u32)> = Vec::new();
    for &i in sorted {
        match factors.last_mut() {
            Some(last) if last.0 == i => last.1 += 1,
            _ => factors.push((i, 1)),
        }
    }
    Monomial::from_factors(factors)
}

fn expand_monomial(m: &Monomial) -> Vec<usize> {
    m.factors()
        .iter()
        .flat_map(|&(g, e)| std::iter::repeat_n(g, e as usize))
        .collect()
}

impl LInftyAlgebra {
    /// An L∞ algebra with all brackets zero.
    pub fn new(basis: Vec<BasisVector>) -> Result<Self, LInftyError> {
        if let Some(b) = basis.iter().find(|b| b.degree > 0) {
            return Err(LInftyError::PositiveDegree {
                name: b.name.clone(),
                degree: b.degree,
            });
        }
        let coords = Algebra::new(basis.iter().map(BasisVector::coordinate_spec).collect())?;
        Ok(LInftyAlgebra {
            basis,
            coords,
            brackets: BTreeMap::new(),
        })
    }

    pub fn basis(&self) -> &[BasisVector] {
        &self.basis
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.basis.iter().position(|b| b.name == name)
    }

    /// Functions on `V[1]`.
    pub fn coordinate_algebra(&self) -> &Arc<Algebra> {
        &self.coords
    }

    fn parity(&self, i: usize) -> Parity {
        self.basis[i].parity
    }

    fn describe_args(&self, args: &[usize]) -> String {
        args.iter()
            .map(|&a| self.basis[a].name.as_str())
            .collect::<Vec<_>>()
            .join(", ")
    }

    /// Sets `l_k(e_{args}) = output` for arguments in any order; the stored
    /// table entry absorbs the Koszul sign.
    pub fn set_bracket(&mut self, args: &[usize], output: Vector) -> Result<(), LInftyError> {
        if let Some(&bad) = args.iter().chain(output.keys()).find(|&&i| i >= self.dim()) {
            return Err(LInftyError::BadIndex(bad));
        }
        let output: Vector = output.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        let k = args.len() as i32;
        let degree = args.iter().map(|&a| self.basis[a].degree).sum::<i32>() + 2 - k;
        let parity = args.iter().fold(Parity::of_degree(k), |p, &a| p + self.parity(a));
        for &c in output.keys() {
            if self.basis[c].degree != degree || self.basis[c].parity != parity {
                return Err(LInftyError::Inconsistent {
                    args: self.describe_args(args),
                    output: self.basis[c].name.clone(),
                    degree,
                    parity,
                });
            }
        }
        let Some((negate, sorted)) = koszul_sort(args, |i| self.parity(i)) else {
            if output.is_empty() {
                return Ok(());
            }
            return Err(LInftyError::VanishingRepeat(self.describe_args(args)));
        };
        if output.is_empty() {
            self.brackets.remove(&sorted);
        } else {
            let stored = output
                .into_iter()
                .map(|(c, x)| (c, if negate { -x } else { x }))
                .collect();
            self.brackets.insert(sorted, stored);
        }
        Ok(())
    }

    /// `l_k(e_{args})` for arguments in any order.
    pub fn bracket(&self, args: &[usize]) -> Vector {
        let Some((negate, sorted)) = koszul_sort(args, |i| self.parity(i)) else {
            return Vector::new();
        };
        match self.brackets.get(&sorted) {
            Some(v) => v
                .iter()
                .map(|(c, x)| (*c, if negate { -x.clone() } else { x.clone() }))
                .collect(),
            None => Vector::new(),
        }
    }

    /// Stored entries, keyed by nondecreasing argument tuples.
    pub fn table(&self) -> &BTreeMap<Vec<usize>, Vector> {
        &self.brackets
    }

    /// Entries of arity `k`.
    pub fn arity(&self, k: usize) -> impl Iterator<Item = (&Vec<usize>, &Vector)> {
        self.brackets.iter().filter(move |(a, _)| a.len() == k)
    }

    pub fn max_arity(&self) -> usize {
        self.brackets.keys().map(Vec::len).max().unwrap_or(0)
    }

    /// The homological vector field on `V[1]` encoding all brackets.
    pub fn q(&self) -> Derivation {
        let alg = &self.coords;
        let mut values = vec![Element::zero(alg); self.dim()];
        for (args, out) in &self.brackets {
            let m = monomial_of(args);
            let mut w = -Scalar::one() / multiplicity_factorial(args);
            if decalage_negative(args, |i| self.parity(i)) {
                w = -w;
            }
            for (&c, x) in out {
                values[c] = &values[c] + Element::monomial(alg, m.clone(), &w * x);
            }
        }
        Derivation::new(alg, 1, Parity::Odd, values).expect("values built on the coordinate algebra")
    }

    /// Recovers the brackets from a vector field on the coordinates of `basis`.
    pub fn from_q(basis: Vec<BasisVector>, q: &Derivation) -> Result<Self, LInftyError> {
        let mut l = LInftyAlgebra::new(basis)?;
        if q.algebra().gens() != l.coords.gens() {
            return Err(LInftyError::NotCoordinates);
        }
        let mut table: BTreeMap<Vec<usize>, Vector> = BTreeMap::new();
        for c in 0..l.dim() {
            for (m, coef) in q.value(c).terms() {
                let args = expand_monomial(m);
                if args.is_empty() {
                    return Err(LInftyError::Curvature(l.basis[c].coordinate.clone()));
                }
                let mut b = -coef * multiplicity_factorial(&args);
                if decalage_negative(&args, |i| l.parity(i)) {
                    b = -b;
                }
                table.entry(args).or_default().insert(c, b);
            }
        }
        for (args, out) in table {
            l.set_bracket(&args, out)?;
        }
        Ok(l)
    }

    /// Human-readable bracket table, one line per nonzero entry.
    pub fn describe(&self) -> Vec<String> {
        self.brackets
            .iter()
            .map(|(args, out)| {
                let rhs = out
                    .iter()
                    .map(|(c, x)| format!("{}*{}", format_scalar(x), self.basis[*c].name))
                    .collect::<Vec<_>>()
                    .join(" + ");
                format!("l{}({}) = {}", args.len(), self.describe_args(args), rhs)
            })
            .collect()
    }
}

/// Reads the brackets off a vector field, taking the coordinates themselves
/// as names for the dual basis.
pub fn brackets_from_q(q: &Derivation) -> Result<LInftyAlgebra, LInftyError> {
    let basis = q.algebra().gens().iter().map(BasisVector::from_coordinate).collect();
    LInftyAlgebra::from_q(basis, q)
}

pub fn q_from_brackets(l: &LInftyAlgebra) -> Derivation {
    l.q()
}

/// Builds a sparse vector from `(index, coefficient)` pairs.
pub fn vector(entries: impl IntoIterator<Item = (usize, Scalar)>) -> Vector {
    let mut v = Vector::new();
    for (i, c) in entries {
        *v.entry(i).or_insert_with(Scalar::zero) += c;
    }
    v.retain(|_, c| !c.is_zero());
    v
}
