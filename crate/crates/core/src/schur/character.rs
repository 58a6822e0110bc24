use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};

use super::{tableau_weights, SchurError, YoungDiagram};
use crate::constructions::form_monomials;
use crate::dgman::{pit, GradedManifold};
use crate::linalg::Matrix;
use crate::superalg::{GenSpec, Monomial, Scalar};

/// Exponents of `(t₁, t₂, s₁, s₂)`.
pub type Weight = [u32; 4];

/// A polynomial in the torus variables `t₁, t₂, s₁, s₂`, truncated at
/// `s`-degree `D`. The `s`-degree is the polynomial degree on the function
/// side, so arithmetic drops every term above it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CharacterSeries {
    truncation: u32,
    terms: BTreeMap<Weight, Scalar>,
}

fn s_degree(w: &Weight) -> u32 {
    w[2] + w[3]
}

impl CharacterSeries {
    pub fn zero(truncation: u32) -> Self {
        CharacterSeries {
            truncation,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(truncation: u32) -> Self {
        let mut c = Self::zero(truncation);
        c.add_term([0; 4], Scalar::one());
        c
    }

    pub fn truncation(&self) -> u32 {
        self.truncation
    }

    pub fn terms(&self) -> &BTreeMap<Weight, Scalar> {
        &self.terms
    }

    pub fn coefficient(&self, w: &Weight) -> Scalar {
        self.terms.get(w).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn add_term(&mut self, w: Weight, c: Scalar) {
        if s_degree(&w) > self.truncation || c.is_zero() {
            return;
        }
        let entry = self.terms.entry(w).or_insert_with(Scalar::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&w);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// The part of `s`-degree exactly `d`.
    pub fn slice(&self, d: u32) -> CharacterSeries {
        CharacterSeries {
            truncation: self.truncation,
            terms: self
                .terms
                .iter()
                .filter(|(w, _)| s_degree(w) == d)
                .map(|(w, c)| (*w, c.clone()))
                .collect(),
        }
    }

    /// Sum of coefficients: the dimension when every coefficient counts basis vectors.
    pub fn dim(&self) -> Scalar {
        self.terms.values().fold(Scalar::zero(), |acc, c| acc + c)
    }

    pub fn add(&self, other: &CharacterSeries) -> CharacterSeries {
        let mut out = CharacterSeries::zero(self.truncation.min(other.truncation));
        for (w, c) in self.terms.iter().chain(&other.terms) {
            out.add_term(*w, c.clone());
        }
        out
    }

    pub fn sub(&self, other: &CharacterSeries) -> CharacterSeries {
        let mut out = self.clone();
        out.truncation = self.truncation.min(other.truncation);
        for (w, c) in &other.terms {
            out.add_term(*w, -c.clone());
        }
        out.terms.retain(|w, _| s_degree(w) <= out.truncation);
        out
    }

    pub fn mul(&self, other: &CharacterSeries) -> CharacterSeries {
        let mut out = CharacterSeries::zero(self.truncation.min(other.truncation));
        for (a, x) in &self.terms {
            for (b, y) in &other.terms {
                out.add_term([a[0] + b[0], a[1] + b[1], a[2] + b[2], a[3] + b[3]], x * y);
            }
        }
        out
    }
}

impl fmt::Display for CharacterSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let vars = ["t1", "t2", "s1", "s2"];
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(w, c)| {
                let mono: Vec<String> = w
                    .iter()
                    .zip(vars)
                    .filter(|(e, _)| **e > 0)
                    .map(|(e, v)| if *e == 1 { v.to_string() } else { format!("{v}^{e}") })
                    .collect();
                match (mono.is_empty(), c.is_one()) {
                    (true, _) => c.to_string(),
                    (false, true) => mono.join("*"),
                    (false, false) => format!("{c}*{}", mono.join("*")),
                }
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// Which subspace the closed-form quotient divides out.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum QuotientReading {
    /// The image of `φ ⊗ b ↦ d*φ ⊗ b - φ ⊗ db`, identifying the two ways of
    /// pairing a dual form with a form through `d`.
    Combined,
    /// The image of `φ ⊗ b ↦ φ ⊗ db` alone.
    RightOnly,
}

/// Embeds a weight in `(x₁, x₂)` as a `t`- or `s`-weight.
fn place(x: [u32; 2], on_s: bool) -> Weight {
    if on_s {
        [0, 0, x[0], x[1]]
    } else {
        [x[0], x[1], 0, 0]
    }
}

/// `(1 + x₁)(1 + x₂) · s_{λ'}(x₁, x₂)`: the character of `Γ(T*_λ ℝ^{0|2})`.
fn tensor_field_character(lambda: &YoungDiagram, on_s: bool, truncation: u32) -> CharacterSeries {
    let mut functions = CharacterSeries::zero(truncation);
    for e in [[0, 0], [1, 0], [0, 1], [1, 1]] {
        functions.add_term(place(e, on_s), Scalar::one());
    }
    let mut fiber = CharacterSeries::zero(truncation);
    for (w, count) in tableau_weights(&lambda.transpose(), 2) {
        fiber.add_term(place([w[0], w[1]], on_s), Scalar::from_integer((count as i64).into()));
    }
    functions.mul(&fiber)
}

/// Character of polynomial functions on `Hom(ℝ^{0|2}, ℝ^{0|2})`.
///
/// The coordinates of `θ'ᵢ = Σⱼ aᵢⱼθⱼ + βᵢ + γᵢθ₁θ₂` carry the weights of
/// precomposition by `θⱼ ↦ tⱼθⱼ` and postcomposition by `θ'ᵢ ↦ sᵢθ'ᵢ`:
/// `aᵢⱼ ↦ sᵢtⱼ`, `βᵢ ↦ sᵢ`, `γᵢ ↦ sᵢt₁t₂`. Even `a`, odd `β, γ`.
fn lhs(truncation: u32) -> CharacterSeries {
    let even: Vec<Weight> = (0..2)
        .flat_map(|i| (0..2).map(move |j| weight_of(i, [u32::from(j == 0), u32::from(j == 1)])))
        .collect();
    let odd: Vec<Weight> = (0..2)
        .flat_map(|i| [weight_of(i, [0, 0]), weight_of(i, [1, 1])])
        .collect();
    let mut out = CharacterSeries::one(truncation);
    for w in even {
        let mut geometric = CharacterSeries::one(truncation);
        let mut power = CharacterSeries::one(truncation);
        let mut single = CharacterSeries::zero(truncation);
        single.add_term(w, Scalar::one());
        for _ in 0..truncation {
            power = power.mul(&single);
            geometric = geometric.add(&power);
        }
        out = out.mul(&geometric);
    }
    for w in odd {
        let mut factor = CharacterSeries::one(truncation);
        factor.add_term(w, Scalar::one());
        out = out.mul(&factor);
    }
    out
}

fn weight_of(i: usize, t: [u32; 2]) -> Weight {
    [t[0], t[1], u32::from(i == 0), u32::from(i == 1)]
}

/// `Σ_λ Γ(T*_λ ℝ^{0|2})* ⊗ Γ(T*_λ ℝ^{0|2})` over diagrams with exactly two
/// columns; the dual factor carries `t` with the same weights as the factor.
fn generic_part(truncation: u32) -> CharacterSeries {
    let mut out = CharacterSeries::zero(truncation);
    // λ' = (p, q) with p ≥ q ≥ 1 has |λ| ≤ s-degree
    for size in 2..=truncation as usize {
        for q in 1..=size / 2 {
            let lambda = YoungDiagram::new(vec![size - q, q]).expect("a partition").transpose();
            let term = tensor_field_character(&lambda, false, truncation)
                .mul(&tensor_field_character(&lambda, true, truncation));
            out = out.add(&term);
        }
    }
    out
}

/// Forms on `ℝ^{0|2}` as monomials, with `d` as a matrix per degree.
struct Forms {
    bases: Vec<Vec<Monomial>>,
    weights: Vec<Vec<[u32; 2]>>,
    // d_matrix[k][row in Ω^k][col in Ω^{k-1}], empty for k = 0
    d_matrix: Vec<Vec<Vec<Scalar>>>,
}

fn forms(max_k: u32) -> Forms {
    let tangent =
        pit(&GradedManifold::new(vec![GenSpec::odd("θ1", 0), GenSpec::odd("θ2", 0)]).expect("distinct names"));
    let alg = tangent.algebra().clone();
    let d = tangent.d();
    let bases: Vec<Vec<Monomial>> = (0..=max_k).map(|k| form_monomials(2, k)).collect();
    let weights = bases
        .iter()
        .map(|b| {
            b.iter()
                .map(|m| [m.exponent(0) + m.exponent(2), m.exponent(1) + m.exponent(3)])
                .collect()
        })
        .collect();
    let mut d_matrix = vec![Vec::new()];
    for k in 1..=max_k as usize {
        let mut rows = vec![vec![Scalar::zero(); bases[k - 1].len()]; bases[k].len()];
        for (c, m) in bases[k - 1].iter().enumerate() {
            let image = d.apply(&crate::superalg::Element::monomial(&alg, m.clone(), Scalar::one()));
            for (mono, v) in image.terms() {
                let r = bases[k]
                    .iter()
                    .position(|x| x == mono)
                    .expect("d raises form degree by one");
                rows[r][c] = v.clone();
            }
        }
        d_matrix.push(rows);
    }
    Forms {
        bases,
        weights,
        d_matrix,
    }
}

/// `(⊕_k Ω^k* ⊗ Ω^k) / d(⊕_k Ω^k* ⊗ Ω^{k-1})` on `ℝ^{0|2}`, with the rank of
/// the relation map computed on each weight space.
fn quotient_part(truncation: u32, reading: QuotientReading) -> CharacterSeries {
    let max_k = truncation + 1;
    let f = forms(max_k);
    let weight = |k: usize, a: usize, b_k: usize, b: usize| -> Weight {
        let (x, y) = (f.weights[k][a], f.weights[b_k][b]);
        [x[0], x[1], y[0], y[1]]
    };
    // target coordinates (k, a, b) and source coordinates (k, a, b) grouped by weight
    let mut targets: BTreeMap<Weight, Vec<(usize, usize, usize)>> = BTreeMap::new();
    let mut sources: BTreeMap<Weight, Vec<(usize, usize, usize)>> = BTreeMap::new();
    for k in 0..=max_k as usize {
        for a in 0..f.bases[k].len() {
            for b in 0..f.bases[k].len() {
                let w = weight(k, a, k, b);
                if s_degree(&w) <= truncation {
                    targets.entry(w).or_default().push((k, a, b));
                }
            }
            if k > 0 {
                for b in 0..f.bases[k - 1].len() {
                    let w = weight(k, a, k - 1, b);
                    if s_degree(&w) <= truncation {
                        sources.entry(w).or_default().push((k, a, b));
                    }
                }
            }
        }
    }
    let mut out = CharacterSeries::zero(truncation);
    for (w, target) in &targets {
        let index: BTreeMap<&(usize, usize, usize), usize> = target.iter().enumerate().map(|(i, t)| (t, i)).collect();
        let source = sources.get(w).map(Vec::as_slice).unwrap_or(&[]);
        let mut matrix = Matrix::zeros(target.len(), source.len());
        for (col, &(k, a, b)) in source.iter().enumerate() {
            let dk = &f.d_matrix[k];
            if reading == QuotientReading::Combined {
                // d*(e_a*) = Σ_c d[a][c] e_c*, landing in Ω^{k-1}* ⊗ Ω^{k-1}
                for (c, v) in dk[a].iter().enumerate() {
                    if !v.is_zero() {
                        matrix.add_to(index[&(k - 1, c, b)], col, v);
                    }
                }
            }
            // e_a* ⊗ db, landing in Ω^k* ⊗ Ω^k
            for (row, entries) in dk.iter().enumerate() {
                let v = &entries[b];
                if !v.is_zero() {
                    matrix.add_to(index[&(k, a, row)], col, &-v.clone());
                }
            }
        }
        let dim = target.len() - matrix.rank();
        out.add_term(*w, Scalar::from_integer((dim as i64).into()));
    }
    out
}

/// One `s`-degree slice of the comparison.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SliceCheck {
    pub degree: u32,
    pub lhs_dim: Scalar,
    pub rhs_dim: Scalar,
    /// The two characters agree weight by weight on this slice.
    pub equal: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Omega2Report {
    pub truncation: u32,
    pub reading: QuotientReading,
    pub lhs: CharacterSeries,
    pub generic: CharacterSeries,
    pub quotient: CharacterSeries,
    pub slices: Vec<SliceCheck>,
}

impl Omega2Report {
    pub fn rhs(&self) -> CharacterSeries {
        self.generic.add(&self.quotient)
    }

    /// Slices 0 through 2 agree.
    pub fn calibrated(&self) -> bool {
        self.slices.iter().take(3).all(|s| s.equal)
    }

    pub fn holds(&self) -> bool {
        self.slices.iter().all(|s| s.equal)
    }

    /// First slice where the characters differ.
    pub fn first_failure(&self) -> Option<u32> {
        self.slices.iter().find(|s| !s.equal).map(|s| s.degree)
    }
}

/// Both sides of the decomposition of functions on `Hom(ℝ^{0|2}, ℝ^{0|2})`
/// as torus characters up to `s`-degree `D`, under the given quotient reading.
pub fn omega2_sides(truncation: usize, reading: QuotientReading) -> Result<Omega2Report, SchurError> {
    if truncation < 1 {
        return Err(SchurError::Truncation(truncation));
    }
    let d = truncation as u32;
    let lhs = lhs(d);
    let generic = generic_part(d);
    let quotient = quotient_part(d, reading);
    let rhs = generic.add(&quotient);
    let slices = (0..=d)
        .map(|k| {
            let (l, r) = (lhs.slice(k), rhs.slice(k));
            SliceCheck {
                degree: k,
                lhs_dim: l.dim(),
                rhs_dim: r.dim(),
                equal: l == r,
            }
        })
        .collect();
    Ok(Omega2Report {
        truncation: d,
        reading,
        lhs,
        generic,
        quotient,
        slices,
    })
}

/// [`omega2_sides`] with the [`QuotientReading::Combined`] quotient.
pub fn omega2_character_identity(truncation: usize) -> Result<Omega2Report, SchurError> {
    omega2_sides(truncation, QuotientReading::Combined)
}
