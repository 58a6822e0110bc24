use num_traits::One;

use super::{decalage_negative, LInftyAlgebra, LInftyError};
use crate::superalg::{Algebra, AlgebraError, AlgebraMorphism, Derivation, Element, Scalar};

/// Coordinates on which a candidate DGA morphism fails to commute with the
/// differentials, with the residual `φ(Qξ) - d(φ(ξ))`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MorphismVerdict {
    pub residuals: Vec<(String, Element)>,
}

impl MorphismVerdict {
    pub fn is_ok(&self) -> bool {
        self.residuals.is_empty()
    }
}

/// Checks `φ∘Q = d∘φ` on every coordinate of the source.
pub fn dga_morphism_check(
    phi: &AlgebraMorphism,
    q: &Derivation,
    d: &Derivation,
) -> Result<MorphismVerdict, AlgebraError> {
    if !Algebra::same(phi.source(), q.algebra()) || !Algebra::same(phi.target(), d.algebra()) {
        return Err(AlgebraError::AlgebraMismatch);
    }
    let graded = AlgebraMorphism::new(phi.source(), phi.target(), phi.images().to_vec())?;
    let residuals = (0..q.algebra().len())
        .filter_map(|i| {
            let r = graded.apply(q.value(i)) - d.apply(graded.image(i));
            (!r.is_zero()).then(|| (q.algebra().gen(i).name.clone(), r))
        })
        .collect();
    Ok(MorphismVerdict { residuals })
}

/// The Maurer–Cartan expression `dα + Σ_k (1/k!) [α, …, α]_k`, componentwise.
///
/// `α = Σ_c x^c e_c` is given by its components `x^c`, which must have the
/// degree and parity of the coordinate `ξ^c`. The brackets enter in shifted
/// form: a tuple of components `x^{a_1}⋯x^{a_k}` is paired with
/// `ε(a)·l_k(e_{a_1}, …, e_{a_k})`, `ε` being the décalage sign. With this
/// convention the residual is exactly `d(φ(ξ)) - φ(Qξ)` for the algebra map
/// `φ: ξ^c ↦ x^c`.
pub fn mc_residual(alpha: &[Element], l: &LInftyAlgebra, d: &Derivation) -> Result<Vec<Element>, LInftyError> {
    let alg = d.algebra();
    if alpha.len() != l.dim() {
        return Err(AlgebraError::LengthMismatch {
            expected: l.dim(),
            found: alpha.len(),
        }
        .into());
    }
    for (c, x) in alpha.iter().enumerate() {
        if !Algebra::same(x.algebra(), alg) {
            return Err(AlgebraError::AlgebraMismatch.into());
        }
        let spec = l.basis()[c].coordinate_spec();
        if !x.is_zero() && (x.degree() != Some(spec.degree) || x.parity() != Some(spec.parity)) {
            return Err(LInftyError::Inhomogeneous {
                component: spec.name,
                degree: spec.degree,
                parity: spec.parity,
                value: x.to_string(),
            });
        }
    }
    let mut residual: Vec<Element> = alpha.iter().map(|x| d.apply(x)).collect();
    let support: Vec<usize> = (0..l.dim()).filter(|&c| !alpha[c].is_zero()).collect();
    let mut factorial = Scalar::one();
    for k in 1..=l.max_arity() {
        factorial *= Scalar::from_integer((k as i64).into());
        let weight = Scalar::one() / &factorial;
        let mut tuple = vec![0usize; k];
        let total = support.len().pow(k as u32);
        for code in 0..total {
            let mut r = code;
            for slot in tuple.iter_mut().rev() {
                *slot = support[r % support.len()];
                r /= support.len();
            }
            let out = l.bracket(&tuple);
            if out.is_empty() {
                continue;
            }
            let product = tuple.iter().fold(Element::one(alg), |acc, &a| acc * &alpha[a]);
            if product.is_zero() {
                continue;
            }
            let sign = if decalage_negative(&tuple, |i| l.basis()[i].parity) {
                -&weight
            } else {
                weight.clone()
            };
            for (c, x) in out {
                residual[c] = &residual[c] + product.scale(&(&sign * x));
            }
        }
    }
    Ok(residual)
}

/// Outcome of [`mc_check`]: the residual of each component of `α`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct McVerdict {
    pub residual: Vec<Element>,
}

impl McVerdict {
    pub fn is_ok(&self) -> bool {
        self.residual.iter().all(Element::is_zero)
    }
}

pub fn mc_check(alpha: &[Element], l: &LInftyAlgebra, d: &Derivation) -> Result<McVerdict, LInftyError> {
    mc_residual(alpha, l, d).map(|residual| McVerdict { residual })
}
