use num_traits::Zero;

use super::{vector, BasisVector, LInftyAlgebra, LInftyError, Vector};
use crate::superalg::{format_scalar, int, Derivation, Scalar};

/// A finite-dimensional Lie algebra given by structure constants
/// `[e_i, e_j] = Σ_k c^k_{ij} e_k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LieAlgebra {
    names: Vec<String>,
    c: Vec<Vec<Vector>>,
}

/// The coordinate dual to a basis vector: `e3 ↦ ξ3`, `h ↦ ξh`.
pub(crate) fn dual_coordinate(name: &str) -> String {
    match name.strip_prefix('e') {
        Some(rest) if !rest.is_empty() && rest.chars().all(|c| c.is_ascii_digit()) => format!("ξ{rest}"),
        _ => format!("ξ{name}"),
    }
}

impl LieAlgebra {
    /// The abelian Lie algebra on the given basis names.
    pub fn abelian_named(names: Vec<String>) -> Self {
        let n = names.len();
        LieAlgebra {
            names,
            c: vec![vec![Vector::new(); n]; n],
        }
    }

    /// The abelian Lie algebra with basis `e1, …, en`.
    pub fn abelian(n: usize) -> Self {
        Self::abelian_named((1..=n).map(|i| format!("e{i}")).collect())
    }

    /// Builds from raw constants `c[i][j]`, rejecting tables that are not antisymmetric.
    pub fn from_constants(names: Vec<String>, c: Vec<Vec<Vector>>) -> Result<Self, LInftyError> {
        let n = names.len();
        assert!(
            c.len() == n && c.iter().all(|r| r.len() == n),
            "constant table must be n×n"
        );
        let l = LieAlgebra { names, c };
        for i in 0..n {
            for j in i..n {
                let sum = vector(l.c[i][j].iter().chain(l.c[j][i].iter()).map(|(k, x)| (*k, x.clone())));
                if let Some((&k, _)) = sum.iter().next() {
                    let get = |a: usize, b: usize| l.c[a][b].get(&k).cloned().unwrap_or_else(Scalar::zero);
                    return Err(LInftyError::NotAntisymmetric {
                        i: l.names[i].clone(),
                        j: l.names[j].clone(),
                        k: l.names[k].clone(),
                        a: format_scalar(&get(i, j)),
                        b: format_scalar(&get(j, i)),
                    });
                }
            }
        }
        Ok(l)
    }

    /// Builds from the brackets `[e_i, e_j]` for the listed pairs, filling in antisymmetry.
    pub fn from_brackets(names: Vec<String>, brackets: &[(usize, usize, Vector)]) -> Self {
        let mut l = Self::abelian_named(names);
        for (i, j, v) in brackets {
            l.set(*i, *j, v.clone());
        }
        l
    }

    /// `[e_1, e_2] = e_3`.
    pub fn heisenberg() -> Self {
        let mut l = Self::abelian(3);
        l.set(0, 1, vector([(2, int(1))]));
        l
    }

    /// `[h, e] = 2e`, `[h, f] = -2f`, `[e, f] = h` on the basis `h, e, f`.
    pub fn sl2() -> Self {
        let mut l = Self::abelian_named(vec!["h".into(), "e".into(), "f".into()]);
        l.set(0, 1, vector([(1, int(2))]));
        l.set(0, 2, vector([(2, int(-2))]));
        l.set(1, 2, vector([(0, int(1))]));
        l
    }

    /// `[e_i, e_j] = ε_{ijk} e_k`.
    pub fn so3() -> Self {
        let mut l = Self::abelian(3);
        l.set(0, 1, vector([(2, int(1))]));
        l.set(1, 2, vector([(0, int(1))]));
        l.set(2, 0, vector([(1, int(1))]));
        l
    }

    /// Sets `[e_i, e_j] = v` and `[e_j, e_i] = -v`.
    pub fn set(&mut self, i: usize, j: usize, v: Vector) {
        let neg: Vector = v.iter().map(|(k, x)| (*k, -x.clone())).collect();
        if i == j {
            assert!(v.is_empty(), "[e_i, e_i] must vanish");
        }
        self.c[i][j] = v;
        self.c[j][i] = neg;
    }

    pub fn dim(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn constant(&self, i: usize, j: usize, k: usize) -> Scalar {
        self.c[i][j].get(&k).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn bracket(&self, i: usize, j: usize) -> &Vector {
        &self.c[i][j]
    }

    /// Bilinear extension of the bracket.
    pub fn bracket_vectors(&self, u: &Vector, v: &Vector) -> Vector {
        vector(u.iter().flat_map(|(i, a)| {
            v.iter()
                .flat_map(move |(j, b)| self.c[*i][*j].iter().map(move |(k, x)| (*k, a * b * x)))
        }))
    }

    /// Basis triple and value of the first nonzero Jacobiator
    /// `[e_i,[e_j,e_k]] + [e_j,[e_k,e_i]] + [e_k,[e_i,e_j]]`.
    pub fn jacobi_violation(&self) -> Option<(usize, usize, usize, Vector)> {
        let n = self.dim();
        let e = |i: usize| vector([(i, int(1))]);
        for i in 0..n {
            for j in i + 1..n {
                for k in j + 1..n {
                    let terms = [
                        self.bracket_vectors(&e(i), &self.c[j][k]),
                        self.bracket_vectors(&e(j), &self.c[k][i]),
                        self.bracket_vectors(&e(k), &self.c[i][j]),
                    ];
                    let sum = vector(terms.into_iter().flatten());
                    if !sum.is_empty() {
                        return Some((i, j, k, sum));
                    }
                }
            }
        }
        None
    }

    pub fn satisfies_jacobi(&self) -> bool {
        self.jacobi_violation().is_none()
    }

    /// The Lie algebra as an L∞ algebra concentrated in degree 0.
    pub fn linfty(&self) -> LInftyAlgebra {
        let basis = self
            .names
            .iter()
            .map(|n| BasisVector::graded(n.clone(), dual_coordinate(n), 0))
            .collect();
        let mut l = LInftyAlgebra::new(basis).expect("degree-0 basis with distinct names");
        for i in 0..self.dim() {
            for j in i + 1..self.dim() {
                l.set_bracket(&[i, j], self.c[i][j].clone())
                    .expect("degree-0 bracket is consistent");
            }
        }
        l
    }
}

/// The Chevalley–Eilenberg differential on `𝔤[1]`.
pub fn ce_from_lie(g: &LieAlgebra) -> Result<Derivation, LInftyError> {
    let checked = LieAlgebra::from_constants(g.names.clone(), g.c.clone())?;
    Ok(checked.linfty().q())
}
