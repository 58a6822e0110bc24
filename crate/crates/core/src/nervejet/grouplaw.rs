use std::sync::Arc;

use thiserror::Error;

use crate::linfty::{vector, LieAlgebra};
use crate::superalg::{copy_algebra, Algebra, AlgebraError, AlgebraMorphism, Element, GenSpec, Monomial};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GroupLawError {
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error("expected {expected} product components, found {found}")]
    Arity { expected: usize, found: usize },
    #[error("0 is not a two-sided identity: component `{0}`")]
    NotIdentity(String),
    #[error("product is not associative: component `{component}` differs by `{difference}`")]
    NotAssociative { component: String, difference: String },
}

/// A polynomial group law `F(x, y)` on `ℚ^n` with identity 0.
///
/// Coordinates are even of degree 0; the law lives in the algebra with two
/// copies `name[1]` (for `x`) and `name[2]` (for `y`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyGroupLaw {
    base: Vec<GenSpec>,
    alg: Arc<Algebra>,
    product: Vec<Element>,
}

impl PolyGroupLaw {
    /// Checks the identity and associativity laws symbolically.
    pub fn new(names: &[&str], product: Vec<Element>) -> Result<Self, GroupLawError> {
        let base: Vec<GenSpec> = names.iter().map(|n| GenSpec::even(*n, 0)).collect();
        let alg = copy_algebra(&base, 2)?;
        if product.len() != base.len() {
            return Err(GroupLawError::Arity {
                expected: base.len(),
                found: product.len(),
            });
        }
        let product = product
            .into_iter()
            .map(|f| f.transport(&alg))
            .collect::<Result<Vec<_>, _>>()?;
        let law = PolyGroupLaw { base, alg, product };
        law.check()?;
        Ok(law)
    }

    /// Parses the components of `F` written in `name[1]`, `name[2]`.
    pub fn parse(names: &[&str], product: &[&str]) -> Result<Self, GroupLawError> {
        let base: Vec<GenSpec> = names.iter().map(|n| GenSpec::even(*n, 0)).collect();
        let alg = copy_algebra(&base, 2)?;
        let product = product
            .iter()
            .map(|s| Element::parse(&alg, s))
            .collect::<Result<Vec<_>, _>>()?;
        Self::new(names, product)
    }

    /// `F(x, y) = x + y` on `ℚ^n`.
    pub fn abelian(n: usize) -> Self {
        let names: Vec<String> = (1..=n).map(|i| format!("x{i}")).collect();
        let refs: Vec<&str> = names.iter().map(String::as_str).collect();
        let product: Vec<String> = names.iter().map(|x| format!("{x}[1] + {x}[2]")).collect();
        let prefs: Vec<&str> = product.iter().map(String::as_str).collect();
        Self::parse(&refs, &prefs).expect("abelian law")
    }

    /// `(x, y, z)·(x', y', z') = (x + x', y + y', z + z' + x y')`.
    pub fn heisenberg() -> Self {
        Self::parse(
            &["x", "y", "z"],
            &["x[1] + x[2]", "y[1] + y[2]", "z[1] + z[2] + x[1]*y[2]"],
        )
        .expect("Heisenberg law")
    }

    /// Unipotent upper-triangular `n × n` matrices `1 + N`, with coordinates
    /// the strictly upper entries `a{i}{j}` and product `X + Y + XY`.
    pub fn upper_triangular(n: usize) -> Self {
        let pairs: Vec<(usize, usize)> = (1..=n).flat_map(|i| (i + 1..=n).map(move |j| (i, j))).collect();
        let names: Vec<String> = pairs.iter().map(|(i, j)| format!("a{i}{j}")).collect();
        let product: Vec<String> = pairs
            .iter()
            .map(|&(i, j)| {
                let mut s = format!("a{i}{j}[1] + a{i}{j}[2]");
                for k in i + 1..j {
                    s.push_str(&format!(" + a{i}{k}[1]*a{k}{j}[2]"));
                }
                s
            })
            .collect();
        let refs: Vec<&str> = names.iter().map(String::as_str).collect();
        let prefs: Vec<&str> = product.iter().map(String::as_str).collect();
        Self::parse(&refs, &prefs).expect("upper-triangular law")
    }

    fn check(&self) -> Result<(), GroupLawError> {
        let n = self.dim();
        let one = copy_algebra(&self.base, 1)?;
        let x: Vec<Element> = (0..n).map(|i| Element::generator(&one, i)).collect();
        let zero = vec![Element::zero(&one); n];
        for (i, (l, r)) in self
            .multiply_in(&one, &x, &zero)
            .into_iter()
            .zip(self.multiply_in(&one, &zero, &x))
            .enumerate()
        {
            if l != x[i] || r != x[i] {
                return Err(GroupLawError::NotIdentity(self.base[i].name.clone()));
            }
        }
        let three = copy_algebra(&self.base, 3)?;
        let copy = |j: usize| -> Vec<Element> { (0..n).map(|i| Element::generator(&three, j * n + i)).collect() };
        let (a, b, c) = (copy(0), copy(1), copy(2));
        let left = self.multiply_in(&three, &self.multiply_in(&three, &a, &b), &c);
        let right = self.multiply_in(&three, &a, &self.multiply_in(&three, &b, &c));
        for (i, (l, r)) in left.into_iter().zip(right).enumerate() {
            if l != r {
                return Err(GroupLawError::NotAssociative {
                    component: self.base[i].name.clone(),
                    difference: (l - r).to_string(),
                });
            }
        }
        Ok(())
    }

    pub fn dim(&self) -> usize {
        self.base.len()
    }

    pub fn coordinates(&self) -> &[GenSpec] {
        &self.base
    }

    pub fn names(&self) -> Vec<String> {
        self.base.iter().map(|g| g.name.clone()).collect()
    }

    /// The algebra generated by `name[1]` and `name[2]`.
    pub fn algebra(&self) -> &Arc<Algebra> {
        &self.alg
    }

    pub fn product(&self) -> &[Element] {
        &self.product
    }

    /// Generators `name[1..=k]` for `k` copies of the group.
    pub fn copies(&self, k: usize) -> Arc<Algebra> {
        copy_algebra(&self.base, k).expect("copy names are distinct")
    }

    /// `F(u, v)` for even elements `u`, `v` of `target`.
    pub fn multiply_in(&self, target: &Arc<Algebra>, u: &[Element], v: &[Element]) -> Vec<Element> {
        let images = u.iter().chain(v).cloned().collect();
        let phi = AlgebraMorphism::new_ungraded(&self.alg, target, images).expect("group coordinates are even");
        self.product.iter().map(|f| phi.apply(f)).collect()
    }

    /// `c^k_{ij}` is the coefficient of `x_i y_j` in `F^k` minus that of `x_j y_i`.
    pub fn lie_algebra(&self) -> LieAlgebra {
        let n = self.dim();
        let names = self.names();
        let mut entries = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                let xy = |a: usize, b: usize| Monomial::from_factors(vec![(a, 1), (n + b, 1)]);
                let xy_ij = xy(i, j);
                // canonical order puts copy 1 first, so x_j y_i is (j, n + i)
                let xy_ji = xy(j, i);
                let v = vector(
                    self.product
                        .iter()
                        .enumerate()
                        .map(|(k, f)| (k, f.coefficient(&xy_ij) - f.coefficient(&xy_ji))),
                );
                entries.push((i, j, v));
            }
        }
        LieAlgebra::from_brackets(names, &entries)
    }
}

pub fn lie_from_group_law(f: &PolyGroupLaw) -> LieAlgebra {
    f.lie_algebra()
}
