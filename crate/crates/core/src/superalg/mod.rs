//! Free graded supercommutative polynomial algebras over exact rationals.
//!
//! Every generator carries an integer degree and, independently, a parity.
//! Commutation signs are governed by parity alone, so the same machinery
//! covers ordinary graded-commutative algebras (parity = degree mod 2) and
//! ℤ-graded superalgebras where the two gradings disagree.
//!
//! Monomials are stored in the algebra's declaration order; odd generators
//! appear with exponent at most one. An [`Element`] is a finite map from
//! monomials to nonzero rationals, so structural equality is mathematical
//! equality.

mod derivation;
mod element;
mod monomial;
mod morphism;
mod parse;

use std::collections::HashMap;
use std::fmt;
use std::ops::Add;
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use thiserror::Error;

pub use derivation::{Derivation, GradingViolation};
pub use element::Element;
pub use monomial::Monomial;
pub use morphism::AlgebraMorphism;

/// Exact rational coefficient.
pub type Scalar = BigRational;

pub fn int(n: i64) -> Scalar {
    BigRational::from_integer(BigInt::from(n))
}

pub fn frac(n: i64, d: i64) -> Scalar {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// Parses `"p"`, `"-p"` or `"p/q"`.
pub fn parse_scalar(s: &str) -> Result<Scalar, AlgebraError> {
    let s = s.trim();
    let bad = || AlgebraError::Parse {
        position: 0,
        message: format!("invalid rational `{s}`"),
    };
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().map_err(|_| bad())?;
            let d: BigInt = d.trim().parse().map_err(|_| bad())?;
            if d == BigInt::from(0) {
                return Err(bad());
            }
            Ok(BigRational::new(n, d))
        }
        None => Ok(BigRational::from_integer(s.parse().map_err(|_| bad())?)),
    }
}

/// Renders a rational as `p` or `p/q`.
pub fn format_scalar(c: &Scalar) -> String {
    if c.is_integer() {
        c.numer().to_string()
    } else {
        format!("{}/{}", c.numer(), c.denom())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn of_degree(degree: i32) -> Parity {
        if degree.rem_euclid(2) == 0 {
            Parity::Even
        } else {
            Parity::Odd
        }
    }

    pub fn flip(self) -> Parity {
        match self {
            Parity::Even => Parity::Odd,
            Parity::Odd => Parity::Even,
        }
    }

    pub fn is_odd(self) -> bool {
        self == Parity::Odd
    }

    pub fn bit(self) -> u32 {
        self as u32
    }

    /// `(-1)^(self * other)` as a boolean "negate" flag.
    pub fn sign_with(self, other: Parity) -> bool {
        self.is_odd() && other.is_odd()
    }
}

impl Add for Parity {
    type Output = Parity;

    fn add(self, rhs: Parity) -> Parity {
        if self == rhs {
            Parity::Even
        } else {
            Parity::Odd
        }
    }
}

impl fmt::Display for Parity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Parity::Even => "even",
            Parity::Odd => "odd",
        })
    }
}

/// A named generator with independent degree and parity.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GenSpec {
    pub name: String,
    pub degree: i32,
    pub parity: Parity,
}

impl GenSpec {
    pub fn new(name: impl Into<String>, degree: i32, parity: Parity) -> Self {
        GenSpec {
            name: name.into(),
            degree,
            parity,
        }
    }

    pub fn even(name: impl Into<String>, degree: i32) -> Self {
        Self::new(name, degree, Parity::Even)
    }

    pub fn odd(name: impl Into<String>, degree: i32) -> Self {
        Self::new(name, degree, Parity::Odd)
    }

    /// Parity read off from the degree.
    pub fn graded(name: impl Into<String>, degree: i32) -> Self {
        Self::new(name, degree, Parity::of_degree(degree))
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AlgebraError {
    #[error("duplicate generator `{0}`")]
    DuplicateGenerator(String),
    #[error("unknown generator `{0}`")]
    UnknownGenerator(String),
    #[error("operands live in different algebras")]
    AlgebraMismatch,
    #[error("expected {expected} values, found {found}")]
    LengthMismatch { expected: usize, found: usize },
    #[error("image of `{generator}` must be homogeneous of degree {degree} and parity {parity}, got `{image}`")]
    ImageGrading {
        generator: String,
        degree: i32,
        parity: Parity,
        image: String,
    },
    #[error("parse error at {position}: {message}")]
    Parse { position: usize, message: String },
}

/// The generator data of a free graded supercommutative algebra.
#[derive(Debug, PartialEq, Eq)]
pub struct Algebra {
    gens: Vec<GenSpec>,
    index: HashMap<String, usize>,
}

impl Algebra {
    pub fn new(gens: Vec<GenSpec>) -> Result<Arc<Algebra>, AlgebraError> {
        let mut index = HashMap::with_capacity(gens.len());
        for (i, g) in gens.iter().enumerate() {
            if index.insert(g.name.clone(), i).is_some() {
                return Err(AlgebraError::DuplicateGenerator(g.name.clone()));
            }
        }
        Ok(Arc::new(Algebra { gens, index }))
    }

    pub fn gens(&self) -> &[GenSpec] {
        &self.gens
    }

    pub fn len(&self) -> usize {
        self.gens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn gen(&self, i: usize) -> &GenSpec {
        &self.gens[i]
    }

    pub fn find(&self, name: &str) -> Option<usize> {
        self.index.get(name).copied()
    }

    pub fn index_of(&self, name: &str) -> Result<usize, AlgebraError> {
        self.find(name)
            .ok_or_else(|| AlgebraError::UnknownGenerator(name.to_string()))
    }

    /// True when every generator's parity is its degree mod 2.
    pub fn parity_follows_degree(&self) -> bool {
        self.gens.iter().all(|g| g.parity == Parity::of_degree(g.degree))
    }

    /// A new algebra with `more` appended after the existing generators.
    pub fn extend(&self, more: impl IntoIterator<Item = GenSpec>) -> Result<Arc<Algebra>, AlgebraError> {
        let mut gens = self.gens.clone();
        gens.extend(more);
        Algebra::new(gens)
    }

    pub(crate) fn same(a: &Arc<Algebra>, b: &Arc<Algebra>) -> bool {
        Arc::ptr_eq(a, b) || **a == **b
    }
}

/// Generators `name[1], …, name[k]` for each base generator, copy by copy.
pub fn copy_algebra(base: &[GenSpec], k: usize) -> Result<Arc<Algebra>, AlgebraError> {
    Algebra::new(
        (1..=k)
            .flat_map(|j| {
                base.iter()
                    .map(move |g| GenSpec::new(format!("{}[{j}]", g.name), g.degree, g.parity))
            })
            .collect(),
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn scalar_parsing() {
        assert_eq!(parse_scalar("3/6").unwrap(), frac(1, 2));
        assert_eq!(parse_scalar("-4").unwrap(), int(-4));
        assert!(parse_scalar("1/0").is_err());
        assert!(parse_scalar("x").is_err());
        assert_eq!(format_scalar(&frac(-2, 4)), "-1/2");
    }

    #[test]
    fn duplicate_names_rejected() {
        let err = Algebra::new(vec![GenSpec::even("x", 0), GenSpec::odd("x", 1)]).unwrap_err();
        assert_eq!(err, AlgebraError::DuplicateGenerator("x".into()));
    }

    #[test]
    fn parity_degree_predicate() {
        let a = Algebra::new(vec![GenSpec::even("x", 0), GenSpec::odd("dx", 1)]).unwrap();
        assert!(a.parity_follows_degree());
        let b = Algebra::new(vec![GenSpec::odd("theta", 0)]).unwrap();
        assert!(!b.parity_follows_degree());
    }
}
