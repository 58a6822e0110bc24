use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_traits::{One, Zero};

use super::{format_scalar, Algebra, AlgebraError, Monomial, Parity, Scalar};

/// An exact linear combination of canonical monomials.
#[derive(Clone, Debug)]
pub struct Element {
    alg: Arc<Algebra>,
    terms: BTreeMap<Monomial, Scalar>,
}

impl PartialEq for Element {
    fn eq(&self, other: &Self) -> bool {
        Algebra::same(&self.alg, &other.alg) && self.terms == other.terms
    }
}

impl Eq for Element {}

impl Element {
    pub fn zero(alg: &Arc<Algebra>) -> Self {
        Element {
            alg: alg.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn one(alg: &Arc<Algebra>) -> Self {
        Self::scalar(alg, Scalar::one())
    }

    pub fn scalar(alg: &Arc<Algebra>, c: Scalar) -> Self {
        Self::monomial(alg, Monomial::one(), c)
    }

    pub fn monomial(alg: &Arc<Algebra>, m: Monomial, c: Scalar) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Element {
            alg: alg.clone(),
            terms,
        }
    }

    pub fn generator(alg: &Arc<Algebra>, i: usize) -> Self {
        assert!(i < alg.len(), "generator index {i} out of range");
        Self::monomial(alg, Monomial::generator(i), Scalar::one())
    }

    /// The generator called `name`; panics if there is none.
    pub fn var(alg: &Arc<Algebra>, name: &str) -> Self {
        let i = alg.find(name).unwrap_or_else(|| panic!("no generator named `{name}`"));
        Self::generator(alg, i)
    }

    pub fn try_var(alg: &Arc<Algebra>, name: &str) -> Result<Self, AlgebraError> {
        Ok(Self::generator(alg, alg.index_of(name)?))
    }

    /// Builds from arbitrary terms, dropping zeros and merging duplicates.
    pub fn from_terms(alg: &Arc<Algebra>, terms: impl IntoIterator<Item = (Monomial, Scalar)>) -> Self {
        let mut e = Element::zero(alg);
        for (m, c) in terms {
            e.add_term(m, c);
        }
        e
    }

    pub fn parse(alg: &Arc<Algebra>, src: &str) -> Result<Self, AlgebraError> {
        super::parse::parse_element(alg, src)
    }

    pub fn algebra(&self) -> &Arc<Algebra> {
        &self.alg
    }

    pub fn terms(&self) -> &BTreeMap<Monomial, Scalar> {
        &self.terms
    }

    pub fn into_terms(self) -> BTreeMap<Monomial, Scalar> {
        self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, m: &Monomial) -> Scalar {
        self.terms.get(m).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn constant_term(&self) -> Scalar {
        self.coefficient(&Monomial::one())
    }

    pub(crate) fn add_term(&mut self, m: Monomial, c: Scalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    fn check_same(&self, other: &Element) -> Result<(), AlgebraError> {
        if Algebra::same(&self.alg, &other.alg) {
            Ok(())
        } else {
            Err(AlgebraError::AlgebraMismatch)
        }
    }

    pub fn checked_add(&self, other: &Element) -> Result<Element, AlgebraError> {
        self.check_same(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn checked_mul(&self, other: &Element) -> Result<Element, AlgebraError> {
        self.check_same(other)?;
        let mut out = Element::zero(&self.alg);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                if let Some((negate, m)) = ma.mul(mb, &self.alg) {
                    let c = ca * cb;
                    out.add_term(m, if negate { -c } else { c });
                }
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: &Scalar) -> Element {
        if c.is_zero() {
            return Element::zero(&self.alg);
        }
        Element {
            alg: self.alg.clone(),
            terms: self.terms.iter().map(|(m, x)| (m.clone(), x * c)).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Element {
        let mut acc = Element::one(&self.alg);
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Degree when homogeneous and nonzero.
    pub fn degree(&self) -> Option<i32> {
        let mut it = self.terms.keys().map(|m| m.degree(&self.alg));
        let first = it.next()?;
        it.all(|d| d == first).then_some(first)
    }

    /// Parity when parity-homogeneous and nonzero.
    pub fn parity(&self) -> Option<Parity> {
        let mut it = self.terms.keys().map(|m| m.parity(&self.alg));
        let first = it.next()?;
        it.all(|p| p == first).then_some(first)
    }

    /// Keeps the terms whose monomial satisfies `pred`.
    pub fn filter(&self, pred: impl Fn(&Monomial) -> bool) -> Element {
        Element {
            alg: self.alg.clone(),
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| pred(m))
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    /// Terms of polynomial degree `k` in the generators accepted by `in_set`.
    pub fn arity_component(&self, k: u32, in_set: impl Fn(usize) -> bool) -> Element {
        self.filter(|m| m.factors().iter().filter(|(g, _)| in_set(*g)).map(|f| f.1).sum::<u32>() == k)
    }

    /// Writes `self = Σ coeff_P * P` where each `P` is a monomial in the
    /// generators accepted by `keep`, placed on the right.
    pub fn split_right(&self, keep: impl Fn(usize) -> bool) -> BTreeMap<Monomial, Element> {
        let mut out: BTreeMap<Monomial, Element> = BTreeMap::new();
        for (m, c) in &self.terms {
            let (negate, rest, picked) = m.split_right(&self.alg, &keep);
            let c = if negate { -c.clone() } else { c.clone() };
            out.entry(picked)
                .or_insert_with(|| Element::zero(&self.alg))
                .add_term(rest, c);
        }
        out.retain(|_, e| !e.is_zero());
        out
    }

    /// Coefficient of the monomial `picked` (in the `keep` generators) on the right.
    pub fn right_coefficient(&self, picked: &Monomial, keep: impl Fn(usize) -> bool) -> Element {
        self.split_right(keep)
            .remove(picked)
            .unwrap_or_else(|| Element::zero(&self.alg))
    }

    /// The same polynomial read in `alg`, whose generators must agree with
    /// this element's algebra at every index that occurs.
    pub fn transport(&self, alg: &Arc<Algebra>) -> Result<Element, AlgebraError> {
        for g in self.support() {
            let ours = self.alg.gen(g);
            if g >= alg.len() || alg.gen(g) != ours {
                return Err(AlgebraError::UnknownGenerator(ours.name.clone()));
            }
        }
        Ok(Element {
            alg: alg.clone(),
            terms: self.terms.clone(),
        })
    }

    /// Largest polynomial degree among the terms (0 for zero).
    pub fn max_arity(&self) -> u32 {
        self.terms.keys().map(|m| m.arity()).max().unwrap_or(0)
    }

    /// Generators that occur in some term.
    pub fn support(&self) -> Vec<usize> {
        let mut gens: Vec<usize> = self
            .terms
            .keys()
            .flat_map(|m| m.factors().iter().map(|f| f.0))
            .collect();
        gens.sort_unstable();
        gens.dedup();
        gens
    }
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let mut first = true;
        for (m, c) in &self.terms {
            let negative = c < &Scalar::zero();
            let abs = if negative { -c.clone() } else { c.clone() };
            if first {
                if negative {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if negative { " - " } else { " + " })?;
            }
            first = false;
            if m.is_one() {
                f.write_str(&format_scalar(&abs))?;
            } else if abs.is_one() {
                f.write_str(&m.display(&self.alg))?;
            } else {
                write!(f, "{}*{}", format_scalar(&abs), m.display(&self.alg))?;
            }
        }
        Ok(())
    }
}

macro_rules! forward_binop {
    ($tr:ident, $method:ident, $body:expr) => {
        impl<'a, 'b> $tr<&'b Element> for &'a Element {
            type Output = Element;
            fn $method(self, rhs: &'b Element) -> Element {
                let f: fn(&Element, &Element) -> Result<Element, AlgebraError> = $body;
                f(self, rhs).expect("element operands from different algebras")
            }
        }
        impl $tr<Element> for Element {
            type Output = Element;
            fn $method(self, rhs: Element) -> Element {
                (&self).$method(&rhs)
            }
        }
        impl<'b> $tr<&'b Element> for Element {
            type Output = Element;
            fn $method(self, rhs: &'b Element) -> Element {
                (&self).$method(rhs)
            }
        }
        impl<'a> $tr<Element> for &'a Element {
            type Output = Element;
            fn $method(self, rhs: Element) -> Element {
                self.$method(&rhs)
            }
        }
    };
}

forward_binop!(Add, add, |a, b| a.checked_add(b));
forward_binop!(Sub, sub, |a, b| a.checked_add(&-b));
forward_binop!(Mul, mul, |a, b| a.checked_mul(b));

impl Neg for &Element {
    type Output = Element;
    fn neg(self) -> Element {
        Element {
            alg: self.alg.clone(),
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c.clone())).collect(),
        }
    }
}

impl Neg for Element {
    type Output = Element;
    fn neg(self) -> Element {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::super::{frac, int, GenSpec};
    use super::*;

    fn setup() -> Arc<Algebra> {
        Algebra::new(vec![
            GenSpec::odd("t1", 0),
            GenSpec::odd("t2", 0),
            GenSpec::even("dt", 1),
            GenSpec::even("x", 0),
        ])
        .unwrap()
    }

    #[test]
    fn odd_generator_squares_to_zero() {
        let a = setup();
        let t = Element::var(&a, "t1");
        assert!((&t * &t).is_zero());
    }

    #[test]
    fn odd_generators_anticommute() {
        let a = setup();
        let t1 = Element::var(&a, "t1");
        let t2 = Element::var(&a, "t2");
        assert_eq!(&t1 * &t2, -(&t2 * &t1));
    }

    #[test]
    fn even_odd_degree_square_survives() {
        let a = setup();
        let dt = Element::var(&a, "dt");
        let sq = &dt * &dt;
        assert!(!sq.is_zero());
        assert_eq!(sq.degree(), Some(2));
        assert_eq!(sq.to_string(), "dt^2");
    }

    #[test]
    fn mismatched_algebras_error() {
        let a = setup();
        let b = Algebra::new(vec![GenSpec::even("y", 0)]).unwrap();
        let x = Element::var(&a, "x");
        let y = Element::var(&b, "y");
        assert_eq!(x.checked_mul(&y), Err(AlgebraError::AlgebraMismatch));
    }

    #[test]
    fn display_and_split() {
        let a = setup();
        let e = Element::parse(&a, "1/2*x*t1*t2 - 3 + t2").unwrap();
        assert_eq!(e.to_string(), "-3 + 1/2*t1*t2*x + t2");
        // coefficient of t1 on the right: x*t1*t2/2 = -(x t2/2) t1
        let t1 = a.find("t1").unwrap();
        let c = e.right_coefficient(&Monomial::generator(t1), |g| g == t1);
        assert_eq!(c, Element::parse(&a, "-1/2*t2*x").unwrap());
        assert_eq!(e.constant_term(), int(-3));
        assert_eq!(e.scale(&frac(2, 1)).constant_term(), int(-6));
    }
}
