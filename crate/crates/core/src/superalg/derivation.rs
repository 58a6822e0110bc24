use std::sync::Arc;

use num_traits::One;

use super::{Algebra, AlgebraError, Element, Monomial, Parity, Scalar};

/// A graded derivation, determined by its values on generators.
///
/// Application follows the graded Leibniz rule
/// `D(ab) = D(a) b + (-1)^{|D||a|} a D(b)` with signs taken from parity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Derivation {
    alg: Arc<Algebra>,
    degree: i32,
    parity: Parity,
    values: Vec<Element>,
}

/// A generator on which a derivation's value has the wrong degree or parity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradingViolation {
    pub generator: String,
    pub expected_degree: i32,
    pub expected_parity: Parity,
    pub value: String,
}

impl Derivation {
    pub fn new(alg: &Arc<Algebra>, degree: i32, parity: Parity, values: Vec<Element>) -> Result<Self, AlgebraError> {
        if values.len() != alg.len() {
            return Err(AlgebraError::LengthMismatch {
                expected: alg.len(),
                found: values.len(),
            });
        }
        if values.iter().any(|v| !Algebra::same(v.algebra(), alg)) {
            return Err(AlgebraError::AlgebraMismatch);
        }
        Ok(Derivation {
            alg: alg.clone(),
            degree,
            parity,
            values,
        })
    }

    pub fn zero(alg: &Arc<Algebra>, degree: i32, parity: Parity) -> Self {
        Derivation {
            alg: alg.clone(),
            degree,
            parity,
            values: vec![Element::zero(alg); alg.len()],
        }
    }

    /// Values given by generator name; unnamed generators map to zero.
    pub fn from_named(
        alg: &Arc<Algebra>,
        degree: i32,
        parity: Parity,
        named: impl IntoIterator<Item = (impl AsRef<str>, Element)>,
    ) -> Result<Self, AlgebraError> {
        let mut d = Self::zero(alg, degree, parity);
        for (name, v) in named {
            let i = alg.index_of(name.as_ref())?;
            if !Algebra::same(v.algebra(), alg) {
                return Err(AlgebraError::AlgebraMismatch);
            }
            d.values[i] = v;
        }
        Ok(d)
    }

    /// The graded partial derivative `∂/∂x_i` acting from the left.
    pub fn partial(alg: &Arc<Algebra>, i: usize) -> Self {
        let g = alg.gen(i);
        let mut d = Self::zero(alg, -g.degree, g.parity);
        d.values[i] = Element::one(alg);
        d
    }

    pub fn algebra(&self) -> &Arc<Algebra> {
        &self.alg
    }

    pub fn degree(&self) -> i32 {
        self.degree
    }

    pub fn parity(&self) -> Parity {
        self.parity
    }

    pub fn value(&self, i: usize) -> &Element {
        &self.values[i]
    }

    pub fn values(&self) -> &[Element] {
        &self.values
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(Element::is_zero)
    }

    fn apply_monomial(&self, m: &Monomial) -> Element {
        let alg = &self.alg;
        let mut out = Element::zero(alg);
        let factors = m.factors();
        let mut prefix_parity = Parity::Even;
        for (k, &(g, e)) in factors.iter().enumerate() {
            let dg = &self.values[g];
            if !dg.is_zero() {
                let prefix = Monomial::from_factors(factors[..k].to_vec());
                let mut rest = factors[k + 1..].to_vec();
                if e > 1 {
                    rest.insert(0, (g, e - 1));
                }
                let suffix = Monomial::from_factors(rest);
                let sign = if self.parity.sign_with(prefix_parity) {
                    -Scalar::one()
                } else {
                    Scalar::one()
                };
                let coeff = sign * Scalar::from_integer(e.into());
                let term = Element::monomial(alg, prefix, coeff) * dg * Element::monomial(alg, suffix, Scalar::one());
                out = out + term;
            }
            if alg.gen(g).parity.is_odd() && e % 2 == 1 {
                prefix_parity = prefix_parity.flip();
            }
        }
        out
    }

    pub fn checked_apply(&self, a: &Element) -> Result<Element, AlgebraError> {
        if !Algebra::same(a.algebra(), &self.alg) {
            return Err(AlgebraError::AlgebraMismatch);
        }
        let mut out = Element::zero(&self.alg);
        for (m, c) in a.terms() {
            out = out + self.apply_monomial(m).scale(c);
        }
        Ok(out)
    }

    /// Applies the derivation; panics on an algebra mismatch.
    pub fn apply(&self, a: &Element) -> Element {
        self.checked_apply(a)
            .expect("derivation and element from different algebras")
    }

    /// Graded commutator `[self, other] = self∘other - (-1)^{|self||other|} other∘self`.
    pub fn commutator(&self, other: &Derivation) -> Derivation {
        assert!(
            Algebra::same(&self.alg, &other.alg),
            "derivations from different algebras"
        );
        let negate = self.parity.sign_with(other.parity);
        let values = (0..self.alg.len())
            .map(|i| {
                let ab = self.apply(&other.values[i]);
                let ba = other.apply(&self.values[i]);
                if negate {
                    ab + ba
                } else {
                    ab - ba
                }
            })
            .collect();
        Derivation {
            alg: self.alg.clone(),
            degree: self.degree + other.degree,
            parity: self.parity + other.parity,
            values,
        }
    }

    pub fn scale(&self, c: &Scalar) -> Derivation {
        Derivation {
            alg: self.alg.clone(),
            degree: self.degree,
            parity: self.parity,
            values: self.values.iter().map(|v| v.scale(c)).collect(),
        }
    }

    /// Sum of two derivations of the same degree and parity.
    pub fn add(&self, other: &Derivation) -> Derivation {
        assert_eq!((self.degree, self.parity), (other.degree, other.parity));
        Derivation {
            alg: self.alg.clone(),
            degree: self.degree,
            parity: self.parity,
            values: self.values.iter().zip(&other.values).map(|(a, b)| a + b).collect(),
        }
    }

    /// Left multiplication by a homogeneous element: `(f D)(a) = f D(a)`.
    pub fn left_mul(&self, f: &Element) -> Derivation {
        let degree = self.degree + f.degree().unwrap_or(0);
        let parity = self.parity + f.parity().unwrap_or(Parity::Even);
        Derivation {
            alg: self.alg.clone(),
            degree,
            parity,
            values: self.values.iter().map(|v| f * v).collect(),
        }
    }

    /// Generators whose value is inconsistent with the declared degree/parity.
    pub fn grading_violations(&self) -> Vec<GradingViolation> {
        self.alg
            .gens()
            .iter()
            .zip(&self.values)
            .filter_map(|(g, v)| {
                let expected_degree = g.degree + self.degree;
                let expected_parity = g.parity + self.parity;
                let ok = v.is_zero() || (v.degree() == Some(expected_degree) && v.parity() == Some(expected_parity));
                (!ok).then(|| GradingViolation {
                    generator: g.name.clone(),
                    expected_degree,
                    expected_parity,
                    value: v.to_string(),
                })
            })
            .collect()
    }

    /// Values rendered as `name -> value` lines, skipping zeros.
    pub fn describe(&self) -> Vec<(String, String)> {
        self.alg
            .gens()
            .iter()
            .zip(&self.values)
            .filter(|(_, v)| !v.is_zero())
            .map(|(g, v)| (g.name.clone(), v.to_string()))
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::super::{int, GenSpec};
    use super::*;

    fn forms() -> (Arc<Algebra>, Derivation, Derivation) {
        let alg = Algebra::new(vec![
            GenSpec::odd("t1", 0),
            GenSpec::odd("t2", 0),
            GenSpec::even("dt1", 1),
            GenSpec::even("dt2", 1),
        ])
        .unwrap();
        let d = Derivation::from_named(
            &alg,
            1,
            Parity::Odd,
            [("t1", Element::var(&alg, "dt1")), ("t2", Element::var(&alg, "dt2"))],
        )
        .unwrap();
        let e = Derivation::from_named(
            &alg,
            0,
            Parity::Even,
            [("dt1", Element::var(&alg, "dt1")), ("dt2", Element::var(&alg, "dt2"))],
        )
        .unwrap();
        (alg, d, e)
    }

    #[test]
    fn de_rham_on_generator() {
        let (alg, d, _) = forms();
        assert_eq!(d.apply(&Element::var(&alg, "t1")), Element::var(&alg, "dt1"));
    }

    #[test]
    fn leibniz_with_odd_factor() {
        let (alg, d, _) = forms();
        let t1t2 = Element::parse(&alg, "t1*t2").unwrap();
        let expected = Element::parse(&alg, "dt1*t2 - t1*dt2").unwrap();
        assert_eq!(d.apply(&t1t2), expected);
    }

    #[test]
    fn euler_kills_degree_zero() {
        let (alg, _, e) = forms();
        assert!(e.apply(&Element::var(&alg, "t2")).is_zero());
        assert_eq!(
            e.apply(&Element::parse(&alg, "dt1^3").unwrap()),
            Element::parse(&alg, "3*dt1^3").unwrap()
        );
    }

    #[test]
    fn euler_de_rham_commutator() {
        let (_, d, e) = forms();
        assert_eq!(e.commutator(&d), d);
        assert!(e.commutator(&e).is_zero());
        let dd = d.commutator(&d);
        assert!(dd.is_zero());
        assert_eq!(dd.degree(), 2);
    }

    #[test]
    fn grading_violation_reported() {
        let (alg, _, _) = forms();
        let bad = Derivation::from_named(&alg, 1, Parity::Odd, [("t1", Element::scalar(&alg, int(1)))]).unwrap();
        let v = bad.grading_violations();
        assert_eq!(v.len(), 1);
        assert_eq!(v[0].generator, "t1");
    }
}
