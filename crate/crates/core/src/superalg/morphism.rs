use std::sync::Arc;

use super::{Algebra, AlgebraError, Element, Monomial, Scalar};

/// An algebra morphism, determined by the images of the source generators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebraMorphism {
    source: Arc<Algebra>,
    target: Arc<Algebra>,
    images: Vec<Element>,
}

impl AlgebraMorphism {
    /// Requires every nonzero image to have the degree and parity of its generator.
    pub fn new(source: &Arc<Algebra>, target: &Arc<Algebra>, images: Vec<Element>) -> Result<Self, AlgebraError> {
        let f = Self::new_ungraded(source, target, images)?;
        for (g, img) in source.gens().iter().zip(&f.images) {
            if img.is_zero() {
                continue;
            }
            if img.degree() != Some(g.degree) || img.parity() != Some(g.parity) {
                return Err(AlgebraError::ImageGrading {
                    generator: g.name.clone(),
                    degree: g.degree,
                    parity: g.parity,
                    image: img.to_string(),
                });
            }
        }
        Ok(f)
    }

    /// Only requires each image to be parity-homogeneous, so that products
    /// of images obey the source's commutation rules.
    pub fn new_ungraded(
        source: &Arc<Algebra>,
        target: &Arc<Algebra>,
        images: Vec<Element>,
    ) -> Result<Self, AlgebraError> {
        if images.len() != source.len() {
            return Err(AlgebraError::LengthMismatch {
                expected: source.len(),
                found: images.len(),
            });
        }
        if images.iter().any(|v| !Algebra::same(v.algebra(), target)) {
            return Err(AlgebraError::AlgebraMismatch);
        }
        for (g, img) in source.gens().iter().zip(&images) {
            if !img.is_zero() && img.parity() != Some(g.parity) {
                return Err(AlgebraError::ImageGrading {
                    generator: g.name.clone(),
                    degree: g.degree,
                    parity: g.parity,
                    image: img.to_string(),
                });
            }
        }
        Ok(AlgebraMorphism {
            source: source.clone(),
            target: target.clone(),
            images,
        })
    }

    pub fn identity(alg: &Arc<Algebra>) -> Self {
        AlgebraMorphism {
            source: alg.clone(),
            target: alg.clone(),
            images: (0..alg.len()).map(|i| Element::generator(alg, i)).collect(),
        }
    }

    /// Generators not listed map to the target generator of the same name.
    pub fn from_partial(
        source: &Arc<Algebra>,
        target: &Arc<Algebra>,
        named: impl IntoIterator<Item = (impl AsRef<str>, Element)>,
        graded: bool,
    ) -> Result<Self, AlgebraError> {
        let mut images: Vec<Option<Element>> = vec![None; source.len()];
        for (name, img) in named {
            images[source.index_of(name.as_ref())?] = Some(img);
        }
        let images = images
            .into_iter()
            .enumerate()
            .map(|(i, img)| match img {
                Some(e) => Ok(e),
                None => Element::try_var(target, &source.gen(i).name),
            })
            .collect::<Result<Vec<_>, _>>()?;
        if graded {
            Self::new(source, target, images)
        } else {
            Self::new_ungraded(source, target, images)
        }
    }

    pub fn source(&self) -> &Arc<Algebra> {
        &self.source
    }

    pub fn target(&self) -> &Arc<Algebra> {
        &self.target
    }

    pub fn image(&self, i: usize) -> &Element {
        &self.images[i]
    }

    pub fn images(&self) -> &[Element] {
        &self.images
    }

    fn apply_monomial(&self, m: &Monomial) -> Element {
        let mut acc = Element::one(&self.target);
        for &(g, e) in m.factors() {
            acc = acc * self.images[g].pow(e);
            if acc.is_zero() {
                break;
            }
        }
        acc
    }

    pub fn checked_apply(&self, a: &Element) -> Result<Element, AlgebraError> {
        if !Algebra::same(a.algebra(), &self.source) {
            return Err(AlgebraError::AlgebraMismatch);
        }
        let mut out = Element::zero(&self.target);
        for (m, c) in a.terms() {
            out = out + self.apply_monomial(m).scale(c);
        }
        Ok(out)
    }

    /// Applies the morphism; panics when `a` is not in the source algebra.
    pub fn apply(&self, a: &Element) -> Element {
        self.checked_apply(a).expect("element not in the morphism's source")
    }

    /// `self ∘ inner`: first `inner`, then `self`.
    pub fn compose(&self, inner: &AlgebraMorphism) -> Result<AlgebraMorphism, AlgebraError> {
        if !Algebra::same(&inner.target, &self.source) {
            return Err(AlgebraError::AlgebraMismatch);
        }
        Ok(AlgebraMorphism {
            source: inner.source.clone(),
            target: self.target.clone(),
            images: inner.images.iter().map(|x| self.apply(x)).collect(),
        })
    }

    /// Multiplies every image by a scalar weight; used to rescale coordinates.
    pub fn scale_images(&self, weights: &[Scalar]) -> AlgebraMorphism {
        AlgebraMorphism {
            source: self.source.clone(),
            target: self.target.clone(),
            images: self.images.iter().zip(weights).map(|(x, w)| x.scale(w)).collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::super::GenSpec;
    use super::*;

    #[test]
    fn substitution_respects_signs() {
        let a = Algebra::new(vec![GenSpec::odd("u", 1), GenSpec::odd("v", 1)]).unwrap();
        let swap = AlgebraMorphism::new(&a, &a, vec![Element::var(&a, "v"), Element::var(&a, "u")]).unwrap();
        let uv = Element::parse(&a, "u*v").unwrap();
        assert_eq!(swap.apply(&uv), -uv.clone());
        assert_eq!(swap.compose(&swap).unwrap(), AlgebraMorphism::identity(&a));
    }

    #[test]
    fn grading_enforced() {
        let a = Algebra::new(vec![GenSpec::even("x", 0), GenSpec::odd("dx", 1)]).unwrap();
        let err = AlgebraMorphism::new(&a, &a, vec![Element::var(&a, "dx"), Element::var(&a, "dx")]);
        assert!(matches!(err, Err(AlgebraError::ImageGrading { .. })));
    }

    #[test]
    fn partial_defaults_to_same_name() {
        let a = Algebra::new(vec![GenSpec::even("x", 0), GenSpec::even("y", 0)]).unwrap();
        let f = AlgebraMorphism::from_partial(&a, &a, [("x", Element::parse(&a, "x + y^2").unwrap())], true).unwrap();
        assert_eq!(f.image(1), &Element::var(&a, "y"));
        assert_eq!(
            f.apply(&Element::parse(&a, "x*y").unwrap()),
            Element::parse(&a, "x*y + y^3").unwrap()
        );
    }
}
