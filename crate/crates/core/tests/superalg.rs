mod common;

use common::*;
use jetalg::superalg::{frac, int, Algebra, AlgebraMorphism, Derivation, Element, GenSpec, Parity};
use proptest::prelude::*;

fn sign(p: Parity, q: Parity) -> Element {
    let alg = mixed_algebra();
    Element::scalar(&alg, if p.sign_with(q) { int(-1) } else { int(1) })
}

#[test]
fn products_of_odd_and_even_generators() {
    let alg = Algebra::new(vec![
        GenSpec::odd("θ1", 0),
        GenSpec::odd("θ2", 0),
        GenSpec::even("dθ1", 1),
    ])
    .unwrap();
    let t1 = Element::var(&alg, "θ1");
    let t2 = Element::var(&alg, "θ2");
    let dt = Element::var(&alg, "dθ1");
    assert!((&t1 * &t1).is_zero());
    assert_eq!(&t1 * &t2, -(&t2 * &t1));
    assert_eq!((&dt * &dt).to_string(), "dθ1^2");
}

#[test]
fn substitution_examples() {
    let alg = Algebra::new(vec![
        GenSpec::even("x", 0),
        GenSpec::odd("dx", 1),
        GenSpec::odd("β", -1),
        GenSpec::odd("θ", 0),
        GenSpec::even("c", 0),
        GenSpec::even("e", 0),
    ])
    .unwrap();
    let x2 = Element::parse(&alg, "x^2").unwrap();
    let id = AlgebraMorphism::identity(&alg);
    assert_eq!(id.apply(&x2), x2);

    let shift =
        AlgebraMorphism::from_partial(&alg, &alg, [("x", Element::parse(&alg, "x + dx*β").unwrap())], true).unwrap();
    assert_eq!(shift.apply(&x2), Element::parse(&alg, "x^2 + 2*x*dx*β").unwrap());

    let at_base = AlgebraMorphism::from_partial(&alg, &alg, [("θ", Element::zero(&alg))], true).unwrap();
    assert_eq!(
        at_base.apply(&Element::parse(&alg, "c + θ*e").unwrap()),
        Element::var(&alg, "c")
    );
}

#[test]
fn substitution_rejects_grading_change() {
    let alg = Algebra::new(vec![GenSpec::even("x", 0), GenSpec::odd("dx", 1)]).unwrap();
    assert!(AlgebraMorphism::from_partial(&alg, &alg, [("x", Element::var(&alg, "dx"))], true).is_err());
}

#[test]
fn partial_derivatives_are_graded() {
    let alg = mixed_algebra();
    let f = Element::parse(&alg, "a*θ*x^2 + 1/2*e*y").unwrap();
    let d_theta = Derivation::partial(&alg, alg.index_of("θ").unwrap());
    // θ sits behind the odd a
    assert_eq!(d_theta.apply(&f), Element::parse(&alg, "-a*x^2").unwrap());
    let d_x = Derivation::partial(&alg, 0);
    assert_eq!(d_x.apply(&f), Element::parse(&alg, "2*a*θ*x").unwrap());
    assert_eq!(
        d_x.apply(&Element::parse(&alg, "x/3").unwrap()),
        Element::scalar(&alg, frac(1, 3))
    );
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn supercommutative(sa in element_spec(6), sb in element_spec(6), pa in parity_strategy(), pb in parity_strategy()) {
        let alg = mixed_algebra();
        let a = element_from(&alg, &sa, Some(pa));
        let b = element_from(&alg, &sb, Some(pb));
        prop_assert_eq!(&a * &b, sign(pa, pb) * (&b * &a));
    }

    #[test]
    fn associative_and_canonical(sa in element_spec(6), sb in element_spec(6), sc in element_spec(6)) {
        let alg = mixed_algebra();
        let a = element_from(&alg, &sa, None);
        let b = element_from(&alg, &sb, None);
        let c = element_from(&alg, &sc, None);
        let abc = (&a * &b) * &c;
        prop_assert_eq!(&abc, &(&a * (&b * &c)));
        let renormalized = Element::from_terms(&alg, abc.terms().clone());
        prop_assert_eq!(&renormalized, &abc);
        for m in abc.terms().keys() {
            for &(g, e) in m.factors() {
                prop_assert!(!alg.gen(g).parity.is_odd() || e == 1);
            }
        }
    }

    #[test]
    fn degrees_add(sa in element_spec(6), sb in element_spec(6), da in -1i32..4, db in -1i32..4) {
        let alg = mixed_algebra();
        let a = element_from(&alg, &sa, None).filter(|m| m.degree(&alg) == da);
        let b = element_from(&alg, &sb, None).filter(|m| m.degree(&alg) == db);
        let ab = &a * &b;
        if !ab.is_zero() {
            prop_assert_eq!(ab.degree(), Some(da + db));
        }
    }

    #[test]
    fn leibniz(
        sa in element_spec(6), sb in element_spec(6), pa in parity_strategy(),
        vals in prop::collection::vec(element_spec(6), 6), pd in parity_strategy(), deg in -1i32..2,
    ) {
        let alg = mixed_algebra();
        let a = element_from(&alg, &sa, Some(pa));
        let b = element_from(&alg, &sb, None);
        let d = derivation_from(&alg, &vals, pd, deg);
        let lhs = d.apply(&(&a * &b));
        let rhs = d.apply(&a) * &b + sign(pd, pa) * &a * d.apply(&b);
        prop_assert_eq!(lhs, rhs);
        let shifted = d.apply(&a.filter(|m| m.degree(&alg) == 1));
        if !shifted.is_zero() && d.grading_violations().is_empty() {
            prop_assert_eq!(shifted.degree(), Some(1 + deg));
        }
    }

    #[test]
    fn jacobi_for_derivations(
        v1 in prop::collection::vec(element_spec(6), 6), p1 in parity_strategy(),
        v2 in prop::collection::vec(element_spec(6), 6), p2 in parity_strategy(),
        v3 in prop::collection::vec(element_spec(6), 6), p3 in parity_strategy(),
    ) {
        let alg = mixed_algebra();
        let d1 = derivation_from(&alg, &v1, p1, 0);
        let d2 = derivation_from(&alg, &v2, p2, 0);
        let d3 = derivation_from(&alg, &v3, p3, 0);
        let lhs = d1.commutator(&d2.commutator(&d3));
        let mut rhs = d1.commutator(&d2).commutator(&d3);
        let other = d2.commutator(&d1.commutator(&d3));
        rhs = rhs.add(&if p1.sign_with(p2) { other.scale(&int(-1)) } else { other });
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn commutator_is_a_derivation(
        v1 in prop::collection::vec(element_spec(6), 6), p1 in parity_strategy(),
        v2 in prop::collection::vec(element_spec(6), 6), p2 in parity_strategy(),
        sa in element_spec(6),
    ) {
        let alg = mixed_algebra();
        let d1 = derivation_from(&alg, &v1, p1, 0);
        let d2 = derivation_from(&alg, &v2, p2, 0);
        let a = element_from(&alg, &sa, None);
        let c = d1.commutator(&d2);
        let direct = d1.apply(&d2.apply(&a)) - sign(p1, p2) * d2.apply(&d1.apply(&a));
        prop_assert_eq!(c.apply(&a), direct);
    }
}
