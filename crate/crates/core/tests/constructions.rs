mod common;

use jetalg::constructions::*;
use jetalg::dgman::check_q;
use jetalg::linfty::{dga_morphism_check, q_from_brackets, vector, LieAlgebra, Vector};
use jetalg::nervejet::PolyGroupLaw;
use jetalg::superalg::{int, Algebra, AlgebraMorphism, Derivation, Element, GenSpec, Parity};
use proptest::prelude::*;

fn names(v: &[&str]) -> Vec<String> {
    v.iter().map(|s| s.to_string()).collect()
}

fn e(i: usize) -> Vector {
    vector([(i, int(1))])
}

// crossed modules

#[test]
fn abelian_identity_crossed_module() {
    let g = LieAlgebra::abelian_named(names(&["g"]));
    let h = LieAlgebra::abelian_named(names(&["h"]));
    let cm = CrossedModule::new(g, h, vec![e(0)], vec![vec![Vector::new()]]).unwrap();
    let l = crossed_to_dgla(&cm);
    assert_eq!(l.arity(1).count(), 1);
    assert_eq!(l.bracket(&[1]), e(0));
    assert_eq!(l.arity(2).count(), 0);
    assert!(check_q(&q_from_brackets(&l)).is_ok());
}

#[test]
fn heisenberg_center_crossed_module() {
    let g = LieAlgebra::heisenberg();
    let h = LieAlgebra::abelian_named(names(&["z"]));
    let mu = (0..3)
        .map(|x| vec![vector(g.bracket(x, 2).values().map(|c| (0, c.clone())))])
        .collect();
    let cm = CrossedModule::new(g, h, vec![e(2)], mu).unwrap();
    assert!(check_q(&q_from_brackets(&cm.to_dgla())).is_ok());
}

#[test]
fn adjoint_crossed_modules_square_to_zero() {
    for g in [LieAlgebra::sl2(), LieAlgebra::so3(), LieAlgebra::heisenberg()] {
        let cm = adjoint_crossed_module(&g, names(&["u", "v", "w"])).unwrap();
        assert!(check_q(&q_from_brackets(&cm.to_dgla())).is_ok());
    }
}

fn sl2_on_plane() -> (LieAlgebra, LieAlgebra, Vec<Vector>, Vec<Vec<Vector>>) {
    let g = LieAlgebra::sl2();
    let h = LieAlgebra::abelian_named(names(&["v1", "v2"]));
    // columns of diag(1,-1), E12, E21
    let mu = vec![
        vec![e(0), vector([(1, int(-1))])],
        vec![Vector::new(), e(0)],
        vec![e(1), Vector::new()],
    ];
    (g, h, vec![Vector::new(), Vector::new()], mu)
}

#[test]
fn representation_with_zero_map_is_crossed() {
    let (g, h, m, mu) = sl2_on_plane();
    let cm = CrossedModule::new(g, h, m, mu).unwrap();
    assert!(check_q(&q_from_brackets(&cm.to_dgla())).is_ok());
}

#[test]
fn sign_flip_in_action_breaks_equivariance() {
    let g = LieAlgebra::sl2();
    let good = adjoint_crossed_module(&g, names(&["u", "v", "w"])).unwrap();
    let mut mu = good.mu().to_vec();
    mu[1][0] = mu[1][0].iter().map(|(k, c)| (*k, -c.clone())).collect();
    let err = CrossedModule::new(good.g().clone(), good.h().clone(), good.m().to_vec(), mu).unwrap_err();
    let ConstructionError::CrossedModule(v) = &err else {
        panic!("unexpected error {err}");
    };
    assert_eq!(v[0].0, CrossedModuleAxiom::Equivariance);
    assert!(err.to_string().contains("equivariance"));
}

#[test]
fn broken_representation_named() {
    let (g, h, m, mut mu) = sl2_on_plane();
    mu[0][1] = e(1);
    let err = CrossedModule::new(g, h, m, mu).unwrap_err();
    let ConstructionError::CrossedModule(v) = err else {
        panic!()
    };
    assert!(v.iter().any(|(a, _)| *a == CrossedModuleAxiom::Representation));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn accepted_crossed_modules_square_to_zero(
        which in 0usize..3,
        slot in 0usize..30,
        target in 0usize..3,
        delta in -2i64..=2,
    ) {
        let base = match which {
            0 => adjoint_crossed_module(&LieAlgebra::sl2(), names(&["u", "v", "w"])).unwrap(),
            1 => adjoint_crossed_module(&LieAlgebra::heisenberg(), names(&["u", "v", "w"])).unwrap(),
            _ => {
                let (g, h, m, mu) = sl2_on_plane();
                CrossedModule::new(g, h, m, mu).unwrap()
            }
        };
        let (mut m, mut mu) = (base.m().to_vec(), base.mu().to_vec());
        let nh = m.len();
        let ng = mu.len();
        let bump = |v: &mut Vector, k: usize| {
            let x = v.get(&k).cloned().unwrap_or_else(|| int(0)) + int(delta);
            if x == int(0) { v.remove(&k); } else { v.insert(k, x); }
        };
        if slot < 6 {
            bump(&mut m[slot % nh], target % ng);
        } else {
            bump(&mut mu[slot % ng][(slot / ng) % nh], target % nh);
        }
        let unchecked = CrossedModule::new_unchecked(base.g().clone(), base.h().clone(), m.clone(), mu.clone());
        match CrossedModule::new(base.g().clone(), base.h().clone(), m, mu) {
            Ok(cm) => prop_assert!(check_q(&q_from_brackets(&cm.to_dgla())).is_ok()),
            Err(_) => prop_assert!(!unchecked.violations().is_empty()),
        }
    }
}

// group cocycles and the Van Est map

#[test]
fn symmetric_cocycle_has_zero_van_est() {
    let c = GroupCocycle::parse(PolyGroupLaw::abelian(1), names(&["h"]), None, 2, &["x1[1]*x1[2]"]).unwrap();
    assert!(vanest(&c).is_zero());
}

#[test]
fn area_cocycle_gives_heisenberg() {
    let c = GroupCocycle::parse(
        PolyGroupLaw::abelian(2),
        names(&["z"]),
        None,
        2,
        &["x1[1]*x2[2] - x2[1]*x1[2]"],
    )
    .unwrap();
    let ve = vanest(&c);
    assert_eq!(ve.value(&[0, 1]), vector([(0, int(2))]));
    assert_eq!(ve.value(&[1, 0]), vector([(0, int(-2))]));
    let l = cocycle_to_linfty(&c).unwrap();
    assert_eq!(l.bracket(&[0, 1]), vector([(2, int(2))]));
    assert!(check_q(&q_from_brackets(&l)).is_ok());
}

#[test]
fn zero_cocycle_is_semidirect() {
    let rho = [vec!["1", "x1[1]"], vec!["0", "1"]];
    let c = GroupCocycle::parse(
        PolyGroupLaw::abelian(1),
        names(&["h1", "h2"]),
        Some(&rho),
        2,
        &["0", "0"],
    )
    .unwrap();
    assert!(vanest(&c).is_zero());
    let l = cocycle_to_linfty(&c).unwrap();
    // μ(x1) h2 = h1
    assert_eq!(l.bracket(&[0, 2]), e(1));
    assert!(check_q(&q_from_brackets(&l)).is_ok());
}

#[test]
fn determinant_cocycle_is_ternary() {
    let det = "x1[1]*x2[2]*x3[3] - x1[1]*x3[2]*x2[3] - x2[1]*x1[2]*x3[3] \
               + x2[1]*x3[2]*x1[3] + x3[1]*x1[2]*x2[3] - x3[1]*x2[2]*x1[3]";
    let c = GroupCocycle::parse(
        PolyGroupLaw::abelian(3),
        names(&["h"]),
        None,
        3,
        &[&format!("({det})/6")],
    )
    .unwrap();
    let ve = vanest(&c);
    assert_eq!(ve.value(&[0, 1, 2]), e(0));
    assert_eq!(ve.value(&[2, 1, 0]), vector([(0, int(-1))]));
    let l = cocycle_to_linfty(&c).unwrap();
    assert_eq!(l.basis()[3].degree, -1);
    assert_eq!(l.arity(2).count(), 0);
    assert_eq!(l.arity(3).count(), 1);
    assert!(check_q(&q_from_brackets(&l)).is_ok());
}

#[test]
fn non_cocycles_and_non_actions_rejected() {
    let err = GroupCocycle::parse(PolyGroupLaw::abelian(1), names(&["h"]), None, 2, &["x1[1]"]).unwrap_err();
    assert!(matches!(err, ConstructionError::NotCocycle { .. }));
    let rho = [vec!["1 + x1[1]"]];
    let err = GroupCocycle::parse(PolyGroupLaw::abelian(1), names(&["h"]), Some(&rho), 2, &["0"]).unwrap_err();
    assert!(matches!(err, ConstructionError::NotAction(_)));
    let err = GroupCocycle::parse(PolyGroupLaw::abelian(1), names(&["h"]), None, 1, &["0"]).unwrap_err();
    assert!(matches!(err, ConstructionError::CocycleArity(1)));
}

/// `(δψ)(g_1, g_2) = ρ(g_1)ψ(g_2) − ψ(g_1 g_2) + ψ(g_1)` for a 1-cochain `ψ`
/// written in `name[1]`.
fn group_coboundary(law: &PolyGroupLaw, rho: &[Vec<Element>], psi: &[Element]) -> Vec<Element> {
    let n = law.dim();
    let one = law.copies(1);
    let two = law.copies(2);
    let g1: Vec<Element> = (0..n).map(|i| Element::generator(&two, i)).collect();
    let g2: Vec<Element> = (0..n).map(|i| Element::generator(&two, n + i)).collect();
    let at = |f: &Element, args: &[Element]| {
        AlgebraMorphism::new_ungraded(&one, &two, args.to_vec())
            .unwrap()
            .apply(f)
    };
    let prod = law.multiply_in(&two, &g1, &g2);
    (0..psi.len())
        .map(|b| {
            let act = (0..psi.len()).fold(Element::zero(&two), |acc, a| {
                acc + at(&rho[b][a], &g1) * at(&psi[a], &g2)
            });
            act - at(&psi[b], &prod) + at(&psi[b], &g1)
        })
        .collect()
}

fn poly(alg: &std::sync::Arc<Algebra>, coeffs: &[i64]) -> Element {
    // c0 x + c1 y + c2 x^2 + c3 x y + c4 y^2 in the first two generators
    let x = Element::generator(alg, 0);
    let y = Element::generator(alg, 1);
    let terms = [x.clone(), y.clone(), &x * &x, &x * &y, &y * &y];
    terms
        .iter()
        .zip(coeffs)
        .fold(Element::zero(alg), |acc, (t, c)| acc + t.scale(&int(*c)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn van_est_of_group_cocycles_are_lie_cocycles(
        psi in prop::collection::vec(prop::collection::vec(-2i64..=2, 5), 2),
        bilinear in prop::collection::vec(-2i64..=2, 4),
        which in 0usize..2,
    ) {
        // Heisenberg with trivial action, or ℝ² acting unipotently on ℝ²
        let (law, rho_src): (PolyGroupLaw, Vec<Vec<&str>>) = if which == 0 {
            (PolyGroupLaw::heisenberg(), vec![vec!["1", "0"], vec!["0", "1"]])
        } else {
            (PolyGroupLaw::abelian(2), vec![vec!["1", "x1[1]"], vec!["0", "1"]])
        };
        let one = law.copies(1);
        let two = law.copies(2);
        let rho: Vec<Vec<Element>> = rho_src.iter().map(|r| r.iter().map(|s| Element::parse(&one, s).unwrap()).collect()).collect();
        let psi: Vec<Element> = psi.iter().map(|c| poly(&one, c)).collect();
        let mut phi = group_coboundary(&law, &rho, &psi);
        if which == 0 {
            // bilinear in the additive coordinates x, y: always a cocycle for trivial action
            let n = law.dim();
            let (x1, y1, x2, y2) = (Element::generator(&two, 0), Element::generator(&two, 1), Element::generator(&two, n), Element::generator(&two, n + 1));
            let b = [&x1 * &x2, &x1 * &y2, &y1 * &x2, &y1 * &y2];
            for (t, c) in b.iter().zip(&bilinear) {
                phi[0] = &phi[0] + t.scale(&int(*c));
            }
        }
        let c = GroupCocycle::new(law.clone(), names(&["h1", "h2"]), Some(rho), 2, phi).unwrap();
        let ve = vanest(&c);
        let g = law.lie_algebra();
        prop_assert!(lie_cochain_differential(&g, &c.infinitesimal_action(), &ve).is_zero());
        prop_assert!(check_q(&q_from_brackets(&cocycle_to_linfty(&c).unwrap())).is_ok());
    }

    #[test]
    fn van_est_is_antisymmetric(coeffs in prop::collection::vec(-3i64..=3, 9)) {
        // any bilinear form on the abelian group ℝ³ is a 2-cocycle
        let law = PolyGroupLaw::abelian(3);
        let two = law.copies(2);
        let mut phi = Element::zero(&two);
        for i in 0..3 {
            for j in 0..3 {
                phi = phi + (Element::generator(&two, i) * Element::generator(&two, 3 + j)).scale(&int(coeffs[3 * i + j]));
            }
        }
        let c = GroupCocycle::new(law, names(&["h"]), None, 2, vec![phi]).unwrap();
        let ve = vanest(&c);
        for i in 0..3 {
            for j in 0..3 {
                let expected = int(coeffs[3 * i + j] - coeffs[3 * j + i]);
                prop_assert_eq!(ve.value(&[i, j]).get(&0).cloned().unwrap_or_else(|| int(0)), expected);
            }
        }
    }

    #[test]
    fn linfty_square_zero_iff_lie_cocycle(
        which in 0usize..2,
        n in 2usize..4,
        raw in prop::collection::vec(prop::collection::vec(-1i64..=1, 3), 4),
    ) {
        // 𝔤 = sl2 or Heisenberg acting on itself by ad; ω random
        let g = if which == 0 { LieAlgebra::sl2() } else { LieAlgebra::heisenberg() };
        let mu: Vec<Vec<Vector>> = (0..3).map(|x| (0..3).map(|a| g.bracket(x, a).clone()).collect()).collect();
        let tuples: Vec<Vec<usize>> = if n == 2 {
            vec![vec![0, 1], vec![0, 2], vec![1, 2]]
        } else {
            vec![vec![0, 1, 2]]
        };
        let omega = LieCochain::new(
            n,
            3,
            tuples.into_iter().zip(&raw).map(|(t, r)| (t, vector(r.iter().enumerate().map(|(k, c)| (k, int(*c)))))),
        );
        let l = linfty_from_lie_cochain(&g, &names(&["u", "v", "w"]), &mu, &omega).unwrap();
        let cocycle = lie_cochain_differential(&g, &mu, &omega).is_zero();
        prop_assert_eq!(check_q(&q_from_brackets(&l)).is_ok(), cocycle);
    }
}

// Weil algebra

#[test]
fn abelian_weil() {
    let w = weil(&LieAlgebra::abelian(1)).unwrap();
    let d: Vec<String> = w.d().values().iter().map(Element::to_string).collect();
    assert_eq!(d, vec!["t1", "0"]);
    assert!(w.relation_failures().is_empty());
}

#[test]
fn weil_relations_hold() {
    for g in [LieAlgebra::sl2(), LieAlgebra::heisenberg(), LieAlgebra::so3()] {
        let w = weil(&g).unwrap();
        assert_eq!(w.algebra().len(), 6);
        assert!(check_q(w.d()).is_ok());
        assert_eq!(w.relation_failures(), Vec::<String>::new());
    }
}

#[test]
fn weil_differential_values() {
    let w = weil(&LieAlgebra::heisenberg()).unwrap();
    let alg = w.algebra();
    let x3 = alg.index_of("ξ3").unwrap();
    let t3 = alg.index_of("t3").unwrap();
    assert_eq!(w.d().value(x3), &Element::parse(alg, "t3 - ξ1*ξ2").unwrap());
    assert_eq!(w.d().value(t3), &Element::parse(alg, "-ξ1*t2 + ξ2*t1").unwrap());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn weil_square_zero_iff_jacobi(raw in prop::collection::vec(-1i64..=1, 9)) {
        let mut g = LieAlgebra::abelian(3);
        for (p, (i, j)) in [(0, 1), (0, 2), (1, 2)].into_iter().enumerate() {
            g.set(i, j, vector((0..3).map(|k| (k, int(raw[3 * p + k])))));
        }
        let w = WeilAlgebra::new_unchecked(&g);
        prop_assert_eq!(check_q(w.d()).is_ok(), g.satisfies_jacobi());
        prop_assert_eq!(weil(&g).is_ok(), g.satisfies_jacobi());
        if g.satisfies_jacobi() {
            prop_assert!(w.relation_failures().is_empty());
        }
    }
}

// gerbe two-form

#[test]
fn zero_gerbe_has_zero_form() {
    let h = GerbeCocycle::parse(&["x1", "x2"], "0").unwrap();
    assert!(gerbe_two_form(&h).is_zero());
}

#[test]
fn bilinear_gerbe_form() {
    let h = GerbeCocycle::parse(&["x1", "x2"], "(x1[2] - x1[1])*(x2[3] - x2[2])").unwrap();
    let w = gerbe_two_form(&h);
    assert_eq!(w, Element::parse(h.forms(), "dx1*dx2").unwrap());
    assert!(h.de_rham().apply(&w).is_zero());
}

#[test]
fn coboundary_gerbe_is_exact() {
    // a(x, y) = p(x)(q(y) − q(x)) with p = x1 + x2², q = x1 x2
    let two = jetalg::superalg::copy_algebra(&[GenSpec::even("x1", 0), GenSpec::even("x2", 0)], 2).unwrap();
    let a = Element::parse(&two, "(x1[1] + x2[1]^2)*(x1[2]*x2[2] - x1[1]*x2[1])").unwrap();
    let h = gerbe_coboundary(&["x1", "x2"], &a).unwrap();
    let theta = gerbe_potential(&h, &a).unwrap();
    let w = gerbe_two_form(&h);
    assert!(!w.is_zero());
    assert_eq!(w, h.de_rham().apply(&theta));
}

#[test]
fn gerbe_conditions_checked() {
    let err = GerbeCocycle::parse(&["x1"], "x1[1]*x1[2]").unwrap_err();
    assert!(matches!(
        err,
        ConstructionError::GerbeCocycle {
            condition: "h(x,x,y) = 0",
            ..
        }
    ));
    let err = GerbeCocycle::parse(&["x1"], "(x1[2] - x1[1])^2*(x1[3] - x1[2])").unwrap_err();
    assert!(matches!(err, ConstructionError::GerbeCocycle { .. }));
}

#[test]
fn closed_two_forms_are_morphisms_from_degree_two_line() {
    let h = GerbeCocycle::parse(&["x1", "x2", "x3"], "(x3[2] - x3[1])*(x1[3] - x1[2])").unwrap();
    let forms = h.forms();
    let line = Algebra::new(vec![GenSpec::even("t", 2)]).unwrap();
    let zero = Derivation::zero(&line, 1, Parity::Odd);
    let to = |w: Element| AlgebraMorphism::new(&line, forms, vec![w]).unwrap();
    let w = gerbe_two_form(&h);
    assert!(dga_morphism_check(&to(w), &zero, h.de_rham()).unwrap().is_ok());
    let open = Element::parse(forms, "x3*dx1*dx2").unwrap();
    assert!(!dga_morphism_check(&to(open), &zero, h.de_rham()).unwrap().is_ok());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn bilinear_gerbes_are_closed(b in prop::collection::vec(-3i64..=3, 9)) {
        let names3 = ["x1", "x2", "x3"];
        let mut src = String::from("0");
        for i in 0..3 {
            for j in 0..3 {
                src.push_str(&format!(" + ({})*(x{a}[2] - x{a}[1])*(x{c}[3] - x{c}[2])", b[3 * i + j], a = i + 1, c = j + 1));
            }
        }
        let h = GerbeCocycle::parse(&names3, &src).unwrap();
        let w = gerbe_two_form(&h);
        prop_assert!(h.de_rham().apply(&w).is_zero());
        for i in 0..3 {
            for j in i + 1..3 {
                let m = Element::parse(h.forms(), &format!("dx{}*dx{}", i + 1, j + 1)).unwrap();
                let (mono, _) = m.terms().iter().next().unwrap();
                prop_assert_eq!(w.coefficient(mono), int(b[3 * i + j] - b[3 * j + i]));
            }
        }
    }

    #[test]
    fn coboundary_gerbes_are_exact(p in prop::collection::vec(-2i64..=2, 5), q in prop::collection::vec(-2i64..=2, 5)) {
        let base = [GenSpec::even("x1", 0), GenSpec::even("x2", 0)];
        let one = jetalg::superalg::copy_algebra(&base, 1).unwrap();
        let two = jetalg::superalg::copy_algebra(&base, 2).unwrap();
        let at = |f: &Element, copy: usize| {
            AlgebraMorphism::new(&one, &two, vec![Element::generator(&two, 2 * copy), Element::generator(&two, 2 * copy + 1)])
                .unwrap()
                .apply(f)
        };
        let (pp, qq) = (poly(&one, &p), poly(&one, &q));
        let a = at(&pp, 0) * (at(&qq, 1) - at(&qq, 0));
        let h = gerbe_coboundary(&["x1", "x2"], &a).unwrap();
        let w = gerbe_two_form(&h);
        prop_assert!(h.de_rham().apply(&w).is_zero());
        prop_assert_eq!(w, h.de_rham().apply(&gerbe_potential(&h, &a).unwrap()));
    }
}

// jets

#[test]
fn pair_maps_jet_on_a_line() {
    let j = pair_maps_jet(1);
    let alg = j.algebra();
    let degrees: Vec<(String, i32)> = alg.gens().iter().map(|g| (g.name.clone(), g.degree)).collect();
    assert_eq!(
        degrees,
        vec![("x".into(), 0), ("ξ".into(), 1), ("τ".into(), 1), ("t".into(), 2)]
    );
    let show = |d: &Derivation| d.values().iter().map(Element::to_string).collect::<Vec<_>>();
    assert_eq!(show(j.raw()), vec!["ξ + τ", "-t", "t", "0"]);
    assert_eq!(show(j.canonical()), vec!["ξ", "0", "t", "0"]);
    assert!(check_q(j.raw()).is_ok());
    assert!(check_q(j.canonical()).is_ok());
    assert!(dga_morphism_check(j.change(), j.canonical(), j.raw()).unwrap().is_ok());
}

#[test]
fn pair_maps_jet_is_coordinatewise() {
    let j = pair_maps_jet(2);
    assert_eq!(j.algebra().len(), 8);
    let alg = j.algebra();
    for s in ["1", "2"] {
        let v = |n: &str| j.canonical().value(alg.index_of(&format!("{n}{s}")).unwrap()).clone();
        assert_eq!(v("x"), Element::var(alg, &format!("ξ{s}")));
        assert!(v("ξ").is_zero());
        assert_eq!(v("τ"), Element::var(alg, &format!("t{s}")));
        assert!(v("t").is_zero());
    }
    assert!(check_q(j.canonical()).is_ok());
}

#[test]
fn closed_forms_on_the_odd_line() {
    let z0 = closed_forms_jet(0);
    assert_eq!(z0.basis, vec![Element::one(&z0.algebra)]);
    let z1 = closed_forms_jet(1);
    assert_eq!(z1.basis, vec![Element::var(&z1.algebra, "dθ")]);
    let z3 = closed_forms_jet(3);
    let alg = &z3.algebra;
    assert_eq!(z3.basis, vec![Element::parse(alg, "dθ^3").unwrap()]);
    assert_eq!(z3.ambient_dim, 2);
    let d = jetalg::dgman::pit(&jetalg::dgman::GradedManifold::new(vec![GenSpec::odd("θ", 0)]).unwrap());
    assert!(!d.d().apply(&Element::parse(alg, "θ*dθ^3").unwrap()).is_zero());
}

fn binomial(n: u64, k: u64) -> u64 {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

#[test]
fn closed_forms_dimensions_follow_the_poincare_lemma() {
    for n in 1..=3usize {
        let mut closed_prev = 0;
        let mut ambient_prev = 0;
        for k in 0..=4u32 {
            let z = closed_forms(n, k);
            let ambient = (1u64 << n) * binomial(n as u64 + k as u64 - 1, k as u64);
            assert_eq!(z.ambient_dim as u64, ambient);
            // closed forms are exact above degree 0, and constants in degree 0
            let expected = if k == 0 { 1 } else { ambient_prev - closed_prev };
            assert_eq!(z.dim() as u64, expected, "n = {n}, k = {k}");
            closed_prev = z.dim() as u64;
            ambient_prev = z.ambient_dim as u64;
        }
    }
}
