mod common;

use common::*;
use jetalg::dgman::{check_q, relative_forms, GradedManifold};
use jetalg::linfty::{
    brackets_from_q, ce_from_lie, dga_morphism_check, koszul_sort, mc_check, q_from_brackets, vector, BasisVector,
    LInftyAlgebra, LInftyError, LieAlgebra,
};
use jetalg::solve::solve_affine;
use jetalg::superalg::{frac, int, Algebra, AlgebraMorphism, Derivation, Element, GenSpec, Parity, Scalar};
use proptest::prelude::*;

#[test]
fn zero_field_has_no_brackets() {
    let alg = Algebra::new(vec![GenSpec::odd("ξ1", 1), GenSpec::even("ξ2", 2)]).unwrap();
    let l = brackets_from_q(&Derivation::zero(&alg, 1, Parity::Odd)).unwrap();
    assert!(l.table().is_empty());
    assert!(q_from_brackets(&LieAlgebra::abelian(3).linfty()).is_zero());
}

#[test]
fn heisenberg_chevalley_eilenberg() {
    let q = ce_from_lie(&LieAlgebra::heisenberg()).unwrap();
    let alg = q.algebra();
    assert_eq!(q.value(2), &Element::parse(alg, "-ξ1*ξ2").unwrap());
    assert!(q.value(0).is_zero() && q.value(1).is_zero());
    assert!(check_q(&q).is_ok());
}

#[test]
fn ce_brackets_are_the_lie_bracket() {
    for g in [LieAlgebra::heisenberg(), LieAlgebra::sl2(), LieAlgebra::so3()] {
        let q = ce_from_lie(&g).unwrap();
        assert!(check_q(&q).is_ok());
        let l = LInftyAlgebra::from_q(g.linfty().basis().to_vec(), &q).unwrap();
        assert_eq!(l.arity(1).count(), 0);
        assert_eq!(l.max_arity(), 2);
        for i in 0..g.dim() {
            for j in 0..g.dim() {
                assert_eq!(&l.bracket(&[i, j]), g.bracket(i, j));
            }
        }
    }
}

#[test]
fn non_jacobi_table_gives_witness() {
    // [x,y] = z, [y,z] = x, [z,x] = x
    let names = vec!["x".to_string(), "y".to_string(), "z".to_string()];
    let g = LieAlgebra::from_brackets(
        names,
        &[
            (0, 1, vector([(2, int(1))])),
            (1, 2, vector([(0, int(1))])),
            (2, 0, vector([(0, int(1))])),
        ],
    );
    assert!(!g.satisfies_jacobi());
    let q = ce_from_lie(&g).unwrap();
    let report = check_q(&q);
    assert!(report.grading.is_empty());
    assert!(report.square_witness.is_some());
}

#[test]
fn non_antisymmetric_constants_rejected() {
    let mut c = vec![vec![vector([]); 2]; 2];
    c[0][1] = vector([(0, int(1))]);
    let err = LieAlgebra::from_constants(vec!["a".into(), "b".into()], c).unwrap_err();
    assert!(matches!(err, LInftyError::NotAntisymmetric { .. }));
}

#[test]
fn jacobi_mutations_are_detected() {
    for g in [LieAlgebra::heisenberg(), LieAlgebra::sl2(), LieAlgebra::so3()] {
        let n = g.dim();
        for i in 0..n {
            for j in i + 1..n {
                for k in 0..n {
                    let mut h = g.clone();
                    let mut v = h.bracket(i, j).clone();
                    *v.entry(k).or_insert_with(|| int(0)) += int(1);
                    h.set(i, j, vector(v));
                    let q = ce_from_lie(&h).unwrap();
                    assert_eq!(check_q(&q).is_ok(), h.satisfies_jacobi(), "{:?} {i} {j} {k}", g.names());
                }
            }
        }
    }
}

/// Fiber forms on ℝ^{0|1} with `q` odd parameters.
fn superpoint_forms(q: usize) -> (std::sync::Arc<Algebra>, Derivation) {
    let fiber = GradedManifold::new(vec![GenSpec::odd("θ", 0)]).unwrap();
    relative_forms(&fiber, (1..=q).map(|i| GenSpec::odd(format!("p{i}"), 0)).collect()).unwrap()
}

#[test]
fn zero_is_maurer_cartan() {
    let (alg, d) = superpoint_forms(1);
    let l = LieAlgebra::heisenberg().linfty();
    let alpha = vec![Element::zero(&alg); 3];
    assert!(mc_check(&alpha, &l, &d).unwrap().is_ok());
}

#[test]
fn abelian_mc_forces_b_zero() {
    let (alg, d) = superpoint_forms(1);
    let l = LieAlgebra::abelian(1).linfty();
    let a = Element::var(&alg, "p1");
    for b in [int(0), int(1), frac(-2, 3)] {
        let alpha = vec![(&a + Element::var(&alg, "θ").scale(&b)) * Element::var(&alg, "dθ")];
        let verdict = mc_check(&alpha, &l, &d).unwrap();
        assert_eq!(verdict.is_ok(), b.eq(&int(0)));
        assert_eq!(verdict.residual[0], Element::parse(&alg, "dθ^2").unwrap().scale(&b));
    }
}

#[test]
fn inhomogeneous_alpha_rejected() {
    let (alg, d) = superpoint_forms(1);
    let l = LieAlgebra::abelian(1).linfty();
    let alpha = vec![Element::parse(&alg, "dθ + θ").unwrap()];
    assert!(matches!(
        mc_check(&alpha, &l, &d),
        Err(LInftyError::Inhomogeneous { .. })
    ));
}

#[test]
fn heisenberg_mc_solutions_are_parametrized_by_a() {
    // a^c generic odd elements of the parameter algebra ℝ^{0|3}, b^c unknown
    // even elements written in the even monomials 1, p_i p_j
    let fiber = GradedManifold::new(vec![GenSpec::odd("θ", 0)]).unwrap();
    let mut params: Vec<GenSpec> = (1..=3).map(|i| GenSpec::odd(format!("p{i}"), 0)).collect();
    let even_monomials = ["1", "p1*p2", "p1*p3", "p2*p3"];
    for c in 1..=3 {
        for m in 0..even_monomials.len() {
            params.push(GenSpec::even(format!("u{c}_{m}"), 0));
        }
    }
    let (alg, d) = relative_forms(&fiber, params).unwrap();
    let g = LieAlgebra::heisenberg();
    let l = g.linfty();
    let a: Vec<Element> = ["p1 + 2*p2", "p3 - p1*p2*p3", "p2"]
        .iter()
        .map(|s| Element::parse(&alg, s).unwrap())
        .collect();
    let b: Vec<Element> = (1..=3)
        .map(|c| {
            even_monomials
                .iter()
                .enumerate()
                .map(|(m, mono)| Element::parse(&alg, &format!("u{c}_{m}*{mono}")).unwrap())
                .fold(Element::zero(&alg), |x, y| x + y)
        })
        .collect();
    let theta = Element::var(&alg, "θ");
    let dtheta = Element::var(&alg, "dθ");
    let alpha: Vec<Element> = (0..3).map(|c| (&a[c] + &b[c] * &theta) * &dtheta).collect();
    let residual = mc_check(&alpha, &l, &d).unwrap().residual;
    let unknowns: Vec<usize> = (0..alg.len()).filter(|&i| alg.gen(i).name.starts_with('u')).collect();
    let sol = solve_affine(&alg, &residual, &unknowns).unwrap().expect("consistent");
    assert_eq!(sol.nullity, 0);
    // b^c = -1/2 c^c_{ij} a^i a^j, i.e. b^3 = -a^1 a^2 and b^1 = b^2 = 0
    let solved_b: Vec<Element> = b.iter().map(|x| sol.apply(x)).collect();
    assert!(solved_b[0].is_zero() && solved_b[1].is_zero());
    assert_eq!(solved_b[2], -(&a[0] * &a[1]));
    for r in &residual {
        assert!(sol.apply(r).is_zero());
    }
}

#[test]
fn closed_two_forms_are_morphisms_from_r2() {
    // ℝ[2]: one coordinate t of degree 2 with Qt = 0, i.e. V = ℝ in degree -1
    let l = LInftyAlgebra::new(vec![BasisVector::graded("e", "t", -1)]).unwrap();
    let q = l.q();
    let fiber = GradedManifold::new((1..=3).map(|i| GenSpec::even(format!("x{i}"), 0)).collect()).unwrap();
    let (alg, d) = relative_forms(&fiber, vec![]).unwrap();
    for (form, closed) in [
        ("dx1*dx2", true),
        ("x3*dx1*dx2", false),
        ("x1*dx2*dx3 + x2*dx3*dx1 + x3*dx1*dx2", false),
        ("x3*dx1*dx2 + x1*dx2*dx3 - 2*x2*dx1*dx3 + dx1*dx3", false),
        ("2*x3*dx1*dx2 + x2*dx1*dx3 - x1*dx2*dx3", true),
        ("x2*dx1*dx3 + x3*dx1*dx2", true),
    ] {
        let w = Element::parse(&alg, form).unwrap();
        let phi = AlgebraMorphism::new(q.algebra(), &alg, vec![w.clone()]).unwrap();
        let verdict = dga_morphism_check(&phi, &q, &d).unwrap();
        assert_eq!(verdict.is_ok(), d.apply(&w).is_zero(), "{form}");
        assert_eq!(verdict.is_ok(), closed, "{form}");
        assert_eq!(mc_check(&[w], &l, &d).unwrap().is_ok(), closed);
    }
}

#[test]
fn zero_map_is_a_morphism() {
    let q = ce_from_lie(&LieAlgebra::sl2()).unwrap();
    let (alg, d) = superpoint_forms(2);
    let phi = AlgebraMorphism::new(q.algebra(), &alg, vec![Element::zero(&alg); 3]).unwrap();
    assert!(dga_morphism_check(&phi, &q, &d).unwrap().is_ok());
}

#[test]
fn ungraded_images_rejected() {
    let q = ce_from_lie(&LieAlgebra::abelian(1)).unwrap();
    let (alg, d) = superpoint_forms(1);
    let phi = AlgebraMorphism::new_ungraded(q.algebra(), &alg, vec![Element::var(&alg, "θ")]).unwrap();
    assert!(dga_morphism_check(&phi, &q, &d).is_err());
}

/// A basis mixing degrees and parities, so Koszul and décalage signs matter.
fn mixed_basis() -> Vec<BasisVector> {
    vec![
        BasisVector::graded("g1", "ξ1", 0),
        BasisVector::graded("g2", "ξ2", 0),
        BasisVector::graded("h", "η", -1),
        BasisVector::new("s", "σ", 0, Parity::Odd),
        BasisVector::graded("m", "μ", -2),
    ]
}

/// All table slots (sorted arguments, output) allowed by degree and parity, arity ≤ 3.
fn slots(basis: &[BasisVector]) -> Vec<(Vec<usize>, usize)> {
    let n = basis.len();
    let par = |i: usize| basis[i].parity;
    let mut tuples: Vec<Vec<usize>> = (0..n).map(|i| vec![i]).collect();
    let mut frontier = tuples.clone();
    for _ in 1..3 {
        let mut next = Vec::new();
        for t in &frontier {
            for i in *t.last().unwrap()..n {
                let mut u = t.clone();
                u.push(i);
                if koszul_sort(&u, par).is_some() {
                    next.push(u);
                }
            }
        }
        tuples.extend(next.iter().cloned());
        frontier = next;
    }
    let mut out = Vec::new();
    for t in tuples {
        let k = t.len() as i32;
        let deg = t.iter().map(|&a| basis[a].degree).sum::<i32>() + 2 - k;
        let p = t.iter().fold(Parity::of_degree(k), |p, &a| p + basis[a].parity);
        for (c, b) in basis.iter().enumerate() {
            if b.degree == deg && b.parity == p {
                out.push((t.clone(), c));
            }
        }
    }
    out
}

fn random_table(choices: &[(usize, i64)]) -> LInftyAlgebra {
    let basis = mixed_basis();
    let all = slots(&basis);
    let mut l = LInftyAlgebra::new(basis).unwrap();
    let mut acc: std::collections::BTreeMap<Vec<usize>, jetalg::linfty::Vector> = Default::default();
    for &(s, c) in choices {
        let (args, out) = &all[s % all.len()];
        *acc.entry(args.clone())
            .or_default()
            .entry(*out)
            .or_insert_with(|| int(0)) += int(c);
    }
    for (args, v) in acc {
        l.set_bracket(&args, vector(v)).unwrap();
    }
    l
}

#[test]
fn mixed_basis_has_slots_of_every_arity() {
    let s = slots(&mixed_basis());
    for k in 1..=3 {
        assert!(s.iter().any(|(a, _)| a.len() == k), "arity {k}");
    }
    assert!(s.iter().any(|(a, _)| a.windows(2).any(|w| w[0] == w[1])));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn tables_round_trip(choices in prop::collection::vec((0usize..1000, -3i64..=3), 0..8)) {
        let l = random_table(&choices);
        let back = LInftyAlgebra::from_q(l.basis().to_vec(), &l.q()).unwrap();
        prop_assert_eq!(back, l);
    }

    #[test]
    fn vector_fields_round_trip(specs in prop::collection::vec(element_spec(5), 5)) {
        let l0 = LInftyAlgebra::new(mixed_basis()).unwrap();
        let alg = l0.coordinate_algebra().clone();
        let values: Vec<Element> = (0..5).map(|c| {
            let g = alg.gen(c);
            element_from(&alg, &specs[c], Some(g.parity.flip()))
                .filter(|m| !m.is_one() && m.degree(&alg) == g.degree + 1)
        }).collect();
        let q = Derivation::new(&alg, 1, Parity::Odd, values).unwrap();
        let l = LInftyAlgebra::from_q(mixed_basis(), &q).unwrap();
        prop_assert_eq!(l.q(), q);
    }

    #[test]
    fn mc_series_matches_morphism_route(
        choices in prop::collection::vec((0usize..1000, -3i64..=3), 0..8),
        comps in prop::collection::vec(element_spec(6), 5),
    ) {
        let l = random_table(&choices);
        let q = l.q();
        // fiber ℝ^{1|1} over parameters ℝ^{1|1}
        let fiber = GradedManifold::new(vec![GenSpec::even("y", 0), GenSpec::odd("θ", 0)]).unwrap();
        let (alg, d) = relative_forms(&fiber, vec![GenSpec::odd("p", 0), GenSpec::even("r", 0)]).unwrap();
        let alpha: Vec<Element> = (0..5).map(|c| {
            let g = q.algebra().gen(c);
            element_from(&alg, &comps[c], Some(g.parity)).filter(|m| m.degree(&alg) == g.degree)
        }).collect();
        let residual = mc_check(&alpha, &l, &d).unwrap().residual;
        let phi = AlgebraMorphism::new(q.algebra(), &alg, alpha.clone()).unwrap();
        for c in 0..5 {
            let expected = d.apply(&alpha[c]) - phi.apply(q.value(c));
            prop_assert_eq!(&residual[c], &expected);
        }
        let verdict = dga_morphism_check(&phi, &q, &d).unwrap();
        prop_assert_eq!(verdict.is_ok(), residual.iter().all(Element::is_zero));
    }
}

#[test]
fn scalar_type_is_exact() {
    let half: Scalar = frac(1, 2);
    assert_eq!(&half + &half, int(1));
}
