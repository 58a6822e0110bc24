//! The four commands. Each returns a report; input problems are errors.

use std::collections::BTreeSet;

use jetalg::constructions::{
    closed_forms, cocycle_to_linfty, crossed_to_dgla, gerbe_two_form, pair_maps_jet, vanest, weil, ConstructionError,
    CrossedModule, CrossedModuleAxiom, GerbeCocycle, GroupCocycle, LieCochain,
};
use jetalg::dgman::check_q;
use jetalg::linalg::Matrix;
use jetalg::linfty::{ce_from_lie, dga_morphism_check, LieAlgebra};
use jetalg::nervejet::{lie_from_group_law, nerve_one_jet, DescentMc, GroupLawError, PolyGroupLaw};
use jetalg::schur::{
    closed_forms_dim, composition_series, omega2_character_identity, schur_dim, tensor_jet_dim, YoungDiagram,
};
use jetalg::simplicial::{
    g_chain, hom_enumerate, is_kan, is_truncated, pair_nerve, PointedFiniteSet, SimplicialError, TruncatedSimplicialSet,
};
use jetalg::superalg::{format_scalar, AlgebraMorphism, Derivation, Monomial, Parity};
use serde_json::{json, Map, Value};

use crate::document::{Document, ParityDoc, YoungDoc};
use crate::report::Report;
use crate::resolve::{self, vector_text};
use crate::{InputError, Params};

/// Constructions accepted by `build`, with the document kind each needs.
pub const CONSTRUCTIONS: [(&str, Option<&str>); 9] = [
    ("ce_from_lie", Some("lie_algebra")),
    ("weil", Some("lie_algebra")),
    ("crossed_to_dgla", Some("crossed_module")),
    ("cocycle_to_linfty", Some("cocycle")),
    ("nerve_one_jet", Some("group_law")),
    ("descent_mc", Some("group_law")),
    ("gerbe_two_form", Some("gerbe_cocycle")),
    ("pair_maps_jet", None),
    ("closed_forms", None),
];

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum SchurCommand {
    Dim,
    Series,
    Omega2,
    Closed,
}

fn construction_error(e: impl std::fmt::Display) -> InputError {
    InputError::Construction(e.to_string())
}

fn derivation_json(d: &Derivation) -> Value {
    Value::Object(d.describe().into_iter().map(|(k, v)| (k, Value::String(v))).collect())
}

fn morphism_json(phi: &AlgebraMorphism) -> Value {
    let src = phi.source();
    Value::Object(
        (0..src.len())
            .map(|i| (src.gen(i).name.clone(), Value::String(phi.image(i).to_string())))
            .collect(),
    )
}

fn degrees_json(d: &Derivation) -> Value {
    Value::Object(
        d.algebra()
            .gens()
            .iter()
            .map(|g| (g.name.clone(), json!(g.degree)))
            .collect(),
    )
}

fn brackets_json(g: &LieAlgebra) -> Value {
    let n = g.names();
    let mut out = Map::new();
    for i in 0..g.dim() {
        for j in i + 1..g.dim() {
            let v = g.bracket(i, j);
            if !v.is_empty() {
                out.insert(format!("[{}, {}]", n[i], n[j]), Value::String(vector_text(v, n)));
            }
        }
    }
    Value::Object(out)
}

fn cochain_json(c: &LieCochain, g: &[String], h: &[String]) -> Value {
    Value::Object(
        c.values()
            .iter()
            .map(|(args, v)| {
                let args: Vec<&str> = args.iter().map(|&a| g[a].as_str()).collect();
                (format!("({})", args.join(", ")), Value::String(vector_text(v, h)))
            })
            .collect(),
    )
}

fn strings(items: impl IntoIterator<Item = impl ToString>) -> Value {
    Value::Array(items.into_iter().map(|x| Value::String(x.to_string())).collect())
}

/// Grading and `Q² = 0` verdicts for a vector field.
fn q_verdicts(report: &mut Report, prefix: &str, q: &Derivation) {
    let check = check_q(q);
    let grading = (!check.grading.is_empty()).then(|| {
        check
            .grading
            .iter()
            .map(ToString::to_string)
            .collect::<Vec<_>>()
            .join("; ")
    });
    report.verdict(&format!("{prefix}grading"), grading);
    report.verdict(
        &format!("{prefix}q_squared"),
        check.square_witness.map(|(x, e)| format!("Q²({x}) = {e}, expected 0")),
    );
}

pub fn check(doc: &Document) -> Result<Report, InputError> {
    let mut report = Report::new("check");
    report.echo("kind", doc.kind());
    match doc {
        Document::LieAlgebra(d) => {
            let g = resolve::lie_algebra(d, "")?;
            let n = g.names();
            report.verdict(
                "jacobi",
                g.jacobi_violation().map(|(i, j, k, v)| {
                    format!(
                        "[[{a}, {b}], {c}] + [[{b}, {c}], {a}] + [[{c}, {a}], {b}] = {} at ({a}, {b}, {c})",
                        vector_text(&v, n),
                        a = n[i],
                        b = n[j],
                        c = n[k]
                    )
                }),
            );
            q_verdicts(&mut report, "ce_", &g.linfty().q());
            report
                .object("dimension", g.dim())
                .object("brackets", brackets_json(&g));
        }
        Document::CrossedModule(d) => {
            let cm = resolve::crossed_module(d)?;
            crossed_verdicts(&mut report, &cm);
        }
        Document::Cocycle(d) => {
            if let Some(c) = cocycle(&mut report, d)? {
                let gn = c.law().names();
                report.object("van_est", cochain_json(&vanest(&c), &gn, c.h_names()));
            }
        }
        Document::GroupLaw(d) => {
            if let Some(law) = group_law(&mut report, &d.product, resolve::group_law(d, "")?) {
                let g = lie_from_group_law(&law);
                report.object("lie_algebra", brackets_json(&g));
            }
        }
        Document::SimplicialSet(d) => {
            if let Some(x) = simplicial(&mut report, resolve::simplicial_set(d)?) {
                report.object("m", x.m()).object("sizes", x.sizes());
                let horn = |r: Result<(), _>| match r {
                    Ok(()) => Value::Bool(true),
                    Err(f) => Value::String(format!("{f}")),
                };
                report.object("kan", horn(is_kan(&x)));
                report.object("truncated", horn(is_truncated(&x, x.m())));
            }
        }
        Document::Young(d) => {
            let lambda = young(d)?;
            report.verdict("diagram", None);
            report
                .object("size", lambda.size())
                .object("columns", lambda.columns())
                .object("transpose", lambda.transpose().rows().to_vec());
        }
        Document::GerbeCocycle(d) => {
            gerbe(&mut report, d)?;
        }
    }
    Ok(report)
}

const AXIOMS: [(CrossedModuleAxiom, &str); 7] = [
    (CrossedModuleAxiom::JacobiG, "jacobi_g"),
    (CrossedModuleAxiom::JacobiH, "jacobi_h"),
    (CrossedModuleAxiom::LieMap, "lie_map"),
    (CrossedModuleAxiom::Equivariance, "equivariance"),
    (CrossedModuleAxiom::Peiffer, "peiffer"),
    (CrossedModuleAxiom::ActsByDerivations, "acts_by_derivations"),
    (CrossedModuleAxiom::Representation, "representation"),
];

fn crossed_verdicts(report: &mut Report, cm: &CrossedModule) {
    let violations = cm.violations();
    for (axiom, name) in AXIOMS {
        let witness = violations
            .iter()
            .find(|(a, _)| *a == axiom)
            .map(|(a, w)| format!("{a} fails at {w}"));
        report.verdict(name, witness);
    }
}

/// Records group-law verdicts; the law when they hold.
fn group_law(
    report: &mut Report,
    product: &[String],
    law: Result<PolyGroupLaw, GroupLawError>,
) -> Option<PolyGroupLaw> {
    match law {
        Ok(law) => {
            report.verdict("identity", None).verdict("associativity", None);
            Some(law)
        }
        Err(GroupLawError::NotIdentity(c)) => {
            report.verdict(
                "identity",
                Some(format!("F(x, 0) = F(0, x) = x fails in component `{c}` of {product:?}")),
            );
            None
        }
        Err(e) => {
            report
                .verdict("identity", None)
                .verdict("associativity", Some(e.to_string()));
            None
        }
    }
}

fn cocycle(report: &mut Report, d: &crate::document::CocycleDoc) -> Result<Option<GroupCocycle>, InputError> {
    let Some(law) = group_law(
        report,
        &d.group_law.product,
        resolve::group_law(&d.group_law, "group_law")?,
    ) else {
        return Ok(None);
    };
    resolve::unique_names(&d.h_names, "h_names")?;
    let phi: Vec<&str> = d.phi.iter().map(String::as_str).collect();
    let rows: Option<Vec<Vec<&str>>> = d
        .action
        .as_ref()
        .map(|r| r.iter().map(|row| row.iter().map(String::as_str).collect()).collect());
    match GroupCocycle::parse(law, d.h_names.clone(), rows.as_deref(), d.arity, &phi) {
        Ok(c) => {
            report.verdict("action", None).verdict("cocycle", None);
            Ok(Some(c))
        }
        Err(ConstructionError::NotAction(w)) => {
            report.verdict("action", Some(w));
            Ok(None)
        }
        Err(e @ ConstructionError::NotCocycle { .. }) => {
            report.verdict("action", None).verdict("cocycle", Some(e.to_string()));
            Ok(None)
        }
        Err(e) => Err(InputError::Field {
            field: "phi".into(),
            message: e.to_string(),
        }),
    }
}

fn simplicial(
    report: &mut Report,
    x: Result<TruncatedSimplicialSet, SimplicialError>,
) -> Option<TruncatedSimplicialSet> {
    match x {
        Ok(x) => {
            report.verdict("simplicial_identities", None);
            Some(x)
        }
        Err(e @ (SimplicialError::NotGroup(_) | SimplicialError::NotAssociative { .. })) => {
            report.verdict("group_axioms", Some(e.to_string()));
            None
        }
        Err(e) => {
            report.verdict("simplicial_identities", Some(e.to_string()));
            None
        }
    }
}

fn young(d: &YoungDoc) -> Result<YoungDiagram, InputError> {
    YoungDiagram::new(d.rows.clone()).map_err(|e| InputError::Field {
        field: "rows".into(),
        message: e.to_string(),
    })
}

fn gerbe(report: &mut Report, d: &crate::document::GerbeCocycleDoc) -> Result<Option<GerbeCocycle>, InputError> {
    resolve::unique_names(&d.names, "names")?;
    let names: Vec<&str> = d.names.iter().map(String::as_str).collect();
    match GerbeCocycle::parse(&names, &d.h) {
        Ok(g) => {
            report.verdict("cocycle", None);
            Ok(Some(g))
        }
        Err(e @ ConstructionError::GerbeCocycle { .. }) => {
            report.verdict("cocycle", Some(e.to_string()));
            Ok(None)
        }
        Err(e) => Err(InputError::Field {
            field: "h".into(),
            message: e.to_string(),
        }),
    }
}

/// True when a linear, generator-to-linear-combination map is invertible.
fn linear_invertible(phi: &AlgebraMorphism) -> bool {
    let (src, tgt) = (phi.source(), phi.target());
    if src.len() != tgt.len() {
        return false;
    }
    let rows = (0..src.len())
        .map(|i| {
            let img = phi.image(i);
            (0..tgt.len())
                .map(|j| img.coefficient(&Monomial::from_factors(vec![(j, 1)])))
                .collect()
        })
        .collect();
    Matrix::from_rows(rows).rank() == src.len()
}

pub fn build(doc: Option<&Document>, construction: &str, params: &Params) -> Result<Report, InputError> {
    let Some(&(_, needs)) = CONSTRUCTIONS.iter().find(|(c, _)| *c == construction) else {
        let known: Vec<&str> = CONSTRUCTIONS.iter().map(|(c, _)| *c).collect();
        return Err(InputError::Usage(format!(
            "unknown construction `{construction}`; expected one of {}",
            known.join(", ")
        )));
    };
    let mut report = Report::new("build");
    report.echo("construction", construction);
    if let Some(kind) = needs {
        match doc {
            None => {
                return Err(InputError::Usage(format!(
                    "`{construction}` needs an input document of kind {kind}"
                )))
            }
            Some(d) if d.kind() != kind => {
                return Err(InputError::Usage(format!(
                    "`{construction}` applies to {kind} documents, not {}",
                    d.kind()
                )))
            }
            Some(d) => {
                report.echo("kind", d.kind());
            }
        }
    }
    match (construction, doc) {
        ("ce_from_lie", Some(Document::LieAlgebra(d))) => {
            let g = resolve::lie_algebra(d, "")?;
            let q = ce_from_lie(&g).map_err(construction_error)?;
            q_verdicts(&mut report, "", &q);
            report
                .object("Q", derivation_json(&q))
                .object("degrees", degrees_json(&q));
        }
        ("weil", Some(Document::LieAlgebra(d))) => {
            let g = resolve::lie_algebra(d, "")?;
            let w = weil(&g).map_err(construction_error)?;
            q_verdicts(&mut report, "", w.d());
            let failures = w.relation_failures();
            report.verdict("cartan_relations", (!failures.is_empty()).then(|| failures.join("; ")));
            report
                .object("d", derivation_json(w.d()))
                .object("degrees", degrees_json(w.d()));
        }
        ("crossed_to_dgla", Some(Document::CrossedModule(d))) => {
            let cm = resolve::crossed_module(d)?;
            crossed_verdicts(&mut report, &cm);
            if report.all_ok() {
                let l = crossed_to_dgla(&cm);
                let q = l.q();
                q_verdicts(&mut report, "", &q);
                report
                    .object("brackets", strings(l.describe()))
                    .object("Q", derivation_json(&q))
                    .object("degrees", degrees_json(&q));
            }
        }
        ("cocycle_to_linfty", Some(Document::Cocycle(d))) => {
            if let Some(c) = cocycle(&mut report, d)? {
                let l = cocycle_to_linfty(&c).map_err(construction_error)?;
                let q = l.q();
                q_verdicts(&mut report, "", &q);
                let gn = c.law().names();
                report
                    .object("van_est", cochain_json(&vanest(&c), &gn, c.h_names()))
                    .object("brackets", strings(l.describe()))
                    .object("Q", derivation_json(&q))
                    .object("degrees", degrees_json(&q));
            }
        }
        ("nerve_one_jet", Some(Document::GroupLaw(d))) => {
            if let Some(law) = group_law(&mut report, &d.product, resolve::group_law(d, "")?) {
                let jet = nerve_one_jet(&law).map_err(construction_error)?;
                q_verdicts(&mut report, "", jet.q());
                let residuals = dga_morphism_check(jet.to_ce(), jet.ce(), jet.q()).map_err(construction_error)?;
                report.verdict(
                    "intertwines_ce",
                    (!residuals.is_ok()).then(|| {
                        residuals
                            .residuals
                            .iter()
                            .map(|(x, r)| format!("to_ce(CE {x}) - Q(to_ce {x}) = {r}"))
                            .collect::<Vec<_>>()
                            .join("; ")
                    }),
                );
                report.verdict(
                    "to_ce_invertible",
                    (!linear_invertible(jet.to_ce())).then(|| "the linear coordinate change is singular".to_string()),
                );
                let max = jet.q().algebra().gens().iter().map(|g| g.degree).max().unwrap_or(0);
                report.verdict(
                    "degree_bound",
                    (max > 2).then(|| format!("a coordinate has degree {max} > 2")),
                );
                report
                    .object("stages", Value::Array(jet.stages().iter().map(strings).collect()))
                    .object("Q", derivation_json(jet.q()))
                    .object("CE", derivation_json(jet.ce()))
                    .object("to_ce", morphism_json(jet.to_ce()))
                    .object("degrees", degrees_json(jet.q()));
            }
        }
        ("descent_mc", Some(Document::GroupLaw(d))) => {
            let q = params.usize("q")?;
            report.echo("q", q);
            if let Some(law) = group_law(&mut report, &d.product, resolve::group_law(d, "")?) {
                let dm = DescentMc::new(&law, q).map_err(construction_error)?;
                let r = dm.report().map_err(construction_error)?;
                let fail = |ok: bool, what: &str| (!ok).then(|| what.to_string());
                report
                    .verdict(
                        "descent_to_mc",
                        fail(r.forward_ok, "the generic descent datum maps outside the MC locus"),
                    )
                    .verdict(
                        "mc_to_descent",
                        fail(r.backward_ok, "the generic MC element maps outside descent data"),
                    )
                    .verdict(
                        "round_trip",
                        fail(r.round_trip_ok, "the two maps are not mutually inverse"),
                    );
                report
                    .object("descent_dim", r.descent_dim)
                    .object("connection_dim", r.connection_dim)
                    .object("generic_descent", strings(dm.generic_descent()))
                    .object("generic_connection", strings(dm.generic_connection()));
            }
        }
        ("gerbe_two_form", Some(Document::GerbeCocycle(d))) => {
            if let Some(g) = gerbe(&mut report, d)? {
                let omega = gerbe_two_form(&g);
                let d_omega = g.de_rham().apply(&omega);
                report.verdict(
                    "d_omega",
                    (!d_omega.is_zero()).then(|| format!("dω = {d_omega}, expected 0")),
                );
                report
                    .object("omega", omega.to_string())
                    .object("d_omega", d_omega.to_string());
            }
        }
        ("pair_maps_jet", _) => {
            let p = params.usize("p")?;
            report.echo("p", p);
            let jet = pair_maps_jet(p);
            q_verdicts(&mut report, "raw_", jet.raw());
            q_verdicts(&mut report, "canonical_", jet.canonical());
            let r = dga_morphism_check(jet.change(), jet.canonical(), jet.raw()).map_err(construction_error)?;
            report.verdict(
                "change_intertwines",
                (!r.is_ok()).then(|| {
                    format!(
                        "residuals on {:?}",
                        r.residuals.iter().map(|(x, _)| x).collect::<Vec<_>>()
                    )
                }),
            );
            report
                .object("raw", derivation_json(jet.raw()))
                .object("canonical", derivation_json(jet.canonical()))
                .object("change", morphism_json(jet.change()))
                .object("degrees", degrees_json(jet.canonical()));
        }
        ("closed_forms", _) => {
            let (k, n) = (params.usize("k")?, params.usize("n")?);
            report.echo("k", k).echo("n", n);
            let c = closed_forms(n, k as u32);
            report
                .object("dim", c.dim())
                .object("ambient_dim", c.ambient_dim)
                .object("basis", strings(&c.basis));
        }
        _ => unreachable!("document kind checked above"),
    }
    Ok(report)
}

pub fn enumerate(doc: &Document, set_size: usize) -> Result<Report, InputError> {
    let Document::SimplicialSet(d) = doc else {
        return Err(InputError::Usage(format!(
            "enumerate needs a simplicial_set document, not {}",
            doc.kind()
        )));
    };
    if set_size == 0 {
        return Err(InputError::Usage("--set-size must be at least 1".into()));
    }
    let mut report = Report::new("enumerate");
    report.echo("kind", doc.kind()).echo("set_size", set_size);
    let x = match resolve::simplicial_set(d)? {
        Ok(x) => x,
        Err(e) => return Err(InputError::Precondition(format!("the document fails check: {e}"))),
    };
    let m = x.m();
    let s = PointedFiniteSet::of_size(set_size);
    let chain = g_chain(&s, &x, m).map_err(|e| InputError::Precondition(e.to_string()))?;
    let oracle = hom_enumerate(&pair_nerve(&s, m), &x).map_err(construction_error)?;
    let oracle: BTreeSet<Vec<usize>> = oracle.iter().map(|f| f.star_restriction(&s, m)).collect();
    let chain_set: BTreeSet<Vec<usize>> = chain.homs().iter().cloned().collect();
    report.verdict(
        "oracle_agrees",
        (oracle != chain_set || oracle.len() != chain.homs().len()).then(|| {
            format!(
                "horn filling gives {} maps, brute force {}",
                chain.homs().len(),
                oracle.len()
            )
        }),
    );
    // transition(k) is the restriction G^(k+1) -> G^(k)
    let not_onto: Vec<String> = (0..=m)
        .filter(|&k| !chain.is_surjective(k))
        .map(|k| format!("G^({}) -> G^({k})", k + 1))
        .collect();
    report.verdict(
        "transitions_surjective",
        (!not_onto.is_empty()).then(|| format!("not surjective: {}", not_onto.join(", "))),
    );
    report.verdict(
        "top_transition_bijective",
        (!chain.is_bijective(m)).then(|| format!("G^({}) -> G^({m}) is not bijective", m + 1)),
    );
    report.object("bijective", (0..=m).map(|k| chain.is_bijective(k)).collect::<Vec<_>>());
    report
        .object("level_sizes", chain.sizes())
        .object("count", chain.homs().len())
        .object("oracle_count", oracle.len());
    Ok(report)
}

fn parity(d: Option<&YoungDoc>, params: &Params) -> Result<Parity, InputError> {
    if let Some(p) = params.get("parity") {
        return match p {
            "even" => Ok(Parity::Even),
            "odd" => Ok(Parity::Odd),
            other => Err(InputError::Usage(format!("parity must be even or odd, not `{other}`"))),
        };
    }
    match d.and_then(|d| d.parity) {
        Some(ParityDoc::Even) => Ok(Parity::Even),
        Some(ParityDoc::Odd) => Ok(Parity::Odd),
        None => Err(InputError::Usage(
            "schur dim needs a parity (document field or --params parity=...)".into(),
        )),
    }
}

pub fn schur(
    doc: Option<&Document>,
    sub: SchurCommand,
    degree: Option<usize>,
    params: &Params,
) -> Result<Report, InputError> {
    let young_doc = match doc {
        None => None,
        Some(Document::Young(d)) => Some(d),
        Some(other) => {
            return Err(InputError::Usage(format!(
                "schur needs a young document, not {}",
                other.kind()
            )))
        }
    };
    let diagram = || -> Result<YoungDiagram, InputError> {
        young(young_doc.ok_or_else(|| InputError::Usage("this subcommand needs a young document".into()))?)
    };
    let mut report = Report::new("schur");
    match sub {
        SchurCommand::Dim => {
            let lambda = diagram()?;
            let n = match params.get("n") {
                Some(_) => params.usize("n")?,
                None => young_doc
                    .and_then(|d| d.n)
                    .ok_or_else(|| InputError::Usage("schur dim needs n (document field or --params n=...)".into()))?,
            };
            let parity = parity(young_doc, params)?;
            report
                .echo("subcommand", "dim")
                .echo("rows", lambda.rows().to_vec())
                .echo("n", n)
                .echo("parity", parity.to_string());
            report.object("dim", schur_dim(&lambda, n, parity));
            if parity == Parity::Odd {
                report.object("tensor_jet_dim", tensor_jet_dim(&lambda, n));
            }
        }
        SchurCommand::Series => {
            let lambda = diagram()?;
            report.echo("subcommand", "series").echo("rows", lambda.rows().to_vec());
            let series = composition_series(&lambda).map_err(|e| InputError::Field {
                field: "rows".into(),
                message: e.to_string(),
            })?;
            let sizes_ok = series.iter().all(|l| l.size() == lambda.size());
            report.verdict(
                "square_count",
                (!sizes_ok).then(|| "a step changed the number of squares".to_string()),
            );
            report.object("series", series.iter().map(|l| l.rows().to_vec()).collect::<Vec<_>>());
        }
        SchurCommand::Omega2 => {
            let d = degree.ok_or_else(|| InputError::Usage("schur omega2 needs --degree D".into()))?;
            report.echo("subcommand", "omega2").echo("degree", d);
            let r = omega2_character_identity(d).map_err(construction_error)?;
            report.verdict(
                "calibration",
                (!r.calibrated()).then(|| "degrees 0 to 2 disagree".to_string()),
            );
            report.verdict(
                "character_identity",
                r.first_failure()
                    .and_then(|d| r.slices.iter().find(|s| s.degree == d))
                    .map(|s| format!("degree {}: lhs dim {} vs rhs dim {}", s.degree, s.lhs_dim, s.rhs_dim)),
            );
            report.object(
                "slices",
                r.slices
                    .iter()
                    .map(|s| {
                        json!({
                            "degree": s.degree,
                            "lhs_dim": format_scalar(&s.lhs_dim),
                            "rhs_dim": format_scalar(&s.rhs_dim),
                            "equal": s.equal,
                        })
                    })
                    .collect::<Vec<_>>(),
            );
        }
        SchurCommand::Closed => {
            let (k, n) = (params.usize("k")?, params.usize("n")?);
            report.echo("subcommand", "closed").echo("k", k).echo("n", n);
            report.object("dim", closed_forms_dim(k as u32, n));
        }
    }
    Ok(report)
}
