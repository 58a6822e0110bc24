//! Turns documents into library objects. Unresolvable names and malformed
//! scalars are input errors naming the field; failures of the mathematical
//! axioms are returned as the library's own errors so they can become
//! verdicts.

use std::collections::BTreeSet;

use jetalg::constructions::CrossedModule;
use jetalg::linfty::{LieAlgebra, Vector};
use jetalg::nervejet::{GroupLawError, PolyGroupLaw};
use jetalg::simplicial::{nerve_group, FiniteGroup, SimplicialError, TruncatedSimplicialSet};
use jetalg::superalg::{format_scalar, parse_scalar};
use num_traits::{One, Zero};

use crate::document::{
    CrossedModuleDoc, ExplicitDoc, GroupLawDoc, GroupTableDoc, LieAlgebraDoc, SimplicialSetDoc, VectorDoc,
};
use crate::InputError;

fn field_error(field: impl Into<String>, message: impl Into<String>) -> InputError {
    InputError::Field {
        field: field.into(),
        message: message.into(),
    }
}

fn join(prefix: &str, field: &str) -> String {
    if prefix.is_empty() {
        field.to_string()
    } else {
        format!("{prefix}.{field}")
    }
}

/// Rejects repeated names.
pub fn unique_names(names: &[String], field: &str) -> Result<(), InputError> {
    let mut seen = BTreeSet::new();
    for (i, n) in names.iter().enumerate() {
        if n.is_empty() {
            return Err(field_error(format!("{field}[{i}]"), "empty name"));
        }
        if !seen.insert(n) {
            return Err(field_error(format!("{field}[{i}]"), format!("repeated name `{n}`")));
        }
    }
    Ok(())
}

fn index_of(names: &[String], name: &str, field: &str) -> Result<usize, InputError> {
    names
        .iter()
        .position(|n| n == name)
        .ok_or_else(|| field_error(field, format!("unknown name `{name}`")))
}

pub fn vector(v: &VectorDoc, names: &[String], field: &str) -> Result<Vector, InputError> {
    let mut out = Vector::new();
    for (name, c) in v {
        let at = format!("{field}.{name}");
        let i = index_of(names, name, &at)?;
        let c = parse_scalar(c).map_err(|e| field_error(&at, e.to_string()))?;
        if !c.is_zero() {
            out.insert(i, c);
        }
    }
    Ok(out)
}

/// `2 e - f`; the zero vector is `0`.
pub fn vector_text(v: &Vector, names: &[String]) -> String {
    let mut out = String::new();
    for (i, c) in v {
        let (neg, abs) = if c < &Zero::zero() {
            (true, -c.clone())
        } else {
            (false, c.clone())
        };
        let sep = match (out.is_empty(), neg) {
            (true, false) => "",
            (true, true) => "-",
            (false, false) => " + ",
            (false, true) => " - ",
        };
        out.push_str(sep);
        if !abs.is_one() {
            out.push_str(&format_scalar(&abs));
            out.push(' ');
        }
        out.push_str(&names[*i]);
    }
    if out.is_empty() {
        "0".into()
    } else {
        out
    }
}

pub fn lie_algebra(doc: &LieAlgebraDoc, prefix: &str) -> Result<LieAlgebra, InputError> {
    let names_field = join(prefix, "names");
    unique_names(&doc.names, &names_field)?;
    let mut seen = BTreeSet::new();
    let mut brackets = Vec::new();
    for (b, br) in doc.brackets.iter().enumerate() {
        let at = join(prefix, &format!("brackets[{b}]"));
        let i = index_of(&doc.names, &br.left, &format!("{at}.left"))?;
        let j = index_of(&doc.names, &br.right, &format!("{at}.right"))?;
        let v = vector(&br.value, &doc.names, &format!("{at}.value"))?;
        if i == j && !v.is_empty() {
            return Err(field_error(at, format!("[{0}, {0}] must vanish", br.left)));
        }
        if !seen.insert((i.min(j), i.max(j))) {
            return Err(field_error(
                at,
                format!("bracket of `{}` and `{}` given twice", br.left, br.right),
            ));
        }
        if i != j {
            brackets.push((i, j, v));
        }
    }
    Ok(LieAlgebra::from_brackets(doc.names.clone(), &brackets))
}

/// Builds the crossed module without checking its axioms.
pub fn crossed_module(doc: &CrossedModuleDoc) -> Result<CrossedModule, InputError> {
    let g = lie_algebra(&doc.g, "g")?;
    let h = lie_algebra(&doc.h, "h")?;
    let (gn, hn) = (g.names().to_vec(), h.names().to_vec());
    let mut m = vec![Vector::new(); hn.len()];
    for (name, v) in &doc.m {
        let a = index_of(&hn, name, &format!("m.{name}"))?;
        m[a] = vector(v, &gn, &format!("m.{name}"))?;
    }
    let mut mu = vec![vec![Vector::new(); hn.len()]; gn.len()];
    let mut seen = BTreeSet::new();
    for (k, act) in doc.action.iter().enumerate() {
        let at = format!("action[{k}]");
        let x = index_of(&gn, &act.g, &format!("{at}.g"))?;
        let a = index_of(&hn, &act.h, &format!("{at}.h"))?;
        if !seen.insert((x, a)) {
            return Err(field_error(
                at,
                format!("action of `{}` on `{}` given twice", act.g, act.h),
            ));
        }
        mu[x][a] = vector(&act.value, &hn, &format!("{at}.value"))?;
    }
    Ok(CrossedModule::new_unchecked(g, h, m, mu))
}

/// Parse and shape problems are input errors; identity and associativity
/// failures are returned inside.
pub fn group_law(doc: &GroupLawDoc, prefix: &str) -> Result<Result<PolyGroupLaw, GroupLawError>, InputError> {
    unique_names(&doc.names, &join(prefix, "names"))?;
    let names: Vec<&str> = doc.names.iter().map(String::as_str).collect();
    let product: Vec<&str> = doc.product.iter().map(String::as_str).collect();
    match PolyGroupLaw::parse(&names, &product) {
        Err(GroupLawError::Algebra(e)) => Err(field_error(join(prefix, "product"), e.to_string())),
        Err(e @ GroupLawError::Arity { .. }) => Err(field_error(join(prefix, "product"), e.to_string())),
        other => Ok(other),
    }
}

/// Shape problems are input errors; group axioms and simplicial identities
/// are returned inside.
pub fn simplicial_set(doc: &SimplicialSetDoc) -> Result<Result<TruncatedSimplicialSet, SimplicialError>, InputError> {
    match (&doc.group, &doc.explicit) {
        (Some(g), None) => group_table(g).map(|r| r.map(|g| nerve_group(&g))),
        (None, Some(x)) => explicit(x),
        _ => Err(field_error(
            "simplicial_set",
            "give exactly one of `group` and `explicit`",
        )),
    }
}

pub fn group_table(doc: &GroupTableDoc) -> Result<Result<FiniteGroup, SimplicialError>, InputError> {
    unique_names(&doc.elements, "group.elements")?;
    let n = doc.elements.len();
    if doc.table.len() != n {
        return Err(field_error(
            "group.table",
            format!("expected {n} rows, found {}", doc.table.len()),
        ));
    }
    let mut table = Vec::with_capacity(n);
    for (a, row) in doc.table.iter().enumerate() {
        if row.len() != n {
            return Err(field_error(
                format!("group.table[{a}]"),
                format!("expected {n} entries, found {}", row.len()),
            ));
        }
        table.push(
            row.iter()
                .enumerate()
                .map(|(b, x)| index_of(&doc.elements, x, &format!("group.table[{a}][{b}]")))
                .collect::<Result<Vec<_>, _>>()?,
        );
    }
    Ok(FiniteGroup::new(doc.elements.clone(), table))
}

fn explicit(doc: &ExplicitDoc) -> Result<Result<TruncatedSimplicialSet, SimplicialError>, InputError> {
    let top = doc.m + 1;
    if doc.levels.len() != top + 1 {
        return Err(field_error(
            "explicit.levels",
            format!("expected levels 0..={top}, found {}", doc.levels.len()),
        ));
    }
    for (n, level) in doc.levels.iter().enumerate() {
        unique_names(&level.simplices, &format!("explicit.levels[{n}].simplices"))?;
    }
    let resolve_maps = |n: usize, kind: &str, maps: &[Vec<String>], count: usize, into: usize| {
        let at = format!("explicit.levels[{n}].{kind}");
        if maps.len() != count {
            return Err(field_error(&at, format!("expected {count} maps, found {}", maps.len())));
        }
        let names = &doc.levels[into].simplices;
        maps.iter()
            .enumerate()
            .map(|(i, map)| {
                if map.len() != doc.levels[n].simplices.len() {
                    return Err(field_error(
                        format!("{at}[{i}]"),
                        format!("expected one entry per simplex, found {}", map.len()),
                    ));
                }
                map.iter()
                    .enumerate()
                    .map(|(x, y)| index_of(names, y, &format!("{at}[{i}][{x}]")))
                    .collect()
            })
            .collect::<Result<Vec<Vec<usize>>, InputError>>()
    };
    let mut faces = Vec::new();
    let mut degeneracies = Vec::new();
    for (n, level) in doc.levels.iter().enumerate() {
        faces.push(if n == 0 {
            resolve_maps(0, "faces", &level.faces, 0, 0)?
        } else {
            resolve_maps(n, "faces", &level.faces, n + 1, n - 1)?
        });
        if n <= doc.m {
            degeneracies.push(resolve_maps(n, "degeneracies", &level.degeneracies, n + 1, n + 1)?);
        } else {
            resolve_maps(n, "degeneracies", &level.degeneracies, 0, n)?;
        }
    }
    let labels = doc.levels.iter().map(|l| l.simplices.clone()).collect();
    match TruncatedSimplicialSet::new(doc.m, labels, faces, degeneracies) {
        Err(SimplicialError::Shape(s)) => Err(field_error("explicit", s)),
        other => Ok(other),
    }
}
