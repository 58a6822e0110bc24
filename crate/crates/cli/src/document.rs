//! Input documents: TOML tables tagged by `kind`, with scalars written as
//! exact rational strings `"p/q"`.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::InputError;

/// A parsed input document. Field order and map ordering are fixed, so
/// [`Document::to_canonical`] is a canonical form.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Document {
    LieAlgebra(LieAlgebraDoc),
    CrossedModule(CrossedModuleDoc),
    Cocycle(CocycleDoc),
    GroupLaw(GroupLawDoc),
    SimplicialSet(SimplicialSetDoc),
    Young(YoungDoc),
    GerbeCocycle(GerbeCocycleDoc),
}

/// A vector as `name -> "p/q"`; absent names are zero.
pub type VectorDoc = BTreeMap<String, String>;

/// Basis names and the brackets `[left, right]` of listed pairs; the rest
/// follow by antisymmetry or are zero.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LieAlgebraDoc {
    pub names: Vec<String>,
    #[serde(default)]
    pub brackets: Vec<BracketDoc>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BracketDoc {
    pub left: String,
    pub right: String,
    pub value: VectorDoc,
}

/// `m : h → g` on basis vectors of `h`, and the action `μ(g) h` on basis pairs.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CrossedModuleDoc {
    pub g: LieAlgebraDoc,
    pub h: LieAlgebraDoc,
    #[serde(default)]
    pub m: BTreeMap<String, VectorDoc>,
    #[serde(default)]
    pub action: Vec<ActionDoc>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ActionDoc {
    pub g: String,
    pub h: String,
    pub value: VectorDoc,
}

/// A polynomial group law on `ℚⁿ`: component `i` of `F(x, y)` written in
/// `name[1]` for `x` and `name[2]` for `y`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GroupLawDoc {
    pub names: Vec<String>,
    pub product: Vec<String>,
}

/// A group `arity`-cocycle with values in `ℚ^{h_names}`, written in the
/// copies `name[1..=arity]`. `action[b][a]` is the `h_b`-component of
/// `ρ(g) h_a` in `name[1]`; omitted means trivial.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CocycleDoc {
    pub group_law: GroupLawDoc,
    pub h_names: Vec<String>,
    pub arity: usize,
    pub phi: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub action: Option<Vec<Vec<String>>>,
}

/// Either the nerve of a finite group or an explicit truncated set.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SimplicialSetDoc {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub group: Option<GroupTableDoc>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub explicit: Option<ExplicitDoc>,
}

/// `table[a][b]` is the name of `a · b`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GroupTableDoc {
    pub elements: Vec<String>,
    pub table: Vec<Vec<String>>,
}

/// Levels `0..=m+1`. On level `n`, `faces[i][x]` names `d_i x` on level
/// `n - 1` and `degeneracies[i][x]` names `s_i x` on level `n + 1`
/// (levels `0..=m` only).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ExplicitDoc {
    pub m: usize,
    pub levels: Vec<LevelDoc>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LevelDoc {
    pub simplices: Vec<String>,
    #[serde(default)]
    pub faces: Vec<Vec<String>>,
    #[serde(default)]
    pub degeneracies: Vec<Vec<String>>,
}

/// Row lengths, with an optional space dimension and parity for `dim`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct YoungDoc {
    pub rows: Vec<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub n: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub parity: Option<ParityDoc>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ParityDoc {
    Even,
    Odd,
}

/// Additive descent data `h(x, y, z)` on `ℚ^{names}`, written in the copies
/// `name[1]`, `name[2]`, `name[3]`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GerbeCocycleDoc {
    pub names: Vec<String>,
    pub h: String,
}

impl Document {
    /// Parses TOML; errors carry the line, column and offending field.
    pub fn parse(src: &str) -> Result<Self, InputError> {
        toml::from_str(src).map_err(|e| {
            let message = e.message().trim().to_string();
            let offset = e.span().map(|s| s.start).or_else(|| locate_field(src, &message));
            let line = offset.map(|o| src[..o].matches('\n').count() + 1);
            InputError::Schema(match line {
                Some(l) => format!("line {l}: {message}"),
                None => message,
            })
        })
    }

    /// The canonical TOML text; parsing it back gives the same document.
    pub fn to_canonical(&self) -> String {
        toml::to_string(self).expect("documents contain only strings, integers, arrays and tables")
    }

    pub fn kind(&self) -> &'static str {
        match self {
            Document::LieAlgebra(_) => "lie_algebra",
            Document::CrossedModule(_) => "crossed_module",
            Document::Cocycle(_) => "cocycle",
            Document::GroupLaw(_) => "group_law",
            Document::SimplicialSet(_) => "simplicial_set",
            Document::Young(_) => "young",
            Document::GerbeCocycle(_) => "gerbe_cocycle",
        }
    }
}

/// Offset of the key named in a serde message such as ``unknown field `x` ``,
/// for errors raised after the tag is buffered and spans are lost.
fn locate_field(src: &str, message: &str) -> Option<usize> {
    let start = message.find('`')? + 1;
    let len = message[start..].find('`')?;
    let key = &message[start..start + len];
    let mut offset = 0;
    for line in src.split_inclusive('\n') {
        let t = line.trim_start();
        let bare = t.trim_start_matches('[').trim_start();
        if let Some(rest) = bare.strip_prefix(key) {
            if rest.trim_start().starts_with(['=', ']', '.']) {
                return Some(offset + line.len() - t.len());
            }
        }
        offset += line.len();
    }
    None
}
