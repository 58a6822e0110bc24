use std::collections::BTreeMap;

use super::nerve::{encode, tuples};
use super::{is_kan, is_truncated, PointedFiniteSet, SimplicialError, TruncatedSimplicialSet};

/// Level-wise maps `levels[n][x] = f(x)` for `n ≤ top`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SimplicialMorphism {
    pub levels: Vec<Vec<usize>>,
}

impl SimplicialMorphism {
    /// Whether the maps commute with every stored face and degeneracy.
    pub fn is_simplicial(&self, source: &TruncatedSimplicialSet, target: &TruncatedSimplicialSet) -> bool {
        let top = self.levels.len() - 1;
        (1..=top).all(|n| {
            (0..source.len(n)).all(|x| {
                (0..=n).all(|i| target.face(n, i, self.levels[n][x]) == self.levels[n - 1][source.face(n, i, x)])
            })
        }) && (0..top.min(source.m() + 1).min(target.m() + 1)).all(|n| {
            (0..source.len(n)).all(|x| {
                (0..=n).all(|i| {
                    target.degeneracy(n, i, self.levels[n][x]) == self.levels[n + 1][source.degeneracy(n, i, x)]
                })
            })
        })
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &SimplicialMorphism) -> SimplicialMorphism {
        SimplicialMorphism {
            levels: other
                .levels
                .iter()
                .zip(&self.levels)
                .map(|(o, s)| o.iter().map(|&x| s[x]).collect())
                .collect(),
        }
    }

    /// For a morphism out of a pair nerve: `(s₁, …, s_k) ↦ f(*, s₁, …, s_k)`.
    pub fn star_restriction(&self, s: &PointedFiniteSet, k: usize) -> Vec<usize> {
        let base = s.len();
        tuples(base, k)
            .iter()
            .map(|t| {
                let mut f = vec![s.basepoint()];
                f.extend(t);
                self.levels[k][encode(&f, base)]
            })
            .collect()
    }
}

/// The map of pair nerves induced by `φ : S → S'`, on levels `0..=top`.
pub fn pair_nerve_map(s: &PointedFiniteSet, t: &PointedFiniteSet, phi: &[usize], top: usize) -> SimplicialMorphism {
    SimplicialMorphism {
        levels: (0..=top)
            .map(|n| {
                tuples(s.len(), n + 1)
                    .iter()
                    .map(|f| encode(&f.iter().map(|&x| phi[x]).collect::<Vec<_>>(), t.len()))
                    .collect()
            })
            .collect(),
    }
}

/// `g ∘ φ^k` for `g : S'^k → X_k`.
pub fn pull_back_star(g: &[usize], phi: &[usize], source_size: usize, target_size: usize, k: usize) -> Vec<usize> {
    tuples(source_size, k)
        .iter()
        .map(|t| g[encode(&t.iter().map(|&x| phi[x]).collect::<Vec<_>>(), target_size)])
        .collect()
}

/// Brute-force enumeration of simplicial morphisms on levels
/// `0..=target.top()`, by depth-first search over source simplices.
///
/// Simplices are visited by largest vertex, then dimension, then index, so
/// every face is assigned before the simplex and constraints bite early.
/// A degenerate simplex is forced by all of its degeneracy presentations;
/// a nondegenerate one ranges over target simplices with matching faces.
pub fn hom_enumerate(
    source: &TruncatedSimplicialSet,
    target: &TruncatedSimplicialSet,
) -> Result<Vec<SimplicialMorphism>, SimplicialError> {
    let top = target.top();
    if source.m() < target.m() {
        return Err(SimplicialError::Shape(format!(
            "source stored to level {} but the target needs {top}",
            source.top()
        )));
    }
    let mut order: Vec<(usize, usize, usize)> = Vec::new();
    for n in 0..=top {
        for x in 0..source.len(n) {
            let last = (0..=n)
                .map(|j| source.vertex(n, x, j))
                .max()
                .expect("a simplex has vertices");
            order.push((last, n, x));
        }
    }
    order.sort();
    // degeneracy presentations: (i, τ) with s_i τ = σ
    let mut presentations: Vec<BTreeMap<usize, Vec<(usize, usize)>>> = vec![BTreeMap::new(); top + 1];
    for n in 0..top {
        for tau in 0..source.len(n) {
            for i in 0..=n {
                presentations[n + 1]
                    .entry(source.degeneracy(n, i, tau))
                    .or_default()
                    .push((i, tau));
            }
        }
    }
    let mut search = Search {
        source,
        target,
        order: &order,
        presentations: &presentations,
        values: (0..=top).map(|n| vec![usize::MAX; source.len(n)]).collect(),
        out: Vec::new(),
    };
    search.run(0);
    let mut out = search.out;
    out.sort();
    Ok(out)
}

struct Search<'a> {
    source: &'a TruncatedSimplicialSet,
    target: &'a TruncatedSimplicialSet,
    order: &'a [(usize, usize, usize)],
    presentations: &'a [BTreeMap<usize, Vec<(usize, usize)>>],
    values: Vec<Vec<usize>>,
    out: Vec<SimplicialMorphism>,
}

impl Search<'_> {
    fn faces_match(&self, n: usize, sigma: usize, y: usize) -> bool {
        n == 0 || (0..=n).all(|i| self.target.face(n, i, y) == self.values[n - 1][self.source.face(n, i, sigma)])
    }

    fn run(&mut self, pos: usize) {
        let Some(&(_, n, sigma)) = self.order.get(pos) else {
            self.out.push(SimplicialMorphism {
                levels: self.values.clone(),
            });
            return;
        };
        let candidates: Vec<usize> = match self.presentations[n].get(&sigma) {
            Some(pres) => {
                let forced: Vec<usize> = pres
                    .iter()
                    .map(|&(i, tau)| self.target.degeneracy(n - 1, i, self.values[n - 1][tau]))
                    .collect();
                if forced.windows(2).all(|w| w[0] == w[1]) {
                    vec![forced[0]]
                } else {
                    Vec::new()
                }
            }
            None => (0..self.target.len(n)).collect(),
        };
        for y in candidates {
            if self.faces_match(n, sigma, y) {
                self.values[n][sigma] = y;
                self.run(pos + 1);
            }
        }
        self.values[n][sigma] = usize::MAX;
    }
}

/// The tower `G^(0) ← G^(1) ← … ← G^(m+1)` of morphisms out of the
/// filtration stages of the pair nerve, each `g ∈ G^(k)` stored as its
/// values `g(s₁, …, s_k) = g(*, s₁, …, s_k) ∈ X_k` indexed base `|S|`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GChain {
    m: usize,
    levels: Vec<Vec<Vec<usize>>>,
    transitions: Vec<Vec<usize>>,
}

impl GChain {
    pub fn m(&self) -> usize {
        self.m
    }

    /// `G^(k)` for `k ≤ m + 1`, sorted.
    pub fn level(&self, k: usize) -> &[Vec<usize>] {
        &self.levels[k]
    }

    pub fn sizes(&self) -> Vec<usize> {
        self.levels.iter().map(Vec::len).collect()
    }

    /// The restriction `G^(k+1) → G^(k)` as indices.
    pub fn transition(&self, k: usize) -> &[usize] {
        &self.transitions[k]
    }

    pub fn is_surjective(&self, k: usize) -> bool {
        let mut hit = vec![false; self.levels[k].len()];
        for &i in &self.transitions[k] {
            hit[i] = true;
        }
        hit.into_iter().all(|h| h)
    }

    pub fn is_bijective(&self, k: usize) -> bool {
        self.is_surjective(k) && self.transitions[k].len() == self.levels[k].len()
    }

    /// `G^(m)`, in bijection with all morphisms from the pair nerve.
    pub fn homs(&self) -> &[Vec<usize>] {
        &self.levels[self.m]
    }
}

/// Builds `G^(k+1)` over each `g ∈ G^(k)` by filling `(k+1, 0)`-horns.
///
/// The horn at `(s₁, …, s_{k+1})` has faces `g(…ŝᵢ…)`. When the simplex
/// `(*, s₁, …, s_{k+1})` repeats an adjacent entry, its value is forced to
/// the matching degeneracy of `g`; otherwise every filler is a branch.
pub fn g_chain(s: &PointedFiniteSet, x: &TruncatedSimplicialSet, m: usize) -> Result<GChain, SimplicialError> {
    if m > x.m() {
        return Err(SimplicialError::Shape(format!(
            "level {m} exceeds the stored level {}",
            x.m()
        )));
    }
    is_kan(x).map_err(SimplicialError::NotKan)?;
    is_truncated(x, m).map_err(SimplicialError::NotTruncated)?;
    let base = s.len();
    let star = s.basepoint();
    let mut levels: Vec<Vec<Vec<usize>>> = vec![(0..x.len(0)).map(|v| vec![v]).collect()];
    let mut transitions = Vec::new();
    for k in 0..=m {
        let fillers = x.filler_index(k + 1, 0);
        let mut next: Vec<(Vec<usize>, usize)> = Vec::new();
        for (gi, g) in levels[k].iter().enumerate() {
            let mut choices: Vec<Vec<usize>> = Vec::new();
            for t in tuples(base, k + 1) {
                let full: Vec<usize> = std::iter::once(star).chain(t.iter().copied()).collect();
                let drop = |j: usize| {
                    let mut r = t.clone();
                    r.remove(j);
                    g[encode(&r, base)]
                };
                let options = match (0..=k).find(|&j| full[j] == full[j + 1]) {
                    Some(j) => vec![x.degeneracy(k, j, drop(j))],
                    None => {
                        let key: Vec<usize> = (0..=k).map(drop).collect();
                        fillers.get(&key).cloned().unwrap_or_default()
                    }
                };
                choices.push(options);
            }
            for pick in product(&choices) {
                next.push((pick, gi));
            }
        }
        next.sort();
        transitions.push(next.iter().map(|(_, gi)| *gi).collect());
        levels.push(next.into_iter().map(|(v, _)| v).collect());
    }
    Ok(GChain { m, levels, transitions })
}

fn product(choices: &[Vec<usize>]) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::with_capacity(choices.len())];
    for c in choices {
        out = out
            .into_iter()
            .flat_map(|prefix| {
                c.iter().map(move |&y| {
                    let mut p = prefix.clone();
                    p.push(y);
                    p
                })
            })
            .collect();
    }
    out
}
