use std::collections::BTreeMap;
use std::fmt;

use super::SimplicialError;

/// A finite simplicial set stored at levels `0..=m+1`.
///
/// Faces are stored on every level `n ≥ 1` and degeneracies on every level
/// `n ≤ m`, so each simplicial identity whose two sides are defined is
/// checked on construction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncatedSimplicialSet {
    m: usize,
    labels: Vec<Vec<String>>,
    // faces[n][i][x] = d_i x for x ∈ X_n; faces[0] is empty
    faces: Vec<Vec<Vec<usize>>>,
    // degeneracies[n][i][x] = s_i x ∈ X_{n+1} for x ∈ X_n, n ≤ m
    degeneracies: Vec<Vec<Vec<usize>>>,
}

/// A compatible family of faces of an `n`-simplex with face `k` left out.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Horn {
    pub n: usize,
    pub k: usize,
    /// The faces `x_i`, `i ≠ k`, in increasing order of `i`.
    pub faces: Vec<usize>,
}

impl Horn {
    /// The face opposite vertex `i`, or `None` for the missing one.
    pub fn face(&self, i: usize) -> Option<usize> {
        match i.cmp(&self.k) {
            std::cmp::Ordering::Less => Some(self.faces[i]),
            std::cmp::Ordering::Equal => None,
            std::cmp::Ordering::Greater => self.faces.get(i - 1).copied(),
        }
    }
}

impl fmt::Display for Horn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = (0..=self.n)
            .map(|i| self.face(i).map_or("_".to_string(), |x| x.to_string()))
            .collect();
        write!(f, "horn({}, {}) [{}]", self.n, self.k, parts.join(", "))
    }
}

/// Why a horn-filling condition fails.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum HornFailure {
    Missing(Horn),
    Multiple { horn: Horn, fillers: Vec<usize> },
}

impl fmt::Display for HornFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            HornFailure::Missing(h) => write!(f, "{h} has no filler"),
            HornFailure::Multiple { horn, fillers } => write!(f, "{horn} has fillers {fillers:?}"),
        }
    }
}

impl TruncatedSimplicialSet {
    /// Validates shapes and every simplicial identity with both sides stored.
    pub fn new(
        m: usize,
        labels: Vec<Vec<String>>,
        faces: Vec<Vec<Vec<usize>>>,
        degeneracies: Vec<Vec<Vec<usize>>>,
    ) -> Result<Self, SimplicialError> {
        let x = TruncatedSimplicialSet {
            m,
            labels,
            faces,
            degeneracies,
        };
        x.check_shapes()?;
        x.check_identities()?;
        Ok(x)
    }

    /// Builds a set from explicit simplices at levels `0..=m+1`, with faces and
    /// degeneracies given as functions on them.
    pub fn from_simplices<T: Ord + Clone>(
        m: usize,
        levels: Vec<Vec<T>>,
        face: impl Fn(usize, &T) -> T,
        degeneracy: impl Fn(usize, &T) -> T,
        label: impl Fn(&T) -> String,
    ) -> Result<Self, SimplicialError> {
        if levels.len() != m + 2 {
            return Err(SimplicialError::Shape(format!(
                "expected {} levels, found {}",
                m + 2,
                levels.len()
            )));
        }
        let index: Vec<BTreeMap<&T, usize>> = levels
            .iter()
            .map(|l| l.iter().enumerate().map(|(i, t)| (t, i)).collect())
            .collect();
        for (n, idx) in index.iter().enumerate() {
            if idx.len() != levels[n].len() {
                return Err(SimplicialError::Shape(format!("repeated simplex at level {n}")));
            }
        }
        let lookup = |n: usize, t: &T| -> Result<usize, SimplicialError> {
            index[n]
                .get(t)
                .copied()
                .ok_or_else(|| SimplicialError::Shape(format!("a structure map leaves level {n}")))
        };
        let mut faces = vec![Vec::new()];
        for n in 1..=m + 1 {
            let mut level = Vec::new();
            for i in 0..=n {
                level.push(
                    levels[n]
                        .iter()
                        .map(|t| lookup(n - 1, &face(i, t)))
                        .collect::<Result<Vec<_>, _>>()?,
                );
            }
            faces.push(level);
        }
        let mut degeneracies = Vec::new();
        for n in 0..=m {
            let mut level = Vec::new();
            for i in 0..=n {
                level.push(
                    levels[n]
                        .iter()
                        .map(|t| lookup(n + 1, &degeneracy(i, t)))
                        .collect::<Result<Vec<_>, _>>()?,
                );
            }
            degeneracies.push(level);
        }
        let labels = levels.iter().map(|l| l.iter().map(&label).collect()).collect();
        Self::new(m, labels, faces, degeneracies)
    }

    /// Storage level: simplices are kept up to dimension `m + 1`.
    pub fn m(&self) -> usize {
        self.m
    }

    /// Highest stored dimension, `m + 1`.
    pub fn top(&self) -> usize {
        self.m + 1
    }

    pub fn len(&self, n: usize) -> usize {
        self.labels[n].len()
    }

    /// Sizes of the stored levels.
    pub fn sizes(&self) -> Vec<usize> {
        self.labels.iter().map(Vec::len).collect()
    }

    pub fn label(&self, n: usize, x: usize) -> &str {
        &self.labels[n][x]
    }

    pub fn labels(&self, n: usize) -> &[String] {
        &self.labels[n]
    }

    /// `d_i x` for `x ∈ X_n`.
    pub fn face(&self, n: usize, i: usize, x: usize) -> usize {
        self.faces[n][i][x]
    }

    /// `s_i x` for `x ∈ X_n`, `n ≤ m`.
    pub fn degeneracy(&self, n: usize, i: usize, x: usize) -> usize {
        self.degeneracies[n][i][x]
    }

    /// The `j`-th vertex of `x ∈ X_n`.
    pub fn vertex(&self, n: usize, x: usize, j: usize) -> usize {
        let mut cur = x;
        for level in (j + 1..=n).rev() {
            cur = self.face(level, level, cur);
        }
        for level in (1..=j).rev() {
            cur = self.face(level, 0, cur);
        }
        cur
    }

    /// Whether `x ∈ X_n` is in the image of a degeneracy.
    pub fn is_degenerate(&self, n: usize, x: usize) -> bool {
        n > 0 && (0..n).any(|i| self.degeneracy(n - 1, i, self.face(n, i, x)) == x)
    }

    fn check_shapes(&self) -> Result<(), SimplicialError> {
        let top = self.m + 1;
        let bad = |s: String| Err(SimplicialError::Shape(s));
        if self.labels.len() != top + 1 || self.faces.len() != top + 1 || self.degeneracies.len() != self.m + 1 {
            return bad(format!("levels 0..={top} with degeneracies on 0..={}", self.m));
        }
        if !self.faces[0].is_empty() {
            return bad("level 0 has no faces".into());
        }
        for n in 1..=top {
            if self.faces[n].len() != n + 1 {
                return bad(format!("level {n} needs {} face maps", n + 1));
            }
            for map in &self.faces[n] {
                if map.len() != self.len(n) || map.iter().any(|&y| y >= self.len(n - 1)) {
                    return bad(format!("a face map on level {n} is malformed"));
                }
            }
        }
        for n in 0..=self.m {
            if self.degeneracies[n].len() != n + 1 {
                return bad(format!("level {n} needs {} degeneracy maps", n + 1));
            }
            for map in &self.degeneracies[n] {
                if map.len() != self.len(n) || map.iter().any(|&y| y >= self.len(n + 1)) {
                    return bad(format!("a degeneracy map on level {n} is malformed"));
                }
            }
        }
        Ok(())
    }

    fn check_identities(&self) -> Result<(), SimplicialError> {
        let fail = |identity: String, level: usize, simplex: usize| {
            Err(SimplicialError::Identity {
                identity,
                level,
                simplex,
            })
        };
        let d = |n: usize, i: usize, x: usize| self.face(n, i, x);
        let s = |n: usize, i: usize, x: usize| self.degeneracy(n, i, x);
        for n in 2..=self.top() {
            for x in 0..self.len(n) {
                for j in 0..=n {
                    for i in 0..j {
                        if d(n - 1, i, d(n, j, x)) != d(n - 1, j - 1, d(n, i, x)) {
                            return fail(format!("d{i} d{j} = d{} d{i}", j - 1), n, x);
                        }
                    }
                }
            }
        }
        for n in 0..=self.m {
            for x in 0..self.len(n) {
                for j in 0..=n {
                    let y = s(n, j, x);
                    for i in 0..=n + 1 {
                        let ok = if i < j {
                            d(n + 1, i, y) == s(n - 1, j - 1, d(n, i, x))
                        } else if i == j || i == j + 1 {
                            d(n + 1, i, y) == x
                        } else {
                            d(n + 1, i, y) == s(n - 1, j, d(n, i - 1, x))
                        };
                        if !ok {
                            return fail(format!("d{i} s{j}"), n, x);
                        }
                    }
                    if n < self.m {
                        for i in 0..=j {
                            if s(n + 1, i, y) != s(n + 1, j + 1, s(n, i, x)) {
                                return fail(format!("s{i} s{j} = s{} s{i}", j + 1), n, x);
                            }
                        }
                    }
                }
            }
        }
        Ok(())
    }

    /// Every compatible horn `(n, k)`, in lexicographic order of faces.
    pub fn horn_set(&self, n: usize, k: usize) -> Result<Vec<Horn>, SimplicialError> {
        if n == 0 || n > self.top() || k > n {
            return Err(SimplicialError::OutOfRange { n, k, top: self.top() });
        }
        let indices: Vec<usize> = (0..=n).filter(|&i| i != k).collect();
        let mut out = Vec::new();
        let mut chosen = Vec::new();
        self.extend_horn(n, k, &indices, &mut chosen, &mut out);
        Ok(out)
    }

    fn extend_horn(&self, n: usize, k: usize, indices: &[usize], chosen: &mut Vec<usize>, out: &mut Vec<Horn>) {
        if chosen.len() == indices.len() {
            out.push(Horn {
                n,
                k,
                faces: chosen.clone(),
            });
            return;
        }
        let j = indices[chosen.len()];
        for x in 0..self.len(n - 1) {
            // d_i x_j = d_{j-1} x_i for every earlier i
            let ok = n < 2
                || indices[..chosen.len()]
                    .iter()
                    .zip(chosen.iter())
                    .all(|(&i, &xi)| self.face(n - 1, i, x) == self.face(n - 1, j - 1, xi));
            if ok {
                chosen.push(x);
                self.extend_horn(n, k, indices, chosen, out);
                chosen.pop();
            }
        }
    }

    /// All `n`-simplices restricting to the horn.
    pub fn fillers(&self, horn: &Horn) -> Vec<usize> {
        (0..self.len(horn.n))
            .filter(|&x| (0..=horn.n).all(|i| horn.face(i).is_none_or(|f| self.face(horn.n, i, x) == f)))
            .collect()
    }

    /// Fillers of every horn `(n, k)`, keyed by the horn's faces.
    pub fn filler_index(&self, n: usize, k: usize) -> BTreeMap<Vec<usize>, Vec<usize>> {
        let mut index: BTreeMap<Vec<usize>, Vec<usize>> = BTreeMap::new();
        for x in 0..self.len(n) {
            let key = (0..=n).filter(|&i| i != k).map(|i| self.face(n, i, x)).collect();
            index.entry(key).or_default().push(x);
        }
        index
    }

    fn check_horns(&self, from: usize, unique: bool) -> Result<(), HornFailure> {
        for n in from.max(1)..=self.top() {
            for k in 0..=n {
                let index = self.filler_index(n, k);
                for horn in self.horn_set(n, k).expect("in range") {
                    match index.get(&horn.faces) {
                        None => return Err(HornFailure::Missing(horn)),
                        Some(f) if unique && f.len() > 1 => {
                            return Err(HornFailure::Multiple {
                                horn,
                                fillers: f.clone(),
                            })
                        }
                        Some(_) => {}
                    }
                }
            }
        }
        Ok(())
    }
}

/// Every horn of every stored dimension has a filler.
pub fn is_kan(x: &TruncatedSimplicialSet) -> Result<(), HornFailure> {
    x.check_horns(1, false)
}

/// Every horn of dimension `n ≥ m` (and `n ≥ 1`) up to the top stored level
/// has exactly one filler.
pub fn is_truncated(x: &TruncatedSimplicialSet, m: usize) -> Result<(), HornFailure> {
    x.check_horns(m, true)
}

pub fn horn_set(x: &TruncatedSimplicialSet, n: usize, k: usize) -> Result<Vec<Horn>, SimplicialError> {
    x.horn_set(n, k)
}
