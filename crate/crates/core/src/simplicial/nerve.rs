use super::{SimplicialError, TruncatedSimplicialSet};

/// A finite group given by its multiplication table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteGroup {
    names: Vec<String>,
    table: Vec<Vec<usize>>,
    identity: usize,
}

impl FiniteGroup {
    /// Checks closure, associativity, a two-sided identity and inverses.
    pub fn new(names: Vec<String>, table: Vec<Vec<usize>>) -> Result<Self, SimplicialError> {
        let n = names.len();
        let not_group = |s: String| Err(SimplicialError::NotGroup(s));
        if n == 0 {
            return not_group("empty table".into());
        }
        if table.len() != n || table.iter().any(|r| r.len() != n || r.iter().any(|&x| x >= n)) {
            return not_group(format!("table must be {n} × {n} with entries below {n}"));
        }
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if table[table[a][b]][c] != table[a][table[b][c]] {
                        return Err(SimplicialError::NotAssociative {
                            a: names[a].clone(),
                            b: names[b].clone(),
                            c: names[c].clone(),
                        });
                    }
                }
            }
        }
        let Some(identity) = (0..n).find(|&e| (0..n).all(|x| table[e][x] == x && table[x][e] == x)) else {
            return not_group("no identity".into());
        };
        if let Some(x) = (0..n).find(|&x| !(0..n).any(|y| table[x][y] == identity)) {
            return not_group(format!("`{}` has no inverse", names[x]));
        }
        Ok(FiniteGroup { names, table, identity })
    }

    /// `ℤ/n` with elements `0..n`.
    pub fn cyclic(n: usize) -> Self {
        let names = (0..n).map(|i| i.to_string()).collect();
        let table = (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect();
        Self::new(names, table).expect("cyclic group")
    }

    /// Direct product, elements ordered lexicographically.
    pub fn product(a: &FiniteGroup, b: &FiniteGroup) -> Self {
        let (na, nb) = (a.order(), b.order());
        let names = (0..na * nb)
            .map(|i| format!("({},{})", a.names[i / nb], b.names[i % nb]))
            .collect();
        let table = (0..na * nb)
            .map(|x| {
                (0..na * nb)
                    .map(|y| a.table[x / nb][y / nb] * nb + b.table[x % nb][y % nb])
                    .collect()
            })
            .collect();
        Self::new(names, table).expect("product of groups")
    }

    /// Permutations of `0..n` in lexicographic order, composed as `(στ)(i) = σ(τ(i))`.
    pub fn symmetric(n: usize) -> Self {
        fn perms(n: usize) -> Vec<Vec<usize>> {
            if n == 0 {
                return vec![Vec::new()];
            }
            let mut out = Vec::new();
            for p in perms(n - 1) {
                for pos in 0..n {
                    let mut q = p.clone();
                    q.insert(pos, n - 1);
                    out.push(q);
                }
            }
            out.sort();
            out
        }
        let all = perms(n);
        let find = |p: &Vec<usize>| all.iter().position(|q| q == p).expect("closed under composition");
        let names = all
            .iter()
            .map(|p| p.iter().map(|i| i.to_string()).collect::<Vec<_>>().join(""))
            .collect();
        let table = all
            .iter()
            .map(|s| all.iter().map(|t| find(&t.iter().map(|&i| s[i]).collect())).collect())
            .collect();
        Self::new(names, table).expect("symmetric group")
    }

    pub fn order(&self) -> usize {
        self.names.len()
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a][b]
    }
}

/// The nerve of `G`: `X_n = Gⁿ`, inner faces multiply adjacent entries,
/// outer faces drop an end, degeneracies insert the identity. Stored with
/// `m = 2`.
pub fn nerve_group(g: &FiniteGroup) -> TruncatedSimplicialSet {
    let m = 2;
    let levels: Vec<Vec<Vec<usize>>> = (0..=m + 1).map(|n| tuples(g.order(), n)).collect();
    TruncatedSimplicialSet::from_simplices(
        m,
        levels,
        |i, t| {
            let n = t.len();
            let mut out = t.clone();
            if i == 0 {
                out.remove(0);
            } else if i == n {
                out.pop();
            } else {
                out[i - 1] = g.mul(t[i - 1], t[i]);
                out.remove(i);
            }
            out
        },
        |i, t| {
            let mut out = t.clone();
            out.insert(i, g.identity());
            out
        },
        |t| {
            format!(
                "({})",
                t.iter().map(|&x| g.names[x].as_str()).collect::<Vec<_>>().join(",")
            )
        },
    )
    .expect("the nerve of a group is simplicial")
}

/// All tuples of length `len` over `0..base`, lexicographically; the index
/// of a tuple is its base-`base` value.
pub(crate) fn tuples(base: usize, len: usize) -> Vec<Vec<usize>> {
    let count = base.pow(len as u32);
    (0..count)
        .map(|mut code| {
            let mut out = vec![0; len];
            for slot in out.iter_mut().rev() {
                *slot = code % base;
                code /= base;
            }
            out
        })
        .collect()
}

pub(crate) fn encode(t: &[usize], base: usize) -> usize {
    t.iter().fold(0, |acc, &x| acc * base + x)
}

/// A finite set with a chosen basepoint.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PointedFiniteSet {
    names: Vec<String>,
    basepoint: usize,
}

impl PointedFiniteSet {
    pub fn new(names: Vec<String>, basepoint: usize) -> Result<Self, SimplicialError> {
        if basepoint >= names.len() {
            return Err(SimplicialError::Basepoint);
        }
        let mut sorted = names.clone();
        sorted.sort();
        sorted.dedup();
        if sorted.len() != names.len() {
            return Err(SimplicialError::Shape("repeated element name".into()));
        }
        Ok(PointedFiniteSet { names, basepoint })
    }

    /// `{*, s1, …, s_{n-1}}` with basepoint `*` first.
    pub fn of_size(n: usize) -> Self {
        assert!(n > 0, "a pointed set is nonempty");
        let names = std::iter::once("*".to_string())
            .chain((1..n).map(|i| format!("s{i}")))
            .collect();
        PointedFiniteSet { names, basepoint: 0 }
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn basepoint(&self) -> usize {
        self.basepoint
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }
}

/// Number of maximal constant blocks of `f : [n] → S`.
pub fn runs(f: &[usize]) -> usize {
    if f.is_empty() {
        0
    } else {
        1 + f.windows(2).filter(|w| w[0] != w[1]).count()
    }
}

/// Membership of `f : [n] → S` in the filtration stage `S^(k)`: at most
/// `k + 1` constant blocks, and `f(0) = *` when there are exactly `k + 1`.
pub fn in_filtration(s: &PointedFiniteSet, k: usize, f: &[usize]) -> bool {
    let r = runs(f);
    r < k + 1 || (r == k + 1 && f[0] == s.basepoint)
}

fn pair_levels(s: &PointedFiniteSet, m: usize, keep: impl Fn(&[usize]) -> bool) -> Vec<Vec<Vec<usize>>> {
    (0..=m + 1)
        .map(|n| tuples(s.len(), n + 1).into_iter().filter(|f| keep(f)).collect())
        .collect()
}

fn pair_set(s: &PointedFiniteSet, m: usize, keep: impl Fn(&[usize]) -> bool) -> TruncatedSimplicialSet {
    TruncatedSimplicialSet::from_simplices(
        m,
        pair_levels(s, m, keep),
        |i, f| {
            let mut out = f.clone();
            out.remove(i);
            out
        },
        |i, f| {
            let mut out = f.clone();
            out.insert(i, f[i]);
            out
        },
        |f| f.iter().map(|&x| s.names[x].as_str()).collect::<Vec<_>>().join(""),
    )
    .expect("subsets of the pair nerve closed under faces and degeneracies")
}

/// The nerve of the pair groupoid of `S`: `S_n` is all maps `[n] → S`,
/// indexed by their base-`|S|` value. Stored with storage level `m`.
pub fn pair_nerve(s: &PointedFiniteSet, m: usize) -> TruncatedSimplicialSet {
    pair_set(s, m, |_| true)
}

/// The subcomplex `S^(k)` of the pair nerve, stored with storage level `m`.
pub fn pair_filtration(s: &PointedFiniteSet, k: usize, m: usize) -> TruncatedSimplicialSet {
    pair_set(s, m, |f| in_filtration(s, k, f))
}

/// The standard simplex `Δ[k]`: monotone maps `[n] → [k]`.
pub fn standard_simplex(k: usize, m: usize) -> TruncatedSimplicialSet {
    let levels = (0..=m + 1)
        .map(|n| {
            tuples(k + 1, n + 1)
                .into_iter()
                .filter(|f| f.windows(2).all(|w| w[0] <= w[1]))
                .collect()
        })
        .collect();
    TruncatedSimplicialSet::from_simplices(
        m,
        levels,
        |i, f: &Vec<usize>| {
            let mut out = f.clone();
            out.remove(i);
            out
        },
        |i, f| {
            let mut out = f.clone();
            out.insert(i, f[i]);
            out
        },
        |f| f.iter().map(|x| x.to_string()).collect(),
    )
    .expect("the standard simplex is simplicial")
}

/// The constant simplicial set on `points` points.
pub fn discrete(points: usize, m: usize) -> TruncatedSimplicialSet {
    let levels = (0..=m + 1).map(|n| (0..points).map(|p| (p, n)).collect()).collect();
    TruncatedSimplicialSet::from_simplices(
        m,
        levels,
        |_, &(p, n)| (p, n - 1),
        |_, &(p, n)| (p, n + 1),
        |&(p, _)| p.to_string(),
    )
    .expect("constant simplicial set")
}
