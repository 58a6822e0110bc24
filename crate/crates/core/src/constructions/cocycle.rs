use std::collections::BTreeMap;
use std::sync::Arc;

use num_traits::{One, Zero};

use super::ConstructionError;
use crate::linfty::{dual_coordinate, vector, BasisVector, LInftyAlgebra, LieAlgebra, Vector};
use crate::nervejet::PolyGroupLaw;
use crate::superalg::{int, Algebra, AlgebraMorphism, Element, Monomial, Scalar};

/// A polynomial group `n`-cocycle `φ: G^n → H` for a polynomial group law on
/// `G` and a polynomial representation `ρ` of `G` on the vector space `H`.
///
/// `φ` is written in the copies `name[1..=n]` of the group coordinates, and
/// `ρ(g)` in `name[1]`, with `ρ(g) h_a = Σ_b ρ[b][a] h_b`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupCocycle {
    law: PolyGroupLaw,
    h_names: Vec<String>,
    rho: Vec<Vec<Element>>,
    n: usize,
    phi: Vec<Element>,
}

/// `f(args[0], …, args[k-1])` for `f` written in `k` copies of the group.
fn substitute(copies: &Arc<Algebra>, f: &Element, target: &Arc<Algebra>, args: &[Vec<Element>]) -> Element {
    let images = args.iter().flatten().cloned().collect();
    AlgebraMorphism::new_ungraded(copies, target, images)
        .expect("group coordinates are even")
        .apply(f)
}

fn copy_vars(alg: &Arc<Algebra>, n: usize, j: usize) -> Vec<Element> {
    (0..n).map(|i| Element::generator(alg, j * n + i)).collect()
}

impl GroupCocycle {
    /// Checks that `ρ` is a representation and that `δφ = 0` symbolically.
    /// `rho = None` is the trivial action.
    pub fn new(
        law: PolyGroupLaw,
        h_names: Vec<String>,
        rho: Option<Vec<Vec<Element>>>,
        n: usize,
        phi: Vec<Element>,
    ) -> Result<Self, ConstructionError> {
        if n < 2 {
            return Err(ConstructionError::CocycleArity(n));
        }
        let dh = h_names.len();
        if phi.len() != dh {
            return Err(ConstructionError::Shape {
                what: "cocycle",
                expected: dh,
                found: phi.len(),
            });
        }
        let one = law.copies(1);
        let rho = match rho {
            None => (0..dh)
                .map(|b| {
                    (0..dh)
                        .map(|a| Element::scalar(&one, if a == b { int(1) } else { int(0) }))
                        .collect()
                })
                .collect(),
            Some(r) => {
                if r.len() != dh || r.iter().any(|row| row.len() != dh) {
                    return Err(ConstructionError::Shape {
                        what: "action matrix",
                        expected: dh,
                        found: r.len(),
                    });
                }
                r.into_iter()
                    .map(|row| {
                        row.into_iter()
                            .map(|e| e.transport(&one))
                            .collect::<Result<Vec<_>, _>>()
                    })
                    .collect::<Result<Vec<_>, _>>()?
            }
        };
        let copies = law.copies(n);
        let phi = phi
            .into_iter()
            .map(|f| f.transport(&copies))
            .collect::<Result<Vec<_>, _>>()?;
        let c = GroupCocycle {
            law,
            h_names,
            rho,
            n,
            phi,
        };
        c.check_action()?;
        c.check_cocycle()?;
        Ok(c)
    }

    /// Parses `φ` and `ρ` from strings in the copy coordinates.
    pub fn parse(
        law: PolyGroupLaw,
        h_names: Vec<String>,
        rho: Option<&[Vec<&str>]>,
        n: usize,
        phi: &[&str],
    ) -> Result<Self, ConstructionError> {
        let copies = law.copies(n.max(1));
        let one = law.copies(1);
        let phi = phi
            .iter()
            .map(|s| Element::parse(&copies, s))
            .collect::<Result<Vec<_>, _>>()?;
        let rho = match rho {
            None => None,
            Some(r) => Some(
                r.iter()
                    .map(|row| {
                        row.iter()
                            .map(|s| Element::parse(&one, s))
                            .collect::<Result<Vec<_>, _>>()
                    })
                    .collect::<Result<Vec<_>, _>>()?,
            ),
        };
        Self::new(law, h_names, rho, n, phi)
    }

    pub fn law(&self) -> &PolyGroupLaw {
        &self.law
    }

    pub fn arity(&self) -> usize {
        self.n
    }

    pub fn h_names(&self) -> &[String] {
        &self.h_names
    }

    pub fn phi(&self) -> &[Element] {
        &self.phi
    }

    /// `ρ(u)` applied to `v` inside `target`.
    fn act(&self, target: &Arc<Algebra>, u: &[Element], v: &[Element]) -> Vec<Element> {
        let one = self.law.copies(1);
        let args = [u.to_vec()];
        (0..self.h_names.len())
            .map(|b| {
                (0..self.h_names.len())
                    .map(|a| substitute(&one, &self.rho[b][a], target, &args) * &v[a])
                    .fold(Element::zero(target), |acc, t| acc + t)
            })
            .collect()
    }

    fn check_action(&self) -> Result<(), ConstructionError> {
        let dg = self.law.dim();
        let dh = self.h_names.len();
        let one = self.law.copies(1);
        let zero = vec![Element::zero(&one); dg];
        for b in 0..dh {
            for a in 0..dh {
                let at_zero = substitute(&one, &self.rho[b][a], &one, std::slice::from_ref(&zero));
                if at_zero != Element::scalar(&one, if a == b { int(1) } else { int(0) }) {
                    return Err(ConstructionError::NotAction(format!(
                        "rho(0) is not the identity at ({b}, {a})"
                    )));
                }
            }
        }
        let two = self.law.copies(2);
        let (g1, g2) = (copy_vars(&two, dg, 0), copy_vars(&two, dg, 1));
        let prod = self.law.multiply_in(&two, &g1, &g2);
        for a in 0..dh {
            let e: Vec<Element> = (0..dh)
                .map(|b| Element::scalar(&two, if a == b { int(1) } else { int(0) }))
                .collect();
            let lhs = self.act(&two, &prod, &e);
            let rhs = self.act(&two, &g1, &self.act(&two, &g2, &e));
            if let Some(b) = (0..dh).find(|&b| lhs[b] != rhs[b]) {
                return Err(ConstructionError::NotAction(format!(
                    "rho(g1 g2) != rho(g1) rho(g2) at ({b}, {a}): `{}`",
                    &lhs[b] - &rhs[b]
                )));
            }
        }
        Ok(())
    }

    /// `φ(args)` inside `target`.
    fn eval(&self, target: &Arc<Algebra>, args: &[Vec<Element>]) -> Vec<Element> {
        let copies = self.law.copies(self.n);
        self.phi.iter().map(|f| substitute(&copies, f, target, args)).collect()
    }

    /// `δφ(g_0, …, g_n) = ρ(g_0)φ(g_1, …) + Σ_i (-1)^i φ(…, g_{i-1}g_i, …) + (-1)^{n+1} φ(g_0, …, g_{n-1})`.
    pub fn coboundary(&self) -> Vec<Element> {
        let n = self.n;
        let dg = self.law.dim();
        let alg = self.law.copies(n + 1);
        let g: Vec<Vec<Element>> = (0..=n).map(|j| copy_vars(&alg, dg, j)).collect();
        let mut total = self.act(&alg, &g[0], &self.eval(&alg, &g[1..]));
        for i in 1..=n {
            let mut args: Vec<Vec<Element>> = g[..i - 1].to_vec();
            args.push(self.law.multiply_in(&alg, &g[i - 1], &g[i]));
            args.extend_from_slice(&g[i + 1..]);
            let sign = if i % 2 == 0 { int(1) } else { int(-1) };
            for (t, v) in total.iter_mut().zip(self.eval(&alg, &args)) {
                *t = &*t + v.scale(&sign);
            }
        }
        let sign = if (n + 1).is_multiple_of(2) { int(1) } else { int(-1) };
        for (t, v) in total.iter_mut().zip(self.eval(&alg, &g[..n])) {
            *t = &*t + v.scale(&sign);
        }
        total
    }

    fn check_cocycle(&self) -> Result<(), ConstructionError> {
        for (name, d) in self.h_names.iter().zip(self.coboundary()) {
            if !d.is_zero() {
                return Err(ConstructionError::NotCocycle {
                    component: name.clone(),
                    defect: d.to_string(),
                });
            }
        }
        Ok(())
    }

    /// The derivative of `ρ` at the identity: `mu[x][a] = dρ(e_x) h_a`.
    pub fn infinitesimal_action(&self) -> Vec<Vec<Vector>> {
        let dg = self.law.dim();
        let dh = self.h_names.len();
        (0..dg)
            .map(|x| {
                let m = Monomial::generator(x);
                (0..dh)
                    .map(|a| vector((0..dh).map(|b| (b, self.rho[b][a].coefficient(&m)))))
                    .collect()
            })
            .collect()
    }
}

/// A totally antisymmetric `n`-linear map `∧^n 𝔤 → 𝔥`, stored on strictly
/// increasing index tuples.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LieCochain {
    arity: usize,
    g_dim: usize,
    values: BTreeMap<Vec<usize>, Vector>,
}

/// Sign of the permutation sorting `args`, or `None` on a repeated index.
fn sort_sign(args: &[usize]) -> Option<(Scalar, Vec<usize>)> {
    let mut v = args.to_vec();
    let mut sign = int(1);
    for i in 0..v.len() {
        for j in 0..v.len() - 1 - i {
            if v[j] == v[j + 1] {
                return None;
            }
            if v[j] > v[j + 1] {
                v.swap(j, j + 1);
                sign = -sign;
            }
        }
    }
    if v.windows(2).any(|w| w[0] == w[1]) {
        return None;
    }
    Some((sign, v))
}

/// All strictly increasing `k`-tuples from `0..n`.
fn increasing_tuples(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, k, &mut Vec::new(), &mut out);
    out
}

/// All permutations of `0..n` with their signs.
fn permutations(n: usize) -> Vec<(Vec<usize>, Scalar)> {
    if n == 0 {
        return vec![(Vec::new(), int(1))];
    }
    let mut out = Vec::new();
    for (p, s) in permutations(n - 1) {
        // inserting n-1 at position k adds n-1-k inversions
        for k in 0..=p.len() {
            let mut q = p.clone();
            q.insert(k, n - 1);
            let sign = if (n - 1 - k).is_multiple_of(2) {
                s.clone()
            } else {
                -s.clone()
            };
            out.push((q, sign));
        }
    }
    out
}

fn add_scaled(acc: &mut Vector, v: &Vector, c: &Scalar) {
    for (i, x) in v {
        let e = acc.entry(*i).or_insert_with(Scalar::zero);
        *e += x * c;
        if e.is_zero() {
            acc.remove(i);
        }
    }
}

impl LieCochain {
    /// Builds from values on every increasing tuple; tuples not listed are zero.
    pub fn new(arity: usize, g_dim: usize, values: impl IntoIterator<Item = (Vec<usize>, Vector)>) -> Self {
        let mut out = LieCochain {
            arity,
            g_dim,
            values: BTreeMap::new(),
        };
        for (args, v) in values {
            assert_eq!(args.len(), arity, "cochain argument count");
            let (sign, sorted) = sort_sign(&args).expect("cochain arguments must be distinct");
            let mut acc = Vector::new();
            add_scaled(&mut acc, &v, &sign);
            if !acc.is_empty() {
                out.values.insert(sorted, acc);
            }
        }
        out
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn g_dim(&self) -> usize {
        self.g_dim
    }

    /// Nonzero values on increasing tuples.
    pub fn values(&self) -> &BTreeMap<Vec<usize>, Vector> {
        &self.values
    }

    pub fn is_zero(&self) -> bool {
        self.values.is_empty()
    }

    /// The value on basis vectors in any order.
    pub fn value(&self, args: &[usize]) -> Vector {
        match sort_sign(args) {
            None => Vector::new(),
            Some((sign, sorted)) => {
                let mut out = Vector::new();
                if let Some(v) = self.values.get(&sorted) {
                    add_scaled(&mut out, v, &sign);
                }
                out
            }
        }
    }

    /// The value with the first argument an arbitrary vector of `𝔤`.
    fn value_first(&self, u: &Vector, rest: &[usize]) -> Vector {
        let mut out = Vector::new();
        for (k, c) in u {
            let mut args = vec![*k];
            args.extend_from_slice(rest);
            add_scaled(&mut out, &self.value(&args), c);
        }
        out
    }
}

/// `VE(φ)(e_{a_1}, …, e_{a_n}) = Σ_σ sgn σ · ∂_{t_1}⋯∂_{t_n} φ(exp t_1 e_{a_σ1}, …)` at 0.
///
/// For polynomial data this is the signed sum of the coefficients of
/// `x_{a_σ1}[1] ⋯ x_{a_σn}[n]` in `φ`; no `1/n!` normalization.
pub fn vanest(phi: &GroupCocycle) -> LieCochain {
    let n = phi.n;
    let dg = phi.law.dim();
    let perms = permutations(n);
    let values = increasing_tuples(dg, n).into_iter().map(|args| {
        let mut out = Vector::new();
        for (sigma, sign) in &perms {
            let m = Monomial::from_factors((0..n).map(|j| (j * dg + args[sigma[j]], 1)).collect());
            for (h, f) in phi.phi.iter().enumerate() {
                let c = f.coefficient(&m);
                if !c.is_zero() {
                    add_scaled(&mut out, &vector([(h, c)]), sign);
                }
            }
        }
        (args, out)
    });
    LieCochain::new(n, dg, values.collect::<Vec<_>>())
}

fn act_vector(mu: &[Vec<Vector>], x: usize, v: &Vector) -> Vector {
    let mut out = Vector::new();
    for (a, c) in v {
        add_scaled(&mut out, &mu[x][*a], c);
    }
    out
}

/// `δω(x_0, …, x_n) = Σ_i (-1)^i μ(x_i) ω(…x̂_i…) + Σ_{i<j} (-1)^{i+j} ω([x_i, x_j], …x̂_i…x̂_j…)`.
pub fn lie_cochain_differential(g: &LieAlgebra, mu: &[Vec<Vector>], omega: &LieCochain) -> LieCochain {
    let n = omega.arity;
    let sign = |k: usize| if k.is_multiple_of(2) { int(1) } else { int(-1) };
    let values = increasing_tuples(g.dim(), n + 1).into_iter().map(|xs| {
        let mut out = Vector::new();
        for i in 0..=n {
            let rest: Vec<usize> = xs
                .iter()
                .enumerate()
                .filter(|&(k, _)| k != i)
                .map(|(_, &x)| x)
                .collect();
            add_scaled(&mut out, &act_vector(mu, xs[i], &omega.value(&rest)), &sign(i));
        }
        for i in 0..=n {
            for j in i + 1..=n {
                let rest: Vec<usize> = xs
                    .iter()
                    .enumerate()
                    .filter(|&(k, _)| k != i && k != j)
                    .map(|(_, &x)| x)
                    .collect();
                add_scaled(
                    &mut out,
                    &omega.value_first(g.bracket(xs[i], xs[j]), &rest),
                    &sign(i + j),
                );
            }
        }
        (xs, out)
    });
    LieCochain::new(n + 1, g.dim(), values.collect::<Vec<_>>())
}

/// The L∞ algebra `𝔥[n-2] ⊕ 𝔤` with zero differential, the bracket of `𝔤`,
/// `l_2(x, h) = μ(x) h` and `ω` as the only bracket of arity `n`.
///
/// `𝔥` sits in degree `2 - n`, which is the degree forcing `ω` to arity `n`.
pub fn linfty_from_lie_cochain(
    g: &LieAlgebra,
    h_names: &[String],
    mu: &[Vec<Vector>],
    omega: &LieCochain,
) -> Result<LInftyAlgebra, ConstructionError> {
    let n = omega.arity;
    if n < 2 {
        return Err(ConstructionError::CocycleArity(n));
    }
    let dg = g.dim();
    let h_degree = 2 - n as i32;
    let basis: Vec<BasisVector> = g
        .names()
        .iter()
        .map(|x| BasisVector::graded(x.clone(), dual_coordinate(x), 0))
        .chain(
            h_names
                .iter()
                .map(|x| BasisVector::graded(x.clone(), dual_coordinate(x), h_degree)),
        )
        .collect();
    let mut l = LInftyAlgebra::new(basis)?;
    let shift = |v: &Vector| vector(v.iter().map(|(b, c)| (dg + b, c.clone())));
    for x in 0..dg {
        for y in x + 1..dg {
            let mut v = g.bracket(x, y).clone();
            if n == 2 {
                add_scaled(&mut v, &shift(&omega.value(&[x, y])), &Scalar::one());
            }
            l.set_bracket(&[x, y], v)?;
        }
        for a in 0..h_names.len() {
            l.set_bracket(&[x, dg + a], shift(&mu[x][a]))?;
        }
    }
    if n > 2 {
        for (args, v) in &omega.values {
            l.set_bracket(args, shift(v))?;
        }
    }
    Ok(l)
}

/// The L∞ algebra integrated by the cocycle: the Lie algebra of the group,
/// the infinitesimal action, and `vanest(φ)` at arity `n`.
pub fn cocycle_to_linfty(phi: &GroupCocycle) -> Result<LInftyAlgebra, ConstructionError> {
    linfty_from_lie_cochain(
        &phi.law.lie_algebra(),
        &phi.h_names,
        &phi.infinitesimal_action(),
        &vanest(phi),
    )
}
