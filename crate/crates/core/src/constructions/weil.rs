use std::sync::Arc;

use super::ConstructionError;
use crate::dgman::check_q;
use crate::linfty::{dual_coordinate, LieAlgebra};
use crate::superalg::{frac, int, Algebra, Derivation, Element, GenSpec, Parity};

/// The Weil algebra `W(𝔤)` on `ξ^a` (degree 1, odd) and `t^a` (degree 2, even)
/// with its contractions and Lie derivatives.
///
/// `dξ^a = t^a - ½ c^a_{bc} ξ^b ξ^c` and `dt^a = -c^a_{bc} ξ^b t^c`;
/// `ι_a ξ^b = δ^b_a`, `ι_a t^b = 0` and `L_a = [d, ι_a]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeilAlgebra {
    g: LieAlgebra,
    alg: Arc<Algebra>,
    d: Derivation,
    iota: Vec<Derivation>,
    lie: Vec<Derivation>,
}

fn curvature_name(name: &str) -> String {
    let xi = dual_coordinate(name);
    format!("t{}", xi.trim_start_matches('ξ'))
}

/// Rejects constants violating Jacobi.
pub fn weil(g: &LieAlgebra) -> Result<WeilAlgebra, ConstructionError> {
    if let Some((i, j, k, _)) = g.jacobi_violation() {
        let n = g.names();
        return Err(ConstructionError::Jacobi(n[i].clone(), n[j].clone(), n[k].clone()));
    }
    Ok(WeilAlgebra::new_unchecked(g))
}

impl WeilAlgebra {
    /// Builds the differential without checking Jacobi, for mutation tests.
    pub fn new_unchecked(g: &LieAlgebra) -> Self {
        let n = g.dim();
        let gens: Vec<GenSpec> = g
            .names()
            .iter()
            .map(|x| GenSpec::odd(dual_coordinate(x), 1))
            .chain(g.names().iter().map(|x| GenSpec::even(curvature_name(x), 2)))
            .collect();
        let alg = Algebra::new(gens).expect("Weil generator names are distinct");
        let xi = |a: usize| Element::generator(&alg, a);
        let t = |a: usize| Element::generator(&alg, n + a);
        let mut values = Vec::with_capacity(2 * n);
        for a in 0..n {
            let mut v = t(a);
            for b in 0..n {
                for c in 0..n {
                    let k = g.constant(b, c, a);
                    v = v + (xi(b) * xi(c)).scale(&(k * frac(-1, 2)));
                }
            }
            values.push(v);
        }
        for a in 0..n {
            let mut v = Element::zero(&alg);
            for b in 0..n {
                for c in 0..n {
                    v = v + (xi(b) * t(c)).scale(&(-g.constant(b, c, a)));
                }
            }
            values.push(v);
        }
        let d = Derivation::new(&alg, 1, Parity::Odd, values).expect("values in the Weil algebra");
        let iota: Vec<Derivation> = (0..n)
            .map(|a| {
                let values = (0..2 * n)
                    .map(|b| Element::scalar(&alg, if a == b { int(1) } else { int(0) }))
                    .collect();
                Derivation::new(&alg, -1, Parity::Odd, values).expect("values in the Weil algebra")
            })
            .collect();
        let lie = iota.iter().map(|i| d.commutator(i)).collect();
        WeilAlgebra {
            g: g.clone(),
            alg,
            d,
            iota,
            lie,
        }
    }

    pub fn lie_algebra(&self) -> &LieAlgebra {
        &self.g
    }

    pub fn algebra(&self) -> &Arc<Algebra> {
        &self.alg
    }

    pub fn d(&self) -> &Derivation {
        &self.d
    }

    pub fn iota(&self, a: usize) -> &Derivation {
        &self.iota[a]
    }

    pub fn lie_derivative(&self, a: usize) -> &Derivation {
        &self.lie[a]
    }

    /// `ι` of an arbitrary vector `Σ v_a e_a`.
    fn iota_of(&self, v: &crate::linfty::Vector) -> Derivation {
        v.iter()
            .fold(Derivation::zero(&self.alg, -1, Parity::Odd), |acc, (a, c)| {
                acc.add(&self.iota[*a].scale(c))
            })
    }

    fn lie_of(&self, v: &crate::linfty::Vector) -> Derivation {
        v.iter()
            .fold(Derivation::zero(&self.alg, 0, Parity::Even), |acc, (a, c)| {
                acc.add(&self.lie[*a].scale(c))
            })
    }

    /// Names of the failing relations among `d² = 0`, `[ι_a, ι_b] = 0`,
    /// `[L_a, ι_b] = ι_{[a,b]}`, `[L_a, L_b] = L_{[a,b]}` and `[d, L_a] = 0`.
    pub fn relation_failures(&self) -> Vec<String> {
        let n = self.g.dim();
        let names = self.g.names();
        let mut out = Vec::new();
        if let Some((x, _)) = check_q(&self.d).square_witness {
            out.push(format!("d² = 0 fails on {x}"));
        }
        for a in 0..n {
            if !self.d.commutator(&self.lie[a]).is_zero() {
                out.push(format!("[d, L_{}] = 0", names[a]));
            }
            for b in 0..n {
                if !self.iota[a].commutator(&self.iota[b]).is_zero() {
                    out.push(format!("[ι_{}, ι_{}] = 0", names[a], names[b]));
                }
                let ab = self.g.bracket(a, b);
                if self.lie[a].commutator(&self.iota[b]) != self.iota_of(ab) {
                    out.push(format!(
                        "[L_{}, ι_{}] = ι_[{},{}]",
                        names[a], names[b], names[a], names[b]
                    ));
                }
                if self.lie[a].commutator(&self.lie[b]) != self.lie_of(ab) {
                    out.push(format!(
                        "[L_{}, L_{}] = L_[{},{}]",
                        names[a], names[b], names[a], names[b]
                    ));
                }
            }
        }
        out
    }
}
