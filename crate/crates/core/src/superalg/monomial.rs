use super::{Algebra, Parity};

/// A product of generators in canonical (declaration) order.
///
/// Stored as `(generator index, exponent)` pairs with strictly increasing
/// indices and positive exponents. Odd generators never have exponent > 1.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial(Vec<(usize, u32)>);

impl Monomial {
    pub fn one() -> Self {
        Monomial(Vec::new())
    }

    pub fn generator(i: usize) -> Self {
        Monomial(vec![(i, 1)])
    }

    /// Builds a monomial from already-canonical factors.
    ///
    /// Panics if the factors are out of order or carry a zero exponent.
    pub fn from_factors(factors: Vec<(usize, u32)>) -> Self {
        assert!(
            factors.windows(2).all(|w| w[0].0 < w[1].0) && factors.iter().all(|f| f.1 > 0),
            "monomial factors must be strictly increasing with positive exponents"
        );
        Monomial(factors)
    }

    pub fn factors(&self) -> &[(usize, u32)] {
        &self.0
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn exponent(&self, gen: usize) -> u32 {
        self.0
            .binary_search_by_key(&gen, |f| f.0)
            .map(|k| self.0[k].1)
            .unwrap_or(0)
    }

    /// Polynomial degree (sum of exponents).
    pub fn arity(&self) -> u32 {
        self.0.iter().map(|f| f.1).sum()
    }

    pub fn degree(&self, alg: &Algebra) -> i32 {
        self.0.iter().map(|&(g, e)| alg.gen(g).degree * e as i32).sum()
    }

    pub fn parity(&self, alg: &Algebra) -> Parity {
        let odd: u32 = self
            .0
            .iter()
            .filter(|(g, _)| alg.gen(*g).parity.is_odd())
            .map(|f| f.1)
            .sum();
        if odd.is_multiple_of(2) {
            Parity::Even
        } else {
            Parity::Odd
        }
    }

    /// Product `self * rhs` brought to canonical order.
    ///
    /// Returns `None` when an odd generator would appear twice, otherwise the
    /// product together with a flag that is `true` when reordering introduced
    /// a minus sign.
    pub fn mul(&self, rhs: &Monomial, alg: &Algebra) -> Option<(bool, Monomial)> {
        let mut negate = false;
        // each odd factor of rhs passes over every odd factor of self with a larger index
        let mut odd_left_above = 0usize;
        let left_odd: Vec<usize> = self
            .0
            .iter()
            .filter(|(g, _)| alg.gen(*g).parity.is_odd())
            .map(|f| f.0)
            .collect();
        for &(j, _) in &rhs.0 {
            if alg.gen(j).parity.is_odd() {
                if left_odd.binary_search(&j).is_ok() {
                    return None;
                }
                odd_left_above += left_odd.len() - left_odd.partition_point(|&i| i < j);
            }
        }
        if odd_left_above % 2 == 1 {
            negate = true;
        }

        let mut out = Vec::with_capacity(self.0.len() + rhs.0.len());
        let (mut a, mut b) = (0, 0);
        while a < self.0.len() && b < rhs.0.len() {
            let (ga, ea) = self.0[a];
            let (gb, eb) = rhs.0[b];
            if ga < gb {
                out.push((ga, ea));
                a += 1;
            } else if gb < ga {
                out.push((gb, eb));
                b += 1;
            } else {
                out.push((ga, ea + eb));
                a += 1;
                b += 1;
            }
        }
        out.extend_from_slice(&self.0[a..]);
        out.extend_from_slice(&rhs.0[b..]);
        Some((negate, Monomial(out)))
    }

    /// Splits into `(rest, picked)` with `self = ± rest * picked`, where
    /// `picked` keeps only generators accepted by `keep`. The flag reports the
    /// sign of moving the picked factors to the right.
    pub fn split_right(&self, alg: &Algebra, keep: impl Fn(usize) -> bool) -> (bool, Monomial, Monomial) {
        let mut rest = Vec::new();
        let mut picked = Vec::new();
        let mut swaps = 0usize;
        let mut odd_rest_after = 0usize;
        // walk from the right: an odd picked factor must pass every odd rest factor to its right
        for &(g, e) in self.0.iter().rev() {
            let odd = alg.gen(g).parity.is_odd();
            if keep(g) {
                picked.push((g, e));
                if odd {
                    swaps += odd_rest_after;
                }
            } else {
                rest.push((g, e));
                if odd {
                    odd_rest_after += 1;
                }
            }
        }
        rest.reverse();
        picked.reverse();
        (swaps % 2 == 1, Monomial(rest), Monomial(picked))
    }

    pub fn display(&self, alg: &Algebra) -> String {
        if self.0.is_empty() {
            return "1".to_string();
        }
        self.0
            .iter()
            .map(|&(g, e)| {
                if e == 1 {
                    alg.gen(g).name.clone()
                } else {
                    format!("{}^{}", alg.gen(g).name, e)
                }
            })
            .collect::<Vec<_>>()
            .join("*")
    }
}
