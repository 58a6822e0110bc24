//! Young diagrams, Schur functor dimensions on even and odd spaces, and the
//! torus-character decomposition of functions on `Hom(ℝ^{0|2}, ℝ^{0|2})`.

mod character;

use std::collections::BTreeMap;
use std::fmt;

pub use character::{
    omega2_character_identity, omega2_sides, CharacterSeries, Omega2Report, QuotientReading, SliceCheck,
};

use crate::constructions::closed_forms;
use crate::superalg::Parity;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SchurError {
    #[error("rows must be positive and weakly decreasing, got {0:?}")]
    NotADiagram(Vec<usize>),
    #[error("expected a diagram with exactly two columns, got {0}")]
    NotTwoColumn(YoungDiagram),
    #[error("truncation degree must be at least 1, got {0}")]
    Truncation(usize),
}

/// Row lengths, weakly decreasing and positive; the empty diagram is allowed.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct YoungDiagram {
    rows: Vec<usize>,
}

impl YoungDiagram {
    pub fn new(rows: Vec<usize>) -> Result<Self, SchurError> {
        if rows.contains(&0) || rows.windows(2).any(|w| w[0] < w[1]) {
            return Err(SchurError::NotADiagram(rows));
        }
        Ok(YoungDiagram { rows })
    }

    pub fn rows(&self) -> &[usize] {
        &self.rows
    }

    /// Number of squares.
    pub fn size(&self) -> usize {
        self.rows.iter().sum()
    }

    /// Number of columns, the length of the first row.
    pub fn columns(&self) -> usize {
        self.rows.first().copied().unwrap_or(0)
    }

    /// Height of column `j`, counted from 1.
    pub fn column_height(&self, j: usize) -> usize {
        self.rows.iter().filter(|&&r| r >= j).count()
    }

    pub fn transpose(&self) -> YoungDiagram {
        YoungDiagram {
            rows: (1..=self.columns()).map(|j| self.column_height(j)).collect(),
        }
    }

    /// All diagrams with `size` squares, in decreasing lexicographic order.
    pub fn partitions(size: usize) -> Vec<YoungDiagram> {
        fn go(left: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<YoungDiagram>) {
            if left == 0 {
                out.push(YoungDiagram { rows: cur.clone() });
                return;
            }
            for r in (1..=left.min(max)).rev() {
                cur.push(r);
                go(left - r, r, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        go(size, size, &mut Vec::new(), &mut out);
        out
    }
}

impl fmt::Display for YoungDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.rows)
    }
}

/// Semistandard tableaux of shape `λ` with entries `0..n`, as their weights
/// (entry multiplicities) with multiplicity.
pub fn tableau_weights(lambda: &YoungDiagram, n: usize) -> BTreeMap<Vec<u32>, u64> {
    let cells: Vec<(usize, usize)> = lambda
        .rows()
        .iter()
        .enumerate()
        .flat_map(|(r, &len)| (0..len).map(move |c| (r, c)))
        .collect();
    let mut grid: Vec<Vec<usize>> = lambda.rows().iter().map(|&len| vec![0; len]).collect();
    let mut out = BTreeMap::new();
    fill(&cells, 0, n, &mut grid, &mut vec![0; n], &mut out);
    out
}

fn fill(
    cells: &[(usize, usize)],
    pos: usize,
    n: usize,
    grid: &mut Vec<Vec<usize>>,
    weight: &mut Vec<u32>,
    out: &mut BTreeMap<Vec<u32>, u64>,
) {
    let Some(&(r, c)) = cells.get(pos) else {
        *out.entry(weight.clone()).or_insert(0) += 1;
        return;
    };
    // rows weakly increase, columns strictly increase
    let low = match (c, r) {
        (0, 0) => 0,
        (0, _) => grid[r - 1][c] + 1,
        (_, 0) => grid[r][c - 1],
        _ => grid[r][c - 1].max(grid[r - 1][c] + 1),
    };
    for v in low..n {
        grid[r][c] = v;
        weight[v] += 1;
        fill(cells, pos + 1, n, grid, weight, out);
        weight[v] -= 1;
    }
}

/// Dimension of the `λ`-Schur functor on an `n`-dimensional space.
///
/// On an odd space the symmetric group acts with Koszul signs, which
/// transposes the diagram; the count is then by semistandard tableaux.
pub fn schur_dim(lambda: &YoungDiagram, n: usize, parity: Parity) -> u64 {
    let shape = match parity {
        Parity::Even => lambda.clone(),
        Parity::Odd => lambda.transpose(),
    };
    tableau_weights(&shape, n).values().sum()
}

/// `dim Γ(T*_λ ℝ^{0|n}) = 2ⁿ · schur_dim(λ, n, odd)`.
pub fn tensor_jet_dim(lambda: &YoungDiagram, n: usize) -> u64 {
    (1u64 << n) * schur_dim(lambda, n, Parity::Odd)
}

/// Moves the lowest square of column 2 to the end of row 1 until column 2
/// has a single square.
pub fn composition_series(lambda: &YoungDiagram) -> Result<Vec<YoungDiagram>, SchurError> {
    if lambda.columns() != 2 {
        return Err(SchurError::NotTwoColumn(lambda.clone()));
    }
    let mut out = vec![lambda.clone()];
    let mut rows = lambda.rows().to_vec();
    while rows.iter().filter(|&&r| r >= 2).count() > 1 {
        let lowest = rows.iter().rposition(|&r| r >= 2).expect("column 2 is nonempty");
        rows[lowest] -= 1;
        rows[0] += 1;
        out.push(YoungDiagram { rows: rows.clone() });
    }
    Ok(out)
}

/// Dimension of closed `k`-forms on `ℝ^{0|n}`, by computing the kernel of `d`.
pub fn closed_forms_dim(k: u32, n: usize) -> usize {
    closed_forms(n, k).dim()
}
