//! Exact rational rank computation for the sparse operator matrices used as
//! independent dimension oracles. The Dirac and Laplace matrices in the
//! monomial (x) blade basis decompose into many small connected components,
//! so the elimination runs component by component.

use std::collections::{BTreeMap, HashMap};

use num_traits::Zero;

use crate::scalar::Rat;

/// Columns of a sparse matrix: each column is a list of `(row, value)`.
pub struct SparseColumns {
    pub ncols: usize,
    pub cols: Vec<Vec<(usize, Rat)>>,
}

struct DisjointSet {
    parent: Vec<usize>,
}

impl DisjointSet {
    fn new(n: usize) -> Self {
        DisjointSet {
            parent: (0..n).collect(),
        }
    }

    fn find(&mut self, x: usize) -> usize {
        if self.parent[x] != x {
            let root = self.find(self.parent[x]);
            self.parent[x] = root;
        }
        self.parent[x]
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.parent[ra] = rb;
        }
    }
}

/// Rank over the rationals via Gaussian elimination on each connected
/// component of the column/row support graph.
pub fn rank(matrix: &SparseColumns) -> usize {
    let n = matrix.ncols;
    let mut dsu = DisjointSet::new(n);
    let mut row_owner: HashMap<usize, usize> = HashMap::new();
    for (col, entries) in matrix.cols.iter().enumerate() {
        for (row, _) in entries {
            match row_owner.get(row) {
                Some(&owner) => dsu.union(col, owner),
                None => {
                    row_owner.insert(*row, col);
                }
            }
        }
    }
    let mut components: HashMap<usize, Vec<usize>> = HashMap::new();
    for col in 0..n {
        if matrix.cols[col].is_empty() {
            continue;
        }
        components.entry(dsu.find(col)).or_default().push(col);
    }
    components
        .values()
        .map(|cols| component_rank(matrix, cols))
        .sum()
}

fn component_rank(matrix: &SparseColumns, cols: &[usize]) -> usize {
    // Rows as maps column -> value. Each row is reduced against the pivot
    // matching its current lead column until the lead is fresh; pivot rows
    // are normalized to 1 at their lead, which is their smallest column, so
    // each reduction strictly advances the lead and terminates.
    let mut pivots: HashMap<usize, BTreeMap<usize, Rat>> = HashMap::new();
    let mut rows: BTreeMap<usize, BTreeMap<usize, Rat>> = BTreeMap::new();
    for &col in cols {
        for (row, v) in &matrix.cols[col] {
            rows.entry(*row).or_default().insert(col, v.clone());
        }
    }
    for (_, mut row) in rows {
        loop {
            let Some((&lead, _)) = row.iter().next() else {
                break;
            };
            let Some(pivot_row) = pivots.get(&lead) else {
                let lead_val = row[&lead].clone();
                for v in row.values_mut() {
                    *v /= &lead_val;
                }
                pivots.insert(lead, row);
                break;
            };
            let factor = row[&lead].clone();
            for (c, v) in pivot_row {
                let entry = row.entry(*c).or_insert_with(Rat::zero);
                *entry -= &factor * v;
                if entry.is_zero() {
                    row.remove(c);
                }
            }
        }
    }
    pivots.len()
}

/// Nullity = columns - rank, counting only structurally nonzero columns as
/// rank contributors; identically zero columns contribute to the kernel.
pub fn nullity(matrix: &SparseColumns) -> usize {
    matrix.ncols - rank(matrix)
}
