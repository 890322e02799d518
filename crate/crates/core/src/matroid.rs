//! The graphic matroid of the grid in echelon form over GF(2).
//!
//! Rows are the tree edges in increasing id order, columns are all grid
//! edges in id order. A tree-edge column is a unit vector and a chord column
//! marks the tree edges on the chord's fundamental cycle.

use alloc::vec;
use alloc::vec::Vec;

use crate::grid::GridGraph;
use crate::tree::SpanningTree;
use crate::{Error, Result};

/// Column-compressed 0/1 matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EchelonMatrix {
    rows: usize,
    cols: usize,
    /// Edge id of each row.
    row_edges: Vec<u32>,
    col_ptr: Vec<usize>,
    row_idx: Vec<u32>,
}

impl EchelonMatrix {
    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn nnz(&self) -> usize {
        self.row_idx.len()
    }

    pub fn row_edges(&self) -> &[u32] {
        &self.row_edges
    }

    /// Row indices of the ones in column `j`, increasing.
    pub fn column(&self, j: usize) -> &[u32] {
        &self.row_idx[self.col_ptr[j]..self.col_ptr[j + 1]]
    }

    /// `(row, col)` of every one, column by column.
    pub fn entries(&self) -> impl Iterator<Item = (u32, u32)> + '_ {
        (0..self.cols).flat_map(move |j| self.column(j).iter().map(move |&r| (r, j as u32)))
    }

    /// Rank over GF(2).
    pub fn gf2_rank(&self) -> usize {
        let words = self.cols.div_ceil(64);
        let mut m = vec![vec![0u64; words]; self.rows];
        for (r, c) in self.entries() {
            m[r as usize][c as usize / 64] |= 1 << (c % 64);
        }
        let mut rank = 0;
        for c in 0..self.cols {
            let (w, bit) = (c / 64, 1u64 << (c % 64));
            let Some(p) = (rank..self.rows).find(|&r| m[r][w] & bit != 0) else {
                continue;
            };
            m.swap(rank, p);
            let pivot = m[rank].clone();
            for (r, row) in m.iter_mut().enumerate() {
                if r != rank && row[w] & bit != 0 {
                    for (x, y) in row.iter_mut().zip(&pivot) {
                        *x ^= y;
                    }
                }
            }
            rank += 1;
        }
        rank
    }

    /// Whether every chord column, together with the chord itself, is the
    /// edge set of an even subgraph.
    pub fn chord_columns_are_cycles(&self, g: GridGraph) -> bool {
        let mut deg = vec![0u8; g.vertex_count()];
        for j in 0..self.cols {
            let col = self.column(j);
            if col.len() == 1 && self.row_edges[col[0] as usize] == j as u32 {
                continue;
            }
            deg.iter_mut().for_each(|d| *d = 0);
            let ids = col
                .iter()
                .map(|&r| self.row_edges[r as usize])
                .chain([j as u32]);
            for id in ids {
                let e = g.edge(id).expect("edge id");
                deg[g.index(e.a)] ^= 1;
                deg[g.index(e.b)] ^= 1;
            }
            if deg.iter().any(|&d| d != 0) {
                return false;
            }
        }
        true
    }
}

pub fn echelon_representation(t: &SpanningTree) -> Result<EchelonMatrix> {
    let g = t.grid();
    if g.n() == 1 {
        return Err(Error::EmptyMatroid);
    }
    let row_edges: Vec<u32> = t.edge_ids().collect();
    let mut row_of = vec![u32::MAX; g.edge_count()];
    for (r, &id) in row_edges.iter().enumerate() {
        row_of[id as usize] = r as u32;
    }
    let mut col_ptr = Vec::with_capacity(g.edge_count() + 1);
    let mut row_idx = Vec::new();
    col_ptr.push(0);
    for e in g.edges() {
        if t.contains_edge(e.id) {
            row_idx.push(row_of[e.id as usize]);
        } else {
            let path = t.path(e.a, e.b)?;
            let start = row_idx.len();
            row_idx.extend(
                path.windows(2)
                    .map(|w| row_of[g.edge_id(w[0], w[1]).expect("tree path") as usize]),
            );
            row_idx[start..].sort_unstable();
        }
        col_ptr.push(row_idx.len());
    }
    Ok(EchelonMatrix {
        rows: row_edges.len(),
        cols: g.edge_count(),
        row_edges,
        col_ptr,
        row_idx,
    })
}

/// Number of ones in the echelon representation: `(n^2 - 1) + L - (n - 1)^2`.
pub fn sparsity(t: &SpanningTree) -> Result<u64> {
    let g = t.grid();
    if g.n() == 1 {
        return Err(Error::EmptyMatroid);
    }
    let n = u64::from(g.n());
    Ok((n * n - 1) + t.l_total() - (n - 1) * (n - 1))
}
