//! Spanning trees of the n-grid and their fundamental cycles.

use alloc::vec;
use alloc::vec::Vec;

use num_rational::Ratio;

use crate::grid::{Edge, GridCoord, GridGraph};
use crate::rooted::Rooted;
use crate::{Error, Result, TreeDefect};

/// Smallest axis-parallel box containing a set of grid points.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct CycleBox {
    pub x_min: u32,
    pub x_max: u32,
    pub y_min: u32,
    pub y_max: u32,
}

impl CycleBox {
    pub(crate) const EMPTY: CycleBox = CycleBox {
        x_min: u32::MAX,
        x_max: 0,
        y_min: u32::MAX,
        y_max: 0,
    };

    pub fn point(c: GridCoord) -> Self {
        CycleBox {
            x_min: c.x,
            x_max: c.x,
            y_min: c.y,
            y_max: c.y,
        }
    }

    pub fn union(self, o: CycleBox) -> Self {
        CycleBox {
            x_min: self.x_min.min(o.x_min),
            x_max: self.x_max.max(o.x_max),
            y_min: self.y_min.min(o.y_min),
            y_max: self.y_max.max(o.y_max),
        }
    }

    pub fn include(self, c: GridCoord) -> Self {
        self.union(CycleBox::point(c))
    }

    pub fn width(&self) -> u32 {
        self.x_max - self.x_min
    }

    pub fn height(&self) -> u32 {
        self.y_max - self.y_min
    }

    pub fn perimeter(&self) -> u32 {
        2 * self.width() + 2 * self.height()
    }
}

/// Bounding box of a non-empty vertex sequence.
pub fn cycle_box(cycle: &[GridCoord]) -> Result<CycleBox> {
    let (first, rest) = cycle.split_first().ok_or(Error::EmptyCycle)?;
    Ok(rest
        .iter()
        .fold(CycleBox::point(*first), |b, &c| b.include(c)))
}

/// Length and perimeter of one fundamental cycle.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ChordRecord {
    pub edge_id: u32,
    pub length: u32,
    pub perimeter: u32,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CycleStats {
    pub n: u32,
    pub records: Vec<ChordRecord>,
    /// Sum of fundamental-cycle lengths, `L(T, G)`.
    pub l_total: u64,
    /// Sum of fundamental-cycle perimeters.
    pub p_total: u64,
}

impl CycleStats {
    pub fn count(&self) -> usize {
        self.records.len()
    }

    /// Exact average cycle length, `L / (n - 1)^2`.
    pub fn average(&self) -> Ratio<u64> {
        Ratio::new(self.l_total, self.records.len() as u64)
    }
}

/// A spanning tree of the n-grid, rooted, with logarithmic cycle queries.
#[derive(Debug, Clone)]
pub struct SpanningTree {
    grid: GridGraph,
    root: GridCoord,
    in_tree: Vec<bool>,
    rooted: Rooted,
}

impl SpanningTree {
    /// Validates `edges` (edge ids) as a spanning tree and roots it at `root`.
    pub fn from_edges(grid: GridGraph, edges: &[u32], root: GridCoord) -> Result<Self> {
        grid.check(root)?;
        let expected = grid.vertex_count() - 1;
        let mut in_tree = vec![false; grid.edge_count()];
        let mut distinct = 0usize;
        for &id in edges {
            grid.edge(id)?;
            if !in_tree[id as usize] {
                in_tree[id as usize] = true;
                distinct += 1;
            }
        }
        if distinct != expected || edges.len() != expected {
            return Err(Error::NotSpanningTree(TreeDefect::Cardinality {
                expected,
                got: edges.len(),
            }));
        }
        let triples: Vec<_> = edges
            .iter()
            .map(|&id| {
                let e = grid.edge(id).expect("checked above");
                (grid.index(e.a) as u32, grid.index(e.b) as u32, id)
            })
            .collect();
        let coords = grid.vertices().collect();
        let rooted = Rooted::build(coords, &triples, grid.index(root) as u32)
            .map_err(Error::NotSpanningTree)?;
        Ok(SpanningTree {
            grid,
            root,
            in_tree,
            rooted,
        })
    }

    /// Same as [`SpanningTree::from_edges`] with edges given by endpoints.
    pub fn from_pairs(
        grid: GridGraph,
        pairs: &[(GridCoord, GridCoord)],
        root: GridCoord,
    ) -> Result<Self> {
        let ids = pairs
            .iter()
            .map(|&(a, b)| {
                grid.edge_id(a, b)
                    .ok_or(Error::Input(alloc::format!("{a} and {b} are not adjacent")))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::from_edges(grid, &ids, root)
    }

    /// The comb: the bottom row plus every column.
    pub fn comb(grid: GridGraph, root: GridCoord) -> Result<Self> {
        let n = grid.n();
        let mut ids = Vec::with_capacity(grid.vertex_count().saturating_sub(1));
        for x in 1..n {
            ids.extend(grid.edge_id(GridCoord::new(x, 1), GridCoord::new(x + 1, 1)));
        }
        for x in 1..=n {
            for y in 1..n {
                ids.extend(grid.edge_id(GridCoord::new(x, y), GridCoord::new(x, y + 1)));
            }
        }
        Self::from_edges(grid, &ids, root)
    }

    pub fn grid(&self) -> GridGraph {
        self.grid
    }

    pub fn root(&self) -> GridCoord {
        self.root
    }

    pub fn contains_edge(&self, id: u32) -> bool {
        self.in_tree.get(id as usize).copied().unwrap_or(false)
    }

    pub fn edge_ids(&self) -> impl Iterator<Item = u32> + '_ {
        self.in_tree
            .iter()
            .enumerate()
            .filter(|(_, &t)| t)
            .map(|(i, _)| i as u32)
    }

    pub fn chord_ids(&self) -> impl Iterator<Item = u32> + '_ {
        self.in_tree
            .iter()
            .enumerate()
            .filter(|(_, &t)| !t)
            .map(|(i, _)| i as u32)
    }

    fn vid(&self, c: GridCoord) -> u32 {
        self.grid.index(c) as u32
    }

    pub fn parent(&self, v: GridCoord) -> Result<Option<GridCoord>> {
        self.grid.check(v)?;
        Ok(self
            .rooted
            .parent(self.vid(v))
            .map(|p| self.grid.coord(p as usize)))
    }

    pub fn depth(&self, v: GridCoord) -> Result<u32> {
        self.grid.check(v)?;
        Ok(self.rooted.depth(self.vid(v)))
    }

    pub fn max_depth(&self) -> u32 {
        self.rooted.max_depth()
    }

    pub fn lca(&self, u: GridCoord, v: GridCoord) -> Result<GridCoord> {
        self.grid.check(u)?;
        self.grid.check(v)?;
        Ok(self
            .grid
            .coord(self.rooted.lca(self.vid(u), self.vid(v)) as usize))
    }

    /// Number of edges on the tree path between `u` and `v`.
    pub fn path_len(&self, u: GridCoord, v: GridCoord) -> Result<u32> {
        self.grid.check(u)?;
        self.grid.check(v)?;
        Ok(self.rooted.distance(self.vid(u), self.vid(v)))
    }

    pub fn path(&self, u: GridCoord, v: GridCoord) -> Result<Vec<GridCoord>> {
        self.grid.check(u)?;
        self.grid.check(v)?;
        Ok(self
            .rooted
            .path(self.vid(u), self.vid(v))
            .into_iter()
            .map(|i| self.grid.coord(i as usize))
            .collect())
    }

    fn chord(&self, id: u32) -> Result<Edge> {
        let e = self.grid.edge(id)?;
        if self.in_tree[id as usize] {
            return Err(Error::NotAChord(id));
        }
        Ok(e)
    }

    /// The fundamental cycle of a chord, as the tree path from `e.a` to `e.b`;
    /// the closing edge is implicit.
    pub fn fundamental_cycle(&self, id: u32) -> Result<Vec<GridCoord>> {
        let e = self.chord(id)?;
        self.path(e.a, e.b)
    }

    /// Fundamental-cycle length `depth(u) + depth(v) - 2 depth(lca) + 1`.
    pub fn cycle_length(&self, id: u32) -> Result<u32> {
        let e = self.chord(id)?;
        Ok(self.rooted.distance(self.vid(e.a), self.vid(e.b)) + 1)
    }

    pub fn cycle_box(&self, id: u32) -> Result<CycleBox> {
        let e = self.chord(id)?;
        Ok(self.rooted.path_box(self.vid(e.a), self.vid(e.b)))
    }

    pub fn chord_record(&self, id: u32) -> Result<ChordRecord> {
        let e = self.chord(id)?;
        let (a, b) = (self.vid(e.a), self.vid(e.b));
        Ok(ChordRecord {
            edge_id: id,
            length: self.rooted.distance(a, b) + 1,
            perimeter: self.rooted.path_box(a, b).perimeter(),
        })
    }

    /// Lengths and perimeters of all fundamental cycles (`L(T, G)` and friends).
    pub fn total_length(&self) -> Result<CycleStats> {
        if self.grid.n() == 1 {
            return Err(Error::NoChords);
        }
        let mut records = Vec::with_capacity(self.grid.chord_count());
        let (mut l_total, mut p_total) = (0u64, 0u64);
        for id in self.chord_ids() {
            let r = self.chord_record(id)?;
            l_total += u64::from(r.length);
            p_total += u64::from(r.perimeter);
            records.push(r);
        }
        Ok(CycleStats {
            n: self.grid.n(),
            records,
            l_total,
            p_total,
        })
    }

    /// `L(T, G)` only; 0 for the 1-grid.
    pub fn l_total(&self) -> u64 {
        self.chord_ids()
            .map(|id| u64::from(self.cycle_length(id).expect("chord")))
            .sum()
    }
}
