//! The recursive spanning tree `T_n` with `L(T_n) <= 10 n^2 log2 n`.
//!
//! `T_1` is a single vertex and `T_2` is the path `(1,1)-(2,1)-(2,2)-(1,2)`.
//! Every `T_k` is rooted at its bottom-right corner `(k, 1)` and every vertex
//! is within distance `2(k - 1)` of the root.
//!
//! For odd `n = 2m + 1` the tree is the bottom row, the central column
//! `x = m + 1`, and four copies of `T_m` filling the four `m x m` squares
//! above the bottom row. The two left copies keep their orientation, the two
//! right copies are mirrored left-to-right, so each root sits next to the
//! central column and is joined to it by one horizontal edge.
//!
//! For even `n = 2m` the spine is the bottom row from `x = m + 1` to the right
//! together with the column `x = m + 1` from the bottom up to row `m + 1`.
//! Three copies of `T_m` fill the three quadrants other than the bottom-right
//! one:
//!
//! - bottom-left, mirrored top-to-bottom, root `(m, m)` joined to `(m + 1, m)`;
//! - top-left, unchanged, root `(m, m + 1)` joined to `(m + 1, m + 1)`;
//! - top-right, mirrored left-to-right, root `(m + 1, m + 1)` on the spine.
//!
//! A copy of `T_{m-1}` mirrored left-to-right fills the columns `m + 2..=2m`
//! and rows `2..=m`; its root `(m + 2, 2)` is joined to `(m + 1, 2)`.

use alloc::format;
use alloc::vec::Vec;

use num_rational::Ratio;

use crate::bounds::{self, Verdict};
use crate::grid::{GridCoord, GridGraph, SubgridRef};
use crate::tree::{ChordRecord, SpanningTree};
use crate::{Error, Result};

/// `L(T_n)` for `n = 1..=4`. The last entry is also the minimum over all
/// spanning trees of the 4-grid.
pub const SMALL_VALUES: [u64; 4] = [0, 4, 16, 38];

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BlockRole {
    OddBottomLeft,
    OddTopLeft,
    OddBottomRight,
    OddTopRight,
    EvenBottomLeft,
    EvenTopLeft,
    EvenTopRight,
    EvenSmall,
}

/// One recursive copy placed inside `T_n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PlacedBlock {
    pub subgrid: SubgridRef,
    pub flip_h: bool,
    pub flip_v: bool,
    pub role: BlockRole,
}

impl PlacedBlock {
    pub fn side(&self) -> u32 {
        self.subgrid.width()
    }

    /// Where the copy's root `(k, 1)` lands.
    pub fn root(&self) -> GridCoord {
        let k = self.side();
        let lx = if self.flip_h { 1 } else { k };
        let ly = if self.flip_v { k } else { 1 };
        GridCoord::new(self.subgrid.x_lo + lx - 1, self.subgrid.y_lo + ly - 1)
    }
}

/// Top level of the recursion for `n >= 3`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Layout {
    pub n: u32,
    pub blocks: Vec<PlacedBlock>,
    /// Spine edges (the bottom path and the central column), local coordinates.
    pub spine: Vec<(GridCoord, GridCoord)>,
    /// Edges joining block roots to the spine.
    pub joins: Vec<(GridCoord, GridCoord)>,
}

fn c(x: u32, y: u32) -> GridCoord {
    GridCoord::new(x, y)
}

pub fn layout(n: u32) -> Option<Layout> {
    if n < 3 {
        return None;
    }
    let mut spine = Vec::new();
    let mut joins = Vec::new();
    let mut blocks = Vec::new();
    let block = |x_lo, y_lo, side, flip_h, flip_v, role| PlacedBlock {
        subgrid: SubgridRef::square(x_lo, y_lo, side),
        flip_h,
        flip_v,
        role,
    };
    if n % 2 == 1 {
        let m = (n - 1) / 2;
        for x in 1..n {
            spine.push((c(x, 1), c(x + 1, 1)));
        }
        for y in 1..n {
            spine.push((c(m + 1, y), c(m + 1, y + 1)));
        }
        blocks.push(block(1, 2, m, false, false, BlockRole::OddBottomLeft));
        blocks.push(block(1, m + 2, m, false, false, BlockRole::OddTopLeft));
        blocks.push(block(m + 2, 2, m, true, false, BlockRole::OddBottomRight));
        blocks.push(block(m + 2, m + 2, m, true, false, BlockRole::OddTopRight));
        for b in &blocks {
            let r = b.root();
            joins.push((r, c(m + 1, r.y)));
        }
    } else {
        let m = n / 2;
        for x in m + 1..n {
            spine.push((c(x, 1), c(x + 1, 1)));
        }
        for y in 1..=m {
            spine.push((c(m + 1, y), c(m + 1, y + 1)));
        }
        blocks.push(block(1, 1, m, false, true, BlockRole::EvenBottomLeft));
        blocks.push(block(1, m + 1, m, false, false, BlockRole::EvenTopLeft));
        blocks.push(block(m + 1, m + 1, m, true, false, BlockRole::EvenTopRight));
        blocks.push(block(m + 2, 2, m - 1, true, false, BlockRole::EvenSmall));
        for b in &blocks {
            let r = b.root();
            if b.role != BlockRole::EvenTopRight {
                joins.push((r, c(m + 1, r.y)));
            }
        }
    }
    Some(Layout {
        n,
        blocks,
        spine,
        joins,
    })
}

/// `x -> o + s x` on each axis.
#[derive(Debug, Clone, Copy)]
struct Affine {
    ox: i64,
    sx: i64,
    oy: i64,
    sy: i64,
}

impl Affine {
    const IDENTITY: Affine = Affine {
        ox: 0,
        sx: 1,
        oy: 0,
        sy: 1,
    };

    fn apply(&self, p: GridCoord) -> GridCoord {
        let x = self.ox + self.sx * i64::from(p.x);
        let y = self.oy + self.sy * i64::from(p.y);
        GridCoord::new(x as u32, y as u32)
    }

    fn placement(b: &PlacedBlock) -> Affine {
        let k = i64::from(b.side());
        let (x_lo, y_lo) = (i64::from(b.subgrid.x_lo), i64::from(b.subgrid.y_lo));
        let (ox, sx) = if b.flip_h {
            (x_lo + k, -1)
        } else {
            (x_lo - 1, 1)
        };
        let (oy, sy) = if b.flip_v {
            (y_lo + k, -1)
        } else {
            (y_lo - 1, 1)
        };
        Affine { ox, sx, oy, sy }
    }

    fn then(&self, inner: &Affine) -> Affine {
        Affine {
            ox: self.ox + self.sx * inner.ox,
            sx: self.sx * inner.sx,
            oy: self.oy + self.sy * inner.oy,
            sy: self.sy * inner.sy,
        }
    }
}

fn emit(k: u32, map: &Affine, out: &mut Vec<(GridCoord, GridCoord)>) {
    match k {
        0 | 1 => {}
        2 => {
            for (a, b) in [(c(1, 1), c(2, 1)), (c(2, 1), c(2, 2)), (c(2, 2), c(1, 2))] {
                out.push((map.apply(a), map.apply(b)));
            }
        }
        _ => {
            let lay = layout(k).expect("k >= 3");
            for &(a, b) in lay.spine.iter().chain(&lay.joins) {
                out.push((map.apply(a), map.apply(b)));
            }
            for b in &lay.blocks {
                emit(b.side(), &map.then(&Affine::placement(b)), out);
            }
        }
    }
}

/// Edges of `T_n` as endpoint pairs.
pub fn tree_pairs(n: u32) -> Vec<(GridCoord, GridCoord)> {
    let mut out = Vec::with_capacity((n as usize * n as usize).saturating_sub(1));
    emit(n, &Affine::IDENTITY, &mut out);
    out
}

/// Builds `T_n`, rooted at `(n, 1)`.
pub fn build_t(n: u32) -> Result<SpanningTree> {
    let grid = GridGraph::new(n)?;
    SpanningTree::from_pairs(grid, &tree_pairs(n), c(n, 1))
}

/// Signed-size entry point for user input.
pub fn build_t_checked(n: i64) -> Result<SpanningTree> {
    let grid = GridGraph::from_signed(n)?;
    build_t(grid.n())
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConstructionReport {
    pub n: u32,
    pub l_total: u64,
    pub max_depth: u32,
    pub depth_bound: u32,
    /// `None` for the 1-grid.
    pub average: Option<Ratio<u64>>,
    pub upper_total: Verdict,
    pub upper_average: Option<Verdict>,
}

/// Checks the construction contract: spanning, rooted at `(n, 1)`, depth at
/// most `2(n - 1)`, `L <= 10 n^2 log2 n`, and the exact small values.
pub fn validate_construction(t: &SpanningTree) -> Result<ConstructionReport> {
    let grid = t.grid();
    let n = grid.n();
    let fail = |clause: &str, detail: alloc::string::String| {
        Err(Error::ConstructionInvalid(format!(
            "clause ({clause}): {detail}"
        )))
    };
    // (a) holds by type: a SpanningTree is validated on construction; recheck the count.
    if t.edge_ids().count() + 1 != grid.vertex_count() {
        return fail("a", format!("tree has {} edges", t.edge_ids().count()));
    }
    if t.root() != c(n, 1) {
        return fail("b", format!("root is {}, expected ({n}, 1)", t.root()));
    }
    let max_depth = t.max_depth();
    let depth_bound = 2 * (n - 1);
    if max_depth > depth_bound {
        return fail(
            "c",
            format!("max depth {max_depth} exceeds 2(n-1) = {depth_bound}"),
        );
    }
    let l_total = t.l_total();
    let upper_total = bounds::upper_total(l_total, u64::from(n));
    if n >= 2 && !upper_total.ok() {
        return fail("d", format!("L = {l_total} exceeds 10 n^2 log2 n"));
    }
    if let Some(&expected) = SMALL_VALUES.get(n as usize - 1) {
        if l_total != expected {
            return fail("e", format!("L = {l_total}, expected {expected}"));
        }
    }
    let (average, upper_average) = if n >= 2 {
        let avg = Ratio::new(l_total, grid.chord_count() as u64);
        (
            Some(avg),
            Some(bounds::upper_average(l_total, u64::from(n))),
        )
    } else {
        (None, None)
    };
    Ok(ConstructionReport {
        n,
        l_total,
        max_depth,
        depth_bound,
        average,
        upper_total,
        upper_average,
    })
}

/// Per-edge cap on the crossing cycles: `(5n - 7)/2` for odd `n`, `(5n - 2)/2` for even `n`.
pub fn crossing_cap(n: u32) -> u32 {
    if n % 2 == 1 {
        (5 * n - 7) / 2
    } else {
        (5 * n - 2) / 2
    }
}

/// Chords of `T_n` whose endpoints are not inside one recursive block.
pub fn crossing_chords(n: u32) -> Result<Vec<ChordRecord>> {
    if n < 4 {
        return Err(Error::RecursionNotApplicable(n));
    }
    let lay = layout(n).expect("n >= 4");
    let t = build_t(n)?;
    let grid = t.grid();
    t.chord_ids()
        .filter(|&id| {
            let e = grid.edge(id).expect("chord id");
            !lay.blocks
                .iter()
                .any(|b| b.subgrid.contains(e.a) && b.subgrid.contains(e.b))
        })
        .map(|id| t.chord_record(id))
        .collect()
}

/// Number of crossing chords; `4n - 8` for odd and `3n - 6` for even `n`.
pub fn crossing_edge_count(n: u32) -> Result<usize> {
    crossing_chords(n).map(|v| v.len())
}
