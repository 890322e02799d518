//! The n-grid `G_{n,n}`.
//!
//! Coordinates are 1-based with `(1, 1)` the bottom-left vertex; `x` is the
//! column and `y` the row. Edge ids follow a fixed contract shared by every
//! file format:
//!
//! - horizontal `{(x, y), (x + 1, y)}` has id `(y - 1)(n - 1) + (x - 1)`;
//! - vertical `{(x, y), (x, y + 1)}` has id `n(n - 1) + (y - 1)n + (x - 1)`.

use alloc::vec::Vec;

use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GridCoord {
    pub x: u32,
    pub y: u32,
}

impl GridCoord {
    pub const fn new(x: u32, y: u32) -> Self {
        GridCoord { x, y }
    }

    pub fn l1(self, other: GridCoord) -> u32 {
        self.x.abs_diff(other.x) + self.y.abs_diff(other.y)
    }
}

impl core::fmt::Display for GridCoord {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Orientation {
    Horizontal,
    Vertical,
}

/// An edge of the grid. `a` is always the endpoint with the smaller coordinate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Edge {
    pub a: GridCoord,
    pub b: GridCoord,
    pub orientation: Orientation,
    pub id: u32,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct GridGraph {
    n: u32,
}

impl GridGraph {
    pub fn new(n: u32) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidSize(0));
        }
        // Vertex indices are u32 throughout.
        if u64::from(n) * u64::from(n) > u64::from(u32::MAX) / 2 {
            return Err(Error::InvalidSize(i64::from(n)));
        }
        Ok(GridGraph { n })
    }

    /// Accepts signed sizes so that callers parsing user input get the
    /// invalid-size error instead of a wrap-around.
    pub fn from_signed(n: i64) -> Result<Self> {
        if n <= 0 || n > i64::from(u32::MAX) {
            return Err(Error::InvalidSize(n));
        }
        Self::new(n as u32)
    }

    #[inline]
    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn vertex_count(&self) -> usize {
        (self.n as usize) * (self.n as usize)
    }

    pub fn edge_count(&self) -> usize {
        2 * (self.n as usize) * (self.n as usize - 1)
    }

    /// Number of chords of any spanning tree: `(n - 1)^2`.
    pub fn chord_count(&self) -> usize {
        let k = self.n as usize - 1;
        k * k
    }

    pub fn contains(&self, c: GridCoord) -> bool {
        (1..=self.n).contains(&c.x) && (1..=self.n).contains(&c.y)
    }

    pub fn check(&self, c: GridCoord) -> Result<()> {
        if self.contains(c) {
            Ok(())
        } else {
            Err(Error::OutOfRange {
                x: c.x,
                y: c.y,
                n: self.n,
            })
        }
    }

    #[inline]
    pub fn index(&self, c: GridCoord) -> usize {
        debug_assert!(self.contains(c));
        (c.y as usize - 1) * self.n as usize + (c.x as usize - 1)
    }

    #[inline]
    pub fn coord(&self, index: usize) -> GridCoord {
        let n = self.n as usize;
        GridCoord::new((index % n) as u32 + 1, (index / n) as u32 + 1)
    }

    pub fn vertices(&self) -> impl Iterator<Item = GridCoord> + '_ {
        (0..self.vertex_count()).map(move |i| self.coord(i))
    }

    /// Peripheral vertices are those of degree less than four.
    pub fn is_peripheral(&self, v: GridCoord) -> Result<bool> {
        self.check(v)?;
        Ok(self.on_boundary(v))
    }

    #[inline]
    pub(crate) fn on_boundary(&self, v: GridCoord) -> bool {
        v.x == 1 || v.y == 1 || v.x == self.n || v.y == self.n
    }

    pub fn degree(&self, v: GridCoord) -> Result<u32> {
        self.check(v)?;
        let n = self.n;
        let axis = |c: u32| u32::from(c > 1) + u32::from(c < n);
        Ok(axis(v.x) + axis(v.y))
    }

    pub fn neighbors(&self, v: GridCoord) -> impl Iterator<Item = GridCoord> {
        let n = self.n;
        let mut out = [None; 4];
        if v.x > 1 {
            out[0] = Some(GridCoord::new(v.x - 1, v.y));
        }
        if v.x < n {
            out[1] = Some(GridCoord::new(v.x + 1, v.y));
        }
        if v.y > 1 {
            out[2] = Some(GridCoord::new(v.x, v.y - 1));
        }
        if v.y < n {
            out[3] = Some(GridCoord::new(v.x, v.y + 1));
        }
        out.into_iter().flatten()
    }

    /// Id of the edge joining `a` and `b`, if they are adjacent grid vertices.
    pub fn edge_id(&self, a: GridCoord, b: GridCoord) -> Option<u32> {
        if !self.contains(a) || !self.contains(b) {
            return None;
        }
        let n = self.n;
        let (lo, hi) = if a <= b { (a, b) } else { (b, a) };
        if lo.y == hi.y && hi.x == lo.x + 1 {
            Some((lo.y - 1) * (n - 1) + (lo.x - 1))
        } else if lo.x == hi.x && hi.y == lo.y + 1 {
            Some(n * (n - 1) + (lo.y - 1) * n + (lo.x - 1))
        } else {
            None
        }
    }

    pub fn edge(&self, id: u32) -> Result<Edge> {
        let n = self.n;
        let horizontal = n * (n - 1);
        if id < horizontal {
            let y = id / (n - 1) + 1;
            let x = id % (n - 1) + 1;
            Ok(Edge {
                a: GridCoord::new(x, y),
                b: GridCoord::new(x + 1, y),
                orientation: Orientation::Horizontal,
                id,
            })
        } else if id < 2 * horizontal {
            let r = id - horizontal;
            let y = r / n + 1;
            let x = r % n + 1;
            Ok(Edge {
                a: GridCoord::new(x, y),
                b: GridCoord::new(x, y + 1),
                orientation: Orientation::Vertical,
                id,
            })
        } else {
            Err(Error::UnknownEdge { id, n })
        }
    }

    pub fn edges(&self) -> impl Iterator<Item = Edge> + '_ {
        (0..self.edge_count() as u32).map(move |id| self.edge(id).expect("id in range"))
    }

    /// Length of the boundary cycle `C_1`; 1 for the single-vertex grid.
    pub fn boundary_len(&self) -> u32 {
        if self.n == 1 {
            1
        } else {
            4 * (self.n - 1)
        }
    }

    /// Position of a peripheral vertex on the boundary cycle, counterclockwise
    /// from `(1, 1)`.
    pub fn boundary_index(&self, v: GridCoord) -> Option<u32> {
        if !self.contains(v) || !self.on_boundary(v) {
            return None;
        }
        let n = self.n;
        Some(if v.y == 1 {
            v.x - 1
        } else if v.x == n {
            (n - 1) + (v.y - 1)
        } else if v.y == n {
            2 * (n - 1) + (n - v.x)
        } else {
            3 * (n - 1) + (n - v.y)
        })
    }

    pub fn boundary_vertex(&self, index: u32) -> GridCoord {
        let n = self.n;
        if n == 1 {
            return GridCoord::new(1, 1);
        }
        let s = n - 1;
        let i = index % self.boundary_len();
        match i / s {
            0 => GridCoord::new(1 + i, 1),
            1 => GridCoord::new(n, 1 + (i - s)),
            2 => GridCoord::new(n - (i - 2 * s), n),
            _ => GridCoord::new(1, n - (i - 3 * s)),
        }
    }

    /// Shortest path length between two peripheral vertices using peripheral
    /// vertices only.
    pub fn peripheral_distance(&self, a: GridCoord, b: GridCoord) -> Option<u32> {
        let ia = self.boundary_index(a)?;
        let ib = self.boundary_index(b)?;
        let d = ia.abs_diff(ib);
        Some(d.min(self.boundary_len() - d))
    }

    pub fn full(&self) -> SubgridRef {
        SubgridRef {
            x_lo: 1,
            x_hi: self.n,
            y_lo: 1,
            y_hi: self.n,
        }
    }

    /// The 25 squares of side `n / 5`, numbered 1..=25 row-major from the
    /// bottom row, left to right. Tile 13 is the central one.
    pub fn tile_5x5(&self) -> Result<[SubgridRef; 25]> {
        if !self.n.is_multiple_of(5) {
            return Err(Error::Tiling(self.n));
        }
        let m = self.n / 5;
        Ok(core::array::from_fn(|k| {
            let (row, col) = (k as u32 / 5, k as u32 % 5);
            SubgridRef {
                x_lo: col * m + 1,
                x_hi: (col + 1) * m,
                y_lo: row * m + 1,
                y_hi: (row + 1) * m,
            }
        }))
    }

    /// The cycle `C_i` of vertices at distance `i - 1` from the boundary,
    /// counterclockwise from `(i, i)`.
    pub fn concentric_cycle(&self, i: u32) -> Result<Vec<GridCoord>> {
        let n = self.n;
        if i == 0 || i > n / 2 {
            return Err(Error::Layer { i, n });
        }
        let (lo, hi) = (i, n + 1 - i);
        let mut out = Vec::with_capacity(4 * (hi - lo) as usize);
        for x in lo..hi {
            out.push(GridCoord::new(x, lo));
        }
        for y in lo..hi {
            out.push(GridCoord::new(hi, y));
        }
        for x in (lo + 1..=hi).rev() {
            out.push(GridCoord::new(x, hi));
        }
        for y in (lo + 1..=hi).rev() {
            out.push(GridCoord::new(lo, y));
        }
        Ok(out)
    }
}

/// An axis-aligned subgrid with inclusive coordinate ranges.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SubgridRef {
    pub x_lo: u32,
    pub x_hi: u32,
    pub y_lo: u32,
    pub y_hi: u32,
}

impl SubgridRef {
    pub fn new(x_lo: u32, x_hi: u32, y_lo: u32, y_hi: u32) -> Self {
        SubgridRef {
            x_lo,
            x_hi,
            y_lo,
            y_hi,
        }
    }

    pub fn square(x_lo: u32, y_lo: u32, side: u32) -> Self {
        SubgridRef {
            x_lo,
            x_hi: x_lo + side - 1,
            y_lo,
            y_hi: y_lo + side - 1,
        }
    }

    pub fn validate(&self, g: &GridGraph) -> Result<()> {
        let n = g.n();
        if self.x_lo < 1 || self.y_lo < 1 || self.x_lo > self.x_hi || self.y_lo > self.y_hi {
            return Err(Error::Subgrid(alloc::format!(
                "empty or reversed ranges {self:?}"
            )));
        }
        if self.x_hi > n || self.y_hi > n {
            return Err(Error::Subgrid(alloc::format!(
                "{self:?} exceeds the {n}-grid"
            )));
        }
        Ok(())
    }

    pub fn width(&self) -> u32 {
        self.x_hi - self.x_lo + 1
    }

    pub fn height(&self) -> u32 {
        self.y_hi - self.y_lo + 1
    }

    pub fn side(&self) -> Option<u32> {
        (self.width() == self.height()).then_some(self.width())
    }

    pub fn contains(&self, c: GridCoord) -> bool {
        (self.x_lo..=self.x_hi).contains(&c.x) && (self.y_lo..=self.y_hi).contains(&c.y)
    }

    pub fn is_peripheral(&self, c: GridCoord) -> bool {
        self.contains(c)
            && (c.x == self.x_lo || c.x == self.x_hi || c.y == self.y_lo || c.y == self.y_hi)
    }

    /// Nearest point of the subgrid (coordinate-wise clamp). For points
    /// outside the subgrid the result is the unique closest peripheral vertex.
    pub fn clamp(&self, c: GridCoord) -> GridCoord {
        GridCoord::new(
            c.x.clamp(self.x_lo, self.x_hi),
            c.y.clamp(self.y_lo, self.y_hi),
        )
    }

    /// Maps a coordinate of the subgrid to the subgrid's own 1-based frame.
    pub fn to_local(&self, c: GridCoord) -> GridCoord {
        debug_assert!(self.contains(c));
        GridCoord::new(c.x - self.x_lo + 1, c.y - self.y_lo + 1)
    }

    pub fn to_global(&self, c: GridCoord) -> GridCoord {
        GridCoord::new(c.x + self.x_lo - 1, c.y + self.y_lo - 1)
    }

    pub fn vertices(&self) -> impl Iterator<Item = GridCoord> + '_ {
        (self.y_lo..=self.y_hi)
            .flat_map(move |y| (self.x_lo..=self.x_hi).map(move |x| GridCoord::new(x, y)))
    }
}
