//! Expanded grids: a host grid plus duplicates of peripheral vertices and
//! extra edges drawn outside the host.
//!
//! Vertices are numbered host-first (`0..n^2` in [`GridGraph::index`] order)
//! followed by the duplicates. Edges are tagged host-first (canonical edge
//! ids) followed by the extra edges in insertion order, so parallel extra
//! edges keep distinct identities.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use num_rational::Ratio;

use crate::bounds;
use crate::grid::{GridCoord, GridGraph, SubgridRef};
use crate::planarity;
use crate::rooted::Rooted;
use crate::tree::{CycleBox, SpanningTree};
use crate::{Error, Result};

/// A vertex of an expanded grid.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum XVertex {
    Host(GridCoord),
    /// Index into [`ExpandedGrid::duplicates`].
    Dup(u32),
}

impl core::fmt::Display for XVertex {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            XVertex::Host(c) => write!(f, "h{c}"),
            XVertex::Dup(i) => write!(f, "d{i}"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Duplicate {
    pub base: GridCoord,
    /// Position among the duplicates of the same base; informational only.
    pub slot: u32,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct XEdge {
    pub a: XVertex,
    pub b: XVertex,
    pub length: u32,
}

/// Either a host edge (by canonical id) or an extra edge (by position).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum EdgeRef {
    Host(u32),
    Extra(u32),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExpandedGrid {
    host: GridGraph,
    dups: Vec<Duplicate>,
    xedges: Vec<XEdge>,
}

impl ExpandedGrid {
    /// The host grid on its own.
    pub fn plain(host: GridGraph) -> Self {
        ExpandedGrid {
            host,
            dups: Vec::new(),
            xedges: Vec::new(),
        }
    }

    /// Builds and fully validates an expanded grid, including drawability.
    pub fn new(
        host: GridGraph,
        dups: Vec<Duplicate>,
        xedges: &[(XVertex, XVertex)],
    ) -> Result<Self> {
        let h = Self::assemble(host, dups, xedges)?;
        if !h.is_drawable() {
            return Err(Error::MalformedExpanded(String::from(
                "extra edges cannot be drawn outside the host grid without crossings",
            )));
        }
        Ok(h)
    }

    /// Same as [`ExpandedGrid::new`] with slots numbered per base in order.
    pub fn with_bases(
        host: GridGraph,
        bases: &[GridCoord],
        xedges: &[(XVertex, XVertex)],
    ) -> Result<Self> {
        let dups = bases
            .iter()
            .enumerate()
            .map(|(i, &base)| Duplicate {
                base,
                slot: bases[..i].iter().filter(|&&b| b == base).count() as u32,
            })
            .collect();
        Self::new(host, dups, xedges)
    }

    /// Structural checks and edge lengths, without the drawability test.
    fn assemble(
        host: GridGraph,
        dups: Vec<Duplicate>,
        xedges: &[(XVertex, XVertex)],
    ) -> Result<Self> {
        for (i, d) in dups.iter().enumerate() {
            if !host.contains(d.base) || !host.on_boundary(d.base) {
                return Err(Error::MalformedExpanded(format!(
                    "duplicate {i} has non-peripheral base {}",
                    d.base
                )));
            }
        }
        let mut h = ExpandedGrid {
            host,
            dups,
            xedges: Vec::with_capacity(xedges.len()),
        };
        for &(a, b) in xedges {
            if a == b {
                return Err(Error::MalformedExpanded(format!("loop at {a}")));
            }
            let length = h.xedge_length(a, b)?;
            h.xedges.push(XEdge { a, b, length });
        }
        Ok(h)
    }

    /// Re-runs every check, drawability included.
    pub fn validate(&self) -> Result<()> {
        let pairs: Vec<_> = self.xedges.iter().map(|e| (e.a, e.b)).collect();
        let fresh = Self::new(self.host, self.dups.clone(), &pairs)?;
        if fresh.xedges != self.xedges {
            return Err(Error::MalformedExpanded(String::from("stale edge lengths")));
        }
        Ok(())
    }

    pub fn host(&self) -> GridGraph {
        self.host
    }

    pub fn duplicates(&self) -> &[Duplicate] {
        &self.dups
    }

    pub fn xedges(&self) -> &[XEdge] {
        &self.xedges
    }

    pub fn is_plain(&self) -> bool {
        self.dups.is_empty() && self.xedges.is_empty()
    }

    pub fn vertex_count(&self) -> usize {
        self.host.vertex_count() + self.dups.len()
    }

    pub fn edge_count(&self) -> usize {
        self.host.edge_count() + self.xedges.len()
    }

    pub fn index(&self, v: XVertex) -> Result<u32> {
        match v {
            XVertex::Host(c) => {
                self.host.check(c)?;
                Ok(self.host.index(c) as u32)
            }
            XVertex::Dup(i) if (i as usize) < self.dups.len() => {
                Ok(self.host.vertex_count() as u32 + i)
            }
            XVertex::Dup(i) => Err(Error::MalformedExpanded(format!("no duplicate {i}"))),
        }
    }

    pub fn vertex(&self, index: u32) -> XVertex {
        let hv = self.host.vertex_count() as u32;
        if index < hv {
            XVertex::Host(self.host.coord(index as usize))
        } else {
            XVertex::Dup(index - hv)
        }
    }

    /// The host coordinate of `v`, or its base for a duplicate.
    pub fn base(&self, v: XVertex) -> Result<GridCoord> {
        match v {
            XVertex::Host(c) => self.host.check(c).map(|_| c),
            XVertex::Dup(i) => self
                .dups
                .get(i as usize)
                .map(|d| d.base)
                .ok_or_else(|| Error::MalformedExpanded(format!("no duplicate {i}"))),
        }
    }

    fn base_unchecked(&self, index: u32) -> GridCoord {
        let hv = self.host.vertex_count();
        if (index as usize) < hv {
            self.host.coord(index as usize)
        } else {
            self.dups[index as usize - hv].base
        }
    }

    /// Length of an extra edge between `a` and `b`: the length of a shortest
    /// path along the boundary between their bases.
    pub fn xedge_length(&self, a: XVertex, b: XVertex) -> Result<u32> {
        let (ca, cb) = (self.attachment(a)?, self.attachment(b)?);
        Ok(self
            .host
            .peripheral_distance(ca, cb)
            .expect("peripheral endpoints"))
    }

    fn attachment(&self, v: XVertex) -> Result<GridCoord> {
        let c = self.base(v)?;
        if let XVertex::Host(_) = v {
            if !self.host.on_boundary(c) {
                return Err(Error::MalformedExpanded(format!(
                    "extra edge endpoint {c} is not peripheral"
                )));
            }
        }
        Ok(c)
    }

    pub fn tag(&self, e: EdgeRef) -> u32 {
        match e {
            EdgeRef::Host(id) => id,
            EdgeRef::Extra(k) => self.host.edge_count() as u32 + k,
        }
    }

    pub fn edge_ref(&self, tag: u32) -> EdgeRef {
        let he = self.host.edge_count() as u32;
        if tag < he {
            EdgeRef::Host(tag)
        } else {
            EdgeRef::Extra(tag - he)
        }
    }

    pub fn endpoints(&self, e: EdgeRef) -> Result<(XVertex, XVertex)> {
        match e {
            EdgeRef::Host(id) => {
                let edge = self.host.edge(id)?;
                Ok((XVertex::Host(edge.a), XVertex::Host(edge.b)))
            }
            EdgeRef::Extra(k) => {
                self.xedges
                    .get(k as usize)
                    .map(|x| (x.a, x.b))
                    .ok_or(Error::UnknownEdge {
                        id: k,
                        n: self.host.n(),
                    })
            }
        }
    }

    pub fn edge_length(&self, e: EdgeRef) -> Result<u32> {
        match e {
            EdgeRef::Host(id) => self.host.edge(id).map(|_| 1),
            EdgeRef::Extra(k) => {
                self.xedges
                    .get(k as usize)
                    .map(|x| x.length)
                    .ok_or(Error::UnknownEdge {
                        id: k,
                        n: self.host.n(),
                    })
            }
        }
    }

    /// Whether the extra edges and duplicates fit in the outer face of the
    /// host. Duplicates can be slid anywhere in that face, so this reduces to
    /// planarity of the boundary cycle with a hub inside, the duplicates and
    /// the extra edges.
    pub fn is_drawable(&self) -> bool {
        if self.xedges.is_empty() {
            return true;
        }
        let len = self.host.boundary_len();
        let d = self.dups.len() as u32;
        let hub = len + d;
        let node = |v: XVertex| match v {
            XVertex::Host(c) => self.host.boundary_index(c).expect("peripheral"),
            XVertex::Dup(i) => len + i,
        };
        let mut edges = Vec::with_capacity(2 * len as usize + self.xedges.len());
        if len > 1 {
            for i in 0..len {
                edges.push((i, (i + 1) % len));
            }
        }
        for i in 0..len {
            edges.push((hub, i));
        }
        for e in &self.xedges {
            edges.push((node(e.a), node(e.b)));
        }
        planarity::is_planar(hub as usize + 1, &edges)
    }

    /// Perimeter of the bounding box of the bases of the given vertices.
    pub fn xperimeter(&self, cycle: &[XVertex]) -> Result<u32> {
        if cycle.is_empty() {
            return Err(Error::EmptyCycle);
        }
        let mut b = CycleBox::EMPTY;
        for &v in cycle {
            b = b.include(self.base(v)?);
        }
        Ok(b.perimeter())
    }

    /// Sum of the edge lengths of a closed walk.
    pub fn walk_length(&self, walk: &ClosedWalk) -> Result<u64> {
        walk.edges
            .iter()
            .map(|&e| self.edge_length(e).map(u64::from))
            .sum()
    }

    /// The concentric cycle `C_i` as a closed walk of host edges.
    pub fn concentric_walk(&self, i: u32) -> Result<ClosedWalk> {
        let cycle = self.host.concentric_cycle(i)?;
        let edges = cycle
            .iter()
            .zip(cycle.iter().cycle().skip(1))
            .map(|(&a, &b)| EdgeRef::Host(self.host.edge_id(a, b).expect("adjacent")))
            .collect();
        Ok(ClosedWalk {
            vertices: cycle.into_iter().map(XVertex::Host).collect(),
            edges,
        })
    }
}

/// A closed walk `v_0 e_0 v_1 ... v_{k-1} e_{k-1} v_0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClosedWalk {
    pub vertices: Vec<XVertex>,
    /// `edges[j]` joins `vertices[j]` and `vertices[(j + 1) % k]`.
    pub edges: Vec<EdgeRef>,
}

impl ClosedWalk {
    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    /// Checks that consecutive vertices are joined by the recorded edges.
    pub fn check(&self, h: &ExpandedGrid) -> Result<()> {
        if self.vertices.len() != self.edges.len() {
            return Err(Error::Input(String::from(
                "walk has mismatched vertex and edge counts",
            )));
        }
        let k = self.vertices.len();
        for j in 0..k {
            let (a, b) = h.endpoints(self.edges[j])?;
            let (u, v) = (self.vertices[j], self.vertices[(j + 1) % k]);
            if !((a == u && b == v) || (a == v && b == u)) {
                return Err(Error::Input(format!("step {j} does not join {u} and {v}")));
            }
        }
        Ok(())
    }
}

/// A spanning tree of an expanded grid.
#[derive(Debug, Clone)]
pub struct XSpanningTree {
    grid: ExpandedGrid,
    root: XVertex,
    in_tree: Vec<bool>,
    rooted: Rooted,
    /// Sum of edge lengths from the root.
    wdepth: Vec<u64>,
}

impl XSpanningTree {
    pub fn new(grid: ExpandedGrid, edges: &[EdgeRef], root: XVertex) -> Result<Self> {
        let nv = grid.vertex_count();
        let root_index = grid.index(root)?;
        let mut in_tree = vec![false; grid.edge_count()];
        let mut triples = Vec::with_capacity(edges.len());
        for &e in edges {
            let (a, b) = grid.endpoints(e)?;
            let tag = grid.tag(e);
            if in_tree[tag as usize] {
                return Err(Error::Input(format!("edge {e:?} listed twice")));
            }
            in_tree[tag as usize] = true;
            triples.push((grid.index(a)?, grid.index(b)?, tag));
        }
        if edges.len() + 1 != nv {
            return Err(Error::NotSpanningTree(crate::TreeDefect::Cardinality {
                expected: nv - 1,
                got: edges.len(),
            }));
        }
        let coords = (0..nv as u32).map(|v| grid.base_unchecked(v)).collect();
        let rooted = Rooted::build(coords, &triples, root_index).map_err(Error::NotSpanningTree)?;
        let mut order: Vec<u32> = (0..nv as u32).collect();
        order.sort_by_key(|&v| rooted.depth(v));
        let mut wdepth = vec![0u64; nv];
        for v in order {
            if let (Some(p), Some(tag)) = (rooted.parent(v), rooted.parent_tag(v)) {
                let len = grid.edge_length(grid.edge_ref(tag)).expect("tree edge");
                wdepth[v as usize] = wdepth[p as usize] + u64::from(len);
            }
        }
        Ok(XSpanningTree {
            grid,
            root,
            in_tree,
            rooted,
            wdepth,
        })
    }

    /// The same tree viewed in the plain expanded grid of its host.
    pub fn from_plain(t: &SpanningTree) -> Self {
        let grid = ExpandedGrid::plain(t.grid());
        let edges: Vec<_> = t.edge_ids().map(EdgeRef::Host).collect();
        Self::new(grid, &edges, XVertex::Host(t.root())).expect("a spanning tree of the host")
    }

    pub fn grid(&self) -> &ExpandedGrid {
        &self.grid
    }

    pub fn root(&self) -> XVertex {
        self.root
    }

    pub fn contains(&self, e: EdgeRef) -> bool {
        self.in_tree
            .get(self.grid.tag(e) as usize)
            .copied()
            .unwrap_or(false)
    }

    pub fn edges(&self) -> impl Iterator<Item = EdgeRef> + '_ {
        (0..self.in_tree.len() as u32)
            .filter(|&t| self.in_tree[t as usize])
            .map(|t| self.grid.edge_ref(t))
    }

    pub fn edge_count(&self) -> usize {
        self.in_tree.iter().filter(|&&b| b).count()
    }

    /// Host edges not in the tree.
    pub fn host_chords(&self) -> impl Iterator<Item = u32> + '_ {
        (0..self.grid.host.edge_count() as u32).filter(|&id| !self.in_tree[id as usize])
    }

    pub fn depth(&self, v: XVertex) -> Result<u32> {
        Ok(self.rooted.depth(self.grid.index(v)?))
    }

    pub fn parent(&self, v: XVertex) -> Result<Option<XVertex>> {
        Ok(self
            .rooted
            .parent(self.grid.index(v)?)
            .map(|p| self.grid.vertex(p)))
    }

    /// Tree path from `u` to `v` as a vertex list and the edges between them.
    pub fn path(&self, u: XVertex, v: XVertex) -> Result<(Vec<XVertex>, Vec<EdgeRef>)> {
        let (iu, iv) = (self.grid.index(u)?, self.grid.index(v)?);
        let idx = self.rooted.path(iu, iv);
        let edges = idx
            .windows(2)
            .map(|w| {
                self.grid
                    .edge_ref(self.rooted.edge_tag(w[0], w[1]).expect("tree path"))
            })
            .collect();
        Ok((
            idx.into_iter().map(|i| self.grid.vertex(i)).collect(),
            edges,
        ))
    }

    /// Sum of edge lengths along the tree path.
    pub fn path_length(&self, u: XVertex, v: XVertex) -> Result<u64> {
        let (iu, iv) = (self.grid.index(u)?, self.grid.index(v)?);
        let l = self.rooted.lca(iu, iv);
        Ok(self.wdepth[iu as usize] + self.wdepth[iv as usize] - 2 * self.wdepth[l as usize])
    }

    /// Bounding box of the bases on the tree path.
    pub fn path_box(&self, u: XVertex, v: XVertex) -> Result<CycleBox> {
        Ok(self
            .rooted
            .path_box(self.grid.index(u)?, self.grid.index(v)?))
    }

    fn chord_endpoints(&self, e: EdgeRef) -> Result<(XVertex, XVertex)> {
        let ends = self.grid.endpoints(e)?;
        if self.contains(e) {
            return Err(Error::NotAChord(self.grid.tag(e)));
        }
        Ok(ends)
    }

    /// Fundamental cycle of a chord, starting at the chord's first endpoint.
    pub fn fundamental_cycle(&self, e: EdgeRef) -> Result<ClosedWalk> {
        let (a, b) = self.chord_endpoints(e)?;
        let (mut vertices, mut edges) = self.path(b, a)?;
        vertices.pop();
        vertices.insert(0, a);
        edges.insert(0, e);
        Ok(ClosedWalk { vertices, edges })
    }

    /// Length (sum of edge lengths) of a chord's fundamental cycle.
    pub fn cycle_length(&self, e: EdgeRef) -> Result<u64> {
        let (a, b) = self.chord_endpoints(e)?;
        Ok(self.path_length(a, b)? + u64::from(self.grid.edge_length(e)?))
    }

    pub fn cycle_perimeter(&self, e: EdgeRef) -> Result<u32> {
        let (a, b) = self.chord_endpoints(e)?;
        Ok(self.path_box(a, b)?.perimeter())
    }
}

/// Sum of the perimeters of the fundamental cycles of the host chords.
pub fn lstar(t: &XSpanningTree) -> u64 {
    t.host_chords()
        .map(|id| u64::from(t.cycle_perimeter(EdgeRef::Host(id)).expect("host chord")))
        .sum()
}

/// The expanded grid `H[G'/T]` together with its spanning tree: the minimal
/// subtree covering `sub`, with degree-two vertices outside `sub` suppressed
/// and the remaining outside vertices turned into duplicates of the nearest
/// peripheral vertex of `sub`.
pub fn contract(t: &XSpanningTree, sub: SubgridRef) -> Result<XSpanningTree> {
    let h = &t.grid;
    let host = h.host;
    sub.validate(&host)?;
    let side = sub
        .side()
        .ok_or_else(|| Error::Subgrid(format!("{sub:?} is not square")))?;
    if sub == host.full() {
        return Ok(t.clone());
    }
    let nv = h.vertex_count();
    let hv = host.vertex_count();
    let host_edges = host.edge_count() as u32;

    let mut start = vec![0u32; nv + 1];
    for v in 0..nv as u32 {
        if let Some(p) = t.rooted.parent(v) {
            start[v as usize + 1] += 1;
            start[p as usize + 1] += 1;
        }
    }
    for i in 0..nv {
        start[i + 1] += start[i];
    }
    let mut fill = start.clone();
    let mut adj = vec![(0u32, 0u32); 2 * (nv - 1)];
    for v in 0..nv as u32 {
        if let (Some(p), Some(tag)) = (t.rooted.parent(v), t.rooted.parent_tag(v)) {
            adj[fill[v as usize] as usize] = (p, tag);
            fill[v as usize] += 1;
            adj[fill[p as usize] as usize] = (v, tag);
            fill[p as usize] += 1;
        }
    }
    let nbrs = |v: u32| &adj[start[v as usize] as usize..start[v as usize + 1] as usize];

    let required: Vec<bool> = (0..nv)
        .map(|v| v < hv && sub.contains(host.coord(v)))
        .collect();
    let mut deg: Vec<u32> = (0..nv as u32).map(|v| nbrs(v).len() as u32).collect();
    let mut alive = vec![true; nv];
    let mut queue: Vec<u32> = (0..nv as u32)
        .filter(|&v| !required[v as usize] && deg[v as usize] <= 1)
        .collect();
    while let Some(v) = queue.pop() {
        if !alive[v as usize] {
            continue;
        }
        alive[v as usize] = false;
        for &(w, _) in nbrs(v) {
            if alive[w as usize] {
                deg[w as usize] -= 1;
                if !required[w as usize] && deg[w as usize] <= 1 {
                    queue.push(w);
                }
            }
        }
    }
    let kept: Vec<bool> = (0..nv)
        .map(|v| alive[v] && (required[v] || deg[v] >= 3))
        .collect();

    let local_host = GridGraph::new(side)?;
    let mut new_vertex = vec![None; nv];
    let mut dups: Vec<Duplicate> = Vec::new();
    for v in 0..nv {
        if !kept[v] {
            continue;
        }
        let c = h.base_unchecked(v as u32);
        new_vertex[v] = Some(if required[v] {
            XVertex::Host(sub.to_local(c))
        } else {
            let base = sub.to_local(sub.clamp(c));
            let slot = dups.iter().filter(|d| d.base == base).count() as u32;
            dups.push(Duplicate { base, slot });
            XVertex::Dup(dups.len() as u32 - 1)
        });
    }

    let mut tree_edges = Vec::new();
    let mut extra_pairs = Vec::new();
    for u in 0..nv as u32 {
        if !kept[u as usize] {
            continue;
        }
        for &(w, first) in nbrs(u) {
            if !alive[w as usize] {
                continue;
            }
            let (mut cur, mut last, mut steps) = (w, first, 1u32);
            while !kept[cur as usize] {
                let &(x, tag) = nbrs(cur)
                    .iter()
                    .find(|&&(x, tag)| alive[x as usize] && tag != last)
                    .expect("suppressed vertices have degree two");
                cur = x;
                last = tag;
                steps += 1;
            }
            if (u, first) >= (cur, last) {
                continue;
            }
            let (a, b) = (
                new_vertex[u as usize].unwrap(),
                new_vertex[cur as usize].unwrap(),
            );
            match (a, b) {
                (XVertex::Host(la), XVertex::Host(lb)) if steps == 1 && first < host_edges => {
                    let id = local_host
                        .edge_id(la, lb)
                        .expect("host edge inside the subgrid");
                    tree_edges.push(EdgeRef::Host(id));
                }
                _ => {
                    tree_edges.push(EdgeRef::Extra(extra_pairs.len() as u32));
                    extra_pairs.push((a, b));
                }
            }
        }
    }
    let grid = ExpandedGrid::assemble(local_host, dups, &extra_pairs)?;
    let root_base = h.base_unchecked(h.index(t.root)?);
    let root = XVertex::Host(sub.to_local(sub.clamp(root_base)));
    XSpanningTree::new(grid, &tree_edges, root)
}

/// The closed walk obtained from `C_i` by replacing every chord with its tree path.
pub fn reroute_walk(t: &XSpanningTree, i: u32) -> Result<ClosedWalk> {
    let cycle = t.grid.host.concentric_cycle(i)?;
    reroute_cycle(t, &cycle)
}

/// Reroutes an arbitrary host cycle given by its vertices in order.
pub fn reroute_cycle(t: &XSpanningTree, cycle: &[GridCoord]) -> Result<ClosedWalk> {
    let host = t.grid.host;
    if cycle.len() < 3 {
        return Err(Error::Input(String::from(
            "a host cycle needs at least four vertices",
        )));
    }
    let mut vertices = Vec::new();
    let mut edges = Vec::new();
    for (k, &a) in cycle.iter().enumerate() {
        let b = cycle[(k + 1) % cycle.len()];
        let id = host
            .edge_id(a, b)
            .ok_or_else(|| Error::Input(format!("{a} and {b} are not adjacent")))?;
        if t.contains(EdgeRef::Host(id)) {
            vertices.push(XVertex::Host(a));
            edges.push(EdgeRef::Host(id));
        } else {
            let (vs, es) = t.path(XVertex::Host(a), XVertex::Host(b))?;
            vertices.extend(&vs[..vs.len() - 1]);
            edges.extend(es);
        }
    }
    Ok(ClosedWalk { vertices, edges })
}

type Point = (f64, f64);

fn point(c: GridCoord) -> Point {
    (f64::from(c.x), f64::from(c.y))
}

/// Projection of a peripheral vertex onto the ring a quarter unit outside
/// the host.
fn ring_point(host: GridGraph, c: GridCoord) -> Point {
    let n = host.n();
    let (mut x, mut y) = point(c);
    if c.x == 1 {
        x -= 0.25;
    }
    if c.x == n {
        x += 0.25;
    }
    if c.y == 1 {
        y -= 0.25;
    }
    if c.y == n {
        y += 0.25;
    }
    if n == 1 {
        (x - 0.25, y - 0.25)
    } else {
        (x, y)
    }
}

/// Polyline of an extra edge: out to the ring, along the shorter side of
/// the ring (counterclockwise on ties), and back in.
fn extra_route(h: &ExpandedGrid, e: &XEdge) -> Vec<Point> {
    let host = h.host;
    let (ba, bb) = (h.base(e.a).expect("valid"), h.base(e.b).expect("valid"));
    let len = host.boundary_len();
    let (ia, ib) = (
        host.boundary_index(ba).unwrap(),
        host.boundary_index(bb).unwrap(),
    );
    let fwd = (ib + len - ia) % len;
    let mut out = vec![point(ba)];
    if fwd <= len - fwd {
        for s in 0..=fwd {
            out.push(ring_point(host, host.boundary_vertex(ia + s)));
        }
    } else {
        for s in 0..=len - fwd {
            out.push(ring_point(host, host.boundary_vertex(ia + len - s)));
        }
    }
    out.push(point(bb));
    out
}

/// Winding number of the drawn walk around `z0`. Host edges are unit
/// segments, duplicates sit on their bases and extra edges follow the ring
/// a quarter unit outside the host.
pub fn winding_number(h: &ExpandedGrid, walk: &ClosedWalk, z0: Point) -> Result<i64> {
    walk.check(h)?;
    let k = walk.vertices.len();
    let mut poly: Vec<Point> = Vec::new();
    for j in 0..k {
        let u = walk.vertices[j];
        match walk.edges[j] {
            EdgeRef::Host(_) => poly.push(point(h.base(u)?)),
            EdgeRef::Extra(x) => {
                let e = &h.xedges[x as usize];
                let mut route = extra_route(h, e);
                if e.a != u {
                    route.reverse();
                }
                route.pop();
                poly.extend(route);
            }
        }
    }
    let mut wn = 0i64;
    for j in 0..poly.len() {
        let (p, q) = (poly[j], poly[(j + 1) % poly.len()]);
        let cross = (q.0 - p.0) * (z0.1 - p.1) - (z0.0 - p.0) * (q.1 - p.1);
        let within = z0.0 >= p.0.min(q.0)
            && z0.0 <= p.0.max(q.0)
            && z0.1 >= p.1.min(q.1)
            && z0.1 <= p.1.max(q.1);
        if cross == 0.0 && within {
            return Err(Error::DegeneratePoint);
        }
        if p.1 <= z0.1 {
            if q.1 > z0.1 && cross > 0.0 {
                wn += 1;
            }
        } else if q.1 <= z0.1 && cross < 0.0 {
            wn -= 1;
        }
    }
    Ok(wn)
}

/// Position of a host vertex relative to the central tile of the 5x5 tiling.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum VertexZone {
    /// The central tile.
    V0,
    /// The eight tiles around the centre.
    V1,
    /// The outer ring of sixteen tiles.
    V2,
}

pub fn vertex_zone(g: GridGraph, v: GridCoord) -> Result<VertexZone> {
    g.tile_5x5()?;
    g.check(v)?;
    let m = g.n() / 5;
    let (tx, ty) = ((v.x - 1) / m, (v.y - 1) / m);
    Ok(if tx == 2 && ty == 2 {
        VertexZone::V0
    } else if (1..=3).contains(&tx) && (1..=3).contains(&ty) {
        VertexZone::V1
    } else {
        VertexZone::V2
    })
}

/// A chord of `C_i` whose tree path reaches the central band.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LongEdge {
    pub i: u32,
    pub edge_id: u32,
    pub perimeter: u32,
    /// Index (0-based) of the tile containing both endpoints, if any.
    pub tile: Option<usize>,
}

/// Finds a chord `e` of `C_i` whose tree path is long: `e` lies in the
/// outer `n/5` rows (columns) and its path reaches a row (column) through
/// the central tile. An extra edge whose ends lie on opposite sides of the
/// band counts as reaching it.
pub fn find_long_edge(t: &XSpanningTree, i: u32) -> Result<LongEdge> {
    let host = t.grid.host;
    let n = host.n();
    let tiles = host.tile_5x5()?;
    let m = n / 5;
    if i == 0 || i > m {
        return Err(Error::Layer { i, n });
    }
    let (lo, hi) = (2 * m + 1, 3 * m);
    let cycle = host.concentric_cycle(i)?;
    for (k, &a) in cycle.iter().enumerate() {
        let b = cycle[(k + 1) % cycle.len()];
        let id = host.edge_id(a, b).expect("cycle edge");
        if t.contains(EdgeRef::Host(id)) {
            continue;
        }
        let strip = |p: u32, q: u32| (p <= m && q <= m) || (p > n - m && q > n - m);
        let bx = t.path_box(XVertex::Host(a), XVertex::Host(b))?;
        let rows = strip(a.y, b.y) && bx.y_min <= hi && bx.y_max >= lo;
        let cols = strip(a.x, b.x) && bx.x_min <= hi && bx.x_max >= lo;
        if rows || cols {
            let tile = tiles.iter().position(|s| s.contains(a) && s.contains(b));
            return Ok(LongEdge {
                i,
                edge_id: id,
                perimeter: bx.perimeter(),
                tile,
            });
        }
    }
    Err(Error::Counterexample(format!(
        "no long chord on C_{i} of the {n}-grid"
    )))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BoundForm {
    /// `(2/25) n^2 log5 n` for `n` a power of five.
    Lemma,
    /// `(2/625) n^2 floor(log5 n)` for any `n`.
    Theorem,
}

/// What a long chord adds on top of the per-tile sums.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct WitnessContribution {
    pub witness: LongEdge,
    /// Perimeter inside the contraction to its tile, if the chord lies in one.
    pub contracted_perimeter: Option<u32>,
    /// The full perimeter for a chord between tiles, the shrinkage otherwise.
    pub contribution: u32,
    /// `2 n / 5`.
    pub target: u32,
}

impl WitnessContribution {
    pub fn shortfall(&self) -> u32 {
        self.target.saturating_sub(self.contribution)
    }
}

/// One level of the recursive accounting.
#[derive(Debug, Clone, PartialEq)]
pub struct Decomposition {
    pub tile_lstar: Vec<u64>,
    pub tile_bound: Ratio<u64>,
    pub witnesses: Vec<WitnessContribution>,
    /// `sum(tile_lstar) + sum(contribution)`, never more than `L*`.
    pub accounted: u64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct LowerReport {
    pub n: u32,
    pub form: BoundForm,
    pub lstar: u64,
    pub bound: Ratio<u64>,
    pub margin: f64,
    /// Theorem form on a non-power of five: side of the corner subgrid used
    /// and `L*` of the contraction onto it.
    pub reduced: Option<(u32, u64)>,
    pub decomposition: Option<Decomposition>,
}

/// Compares `L*(T, H)` against the lower bound. A power-of-five host uses
/// the stronger form and, from side 25 on, reports the tile decomposition.
pub fn lemma_lower_check(t: &XSpanningTree) -> Result<LowerReport> {
    let host = t.grid.host;
    let n = host.n();
    let n64 = u64::from(n);
    let value = lstar(t);
    let mut reduced = None;
    let (form, bound) = match bounds::lemma_bound(n64) {
        Some(b) => (BoundForm::Lemma, b),
        None => {
            let big = bounds::largest_power_of_5(n64) as u32;
            let sub = contract(t, SubgridRef::square(1, 1, big))?;
            let sub_value = lstar(&sub);
            let sub_bound = bounds::lemma_bound(u64::from(big)).expect("power of five");
            if !bounds::ge_ratio(sub_value, sub_bound) {
                return Err(Error::Counterexample(format!(
                    "L* = {sub_value} on the corner {big}-grid is below {sub_bound}"
                )));
            }
            reduced = Some((big, sub_value));
            (BoundForm::Theorem, bounds::theorem_bound(n64))
        }
    };
    if !bounds::ge_ratio(value, bound) {
        return Err(Error::Counterexample(format!(
            "L* = {value} is below {bound} for n = {n}"
        )));
    }
    let decomposition = if form == BoundForm::Lemma && n >= 25 {
        Some(decompose(t, value)?)
    } else {
        None
    };
    Ok(LowerReport {
        n,
        form,
        lstar: value,
        bound,
        margin: bounds::margin(value, bound),
        reduced,
        decomposition,
    })
}

fn decompose(t: &XSpanningTree, total: u64) -> Result<Decomposition> {
    let host = t.grid.host;
    let m = host.n() / 5;
    let tiles = host.tile_5x5()?;
    let tile_trees = tiles
        .iter()
        .map(|&s| contract(t, s))
        .collect::<Result<Vec<_>>>()?;
    let tile_lstar: Vec<u64> = tile_trees.iter().map(lstar).collect();
    let mut witnesses = Vec::new();
    for i in 1..=m {
        let w = find_long_edge(t, i)?;
        let (contracted_perimeter, contribution) = match w.tile {
            None => (None, w.perimeter),
            Some(k) => {
                let e = host.edge(w.edge_id)?;
                let s = tiles[k];
                let local = tile_trees[k]
                    .grid
                    .host
                    .edge_id(s.to_local(e.a), s.to_local(e.b))
                    .expect("edge inside its tile");
                let p = tile_trees[k].cycle_perimeter(EdgeRef::Host(local))?;
                (Some(p), w.perimeter - p)
            }
        };
        witnesses.push(WitnessContribution {
            witness: w,
            contracted_perimeter,
            contribution,
            target: 2 * m,
        });
    }
    let accounted = tile_lstar.iter().sum::<u64>()
        + witnesses
            .iter()
            .map(|w| u64::from(w.contribution))
            .sum::<u64>();
    if accounted > total {
        return Err(Error::Counterexample(format!(
            "tile sums plus witnesses give {accounted} > L* = {total}"
        )));
    }
    Ok(Decomposition {
        tile_lstar,
        tile_bound: bounds::lemma_bound(u64::from(m)).unwrap_or(Ratio::from_integer(0)),
        witnesses,
        accounted,
    })
}
