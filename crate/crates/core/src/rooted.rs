//! Rooted trees over `0..len` with skew-binary jump pointers.
//!
//! Every vertex stores its parent plus one jump pointer chosen so that any
//! ancestor is reachable in `O(log depth)` hops, and the bounding box of the
//! coordinates on the segment it skips. That gives logarithmic LCA, path
//! length and path bounding-box queries in linear memory.

use alloc::collections::VecDeque;
use alloc::vec;
use alloc::vec::Vec;

use crate::grid::GridCoord;
use crate::tree::CycleBox;
use crate::TreeDefect;

pub(crate) const NO_TAG: u32 = u32::MAX;

#[derive(Debug, Clone)]
pub(crate) struct Rooted {
    root: u32,
    parent: Vec<u32>,
    parent_tag: Vec<u32>,
    depth: Vec<u32>,
    jump: Vec<u32>,
    /// Box of the coordinates on `[v, jump[v])`.
    seg: Vec<CycleBox>,
    coords: Vec<GridCoord>,
}

impl Rooted {
    /// Builds the rooted tree from `(u, v, tag)` edges; tags identify the
    /// edges so that parallel edges are told apart.
    pub fn build(
        coords: Vec<GridCoord>,
        edges: &[(u32, u32, u32)],
        root: u32,
    ) -> Result<Self, TreeDefect> {
        let len = coords.len();
        let mut start = vec![0u32; len + 1];
        for &(u, v, _) in edges {
            start[u as usize + 1] += 1;
            start[v as usize + 1] += 1;
        }
        for i in 0..len {
            start[i + 1] += start[i];
        }
        let mut fill = start.clone();
        let mut adj = vec![(0u32, 0u32); 2 * edges.len()];
        for &(u, v, t) in edges {
            adj[fill[u as usize] as usize] = (v, t);
            fill[u as usize] += 1;
            adj[fill[v as usize] as usize] = (u, t);
            fill[v as usize] += 1;
        }

        let mut parent = vec![u32::MAX; len];
        let mut parent_tag = vec![NO_TAG; len];
        let mut depth = vec![0u32; len];
        let mut jump = vec![0u32; len];
        let mut seg = vec![CycleBox::EMPTY; len];
        let r = root as usize;
        parent[r] = root;
        jump[r] = root;
        seg[r] = CycleBox::point(coords[r]);
        let mut queue = VecDeque::with_capacity(len);
        queue.push_back(root);
        let mut seen = 1usize;
        while let Some(u) = queue.pop_front() {
            let ui = u as usize;
            let lo = start[ui] as usize;
            let hi = start[ui + 1] as usize;
            for &(w, t) in &adj[lo..hi] {
                if t == parent_tag[ui] && w == parent[ui] {
                    continue;
                }
                let wi = w as usize;
                if parent[wi] != u32::MAX {
                    return Err(TreeDefect::Cyclic);
                }
                parent[wi] = u;
                parent_tag[wi] = t;
                depth[wi] = depth[ui] + 1;
                let j = jump[ui] as usize;
                let jj = jump[j] as usize;
                if ui != r && depth[ui] - depth[j] == depth[j] - depth[jj] {
                    jump[wi] = jj as u32;
                    seg[wi] = CycleBox::point(coords[wi]).union(seg[ui]).union(seg[j]);
                } else {
                    jump[wi] = u;
                    seg[wi] = CycleBox::point(coords[wi]);
                }
                seen += 1;
                queue.push_back(w);
            }
        }
        if seen != len {
            return Err(TreeDefect::Disconnected);
        }
        Ok(Rooted {
            root,
            parent,
            parent_tag,
            depth,
            jump,
            seg,
            coords,
        })
    }

    #[inline]
    pub fn parent(&self, v: u32) -> Option<u32> {
        (v != self.root).then(|| self.parent[v as usize])
    }

    #[inline]
    pub fn parent_tag(&self, v: u32) -> Option<u32> {
        (v != self.root).then(|| self.parent_tag[v as usize])
    }

    #[inline]
    pub fn depth(&self, v: u32) -> u32 {
        self.depth[v as usize]
    }

    pub fn max_depth(&self) -> u32 {
        self.depth.iter().copied().max().unwrap_or(0)
    }

    #[inline]
    pub fn coord(&self, v: u32) -> GridCoord {
        self.coords[v as usize]
    }

    fn ancestor_at(&self, mut v: u32, d: u32) -> u32 {
        while self.depth[v as usize] > d {
            let j = self.jump[v as usize];
            v = if self.depth[j as usize] >= d {
                j
            } else {
                self.parent[v as usize]
            };
        }
        v
    }

    pub fn lca(&self, u: u32, v: u32) -> u32 {
        let (du, dv) = (self.depth(u), self.depth(v));
        let (mut u, mut v) = if du > dv {
            (self.ancestor_at(u, dv), v)
        } else {
            (u, self.ancestor_at(v, du))
        };
        while u != v {
            let (ju, jv) = (self.jump[u as usize], self.jump[v as usize]);
            if ju != jv {
                u = ju;
                v = jv;
            } else {
                u = self.parent[u as usize];
                v = self.parent[v as usize];
            }
        }
        u
    }

    /// Number of tree edges between `u` and `v`.
    pub fn distance(&self, u: u32, v: u32) -> u32 {
        let l = self.lca(u, v);
        self.depth(u) + self.depth(v) - 2 * self.depth(l)
    }

    /// Box of the coordinates on the path from `v` up to its ancestor `a`, inclusive.
    fn box_to_ancestor(&self, mut v: u32, a: u32) -> CycleBox {
        let da = self.depth(a);
        let mut acc = CycleBox::point(self.coord(a));
        while v != a {
            let j = self.jump[v as usize];
            if self.depth[j as usize] >= da {
                acc = acc.union(self.seg[v as usize]);
                v = j;
            } else {
                acc = acc.union(CycleBox::point(self.coord(v)));
                v = self.parent[v as usize];
            }
        }
        acc
    }

    pub fn path_box(&self, u: u32, v: u32) -> CycleBox {
        let l = self.lca(u, v);
        self.box_to_ancestor(u, l).union(self.box_to_ancestor(v, l))
    }

    /// Vertices of the tree path from `u` to `v`, both included.
    pub fn path(&self, u: u32, v: u32) -> Vec<u32> {
        let l = self.lca(u, v);
        let mut left = Vec::new();
        let mut x = u;
        while x != l {
            left.push(x);
            x = self.parent[x as usize];
        }
        left.push(l);
        let mut right = Vec::new();
        let mut y = v;
        while y != l {
            right.push(y);
            y = self.parent[y as usize];
        }
        left.extend(right.into_iter().rev());
        left
    }

    /// Tag of the tree edge joining adjacent vertices `u` and `v`.
    pub fn edge_tag(&self, u: u32, v: u32) -> Option<u32> {
        if u != self.root && self.parent[u as usize] == v {
            Some(self.parent_tag[u as usize])
        } else if v != self.root && self.parent[v as usize] == u {
            Some(self.parent_tag[v as usize])
        } else {
            None
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};

    fn line_coords(k: u32) -> Vec<GridCoord> {
        (0..k).map(|i| GridCoord::new(i + 1, 1)).collect()
    }

    #[test]
    fn detects_defects() {
        let c = line_coords(3);
        assert_eq!(
            Rooted::build(c.clone(), &[(0, 1, 0), (1, 2, 1), (2, 0, 2)], 0).unwrap_err(),
            TreeDefect::Cyclic
        );
        assert_eq!(
            Rooted::build(c.clone(), &[(0, 1, 0)], 0).unwrap_err(),
            TreeDefect::Disconnected
        );
        // Parallel edges form a cycle of length two.
        assert_eq!(
            Rooted::build(c, &[(0, 1, 0), (0, 1, 1), (1, 2, 2)], 0).unwrap_err(),
            TreeDefect::Cyclic
        );
    }

    #[test]
    fn random_trees_match_naive_queries() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for _ in 0..30 {
            let len: u32 = rng.gen_range(1..300);
            let coords: Vec<_> = (0..len)
                .map(|_| GridCoord::new(rng.gen_range(1..50), rng.gen_range(1..50)))
                .collect();
            let edges: Vec<_> = (1..len).map(|v| (rng.gen_range(0..v), v, v)).collect();
            let root = rng.gen_range(0..len);
            let t = Rooted::build(coords.clone(), &edges, root).unwrap();
            for _ in 0..200 {
                let u = rng.gen_range(0..len);
                let v = rng.gen_range(0..len);
                let path = t.path(u, v);
                assert_eq!(path.len() as u32 - 1, t.distance(u, v));
                for w in path.windows(2) {
                    assert!(t.edge_tag(w[0], w[1]).is_some());
                }
                let naive = path.iter().fold(CycleBox::EMPTY, |b, &x| {
                    b.union(CycleBox::point(coords[x as usize]))
                });
                assert_eq!(t.path_box(u, v), naive);
            }
        }
    }
}
