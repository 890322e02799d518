//! Planarity testing by face-by-face path embedding on biconnected blocks.

use alloc::collections::VecDeque;
use alloc::vec;
use alloc::vec::Vec;

/// Whether the graph on `0..n` with the given edges is planar. Loops and
/// parallel edges are ignored.
pub(crate) fn is_planar(n: usize, edges: &[(u32, u32)]) -> bool {
    let mut simple: Vec<(u32, u32)> = edges
        .iter()
        .filter(|(a, b)| a != b)
        .map(|&(a, b)| if a < b { (a, b) } else { (b, a) })
        .collect();
    simple.sort_unstable();
    simple.dedup();
    if n >= 3 && simple.len() > 3 * n - 6 {
        return false;
    }
    blocks(n, &simple).into_iter().all(|b| block_is_planar(&b))
}

/// Edge sets of the biconnected components.
fn blocks(n: usize, edges: &[(u32, u32)]) -> Vec<Vec<(u32, u32)>> {
    let adj = adjacency(n, edges);
    let mut disc = vec![u32::MAX; n];
    let mut low = vec![0u32; n];
    let mut time = 0u32;
    let mut stack: Vec<usize> = Vec::new();
    let mut out = Vec::new();
    for s in 0..n {
        if disc[s] != u32::MAX {
            continue;
        }
        disc[s] = time;
        low[s] = time;
        time += 1;
        // (vertex, edge used to enter it, next adjacency position)
        let mut dfs: Vec<(usize, usize, usize)> = vec![(s, usize::MAX, 0)];
        while let Some(&mut (v, via, ref mut pos)) = dfs.last_mut() {
            if *pos < adj[v].len() {
                let (w, e) = adj[v][*pos];
                *pos += 1;
                let w = w as usize;
                if e == via {
                    continue;
                }
                if disc[w] == u32::MAX {
                    stack.push(e);
                    disc[w] = time;
                    low[w] = time;
                    time += 1;
                    dfs.push((w, e, 0));
                } else if disc[w] < disc[v] {
                    stack.push(e);
                    low[v] = low[v].min(disc[w]);
                }
            } else {
                dfs.pop();
                if let Some(&(u, _, _)) = dfs.last() {
                    low[u] = low[u].min(low[v]);
                    if low[v] >= disc[u] {
                        let mut block = Vec::new();
                        while let Some(e) = stack.pop() {
                            block.push(edges[e]);
                            if e == via {
                                break;
                            }
                        }
                        out.push(block);
                    }
                }
            }
        }
    }
    out
}

fn adjacency(n: usize, edges: &[(u32, u32)]) -> Vec<Vec<(u32, usize)>> {
    let mut adj = vec![Vec::new(); n];
    for (i, &(a, b)) in edges.iter().enumerate() {
        adj[a as usize].push((b, i));
        adj[b as usize].push((a, i));
    }
    adj
}

fn block_is_planar(block: &[(u32, u32)]) -> bool {
    if block.len() < 9 {
        // Every graph with fewer than nine edges is planar.
        return true;
    }
    let mut ids: Vec<u32> = block.iter().flat_map(|&(a, b)| [a, b]).collect();
    ids.sort_unstable();
    ids.dedup();
    let local = |v: u32| ids.binary_search(&v).expect("block vertex") as u32;
    let edges: Vec<(u32, u32)> = block.iter().map(|&(a, b)| (local(a), local(b))).collect();
    let n = ids.len();
    if edges.len() > 3 * n - 6 {
        return false;
    }
    Embedder::new(n, edges).run()
}

struct Embedder {
    adj: Vec<Vec<(u32, usize)>>,
    edge_count: usize,
    v_done: Vec<bool>,
    e_done: Vec<bool>,
    faces: Vec<Vec<u32>>,
}

struct Fragment {
    attachments: Vec<u32>,
    /// Interior vertices; empty for a single edge between embedded vertices.
    interior: Vec<u32>,
    edge: usize,
}

impl Embedder {
    fn new(n: usize, edges: Vec<(u32, u32)>) -> Self {
        let adj = adjacency(n, &edges);
        Embedder {
            adj,
            edge_count: edges.len(),
            v_done: vec![false; n],
            e_done: vec![false; edges.len()],
            faces: Vec::new(),
        }
    }

    /// Closes a breadth-first tree with any non-tree edge.
    fn initial_cycle(&self) -> Vec<u32> {
        let n = self.adj.len();
        let mut parent = vec![u32::MAX; n];
        let mut via = vec![usize::MAX; n];
        let mut depth = vec![0u32; n];
        parent[0] = 0;
        let mut q = VecDeque::from([0u32]);
        while let Some(v) = q.pop_front() {
            for &(w, e) in &self.adj[v as usize] {
                if parent[w as usize] == u32::MAX {
                    parent[w as usize] = v;
                    via[w as usize] = e;
                    depth[w as usize] = depth[v as usize] + 1;
                    q.push_back(w);
                }
            }
        }
        for (v, list) in self.adj.iter().enumerate() {
            for &(w, e) in list {
                if via[v] == e || via[w as usize] == e {
                    continue;
                }
                let (mut a, mut b) = (v as u32, w);
                let mut left = vec![a];
                let mut right = vec![b];
                while a != b {
                    if depth[a as usize] >= depth[b as usize] {
                        a = parent[a as usize];
                        left.push(a);
                    } else {
                        b = parent[b as usize];
                        right.push(b);
                    }
                }
                right.pop();
                left.extend(right.into_iter().rev());
                return left;
            }
        }
        unreachable!("a biconnected block with nine or more edges has a cycle")
    }

    fn edge_between(&self, a: u32, b: u32) -> usize {
        self.adj[a as usize]
            .iter()
            .find(|&&(w, _)| w == b)
            .expect("adjacent")
            .1
    }

    fn mark_path(&mut self, path: &[u32]) {
        for &v in path {
            self.v_done[v as usize] = true;
        }
        for w in path.windows(2) {
            let e = self.edge_between(w[0], w[1]);
            self.e_done[e] = true;
        }
    }

    fn fragments(&self) -> Vec<Fragment> {
        let n = self.adj.len();
        let mut out = Vec::new();
        for v in 0..n {
            if !self.v_done[v] {
                continue;
            }
            for &(w, e) in &self.adj[v] {
                if !self.e_done[e] && self.v_done[w as usize] && (v as u32) < w {
                    out.push(Fragment {
                        attachments: vec![v as u32, w],
                        interior: Vec::new(),
                        edge: e,
                    });
                }
            }
        }
        let mut comp = vec![false; n];
        for s in 0..n {
            if self.v_done[s] || comp[s] {
                continue;
            }
            let mut interior = vec![s as u32];
            let mut attachments = Vec::new();
            comp[s] = true;
            let mut q = VecDeque::from([s as u32]);
            while let Some(x) = q.pop_front() {
                for &(w, _) in &self.adj[x as usize] {
                    let wi = w as usize;
                    if self.v_done[wi] {
                        attachments.push(w);
                    } else if !comp[wi] {
                        comp[wi] = true;
                        interior.push(w);
                        q.push_back(w);
                    }
                }
            }
            attachments.sort_unstable();
            attachments.dedup();
            out.push(Fragment {
                attachments,
                interior,
                edge: usize::MAX,
            });
        }
        out
    }

    /// A path through the fragment between two distinct attachments.
    fn fragment_path(&self, f: &Fragment) -> Vec<u32> {
        if f.interior.is_empty() {
            return f.attachments.clone();
        }
        let n = self.adj.len();
        let start = f.attachments[0];
        let mut prev = vec![u32::MAX; n];
        let mut q = VecDeque::new();
        for &(w, _) in &self.adj[start as usize] {
            if !self.v_done[w as usize] && prev[w as usize] == u32::MAX && f.interior.contains(&w) {
                prev[w as usize] = start;
                q.push_back(w);
            }
        }
        while let Some(x) = q.pop_front() {
            for &(w, _) in &self.adj[x as usize] {
                if self.v_done[w as usize] {
                    if w != start {
                        let mut path = vec![w, x];
                        let mut y = x;
                        while prev[y as usize] != start {
                            y = prev[y as usize];
                            path.push(y);
                        }
                        path.push(start);
                        path.reverse();
                        return path;
                    }
                } else if prev[w as usize] == u32::MAX {
                    prev[w as usize] = x;
                    q.push_back(w);
                }
            }
        }
        unreachable!("fragments of a biconnected block have two attachments")
    }

    fn run(mut self) -> bool {
        let cycle = self.initial_cycle();
        let mut closed = cycle.clone();
        closed.push(cycle[0]);
        self.mark_path(&closed);
        self.faces = vec![cycle.clone(), cycle];
        let mut done = self.e_done.iter().filter(|&&d| d).count();
        while done < self.edge_count {
            let frags = self.fragments();
            let mut choice: Option<(usize, usize)> = None;
            for (fi, f) in frags.iter().enumerate() {
                let admissible: Vec<usize> = (0..self.faces.len())
                    .filter(|&k| f.attachments.iter().all(|a| self.faces[k].contains(a)))
                    .collect();
                match admissible.len() {
                    0 => return false,
                    1 => {
                        choice = Some((fi, admissible[0]));
                        break;
                    }
                    _ => {
                        if choice.is_none() {
                            choice = Some((fi, admissible[0]));
                        }
                    }
                }
            }
            let (fi, face) = choice.expect("at least one fragment");
            let path = self.fragment_path(&frags[fi]);
            debug_assert!(frags[fi].edge == usize::MAX || path.len() == 2);
            self.split_face(face, &path);
            self.mark_path(&path);
            done += path.len() - 1;
        }
        true
    }

    fn split_face(&mut self, k: usize, path: &[u32]) {
        let face = core::mem::take(&mut self.faces[k]);
        let (a, b) = (path[0], path[path.len() - 1]);
        let ia = face
            .iter()
            .position(|&v| v == a)
            .expect("attachment on face");
        let ib = face
            .iter()
            .position(|&v| v == b)
            .expect("attachment on face");
        let len = face.len();
        let arc = |from: usize, to: usize| {
            let mut out = Vec::new();
            let mut i = from;
            loop {
                out.push(face[i]);
                if i == to {
                    break;
                }
                i = (i + 1) % len;
            }
            out
        };
        let inner = &path[1..path.len() - 1];
        let mut f1 = arc(ia, ib);
        f1.extend(inner.iter().rev());
        let mut f2 = arc(ib, ia);
        f2.extend(inner.iter());
        self.faces[k] = f1;
        self.faces.push(f2);
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn complete(k: u32) -> Vec<(u32, u32)> {
        let mut e = Vec::new();
        for a in 0..k {
            for b in a + 1..k {
                e.push((a, b));
            }
        }
        e
    }

    fn k33() -> Vec<(u32, u32)> {
        let mut e = Vec::new();
        for a in 0..3 {
            for b in 3..6 {
                e.push((a, b));
            }
        }
        e
    }

    fn grid(k: u32) -> Vec<(u32, u32)> {
        let mut e = Vec::new();
        for y in 0..k {
            for x in 0..k {
                let v = y * k + x;
                if x + 1 < k {
                    e.push((v, v + 1));
                }
                if y + 1 < k {
                    e.push((v, v + k));
                }
            }
        }
        e
    }

    #[test]
    fn small_graphs() {
        assert!(is_planar(4, &complete(4)));
        assert!(!is_planar(5, &complete(5)));
        assert!(!is_planar(6, &k33()));
        assert!(is_planar(36, &grid(6)));
        assert!(is_planar(0, &[]));
        assert!(is_planar(3, &[(0, 0), (0, 1), (0, 1), (1, 2)]));
    }

    #[test]
    fn subdivided_k33_is_not_planar() {
        // Subdivide every edge of K3,3 once.
        let mut e = Vec::new();
        for (i, (a, b)) in k33().into_iter().enumerate() {
            let m = 6 + i as u32;
            e.push((a, m));
            e.push((m, b));
        }
        assert!(!is_planar(15, &e));
    }

    #[test]
    fn wheel_with_outer_chords() {
        // Hub 0 joined to the 8-cycle 1..=8; outer chords are fine unless they cross.
        let mut e: Vec<(u32, u32)> = (1..=8).map(|i| (0, i)).collect();
        e.extend((1..=8).map(|i| (i, i % 8 + 1)));
        let mut nested = e.clone();
        nested.extend([(1, 5), (2, 4)]);
        assert!(is_planar(9, &nested));
        let mut crossing = e;
        crossing.extend([(1, 5), (3, 7)]);
        assert!(!is_planar(9, &crossing));
    }

    #[test]
    fn disjoint_blocks() {
        let mut e = complete(4);
        e.extend(k33().into_iter().map(|(a, b)| (a + 4, b + 4)));
        assert!(!is_planar(10, &e));
        let mut ok = complete(4);
        ok.extend(complete(4).into_iter().map(|(a, b)| (a + 3, b + 3)));
        assert!(is_planar(7, &ok));
    }

    type Case = (usize, bool, &'static [(u32, u32)]);

    #[test]
    fn random_graphs_frozen() {
        // Planarity verdicts computed once with an independent implementation.
        let cases: &[Case] = &[
            (
                10,
                true,
                &[
                    (0, 1),
                    (0, 6),
                    (0, 9),
                    (1, 4),
                    (1, 6),
                    (1, 7),
                    (1, 8),
                    (1, 9),
                    (2, 4),
                    (2, 7),
                    (2, 8),
                    (3, 5),
                    (3, 7),
                    (3, 8),
                    (3, 9),
                    (4, 7),
                    (4, 8),
                    (5, 7),
                    (6, 8),
                    (7, 9),
                ],
            ),
            (
                9,
                false,
                &[
                    (0, 1),
                    (0, 3),
                    (0, 5),
                    (0, 7),
                    (1, 3),
                    (1, 4),
                    (1, 6),
                    (2, 3),
                    (2, 6),
                    (2, 7),
                    (3, 7),
                    (3, 8),
                    (4, 5),
                    (4, 7),
                    (4, 8),
                    (6, 7),
                    (6, 8),
                ],
            ),
            (
                7,
                false,
                &[
                    (0, 3),
                    (0, 4),
                    (0, 6),
                    (1, 2),
                    (1, 3),
                    (1, 4),
                    (1, 5),
                    (1, 6),
                    (2, 3),
                    (2, 4),
                    (2, 6),
                    (3, 4),
                    (3, 5),
                    (4, 6),
                    (5, 6),
                ],
            ),
            (
                10,
                true,
                &[
                    (0, 2),
                    (0, 3),
                    (0, 7),
                    (0, 9),
                    (1, 2),
                    (1, 4),
                    (1, 5),
                    (1, 8),
                    (2, 7),
                    (2, 8),
                    (2, 9),
                    (3, 4),
                    (3, 7),
                    (4, 5),
                    (5, 8),
                    (6, 7),
                ],
            ),
            (
                9,
                false,
                &[
                    (0, 2),
                    (0, 6),
                    (0, 7),
                    (0, 8),
                    (1, 3),
                    (1, 4),
                    (1, 6),
                    (1, 7),
                    (1, 8),
                    (2, 5),
                    (4, 6),
                    (5, 6),
                    (5, 7),
                    (5, 8),
                    (7, 8),
                ],
            ),
            (
                10,
                false,
                &[
                    (0, 1),
                    (0, 4),
                    (0, 5),
                    (0, 9),
                    (1, 2),
                    (1, 3),
                    (1, 4),
                    (1, 5),
                    (1, 7),
                    (2, 3),
                    (2, 6),
                    (2, 7),
                    (2, 8),
                    (3, 4),
                    (3, 5),
                    (3, 6),
                    (3, 7),
                    (4, 5),
                    (5, 6),
                    (5, 7),
                    (5, 8),
                    (6, 9),
                    (7, 8),
                    (7, 9),
                ],
            ),
            (
                8,
                false,
                &[
                    (0, 1),
                    (0, 2),
                    (0, 3),
                    (0, 6),
                    (1, 2),
                    (1, 4),
                    (1, 6),
                    (1, 7),
                    (2, 3),
                    (2, 5),
                    (2, 7),
                    (3, 5),
                    (3, 7),
                    (4, 5),
                    (4, 7),
                    (5, 6),
                    (5, 7),
                ],
            ),
            (
                11,
                true,
                &[
                    (0, 2),
                    (0, 3),
                    (1, 3),
                    (1, 6),
                    (2, 4),
                    (2, 7),
                    (2, 8),
                    (2, 10),
                    (3, 7),
                    (3, 9),
                    (4, 6),
                    (4, 7),
                    (4, 8),
                    (4, 9),
                    (5, 8),
                    (7, 8),
                    (7, 9),
                    (7, 10),
                    (8, 10),
                ],
            ),
            (
                10,
                true,
                &[
                    (0, 3),
                    (0, 6),
                    (0, 8),
                    (0, 9),
                    (1, 2),
                    (1, 3),
                    (1, 7),
                    (1, 8),
                    (1, 9),
                    (2, 3),
                    (2, 4),
                    (2, 5),
                    (3, 4),
                    (4, 5),
                    (5, 8),
                    (6, 7),
                    (6, 8),
                    (6, 9),
                    (7, 8),
                    (7, 9),
                ],
            ),
            (
                9,
                true,
                &[
                    (0, 6),
                    (1, 2),
                    (1, 4),
                    (1, 6),
                    (1, 7),
                    (2, 3),
                    (2, 5),
                    (2, 6),
                    (2, 8),
                    (3, 5),
                    (3, 6),
                    (3, 8),
                    (4, 8),
                    (6, 8),
                ],
            ),
            (
                11,
                false,
                &[
                    (0, 1),
                    (0, 5),
                    (0, 6),
                    (0, 8),
                    (0, 9),
                    (0, 10),
                    (1, 2),
                    (1, 3),
                    (1, 5),
                    (1, 7),
                    (1, 8),
                    (1, 10),
                    (2, 3),
                    (2, 4),
                    (2, 7),
                    (2, 9),
                    (3, 6),
                    (3, 8),
                    (5, 6),
                    (5, 8),
                    (5, 9),
                    (5, 10),
                    (6, 7),
                    (7, 9),
                    (8, 9),
                ],
            ),
            (
                7,
                false,
                &[
                    (0, 2),
                    (0, 6),
                    (1, 2),
                    (1, 3),
                    (1, 4),
                    (1, 5),
                    (1, 6),
                    (2, 3),
                    (2, 5),
                    (2, 6),
                    (3, 4),
                    (3, 6),
                    (4, 5),
                    (4, 6),
                    (5, 6),
                ],
            ),
            (
                11,
                true,
                &[
                    (0, 9),
                    (1, 3),
                    (1, 6),
                    (1, 8),
                    (1, 9),
                    (2, 9),
                    (3, 4),
                    (3, 5),
                    (3, 7),
                    (4, 7),
                    (4, 10),
                    (6, 8),
                    (6, 10),
                ],
            ),
            (
                10,
                true,
                &[
                    (0, 3),
                    (0, 5),
                    (0, 6),
                    (0, 8),
                    (0, 9),
                    (1, 3),
                    (1, 4),
                    (1, 7),
                    (1, 9),
                    (2, 6),
                    (2, 7),
                    (4, 6),
                    (4, 7),
                    (4, 8),
                    (4, 9),
                    (5, 6),
                    (5, 8),
                    (6, 7),
                    (6, 8),
                    (8, 9),
                ],
            ),
            (
                10,
                false,
                &[
                    (0, 3),
                    (0, 4),
                    (0, 6),
                    (0, 9),
                    (1, 2),
                    (1, 3),
                    (1, 7),
                    (1, 8),
                    (1, 9),
                    (2, 3),
                    (2, 4),
                    (2, 6),
                    (2, 7),
                    (3, 4),
                    (3, 8),
                    (3, 9),
                    (4, 6),
                    (4, 7),
                    (4, 8),
                    (4, 9),
                    (5, 7),
                    (5, 8),
                    (6, 9),
                ],
            ),
            (
                8,
                false,
                &[
                    (0, 5),
                    (0, 7),
                    (1, 2),
                    (1, 3),
                    (1, 4),
                    (1, 5),
                    (1, 6),
                    (2, 3),
                    (2, 5),
                    (2, 6),
                    (2, 7),
                    (3, 4),
                    (3, 5),
                    (3, 7),
                    (4, 5),
                    (5, 6),
                    (5, 7),
                    (6, 7),
                ],
            ),
            (
                9,
                true,
                &[
                    (0, 2),
                    (0, 3),
                    (0, 4),
                    (0, 5),
                    (1, 4),
                    (1, 5),
                    (1, 6),
                    (1, 7),
                    (1, 8),
                    (2, 8),
                    (3, 6),
                    (3, 8),
                    (4, 7),
                    (4, 8),
                    (5, 6),
                    (5, 7),
                ],
            ),
            (
                7,
                true,
                &[
                    (0, 2),
                    (0, 4),
                    (0, 5),
                    (0, 6),
                    (1, 3),
                    (1, 5),
                    (2, 3),
                    (2, 4),
                    (2, 6),
                    (3, 4),
                    (3, 5),
                    (3, 6),
                    (4, 5),
                    (5, 6),
                ],
            ),
            (
                7,
                false,
                &[
                    (0, 2),
                    (0, 3),
                    (0, 4),
                    (1, 2),
                    (1, 3),
                    (1, 4),
                    (1, 5),
                    (1, 6),
                    (2, 3),
                    (2, 5),
                    (2, 6),
                    (3, 4),
                    (3, 5),
                    (4, 5),
                    (4, 6),
                ],
            ),
            (
                10,
                true,
                &[
                    (0, 2),
                    (0, 3),
                    (0, 4),
                    (1, 5),
                    (1, 7),
                    (2, 4),
                    (2, 5),
                    (2, 6),
                    (2, 9),
                    (3, 6),
                    (3, 7),
                    (4, 8),
                    (5, 7),
                    (5, 8),
                    (6, 7),
                    (8, 9),
                ],
            ),
            (
                9,
                false,
                &[
                    (0, 3),
                    (0, 6),
                    (0, 7),
                    (1, 2),
                    (1, 4),
                    (1, 5),
                    (1, 6),
                    (1, 7),
                    (1, 8),
                    (2, 3),
                    (2, 4),
                    (3, 6),
                    (3, 7),
                    (4, 5),
                    (4, 6),
                    (4, 8),
                    (5, 6),
                    (6, 7),
                    (6, 8),
                    (7, 8),
                ],
            ),
            (
                11,
                false,
                &[
                    (0, 3),
                    (0, 6),
                    (0, 8),
                    (1, 2),
                    (1, 4),
                    (1, 5),
                    (1, 6),
                    (1, 10),
                    (2, 3),
                    (2, 6),
                    (2, 9),
                    (2, 10),
                    (3, 9),
                    (3, 10),
                    (4, 5),
                    (4, 9),
                    (5, 7),
                    (5, 9),
                    (6, 7),
                    (6, 8),
                    (6, 9),
                    (6, 10),
                    (7, 9),
                ],
            ),
            (
                9,
                false,
                &[
                    (0, 3),
                    (1, 2),
                    (1, 4),
                    (1, 5),
                    (1, 6),
                    (1, 7),
                    (2, 4),
                    (2, 5),
                    (2, 7),
                    (3, 5),
                    (3, 7),
                    (3, 8),
                    (4, 5),
                    (4, 7),
                    (4, 8),
                    (5, 6),
                ],
            ),
            (
                8,
                false,
                &[
                    (0, 1),
                    (0, 2),
                    (0, 3),
                    (0, 6),
                    (0, 7),
                    (1, 2),
                    (1, 3),
                    (1, 4),
                    (1, 5),
                    (1, 6),
                    (2, 4),
                    (2, 6),
                    (2, 7),
                    (3, 4),
                    (3, 7),
                    (4, 5),
                    (4, 6),
                    (5, 6),
                ],
            ),
            (
                9,
                true,
                &[
                    (0, 2),
                    (0, 5),
                    (0, 6),
                    (1, 7),
                    (1, 8),
                    (4, 6),
                    (5, 6),
                    (5, 8),
                    (6, 7),
                    (6, 8),
                    (7, 8),
                ],
            ),
            (
                9,
                false,
                &[
                    (0, 3),
                    (0, 4),
                    (0, 5),
                    (0, 7),
                    (1, 2),
                    (1, 3),
                    (1, 5),
                    (1, 6),
                    (1, 7),
                    (1, 8),
                    (2, 3),
                    (2, 5),
                    (2, 8),
                    (3, 4),
                    (3, 6),
                    (4, 5),
                    (4, 8),
                    (5, 7),
                    (6, 8),
                    (7, 8),
                ],
            ),
            (
                9,
                false,
                &[
                    (0, 3),
                    (0, 7),
                    (1, 4),
                    (1, 6),
                    (1, 8),
                    (2, 3),
                    (2, 4),
                    (2, 6),
                    (2, 7),
                    (3, 4),
                    (3, 7),
                    (3, 8),
                    (4, 5),
                    (4, 8),
                    (5, 7),
                    (5, 8),
                ],
            ),
            (
                8,
                true,
                &[
                    (0, 1),
                    (0, 2),
                    (0, 4),
                    (0, 6),
                    (0, 7),
                    (1, 3),
                    (1, 4),
                    (1, 7),
                    (2, 5),
                    (2, 7),
                    (3, 4),
                    (4, 6),
                    (4, 7),
                    (6, 7),
                ],
            ),
            (
                9,
                false,
                &[
                    (0, 2),
                    (0, 3),
                    (0, 4),
                    (0, 5),
                    (0, 7),
                    (1, 2),
                    (1, 7),
                    (1, 8),
                    (2, 3),
                    (2, 5),
                    (2, 8),
                    (3, 4),
                    (3, 6),
                    (3, 7),
                    (4, 6),
                    (4, 7),
                    (4, 8),
                    (6, 7),
                    (7, 8),
                ],
            ),
            (
                11,
                true,
                &[
                    (0, 3),
                    (0, 7),
                    (0, 8),
                    (0, 9),
                    (1, 2),
                    (1, 6),
                    (2, 3),
                    (2, 7),
                    (2, 9),
                    (4, 6),
                    (4, 7),
                    (5, 6),
                    (5, 7),
                    (6, 8),
                    (7, 9),
                ],
            ),
            (
                8,
                true,
                &[
                    (0, 1),
                    (0, 3),
                    (0, 4),
                    (0, 5),
                    (0, 7),
                    (1, 3),
                    (1, 7),
                    (2, 3),
                    (2, 4),
                    (2, 6),
                    (3, 4),
                    (3, 7),
                    (4, 5),
                    (6, 7),
                ],
            ),
            (
                11,
                false,
                &[
                    (0, 1),
                    (0, 4),
                    (0, 5),
                    (0, 7),
                    (0, 9),
                    (0, 10),
                    (1, 4),
                    (1, 6),
                    (1, 7),
                    (2, 3),
                    (2, 5),
                    (2, 8),
                    (3, 9),
                    (3, 10),
                    (4, 5),
                    (4, 6),
                    (4, 8),
                    (5, 6),
                    (6, 9),
                ],
            ),
            (
                8,
                true,
                &[
                    (0, 2),
                    (1, 2),
                    (1, 3),
                    (1, 5),
                    (1, 6),
                    (2, 3),
                    (2, 4),
                    (2, 5),
                    (3, 6),
                    (3, 7),
                    (4, 7),
                    (5, 7),
                ],
            ),
            (
                7,
                false,
                &[
                    (0, 2),
                    (0, 3),
                    (0, 4),
                    (0, 5),
                    (1, 2),
                    (1, 3),
                    (1, 5),
                    (1, 6),
                    (2, 5),
                    (2, 6),
                    (3, 4),
                    (3, 5),
                    (3, 6),
                    (4, 5),
                    (5, 6),
                ],
            ),
            (
                9,
                false,
                &[
                    (0, 1),
                    (0, 2),
                    (0, 3),
                    (0, 4),
                    (0, 6),
                    (0, 8),
                    (1, 4),
                    (1, 5),
                    (1, 6),
                    (2, 4),
                    (4, 5),
                    (4, 6),
                    (4, 7),
                    (4, 8),
                    (5, 7),
                    (5, 8),
                    (6, 7),
                    (6, 8),
                    (7, 8),
                ],
            ),
            (
                9,
                true,
                &[
                    (0, 1),
                    (0, 2),
                    (0, 3),
                    (0, 8),
                    (1, 8),
                    (2, 3),
                    (2, 5),
                    (2, 6),
                    (3, 4),
                    (3, 5),
                    (3, 8),
                    (4, 5),
                    (4, 7),
                    (5, 6),
                    (5, 7),
                    (5, 8),
                    (6, 8),
                    (7, 8),
                ],
            ),
            (
                9,
                true,
                &[
                    (0, 2),
                    (0, 5),
                    (1, 4),
                    (1, 7),
                    (1, 8),
                    (2, 3),
                    (2, 5),
                    (2, 6),
                    (2, 8),
                    (3, 8),
                    (4, 6),
                    (4, 8),
                    (5, 8),
                    (6, 7),
                    (6, 8),
                    (7, 8),
                ],
            ),
            (
                7,
                true,
                &[
                    (0, 1),
                    (0, 2),
                    (0, 3),
                    (0, 4),
                    (0, 5),
                    (1, 2),
                    (1, 4),
                    (2, 3),
                    (2, 4),
                    (2, 5),
                ],
            ),
            (
                7,
                true,
                &[
                    (0, 1),
                    (0, 3),
                    (1, 2),
                    (1, 6),
                    (2, 3),
                    (2, 6),
                    (3, 4),
                    (3, 6),
                    (4, 5),
                    (4, 6),
                ],
            ),
            (
                9,
                true,
                &[
                    (0, 2),
                    (0, 6),
                    (0, 8),
                    (1, 4),
                    (1, 5),
                    (1, 6),
                    (2, 3),
                    (2, 6),
                    (2, 8),
                    (3, 5),
                    (3, 7),
                    (4, 8),
                    (5, 6),
                    (5, 8),
                    (6, 7),
                ],
            ),
        ];
        for (i, &(n, planar, edges)) in cases.iter().enumerate() {
            assert_eq!(is_planar(n, edges), planar, "case {i}");
        }
    }
}
