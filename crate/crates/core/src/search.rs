//! Counting, enumerating, sampling and locally optimising spanning trees.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{Signed, Zero};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::grid::{GridCoord, GridGraph};
use crate::tree::SpanningTree;
use crate::{Error, Result};

/// Largest side for which exhaustive enumeration is attempted.
pub const ENUMERATION_LIMIT: u32 = 4;

/// Number of spanning trees, as the determinant of a reduced Laplacian.
pub fn count_spanning_trees(g: GridGraph) -> BigUint {
    let v = g.vertex_count();
    if v == 1 {
        return BigUint::from(1u32);
    }
    let k = v - 1;
    let mut m: Vec<Vec<BigInt>> = vec![vec![BigInt::zero(); k]; k];
    for e in g.edges() {
        let (a, b) = (g.index(e.a), g.index(e.b));
        for (p, q) in [(a, b), (b, a)] {
            if p < k {
                m[p][p] += 1;
                if q < k {
                    m[p][q] -= 1;
                }
            }
        }
    }
    bareiss_det(m).abs().to_biguint().expect("non-negative")
}

/// Fraction-free Gaussian elimination.
fn bareiss_det(mut m: Vec<Vec<BigInt>>) -> BigInt {
    let k = m.len();
    let mut sign = BigInt::from(1);
    let mut prev = BigInt::from(1);
    for i in 0..k {
        if m[i][i].is_zero() {
            match (i + 1..k).find(|&r| !m[r][i].is_zero()) {
                Some(r) => {
                    m.swap(i, r);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for r in i + 1..k {
            for c in i + 1..k {
                let v = &m[r][c] * &m[i][i] - &m[r][i] * &m[i][c];
                m[r][c] = v.div_floor(&prev);
            }
        }
        prev = m[i][i].clone();
    }
    sign * &m[k - 1][k - 1]
}

/// Calls `visit` once per spanning tree with its sorted edge ids and
/// returns the number of trees.
pub fn enumerate_spanning_trees(g: GridGraph, mut visit: impl FnMut(&[u32])) -> Result<u64> {
    let n = g.n();
    if n > ENUMERATION_LIMIT {
        return Err(Error::TooLarge {
            n,
            limit: ENUMERATION_LIMIT,
        });
    }
    let edges: Vec<(usize, usize)> = g.edges().map(|e| (g.index(e.a), g.index(e.b))).collect();
    let v = g.vertex_count();
    let mut state = Enumerator {
        v,
        edges: &edges,
        chosen: Vec::with_capacity(v),
        count: 0,
    };
    let comp: Vec<usize> = (0..v).collect();
    state.recurse(0, &comp, &mut visit);
    Ok(state.count)
}

struct Enumerator<'a> {
    v: usize,
    edges: &'a [(usize, usize)],
    chosen: Vec<u32>,
    count: u64,
}

impl Enumerator<'_> {
    fn recurse(&mut self, k: usize, comp: &[usize], visit: &mut impl FnMut(&[u32])) {
        if self.chosen.len() + 1 == self.v {
            self.count += 1;
            visit(&self.chosen);
            return;
        }
        let (a, b) = self.edges[k];
        let (ca, cb) = (comp[a], comp[b]);
        if ca != cb {
            let merged: Vec<usize> = comp.iter().map(|&c| if c == cb { ca } else { c }).collect();
            self.chosen.push(k as u32);
            self.recurse(k + 1, &merged, visit);
            self.chosen.pop();
        }
        if ca == cb || self.connected_without(k, comp) {
            self.recurse(k + 1, comp, visit);
        }
    }

    /// Whether the chosen forest plus the edges after `k` still spans.
    fn connected_without(&self, k: usize, comp: &[usize]) -> bool {
        let mut label: Vec<usize> = comp.to_vec();
        fn find(label: &mut [usize], mut x: usize) -> usize {
            while label[x] != x {
                label[x] = label[label[x]];
                x = label[x];
            }
            x
        }
        // `comp` values are representatives of the chosen forest.
        let mut parts = (0..self.v).filter(|&x| comp[x] == x).count();
        for &(a, b) in &self.edges[k + 1..] {
            let (ra, rb) = (find(&mut label, comp[a]), find(&mut label, comp[b]));
            if ra != rb {
                label[ra] = rb;
                parts -= 1;
                if parts == 1 {
                    return true;
                }
            }
        }
        parts == 1
    }
}

/// Exhaustive optimum over all spanning trees of a small grid.
#[derive(Debug, Clone)]
pub struct MinResult {
    pub l_min: u64,
    pub witness: SpanningTree,
    /// Minimum over all trees of the sum of cycle perimeters.
    pub lstar_min: u64,
    pub trees: u64,
}

pub fn min_total_length(g: GridGraph) -> Result<MinResult> {
    let root = GridCoord::new(g.n(), 1);
    let mut best: Option<(u64, Vec<u32>)> = None;
    let mut lstar_min = u64::MAX;
    let mut failure = None;
    let trees = enumerate_spanning_trees(g, |ids| {
        if failure.is_some() {
            return;
        }
        match SpanningTree::from_edges(g, ids, root) {
            Ok(t) => {
                let (l, p) = if g.n() == 1 {
                    (0, 0)
                } else {
                    let s = t.total_length().expect("n >= 2");
                    (s.l_total, s.p_total)
                };
                lstar_min = lstar_min.min(p);
                if best.as_ref().is_none_or(|(b, _)| l < *b) {
                    best = Some((l, ids.to_vec()));
                }
            }
            Err(e) => failure = Some(e),
        }
    })?;
    if let Some(e) = failure {
        return Err(e);
    }
    let (l_min, ids) = best.expect("every grid has a spanning tree");
    Ok(MinResult {
        l_min,
        witness: SpanningTree::from_edges(g, &ids, root)?,
        lstar_min,
        trees,
    })
}

/// A uniformly random spanning tree (Wilson's algorithm), rooted at `(n, 1)`.
pub fn random_spanning_tree(g: GridGraph, seed: u64) -> SpanningTree {
    random_spanning_tree_with(g, &mut ChaCha8Rng::seed_from_u64(seed))
}

pub fn random_spanning_tree_with<R: Rng + ?Sized>(g: GridGraph, rng: &mut R) -> SpanningTree {
    let v = g.vertex_count();
    let root = GridCoord::new(g.n(), 1);
    let mut in_tree = vec![false; v];
    let mut next = vec![0usize; v];
    in_tree[g.index(root)] = true;
    let mut nbrs: Vec<GridCoord> = Vec::with_capacity(4);
    for start in 0..v {
        let mut u = start;
        while !in_tree[u] {
            nbrs.clear();
            nbrs.extend(g.neighbors(g.coord(u)));
            let w = nbrs[rng.gen_range(0..nbrs.len())];
            next[u] = g.index(w);
            u = next[u];
        }
        let mut u = start;
        while !in_tree[u] {
            in_tree[u] = true;
            u = next[u];
        }
    }
    let root_index = g.index(root);
    let ids: Vec<u32> = (0..v)
        .filter(|&u| u != root_index)
        .map(|u| g.edge_id(g.coord(u), g.coord(next[u])).expect("neighbours"))
        .collect();
    SpanningTree::from_edges(g, &ids, root).expect("Wilson's algorithm yields a spanning tree")
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SearchBudget {
    /// Maximum number of candidate trees evaluated.
    pub max_trees: u64,
    /// Wall-clock limit, honoured by callers through the `stop` callback.
    pub max_seconds: Option<f64>,
    pub seed: u64,
}

impl Default for SearchBudget {
    fn default() -> Self {
        SearchBudget {
            max_trees: 100_000,
            max_seconds: None,
            seed: 0,
        }
    }
}

#[derive(Debug, Clone)]
pub struct SearchOutcome {
    pub tree: SpanningTree,
    pub initial: u64,
    pub l_total: u64,
    pub moves: u64,
    pub evaluated: u64,
    /// True when the search stopped on the budget rather than at a local optimum.
    pub truncated: bool,
}

/// First-improvement hill climbing over single edge swaps: add a chord,
/// drop a tree edge on its cycle, keep the result if `L` strictly drops.
/// `stop` is polled before each evaluation.
pub fn local_search(
    t0: &SpanningTree,
    budget: &SearchBudget,
    mut stop: impl FnMut() -> bool,
) -> SearchOutcome {
    let g = t0.grid();
    let root = t0.root();
    let score = |t: &SpanningTree| if g.n() == 1 { 0 } else { t.l_total() };
    let initial = score(t0);
    let mut current = t0.clone();
    let mut value = initial;
    let mut rng = ChaCha8Rng::seed_from_u64(budget.seed);
    let (mut moves, mut evaluated) = (0u64, 0u64);
    'outer: loop {
        let mut chords: Vec<u32> = current.chord_ids().collect();
        chords.shuffle(&mut rng);
        for &c in &chords {
            let e = g.edge(c).expect("chord id");
            let path = current.path(e.a, e.b).expect("vertices of the grid");
            let mut cut: Vec<u32> = path
                .windows(2)
                .map(|w| g.edge_id(w[0], w[1]).expect("tree path"))
                .collect();
            cut.shuffle(&mut rng);
            for f in cut {
                if evaluated >= budget.max_trees || stop() {
                    return SearchOutcome {
                        tree: current,
                        initial,
                        l_total: value,
                        moves,
                        evaluated,
                        truncated: true,
                    };
                }
                evaluated += 1;
                let ids: Vec<u32> = current
                    .edge_ids()
                    .filter(|&id| id != f)
                    .chain(core::iter::once(c))
                    .collect();
                let cand = SpanningTree::from_edges(g, &ids, root).expect("swap keeps a tree");
                let l = score(&cand);
                if l < value {
                    current = cand;
                    value = l;
                    moves += 1;
                    continue 'outer;
                }
            }
        }
        break;
    }
    SearchOutcome {
        tree: current,
        initial,
        l_total: value,
        moves,
        evaluated,
        truncated: false,
    }
}
