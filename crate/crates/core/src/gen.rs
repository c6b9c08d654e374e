//! Seeded generators for near-tree planar graphs and weight profiles.
//!
//! Every random stream is a ChaCha8 generator seeded with
//! `seed ^ fnv1a64(stage)`, where `stage` names the step drawing from it
//! (`"tree"`, `"edges"`, `"weights"`, `"triangulation"`).

use std::collections::{HashMap, HashSet};

use num_rational::Ratio;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::graph::{parse_ratio, Graph, VertexId};
use crate::planar::is_planar;

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum GenError {
    #[error("cannot place {extra} extra planar edges on {n} vertices")]
    Infeasible { n: usize, extra: usize },
    #[error("invalid generator spec: {0}")]
    InvalidSpec(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WeightMode {
    Unit,
    /// Integers drawn uniformly from `lo..=hi`.
    UniformRandom {
        lo: u64,
        hi: u64,
    },
    /// One random vertex holds strictly more than this fraction of the total.
    SingleHeavy(Ratio<u64>),
}

impl std::str::FromStr for WeightMode {
    type Err = String;

    /// `unit`, `uniform:LO:HI` or `heavy:F`.
    fn from_str(s: &str) -> Result<Self, String> {
        let parts: Vec<&str> = s.split(':').collect();
        match parts.as_slice() {
            ["unit"] => Ok(WeightMode::Unit),
            ["uniform", lo, hi] => {
                let lo = lo.parse().map_err(|_| format!("bad lower bound `{lo}`"))?;
                let hi = hi.parse().map_err(|_| format!("bad upper bound `{hi}`"))?;
                if lo > hi {
                    return Err(format!("empty range {lo}..={hi}"));
                }
                Ok(WeightMode::UniformRandom { lo, hi })
            }
            ["heavy", f] => {
                let f = parse_ratio(f)?;
                if f * 2 <= Ratio::from_integer(1) || f >= Ratio::from_integer(1) {
                    return Err(format!(
                        "heavy fraction {f} must lie strictly between 1/2 and 1"
                    ));
                }
                Ok(WeightMode::SingleHeavy(f))
            }
            _ => Err(format!(
                "unknown weight mode `{s}` (unit, uniform:LO:HI, heavy:F)"
            )),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GenSpec {
    pub n: usize,
    /// Excess: the graph gets `n + r` edges.
    pub r: i64,
    pub seed: u64,
    pub weight_mode: WeightMode,
}

impl GenSpec {
    pub fn unit(n: usize, r: i64, seed: u64) -> Self {
        GenSpec {
            n,
            r,
            seed,
            weight_mode: WeightMode::Unit,
        }
    }
}

pub fn fnv1a64(bytes: &[u8]) -> u64 {
    let mut h: u64 = 0xcbf2_9ce4_8422_2325;
    for &b in bytes {
        h ^= b as u64;
        h = h.wrapping_mul(0x0000_0100_0000_01b3);
    }
    h
}

pub fn stage_rng(seed: u64, stage: &str) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed ^ fnv1a64(stage.as_bytes()))
}

/// Parent array of a uniform random labeled tree (Prüfer decoding, linear
/// time), rooted at vertex 0.
fn random_parents(n: usize, rng: &mut ChaCha8Rng) -> Vec<(VertexId, VertexId)> {
    if n < 2 {
        return Vec::new();
    }
    if n == 2 {
        return vec![(0, 1)];
    }
    let code: Vec<usize> = (0..n - 2).map(|_| rng.gen_range(0..n)).collect();
    let mut degree = vec![1usize; n];
    for &c in &code {
        degree[c] += 1;
    }
    let mut edges = Vec::with_capacity(n - 1);
    let mut ptr = (0..n).find(|&v| degree[v] == 1).unwrap();
    let mut leaf = ptr;
    for &c in &code {
        edges.push((leaf, c));
        degree[c] -= 1;
        if degree[c] == 1 && c < ptr {
            leaf = c;
        } else {
            ptr += 1;
            while degree[ptr] != 1 {
                ptr += 1;
            }
            leaf = ptr;
        }
    }
    edges.push((leaf, n - 1));
    edges
}

pub fn random_tree(n: usize, seed: u64) -> Graph {
    let mut rng = stage_rng(seed, "tree");
    Graph::unit(n, &random_parents(n, &mut rng)).expect("Prüfer decoding yields a tree")
}

/// Tree with preorder numbers and a sparse table for O(1) LCA queries.
struct RootedTree {
    offsets: Vec<usize>,
    targets: Vec<VertexId>,
    tin: Vec<u32>,
    parent: Vec<u32>,
    /// `table[k][i]` is the shallowest vertex among preorder positions
    /// `i .. i + 2^k`.
    table: Vec<Vec<u32>>,
    depth: Vec<u32>,
    /// Vertex-indexed scratch slots used while building kernels.
    slot: Vec<u32>,
}

impl RootedTree {
    fn new(n: usize, edges: &[(VertexId, VertexId)]) -> Self {
        let mut offsets = vec![0usize; n + 1];
        for &(u, v) in edges {
            offsets[u + 1] += 1;
            offsets[v + 1] += 1;
        }
        for i in 0..n {
            offsets[i + 1] += offsets[i];
        }
        let mut fill = offsets.clone();
        let mut targets = vec![0; offsets[n]];
        for &(u, v) in edges {
            targets[fill[u]] = v;
            fill[u] += 1;
            targets[fill[v]] = u;
            fill[v] += 1;
        }
        let mut parent = vec![u32::MAX; n];
        let mut tin = vec![0u32; n];
        let mut depth = vec![0u32; n];
        let mut order = Vec::with_capacity(n);
        let mut stack = vec![0usize];
        parent[0] = 0;
        while let Some(v) = stack.pop() {
            tin[v] = order.len() as u32;
            order.push(v as u32);
            for &w in &targets[offsets[v]..offsets[v + 1]] {
                if parent[w] == u32::MAX {
                    parent[w] = v as u32;
                    depth[w] = depth[v] + 1;
                    stack.push(w);
                }
            }
        }
        let mut table = vec![order];
        let mut span = 1;
        while 2 * span <= n {
            let prev = table.last().expect("non-empty");
            let next: Vec<u32> = (0..=n - 2 * span)
                .map(|i| {
                    let (a, b) = (prev[i], prev[i + span]);
                    if depth[b as usize] < depth[a as usize] {
                        b
                    } else {
                        a
                    }
                })
                .collect();
            table.push(next);
            span *= 2;
        }
        RootedTree {
            offsets,
            targets,
            tin,
            parent,
            table,
            depth,
            slot: vec![u32::MAX; n],
        }
    }

    fn neighbors(&self, v: VertexId) -> &[VertexId] {
        &self.targets[self.offsets[v]..self.offsets[v + 1]]
    }

    /// LCA of two vertices given in preorder, `tin[a] < tin[b]`: the parent
    /// of the shallowest vertex in preorder range `(tin[a], tin[b]]`.
    fn lca_ordered(&self, a: usize, b: usize) -> usize {
        let (lo, hi) = (self.tin[a] as usize + 1, self.tin[b] as usize + 1);
        let k = (usize::BITS - 1 - (hi - lo).leading_zeros()) as usize;
        let (x, y) = (self.table[k][lo], self.table[k][hi - (1 << k)]);
        let m = if self.depth[y as usize] < self.depth[x as usize] {
            y
        } else {
            x
        };
        self.parent[m as usize] as usize
    }

    /// Planarity of the tree plus `extra`, decided on the tree compressed
    /// to the extra edges' endpoints and their pairwise LCAs. Subtrees free
    /// of endpoints and degree-two tree paths do not affect planarity.
    fn planar_with(&mut self, extra: &[(VertexId, VertexId)]) -> bool {
        let mut pts: Vec<(u32, u32)> = extra
            .iter()
            .flat_map(|&(u, v)| [u, v])
            .map(|v| (self.tin[v], v as u32))
            .collect();
        pts.sort_unstable();
        pts.dedup();
        let k = pts.len();
        for i in 1..k {
            let l = self.lca_ordered(pts[i - 1].1 as usize, pts[i].1 as usize);
            pts.push((self.tin[l], l as u32));
        }
        pts.sort_unstable();
        pts.dedup();
        for (i, &(_, v)) in pts.iter().enumerate() {
            self.slot[v as usize] = i as u32;
        }
        let mut edges: Vec<(usize, usize)> = Vec::with_capacity(pts.len() + extra.len());
        for i in 1..pts.len() {
            let l = self.lca_ordered(pts[i - 1].1 as usize, pts[i].1 as usize);
            edges.push((self.slot[l] as usize, i));
        }
        for &(u, v) in extra {
            let (a, b) = (self.slot[u] as usize, self.slot[v] as usize);
            edges.push((a.min(b), a.max(b)));
        }
        for &(_, v) in &pts {
            self.slot[v as usize] = u32::MAX;
        }
        edges.sort_unstable();
        edges.dedup();
        let g = Graph::unit(pts.len(), &edges).expect("deduplicated kernel");
        is_planar(&g)
    }
}

fn max_planar_edges(n: usize) -> usize {
    if n < 3 {
        n * n.saturating_sub(1) / 2
    } else {
        3 * n - 6
    }
}

/// Random tree plus `r + 1` extra edges, each accepted only while the graph
/// stays simple and planar. Three of every four candidates close a short
/// tree walk (length 2 to 8); the fourth is a uniform vertex pair. At most
/// `200 * (r + 1)` candidates are drawn. Vertices of the result are
/// numbered in BFS order from vertex 0.
pub fn near_tree_planar(spec: &GenSpec) -> Result<Graph, GenError> {
    let GenSpec { n, r, seed, .. } = *spec;
    if n == 0 {
        return Err(GenError::InvalidSpec("n must be at least 1".into()));
    }
    if r < -1 {
        return Err(GenError::InvalidSpec(format!("excess {r} below -1")));
    }
    let extra = (r + 1) as usize;
    if n - 1 + extra > max_planar_edges(n) {
        return Err(GenError::Infeasible { n, extra });
    }
    let mut rng = stage_rng(seed, "tree");
    let tree_edges = random_parents(n, &mut rng);
    let mut present: HashSet<(VertexId, VertexId)> = tree_edges
        .iter()
        .map(|&(u, v)| (u.min(v), u.max(v)))
        .collect();
    let mut added: Vec<(VertexId, VertexId)> = Vec::with_capacity(extra);
    if extra > 0 {
        let mut tree = RootedTree::new(n, &tree_edges);
        let mut rng = stage_rng(seed, "edges");
        let mut attempts = 0;
        let mut pending: Vec<(VertexId, VertexId)> = Vec::new();
        let mut batch = 16;
        while added.len() < extra {
            // Top up the batch with fresh, distinct candidates.
            let want = batch.min(extra - added.len());
            while pending.len() < want && attempts < 200 * extra {
                attempts += 1;
                let u = rng.gen_range(0..n);
                let v = if attempts % 4 != 0 {
                    let len = rng.gen_range(2..=8);
                    let mut cur = u;
                    for _ in 0..len {
                        let nb = tree.neighbors(cur);
                        cur = nb[rng.gen_range(0..nb.len())];
                    }
                    cur
                } else {
                    rng.gen_range(0..n)
                };
                let key = (u.min(v), u.max(v));
                if u != v && present.insert(key) {
                    pending.push(key);
                }
            }
            if pending.is_empty() {
                return Err(GenError::Infeasible { n, extra });
            }
            // Longest planar prefix of the batch; planarity is monotone, so
            // this accepts exactly what one-at-a-time testing would.
            let base = added.len();
            added.extend_from_slice(&pending);
            let take = if tree.planar_with(&added) {
                pending.len()
            } else {
                let (mut lo, mut hi) = (0, pending.len() - 1);
                while lo < hi {
                    let mid = (lo + hi + 1) / 2;
                    added.truncate(base);
                    added.extend_from_slice(&pending[..mid]);
                    if tree.planar_with(&added) {
                        lo = mid;
                    } else {
                        hi = mid - 1;
                    }
                }
                lo
            };
            added.truncate(base);
            added.extend_from_slice(&pending[..take]);
            if take < pending.len() {
                // The first rejected candidate stays out for good.
                pending.drain(..=take);
                batch = (batch / 2).max(1);
            } else {
                pending.clear();
                batch *= 2;
            }
        }
        added.truncate(extra);
    }
    let mut edges = tree_edges;
    edges.extend(added);
    let g = Graph::unit(n, &edges).expect("simple by construction");
    let g = g
        .bfs_renumbered(0)
        .expect("contains a spanning tree")
        .0
        .into_owned();
    Ok(assign_weights(&g, spec.weight_mode, seed))
}

pub fn grid_graph(a: usize, b: usize) -> Graph {
    let mut e = Vec::with_capacity(2 * a * b);
    for i in 0..a {
        for j in 0..b {
            let v = i * b + j;
            if j + 1 < b {
                e.push((v, v + 1));
            }
            if i + 1 < a {
                e.push((v, v + b));
            }
        }
    }
    Graph::unit(a * b, &e).expect("grid edges are simple")
}

/// Reweights `g`. `SingleHeavy(f)` gives every vertex weight 1 except one
/// random vertex, which gets `floor(f * W_rest / (1 - f)) + 1`.
pub fn assign_weights(g: &Graph, mode: WeightMode, seed: u64) -> Graph {
    let n = g.n();
    let mut rng = stage_rng(seed, "weights");
    let weights = match mode {
        WeightMode::Unit => vec![1; n],
        WeightMode::UniformRandom { lo, hi } => {
            (0..n).map(|_| rng.gen_range(lo..=hi.max(lo))).collect()
        }
        WeightMode::SingleHeavy(f) => {
            let mut w = vec![1u64; n];
            if n > 0 {
                let z = rng.gen_range(0..n);
                w[z] = heavy_weight(f, (n - 1) as u64);
            }
            w
        }
    };
    g.with_weights(weights).expect("weight count matches")
}

/// Smallest integer weight that is strictly more than `f` of
/// `heavy + rest`.
pub fn heavy_weight(f: Ratio<u64>, rest: u64) -> u64 {
    let (num, den) = (*f.numer() as u128, *f.denom() as u128);
    let extra = num * rest as u128 / (den - num);
    extra as u64 + 1
}

/// Random maximal planar graph: repeated vertex insertion into a random
/// triangle, then random edge flips.
pub fn random_triangulation(n: usize, seed: u64) -> Graph {
    assert!(n >= 3, "triangulation needs at least 3 vertices");
    let mut rng = stage_rng(seed, "triangulation");
    // Counter-clockwise triangles; both sides of the initial triangle.
    let mut faces: Vec<[VertexId; 3]> = vec![[0, 1, 2], [0, 2, 1]];
    for v in 3..n {
        let f = rng.gen_range(0..faces.len());
        let [a, b, c] = faces[f];
        faces[f] = [a, b, v];
        faces.push([b, c, v]);
        faces.push([c, a, v]);
    }
    // dart (a, b) -> face containing it
    let mut dart: HashMap<(VertexId, VertexId), usize> = HashMap::new();
    for (i, f) in faces.iter().enumerate() {
        for k in 0..3 {
            dart.insert((f[k], f[(k + 1) % 3]), i);
        }
    }
    let third = |f: &[VertexId; 3], a: VertexId, b: VertexId| {
        *f.iter().find(|&&x| x != a && x != b).unwrap()
    };
    for _ in 0..2 * n {
        let f1 = rng.gen_range(0..faces.len());
        let k = rng.gen_range(0..3);
        let (a, b) = (faces[f1][k], faces[f1][(k + 1) % 3]);
        let f2 = dart[&(b, a)];
        let c = third(&faces[f1], a, b);
        let d = third(&faces[f2], a, b);
        if c == d || dart.contains_key(&(c, d)) {
            continue;
        }
        for f in [f1, f2] {
            for k in 0..3 {
                dart.remove(&(faces[f][k], faces[f][(k + 1) % 3]));
            }
        }
        faces[f1] = [d, b, c];
        faces[f2] = [c, a, d];
        for f in [f1, f2] {
            for k in 0..3 {
                dart.insert((faces[f][k], faces[f][(k + 1) % 3]), f);
            }
        }
    }
    let mut edges: Vec<_> = dart.keys().filter(|&&(a, b)| a < b).copied().collect();
    edges.sort_unstable();
    Graph::unit(n, &edges).expect("triangulation is simple")
}
