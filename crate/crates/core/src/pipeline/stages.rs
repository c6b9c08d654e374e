//! Tree-side stages: spanning tree, extra edges, Steiner subtree, branch set,
//! path decomposition and weight collapse.

use crate::graph::{EdgeSet, Graph, VertexId};
use crate::tree::{SpanningTree, TreeError};

use super::PipelineError;

pub fn compute_spanning_tree(g: &Graph, root: VertexId) -> Result<SpanningTree, PipelineError> {
    if root >= g.n() {
        return Err(PipelineError::Disconnected);
    }
    SpanningTree::bfs(g, root).map_err(|e| match e {
        TreeError::Disconnected => PipelineError::Disconnected,
        other => unreachable!("bfs tree: {other}"),
    })
}

/// Edges of `g` that are not in `t`.
pub fn extra_edges(g: &Graph, t: &SpanningTree) -> EdgeSet {
    g.edges().filter(|&(u, v)| !t.is_tree_edge(u, v)).collect()
}

/// Minimal subtree `T1` of a spanning tree containing a terminal set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SteinerSubtree {
    pub member: Vec<bool>,
    /// Tree edges with both ends in `T1`, as `(min, max)`, sorted.
    pub edges: Vec<(VertexId, VertexId)>,
}

impl SteinerSubtree {
    pub fn members(&self) -> Vec<VertexId> {
        (0..self.member.len()).filter(|&v| self.member[v]).collect()
    }

    pub fn len(&self) -> usize {
        self.member.iter().filter(|&&b| b).count()
    }

    pub fn is_empty(&self) -> bool {
        !self.member.iter().any(|&b| b)
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.member.len()];
        for &(u, v) in &self.edges {
            deg[u] += 1;
            deg[v] += 1;
        }
        deg
    }

    /// Adjacency inside `T1` in CSR form: `(offsets, targets)`.
    fn adjacency(&self) -> (Vec<usize>, Vec<VertexId>) {
        let n = self.member.len();
        let deg = self.degrees();
        let mut offsets = vec![0; n + 1];
        for v in 0..n {
            offsets[v + 1] = offsets[v] + deg[v];
        }
        let mut fill = offsets.clone();
        let mut targets = vec![0; offsets[n]];
        for &(u, v) in &self.edges {
            targets[fill[u]] = v;
            fill[u] += 1;
            targets[fill[v]] = u;
            fill[v] += 1;
        }
        for v in 0..n {
            targets[offsets[v]..offsets[v + 1]].sort_unstable();
        }
        (offsets, targets)
    }
}

/// Counts terminals per subtree in reverse BFS order. A vertex belongs to
/// `T1` when its subtree holds some but not all terminals, or when it is the
/// deepest vertex whose subtree holds all of them.
pub fn steiner_subtree(
    t: &SpanningTree,
    terminals: &[VertexId],
) -> Result<SteinerSubtree, PipelineError> {
    if terminals.is_empty() {
        return Err(PipelineError::EmptyTerminals);
    }
    let n = t.n();
    let mut count = vec![0u32; n];
    for &v in terminals {
        count[v] = 1;
    }
    let k = count.iter().filter(|&&c| c > 0).count() as u32;
    let parent = t.parents();
    let mut top = t.root();
    for &v in t.order().iter().rev() {
        if count[v] == k && t.depth(v) > t.depth(top) {
            top = v;
        }
        if v != t.root() {
            count[parent[v]] += count[v];
        }
    }
    let member: Vec<bool> = (0..n)
        .map(|v| (count[v] > 0 && count[v] < k) || v == top)
        .collect();
    let mut edges: Vec<(VertexId, VertexId)> = (0..n)
        .filter(|&v| member[v] && v != top)
        .map(|v| (v.min(parent[v]), v.max(parent[v])))
        .collect();
    edges.sort_unstable();
    Ok(SteinerSubtree { member, edges })
}

/// Branch set `U`: vertices of degree at least three in `T1` plus terminals.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BranchSet {
    /// Sorted.
    pub members: Vec<VertexId>,
}

impl BranchSet {
    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, v: VertexId) -> bool {
        self.members.binary_search(&v).is_ok()
    }
}

pub fn branch_vertices(t1: &SteinerSubtree, terminals: &[VertexId]) -> BranchSet {
    let deg = t1.degrees();
    let mut mark: Vec<bool> = deg.iter().map(|&d| d >= 3).collect();
    for &v in terminals {
        mark[v] = true;
    }
    BranchSet {
        members: (0..mark.len())
            .filter(|&v| mark[v] && t1.member[v])
            .collect(),
    }
}

/// Maximal paths of `T1` between vertices of `U` with interiors outside `U`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct PathDecomposition {
    /// Each path runs from its lower endpoint to its higher one.
    pub paths: Vec<Vec<VertexId>>,
}

impl PathDecomposition {
    pub fn len(&self) -> usize {
        self.paths.len()
    }

    pub fn is_empty(&self) -> bool {
        self.paths.is_empty()
    }
}

pub fn decompose_paths(t1: &SteinerSubtree, u: &BranchSet) -> PathDecomposition {
    let n = t1.member.len();
    let (offsets, targets) = t1.adjacency();
    let mut in_u = vec![false; n];
    for &v in &u.members {
        in_u[v] = true;
    }
    let mut paths = Vec::new();
    for &start in &u.members {
        for &first in &targets[offsets[start]..offsets[start + 1]] {
            let mut path = vec![start];
            let (mut prev, mut cur) = (start, first);
            while !in_u[cur] {
                path.push(cur);
                // Interior vertices have degree exactly two in T1.
                let nb = &targets[offsets[cur]..offsets[cur + 1]];
                let next = if nb[0] == prev { nb[1] } else { nb[0] };
                prev = cur;
                cur = next;
            }
            path.push(cur);
            if start < cur {
                paths.push(path);
            }
        }
    }
    PathDecomposition { paths }
}

/// Weights moved onto `T1`: each outside vertex gives its weight to the
/// first `T1` vertex on its tree path toward `T1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CollapsedWeights {
    /// Zero outside `T1`.
    pub wprime: Vec<u64>,
    /// `attach[v] == v` for members of `T1`.
    pub attach: Vec<VertexId>,
}

pub fn collapse_weights(g: &Graph, t: &SpanningTree, t1: &SteinerSubtree) -> CollapsedWeights {
    let n = g.n();
    let mut attach = vec![usize::MAX; n];
    // The shallowest member; the root reaches T1 through it.
    let top = t
        .order()
        .iter()
        .copied()
        .find(|&v| t1.member[v])
        .expect("non-empty subtree");
    let mut wprime = vec![0u64; n];
    for &v in t.order() {
        let a = if t1.member[v] {
            v
        } else if v == t.root() {
            top
        } else {
            let p = t.parent(v);
            if t1.member[p] {
                p
            } else {
                attach[p]
            }
        };
        attach[v] = a;
        wprime[a] += g.weight(v);
    }
    CollapsedWeights { wprime, attach }
}
