//! Rooted spanning trees and weighted tree centroids.

use std::collections::VecDeque;

use thiserror::Error;

use crate::graph::{Graph, VertexId};

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum TreeError {
    #[error("graph is disconnected")]
    Disconnected,
    #[error("empty tree")]
    EmptyTree,
    #[error("vertex set does not induce a tree")]
    NotATree,
    #[error("parent array does not describe a tree rooted at {0}")]
    BadParents(VertexId),
}

/// Rooted tree over `0..n` in parent form; `parent[root] == root`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpanningTree {
    root: VertexId,
    parent: Vec<VertexId>,
    depth: Vec<usize>,
    /// Top-down order: every vertex after its parent.
    order: Vec<VertexId>,
}

impl SpanningTree {
    /// BFS tree of a connected graph, neighbors taken in ascending order.
    pub fn bfs(g: &Graph, root: VertexId) -> Result<Self, TreeError> {
        let n = g.n();
        let mut parent = vec![usize::MAX; n];
        let mut depth = vec![0; n];
        let mut order = Vec::with_capacity(n);
        let mut queue = VecDeque::new();
        parent[root] = root;
        queue.push_back(root);
        while let Some(v) = queue.pop_front() {
            order.push(v);
            for &w in g.neighbors(v) {
                if parent[w] == usize::MAX {
                    parent[w] = v;
                    depth[w] = depth[v] + 1;
                    queue.push_back(w);
                }
            }
        }
        if order.len() != n {
            return Err(TreeError::Disconnected);
        }
        Ok(SpanningTree {
            root,
            parent,
            depth,
            order,
        })
    }

    /// Tree of a BFS that numbered the vertices in visiting order from 0.
    pub(crate) fn from_bfs_numbering(parent: Vec<VertexId>, depth: Vec<usize>) -> Self {
        SpanningTree {
            root: 0,
            order: (0..parent.len()).collect(),
            parent,
            depth,
        }
    }

    pub fn from_parents(root: VertexId, parent: Vec<VertexId>) -> Result<Self, TreeError> {
        let n = parent.len();
        if root >= n || parent[root] != root || parent.iter().any(|&p| p >= n) {
            return Err(TreeError::BadParents(root));
        }
        let mut children_start = vec![0usize; n + 1];
        for (v, &p) in parent.iter().enumerate() {
            if v != root {
                children_start[p + 1] += 1;
            }
        }
        for i in 0..n {
            children_start[i + 1] += children_start[i];
        }
        let mut fill = children_start.clone();
        let mut children = vec![0; n.saturating_sub(1)];
        for (v, &p) in parent.iter().enumerate() {
            if v != root {
                children[fill[p]] = v;
                fill[p] += 1;
            }
        }
        let mut depth = vec![0; n];
        let mut order = Vec::with_capacity(n);
        order.push(root);
        let mut i = 0;
        while i < order.len() {
            let v = order[i];
            for &c in &children[children_start[v]..children_start[v + 1]] {
                depth[c] = depth[v] + 1;
                order.push(c);
            }
            i += 1;
        }
        if order.len() != n {
            return Err(TreeError::BadParents(root));
        }
        Ok(SpanningTree {
            root,
            parent,
            depth,
            order,
        })
    }

    pub fn root(&self) -> VertexId {
        self.root
    }

    pub fn n(&self) -> usize {
        self.parent.len()
    }

    pub fn parent(&self, v: VertexId) -> VertexId {
        self.parent[v]
    }

    pub fn parents(&self) -> &[VertexId] {
        &self.parent
    }

    pub fn depth(&self, v: VertexId) -> usize {
        self.depth[v]
    }

    pub fn height(&self) -> usize {
        self.depth.iter().copied().max().unwrap_or(0)
    }

    pub fn order(&self) -> &[VertexId] {
        &self.order
    }

    pub fn is_tree_edge(&self, u: VertexId, v: VertexId) -> bool {
        (self.parent[u] == v && u != self.root) || (self.parent[v] == u && v != self.root)
    }

    /// Tree edges as `(min, max)`, sorted.
    pub fn edges(&self) -> Vec<(VertexId, VertexId)> {
        let mut e: Vec<_> = (0..self.n())
            .filter(|&v| v != self.root)
            .map(|v| {
                let p = self.parent[v];
                (v.min(p), v.max(p))
            })
            .collect();
        e.sort_unstable();
        e
    }

    /// Vertices on the tree path from `u` to `v`, `u` first.
    pub fn path(&self, mut u: VertexId, mut v: VertexId) -> Vec<VertexId> {
        let mut head = Vec::new();
        let mut tail = Vec::new();
        while self.depth[u] > self.depth[v] {
            head.push(u);
            u = self.parent[u];
        }
        while self.depth[v] > self.depth[u] {
            tail.push(v);
            v = self.parent[v];
        }
        while u != v {
            head.push(u);
            tail.push(v);
            u = self.parent[u];
            v = self.parent[v];
        }
        head.push(u);
        head.extend(tail.into_iter().rev());
        head
    }

    /// The tree as a standalone graph with the given weights.
    pub fn to_graph(&self, weights: Vec<u64>) -> Graph {
        Graph::from_edges(self.n(), &self.edges(), weights).expect("tree edges are simple")
    }
}

/// Weighted centroid of the tree induced by `members`: a vertex whose removal
/// leaves every piece with at most half of the members' weight. The lowest
/// qualifying ID is returned.
pub fn tree_centroid(g: &Graph, members: &[VertexId]) -> Result<VertexId, TreeError> {
    if members.is_empty() {
        return Err(TreeError::EmptyTree);
    }
    let n = g.n();
    let root = *members.iter().min().unwrap();
    let mut inside = vec![false; n];
    for &v in members {
        inside[v] = true;
    }
    // BFS inside the member set.
    let mut parent = vec![usize::MAX; n];
    let mut order = Vec::with_capacity(members.len());
    let mut edges = 0usize;
    parent[root] = root;
    order.push(root);
    let mut i = 0;
    while i < order.len() {
        let v = order[i];
        for &w in g.neighbors(v) {
            if !inside[w] {
                continue;
            }
            edges += 1;
            if parent[w] == usize::MAX {
                parent[w] = v;
                order.push(w);
            }
        }
        i += 1;
    }
    let distinct = {
        let mut m = members.to_vec();
        m.sort_unstable();
        m.dedup();
        m.len()
    };
    if order.len() != distinct || edges / 2 + 1 != distinct {
        return Err(TreeError::NotATree);
    }
    let total: u64 = order.iter().map(|&v| g.weight(v)).sum();
    let mut sub = vec![0u64; n];
    let mut heaviest_child = vec![0u64; n];
    for &v in order.iter().rev() {
        sub[v] += g.weight(v);
        if v != root {
            let p = parent[v];
            sub[p] += sub[v];
            heaviest_child[p] = heaviest_child[p].max(sub[v]);
        }
    }
    order
        .iter()
        .copied()
        .filter(|&v| {
            let piece = heaviest_child[v].max(total - sub[v]);
            2 * piece as u128 <= total as u128
        })
        .min()
        .ok_or(TreeError::NotATree)
}
