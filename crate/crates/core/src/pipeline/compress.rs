//! The compressed graph on `U` and lifting its separators back to `G`.

use std::collections::HashSet;

use crate::graph::{EdgeSet, Graph, VertexId};

use super::stages::{BranchSet, CollapsedWeights, PathDecomposition};

/// One subdivision node: a path of the decomposition with its interior.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PathNode {
    pub start: VertexId,
    pub end: VertexId,
    pub interior: Vec<VertexId>,
    /// `prefix[i]` is the collapsed weight of `interior[..i]`.
    pub prefix: Vec<u64>,
}

impl PathNode {
    pub fn weight(&self) -> u64 {
        *self.prefix.last().unwrap_or(&0)
    }

    /// Index of the interior vertex whose removal leaves the lighter
    /// heavier side; ties go to the lower index.
    pub fn median_cut(&self) -> Option<usize> {
        weighted_median(&self.prefix)
    }
}

/// Given prefix sums `p` of `k` items (`p.len() == k + 1`), the index `i`
/// minimizing `max(p[i], p[k] - p[i + 1])`, lowest on ties.
pub(crate) fn weighted_median(prefix: &[u64]) -> Option<usize> {
    let k = prefix.len().checked_sub(1)?;
    let total = prefix[k];
    (0..k).min_by_key(|&i| prefix[i].max(total - prefix[i + 1]))
}

/// Nodes `0..u.len()` are the branch vertices in ascending order; node
/// `u.len() + j` subdivides path `j`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CompressedGraph {
    pub graph: Graph,
    pub u_nodes: Vec<VertexId>,
    pub paths: Vec<PathNode>,
    /// Parallel edges merged while building `graph`.
    pub parallel_edges: usize,
}

impl CompressedGraph {
    pub fn node_count(&self) -> usize {
        self.graph.n()
    }

    /// Original vertex of a branch node, or `None` for a subdivision node.
    pub fn original(&self, node: usize) -> Option<VertexId> {
        self.u_nodes.get(node).copied()
    }

    pub fn path_of(&self, node: usize) -> Option<&PathNode> {
        node.checked_sub(self.u_nodes.len())
            .and_then(|j| self.paths.get(j))
    }
}

pub fn build_compressed_graph(
    u: &BranchSet,
    pi: &PathDecomposition,
    r: &EdgeSet,
    cw: &CollapsedWeights,
) -> CompressedGraph {
    let k = u.len();
    let node_of = |v: VertexId| {
        u.members
            .binary_search(&v)
            .expect("endpoint belongs to the branch set")
    };
    let mut weights: Vec<u64> = u.members.iter().map(|&v| cw.wprime[v]).collect();
    let mut paths = Vec::with_capacity(pi.len());
    let mut edges = Vec::with_capacity(2 * pi.len() + r.len());
    let mut seen = HashSet::new();
    let mut parallel = 0;
    let mut push = |a: usize, b: usize, edges: &mut Vec<(usize, usize)>| {
        if seen.insert((a.min(b), a.max(b))) {
            edges.push((a, b));
        } else {
            parallel += 1;
        }
    };
    for (j, p) in pi.paths.iter().enumerate() {
        let interior = p[1..p.len() - 1].to_vec();
        let mut prefix = Vec::with_capacity(interior.len() + 1);
        prefix.push(0u64);
        for &v in &interior {
            prefix.push(prefix.last().unwrap() + cw.wprime[v]);
        }
        let node = k + j;
        push(node_of(p[0]), node, &mut edges);
        push(node, node_of(p[p.len() - 1]), &mut edges);
        weights.push(*prefix.last().unwrap());
        paths.push(PathNode {
            start: p[0],
            end: p[p.len() - 1],
            interior,
            prefix,
        });
    }
    for (a, b) in r.iter() {
        push(node_of(a), node_of(b), &mut edges);
    }
    let graph = Graph::from_edges(k + pi.len(), &edges, weights).expect("deduplicated edges");
    CompressedGraph {
        graph,
        u_nodes: u.members.clone(),
        paths,
        parallel_edges: parallel,
    }
}

/// Maps a separator of the compressed graph to vertices of `G`. Branch
/// nodes map to themselves and a subdivision node to the weighted median
/// of its path interior. A subdivision node of an interior-free path adds
/// nothing when an endpoint is already chosen, and its lower endpoint
/// otherwise.
pub fn lift_separator(sc: &[usize], c: &CompressedGraph) -> Vec<VertexId> {
    let mut out: Vec<VertexId> = sc.iter().filter_map(|&x| c.original(x)).collect();
    let mut chosen: HashSet<VertexId> = out.iter().copied().collect();
    let mut nodes: Vec<usize> = sc.to_vec();
    nodes.sort_unstable();
    for x in nodes {
        let Some(p) = c.path_of(x) else { continue };
        let v = match p.median_cut() {
            Some(i) => p.interior[i],
            None => {
                if chosen.contains(&p.start) || chosen.contains(&p.end) {
                    continue;
                }
                p.start.min(p.end)
            }
        };
        if chosen.insert(v) {
            out.push(v);
        }
    }
    out.sort_unstable();
    out.dedup();
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pipeline::stages::*;

    #[test]
    fn median_cut_example() {
        // interior weights 1, 1, 5, 1
        assert_eq!(weighted_median(&[0, 1, 2, 7, 8]), Some(2));
        assert_eq!(weighted_median(&[0]), None);
        assert_eq!(weighted_median(&[0, 3]), Some(0));
        // all zero: lowest index
        assert_eq!(weighted_median(&[0, 0, 0]), Some(0));
    }

    fn build(g: &Graph) -> CompressedGraph {
        let t = compute_spanning_tree(g, 0).unwrap();
        let r = extra_edges(g, &t);
        let terms = r.endpoints();
        let t1 = steiner_subtree(&t, &terms).unwrap();
        let u = branch_vertices(&t1, &terms);
        let pi = decompose_paths(&t1, &u);
        let cw = collapse_weights(g, &t, &t1);
        build_compressed_graph(&u, &pi, &r, &cw)
    }

    #[test]
    fn triangle_compresses_to_three_nodes() {
        let g = Graph::unit(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        let c = build(&g);
        assert_eq!(c.u_nodes, vec![1, 2]);
        assert_eq!(c.node_count(), 3);
        assert_eq!(c.graph.total_weight(), 3);
        assert_eq!(c.paths[0].interior, vec![0]);
    }

    #[test]
    fn theta_graph_conserves_weight() {
        let mut e: Vec<_> = (0..8).map(|i| (i, (i + 1) % 8)).collect();
        e.push((0, 4));
        let g = Graph::unit(8, &e).unwrap();
        let c = build(&g);
        assert_eq!(c.graph.total_weight(), 8);
        assert_eq!(c.paths.len(), c.u_nodes.len() - 1);
        assert_eq!(c.parallel_edges, 0);
    }

    #[test]
    fn adjacent_branch_vertices_give_weightless_node() {
        let k4ish = Graph::unit(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (2, 3)]).unwrap();
        let c = build(&k4ish);
        let empty: Vec<_> = c.paths.iter().filter(|p| p.interior.is_empty()).collect();
        assert!(!empty.is_empty());
        assert!(empty.iter().all(|p| p.weight() == 0));
    }

    #[test]
    fn lifting_rules() {
        let g = Graph::unit(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        let c = build(&g);
        assert_eq!(lift_separator(&[], &c), Vec::<VertexId>::new());
        assert_eq!(lift_separator(&[0, 1], &c), vec![1, 2]);
        assert_eq!(lift_separator(&[2], &c), vec![0]);
        let k4ish = Graph::unit(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (2, 3)]).unwrap();
        let c = build(&k4ish);
        let (j, p) = c
            .paths
            .iter()
            .enumerate()
            .find(|(_, p)| p.interior.is_empty())
            .unwrap();
        let node = c.u_nodes.len() + j;
        assert_eq!(lift_separator(&[node], &c), vec![p.start.min(p.end)]);
        let start_node = c.u_nodes.binary_search(&p.start).unwrap();
        assert_eq!(lift_separator(&[start_node, node], &c), vec![p.start]);
    }
}
