//! Vertex-weighted undirected simple graphs and the separator verifier.

use std::borrow::Cow;
use std::collections::VecDeque;

use num_rational::Ratio;
use thiserror::Error;

pub type VertexId = usize;

/// Balance parameter: every component left after removing a separator must
/// weigh at most `beta * W`.
pub type Beta = Ratio<u64>;

pub fn default_beta() -> Beta {
    Ratio::new_raw(2, 3)
}

/// `part <= beta * total`, exactly.
#[inline]
pub fn within(part: u64, beta: Beta, total: u64) -> bool {
    (part as u128) * (*beta.denom() as u128) <= (*beta.numer() as u128) * (total as u128)
}

/// `a/b` or a decimal such as `0.75`, kept exact.
pub fn parse_ratio(s: &str) -> Result<Beta, String> {
    let s = s.trim();
    let bad = || format!("`{s}` is not a fraction like 2/3 or 0.75");
    if let Some((a, b)) = s.split_once('/') {
        let a: u64 = a.trim().parse().map_err(|_| bad())?;
        let b: u64 = b.trim().parse().map_err(|_| bad())?;
        if b == 0 {
            return Err(bad());
        }
        return Ok(Beta::new(a, b));
    }
    let (int, frac) = s.split_once('.').unwrap_or((s, ""));
    if int.is_empty() && frac.is_empty() || frac.len() > 18 {
        return Err(bad());
    }
    let digits = format!("{int}{frac}");
    if !digits.chars().all(|c| c.is_ascii_digit()) {
        return Err(bad());
    }
    let num: u64 = digits.parse().map_err(|_| bad())?;
    Ok(Beta::new(num, 10u64.pow(frac.len() as u32)))
}

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(VertexId, VertexId),
    #[error("self-loop at vertex {0}")]
    SelfLoop(VertexId),
    #[error("vertex id {id} out of range for n = {n}")]
    BadVertexId { id: VertexId, n: usize },
    #[error("total vertex weight overflows 64 bits")]
    Overflow,
    #[error("expected {expected} weights, got {got}")]
    WeightCount { expected: usize, got: usize },
}

/// Unordered vertex pairs, stored as `(min, max)`.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct EdgeSet {
    edges: Vec<(VertexId, VertexId)>,
}

impl EdgeSet {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn from_pairs<I: IntoIterator<Item = (VertexId, VertexId)>>(pairs: I) -> Self {
        EdgeSet {
            edges: pairs
                .into_iter()
                .map(|(u, v)| if u <= v { (u, v) } else { (v, u) })
                .collect(),
        }
    }

    pub fn push(&mut self, u: VertexId, v: VertexId) {
        self.edges.push(if u <= v { (u, v) } else { (v, u) });
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (VertexId, VertexId)> + '_ {
        self.edges.iter().copied()
    }

    pub fn as_slice(&self) -> &[(VertexId, VertexId)] {
        &self.edges
    }

    /// Distinct endpoints in ascending order.
    pub fn endpoints(&self) -> Vec<VertexId> {
        let mut vs: Vec<VertexId> = self.edges.iter().flat_map(|&(u, v)| [u, v]).collect();
        vs.sort_unstable();
        vs.dedup();
        vs
    }
}

impl FromIterator<(VertexId, VertexId)> for EdgeSet {
    fn from_iter<I: IntoIterator<Item = (VertexId, VertexId)>>(iter: I) -> Self {
        EdgeSet::from_pairs(iter)
    }
}

/// Immutable simple graph in compressed adjacency form. Neighbor lists are
/// sorted ascending, which every traversal relies on for lowest-ID-first
/// determinism.
/// Renumbered graph, original ids, BFS parents and BFS depths.
pub(crate) type Renumbered<'a> = (Cow<'a, Graph>, Vec<VertexId>, Vec<VertexId>, Vec<usize>);

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    offsets: Vec<usize>,
    targets: Vec<VertexId>,
    weights: Vec<u64>,
    total_weight: u64,
}

impl Graph {
    pub fn new(n: usize, edges: &EdgeSet, weights: Vec<u64>) -> Result<Self, GraphError> {
        Self::from_edges(n, edges.as_slice(), weights)
    }

    pub fn from_edges(
        n: usize,
        edges: &[(VertexId, VertexId)],
        weights: Vec<u64>,
    ) -> Result<Self, GraphError> {
        if weights.len() != n {
            return Err(GraphError::WeightCount {
                expected: n,
                got: weights.len(),
            });
        }
        let mut total_weight: u64 = 0;
        for &w in &weights {
            total_weight = total_weight.checked_add(w).ok_or(GraphError::Overflow)?;
        }
        let mut degree = vec![0usize; n];
        for &(u, v) in edges {
            for id in [u, v] {
                if id >= n {
                    return Err(GraphError::BadVertexId { id, n });
                }
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            degree[u] += 1;
            degree[v] += 1;
        }
        let mut offsets = Vec::with_capacity(n + 1);
        offsets.push(0);
        for d in &degree {
            offsets.push(offsets.last().unwrap() + d);
        }
        let mut fill = offsets[..n].to_vec();
        let mut targets = vec![0; 2 * edges.len()];
        for &(u, v) in edges {
            targets[fill[u]] = v;
            fill[u] += 1;
            targets[fill[v]] = u;
            fill[v] += 1;
        }
        for v in 0..n {
            let adj = &mut targets[offsets[v]..offsets[v + 1]];
            adj.sort_unstable();
            if let Some(w) = adj.windows(2).find(|p| p[0] == p[1]) {
                let (a, b) = (v.min(w[0]), v.max(w[0]));
                return Err(GraphError::DuplicateEdge(a, b));
            }
        }
        Ok(Graph {
            offsets,
            targets,
            weights,
            total_weight,
        })
    }

    pub fn unit(n: usize, edges: &[(VertexId, VertexId)]) -> Result<Self, GraphError> {
        Self::from_edges(n, edges, vec![1; n])
    }

    /// Same topology, new weights.
    pub fn with_weights(&self, weights: Vec<u64>) -> Result<Self, GraphError> {
        if weights.len() != self.n() {
            return Err(GraphError::WeightCount {
                expected: self.n(),
                got: weights.len(),
            });
        }
        let mut total_weight: u64 = 0;
        for &w in &weights {
            total_weight = total_weight.checked_add(w).ok_or(GraphError::Overflow)?;
        }
        Ok(Graph {
            offsets: self.offsets.clone(),
            targets: self.targets.clone(),
            weights,
            total_weight,
        })
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.weights.len()
    }

    #[inline]
    pub fn m(&self) -> usize {
        self.targets.len() / 2
    }

    /// `m - n`; `-1` for a tree.
    pub fn excess(&self) -> i64 {
        self.m() as i64 - self.n() as i64
    }

    #[inline]
    pub fn neighbors(&self, v: VertexId) -> &[VertexId] {
        &self.targets[self.offsets[v]..self.offsets[v + 1]]
    }

    #[inline]
    pub fn degree(&self, v: VertexId) -> usize {
        self.offsets[v + 1] - self.offsets[v]
    }

    #[inline]
    pub fn weight(&self, v: VertexId) -> u64 {
        self.weights[v]
    }

    pub fn weights(&self) -> &[u64] {
        &self.weights
    }

    pub fn total_weight(&self) -> u64 {
        self.total_weight
    }

    pub fn has_edge(&self, u: VertexId, v: VertexId) -> bool {
        self.neighbors(u).binary_search(&v).is_ok()
    }

    /// Position of `v`'s neighbor list in the flat adjacency array.
    #[inline]
    pub(crate) fn adjacency_start(&self, v: VertexId) -> usize {
        self.offsets[v]
    }

    /// Index of `v` inside `u`'s neighbor slice.
    #[inline]
    pub fn slot(&self, u: VertexId, v: VertexId) -> Option<usize> {
        self.neighbors(u).binary_search(&v).ok()
    }

    /// Every edge once, as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (VertexId, VertexId)> + '_ {
        (0..self.n()).flat_map(move |u| {
            self.neighbors(u)
                .iter()
                .copied()
                .filter(move |&v| v > u)
                .map(move |v| (u, v))
        })
    }

    pub fn edge_set(&self) -> EdgeSet {
        EdgeSet {
            edges: self.edges().collect(),
        }
    }

    /// Subgraph induced by `vertices`; vertex `i` of the result is
    /// `vertices[i]` of `self`.
    pub fn induced(&self, vertices: &[VertexId]) -> Graph {
        let mut local = vec![usize::MAX; self.n()];
        for (i, &v) in vertices.iter().enumerate() {
            local[v] = i;
        }
        let mut edges = Vec::new();
        for (i, &v) in vertices.iter().enumerate() {
            for &w in self.neighbors(v) {
                let j = local[w];
                if j != usize::MAX && i < j {
                    edges.push((i, j));
                }
            }
        }
        let weights = vertices.iter().map(|&v| self.weights[v]).collect();
        // Subgraph of a valid graph: no validation failure possible.
        Graph::from_edges(vertices.len(), &edges, weights).expect("induced subgraph")
    }

    /// Same graph renumbered in BFS order from `root`, with the original id
    /// of every new vertex and the BFS tree in new ids as parent and depth
    /// arrays. `None` when disconnected.
    pub(crate) fn bfs_renumbered(&self, root: VertexId) -> Option<Renumbered<'_>> {
        let n = self.n();
        let mut rank = vec![u32::MAX; n];
        let mut order: Vec<VertexId> = Vec::with_capacity(n);
        let mut parent: Vec<VertexId> = Vec::with_capacity(n);
        let mut depth: Vec<usize> = Vec::with_capacity(n);
        rank[root] = 0;
        order.push(root);
        parent.push(0);
        depth.push(0);
        let mut head = 0;
        while head < order.len() {
            let v = order[head];
            for &w in self.neighbors(v) {
                if rank[w] == u32::MAX {
                    rank[w] = order.len() as u32;
                    order.push(w);
                    parent.push(head);
                    depth.push(depth[head] + 1);
                }
            }
            head += 1;
        }
        if order.len() != n {
            return None;
        }
        if order.iter().enumerate().all(|(i, &v)| i == v) {
            return Some((Cow::Borrowed(self), order, parent, depth));
        }
        let mut offsets = Vec::with_capacity(n + 1);
        let mut targets = Vec::with_capacity(self.targets.len());
        offsets.push(0);
        for &v in &order {
            let start = targets.len();
            targets.extend(self.neighbors(v).iter().map(|&w| rank[w] as usize));
            targets[start..].sort_unstable();
            offsets.push(targets.len());
        }
        let h = Graph {
            offsets,
            targets,
            weights: order.iter().map(|&v| self.weights[v]).collect(),
            total_weight: self.total_weight,
        };
        Some((Cow::Owned(h), order, parent, depth))
    }

    pub fn is_connected(&self) -> bool {
        self.n() == 0 || connected_components(self).count == 1
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Components {
    /// Component id per vertex; `usize::MAX` for removed vertices.
    pub label: Vec<usize>,
    pub count: usize,
    pub weight: Vec<u64>,
    pub size: Vec<usize>,
    /// Number of edges with both ends inside each component.
    pub edges: Vec<usize>,
}

impl Components {
    pub fn members(&self, c: usize) -> Vec<VertexId> {
        (0..self.label.len())
            .filter(|&v| self.label[v] == c)
            .collect()
    }

    pub fn heaviest(&self) -> Option<usize> {
        // Lowest component id wins ties; ids follow the lowest member vertex.
        (0..self.count).max_by(|&a, &b| self.weight[a].cmp(&self.weight[b]).then(b.cmp(&a)))
    }

    pub fn is_tree(&self, c: usize) -> bool {
        self.edges[c] + 1 == self.size[c]
    }
}

pub fn connected_components(g: &Graph) -> Components {
    components_without(g, &vec![false; g.n()])
}

/// Components of `g` minus the vertices flagged in `removed`.
pub fn components_without(g: &Graph, removed: &[bool]) -> Components {
    let n = g.n();
    let mut label = vec![usize::MAX; n];
    let mut weight = Vec::new();
    let mut size = Vec::new();
    let mut edges = Vec::new();
    let mut queue = VecDeque::new();
    for s in 0..n {
        if removed[s] || label[s] != usize::MAX {
            continue;
        }
        let c = weight.len();
        let (mut w, mut sz, mut deg) = (0u64, 0usize, 0usize);
        label[s] = c;
        queue.push_back(s);
        while let Some(v) = queue.pop_front() {
            w += g.weight(v);
            sz += 1;
            for &u in g.neighbors(v) {
                if removed[u] {
                    continue;
                }
                deg += 1;
                if label[u] == usize::MAX {
                    label[u] = c;
                    queue.push_back(u);
                }
            }
        }
        weight.push(w);
        size.push(sz);
        edges.push(deg / 2);
    }
    Components {
        label,
        count: weight.len(),
        weight,
        size,
        edges,
    }
}

pub fn removal_mask(n: usize, vertices: &[VertexId]) -> Vec<bool> {
    let mut mask = vec![false; n];
    for &v in vertices {
        mask[v] = true;
    }
    mask
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerifyReport {
    pub separator_size: usize,
    pub separator_weight: u64,
    /// Component weights of `G - S`, in order of their lowest vertex.
    pub component_weights: Vec<u64>,
    pub max_component_weight: u64,
    pub total_weight: u64,
    pub beta: Beta,
    pub passed: bool,
}

impl VerifyReport {
    pub fn max_fraction(&self) -> f64 {
        if self.total_weight == 0 {
            0.0
        } else {
            self.max_component_weight as f64 / self.total_weight as f64
        }
    }
}

/// Checks that every component of `G - S` weighs at most `beta * W`, where
/// `W` is the weight of all of `G` (separator included).
pub fn verify_separator(g: &Graph, separator: &[VertexId], beta: Beta) -> VerifyReport {
    let mask = removal_mask(g.n(), separator);
    let comps = components_without(g, &mask);
    let max = comps.weight.iter().copied().max().unwrap_or(0);
    let separator_weight = (0..g.n()).filter(|&v| mask[v]).map(|v| g.weight(v)).sum();
    VerifyReport {
        separator_size: mask.iter().filter(|&&b| b).count(),
        separator_weight,
        component_weights: comps.weight,
        max_component_weight: max,
        total_weight: g.total_weight(),
        beta,
        passed: within(max, beta, g.total_weight()),
    }
}

pub(crate) struct DisjointSets {
    parent: Vec<usize>,
    weight: Vec<u64>,
}

impl DisjointSets {
    pub(crate) fn new(weights: Vec<u64>) -> Self {
        DisjointSets {
            parent: (0..weights.len()).collect(),
            weight: weights,
        }
    }

    pub(crate) fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    pub(crate) fn weight(&mut self, x: usize) -> u64 {
        let r = self.find(x);
        self.weight[r]
    }

    pub(crate) fn union(&mut self, a: usize, b: usize) -> usize {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return ra;
        }
        let (keep, gone) = if ra < rb { (ra, rb) } else { (rb, ra) };
        self.parent[gone] = keep;
        self.weight[keep] += self.weight[gone];
        keep
    }
}

/// Drops separator vertices that are not needed for balance. A vertex is put
/// back when the component it would merge stays within `beta * W`. Vertices
/// are tried in ascending ID order; the result is still a valid separator
/// whenever the input was.
pub fn prune_separator(g: &Graph, separator: &[VertexId], beta: Beta) -> Vec<VertexId> {
    prune_with_max(g, separator, beta).0
}

/// [`prune_separator`] plus the heaviest component weight of the result.
pub(crate) fn prune_with_max(
    g: &Graph,
    separator: &[VertexId],
    beta: Beta,
) -> (Vec<VertexId>, u64) {
    let comps = components_without(g, &removal_mask(g.n(), separator));
    prune_given(g, separator, beta, comps)
}

/// Pruning with the components of `G - separator` already at hand.
pub(crate) fn prune_given(
    g: &Graph,
    separator: &[VertexId],
    beta: Beta,
    comps: Components,
) -> (Vec<VertexId>, u64) {
    let n = g.n();
    let mut removed = removal_mask(n, separator);
    let mut label = comps.label;
    let mut sets = DisjointSets::new(comps.weight);
    let total = g.total_weight();
    let mut order: Vec<VertexId> = separator.to_vec();
    order.sort_unstable();
    order.dedup();
    let mut roots = Vec::new();
    for &s in &order {
        roots.clear();
        let mut merged = g.weight(s);
        for &u in g.neighbors(s) {
            if removed[u] {
                continue;
            }
            let r = sets.find(label[u]);
            if !roots.contains(&r) {
                roots.push(r);
                merged += sets.weight(r);
            }
        }
        if !within(merged, beta, total) {
            continue;
        }
        removed[s] = false;
        let id = match roots.first() {
            Some(&r) => {
                let mut keep = r;
                for &r2 in &roots[1..] {
                    keep = sets.union(keep, r2);
                }
                let keep = sets.find(keep);
                sets.weight[keep] += g.weight(s);
                keep
            }
            None => {
                sets.parent.push(sets.parent.len());
                sets.weight.push(g.weight(s));
                sets.parent.len() - 1
            }
        };
        label[s] = id;
    }
    let heaviest = (0..sets.parent.len())
        .filter(|&i| sets.parent[i] == i)
        .map(|i| sets.weight[i])
        .max()
        .unwrap_or(0);
    ((0..n).filter(|&v| removed[v]).collect(), heaviest)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> Graph {
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::unit(n, &edges).unwrap()
    }

    #[test]
    fn triangle_has_zero_excess() {
        let g = Graph::unit(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        assert_eq!(g.excess(), 0);
        assert_eq!(g.m(), 3);
    }

    #[test]
    fn tree_has_negative_excess() {
        let g = Graph::unit(5, &[(0, 1), (1, 2), (2, 3), (3, 4)]).unwrap();
        assert_eq!(g.excess(), -1);
    }

    #[test]
    fn construction_errors() {
        assert_eq!(
            Graph::unit(3, &[(0, 1), (0, 1), (1, 2)]),
            Err(GraphError::DuplicateEdge(0, 1))
        );
        assert_eq!(
            Graph::unit(3, &[(0, 1), (1, 0)]),
            Err(GraphError::DuplicateEdge(0, 1))
        );
        assert_eq!(Graph::unit(3, &[(1, 1)]), Err(GraphError::SelfLoop(1)));
        assert_eq!(
            Graph::unit(3, &[(0, 3)]),
            Err(GraphError::BadVertexId { id: 3, n: 3 })
        );
        assert_eq!(
            Graph::from_edges(2, &[(0, 1)], vec![u64::MAX, 1]),
            Err(GraphError::Overflow)
        );
    }

    #[test]
    fn adjacency_is_symmetric_and_sorted() {
        let g = Graph::unit(4, &[(3, 0), (2, 0), (1, 0), (1, 2)]).unwrap();
        assert_eq!(g.neighbors(0), &[1, 2, 3]);
        for (u, v) in g.edges() {
            assert!(g.has_edge(v, u));
        }
    }

    #[test]
    fn components_examples() {
        let path = Graph::unit(3, &[(0, 1), (1, 2)]).unwrap();
        assert_eq!(connected_components(&path).count, 1);
        let empty = Graph::unit(3, &[]).unwrap();
        assert_eq!(connected_components(&empty).count, 3);
        let c6 = cycle(6);
        let comps = components_without(&c6, &removal_mask(6, &[0, 3]));
        assert_eq!(comps.count, 2);
        assert_eq!(comps.members(0), vec![1, 2]);
        assert_eq!(comps.members(1), vec![4, 5]);
    }

    #[test]
    fn verify_examples() {
        let path = Graph::unit(3, &[(0, 1), (1, 2)]).unwrap();
        let rep = verify_separator(&path, &[1], default_beta());
        assert!(rep.passed);
        assert_eq!(rep.component_weights, vec![1, 1]);

        let c6 = cycle(6);
        let rep = verify_separator(&c6, &[0], default_beta());
        assert!(!rep.passed);
        assert_eq!(rep.max_component_weight, 5);

        let rep = verify_separator(&c6, &[0, 3], default_beta());
        assert!(rep.passed);
        assert_eq!(rep.component_weights, vec![2, 2]);
    }

    #[test]
    fn verify_empty_separator_matches_heaviest_component() {
        let g = Graph::unit(5, &[(0, 1), (2, 3)]).unwrap();
        let rep = verify_separator(&g, &[], default_beta());
        assert_eq!(rep.max_component_weight, 2);
        assert!(rep.passed);
    }

    #[test]
    fn prune_drops_redundant_vertices() {
        let c6 = cycle(6);
        let pruned = prune_separator(&c6, &[0, 1, 3, 4], default_beta());
        assert!(verify_separator(&c6, &pruned, default_beta()).passed);
        assert!(pruned.len() <= 3);
        assert_eq!(prune_separator(&c6, &[0, 3], default_beta()), vec![0, 3]);
    }

    #[test]
    fn within_is_exact() {
        assert!(within(4, default_beta(), 6));
        assert!(!within(5, default_beta(), 7));
        assert!(within(u64::MAX / 2, Ratio::new(1, 2), u64::MAX - 1));
    }

    mod props {
        use super::*;
        use crate::gen::{near_tree_planar, GenSpec, WeightMode};
        use proptest::prelude::*;

        fn weighted_near_tree() -> impl Strategy<Value = Graph> {
            (1usize..40, -1i64..6, any::<u64>()).prop_filter_map("infeasible", |(n, r, seed)| {
                let weight_mode = WeightMode::UniformRandom { lo: 0, hi: 5 };
                near_tree_planar(&GenSpec {
                    n,
                    r,
                    seed,
                    weight_mode,
                })
                .ok()
            })
        }

        proptest! {
            #[test]
            fn pruning_keeps_a_balanced_subset(
                g in weighted_near_tree(),
                picks in proptest::collection::vec(any::<prop::sample::Index>(), 0..12),
            ) {
                let s: Vec<VertexId> = picks.iter().map(|i| i.index(g.n())).collect();
                let before = verify_separator(&g, &s, default_beta()).passed;
                let pruned = prune_separator(&g, &s, default_beta());
                prop_assert!(pruned.iter().all(|v| s.contains(v)));
                if before {
                    prop_assert!(verify_separator(&g, &pruned, default_beta()).passed);
                }
            }

            #[test]
            fn renumbering_is_an_isomorphism(g in weighted_near_tree()) {
                let (h, orig, parent, depth) = g.bfs_renumbered(0).unwrap();
                prop_assert_eq!(h.m(), g.m());
                prop_assert_eq!(h.total_weight(), g.total_weight());
                for (a, b) in h.edges() {
                    prop_assert!(g.has_edge(orig[a], orig[b]));
                }
                for v in 0..h.n() {
                    prop_assert_eq!(h.weight(v), g.weight(orig[v]));
                    prop_assert!(parent[v] <= v);
                    if v > 0 {
                        prop_assert!(h.has_edge(v, parent[v]));
                        prop_assert_eq!(depth[v], depth[parent[v]] + 1);
                    }
                }
            }

            #[test]
            fn components_partition_the_rest(
                g in weighted_near_tree(),
                picks in proptest::collection::vec(any::<prop::sample::Index>(), 0..6),
            ) {
                let s: Vec<VertexId> = picks.iter().map(|i| i.index(g.n())).collect();
                let mask = removal_mask(g.n(), &s);
                let c = components_without(&g, &mask);
                let kept = mask.iter().filter(|&&m| !m).count();
                prop_assert_eq!(c.size.iter().sum::<usize>(), kept);
                let removed_weight: u64 = (0..g.n()).filter(|&v| mask[v]).map(|v| g.weight(v)).sum();
                prop_assert_eq!(c.weight.iter().sum::<u64>() + removed_weight, g.total_weight());
                for (u, v) in g.edges() {
                    if !mask[u] && !mask[v] {
                        prop_assert_eq!(c.label[u], c.label[v]);
                    }
                }
            }
        }
    }
}
