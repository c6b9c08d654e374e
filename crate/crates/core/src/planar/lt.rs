//! Vertex-weighted planar separator from BFS levels and a fundamental cycle.
//!
//! For each candidate BFS root two separators are built and the smaller one
//! (after pruning) wins:
//!
//! * a *band* cut: the pair of BFS levels of smallest total size whose
//!   removal leaves the parts below, between and above them light enough;
//! * the classic construction: median level `l1`, cheap bounding levels
//!   `l0 <= l1 < l2`, and when the band between them is still too heavy a
//!   fundamental cycle of the triangulated band, with every level at or below
//!   `l0` contracted into one vertex.

use std::collections::VecDeque;

use crate::graph::{
    components_without, connected_components, default_beta, prune_separator, removal_mask, Graph,
    VertexId,
};
use crate::oracle::min_balanced_separator;
use crate::tree::{tree_centroid, SpanningTree};

use super::embed::planar_embed;
use super::rotation::RotationSystem;
use super::PlanarError;

/// BFS layering from one root.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Levels {
    pub root: VertexId,
    /// Distance from the root; `usize::MAX` for unreachable vertices.
    pub level: Vec<usize>,
    pub sizes: Vec<usize>,
    pub weights: Vec<u64>,
    /// BFS parent; the root is its own parent.
    pub parent: Vec<VertexId>,
    pub order: Vec<VertexId>,
}

impl Levels {
    pub fn height(&self) -> usize {
        self.sizes.len().saturating_sub(1)
    }
}

pub fn bfs_levels(g: &Graph, root: VertexId) -> Levels {
    let n = g.n();
    let mut level = vec![usize::MAX; n];
    let mut parent = vec![usize::MAX; n];
    let mut order = Vec::with_capacity(n);
    let mut sizes = Vec::new();
    let mut weights = Vec::new();
    let mut queue = VecDeque::new();
    level[root] = 0;
    parent[root] = root;
    queue.push_back(root);
    while let Some(v) = queue.pop_front() {
        order.push(v);
        let l = level[v];
        if l == sizes.len() {
            sizes.push(0);
            weights.push(0);
        }
        sizes[l] += 1;
        weights[l] += g.weight(v);
        for &w in g.neighbors(v) {
            if level[w] == usize::MAX {
                level[w] = l + 1;
                parent[w] = v;
                queue.push_back(w);
            }
        }
    }
    Levels {
        root,
        level,
        sizes,
        weights,
        parent,
        order,
    }
}

/// The BFS levels behind a separator. `l0`/`l2` are `None` when the virtual
/// level below the root or above the last level was chosen.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LevelInfo {
    pub root: VertexId,
    pub l0: Option<usize>,
    pub l1: usize,
    pub l2: Option<usize>,
    pub level_sizes: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CycleInfo {
    /// The non-tree edge closing the cycle, in the band's local numbering.
    pub edge: (VertexId, VertexId),
    pub length: usize,
    pub inside_weight: u64,
    pub outside_weight: u64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LtSeparator {
    /// Sorted vertex ids of the input graph.
    pub vertices: Vec<VertexId>,
    pub level_info: Option<LevelInfo>,
    pub cycle_info: Option<CycleInfo>,
}

impl LtSeparator {
    fn plain(vertices: Vec<VertexId>) -> Self {
        LtSeparator {
            vertices,
            level_info: None,
            cycle_info: None,
        }
    }
}

#[derive(Debug, Clone, Copy, Default)]
pub struct LtOptions {
    /// Use the exhaustive minimum for graphs with at most 18 vertices.
    pub small_exact: bool,
}

const SMALL_EXACT_LIMIT: usize = 18;

pub fn lt_separator(g: &Graph) -> Result<LtSeparator, PlanarError> {
    lt_separator_with(g, LtOptions::default())
}

pub fn lt_separator_with(g: &Graph, opts: LtOptions) -> Result<LtSeparator, PlanarError> {
    let total = g.total_weight();
    if total == 0 {
        return Err(PlanarError::ZeroTotalWeight);
    }
    let limit = two_thirds(total);
    if opts.small_exact && g.n() <= SMALL_EXACT_LIMIT {
        planar_embed(g)?;
        let res = min_balanced_separator(g, default_beta(), g.n())
            .expect("size checked against the oracle cap");
        return Ok(LtSeparator::plain(res.witness));
    }
    separate_balanced(g, limit)
}

/// Planar separator leaving every component of `g` at most `limit`.
pub(crate) fn separate_balanced(g: &Graph, limit: u64) -> Result<LtSeparator, PlanarError> {
    planar_embed(g)?;
    let mut sep = separate_within(g, limit)?;
    // Guard: separate any piece still above the limit.
    loop {
        let mask = removal_mask(g.n(), &sep.vertices);
        let comps = components_without(g, &mask);
        let Some(c) = comps.heaviest() else { break };
        if comps.weight[c] <= limit {
            break;
        }
        let members = comps.members(c);
        let sub = g.induced(&members);
        let extra = separate_within(&sub, limit)?;
        sep.vertices
            .extend(extra.vertices.iter().map(|&v| members[v]));
        sep.vertices.sort_unstable();
        sep.vertices.dedup();
    }
    Ok(sep)
}

/// Largest integer weight within two thirds of `total`.
fn two_thirds(total: u64) -> u64 {
    ((total as u128 * 2) / 3) as u64
}

/// Separator of a planar graph leaving every component at most `limit`.
pub(crate) fn separate_within(g: &Graph, limit: u64) -> Result<LtSeparator, PlanarError> {
    let comps = connected_components(g);
    if comps.count != 1 {
        let Some(c) = comps.heaviest() else {
            return Ok(LtSeparator::plain(Vec::new()));
        };
        if comps.weight[c] <= limit {
            return Ok(LtSeparator::plain(Vec::new()));
        }
        let members = comps.members(c);
        let sub = g.induced(&members);
        let mut inner = separate_within(&sub, limit)?;
        inner.vertices = inner.vertices.iter().map(|&v| members[v]).collect();
        inner.vertices.sort_unstable();
        if let Some(li) = &mut inner.level_info {
            li.root = members[li.root];
        }
        return Ok(inner);
    }
    if g.total_weight() <= limit {
        return Ok(LtSeparator::plain(Vec::new()));
    }
    if g.m() + 1 == g.n() {
        let all: Vec<VertexId> = (0..g.n()).collect();
        let c = tree_centroid(g, &all).expect("connected acyclic graph");
        return Ok(LtSeparator::plain(vec![c]));
    }
    let beta = balance_for(limit, g.total_weight());
    let mut best: Option<LtSeparator> = None;
    for root in candidate_roots(g) {
        let lv = bfs_levels(g, root);
        let mut cands = Vec::with_capacity(2);
        if let Some(c) = band_candidate(&lv, limit) {
            cands.push(c);
        }
        cands.push(classic_candidate(g, &lv, limit)?);
        for mut c in cands {
            c.vertices = prune_separator(g, &c.vertices, beta);
            let better = match &best {
                None => true,
                Some(b) => c.vertices.len() < b.vertices.len(),
            };
            if better {
                best = Some(c);
            }
        }
    }
    Ok(best.expect("at least one root"))
}

/// A rational `beta` with `beta * total` rounding down to `limit`.
fn balance_for(limit: u64, total: u64) -> crate::graph::Beta {
    crate::graph::Beta::new_raw(limit, total.max(1))
}

/// Vertex 0, the lowest-id vertex of maximum degree, and the midpoint of a
/// double-sweep diameter path.
fn candidate_roots(g: &Graph) -> Vec<VertexId> {
    let mut roots = vec![0];
    let hub = (0..g.n())
        .max_by(|&a, &b| g.degree(a).cmp(&g.degree(b)).then(b.cmp(&a)))
        .unwrap_or(0);
    roots.push(hub);
    let first = bfs_levels(g, 0);
    let a = *first.order.last().unwrap();
    let second = bfs_levels(g, a);
    let b = *second.order.last().unwrap();
    let mut path = vec![b];
    let mut v = b;
    while v != a {
        v = second.parent[v];
        path.push(v);
    }
    roots.push(path[path.len() / 2]);
    let mut seen = Vec::new();
    roots.retain(|r| {
        let fresh = !seen.contains(r);
        seen.push(*r);
        fresh
    });
    roots
}

fn members_of_levels(lv: &Levels, wanted: &[usize]) -> Vec<VertexId> {
    let mut out: Vec<VertexId> = lv
        .order
        .iter()
        .copied()
        .filter(|&v| wanted.contains(&lv.level[v]))
        .collect();
    out.sort_unstable();
    out
}

/// Cheapest level pair `a < b` (virtual levels allowed at both ends) such
/// that the weight below `a`, strictly between, and above `b` are each at
/// most `limit`.
fn band_candidate(lv: &Levels, limit: u64) -> Option<LtSeparator> {
    let h = lv.sizes.len();
    // Shifted index: level l lives at l + 1; 0 and h + 1 are virtual.
    let size = |i: usize| {
        if i == 0 || i == h + 1 {
            0
        } else {
            lv.sizes[i - 1]
        }
    };
    let mut prefix = vec![0u64; h + 2];
    for i in 1..=h {
        prefix[i] = prefix[i - 1] + lv.weights[i - 1];
    }
    prefix[h + 1] = prefix[h];
    // weight of shifted levels (i, j) exclusive
    let between = |i: usize, j: usize| prefix[j - 1] - prefix[i];
    let total = prefix[h];
    // Smallest b with everything above it light.
    let b_min = (1..=h + 1).find(|&b| total - prefix[b] <= limit)?;
    let mut best: Option<(usize, usize, usize)> = None;
    let mut window: VecDeque<usize> = VecDeque::new();
    let mut next_b = 1;
    for a in 0..=h {
        if a > 0 && prefix[a - 1] > limit {
            break;
        }
        // Extend the window of admissible b while the band stays light.
        while next_b <= h + 1 && (next_b <= a || between(a, next_b) <= limit) {
            if next_b > a && next_b >= b_min {
                while window.back().is_some_and(|&x| size(x) > size(next_b)) {
                    window.pop_back();
                }
                window.push_back(next_b);
            }
            next_b += 1;
        }
        while window.front().is_some_and(|&x| x <= a || x < b_min) {
            window.pop_front();
        }
        if let Some(&b) = window.front() {
            let cost = size(a) + size(b);
            if best.map_or(true, |(c, _, _)| cost < c) {
                best = Some((cost, a, b));
            }
        }
    }
    let (_, a, b) = best?;
    let wanted: Vec<usize> = [a, b]
        .iter()
        .filter(|&&i| i != 0 && i != h + 1)
        .map(|&i| i - 1)
        .collect();
    Some(LtSeparator {
        vertices: members_of_levels(lv, &wanted),
        level_info: Some(LevelInfo {
            root: lv.root,
            l0: (a != 0).then(|| a - 1),
            l1: median_level(lv),
            l2: (b != h + 1).then(|| b - 1),
            level_sizes: lv.sizes.clone(),
        }),
        cycle_info: None,
    })
}

/// Lowest level at which the levels up to and including it hold at least
/// half of the weight.
fn median_level(lv: &Levels) -> usize {
    let total: u64 = lv.weights.iter().sum();
    let mut acc = 0u64;
    for (l, &w) in lv.weights.iter().enumerate() {
        acc += w;
        if 2 * acc as u128 >= total as u128 {
            return l;
        }
    }
    lv.sizes.len() - 1
}

fn classic_candidate(g: &Graph, lv: &Levels, limit: u64) -> Result<LtSeparator, PlanarError> {
    let h = lv.sizes.len();
    let l1 = median_level(lv);
    // Shifted levels as in `band_candidate`.
    let size = |i: usize| {
        if i == 0 || i == h + 1 {
            0
        } else {
            lv.sizes[i - 1]
        }
    };
    let s1 = l1 + 1;
    let l0s = (0..=s1)
        .rev()
        .min_by_key(|&i| size(i) + 2 * (s1 - i))
        .expect("non-empty range");
    let l2s = (s1 + 1..=h + 1)
        .min_by_key(|&i| size(i) + 2 * (i - s1 - 1))
        .expect("non-empty range");
    let mut wanted = Vec::new();
    if l0s != 0 {
        wanted.push(l0s - 1);
    }
    if l2s != h + 1 {
        wanted.push(l2s - 1);
    }
    let mut vertices = members_of_levels(lv, &wanted);
    let level_info = LevelInfo {
        root: lv.root,
        l0: (l0s != 0).then(|| l0s - 1),
        l1,
        l2: (l2s != h + 1).then(|| l2s - 1),
        level_sizes: lv.sizes.clone(),
    };
    let band_weight: u64 = (l0s + 1..l2s).map(|i| lv.weights[i - 1]).sum();
    let mut cycle_info = None;
    if band_weight > limit {
        let (extra, info) = band_cycle(g, lv, l0s, l2s, limit)?;
        vertices.extend(extra);
        vertices.sort_unstable();
        vertices.dedup();
        cycle_info = info;
    }
    Ok(LtSeparator {
        vertices,
        level_info: Some(level_info),
        cycle_info,
    })
}

/// Cycle separator of the band strictly between shifted levels `l0s` and
/// `l2s`, with every level below the band contracted into one extra vertex.
fn band_cycle(
    g: &Graph,
    lv: &Levels,
    l0s: usize,
    l2s: usize,
    limit: u64,
) -> Result<(Vec<VertexId>, Option<CycleInfo>), PlanarError> {
    let in_band = |v: VertexId| {
        let l = lv.level[v];
        l != usize::MAX && l + 1 > l0s && l + 1 < l2s
    };
    let contracted = l0s != 0;
    let mut band: Vec<VertexId> = lv.order.iter().copied().filter(|&v| in_band(v)).collect();
    band.sort_unstable();
    let mut local = vec![usize::MAX; g.n()];
    for (i, &v) in band.iter().enumerate() {
        local[v] = i;
    }
    let x = band.len();
    let hn = band.len() + usize::from(contracted);
    let mut edges = Vec::new();
    for (i, &v) in band.iter().enumerate() {
        for &w in g.neighbors(v) {
            let j = local[w];
            if j != usize::MAX && i < j {
                edges.push((i, j));
            }
        }
        if contracted && lv.level[v] + 1 == l0s + 1 {
            edges.push((i, x));
        }
    }
    if hn < 3 {
        return Ok((band, None));
    }
    let mut weights: Vec<u64> = band.iter().map(|&v| g.weight(v)).collect();
    if contracted {
        weights.push(0);
    }
    let hg = Graph::from_edges(hn, &edges, weights).expect("band graph is simple");
    let root = if contracted { x } else { local[lv.root] };
    let parent: Vec<VertexId> = (0..hn)
        .map(|i| {
            if i == root {
                root
            } else if contracted && (i == x || lv.level[band[i]] + 1 == l0s + 1) {
                x
            } else {
                local[lv.parent[band[i]]]
            }
        })
        .collect();
    let tree = SpanningTree::from_parents(root, parent).expect("BFS parents form a tree");
    let emb = planar_embed(&hg)?.triangulate()?;
    let skip = contracted.then_some(x);
    let cs = cycle_search(&emb, &tree, hg.weights(), limit, skip);
    let vertices = cs
        .vertices
        .iter()
        .filter(|&&v| Some(v) != skip)
        .map(|&v| band[v])
        .collect();
    Ok((
        vertices,
        Some(CycleInfo {
            edge: cs.edge,
            length: cs.vertices.len(),
            inside_weight: cs.inside_weight,
            outside_weight: cs.outside_weight,
        }),
    ))
}

/// Result of the fundamental cycle search.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CycleSeparator {
    /// Cycle vertices in path order, from one end of `edge` to the other.
    pub vertices: Vec<VertexId>,
    pub edge: (VertexId, VertexId),
    pub inside_weight: u64,
    pub outside_weight: u64,
    /// Whether both sides are within two thirds of the total weight.
    pub balanced: bool,
}

/// Fundamental cycle of `tree` in a triangulated embedding whose two sides
/// each weigh at most two thirds of the total. Among balanced cycles the
/// shortest wins, ties going to the smallest closing edge. When none
/// balances, the cycle with the lightest heavier side is returned with
/// `balanced == false`.
pub fn fundamental_cycle_separator(
    emb: &RotationSystem,
    tree: &SpanningTree,
    weights: &[u64],
) -> Result<CycleSeparator, PlanarError> {
    let n = emb.n();
    if n < 3 {
        return Err(PlanarError::TooSmall);
    }
    if emb.edge_count() != 3 * n - 6 || !emb.is_valid() || tree.n() != n {
        return Err(PlanarError::InvalidEmbedding);
    }
    let total: u64 = weights.iter().sum();
    Ok(cycle_search(emb, tree, weights, two_thirds(total), None))
}

fn cycle_search(
    emb: &RotationSystem,
    tree: &SpanningTree,
    weights: &[u64],
    limit: u64,
    skip: Option<VertexId>,
) -> CycleSeparator {
    let n = emb.n();
    let fm = emb.face_map();
    let nf = fm.faces.len();
    let non_tree: Vec<(VertexId, VertexId)> = emb
        .edges()
        .into_iter()
        .filter(|&(u, v)| !tree.is_tree_edge(u, v))
        .collect();
    // Dual tree over the faces, crossing non-tree edges only.
    let mut dual: Vec<Vec<(usize, usize)>> = vec![Vec::new(); nf];
    for (e, &(u, v)) in non_tree.iter().enumerate() {
        let (f1, f2) = (fm.face(u, v), fm.face(v, u));
        dual[f1].push((f2, e));
        dual[f2].push((f1, e));
    }
    let mut face_weight = vec![0u64; nf];
    let mut assigned = vec![0usize; n];
    for v in 0..n {
        let f = fm.face(v, emb.rotation(v)[0]);
        assigned[v] = f;
        face_weight[f] += weights[v];
    }
    let mut parent_edge = vec![usize::MAX; nf];
    let mut tin = vec![usize::MAX; nf];
    let mut tout = vec![0usize; nf];
    let mut sub = face_weight.clone();
    let mut order = Vec::with_capacity(nf);
    let mut stack = vec![(0usize, 0usize)];
    tin[0] = 0;
    order.push(0);
    let mut clock = 1;
    while let Some(&mut (f, ref mut i)) = stack.last_mut() {
        if *i < dual[f].len() {
            let (to, e) = dual[f][*i];
            *i += 1;
            if tin[to] == usize::MAX {
                tin[to] = clock;
                clock += 1;
                parent_edge[to] = e;
                order.push(to);
                stack.push((to, 0));
            }
        } else {
            tout[f] = clock;
            stack.pop();
            if let Some(&(p, _)) = stack.last() {
                sub[p] += sub[f];
            }
        }
    }
    let total: u64 = weights.iter().sum();
    let mut best: Option<(bool, usize, u64, CycleSeparator)> = None;
    for (e, &(u, v)) in non_tree.iter().enumerate() {
        let (f1, f2) = (fm.face(u, v), fm.face(v, u));
        let child = if parent_edge[f1] == e { f1 } else { f2 };
        let cycle = tree.path(u, v);
        let in_sub = |f: usize| tin[f] >= tin[child] && tin[f] < tout[child];
        let mut on_cycle_inside = 0u64;
        let mut cycle_weight = 0u64;
        for &c in &cycle {
            cycle_weight += weights[c];
            if in_sub(assigned[c]) {
                on_cycle_inside += weights[c];
            }
        }
        let inside = sub[child] - on_cycle_inside;
        let outside = total - cycle_weight - inside;
        let balanced = inside <= limit && outside <= limit;
        let cost = cycle.iter().filter(|&&c| Some(c) != skip).count();
        let heavier = inside.max(outside);
        let better = match &best {
            None => true,
            Some((b_bal, b_cost, b_heavy, _)) => {
                if balanced != *b_bal {
                    balanced
                } else if balanced {
                    cost < *b_cost
                } else {
                    heavier < *b_heavy
                }
            }
        };
        if better {
            best = Some((
                balanced,
                cost,
                heavier,
                CycleSeparator {
                    vertices: cycle,
                    edge: (u, v),
                    inside_weight: inside,
                    outside_weight: outside,
                    balanced,
                },
            ));
        }
    }
    match best {
        Some((_, _, _, c)) => c,
        // A triangle with a spanning path has exactly one non-tree edge, so
        // this arm only guards malformed input.
        None => CycleSeparator {
            vertices: (0..n).collect(),
            edge: (0, 0),
            inside_weight: 0,
            outside_weight: 0,
            balanced: true,
        },
    }
}
