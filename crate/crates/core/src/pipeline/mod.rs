//! Balanced separators for near-trees.
//!
//! A connected planar graph with `n` vertices and `n + r` edges is reduced to
//! a planar graph of `O(r)` nodes: a BFS spanning tree `T` leaves `r + 1`
//! extra edges `R`; the minimal subtree `T1` spanning their endpoints carries
//! all the weight once every other vertex hands its weight to its nearest
//! `T1` vertex; and `T1` shrinks to its branch set `U` with one subdivision
//! node per maximal path between branch vertices. A planar separator of that
//! graph is lifted back to `G` and repaired until balanced.

mod compress;
mod repair;
mod stages;
mod trace;

use std::time::Instant;

use thiserror::Error;

use crate::graph::{
    components_without, default_beta, prune_given, removal_mask, Beta, Graph, VertexId,
};
use crate::planar::{separate_balanced, PlanarError};
use crate::tree::{tree_centroid, SpanningTree};

pub use compress::{build_compressed_graph, lift_separator, CompressedGraph, PathNode};
pub use repair::{repair_cap, RepairStep};
pub use stages::{
    branch_vertices, collapse_weights, compute_spanning_tree, decompose_paths, extra_edges,
    steiner_subtree, BranchSet, CollapsedWeights, PathDecomposition, SteinerSubtree,
};
pub use trace::{split_trace, Stage, StageTrace};

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum PipelineError {
    #[error("graph is disconnected")]
    Disconnected,
    #[error("total vertex weight is zero")]
    ZeroTotalWeight,
    #[error("terminal set is empty")]
    EmptyTerminals,
    #[error("graph is not planar")]
    NotPlanar,
    #[error("beta must lie in [1/2, 1), got {0}")]
    InvalidBeta(Beta),
    #[error("repair loop exceeded its cap of {cap} iterations")]
    RepairCapExceeded { cap: usize },
}

impl From<PlanarError> for PipelineError {
    fn from(e: PlanarError) -> Self {
        match e {
            PlanarError::NotPlanar => PipelineError::NotPlanar,
            PlanarError::ZeroTotalWeight => PipelineError::ZeroTotalWeight,
            PlanarError::Disconnected => PipelineError::Disconnected,
            // Only reachable on malformed embeddings of a non-planar input.
            PlanarError::TooSmall | PlanarError::InvalidEmbedding => PipelineError::NotPlanar,
        }
    }
}

/// Largest integer weight within `beta * total`.
pub(crate) fn limit_for(beta: Beta, total: u64) -> u64 {
    ((total as u128 * *beta.numer() as u128) / *beta.denom() as u128) as u64
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct SeparatorStats {
    pub size: usize,
    pub max_component_weight: u64,
    pub total_weight: u64,
    pub repairs: usize,
    pub repair_log: Vec<RepairStep>,
    /// Excess `m - n` of the input.
    pub excess: i64,
    pub compressed_nodes: usize,
    pub compressed_separator_size: usize,
    /// Wall time per stage in nanoseconds, in execution order.
    pub stage_ns: Vec<(&'static str, u64)>,
}

impl SeparatorStats {
    pub fn max_fraction(&self) -> f64 {
        if self.total_weight == 0 {
            0.0
        } else {
            self.max_component_weight as f64 / self.total_weight as f64
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Separator {
    /// Sorted vertex ids.
    pub vertices: Vec<VertexId>,
    pub stats: SeparatorStats,
}

/// Balanced separator of a connected planar graph, with `beta = 2/3` unless
/// given otherwise.
pub fn separate(g: &Graph, beta: Beta) -> Result<Separator, PipelineError> {
    run(g, beta, None)
}

pub fn separate_default(g: &Graph) -> Result<Separator, PipelineError> {
    separate(g, default_beta())
}

pub fn separate_traced(g: &Graph, beta: Beta) -> Result<(Separator, StageTrace), PipelineError> {
    let mut trace = StageTrace::default();
    let sep = run(g, beta, Some(&mut trace))?;
    Ok((sep, trace))
}

pub fn dump_stages(g: &Graph) -> Result<StageTrace, PipelineError> {
    separate_traced(g, default_beta()).map(|(_, t)| t)
}

/// Adds vertices to `s` until balanced: a centroid for a heavy tree piece,
/// otherwise the median of the heaviest path fragment from `compressed`,
/// otherwise a planar separator of the piece.
pub fn heavy_vertex_fixup(
    g: &Graph,
    s: &[VertexId],
    beta: Beta,
    compressed: Option<&CompressedGraph>,
) -> Result<Separator, PipelineError> {
    let cap = repair_cap(g.excess());
    let (vertices, steps, _) = repair::repair(g, s, beta, compressed, cap)?;
    Ok(finish(g, vertices, steps, SeparatorStats::default(), None))
}

fn finish(
    g: &Graph,
    vertices: Vec<VertexId>,
    steps: Vec<RepairStep>,
    mut stats: SeparatorStats,
    heaviest: Option<u64>,
) -> Separator {
    stats.max_component_weight = heaviest.unwrap_or_else(|| {
        let comps = components_without(g, &removal_mask(g.n(), &vertices));
        comps.weight.iter().copied().max().unwrap_or(0)
    });
    stats.size = vertices.len();
    stats.total_weight = g.total_weight();
    stats.repairs = steps.len();
    stats.repair_log = steps;
    stats.excess = g.excess();
    Separator { vertices, stats }
}

struct Clock {
    last: Instant,
    out: Vec<(&'static str, u64)>,
}

impl Clock {
    fn new() -> Self {
        Clock {
            last: Instant::now(),
            out: Vec::new(),
        }
    }

    fn lap(&mut self, name: &'static str) {
        let now = Instant::now();
        self.out.push((name, (now - self.last).as_nanos() as u64));
        self.last = now;
    }
}

fn run(
    g: &Graph,
    beta: Beta,
    mut trace: Option<&mut StageTrace>,
) -> Result<Separator, PipelineError> {
    if *beta.denom() == 0 || beta * 2 < Beta::from_integer(1) || beta >= Beta::from_integer(1) {
        return Err(PipelineError::InvalidBeta(beta));
    }
    let total = g.total_weight();
    if total == 0 {
        return Err(PipelineError::ZeroTotalWeight);
    }
    let mut clock = Clock::new();
    let weights = g.weights().to_vec();
    if g.excess() < 0 {
        if !g.is_connected() {
            return Err(PipelineError::Disconnected);
        }
        let all: Vec<VertexId> = (0..g.n()).collect();
        let c = tree_centroid(g, &all).expect("connected acyclic graph");
        clock.lap("centroid");
        if let Some(t) = trace.as_deref_mut() {
            t.push(
                "input",
                g.edges().collect(),
                weights.clone(),
                Vec::new(),
                Vec::new(),
            );
            t.push(
                "centroid",
                g.edges().collect(),
                weights,
                vec![c],
                Vec::new(),
            );
        }
        let stats = SeparatorStats {
            stage_ns: clock.out,
            ..SeparatorStats::default()
        };
        return Ok(finish(g, vec![c], Vec::new(), stats, None));
    }

    // Work on a copy numbered in BFS order from vertex 0. Every later stage
    // then walks memory mostly forward, which matters once the graph
    // outgrows the caches.
    let (h, orig, parent, depth) = g.bfs_renumbered(0).ok_or(PipelineError::Disconnected)?;
    let t = SpanningTree::from_bfs_numbering(parent, depth);
    clock.lap("spanning_tree");
    let r = extra_edges(&h, &t);
    let terminals = r.endpoints();
    clock.lap("extra_edges");
    let t1 = steiner_subtree(&t, &terminals)?;
    clock.lap("steiner_subtree");
    let u = branch_vertices(&t1, &terminals);
    clock.lap("branch_vertices");
    let pi = decompose_paths(&t1, &u);
    clock.lap("decompose_paths");
    let cw = collapse_weights(&h, &t, &t1);
    clock.lap("collapse_weights");
    let cg = build_compressed_graph(&u, &pi, &r, &cw);
    clock.lap("compress");
    let limit = limit_for(beta, total);
    let sc = separate_balanced(&cg.graph, limit)?.vertices;
    clock.lap("compressed_separator");
    let lifted = lift_separator(&sc, &cg);
    clock.lap("lift");
    let cap = repair_cap(h.excess());
    let (repaired, steps, comps) = repair::repair(&h, &lifted, beta, Some(&cg), cap)?;
    clock.lap("repair");
    let (vertices, heaviest) = prune_given(&h, &repaired, beta, comps);
    clock.lap("prune");

    let stats = SeparatorStats {
        compressed_nodes: cg.node_count(),
        compressed_separator_size: sc.len(),
        ..SeparatorStats::default()
    };
    let mut sep = finish(&h, vertices, steps, stats, Some(heaviest));
    let o = |v: VertexId| orig[v];
    let back = |vs: &[VertexId]| -> Vec<VertexId> {
        let mut out: Vec<VertexId> = vs.iter().map(|&v| o(v)).collect();
        out.sort_unstable();
        out
    };
    sep.vertices = back(&sep.vertices);
    for step in &mut sep.stats.repair_log {
        match step {
            RepairStep::Centroid(v) | RepairStep::PathMedian(v) => *v = o(*v),
            RepairStep::Planar(vs) => *vs = back(vs),
        }
    }
    clock.lap("finish");
    sep.stats.stage_ns = clock.out;

    if let Some(tr) = trace {
        let edges_back = |es: &[(VertexId, VertexId)]| -> Vec<(VertexId, VertexId)> {
            let mut out: Vec<_> = es
                .iter()
                .map(|&(a, b)| (o(a).min(o(b)), o(a).max(o(b))))
                .collect();
            out.sort_unstable();
            out
        };
        let mut wprime = vec![0; g.n()];
        for (i, &w) in cw.wprime.iter().enumerate() {
            wprime[o(i)] = w;
        }
        let ids = |vs: &[VertexId]| -> String {
            vs.iter()
                .map(|&v| (o(v) + 1).to_string())
                .collect::<Vec<_>>()
                .join(" ")
        };
        let t1_edges = edges_back(&t1.edges);
        tr.push(
            "tree",
            edges_back(&t.edges()),
            weights.clone(),
            vec![o(t.root())],
            Vec::new(),
        );
        tr.push(
            "extra_edges",
            edges_back(r.as_slice()),
            weights.clone(),
            back(&terminals),
            Vec::new(),
        );
        tr.push(
            "steiner_subtree",
            t1_edges.clone(),
            wprime.clone(),
            back(&t1.members()),
            Vec::new(),
        );
        tr.push(
            "branch_vertices",
            t1_edges.clone(),
            wprime.clone(),
            back(&u.members),
            Vec::new(),
        );
        let notes = pi
            .paths
            .iter()
            .map(|p| format!("path {}", ids(p)))
            .collect();
        tr.push("paths", t1_edges, wprime, Vec::new(), notes);
        let mut node_notes: Vec<String> = cg
            .u_nodes
            .iter()
            .enumerate()
            .map(|(i, &v)| format!("node {} vertex {}", i + 1, o(v) + 1))
            .collect();
        node_notes.extend(cg.paths.iter().enumerate().map(|(j, p)| {
            format!(
                "node {} path {} {} interior {}",
                cg.u_nodes.len() + j + 1,
                o(p.start) + 1,
                o(p.end) + 1,
                p.interior.len()
            )
        }));
        let c_edges: Vec<_> = cg.graph.edges().collect();
        let c_weights = cg.graph.weights().to_vec();
        tr.push(
            "compressed",
            c_edges.clone(),
            c_weights.clone(),
            Vec::new(),
            node_notes,
        );
        tr.push(
            "compressed_separator",
            c_edges,
            c_weights,
            sc.clone(),
            Vec::new(),
        );
        let repair_notes = sep
            .stats
            .repair_log
            .iter()
            .map(|s| {
                let kind = match s {
                    RepairStep::Centroid(_) => "centroid",
                    RepairStep::PathMedian(_) => "path_median",
                    RepairStep::Planar(_) => "planar",
                };
                let vs: Vec<String> = s.vertices().iter().map(|v| (v + 1).to_string()).collect();
                format!("repair {kind} {}", vs.join(" "))
            })
            .collect();
        tr.push(
            "repairs",
            g.edges().collect(),
            weights.clone(),
            back(&lifted),
            repair_notes,
        );
        tr.push(
            "separator",
            g.edges().collect(),
            weights,
            sep.vertices.clone(),
            Vec::new(),
        );
    }
    Ok(sep)
}
