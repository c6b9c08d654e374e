//! Restoring balance after lifting.

use crate::graph::{components_without, removal_mask, Beta, Components, Graph, VertexId};
use crate::planar::separate_balanced;
use crate::tree::tree_centroid;

use super::compress::{weighted_median, CompressedGraph};
use super::{limit_for, PipelineError};

/// One vertex batch added by the repair loop.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RepairStep {
    /// Centroid of a heavy component that is a tree.
    Centroid(VertexId),
    /// Weighted median of the heaviest path fragment in a heavy component.
    PathMedian(VertexId),
    /// Planar separator of a heavy component without usable fragments.
    Planar(Vec<VertexId>),
}

impl RepairStep {
    pub fn vertices(&self) -> &[VertexId] {
        match self {
            RepairStep::Centroid(v) | RepairStep::PathMedian(v) => std::slice::from_ref(v),
            RepairStep::Planar(vs) => vs,
        }
    }
}

/// Iteration cap: `2 + ceil(4 * sqrt(r + 1))`.
pub fn repair_cap(r: i64) -> usize {
    let x = (r + 1).max(0) as u64;
    // ceil(4 sqrt(x)) = ceil(sqrt(16 x))
    let y = 16 * x;
    let mut s = (y as f64).sqrt() as u64;
    while s * s > y {
        s -= 1;
    }
    while s * s < y {
        s += 1;
    }
    2 + s as usize
}

/// Adds vertices to `s` until every component of `G - S` is within
/// `beta * W`. Also returns those components.
pub(crate) fn repair(
    g: &Graph,
    s: &[VertexId],
    beta: Beta,
    compressed: Option<&CompressedGraph>,
    cap: usize,
) -> Result<(Vec<VertexId>, Vec<RepairStep>, Components), PipelineError> {
    let limit = limit_for(beta, g.total_weight());
    let mut sep: Vec<VertexId> = s.to_vec();
    sep.sort_unstable();
    sep.dedup();
    let mut steps = Vec::new();
    loop {
        let comps = components_without(g, &removal_mask(g.n(), &sep));
        let Some(c) = comps.heaviest().filter(|&c| comps.weight[c] > limit) else {
            return Ok((sep, steps, comps));
        };
        if steps.len() == cap {
            return Err(PipelineError::RepairCapExceeded { cap });
        }
        let step = if comps.is_tree(c) {
            let members = comps.members(c);
            RepairStep::Centroid(tree_centroid(g, &members).expect("component is a tree"))
        } else if let Some(v) = compressed.and_then(|cg| fragment_median(cg, &comps.label, c)) {
            RepairStep::PathMedian(v)
        } else {
            let members = comps.members(c);
            let sub = g.induced(&members);
            let inner = separate_balanced(&sub, limit).map_err(PipelineError::from)?;
            RepairStep::Planar(inner.vertices.iter().map(|&v| members[v]).collect())
        };
        sep.extend_from_slice(step.vertices());
        sep.sort_unstable();
        sep.dedup();
        steps.push(step);
    }
}

/// Weighted median of the heaviest run of consecutive path-interior
/// vertices lying in component `c`. Runs of zero weight are ignored.
fn fragment_median(cg: &CompressedGraph, label: &[usize], c: usize) -> Option<VertexId> {
    let mut best: Option<(u64, usize, usize, usize)> = None;
    for (j, p) in cg.paths.iter().enumerate() {
        let mut i = 0;
        while i < p.interior.len() {
            if label[p.interior[i]] != c {
                i += 1;
                continue;
            }
            let start = i;
            while i < p.interior.len() && label[p.interior[i]] == c {
                i += 1;
            }
            let w = p.prefix[i] - p.prefix[start];
            if w > 0 && best.map_or(true, |b| w > b.0) {
                best = Some((w, j, start, i));
            }
        }
    }
    let (_, j, start, end) = best?;
    let p = &cg.paths[j];
    let base = p.prefix[start];
    let local: Vec<u64> = p.prefix[start..=end].iter().map(|&x| x - base).collect();
    weighted_median(&local).map(|k| p.interior[start + k])
}
