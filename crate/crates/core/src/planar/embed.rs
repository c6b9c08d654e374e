//! Left-right planarity test with embedding extraction (Brandes' formulation
//! of the de Fraysseix–Rosenstiehl criterion). All three DFS passes are
//! iterative so deep graphs do not exhaust the stack.

use crate::graph::{Graph, VertexId};

use super::rotation::RotationSystem;
use super::PlanarError;

const UNSET: usize = usize::MAX;
const NONE: usize = usize::MAX;

#[derive(Clone, Copy, Default)]
struct Interval {
    low: Option<usize>,
    high: Option<usize>,
}

impl Interval {
    fn is_empty(&self) -> bool {
        self.low.is_none() && self.high.is_none()
    }
}

#[derive(Clone, Copy, Default)]
struct ConflictPair {
    left: Interval,
    right: Interval,
    id: usize,
}

impl ConflictPair {
    fn swap(&mut self) {
        std::mem::swap(&mut self.left, &mut self.right);
    }
}

struct OrientBuffers {
    slot_edge: Vec<usize>,
    ind: Vec<usize>,
    resume: Vec<bool>,
}

struct TestBuffers {
    ind: Vec<usize>,
    resume: Vec<bool>,
}

struct LrState<'a> {
    g: &'a Graph,
    height: Vec<usize>,
    parent_edge: Vec<Option<usize>>,
    // oriented edges
    src: Vec<VertexId>,
    dst: Vec<VertexId>,
    lowpt: Vec<usize>,
    lowpt2: Vec<usize>,
    nesting_depth: Vec<i64>,
    out: Vec<Vec<usize>>,
    reference: Vec<Option<usize>>,
    side: Vec<i8>,
    lowpt_edge: Vec<Option<usize>>,
    stack_bottom: Vec<Option<usize>>,
    stack: Vec<ConflictPair>,
    next_pair: usize,
    roots: Vec<VertexId>,
}

/// Computes a combinatorial planar embedding, or `NotPlanar`.
pub fn planar_embed(g: &Graph) -> Result<RotationSystem, PlanarError> {
    let st = lr_test(g).ok_or(PlanarError::NotPlanar)?;
    let emb = st.embed();
    if !emb.is_valid() {
        return Err(PlanarError::InvalidEmbedding);
    }
    Ok(emb)
}

/// Planarity decision only; skips building the embedding.
pub fn is_planar(g: &Graph) -> bool {
    lr_test(g).is_some()
}

/// Orientation and testing phases; the returned state is ready to embed.
fn lr_test(g: &Graph) -> Option<LrState<'_>> {
    let n = g.n();
    if n > 2 && g.m() > 3 * n - 6 {
        return None;
    }
    let mut st = LrState::new(g);
    let mut buf = OrientBuffers {
        // Per adjacency slot: oriented edge id once the edge has been seen.
        slot_edge: vec![NONE; 2 * g.m()],
        ind: vec![0; n],
        resume: vec![false; n],
    };
    for v in 0..n {
        if st.height[v] == UNSET {
            st.height[v] = 0;
            st.roots.push(v);
            st.orient(v, &mut buf);
        }
    }
    let mut buf = TestBuffers {
        ind: vec![0; n],
        resume: vec![false; n],
    };
    for v in 0..n {
        let nd = &st.nesting_depth;
        st.out[v].sort_by_key(|&e| nd[e]);
    }
    for i in 0..st.roots.len() {
        let r = st.roots[i];
        if !st.test(r, &mut buf) {
            return None;
        }
    }
    Some(st)
}

impl<'a> LrState<'a> {
    fn new(g: &'a Graph) -> Self {
        let n = g.n();
        let m = g.m();
        LrState {
            g,
            height: vec![UNSET; n],
            parent_edge: vec![None; n],
            src: Vec::with_capacity(m),
            dst: Vec::with_capacity(m),
            lowpt: Vec::with_capacity(m),
            lowpt2: Vec::with_capacity(m),
            nesting_depth: Vec::with_capacity(m),
            out: vec![Vec::new(); n],
            reference: vec![None; m],
            side: vec![1; m],
            lowpt_edge: vec![None; m],
            stack_bottom: vec![None; m],
            stack: Vec::new(),
            next_pair: 0,
            roots: Vec::new(),
        }
    }

    fn orient(&mut self, root: VertexId, buf: &mut OrientBuffers) {
        let g = self.g;
        let OrientBuffers {
            slot_edge,
            ind,
            resume,
        } = buf;
        let mut stack = vec![root];
        'outer: while let Some(v) = stack.pop() {
            let e = self.parent_edge[v];
            let adj = g.neighbors(v);
            while ind[v] < adj.len() {
                let w = adj[ind[v]];
                let slot = g.adjacency_start(v) + ind[v];
                let vw;
                if resume[v] {
                    resume[v] = false;
                    vw = slot_edge[slot];
                } else {
                    if slot_edge[slot] != NONE {
                        ind[v] += 1;
                        continue;
                    }
                    vw = self.src.len();
                    self.src.push(v);
                    self.dst.push(w);
                    self.lowpt.push(self.height[v]);
                    self.lowpt2.push(self.height[v]);
                    self.nesting_depth.push(0);
                    self.out[v].push(vw);
                    slot_edge[slot] = vw;
                    let back = g.adjacency_start(w) + g.slot(w, v).expect("symmetric adjacency");
                    slot_edge[back] = vw;
                    if self.height[w] == UNSET {
                        self.parent_edge[w] = Some(vw);
                        self.height[w] = self.height[v] + 1;
                        resume[v] = true;
                        stack.push(v);
                        stack.push(w);
                        continue 'outer;
                    } else {
                        self.lowpt[vw] = self.height[w];
                    }
                }
                self.nesting_depth[vw] = 2 * self.lowpt[vw] as i64;
                if self.lowpt2[vw] < self.height[v] {
                    self.nesting_depth[vw] += 1;
                }
                if let Some(e) = e {
                    if self.lowpt[vw] < self.lowpt[e] {
                        self.lowpt2[e] = self.lowpt[e].min(self.lowpt2[vw]);
                        self.lowpt[e] = self.lowpt[vw];
                    } else if self.lowpt[vw] > self.lowpt[e] {
                        self.lowpt2[e] = self.lowpt2[e].min(self.lowpt[vw]);
                    } else {
                        self.lowpt2[e] = self.lowpt2[e].min(self.lowpt2[vw]);
                    }
                }
                ind[v] += 1;
            }
        }
    }

    fn top_id(&self) -> Option<usize> {
        self.stack.last().map(|p| p.id)
    }

    fn push_pair(&mut self, mut p: ConflictPair) {
        p.id = self.next_pair;
        self.next_pair += 1;
        self.stack.push(p);
    }

    fn conflicting(&self, i: &Interval, b: usize) -> bool {
        match i.high {
            Some(h) => self.lowpt[h] > self.lowpt[b],
            None => false,
        }
    }

    fn lowest(&self, p: &ConflictPair) -> usize {
        match (p.left.low, p.right.low) {
            (None, Some(r)) => self.lowpt[r],
            (Some(l), None) => self.lowpt[l],
            (Some(l), Some(r)) => self.lowpt[l].min(self.lowpt[r]),
            (None, None) => UNSET,
        }
    }

    fn test(&mut self, root: VertexId, buf: &mut TestBuffers) -> bool {
        let TestBuffers { ind, resume } = buf;
        let mut stack = vec![root];
        'outer: while let Some(v) = stack.pop() {
            let e = self.parent_edge[v];
            while ind[v] < self.out[v].len() {
                let ei = self.out[v][ind[v]];
                let w = self.dst[ei];
                if resume[v] {
                    resume[v] = false;
                } else {
                    self.stack_bottom[ei] = self.top_id();
                    if self.parent_edge[w] == Some(ei) {
                        resume[v] = true;
                        stack.push(v);
                        stack.push(w);
                        continue 'outer;
                    }
                    self.lowpt_edge[ei] = Some(ei);
                    self.push_pair(ConflictPair {
                        left: Interval::default(),
                        right: Interval {
                            low: Some(ei),
                            high: Some(ei),
                        },
                        id: 0,
                    });
                }
                if self.lowpt[ei] < self.height[v] {
                    let e = e.expect("return edge below the root");
                    if ei == self.out[v][0] {
                        self.lowpt_edge[e] = self.lowpt_edge[ei];
                    } else if !self.add_constraints(ei, e) {
                        return false;
                    }
                }
                ind[v] += 1;
            }
            if let Some(e) = e {
                self.remove_back_edges(e);
            }
        }
        true
    }

    fn add_constraints(&mut self, ei: usize, e: usize) -> bool {
        let mut p = ConflictPair::default();
        loop {
            let mut q = self.stack.pop().expect("conflict stack underflow");
            if !q.left.is_empty() {
                q.swap();
            }
            if !q.left.is_empty() {
                return false;
            }
            let qlow = q.right.low.expect("non-empty interval");
            if self.lowpt[qlow] > self.lowpt[e] {
                if p.right.is_empty() {
                    p.right = q.right;
                } else if let Some(pl) = p.right.low {
                    self.reference[pl] = q.right.high;
                }
                p.right.low = q.right.low;
            } else {
                self.reference[qlow] = self.lowpt_edge[e];
            }
            if self.top_id() == self.stack_bottom[ei] {
                break;
            }
        }
        while let Some(top) = self.stack.last() {
            if !(self.conflicting(&top.left, ei) || self.conflicting(&top.right, ei)) {
                break;
            }
            let mut q = self.stack.pop().unwrap();
            if self.conflicting(&q.right, ei) {
                q.swap();
            }
            if self.conflicting(&q.right, ei) {
                return false;
            }
            if let Some(pl) = p.right.low {
                self.reference[pl] = q.right.high;
            }
            if q.right.low.is_some() {
                p.right.low = q.right.low;
            }
            if p.left.is_empty() {
                p.left = q.left;
            } else if let Some(pl) = p.left.low {
                self.reference[pl] = q.left.high;
            }
            p.left.low = q.left.low;
        }
        if !(p.left.is_empty() && p.right.is_empty()) {
            self.push_pair(p);
        }
        true
    }

    fn remove_back_edges(&mut self, e: usize) {
        let u = self.src[e];
        while let Some(top) = self.stack.last() {
            if self.lowest(top) != self.height[u] {
                break;
            }
            let p = self.stack.pop().unwrap();
            if let Some(l) = p.left.low {
                self.side[l] = -1;
            }
        }
        if let Some(mut p) = self.stack.pop() {
            while let Some(h) = p.left.high {
                if self.dst[h] != u {
                    break;
                }
                p.left.high = self.reference[h];
            }
            if p.left.high.is_none() {
                if let Some(l) = p.left.low {
                    self.reference[l] = p.right.low;
                    self.side[l] = -1;
                    p.left.low = None;
                }
            }
            while let Some(h) = p.right.high {
                if self.dst[h] != u {
                    break;
                }
                p.right.high = self.reference[h];
            }
            if p.right.high.is_none() {
                if let Some(r) = p.right.low {
                    self.reference[r] = p.left.low;
                    self.side[r] = -1;
                    p.right.low = None;
                }
            }
            // Same pair goes back, identity preserved.
            self.stack.push(p);
        }
        if self.lowpt[e] < self.height[u] {
            let top = self
                .stack
                .last()
                .expect("return edge without conflict pair");
            let hl = top.left.high;
            let hr = top.right.high;
            self.reference[e] = match (hl, hr) {
                (Some(l), None) => Some(l),
                (Some(l), Some(r)) if self.lowpt[l] > self.lowpt[r] => Some(l),
                _ => hr,
            };
        }
    }

    fn sign(&mut self, e0: usize, old_ref: &mut [Option<usize>]) -> i8 {
        let mut stack = vec![e0];
        while let Some(e) = stack.pop() {
            if let Some(r) = self.reference[e] {
                stack.push(e);
                stack.push(r);
                old_ref[e] = Some(r);
                self.reference[e] = None;
            } else if let Some(o) = old_ref[e].take() {
                self.side[e] *= self.side[o];
            }
        }
        self.side[e0]
    }

    fn embed(mut self) -> RotationSystem {
        let m = self.src.len();
        let mut old_ref = vec![None; m];
        for e in 0..m {
            let s = self.sign(e, &mut old_ref) as i64;
            self.nesting_depth[e] *= s;
        }
        let n = self.g.n();
        for v in 0..n {
            let nd = &self.nesting_depth;
            self.out[v].sort_by_key(|&e| nd[e]);
        }
        let mut half = HalfEdges::new(self.g);
        for v in 0..n {
            let mut prev = None;
            for &e in &self.out[v] {
                let w = self.dst[e];
                half.add_cw(v, w, prev);
                prev = Some(w);
            }
        }
        let mut left_ref = vec![NONE; n];
        let mut right_ref = vec![NONE; n];
        let mut ind = vec![0usize; n];
        for &root in &self.roots {
            let mut stack = vec![root];
            'outer: while let Some(v) = stack.pop() {
                while ind[v] < self.out[v].len() {
                    let ei = self.out[v][ind[v]];
                    ind[v] += 1;
                    let w = self.dst[ei];
                    if self.parent_edge[w] == Some(ei) {
                        half.add_first(w, v);
                        left_ref[v] = w;
                        right_ref[v] = w;
                        stack.push(v);
                        stack.push(w);
                        continue 'outer;
                    } else if self.side[ei] == 1 {
                        half.add_cw(w, v, Some(right_ref[w]));
                    } else {
                        half.add_ccw(w, v, Some(left_ref[w]));
                        left_ref[w] = v;
                    }
                }
            }
        }
        half.into_rotation()
    }
}

/// Doubly linked cyclic neighbor order per vertex, addressed by adjacency
/// slot.
struct HalfEdges<'a> {
    g: &'a Graph,
    cw: Vec<Vec<VertexId>>,
    ccw: Vec<Vec<VertexId>>,
    first: Vec<Option<VertexId>>,
}

impl<'a> HalfEdges<'a> {
    fn new(g: &'a Graph) -> Self {
        let n = g.n();
        HalfEdges {
            g,
            cw: (0..n).map(|v| vec![NONE; g.degree(v)]).collect(),
            ccw: (0..n).map(|v| vec![NONE; g.degree(v)]).collect(),
            first: vec![None; n],
        }
    }

    fn slot(&self, v: VertexId, w: VertexId) -> usize {
        self.g.slot(v, w).expect("half-edge endpoint")
    }

    fn add_cw(&mut self, start: VertexId, end: VertexId, reference: Option<VertexId>) {
        let se = self.slot(start, end);
        let Some(r) = reference else {
            self.cw[start][se] = end;
            self.ccw[start][se] = end;
            self.first[start] = Some(end);
            return;
        };
        let sr = self.slot(start, r);
        let cw_ref = self.cw[start][sr];
        let scr = self.slot(start, cw_ref);
        self.cw[start][sr] = end;
        self.cw[start][se] = cw_ref;
        self.ccw[start][scr] = end;
        self.ccw[start][se] = r;
    }

    fn add_ccw(&mut self, start: VertexId, end: VertexId, reference: Option<VertexId>) {
        let Some(r) = reference else {
            self.add_cw(start, end, None);
            return;
        };
        let ccw_ref = self.ccw[start][self.slot(start, r)];
        self.add_cw(start, end, Some(ccw_ref));
        if self.first[start] == Some(r) {
            self.first[start] = Some(end);
        }
    }

    fn add_first(&mut self, start: VertexId, end: VertexId) {
        let r = self.first[start];
        self.add_ccw(start, end, r);
    }

    fn into_rotation(self) -> RotationSystem {
        let n = self.g.n();
        let mut rot = Vec::with_capacity(n);
        for v in 0..n {
            let mut order = Vec::with_capacity(self.g.degree(v));
            if let Some(f) = self.first[v] {
                let mut cur = f;
                loop {
                    order.push(cur);
                    cur = self.cw[v][self.slot(v, cur)];
                    if cur == f || order.len() > self.g.degree(v) {
                        break;
                    }
                }
            }
            // Stored counter-clockwise.
            order.reverse();
            rot.push(order);
        }
        RotationSystem::from_rotation(rot)
    }
}
