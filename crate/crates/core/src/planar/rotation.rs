use std::collections::HashSet;

use crate::graph::{Graph, VertexId};

use super::PlanarError;

/// Combinatorial embedding: counter-clockwise neighbor order per vertex.
///
/// Faces are traced with `next(u -> v) = (v -> w)` where `w` follows `u` in
/// the rotation at `v`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RotationSystem {
    rot: Vec<Vec<VertexId>>,
    /// Edges added by triangulation, as `(min, max)`.
    synthetic: Vec<(VertexId, VertexId)>,
}

impl RotationSystem {
    pub fn from_rotation(rot: Vec<Vec<VertexId>>) -> Self {
        RotationSystem {
            rot,
            synthetic: Vec::new(),
        }
    }

    pub fn n(&self) -> usize {
        self.rot.len()
    }

    pub fn edge_count(&self) -> usize {
        self.rot.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn rotation(&self, v: VertexId) -> &[VertexId] {
        &self.rot[v]
    }

    pub fn synthetic_edges(&self) -> &[(VertexId, VertexId)] {
        &self.synthetic
    }

    pub fn edges(&self) -> Vec<(VertexId, VertexId)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for (u, adj) in self.rot.iter().enumerate() {
            out.extend(adj.iter().filter(|&&v| v > u).map(|&v| (u, v)));
        }
        out.sort_unstable();
        out
    }

    /// The underlying graph, with the given vertex weights.
    pub fn to_graph(&self, weights: Vec<u64>) -> Graph {
        Graph::from_edges(self.n(), &self.edges(), weights).expect("embedding of a simple graph")
    }

    fn darts(&self) -> Option<Darts> {
        let n = self.n();
        let mut offset = Vec::with_capacity(n + 1);
        offset.push(0);
        for adj in &self.rot {
            offset.push(offset.last().unwrap() + adj.len());
        }
        // Sorted (neighbor, position) per vertex for reverse lookup.
        let mut lookup: Vec<Vec<(VertexId, usize)>> = self
            .rot
            .iter()
            .map(|adj| {
                adj.iter()
                    .copied()
                    .enumerate()
                    .map(|(i, w)| (w, i))
                    .collect()
            })
            .collect();
        for l in &mut lookup {
            l.sort_unstable();
            if l.windows(2).any(|p| p[0].0 == p[1].0) {
                return None;
            }
        }
        let mut head = vec![0; offset[n]];
        let mut twin_pos = vec![0; offset[n]];
        for u in 0..n {
            for (i, &v) in self.rot[u].iter().enumerate() {
                if v >= n || v == u {
                    return None;
                }
                let j = lookup[v].binary_search_by_key(&u, |p| p.0).ok()?;
                head[offset[u] + i] = v;
                twin_pos[offset[u] + i] = lookup[v][j].1;
            }
        }
        Some(Darts {
            offset,
            head,
            twin_pos,
        })
    }

    /// Face boundary walks. Each walk lists the tails of its darts in order.
    pub fn faces(&self) -> Vec<Vec<VertexId>> {
        self.face_map().faces
    }

    pub fn face_count(&self) -> usize {
        let nonisolated = self.rot.iter().filter(|a| !a.is_empty()).count();
        if nonisolated == 0 {
            return usize::from(self.n() > 0);
        }
        self.faces().len()
    }

    /// Symmetric, duplicate-free, and Euler's formula holds on every
    /// component with at least one edge.
    pub fn is_valid(&self) -> bool {
        let Some(d) = self.darts() else {
            return false;
        };
        let total = *d.offset.last().unwrap();
        let comps = self.component_count();
        let vertices = self.rot.iter().filter(|a| !a.is_empty()).count() as i64;
        let edges = (total / 2) as i64;
        let faces = if total == 0 {
            0
        } else {
            self.faces().len() as i64
        };
        vertices - edges + faces == 2 * comps as i64
    }

    /// Connected components that contain at least one edge.
    pub fn component_count(&self) -> usize {
        let n = self.n();
        let mut comp = vec![usize::MAX; n];
        let mut comps = 0;
        let mut stack = Vec::new();
        for s in 0..n {
            if comp[s] != usize::MAX || self.rot[s].is_empty() {
                continue;
            }
            comp[s] = comps;
            stack.push(s);
            while let Some(v) = stack.pop() {
                for &w in &self.rot[v] {
                    if comp[w] == usize::MAX {
                        comp[w] = comps;
                        stack.push(w);
                    }
                }
            }
            comps += 1;
        }
        comps
    }

    /// Adds edges until every face is a triangle, keeping the graph simple.
    /// Each face is fanned from one corner; a chord that already exists is
    /// skipped and the fan restarts from the next corner.
    pub fn triangulate(&self) -> Result<RotationSystem, PlanarError> {
        let n = self.n();
        if n < 3 {
            return Err(PlanarError::TooSmall);
        }
        if self.rot.iter().any(Vec::is_empty) || self.component_count() != 1 {
            return Err(PlanarError::Disconnected);
        }
        if !self.is_valid() {
            return Err(PlanarError::InvalidEmbedding);
        }
        let mut present: HashSet<(VertexId, VertexId)> = self.edges().into_iter().collect();
        let mut tris: Vec<[VertexId; 3]> = Vec::new();
        let mut synthetic = self.synthetic.clone();
        for walk in self.faces() {
            ear_cut(&walk, &mut present, &mut tris, &mut synthetic)?;
        }
        let out = from_triangles(n, &tris, synthetic).ok_or(PlanarError::InvalidEmbedding)?;
        if !out.is_valid() {
            return Err(PlanarError::InvalidEmbedding);
        }
        Ok(out)
    }

    /// Triangular faces of a triangulated embedding, as dart-ordered triples.
    pub fn triangles(&self) -> Vec<[VertexId; 3]> {
        self.faces()
            .into_iter()
            .filter(|f| f.len() == 3)
            .map(|f| [f[0], f[1], f[2]])
            .collect()
    }
}

/// Face ids of every dart of an embedding.
pub(crate) struct FaceMap {
    pub(crate) faces: Vec<Vec<VertexId>>,
    offset: Vec<usize>,
    face_of: Vec<usize>,
    lookup: Vec<Vec<(VertexId, usize)>>,
}

impl FaceMap {
    /// Face to the left of dart `u -> v`, i.e. the face whose walk contains it.
    pub(crate) fn face(&self, u: VertexId, v: VertexId) -> usize {
        let i = self.lookup[u]
            .binary_search_by_key(&v, |p| p.0)
            .expect("dart of the embedding");
        self.face_of[self.offset[u] + self.lookup[u][i].1]
    }
}

impl RotationSystem {
    pub(crate) fn face_map(&self) -> FaceMap {
        let d = self.darts().expect("consistent rotation system");
        let total = *d.offset.last().unwrap();
        let mut face_of = vec![usize::MAX; total];
        let mut faces = Vec::new();
        for u in 0..self.n() {
            for i in 0..self.rot[u].len() {
                let start = d.offset[u] + i;
                if face_of[start] != usize::MAX {
                    continue;
                }
                let f = faces.len();
                let mut walk = Vec::new();
                let (mut tail, mut dart) = (u, start);
                while face_of[dart] == usize::MAX {
                    face_of[dart] = f;
                    walk.push(tail);
                    let (t, nd) = d.next(dart, &self.rot);
                    tail = t;
                    dart = nd;
                }
                faces.push(walk);
            }
        }
        let lookup = self
            .rot
            .iter()
            .map(|adj| {
                let mut l: Vec<(VertexId, usize)> = adj
                    .iter()
                    .copied()
                    .enumerate()
                    .map(|(i, w)| (w, i))
                    .collect();
                l.sort_unstable();
                l
            })
            .collect();
        FaceMap {
            faces,
            offset: d.offset,
            face_of,
            lookup,
        }
    }
}

struct Darts {
    offset: Vec<usize>,
    head: Vec<VertexId>,
    twin_pos: Vec<usize>,
}

impl Darts {
    /// Next dart on the same face: returns (tail, dart id).
    fn next(&self, dart: usize, rot: &[Vec<VertexId>]) -> (VertexId, usize) {
        let v = self.head[dart];
        let deg = rot[v].len();
        let pos = (self.twin_pos[dart] + 1) % deg;
        (v, self.offset[v] + pos)
    }
}

fn key(u: VertexId, v: VertexId) -> (VertexId, VertexId) {
    if u < v {
        (u, v)
    } else {
        (v, u)
    }
}

fn ear_cut(
    walk: &[VertexId],
    present: &mut HashSet<(VertexId, VertexId)>,
    tris: &mut Vec<[VertexId; 3]>,
    synthetic: &mut Vec<(VertexId, VertexId)>,
) -> Result<(), PlanarError> {
    let k = walk.len();
    if k < 3 {
        return Err(PlanarError::TooSmall);
    }
    let mut next: Vec<usize> = (0..k).map(|i| (i + 1) % k).collect();
    let mut len = k;
    let mut cur = 0;
    let mut fails = 0;
    while len > 3 {
        let b = next[cur];
        let c = next[b];
        let (va, vc) = (walk[cur], walk[c]);
        if va != vc && !present.contains(&key(va, vc)) {
            present.insert(key(va, vc));
            synthetic.push(key(va, vc));
            tris.push([va, walk[b], vc]);
            next[cur] = c;
            len -= 1;
            fails = 0;
        } else {
            cur = next[cur];
            fails += 1;
            if fails > len {
                return Err(PlanarError::InvalidEmbedding);
            }
        }
    }
    let b = next[cur];
    tris.push([walk[cur], walk[b], walk[next[b]]]);
    Ok(())
}

/// Rebuilds rotations from oriented triangles: the face successor of dart
/// `a -> b` in triangle `(a, b, c)` is `b -> c`, so `c` follows `a` at `b`.
fn from_triangles(
    n: usize,
    tris: &[[VertexId; 3]],
    synthetic: Vec<(VertexId, VertexId)>,
) -> Option<RotationSystem> {
    let mut succ: Vec<Vec<(VertexId, VertexId)>> = vec![Vec::new(); n];
    for t in tris {
        for i in 0..3 {
            let (a, b, c) = (t[i], t[(i + 1) % 3], t[(i + 2) % 3]);
            succ[b].push((a, c));
        }
    }
    let mut rot = Vec::with_capacity(n);
    for s in succ.iter_mut() {
        s.sort_unstable();
        if s.windows(2).any(|p| p[0].0 == p[1].0) {
            return None;
        }
        let mut order = Vec::with_capacity(s.len());
        if let Some(&(start, _)) = s.first() {
            let mut cur = start;
            loop {
                order.push(cur);
                let i = s.binary_search_by_key(&cur, |p| p.0).ok()?;
                cur = s[i].1;
                if cur == start {
                    break;
                }
                if order.len() > s.len() {
                    return None;
                }
            }
        }
        if order.len() != s.len() {
            return None;
        }
        rot.push(order);
    }
    Some(RotationSystem { rot, synthetic })
}

#[cfg(test)]
mod tests {
    use super::super::planar_embed;
    use super::*;

    fn embed(n: usize, e: &[(usize, usize)]) -> RotationSystem {
        planar_embed(&Graph::unit(n, e).unwrap()).unwrap()
    }

    #[test]
    fn c4_triangulates_to_k4() {
        let t = embed(4, &[(0, 1), (1, 2), (2, 3), (3, 0)])
            .triangulate()
            .unwrap();
        assert_eq!(t.edge_count(), 6);
        assert_eq!(t.face_count(), 4);
        assert_eq!(t.synthetic_edges().len(), 2);
        assert!(t.is_valid());
    }

    #[test]
    fn k4_is_left_alone() {
        let k4 = embed(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]);
        let t = k4.triangulate().unwrap();
        assert_eq!(t.edges(), k4.edges());
        assert!(t.synthetic_edges().is_empty());
    }

    #[test]
    fn grid_reaches_maximal_edge_count() {
        let mut e = Vec::new();
        for r in 0..3 {
            for c in 0..3 {
                let v = r * 3 + c;
                if c < 2 {
                    e.push((v, v + 1));
                }
                if r < 2 {
                    e.push((v, v + 3));
                }
            }
        }
        let t = embed(9, &e).triangulate().unwrap();
        assert_eq!(t.edge_count(), 21);
        assert!(t.triangles().len() == t.face_count());
    }

    #[test]
    fn stars_and_paths_triangulate() {
        let star = embed(6, &[(0, 1), (0, 2), (0, 3), (0, 4), (0, 5)]);
        let t = star.triangulate().unwrap();
        assert_eq!(t.edge_count(), 3 * 6 - 6);
        let path = embed(3, &[(0, 1), (1, 2)]);
        let t = path.triangulate().unwrap();
        assert_eq!(t.edge_count(), 3);
        assert_eq!(t.face_count(), 2);
    }

    #[test]
    fn too_small_and_disconnected() {
        let e = embed(2, &[(0, 1)]);
        assert_eq!(e.triangulate().unwrap_err(), PlanarError::TooSmall);
        let e = embed(4, &[(0, 1), (2, 3)]);
        assert_eq!(e.triangulate().unwrap_err(), PlanarError::Disconnected);
    }

    #[test]
    fn to_graph_round_trips_edges() {
        let e = embed(4, &[(0, 1), (1, 2), (2, 3)]);
        let g = e.to_graph(vec![1; 4]);
        assert_eq!(g.m(), 3);
    }
}
