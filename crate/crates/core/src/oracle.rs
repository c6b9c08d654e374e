//! Exhaustive reference answers for small instances.

use std::collections::VecDeque;

use thiserror::Error;

use crate::graph::{within, Beta, Graph, VertexId};
use crate::tree::SpanningTree;

pub const ORACLE_MAX_VERTICES: usize = 20;
pub const DEFAULT_MAX_SIZE: usize = 8;

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum OracleError {
    #[error("oracle is limited to {limit} vertices, got {n}")]
    TooLarge { n: usize, limit: usize },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OracleResult {
    /// Smallest balanced separator size, if one exists within `max_size`.
    pub min_size: Option<usize>,
    /// Among separators of that size, one with the lightest heaviest
    /// component; ties go to the lexicographically first.
    pub witness: Vec<VertexId>,
    pub feasible: bool,
}

/// Smallest vertex set whose removal leaves every component within
/// `beta * W`. Subsets are tried by increasing size, each size in
/// lexicographic order; the first size with a passing subset is optimal.
pub fn min_balanced_separator(
    g: &Graph,
    beta: Beta,
    max_size: usize,
) -> Result<OracleResult, OracleError> {
    let n = g.n();
    if n > ORACLE_MAX_VERTICES {
        return Err(OracleError::TooLarge {
            n,
            limit: ORACLE_MAX_VERTICES,
        });
    }
    let adj: Vec<u32> = (0..n)
        .map(|v| g.neighbors(v).iter().fold(0u32, |m, &w| m | (1 << w)))
        .collect();
    let total = g.total_weight();
    let full: u32 = (1u32 << n) - 1;
    let mut combo: Vec<usize> = Vec::new();
    for k in 0..=max_size.min(n) {
        combo.clear();
        combo.extend(0..k);
        let mut best: Option<(u64, Vec<usize>)> = None;
        loop {
            let removed = combo.iter().fold(0u32, |m, &v| m | (1 << v));
            let heaviest = heaviest_component(g, &adj, full & !removed);
            if within(heaviest, beta, total) && best.as_ref().map_or(true, |b| heaviest < b.0) {
                best = Some((heaviest, combo.clone()));
            }
            if !next_combination(&mut combo, n) {
                break;
            }
        }
        if let Some((_, witness)) = best {
            return Ok(OracleResult {
                min_size: Some(k),
                witness,
                feasible: true,
            });
        }
    }
    Ok(OracleResult {
        min_size: None,
        witness: Vec::new(),
        feasible: false,
    })
}

fn heaviest_component(g: &Graph, adj: &[u32], mut left: u32) -> u64 {
    let mut heaviest = 0;
    while left != 0 {
        let start = left.trailing_zeros() as usize;
        let mut comp = 1u32 << start;
        let mut frontier = comp;
        while frontier != 0 {
            let v = frontier.trailing_zeros() as usize;
            frontier &= frontier - 1;
            let fresh = adj[v] & left & !comp;
            comp |= fresh;
            frontier |= fresh;
        }
        left &= !comp;
        let mut w = 0u64;
        let mut bits = comp;
        while bits != 0 {
            w += g.weight(bits.trailing_zeros() as usize);
            bits &= bits - 1;
        }
        heaviest = heaviest.max(w);
    }
    heaviest
}

fn next_combination(c: &mut [usize], n: usize) -> bool {
    let k = c.len();
    for i in (0..k).rev() {
        if c[i] < n - k + i {
            c[i] += 1;
            for j in i + 1..k {
                c[j] = c[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

/// Union of the tree paths between every pair of terminals, sorted.
pub fn steiner_subtree_oracle(t: &SpanningTree, terminals: &[VertexId]) -> Vec<VertexId> {
    let mut member = vec![false; t.n()];
    for &a in terminals {
        member[a] = true;
        for &b in terminals {
            for v in t.path(a, b) {
                member[v] = true;
            }
        }
    }
    (0..t.n()).filter(|&v| member[v]).collect()
}

/// Nearest target of every vertex by tree distance, ties to the lower id,
/// found with one BFS per vertex.
pub fn nearest_in_set_oracle(t: &SpanningTree, targets: &[VertexId]) -> Vec<VertexId> {
    let n = t.n();
    let mut adj = vec![Vec::new(); n];
    for (u, v) in t.edges() {
        adj[u].push(v);
        adj[v].push(u);
    }
    let mut is_target = vec![false; n];
    for &v in targets {
        is_target[v] = true;
    }
    let mut dist = vec![usize::MAX; n];
    let mut out = Vec::with_capacity(n);
    for s in 0..n {
        dist.iter_mut().for_each(|d| *d = usize::MAX);
        let mut queue = VecDeque::from([s]);
        dist[s] = 0;
        let mut found: Option<(usize, VertexId)> = None;
        while let Some(v) = queue.pop_front() {
            if found.is_some_and(|(d, _)| dist[v] > d) {
                break;
            }
            if is_target[v] && found.map_or(true, |(d, b)| dist[v] < d || v < b) {
                found = Some((dist[v], v));
            }
            for &w in &adj[v] {
                if dist[w] == usize::MAX {
                    dist[w] = dist[v] + 1;
                    queue.push_back(w);
                }
            }
        }
        out.push(found.map(|(_, v)| v).unwrap_or(usize::MAX));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{default_beta, verify_separator};

    fn cycle(n: usize) -> Graph {
        let e: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::unit(n, &e).unwrap()
    }

    #[test]
    fn c6_needs_two() {
        let r = min_balanced_separator(&cycle(6), default_beta(), DEFAULT_MAX_SIZE).unwrap();
        assert_eq!(r.min_size, Some(2));
        assert_eq!(r.witness, vec![0, 3]);
        assert!(verify_separator(&cycle(6), &r.witness, default_beta()).passed);
    }

    #[test]
    fn k4_needs_two() {
        let k4 = Graph::unit(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        let r = min_balanced_separator(&k4, default_beta(), DEFAULT_MAX_SIZE).unwrap();
        assert_eq!(r.min_size, Some(2));
    }

    #[test]
    fn grid_needs_two() {
        let mut e = Vec::new();
        for i in 0..3 {
            for j in 0..3 {
                let v = i * 3 + j;
                if j < 2 {
                    e.push((v, v + 1));
                }
                if i < 2 {
                    e.push((v, v + 3));
                }
            }
        }
        let g = Graph::unit(9, &e).unwrap();
        let r = min_balanced_separator(&g, default_beta(), DEFAULT_MAX_SIZE).unwrap();
        // Cutting off a corner leaves six of nine: exactly two thirds.
        assert_eq!(r.min_size, Some(2));
        assert_eq!(r.witness, vec![1, 3]);
        assert!(verify_separator(&g, &[1, 3], default_beta()).passed);
        for v in 0..9 {
            assert!(!verify_separator(&g, &[v], default_beta()).passed);
        }
    }

    #[test]
    fn too_large_is_refused() {
        let g = cycle(21);
        assert!(matches!(
            min_balanced_separator(&g, default_beta(), 2),
            Err(OracleError::TooLarge { n: 21, .. })
        ));
    }

    #[test]
    fn infeasible_within_cap() {
        let r = min_balanced_separator(&cycle(12), default_beta(), 1).unwrap();
        assert!(!r.feasible);
        assert_eq!(r.min_size, None);
    }

    #[test]
    fn steiner_and_nearest_examples() {
        let t = SpanningTree::from_parents(0, vec![0, 0, 1, 2, 3]).unwrap();
        assert_eq!(steiner_subtree_oracle(&t, &[1, 3]), vec![1, 2, 3]);
        assert_eq!(steiner_subtree_oracle(&t, &[4]), vec![4]);
        assert_eq!(nearest_in_set_oracle(&t, &[2]), vec![2; 5]);
        assert_eq!(
            nearest_in_set_oracle(&t, &[0, 1, 2, 3, 4]),
            vec![0, 1, 2, 3, 4]
        );
        // Equidistant targets: the lower id wins.
        assert_eq!(nearest_in_set_oracle(&t, &[0, 4])[2], 0);
    }

    mod props {
        use super::*;
        use crate::gen::{near_tree_planar, GenSpec, WeightMode};
        use crate::pipeline::separate_default;
        use proptest::prelude::*;

        proptest! {
            #![proptest_config(ProptestConfig::with_cases(96))]

            #[test]
            fn witness_is_minimum(n in 1usize..11, r in -1i64..5, seed in any::<u64>(), heavy in any::<bool>()) {
                let weight_mode = if heavy {
                    WeightMode::SingleHeavy(Beta::new(3, 4))
                } else {
                    WeightMode::UniformRandom { lo: 1, hi: 9 }
                };
                if let Ok(g) = near_tree_planar(&GenSpec { n, r, seed, weight_mode }) {
                    let o = min_balanced_separator(&g, default_beta(), n).unwrap();
                    prop_assert!(o.feasible);
                    let k = o.min_size.unwrap();
                    prop_assert_eq!(o.witness.len(), k);
                    prop_assert!(verify_separator(&g, &o.witness, default_beta()).passed);
                    let s = separate_default(&g).unwrap();
                    prop_assert!(s.vertices.len() >= k);
                    if k > 0 {
                        let smaller = min_balanced_separator(&g, default_beta(), k - 1).unwrap();
                        prop_assert!(!smaller.feasible);
                    }
                }
            }
        }
    }
}
